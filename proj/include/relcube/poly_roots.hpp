#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "relcube/common.hpp"

namespace relcube {

// Exact real-root isolation in (0,1) for polynomials with integer
// coefficients, built for reliability-polynomial differences
//   D(p) = sum_i d_i p^i (1-p)^{m-i}.
// Sign decisions use exact integer arithmetic throughout; only the reported
// root locations are rounded doubles (intervals narrowed below 1e-9).

// Expand sum d_i p^i (1-p)^{m-i} into power-basis coefficients:
// c_k = sum_{i<=k} d_i (-1)^{k-i} C(m-i, k-i).
inline std::vector<BigInt> bernstein_like_to_power(const std::vector<BigInt>& d) {
  int m = static_cast<int>(d.size()) - 1;
  if (m < 0) return {};
  std::vector<std::vector<BigInt>> choose(m + 1, std::vector<BigInt>(m + 1, 0));
  for (int a = 0; a <= m; ++a) {
    choose[a][0] = 1;
    for (int b = 1; b <= a; ++b)
      choose[a][b] = choose[a - 1][b - 1] + (b <= a - 1 ? choose[a - 1][b] : 0);
  }
  std::vector<BigInt> c(m + 1, 0);
  for (int i = 0; i <= m; ++i) {
    if (d[i] == 0) continue;
    for (int k = i; k <= m; ++k) {
      BigInt term = d[i] * choose[m - i][k - i];
      if ((k - i) % 2 == 0)
        c[k] += term;
      else
        c[k] -= term;
    }
  }
  return c;
}

inline int bigint_sign(const BigInt& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// Sign of sum c_j num^j den^(deg-j); equals sign of P(num/den) for den > 0.
inline int sign_power_at(const std::vector<BigInt>& c, const BigInt& num, const BigInt& den) {
  int deg = static_cast<int>(c.size()) - 1;
  if (deg < 0) return 0;
  BigInt acc = 0, np = 1;
  std::vector<BigInt> dp(deg + 1);
  dp[deg] = 1;
  for (int j = deg - 1; j >= 0; --j) dp[j] = dp[j + 1] * den;
  for (int j = 0; j <= deg; ++j) {
    acc += c[j] * np * dp[j];
    np *= num;
  }
  return bigint_sign(acc);
}

// Sign of sum d_i num^i (den-num)^(m-i): the same value evaluated without
// leaving the p^i (1-p)^{m-i} form. Second algebraic route, used to
// cross-check the power-basis conversion.
inline int sign_bernstein_at(const std::vector<BigInt>& d, const BigInt& num, const BigInt& den) {
  int m = static_cast<int>(d.size()) - 1;
  if (m < 0) return 0;
  BigInt q = den - num;
  BigInt acc = 0, np = 1;
  std::vector<BigInt> qp(m + 1);
  qp[m] = 1;
  for (int i = m - 1; i >= 0; --i) qp[i] = qp[i + 1] * q;
  for (int i = 0; i <= m; ++i) {
    acc += d[i] * np * qp[i];
    np *= num;
  }
  return bigint_sign(acc);
}

inline int sign_variations(const std::vector<BigInt>& c) {
  int variations = 0, last = 0;
  for (const BigInt& x : c) {
    int s = bigint_sign(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

struct RootScan {
  std::vector<double> crossings;  // odd-multiplicity roots: the sign flips
  std::vector<double> touches;    // even-multiplicity contact points
};

namespace detail {

// Taylor shift x -> x+1 in place.
inline void shift_by_one(std::vector<BigInt>& a) {
  int deg = static_cast<int>(a.size()) - 1;
  for (int i = 0; i < deg; ++i)
    for (int j = deg - 1; j >= i; --j) a[j] += a[j + 1];
}

// Descartes bound on the number of roots in the open interval (0,1):
// sign variations of (1+x)^deg P(1/(1+x)).
inline int variations_01(std::vector<BigInt> a) {
  std::reverse(a.begin(), a.end());
  shift_by_one(a);
  return sign_variations(a);
}

// Children of a node polynomial: left ~ 2^deg N(x/2) covers the lower half
// of the node interval, right ~ 2^deg N((x+1)/2) the upper half. The node
// midpoint is a root of N exactly when right[0] == 0; mid_multiplicity counts
// it, and right is returned with those factors stripped.
struct Split {
  std::vector<BigInt> left, right;
  int mid_multiplicity = 0;
};

inline Split split_node(const std::vector<BigInt>& node) {
  Split s;
  int deg = static_cast<int>(node.size()) - 1;
  s.left = node;
  for (int j = 0; j <= deg; ++j) s.left[j] <<= (deg - j);
  s.right = s.left;
  shift_by_one(s.right);
  while (!s.right.empty() && s.right[0] == 0) {
    s.right.erase(s.right.begin());
    ++s.mid_multiplicity;
  }
  return s;
}

// Narrows a node known to hold exactly one root (odd multiplicity) down to
// 1e-9 by following the half whose Descartes count stays positive. Interval
// is (lo_num / 2^k, (lo_num + 1) / 2^k).
inline double pin_single_root(std::vector<BigInt> node, BigInt lo_num, int k) {
  while (std::ldexp(1.0, -k) > 1e-9) {
    Split s = split_node(node);
    if (s.mid_multiplicity > 0) {
      // Landed exactly on the root (a dyadic rational).
      return static_cast<double>(lo_num * 2 + 1) / std::ldexp(1.0, k + 1);
    }
    // Subdivision never increases total variations, so with one root the
    // half containing it is the one whose count stays positive.
    if (variations_01(s.left) >= 1) {
      node = std::move(s.left);
      lo_num *= 2;
    } else {
      node = std::move(s.right);
      lo_num = lo_num * 2 + 1;
    }
    ++k;
  }
  return (static_cast<double>(lo_num) + 0.5) / std::ldexp(1.0, k);
}

inline void descend(const std::vector<BigInt>& node, const BigInt& lo_num, int k, int depth,
                    RootScan& out) {
  int v = variations_01(node);
  if (v == 0) return;
  if (v == 1) {
    out.crossings.push_back(pin_single_root(node, lo_num, k));
    return;
  }
  double width = std::ldexp(1.0, -k);
  if (depth > 80) {
    // A cluster of roots narrower than 2^-80. Classify by the node's own
    // endpoint values: node(0) is its constant term, node(1) its coefficient
    // sum; both are nonzero at this depth since midpoint roots get stripped.
    BigInt at_one = 0;
    for (const BigInt& c : node) at_one += c;
    double center = (static_cast<double>(lo_num) + 0.5) * width;
    if (bigint_sign(node[0]) != bigint_sign(at_one) && node[0] != 0 && at_one != 0)
      out.crossings.push_back(center);
    else
      out.touches.push_back(center);
    return;
  }
  Split s = split_node(node);
  if (s.mid_multiplicity > 0) {
    double mid = static_cast<double>(lo_num * 2 + 1) / std::ldexp(1.0, k + 1);
    if (s.mid_multiplicity % 2 == 1)
      out.crossings.push_back(mid);
    else
      out.touches.push_back(mid);
  }
  descend(s.left, lo_num * 2, k + 1, depth + 1, out);
  if (s.right.size() > 1) descend(s.right, lo_num * 2 + 1, k + 1, depth + 1, out);
}

}  // namespace detail

// Roots of the integer-coefficient polynomial (power basis, c[k] multiplies
// p^k) inside the open interval (0,1). Roots at the endpoints are deflated
// away and never reported.
inline RootScan isolate_roots_01(std::vector<BigInt> power) {
  RootScan out;
  while (!power.empty() && power.back() == 0) power.pop_back();
  while (!power.empty() && power[0] == 0) power.erase(power.begin());  // roots at p = 0
  // Deflate roots at p = 1 by synthetic division with (x - 1).
  for (;;) {
    if (power.size() <= 1) return out;
    BigInt at_one = 0;
    for (const BigInt& c : power) at_one += c;
    if (at_one != 0) break;
    int deg = static_cast<int>(power.size()) - 1;
    std::vector<BigInt> q(deg);
    q[deg - 1] = power[deg];
    for (int j = deg - 1; j >= 1; --j) q[j - 1] = power[j] + q[j];
    power = std::move(q);
    while (!power.empty() && power[0] == 0) power.erase(power.begin());
  }
  detail::descend(power, BigInt(0), 0, 0, out);
  std::sort(out.crossings.begin(), out.crossings.end());
  std::sort(out.touches.begin(), out.touches.end());
  return out;
}

}  // namespace relcube
