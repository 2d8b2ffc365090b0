#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "relcube/graph.hpp"

namespace relcube {

enum class LaplacianKind { combinatorial, normalized };

// Nondecreasing eigenvalues of the chosen Laplacian. Spectra are diagnostics;
// nothing exact is derived from them.
struct Spectrum {
  LaplacianKind kind;
  std::vector<double> eigenvalues;
};

inline constexpr double kSpectrumZeroTol = 1e-9;

// Combinatorial kind: L = D - A. Normalized kind: L = I - D^{-1/2} A D^{-1/2},
// with a zero row/column for isolated vertices.
inline Spectrum laplacian_spectrum(const Graph& g, LaplacianKind kind) {
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("laplacian_spectrum: need n >= 2");
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  if (kind == LaplacianKind::combinatorial) {
    for (int v = 0; v < n; ++v) lap(v, v) = g.degree(v);
    for (const auto& [u, v] : g.edges()) {
      lap(u, v) = -1.0;
      lap(v, u) = -1.0;
    }
  } else {
    for (int v = 0; v < n; ++v) lap(v, v) = g.degree(v) > 0 ? 1.0 : 0.0;
    for (const auto& [u, v] : g.edges()) {
      double w = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
      lap(u, v) = w;
      lap(v, u) = w;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("laplacian_spectrum: eigenvalue iteration failed");
  Spectrum out{kind, std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    double lambda = solver.eigenvalues()(i);
    if (!std::isfinite(lambda))
      throw std::runtime_error("laplacian_spectrum: non-finite eigenvalue");
    out.eigenvalues[i] = lambda;
  }
  return out;
}

// Second smallest eigenvalue of D - A; positive exactly when g is connected.
inline double algebraic_connectivity(const Graph& g) {
  return laplacian_spectrum(g, LaplacianKind::combinatorial).eigenvalues[1];
}

}  // namespace relcube
