#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace relcube {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when a request would exceed a configured enumeration or size cap.
// The message names the cap so callers can raise it deliberately.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relcube
