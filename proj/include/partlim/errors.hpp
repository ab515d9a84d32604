#pragma once

#include <stdexcept>
#include <string>

namespace partlim {

// Thrown when a computation refuses to proceed (resource cap exceeded,
// quadrature failed to converge, a table or model does not cover the
// requested range).  Distinct from std::invalid_argument, which callers
// get for malformed inputs; CLI maps the two to different exit codes.
class computation_error : public std::runtime_error {
 public:
  explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace partlim
