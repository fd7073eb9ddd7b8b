#ifndef QRPS_ERRORS_HPP_
#define QRPS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qrps {

/// Malformed input text (QDIMACS, symmetry sidecar, or proof trace).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

}  // namespace qrps

#endif  // QRPS_ERRORS_HPP_
