#ifndef QRPS_TESTS_TEST_UTIL_HPP_
#define QRPS_TESTS_TEST_UTIL_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qrps_test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string golden(const std::string& name) {
  return read_file(std::string(QRPS_GOLDEN_DIR) + "/" + name);
}

}  // namespace qrps_test

#endif  // QRPS_TESTS_TEST_UTIL_HPP_
