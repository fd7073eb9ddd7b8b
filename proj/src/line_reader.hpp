#ifndef QRPS_SRC_LINE_READER_HPP_
#define QRPS_SRC_LINE_READER_HPP_

#include <charconv>
#include <optional>
#include <string_view>
#include <vector>

namespace qrps::detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Whole-token integer, restricted to a range that survives the narrowing to
/// int32 everywhere (and keeps -value well defined).
inline std::optional<long long> parse_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  if (value < -2000000000LL || value > 2000000000LL) return std::nullopt;
  return value;
}

/// Yields non-comment, non-blank lines as token lists; empty vector at EOF.
struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  std::vector<std::string_view> next() {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (!line.empty() && line[0] == 'c') continue;
      auto toks = split_tokens(line);
      if (toks.empty()) continue;
      return toks;
    }
    return {};
  }
};

}  // namespace qrps::detail

#endif  // QRPS_SRC_LINE_READER_HPP_
