#include "wcentropy/sample_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "wcentropy/error.hpp"

namespace wcentropy {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

SampleFile parse_sample_text(std::string_view text) {
  SampleFile out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t count = 0;
    std::size_t i = 0;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) i = 3;  // UTF-8 BOM
    bool expect_value = true;  // a comma was just seen (or start of line)
    bool after_comma = false;
    while (i < line.size()) {
      const char c = line[i];
      if (is_blank(c)) {
        ++i;
        continue;
      }
      if (c == ',') {
        if (expect_value) throw ParseError("empty field", line_no, i + 1);
        expect_value = true;
        after_comma = true;
        ++i;
        continue;
      }
      std::size_t end = i;
      while (end < line.size() && !is_blank(line[end]) && line[end] != ',') ++end;
      const std::string_view token = line.substr(i, end - i);
      double value = 0.0;
      const char* first = token.data();
      if (*first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || first == token.data() + token.size()) {
        throw ParseError("cannot parse '" + std::string(token) + "' as a number", line_no, i + 1);
      }
      if (!std::isfinite(value)) throw ParseError("non-finite value '" + std::string(token) + "'", line_no, i + 1);
      if (value < 0.0) throw ParseError("negative value '" + std::string(token) + "'", line_no, i + 1);
      out.values.push_back(value);
      ++count;
      expect_value = false;
      after_comma = false;
      i = end;
    }
    if (after_comma) throw ParseError("trailing comma", line_no, line.size());
    if (count) out.row_lengths.push_back(count);
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

SampleFile parse_sample_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sample_text(buf.str());
}

}  // namespace wcentropy
