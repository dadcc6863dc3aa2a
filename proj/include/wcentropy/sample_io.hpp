#pragma once

#include <cstddef>
#include <filesystem>
#include <string_view>
#include <vector>

namespace wcentropy {

/// Observations in file order plus the number of values on each non-empty
/// line (needed to read a grid column by column).
struct SampleFile {
  std::vector<double> values;
  std::vector<std::size_t> row_lengths;
};

/// Comma- and/or whitespace-separated decimals; `#` starts a comment that
/// runs to the end of the line. Throws ParseError (with line and column) on a
/// malformed token, a negative value, or a non-finite value.
SampleFile parse_sample_text(std::string_view text);

/// Reads and parses a UTF-8 file. Throws ParseError if it cannot be opened.
SampleFile parse_sample_file(const std::filesystem::path& path);

}  // namespace wcentropy
