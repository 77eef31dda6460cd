#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sentipulse {

/// Streaming RFC 4180 reader. Quoted fields may contain the delimiter,
/// doubled quotes and embedded newlines. CRLF line endings are accepted.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(&in) {}

    /// Next record, or nullopt at end of input.
    std::optional<std::vector<std::string>> next_row();

    /// 1-based line number where the most recent row started.
    std::size_t row_line() const { return row_line_; }

private:
    std::istream* in_;
    std::size_t line_ = 1;
    std::size_t row_line_ = 0;
};

/// Quotes a field if it contains a delimiter, quote or newline.
std::string csv_escape(std::string_view field);

/// Writes one record terminated by '\n'.
void write_csv_row(std::ostream& out, std::span<const std::string> fields);

/// Fixed formatting used by every store file, so repeated runs are
/// byte-identical. 12 significant digits round-trip our values well
/// within downstream tolerances.
std::string format_number(double v);

}  // namespace sentipulse
