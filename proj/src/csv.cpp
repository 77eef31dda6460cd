#include "sentipulse/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

namespace sentipulse {

std::optional<std::vector<std::string>> CsvReader::next_row() {
    if (!in_ || in_->peek() == std::char_traits<char>::eof()) {
        return std::nullopt;
    }
    row_line_ = line_;

    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool row_done = false;

    while (!row_done) {
        const int ci = in_->get();
        if (ci == std::char_traits<char>::eof()) {
            // last record without trailing newline
            row_done = true;
            break;
        }
        const char c = static_cast<char>(ci);
        if (c == '\n') {
            ++line_;
        }
        if (quoted) {
            if (c == '"') {
                if (in_->peek() == '"') {
                    in_->get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                quoted = true;
                break;
            case ',':
                fields.push_back(std::move(field));
                field.clear();
                break;
            case '\r':
                if (in_->peek() == '\n') {
                    in_->get();
                    ++line_;
                }
                row_done = true;
                break;
            case '\n':
                row_done = true;
                break;
            default:
                field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_csv_row(std::ostream& out, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << csv_escape(fields[i]);
    }
    out << '\n';
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace sentipulse
