#include <doctest.h>

#include <random>
#include <sstream>

#include "sentipulse/csv.hpp"

using namespace sentipulse;

TEST_CASE("csv reading") {
    SUBCASE("quoted fields with delimiters, quotes and newlines") {
        std::istringstream in(
            "a,\"b,c\",\"say \"\"hi\"\"\",\"two\nlines\"\r\n"
            "1,2,3,4\n");
        CsvReader reader(in);
        const auto row1 = reader.next_row();
        REQUIRE(row1.has_value());
        CHECK(*row1 == std::vector<std::string>{"a", "b,c", "say \"hi\"",
                                                "two\nlines"});
        const auto row2 = reader.next_row();
        REQUIRE(row2.has_value());
        CHECK(row2->size() == 4);
        CHECK(reader.row_line() == 3);  // quoted newline counted
        CHECK_FALSE(reader.next_row().has_value());
    }
    SUBCASE("missing trailing newline") {
        std::istringstream in("x,y");
        CsvReader reader(in);
        CHECK(*reader.next_row() == std::vector<std::string>{"x", "y"});
        CHECK_FALSE(reader.next_row().has_value());
    }
}

TEST_CASE("csv round-trip on random fields") {
    std::mt19937 rng(4242);
    const std::string alphabet = "ab,\"\n\r x;\t";
    std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> field_len(0, 12);
    std::uniform_int_distribution<int> n_fields(1, 6);

    for (int round = 0; round < 300; ++round) {
        std::vector<std::vector<std::string>> rows;
        std::ostringstream out;
        for (int r = 0; r < 5; ++r) {
            std::vector<std::string> row;
            const int nf = n_fields(rng);
            for (int f = 0; f < nf; ++f) {
                std::string field;
                const int len = field_len(rng);
                for (int i = 0; i < len; ++i) {
                    field.push_back(alphabet[ch(rng)]);
                }
                row.push_back(std::move(field));
            }
            write_csv_row(out, row);
            rows.push_back(std::move(row));
        }
        std::istringstream in(out.str());
        CsvReader reader(in);
        for (const auto& expected : rows) {
            const auto got = reader.next_row();
            REQUIRE(got.has_value());
            CHECK(*got == expected);
        }
        CHECK_FALSE(reader.next_row().has_value());
    }
}
