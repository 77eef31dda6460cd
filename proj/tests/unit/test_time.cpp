#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sentipulse/time.hpp"

using namespace sentipulse;
using namespace std::chrono;

TEST_CASE("timestamp parsing and zone handling") {
    SUBCASE("UTC suffix") {
        const Instant t = parse_timestamp("2023-02-15T14:30:00Z");
        const NyCivil c = to_market_time(t);
        CHECK(c.date == year_month_day{year{2023}, month{2}, day{15}});
        CHECK(c.time_of_day == 9h + 30min);
        CHECK(c.utc_offset == -5h);  // EST
    }
    SUBCASE("EDT after the March switch") {
        const NyCivil c = to_market_time(parse_timestamp("2023-03-15T13:30:00Z"));
        CHECK(c.date == year_month_day{year{2023}, month{3}, day{15}});
        CHECK(c.time_of_day == 9h + 30min);
        CHECK(c.utc_offset == -4h);
    }
    SUBCASE("explicit offset equals the UTC spelling") {
        CHECK(parse_timestamp("2023-02-15T09:30:00-05:00") ==
              parse_timestamp("2023-02-15T14:30:00Z"));
    }
    SUBCASE("zoneless input") {
        CHECK_THROWS_AS(parse_timestamp("2023-02-15T14:30:00"),
                        std::invalid_argument);
        CHECK(parse_timestamp("2023-02-15T14:30:00", /*assume_utc=*/true) ==
              parse_timestamp("2023-02-15T14:30:00Z"));
    }
    SUBCASE("garbage rejected") {
        CHECK_THROWS_AS(parse_timestamp("2023-13-40T99:99:99Z"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_timestamp("not a date"), std::invalid_argument);
        CHECK_THROWS_AS(parse_timestamp("2023-02-15T14:30:00+25:00"),
                        std::invalid_argument);
    }
    SUBCASE("DST transition instants 2023") {
        CHECK(ny_utc_offset(parse_timestamp("2023-03-12T06:59:59Z")) == -5h);
        CHECK(ny_utc_offset(parse_timestamp("2023-03-12T07:00:00Z")) == -4h);
        CHECK(ny_utc_offset(parse_timestamp("2023-11-05T05:59:59Z")) == -4h);
        CHECK(ny_utc_offset(parse_timestamp("2023-11-05T06:00:00Z")) == -5h);
    }
}

TEST_CASE("market time is a bijection on instants") {
    std::mt19937_64 rng(123);
    // two years around the study window, second resolution
    std::uniform_int_distribution<long> dist(1640995200L, 1704067200L);
    for (int i = 0; i < 5000; ++i) {
        const Instant t{seconds{dist(rng)}};
        const NyCivil c = to_market_time(t);
        CHECK(c.instant() == t);
    }
    // formatted form round-trips too
    for (int i = 0; i < 500; ++i) {
        const Instant t{seconds{dist(rng)}};
        CHECK(parse_timestamp(format_timestamp(t)) == t);
    }
}

TEST_CASE("trading calendar") {
    TradingCalendar cal;
    cal.session_start = 9h + 30min;
    cal.session_end = 15h + 30min;
    cal.holidays.insert(year_month_day{year{2023}, month{2}, day{20}});

    const auto in_ny = [](const char* text) { return parse_timestamp(text); };

    SUBCASE("weekend dropped, session boundaries inclusive") {
        CHECK_FALSE(cal.contains(in_ny("2023-02-18T10:30:00-05:00")));  // Sat
        CHECK(cal.contains(in_ny("2023-02-15T10:30:00-05:00")));
        CHECK(cal.contains(in_ny("2023-02-15T09:30:00-05:00")));
        CHECK(cal.contains(in_ny("2023-02-15T15:30:00-05:00")));
        CHECK_FALSE(cal.contains(in_ny("2023-02-15T09:29:59-05:00")));
        CHECK_FALSE(cal.contains(in_ny("2023-02-15T15:30:01-05:00")));
    }
    SUBCASE("holiday dropped") {
        CHECK_FALSE(cal.contains(in_ny("2023-02-20T10:30:00-05:00")));
    }
    SUBCASE("filter keeps order and is idempotent") {
        std::vector<Instant> records{
            in_ny("2023-02-15T10:30:00-05:00"),
            in_ny("2023-02-18T10:30:00-05:00"),  // Saturday
            in_ny("2023-02-20T10:30:00-05:00"),  // holiday
            in_ny("2023-02-21T12:00:00-05:00"),
            in_ny("2023-02-21T19:00:00-05:00"),  // off session
        };
        const auto id = [](const Instant& t) { return t; };
        const auto once = apply_calendar(records, cal, id);
        REQUIRE(once.size() == 2);
        CHECK(once[0] == records[0]);
        CHECK(once[1] == records[3]);
        CHECK(apply_calendar(once, cal, id) == once);
        for (const auto& t : once) {
            CHECK(cal.contains(t));  // row-by-row postcondition
        }
    }
}
