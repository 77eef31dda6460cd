#include "sentipulse/time.hpp"

#include <cstdio>
#include <stdexcept>

namespace sentipulse {

using namespace std::chrono;

namespace {

constexpr seconds kEst = -5h;
constexpr seconds kEdt = -4h;

// DST window for a given year, as UTC instants: 02:00 EST on the second
// Sunday of March is 07:00 UTC; 02:00 EDT on the first Sunday of November
// is 06:00 UTC.
std::pair<Instant, Instant> dst_window_utc(year y) {
    const sys_days start_day{year_month_weekday{y, March, Sunday[2]}};
    const sys_days end_day{year_month_weekday{y, November, Sunday[1]}};
    return {Instant{start_day + 7h}, Instant{end_day + 6h}};
}

[[noreturn]] void bad_timestamp(std::string_view text, const char* why) {
    throw std::invalid_argument("bad timestamp '" + std::string(text) +
                                "': " + why);
}

}  // namespace

seconds ny_utc_offset(Instant t) {
    // The transitions sit mid-year, so the UTC year identifies the window
    // even though NY can lag UTC by a few hours around New Year.
    const year_month_day utc_date{floor<days>(t)};
    const auto [dst_start, dst_end] = dst_window_utc(utc_date.year());
    return (t >= dst_start && t < dst_end) ? kEdt : kEst;
}

NyCivil to_market_time(Instant t) {
    const seconds offset = ny_utc_offset(t);
    const auto local = t.time_since_epoch() + offset;
    const days local_days = floor<days>(local);
    NyCivil civil;
    civil.date = year_month_day{sys_days{local_days}};
    civil.time_of_day = local - local_days;
    civil.utc_offset = offset;
    civil.day_of_week = weekday{sys_days{local_days}};
    return civil;
}

Instant parse_timestamp(std::string_view text, bool assume_utc) {
    int y = 0;
    unsigned mo = 0, da = 0, hh = 0, mi = 0, ss = 0;
    char sep = 0;
    int consumed = 0;
    const std::string s(text);
    if (std::sscanf(s.c_str(), "%4d-%2u-%2u%c%2u:%2u:%2u%n", &y, &mo, &da,
                    &sep, &hh, &mi, &ss, &consumed) != 7 ||
        (sep != 'T' && sep != ' ')) {
        bad_timestamp(text, "expected YYYY-MM-DDTHH:MM:SS");
    }
    const year_month_day ymd{year{y}, month{mo}, day{da}};
    if (!ymd.ok() || hh > 23 || mi > 59 || ss > 59) {
        bad_timestamp(text, "out-of-range field");
    }

    seconds offset{};
    const std::string_view rest = text.substr(static_cast<size_t>(consumed));
    if (rest == "Z" || rest == "+00:00" || rest == "-00:00") {
        offset = 0s;
    } else if (rest.empty()) {
        if (!assume_utc) {
            bad_timestamp(text, "missing zone offset");
        }
        offset = 0s;
    } else {
        unsigned oh = 0, om = 0;
        int n = 0;
        const std::string r(rest);
        if (std::sscanf(r.c_str(), "%*1[+-]%2u:%2u%n", &oh, &om, &n) != 2 ||
            n != static_cast<int>(rest.size()) || oh > 14 || om > 59) {
            bad_timestamp(text, "malformed zone offset");
        }
        offset = hours{oh} + minutes{om};
        if (rest[0] == '-') {
            offset = -offset;
        }
    }
    const auto local = sys_days{ymd} + hours{hh} + minutes{mi} + seconds{ss};
    return Instant{local - offset};
}

std::string format_timestamp(Instant t) {
    const NyCivil c = to_market_time(t);
    const int y = static_cast<int>(c.date.year());
    const unsigned mo = static_cast<unsigned>(c.date.month());
    const unsigned da = static_cast<unsigned>(c.date.day());
    const int tod = static_cast<int>(c.time_of_day.count());
    const int off = static_cast<int>(-c.utc_offset.count());  // NY offsets are negative
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d-%02d:%02d",
                  y, mo, da, tod / 3600, (tod / 60) % 60, tod % 60, off / 3600,
                  (off / 60) % 60);
    return buf;
}

seconds parse_time_of_day(std::string_view text) {
    unsigned hh = 0, mi = 0, ss = 0;
    int n = 0;
    const std::string s(text);
    const int got = std::sscanf(s.c_str(), "%2u:%2u:%2u%n", &hh, &mi, &ss, &n);
    if (got < 2) {
        throw std::invalid_argument("bad time of day '" + s + "'");
    }
    if (got == 2) {
        ss = 0;
        std::sscanf(s.c_str(), "%2u:%2u%n", &hh, &mi, &n);
    }
    if (n != static_cast<int>(text.size()) || hh > 23 || mi > 59 || ss > 59) {
        throw std::invalid_argument("bad time of day '" + s + "'");
    }
    return hours{hh} + minutes{mi} + seconds{ss};
}

year_month_day parse_date(std::string_view text) {
    int y = 0;
    unsigned mo = 0, da = 0;
    int n = 0;
    const std::string s(text);
    if (std::sscanf(s.c_str(), "%4d-%2u-%2u%n", &y, &mo, &da, &n) != 3 ||
        n != static_cast<int>(text.size())) {
        throw std::invalid_argument("bad date '" + s + "'");
    }
    const year_month_day ymd{year{y}, month{mo}, day{da}};
    if (!ymd.ok()) {
        throw std::invalid_argument("bad date '" + s + "'");
    }
    return ymd;
}

std::string format_date(year_month_day d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

bool TradingCalendar::contains(Instant t) const {
    const NyCivil c = to_market_time(t);
    if (weekdays_only &&
        (c.day_of_week == Saturday || c.day_of_week == Sunday)) {
        return false;
    }
    if (holidays.contains(c.date)) {
        return false;
    }
    return c.time_of_day >= session_start && c.time_of_day <= session_end;
}

}  // namespace sentipulse
