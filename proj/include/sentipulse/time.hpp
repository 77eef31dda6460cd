#pragma once

#include <chrono>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sentipulse {

/// All timestamps are stored internally as UTC instants; New York civil
/// time is a view computed on demand.
using Instant = std::chrono::sys_seconds;

/// New York wall-clock view of an instant. The instant is recoverable as
/// civil time minus utc_offset, so the mapping is a bijection on instants.
struct NyCivil {
    std::chrono::year_month_day date;
    std::chrono::seconds time_of_day;  // since local midnight
    std::chrono::seconds utc_offset;   // -5h (EST) or -4h (EDT)
    std::chrono::weekday day_of_week;

    Instant instant() const {
        return Instant{std::chrono::sys_days(date) + time_of_day - utc_offset};
    }
};

/// UTC offset of America/New_York at an instant, under the post-2007 US
/// rules: daylight saving from 02:00 EST on the second Sunday of March to
/// 02:00 EDT on the first Sunday of November.
std::chrono::seconds ny_utc_offset(Instant t);

/// New York civil time of an instant, DST-aware.
NyCivil to_market_time(Instant t);

/// Parses an ISO-8601 timestamp `YYYY-MM-DD[T ]HH:MM:SS` followed by `Z`
/// or an explicit `+HH:MM`/`-HH:MM` offset. A zoneless timestamp is an
/// error unless assume_utc is set.
Instant parse_timestamp(std::string_view text, bool assume_utc = false);

/// ISO-8601 with the New York offset, e.g. "2023-02-15T09:30:00-05:00".
std::string format_timestamp(Instant t);

/// "HH:MM" or "HH:MM:SS" as seconds since midnight.
std::chrono::seconds parse_time_of_day(std::string_view text);

/// "YYYY-MM-DD".
std::chrono::year_month_day parse_date(std::string_view text);
std::string format_date(std::chrono::year_month_day d);

/// Weekday/holiday/session-hour rules defining valid observation instants,
/// evaluated in New York civil time.
struct TradingCalendar {
    std::chrono::seconds session_start{};
    std::chrono::seconds session_end{};
    std::set<std::chrono::year_month_day> holidays;
    bool weekdays_only = true;

    bool contains(Instant t) const;
};

/// Keeps records that fall inside the calendar; order preserved.
/// time_of projects a record to its Instant.
template <class Rec, class TimeOf>
std::vector<Rec> apply_calendar(const std::vector<Rec>& records,
                                const TradingCalendar& cal, TimeOf&& time_of) {
    std::vector<Rec> kept;
    kept.reserve(records.size());
    for (const auto& rec : records) {
        if (cal.contains(time_of(rec))) {
            kept.push_back(rec);
        }
    }
    return kept;
}

}  // namespace sentipulse
