#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "sentipulse/time.hpp"

namespace sentipulse {

/// Pipeline settings loaded from the key/value config file. See
/// data/config/default.conf for the documented format.
struct PipelineConfig {
    std::vector<std::string> companies;  // ordered; report rows follow this
    std::vector<std::string> ceos;       // aligned with companies
    std::vector<std::string> news;       // e.g. COVID, Vaccine

    TradingCalendar tweet_session;  // collection window
    TradingCalendar price_session;  // bar window

    std::string lexicon;  // path to the lexicon TSV

    std::chrono::year_month_day train_start{};
    std::chrono::year_month_day train_end{};
    std::chrono::year_month_day test_start{};
    std::chrono::year_month_day test_end{};
    std::vector<std::chrono::year_month_day> excluded_dates;

    int arima_p_max = 5;
    int arima_d_max = 2;
    int arima_q_max = 5;
    int var_p_max = 10;
    std::chrono::seconds lag{3600};
    std::chrono::seconds bucket{3600};

    /// companies + ceos + news: every label a tweet file may carry.
    std::vector<std::string> query_labels() const;
    const std::string& ceo_of(const std::string& company) const;
};

/// The study defaults: session hours, the 2023-02-20 holiday, and the
/// Feb 1 - Mar 7 / Mar 8 - Mar 19 2023 split.
PipelineConfig default_config();

/// Parses `key = value` lines; '#' starts a comment; lists are
/// comma-separated. Unknown keys are an error.
PipelineConfig load_config(std::istream& in);
PipelineConfig load_config_file(const std::string& path);

}  // namespace sentipulse
