#include "sentipulse/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include "sentipulse/csv.hpp"
#include "sentipulse/time.hpp"

namespace sentipulse {

namespace {

using namespace std::chrono;
namespace fs = std::filesystem;

constexpr std::array<const char*, 10> kCompanies = {
    "Alphagen", "Bluecrest", "Corventa", "Dorlin",   "Everlab",
    "Fornaxo",  "Genovia",   "Helixia",  "Ionwarex", "Juvenex"};
constexpr std::array<const char*, 10> kCeos = {
    "AvaArcher",  "BenBishop",  "CaraChen",  "DrewDalton", "EllaEvans",
    "FinnFarrell", "GiaGomez",  "HughHale",  "IslaIngram", "JackJoyce"};

struct WordEntry {
    const char* word;
    double valence;
};

constexpr std::array<WordEntry, 24> kSentimentWords = {{
    {"good", 1.9},      {"great", 3.1},    {"love", 3.2},
    {"happy", 2.7},     {"strong", 2.3},   {"promising", 2.2},
    {"breakthrough", 2.9}, {"win", 2.8},   {"hope", 1.9},
    {"safe", 1.8},      {"effective", 2.1}, {"innovative", 2.4},
    {"bad", -2.5},      {"terrible", -2.1}, {"hate", -2.7},
    {"sad", -2.1},      {"weak", -1.9},    {"risky", -2.0},
    {"failure", -2.9},  {"doubt", -1.5},   {"scandal", -2.8},
    {"lawsuit", -2.3},  {"delay", -1.6},   {"concern", -1.4},
}};

constexpr std::array<const char*, 16> kFillerWords = {
    "the",    "a",       "of",     "about",   "today", "market",
    "shares", "trial",   "report", "update",  "news",  "investors",
    "phase",  "results", "data",   "earnings"};

// Deterministic uniform/gaussian draws on top of mt19937_64 so output does
// not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {  // Box-Muller
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 1e-300) {
            u1 = uniform();
        }
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586;
        spare_ = r * std::sin(two_pi * u2);
        has_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    std::uint64_t integer(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::vector<year_month_day> weekdays_between(year_month_day start,
                                             year_month_day end) {
    std::vector<year_month_day> out;
    for (sys_days d{start}; d <= sys_days{end}; d += days{1}) {
        const weekday wd{d};
        if (wd != Saturday && wd != Sunday) {
            out.push_back(year_month_day{d});
        }
    }
    return out;
}

Instant ny_instant(year_month_day date, seconds time_of_day) {
    // resolve the NY wall clock to UTC via the date's noon offset
    const Instant approx{sys_days{date} + hours{17}};
    return Instant{sys_days{date} + time_of_day - ny_utc_offset(approx)};
}

std::string compose_text(Rng& rng, double mood) {
    std::string text;
    const int n_words = 3 + static_cast<int>(rng.integer(6));
    bool negated = false;
    for (int w = 0; w < n_words; ++w) {
        if (!text.empty()) {
            text += ' ';
        }
        const double roll = rng.uniform();
        if (roll < 0.45) {
            // sentiment word biased by the entity's latent mood
            const bool positive = rng.uniform() < (1.0 + mood) / 2.0;
            std::size_t at = rng.integer(12);
            text += kSentimentWords[positive ? at : 12 + at].word;
        } else if (roll < 0.5 && !negated) {
            text += "not";
            negated = true;
        } else {
            text += kFillerWords[rng.integer(kFillerWords.size())];
        }
    }
    if (rng.uniform() < 0.15) {
        text += "!";
    }
    if (rng.uniform() < 0.08) {
        text += ", really";  // forces RFC 4180 quoting downstream
    }
    return text;
}

void write_tweet_file(const fs::path& path, const std::string& label,
                      const std::vector<year_month_day>& dates, Rng& rng) {
    std::ofstream out(path, std::ios::binary);
    write_csv_row(out, std::vector<std::string>{"id", "start", "end", "text"});
    double mood = 0.0;
    std::uint64_t counter = 0;
    for (const auto& date : dates) {
        for (int bucket = 0; bucket < 7; ++bucket) {
            // collection buckets 08:30..14:30, one trading hour each
            const seconds bucket_start = hours{8} + minutes{30} + hours{bucket};
            mood = 0.85 * mood + 0.3 * rng.gaussian();
            mood = std::clamp(mood, -0.95, 0.95);
            const int n_tweets = 1 + static_cast<int>(rng.integer(4));
            for (int t = 0; t < n_tweets; ++t) {
                const seconds offset{static_cast<long>(rng.integer(3600))};
                const Instant start = ny_instant(date, bucket_start) + offset;
                write_csv_row(
                    out, std::vector<std::string>{
                             label + "-" + std::to_string(++counter),
                             format_timestamp(start),
                             format_timestamp(start + seconds{60}),
                             compose_text(rng, mood)});
            }
        }
    }
    // a Saturday tweet the calendar filter must drop
    const Instant weekend =
        ny_instant(year_month_day{year{2023}, month{2}, day{4}}, hours{10});
    write_csv_row(out, std::vector<std::string>{
                           label + "-weekend", format_timestamp(weekend),
                           format_timestamp(weekend + seconds{60}),
                           "weekend chatter"});
}

void write_stock_file(const fs::path& path, const std::string& company,
                      const std::vector<year_month_day>& dates, Rng& rng) {
    std::ofstream out(path, std::ios::binary);
    write_csv_row(out, std::vector<std::string>{"timestamp", "open", "high",
                                                "low", "close", "adj_close",
                                                "volume"});
    double log_price = std::log(40.0 + 30.0 * rng.uniform());
    bool first_day = true;
    for (const auto& date : dates) {
        for (int hour = 0; hour < 7; ++hour) {
            const seconds bar_time = hours{9} + minutes{30} + hours{hour};
            log_price += 0.0002 + 0.004 * rng.gaussian();
            const double open = std::exp(log_price);
            const double close = open * std::exp(0.002 * rng.gaussian());
            const double hi =
                std::max(open, close) * (1.0 + 0.001 * rng.uniform());
            const double lo =
                std::min(open, close) * (1.0 - 0.001 * rng.uniform());
            write_csv_row(
                out,
                std::vector<std::string>{
                    format_timestamp(ny_instant(date, bar_time)),
                    format_number(open), format_number(hi), format_number(lo),
                    format_number(close), format_number(close * 0.995),
                    std::to_string(10000 + rng.integer(50000))});
        }
        if (first_day) {
            // off-session bar, dropped by the price calendar
            const double v = std::exp(log_price);
            write_csv_row(out,
                          std::vector<std::string>{
                              format_timestamp(ny_instant(date, hours{17})),
                              format_number(v), format_number(v * 1.001),
                              format_number(v * 0.999), format_number(v),
                              format_number(v * 0.995), "1234"});
            first_day = false;
        }
    }
}

void write_lexicon(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    out << "# synthetic valence lexicon\n";
    for (const auto& [word, valence] : kSentimentWords) {
        out << word << '\t' << format_number(valence) << '\n';
    }
}

void write_config(const fs::path& path, int n_companies) {
    std::ofstream out(path, std::ios::binary);
    out << "# synthetic pipeline configuration\n";
    out << "companies = ";
    for (int i = 0; i < n_companies; ++i) {
        out << (i ? ", " : "") << kCompanies[static_cast<std::size_t>(i)];
    }
    out << "\nceos = ";
    for (int i = 0; i < n_companies; ++i) {
        out << (i ? ", " : "") << kCeos[static_cast<std::size_t>(i)];
    }
    out << "\nnews = COVID, Vaccine\n";
    out << "tweet_session = 08:30-15:30\n";
    out << "price_session = 09:30-15:30\n";
    out << "holidays = 2023-02-20\n";
    out << "lexicon = lexicon.tsv\n";
    out << "train_start = 2023-02-01\n";
    out << "train_end = 2023-03-07\n";
    out << "test_start = 2023-03-08\n";
    out << "test_end = 2023-03-19\n";
    out << "excluded_dates = 2023-02-20\n";
}

}  // namespace

void write_synthetic_dataset(const std::string& out_dir, const SynthSpec& spec) {
    if (spec.n_companies < 1 ||
        spec.n_companies > static_cast<int>(kCompanies.size())) {
        throw std::invalid_argument("synthetic dataset supports 1..10 companies");
    }
    const fs::path root(out_dir);
    fs::create_directories(root / "tweets");
    fs::create_directories(root / "stocks");

    const auto dates = weekdays_between(spec.start, spec.end);
    write_lexicon(root / "lexicon.tsv");
    write_config(root / "config.conf", spec.n_companies);

    // one independent stream per file keeps outputs stable if the label
    // set is ever reduced
    std::uint64_t file_index = 0;
    const auto file_rng = [&](const std::string&) {
        return Rng(spec.seed * 1000003ULL + ++file_index);
    };

    std::vector<std::string> tweet_labels;
    for (int i = 0; i < spec.n_companies; ++i) {
        tweet_labels.emplace_back(kCompanies[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < spec.n_companies; ++i) {
        tweet_labels.emplace_back(kCeos[static_cast<std::size_t>(i)]);
    }
    tweet_labels.emplace_back("COVID");
    tweet_labels.emplace_back("Vaccine");

    for (const auto& label : tweet_labels) {
        Rng rng = file_rng(label);
        write_tweet_file(root / "tweets" / (label + ".csv"), label, dates, rng);
    }
    for (int i = 0; i < spec.n_companies; ++i) {
        const std::string company = kCompanies[static_cast<std::size_t>(i)];
        Rng rng = file_rng(company);
        write_stock_file(root / "stocks" / (company + ".csv"), company, dates,
                         rng);
    }
}

}  // namespace sentipulse
