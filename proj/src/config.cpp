#include "sentipulse/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sentipulse {

using namespace std::chrono;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

// "HH:MM-HH:MM"
void parse_session(const std::string& value, TradingCalendar& cal) {
    const auto dash = value.find('-');
    if (dash == std::string::npos) {
        throw std::invalid_argument("bad session '" + value +
                                    "', expected HH:MM-HH:MM");
    }
    cal.session_start = parse_time_of_day(trim(value.substr(0, dash)));
    cal.session_end = parse_time_of_day(trim(value.substr(dash + 1)));
    if (cal.session_start >= cal.session_end) {
        throw std::invalid_argument("session start must precede end: " + value);
    }
}

}  // namespace

std::vector<std::string> PipelineConfig::query_labels() const {
    std::vector<std::string> labels = companies;
    labels.insert(labels.end(), ceos.begin(), ceos.end());
    labels.insert(labels.end(), news.begin(), news.end());
    return labels;
}

const std::string& PipelineConfig::ceo_of(const std::string& company) const {
    for (std::size_t i = 0; i < companies.size(); ++i) {
        if (companies[i] == company) {
            return ceos.at(i);
        }
    }
    throw std::out_of_range("unknown company '" + company + "'");
}

PipelineConfig default_config() {
    PipelineConfig cfg;
    cfg.companies = {"JohnsonJohnson", "EliLilly", "NovoNordisk", "AbbVie",
                     "Merck",          "Pfizer",   "Roche",       "AstraZeneca",
                     "Novartis",       "Moderna"};
    cfg.ceos = {"JoaquinDuato",   "DavidRicks",    "LarsJorgensen",
                "RichardGonzalez", "KennethFrazier", "AlbertBourla",
                "SeverinSchwan",  "PascalSoriot",  "VasNarasimhan",
                "StephaneBancel"};
    cfg.news = {"COVID", "Vaccine"};

    cfg.tweet_session.session_start = 8h + 30min;
    cfg.tweet_session.session_end = 15h + 30min;
    cfg.price_session.session_start = 9h + 30min;
    cfg.price_session.session_end = 15h + 30min;
    const year_month_day presidents_day{year{2023}, month{2}, day{20}};
    cfg.tweet_session.holidays.insert(presidents_day);
    cfg.price_session.holidays.insert(presidents_day);

    cfg.train_start = year_month_day{year{2023}, month{2}, day{1}};
    cfg.train_end = year_month_day{year{2023}, month{3}, day{7}};
    cfg.test_start = year_month_day{year{2023}, month{3}, day{8}};
    cfg.test_end = year_month_day{year{2023}, month{3}, day{19}};
    cfg.excluded_dates = {presidents_day};
    return cfg;
}

PipelineConfig load_config(std::istream& in) {
    PipelineConfig cfg = default_config();
    cfg.companies.clear();
    cfg.ceos.clear();
    cfg.news.clear();
    cfg.tweet_session.holidays.clear();
    cfg.price_session.holidays.clear();
    cfg.excluded_dates.clear();

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string text = trim(line);
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        try {
            if (key == "companies") {
                cfg.companies = split_list(value);
            } else if (key == "ceos") {
                cfg.ceos = split_list(value);
            } else if (key == "news") {
                cfg.news = split_list(value);
            } else if (key == "tweet_session") {
                parse_session(value, cfg.tweet_session);
            } else if (key == "price_session") {
                parse_session(value, cfg.price_session);
            } else if (key == "holidays") {
                for (const auto& d : split_list(value)) {
                    const auto date = parse_date(d);
                    cfg.tweet_session.holidays.insert(date);
                    cfg.price_session.holidays.insert(date);
                }
            } else if (key == "lexicon") {
                cfg.lexicon = value;
            } else if (key == "train_start") {
                cfg.train_start = parse_date(value);
            } else if (key == "train_end") {
                cfg.train_end = parse_date(value);
            } else if (key == "test_start") {
                cfg.test_start = parse_date(value);
            } else if (key == "test_end") {
                cfg.test_end = parse_date(value);
            } else if (key == "excluded_dates") {
                for (const auto& d : split_list(value)) {
                    cfg.excluded_dates.push_back(parse_date(d));
                }
            } else if (key == "arima_grid") {
                const auto parts = split_list(value);
                if (parts.size() != 3) {
                    throw std::invalid_argument("arima_grid needs p,d,q bounds");
                }
                cfg.arima_p_max = std::stoi(parts[0]);
                cfg.arima_d_max = std::stoi(parts[1]);
                cfg.arima_q_max = std::stoi(parts[2]);
            } else if (key == "var_p_max") {
                cfg.var_p_max = std::stoi(value);
            } else if (key == "lag_minutes") {
                cfg.lag = minutes{std::stoi(value)};
            } else if (key == "bucket_minutes") {
                cfg.bucket = minutes{std::stoi(value)};
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": " + e.what());
        }
    }
    if (cfg.companies.size() != cfg.ceos.size()) {
        throw std::invalid_argument(
            "config: companies and ceos lists must have the same length");
    }
    return cfg;
}

PipelineConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    PipelineConfig cfg = load_config(in);
    // a relative lexicon path is relative to the config file
    if (!cfg.lexicon.empty() &&
        !std::filesystem::path(cfg.lexicon).is_absolute()) {
        cfg.lexicon =
            (std::filesystem::path(path).parent_path() / cfg.lexicon).string();
    }
    return cfg;
}

}  // namespace sentipulse
