#include "sentipulse/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "sentipulse/csv.hpp"

namespace sentipulse {

namespace {

double parse_price(const std::string& field, const char* name) {
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() ||
        !std::isfinite(v)) {
        throw std::invalid_argument(std::string("bad ") + name + " '" + field +
                                    "'");
    }
    return v;
}

long long parse_volume(const std::string& field) {
    long long v = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument("bad volume '" + field + "'");
    }
    return v;
}

void expect_header(const std::vector<std::string>& row,
                   std::span<const char* const> expected) {
    if (row.size() != expected.size()) {
        throw RowError(1, "unexpected header column count");
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (row[i] != expected[i]) {
            throw RowError(1, "expected header column '" +
                                  std::string(expected[i]) + "', got '" +
                                  row[i] + "'");
        }
    }
}

// Runs body for each data row, applying the skip/abort policy.
template <class Body>
void for_each_row(CsvReader& reader, RowErrorPolicy policy,
                  std::vector<std::string>* skipped, Body&& body) {
    while (auto row = reader.next_row()) {
        if (row->size() == 1 && (*row)[0].empty()) {
            continue;  // blank line
        }
        try {
            body(*row, reader.row_line());
        } catch (const std::invalid_argument& e) {
            if (policy == RowErrorPolicy::Abort) {
                throw RowError(reader.row_line(), e.what());
            }
            if (skipped) {
                skipped->push_back(RowError(reader.row_line(), e.what()).what());
            }
        }
    }
}

}  // namespace

std::vector<TweetRecord> parse_tweets(std::istream& in, const std::string& query,
                                      RowErrorPolicy policy,
                                      std::vector<std::string>* skipped) {
    static constexpr const char* kHeader[] = {"id", "start", "end", "text"};
    CsvReader reader(in);
    const auto header = reader.next_row();
    if (!header) {
        return {};
    }
    expect_header(*header, kHeader);

    std::vector<TweetRecord> tweets;
    for_each_row(reader, policy, skipped,
                 [&](const std::vector<std::string>& row, std::size_t) {
                     if (row.size() != 4) {
                         throw std::invalid_argument("expected 4 columns, got " +
                                                     std::to_string(row.size()));
                     }
                     TweetRecord rec;
                     rec.tweet_id = row[0];
                     rec.window_start = parse_timestamp(row[1]);
                     rec.window_end = parse_timestamp(row[2]);
                     rec.text = row[3];
                     rec.query = query;
                     if (rec.window_end < rec.window_start) {
                         throw std::invalid_argument(
                             "window end precedes window start");
                     }
                     tweets.push_back(std::move(rec));
                 });
    return tweets;
}

std::vector<StockBar> parse_stock_bars(std::istream& in,
                                       const std::string& company,
                                       RowErrorPolicy policy,
                                       std::vector<std::string>* skipped) {
    static constexpr const char* kHeader[] = {
        "timestamp", "open", "high", "low", "close", "adj_close", "volume"};
    CsvReader reader(in);
    const auto header = reader.next_row();
    if (!header) {
        return {};
    }
    expect_header(*header, kHeader);

    std::vector<std::pair<StockBar, std::size_t>> rows;  // bar + source line
    for_each_row(reader, policy, skipped,
                 [&](const std::vector<std::string>& row, std::size_t line) {
                     if (row.size() != 7) {
                         throw std::invalid_argument("expected 7 columns, got " +
                                                     std::to_string(row.size()));
                     }
                     StockBar bar;
                     bar.company = company;
                     bar.timestamp = parse_timestamp(row[0]);
                     bar.open = parse_price(row[1], "open");
                     bar.high = parse_price(row[2], "high");
                     bar.low = parse_price(row[3], "low");
                     bar.close = parse_price(row[4], "close");
                     bar.adj_close = parse_price(row[5], "adj_close");
                     bar.volume = parse_volume(row[6]);
                     if (bar.low <= 0.0) {
                         throw std::invalid_argument("prices must be positive");
                     }
                     if (bar.volume < 0) {
                         throw std::invalid_argument("volume must be non-negative");
                     }
                     const double body_lo = std::min(bar.open, bar.close);
                     const double body_hi = std::max(bar.open, bar.close);
                     if (!(bar.low <= body_lo && body_hi <= bar.high)) {
                         throw std::invalid_argument(
                             "OHLC invariant violated (low <= open,close <= high)");
                     }
                     rows.emplace_back(std::move(bar), line);
                 });

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) {
                         return a.first.timestamp < b.first.timestamp;
                     });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].first.timestamp == rows[i - 1].first.timestamp) {
            throw RowError(rows[i].second,
                           "duplicate timestamp " +
                               format_timestamp(rows[i].first.timestamp));
        }
    }

    std::vector<StockBar> bars;
    bars.reserve(rows.size());
    for (auto& [bar, line] : rows) {
        bars.push_back(std::move(bar));
    }
    return bars;
}

void write_tweets(std::ostream& out, std::span<const TweetRecord> tweets) {
    write_csv_row(out, std::vector<std::string>{"id", "start", "end", "text"});
    for (const auto& t : tweets) {
        write_csv_row(out, std::vector<std::string>{
                               t.tweet_id, format_timestamp(t.window_start),
                               format_timestamp(t.window_end), t.text});
    }
}

void write_stock_bars(std::ostream& out, std::span<const StockBar> bars) {
    write_csv_row(out, std::vector<std::string>{"timestamp", "open", "high",
                                                "low", "close", "adj_close",
                                                "volume"});
    for (const auto& b : bars) {
        write_csv_row(out, std::vector<std::string>{
                               format_timestamp(b.timestamp),
                               format_number(b.open), format_number(b.high),
                               format_number(b.low), format_number(b.close),
                               format_number(b.adj_close),
                               std::to_string(b.volume)});
    }
}

}  // namespace sentipulse
