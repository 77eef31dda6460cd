#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sentipulse/time.hpp"

namespace sentipulse {

struct TweetRecord {
    std::string tweet_id;
    Instant window_start{};  // the tweet's effective timestamp
    Instant window_end{};
    std::string text;
    std::string query;  // entity label the tweet was collected for
};

struct StockBar {
    std::string company;
    Instant timestamp{};
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double adj_close = 0.0;
    long long volume = 0;
};

/// A row that violates the schema or an invariant; the message names the
/// 1-based line the row started on.
struct RowError : std::runtime_error {
    RowError(std::size_t line, const std::string& what)
        : std::runtime_error("row at line " + std::to_string(line) + ": " + what),
          line(line) {}
    std::size_t line;
};

enum class RowErrorPolicy { Abort, Skip };

/// Columns: id,start,end,text (CSV with header). Timestamps must carry an
/// explicit zone offset. With Skip, bad rows are collected into `skipped`
/// (when given) instead of aborting the parse.
std::vector<TweetRecord> parse_tweets(std::istream& in, const std::string& query,
                                      RowErrorPolicy policy = RowErrorPolicy::Abort,
                                      std::vector<std::string>* skipped = nullptr);

/// Columns: timestamp,open,high,low,close,adj_close,volume. Output is
/// sorted ascending by timestamp; a duplicate timestamp is an error
/// regardless of policy.
std::vector<StockBar> parse_stock_bars(std::istream& in, const std::string& company,
                                       RowErrorPolicy policy = RowErrorPolicy::Abort,
                                       std::vector<std::string>* skipped = nullptr);

void write_tweets(std::ostream& out, std::span<const TweetRecord> tweets);
void write_stock_bars(std::ostream& out, std::span<const StockBar> bars);

}  // namespace sentipulse
