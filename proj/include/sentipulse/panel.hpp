#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sentipulse/ingest.hpp"
#include "sentipulse/time.hpp"

namespace sentipulse {

/// A scored tweet reduced to what aggregation needs.
struct ScoredTweet {
    Instant timestamp{};
    double compound = 0.0;
};

/// Per-entity bucketed mean compound. Instants are bucket starts, strictly
/// increasing; buckets without tweets are absent.
struct SentimentSeries {
    std::string entity;
    std::vector<Instant> instants;
    std::vector<double> mean_compound;
    std::vector<int> counts;

    std::optional<double> at(Instant bucket_start) const;
};

/// Buckets cover [origin + k*bucket, origin + (k+1)*bucket). `phase` shifts
/// the bucket origin from the epoch so buckets can align with session
/// times that sit off the whole hour (e.g. 09:30 bars with hourly buckets
/// need phase 30min).
SentimentSeries aggregate_entity_sentiment(std::span<const ScoredTweet> tweets,
                                           std::string entity,
                                           std::chrono::seconds bucket =
                                               std::chrono::hours{1},
                                           std::chrono::seconds phase =
                                               std::chrono::seconds{0});

/// Leave-one-out mean over the other companies' values at the instant;
/// companies without a value there are excluded. nullopt when none of the
/// others has a value.
std::optional<double> competitor_sentiment(
    const std::map<std::string, SentimentSeries>& company_series,
    const std::string& company, Instant t);

struct PanelRow {
    Instant instant{};
    double open = 0.0;
    double company_s = 0.0;
    double ceo_s = 0.0;
    double vaccine_s = 0.0;
    double covid_s = 0.0;
    double competitors_s = 0.0;
};

/// Timestamp-indexed rows of open price plus the five sentiment covariates.
struct Panel {
    std::string company;
    std::vector<PanelRow> rows;

    std::vector<double> column(std::size_t index) const;  // 0=open .. 5=competitorsS
};

inline constexpr std::array<const char*, 6> kPanelColumns = {
    "open", "companyS", "ceoS", "vaccineS", "covidS", "competitorsS"};

/// The sentiment inputs joined against a company's bars.
struct CategorySeries {
    const SentimentSeries* company = nullptr;
    const SentimentSeries* ceo = nullptr;
    const SentimentSeries* vaccine = nullptr;
    const SentimentSeries* covid = nullptr;
    /// All ten company series, for the leave-one-out competitor mean.
    const std::map<std::string, SentimentSeries>* all_companies = nullptr;
};

/// Inner join: each price instant t takes every category's value from the
/// bucket starting at t - lag; rows missing any field are dropped.
Panel build_panel(std::span<const StockBar> prices, const CategorySeries& series,
                  std::chrono::seconds lag = std::chrono::hours{1});

/// Sample Pearson product-moment coefficient. Throws std::invalid_argument
/// on length mismatch, length < 2, or zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;  // NaN marks an undefined pair
};

/// Pairwise Pearson over open price and the five sentiment columns.
/// Undefined pairs (zero variance) become NaN entries.
CorrelationMatrix correlation_matrix(const Panel& panel);

/// One row per calendar date (New York), each column averaged over the
/// date's rows; row instant is the date's first instant.
Panel resample_daily(const Panel& panel);

void write_panel_csv(std::ostream& out, const Panel& panel);
Panel read_panel_csv(std::istream& in, std::string company);
void write_correlation_csv(std::ostream& out, const CorrelationMatrix& m);

}  // namespace sentipulse
