#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sentipulse/arima.hpp"
#include "sentipulse/panel.hpp"
#include "sentipulse/time.hpp"

namespace sentipulse {

/// Date-based train/test partition; excluded dates drop out of both sides.
struct SplitSpec {
    std::chrono::year_month_day train_start{};
    std::chrono::year_month_day train_end{};
    std::chrono::year_month_day test_start{};
    std::chrono::year_month_day test_end{};
    std::set<std::chrono::year_month_day> excluded;

    void validate() const;  // throws std::invalid_argument
};

/// Partitions by New York civil date; order preserved. Throws when either
/// part comes out empty.
std::pair<Panel, Panel> split_panel(const Panel& panel, const SplitSpec& spec);

/// Mean absolute percentage error, in percent:
/// 100/n * sum |(A_t - F_t) / A_t|. Zero actuals and length mismatches are
/// errors.
double mape(std::span<const double> actual, std::span<const double> forecast);

struct ReportCell {
    bool ok = false;
    double mape = 0.0;
    std::string error;
};

/// Company x covariate-set MAPE matrix in the shape of the study's report
/// tables, plus a mean row over each column.
struct EvaluationReport {
    std::string model_family;  // "ARIMA" or "VAR"
    std::vector<std::string> columns;
    std::vector<std::string> companies;
    std::vector<std::vector<ReportCell>> cells;  // [company][column]

    /// Arithmetic mean over the column's successful cells; NaN when none.
    std::vector<double> mean_row() const;
    /// True where a column carries at least one failed cell.
    std::vector<bool> partial_columns() const;
};

enum class ReportFormat { Csv, Markdown };

/// Deterministic rendering, 7 decimal places. Failed cells render as
/// "failed:<reason>"; a partial column's mean gets a '*' suffix.
std::string render_report(const EvaluationReport& report, ReportFormat format);
EvaluationReport parse_report_csv(const std::string& text);

/// Covariate-set ids, in report column order.
inline const std::vector<std::string>& arima_covariate_sets() {
    static const std::vector<std::string> sets{
        "hist",  "company", "ceo", "vaccine",
        "covid", "competitors", "all", "company_vaccine"};
    return sets;
}
inline const std::vector<std::string>& var_covariate_sets() {
    static const std::vector<std::string> sets{
        "company", "ceo", "vaccine", "covid", "competitors", "all"};
    return sets;
}

/// Table column header for a covariate-set id.
std::string covariate_set_label(const std::string& id);
/// Panel column indices (1-based sentiment columns) for a covariate-set id.
std::vector<std::size_t> covariate_set_columns(const std::string& id);

enum class ModelFamily { Arima, Var };

struct EvalOptions {
    ArimaGrid grid;
    ArimaSettings arima_settings;
    int var_p_max = 10;
    bool rolling = false;  // refit per test step instead of fixed origin
};

/// One (instant, actual, predicted) series per evaluated cell, for the
/// plot-ready forecast CSVs.
struct ForecastSeries {
    std::string company;
    std::string covariate_set;
    std::vector<Instant> instants;
    std::vector<double> actual;
    std::vector<double> predicted;
};

struct EvaluationOutput {
    EvaluationReport report;
    std::vector<ForecastSeries> forecasts;
};

/// Runs the backtest grid for one model family. Fit failures become failed
/// cells; the report is always produced.
EvaluationOutput run_evaluation(const std::map<std::string, Panel>& panels,
                                const std::vector<std::string>& companies,
                                const SplitSpec& split, ModelFamily family,
                                const EvalOptions& options = {});

}  // namespace sentipulse
