#include "sentipulse/evaluate.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "sentipulse/csv.hpp"
#include "sentipulse/var.hpp"

namespace sentipulse {

void SplitSpec::validate() const {
    if (!(train_start <= train_end)) {
        throw std::invalid_argument("split: train_start must be <= train_end");
    }
    if (!(test_start <= test_end)) {
        throw std::invalid_argument("split: test_start must be <= test_end");
    }
    if (!(train_end < test_start)) {
        throw std::invalid_argument("split: train_end must precede test_start");
    }
}

std::pair<Panel, Panel> split_panel(const Panel& panel, const SplitSpec& spec) {
    spec.validate();
    if (panel.rows.empty()) {
        throw std::invalid_argument("split: empty panel");
    }
    Panel train, test;
    train.company = panel.company;
    test.company = panel.company;
    for (const auto& row : panel.rows) {
        const auto date = to_market_time(row.instant).date;
        if (spec.excluded.contains(date)) {
            continue;
        }
        if (date >= spec.train_start && date <= spec.train_end) {
            train.rows.push_back(row);
        } else if (date >= spec.test_start && date <= spec.test_end) {
            test.rows.push_back(row);
        }
    }
    if (train.rows.empty()) {
        throw std::invalid_argument("split: empty training part");
    }
    if (test.rows.empty()) {
        throw std::invalid_argument("split: empty test part");
    }
    return {std::move(train), std::move(test)};
}

double mape(std::span<const double> actual, std::span<const double> forecast) {
    if (actual.size() != forecast.size()) {
        throw std::invalid_argument("mape: length mismatch");
    }
    if (actual.empty()) {
        throw std::invalid_argument("mape: empty input");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == 0.0) {
            throw std::invalid_argument("mape: zero actual value");
        }
        sum += std::abs((actual[i] - forecast[i]) / actual[i]);
    }
    return 100.0 * sum / static_cast<double>(actual.size());
}

std::vector<double> EvaluationReport::mean_row() const {
    std::vector<double> means(columns.size(),
                              std::numeric_limits<double>::quiet_NaN());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        double sum = 0.0;
        int n = 0;
        for (const auto& row : cells) {
            if (row[j].ok) {
                sum += row[j].mape;
                ++n;
            }
        }
        if (n > 0) {
            means[j] = sum / n;
        }
    }
    return means;
}

std::vector<bool> EvaluationReport::partial_columns() const {
    std::vector<bool> partial(columns.size(), false);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto& row : cells) {
            if (!row[j].ok) {
                partial[j] = true;
                break;
            }
        }
    }
    return partial;
}

namespace {

std::string format_mape(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.7f", v);
    return buf;
}

std::string sanitize_reason(std::string reason) {
    for (char& c : reason) {
        if (c == ',' || c == '\n' || c == '\r' || c == '|') {
            c = ';';
        }
    }
    return reason;
}

std::string render_cell(const ReportCell& cell) {
    if (cell.ok) {
        return format_mape(cell.mape);
    }
    return "failed:" + sanitize_reason(cell.error);
}

}  // namespace

std::string render_report(const EvaluationReport& report, ReportFormat format) {
    const auto means = report.mean_row();
    const auto partial = report.partial_columns();
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "company";
        for (const auto& col : report.columns) {
            out << ',' << csv_escape(col);
        }
        out << '\n';
        for (std::size_t i = 0; i < report.companies.size(); ++i) {
            out << csv_escape(report.companies[i]);
            for (const auto& cell : report.cells[i]) {
                out << ',' << render_cell(cell);
            }
            out << '\n';
        }
        out << "Mean";
        for (std::size_t j = 0; j < report.columns.size(); ++j) {
            out << ',';
            if (std::isnan(means[j])) {
                out << "failed:no successful cells";
            } else {
                out << format_mape(means[j]) << (partial[j] ? "*" : "");
            }
        }
        out << '\n';
        return out.str();
    }

    out << "| company |";
    for (const auto& col : report.columns) {
        out << ' ' << col << " |";
    }
    out << "\n|---|";
    for (std::size_t j = 0; j < report.columns.size(); ++j) {
        out << "---|";
    }
    out << '\n';
    for (std::size_t i = 0; i < report.companies.size(); ++i) {
        out << "| " << report.companies[i] << " |";
        for (const auto& cell : report.cells[i]) {
            out << ' ' << render_cell(cell) << " |";
        }
        out << '\n';
    }
    out << "| Mean |";
    for (std::size_t j = 0; j < report.columns.size(); ++j) {
        if (std::isnan(means[j])) {
            out << " failed:no successful cells |";
        } else {
            out << ' ' << format_mape(means[j]) << (partial[j] ? "*" : "")
                << " |";
        }
    }
    out << '\n';
    return out.str();
}

EvaluationReport parse_report_csv(const std::string& text) {
    std::istringstream in(text);
    CsvReader reader(in);
    const auto header = reader.next_row();
    if (!header || header->size() < 2 || (*header)[0] != "company") {
        throw std::invalid_argument("report: bad header");
    }
    EvaluationReport report;
    report.columns.assign(header->begin() + 1, header->end());
    while (auto row = reader.next_row()) {
        if (row->size() == 1 && (*row)[0].empty()) {
            continue;
        }
        if (row->size() != header->size()) {
            throw std::invalid_argument("report: ragged row");
        }
        if ((*row)[0] == "Mean") {
            break;  // recomputable from the cells
        }
        report.companies.push_back((*row)[0]);
        std::vector<ReportCell> cells;
        for (std::size_t j = 1; j < row->size(); ++j) {
            ReportCell cell;
            std::string field = (*row)[j];
            if (field.starts_with("failed:")) {
                cell.ok = false;
                cell.error = field.substr(7);
            } else {
                if (!field.empty() && field.back() == '*') {
                    field.pop_back();
                }
                cell.ok = true;
                cell.mape = std::stod(field);
            }
            cells.push_back(std::move(cell));
        }
        report.cells.push_back(std::move(cells));
    }
    return report;
}

std::string covariate_set_label(const std::string& id) {
    if (id == "hist") return "Hist. record";
    if (id == "company") return "Companies";
    if (id == "ceo") return "CEOs";
    if (id == "vaccine") return "Vaccine";
    if (id == "covid") return "COVID";
    if (id == "competitors") return "Competitors";
    if (id == "all") return "All";
    if (id == "company_vaccine") return "Company&vaccine";
    throw std::invalid_argument("unknown covariate set '" + id + "'");
}

std::vector<std::size_t> covariate_set_columns(const std::string& id) {
    if (id == "hist") return {};
    if (id == "company") return {1};
    if (id == "ceo") return {2};
    if (id == "vaccine") return {3};
    if (id == "covid") return {4};
    if (id == "competitors") return {5};
    if (id == "all") return {1, 2, 3, 4, 5};
    if (id == "company_vaccine") return {1, 3};
    throw std::invalid_argument("unknown covariate set '" + id + "'");
}

namespace {

Eigen::MatrixXd panel_matrix(const Panel& panel,
                             const std::vector<std::size_t>& cols) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(panel.rows.size()),
                      static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto col = panel.column(cols[j]);
        for (std::size_t i = 0; i < col.size(); ++i) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                col[i];
        }
    }
    return m;
}

std::vector<double> arima_predictions(const Panel& train, const Panel& test,
                                      const std::vector<std::size_t>& cols,
                                      const EvalOptions& options) {
    const int horizon = static_cast<int>(test.rows.size());
    const std::vector<double> y = train.column(0);
    const Eigen::MatrixXd x_train = panel_matrix(train, cols);
    const Eigen::MatrixXd x_test = panel_matrix(test, cols);
    const Eigen::MatrixXd* xp = cols.empty() ? nullptr : &x_train;

    if (!options.rolling) {
        const ArimaFit fit =
            auto_select(y, xp, options.grid, options.arima_settings);
        const Eigen::MatrixXd* xf = cols.empty() ? nullptr : &x_test;
        return forecast_arima(fit, horizon, xf).point;
    }

    // rolling: keep the selected order, refit as each test row arrives
    const ArimaFit selected =
        auto_select(y, xp, options.grid, options.arima_settings);
    std::vector<double> predictions;
    std::vector<double> history = y;
    Eigen::MatrixXd x_hist = x_train;
    for (int h = 0; h < horizon; ++h) {
        const Eigen::MatrixXd* xh = cols.empty() ? nullptr : &x_hist;
        const ArimaFit fit =
            fit_arima(history, selected.order, xh, options.arima_settings);
        Eigen::MatrixXd x_next(1, static_cast<Eigen::Index>(cols.size()));
        if (!cols.empty()) {
            x_next = x_test.row(h);
        }
        const Eigen::MatrixXd* xn = cols.empty() ? nullptr : &x_next;
        predictions.push_back(forecast_arima(fit, 1, xn).point.front());
        history.push_back(test.rows[static_cast<std::size_t>(h)].open);
        if (!cols.empty()) {
            x_hist.conservativeResize(x_hist.rows() + 1, Eigen::NoChange);
            x_hist.row(x_hist.rows() - 1) = x_test.row(h);
        }
    }
    return predictions;
}

std::vector<double> var_predictions(const Panel& train, const Panel& test,
                                    const std::vector<std::size_t>& cols,
                                    const EvalOptions& options) {
    const int horizon = static_cast<int>(test.rows.size());
    std::vector<std::size_t> var_cols{0};
    var_cols.insert(var_cols.end(), cols.begin(), cols.end());
    std::vector<std::string> labels;
    for (const auto c : var_cols) {
        labels.emplace_back(kPanelColumns[c]);
    }
    const Eigen::MatrixXd data = panel_matrix(train, var_cols);

    if (!options.rolling) {
        const auto [p, fit] = select_var_lag(data, options.var_p_max, labels);
        const Eigen::MatrixXd fc = forecast_var(fit, horizon);
        return {fc.col(0).data(), fc.col(0).data() + horizon};
    }

    const auto [p, first_fit] = select_var_lag(data, options.var_p_max, labels);
    std::vector<double> predictions;
    Eigen::MatrixXd history = data;
    for (int h = 0; h < horizon; ++h) {
        const VarFit fit = fit_var(history, p, labels);
        predictions.push_back(forecast_var(fit, 1)(0, 0));
        Eigen::MatrixXd test_row = panel_matrix(test, var_cols).row(h);
        history.conservativeResize(history.rows() + 1, Eigen::NoChange);
        history.row(history.rows() - 1) = test_row;
    }
    return predictions;
}

}  // namespace

EvaluationOutput run_evaluation(const std::map<std::string, Panel>& panels,
                                const std::vector<std::string>& companies,
                                const SplitSpec& split, ModelFamily family,
                                const EvalOptions& options) {
    const auto& covsets = family == ModelFamily::Arima ? arima_covariate_sets()
                                                       : var_covariate_sets();
    EvaluationOutput out;
    out.report.model_family = family == ModelFamily::Arima ? "ARIMA" : "VAR";
    for (const auto& id : covsets) {
        out.report.columns.push_back(covariate_set_label(id));
    }
    out.report.companies = companies;

    for (const auto& company : companies) {
        std::vector<ReportCell> row(covsets.size());
        const auto panel_it = panels.find(company);
        if (panel_it == panels.end()) {
            for (auto& cell : row) {
                cell.error = "no panel for company";
            }
            out.report.cells.push_back(std::move(row));
            continue;
        }
        std::optional<std::pair<Panel, Panel>> parts;
        std::string split_error;
        try {
            parts = split_panel(panel_it->second, split);
        } catch (const std::exception& e) {
            split_error = e.what();
        }
        for (std::size_t j = 0; j < covsets.size(); ++j) {
            if (!parts) {
                row[j].error = split_error;
                continue;
            }
            const auto& [train, test] = *parts;
            try {
                const auto cols = covariate_set_columns(covsets[j]);
                const std::vector<double> predicted =
                    family == ModelFamily::Arima
                        ? arima_predictions(train, test, cols, options)
                        : var_predictions(train, test, cols, options);
                const std::vector<double> actual = test.column(0);
                row[j].mape = mape(actual, predicted);
                row[j].ok = true;

                ForecastSeries series;
                series.company = company;
                series.covariate_set = covsets[j];
                for (const auto& r : test.rows) {
                    series.instants.push_back(r.instant);
                }
                series.actual = actual;
                series.predicted = predicted;
                out.forecasts.push_back(std::move(series));
            } catch (const std::exception& e) {
                row[j].error = e.what();
            }
        }
        out.report.cells.push_back(std::move(row));
    }
    return out;
}

}  // namespace sentipulse
