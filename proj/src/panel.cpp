#include "sentipulse/panel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "sentipulse/csv.hpp"

namespace sentipulse {

using std::chrono::seconds;

std::optional<double> SentimentSeries::at(Instant bucket_start) const {
    const auto it =
        std::lower_bound(instants.begin(), instants.end(), bucket_start);
    if (it == instants.end() || *it != bucket_start) {
        return std::nullopt;
    }
    return mean_compound[static_cast<std::size_t>(it - instants.begin())];
}

SentimentSeries aggregate_entity_sentiment(std::span<const ScoredTweet> tweets,
                                           std::string entity, seconds bucket,
                                           seconds phase) {
    if (bucket <= seconds{0}) {
        throw std::invalid_argument("bucket duration must be positive");
    }
    std::map<Instant, std::pair<double, int>> sums;  // bucket -> (sum, count)
    for (const auto& tw : tweets) {
        const auto since = tw.timestamp.time_since_epoch() - phase;
        // floor division so pre-epoch instants bucket correctly too
        auto k = since.count() / bucket.count();
        if (since.count() % bucket.count() < 0) {
            --k;
        }
        const Instant key{seconds{k * bucket.count()} + phase};
        auto& [sum, count] = sums[key];
        sum += tw.compound;
        ++count;
    }
    SentimentSeries series;
    series.entity = std::move(entity);
    series.instants.reserve(sums.size());
    for (const auto& [key, sc] : sums) {
        series.instants.push_back(key);
        series.mean_compound.push_back(sc.first / sc.second);
        series.counts.push_back(sc.second);
    }
    return series;
}

std::optional<double> competitor_sentiment(
    const std::map<std::string, SentimentSeries>& company_series,
    const std::string& company, Instant t) {
    if (!company_series.contains(company)) {
        throw std::invalid_argument("unknown company '" + company + "'");
    }
    double sum = 0.0;
    int n = 0;
    for (const auto& [name, series] : company_series) {
        if (name == company) {
            continue;
        }
        if (const auto v = series.at(t)) {
            sum += *v;
            ++n;
        }
    }
    if (n == 0) {
        return std::nullopt;
    }
    return sum / n;
}

std::vector<double> Panel::column(std::size_t index) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        switch (index) {
            case 0: out.push_back(r.open); break;
            case 1: out.push_back(r.company_s); break;
            case 2: out.push_back(r.ceo_s); break;
            case 3: out.push_back(r.vaccine_s); break;
            case 4: out.push_back(r.covid_s); break;
            case 5: out.push_back(r.competitors_s); break;
            default: throw std::out_of_range("panel column index");
        }
    }
    return out;
}

Panel build_panel(std::span<const StockBar> prices, const CategorySeries& series,
                  seconds lag) {
    if (!series.company || !series.ceo || !series.vaccine || !series.covid ||
        !series.all_companies) {
        throw std::invalid_argument("build_panel: missing category series");
    }
    Panel panel;
    if (!prices.empty()) {
        panel.company = prices.front().company;
    }
    for (const auto& bar : prices) {
        const Instant key = bar.timestamp - lag;
        const auto company_v = series.company->at(key);
        const auto ceo_v = series.ceo->at(key);
        const auto vaccine_v = series.vaccine->at(key);
        const auto covid_v = series.covid->at(key);
        const auto competitors_v =
            competitor_sentiment(*series.all_companies, panel.company, key);
        if (!company_v || !ceo_v || !vaccine_v || !covid_v || !competitors_v) {
            continue;
        }
        panel.rows.push_back(PanelRow{bar.timestamp, bar.open, *company_v,
                                      *ceo_v, *vaccine_v, *covid_v,
                                      *competitors_v});
    }
    return panel;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("pearson: length mismatch");
    }
    const std::size_t n = x.size();
    if (n < 2) {
        throw std::invalid_argument("pearson: need at least two observations");
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw std::invalid_argument("pearson: zero variance");
    }
    return sxy / std::sqrt(sxx * syy);
}

CorrelationMatrix correlation_matrix(const Panel& panel) {
    if (panel.rows.size() < 2) {
        throw std::invalid_argument("correlation_matrix: need at least 2 rows");
    }
    CorrelationMatrix m;
    m.labels.assign(kPanelColumns.begin(), kPanelColumns.end());
    std::array<std::vector<double>, 6> cols;
    for (std::size_t i = 0; i < 6; ++i) {
        cols[i] = panel.column(i);
    }
    m.values.assign(6, std::vector<double>(6, 0.0));
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i; j < 6; ++j) {
            double r;
            try {
                r = pearson(cols[i], cols[j]);
            } catch (const std::invalid_argument&) {
                r = std::numeric_limits<double>::quiet_NaN();
            }
            m.values[i][j] = r;
            m.values[j][i] = r;
        }
    }
    return m;
}

Panel resample_daily(const Panel& panel) {
    Panel daily;
    daily.company = panel.company;
    std::map<std::chrono::year_month_day, std::vector<const PanelRow*>> groups;
    for (const auto& row : panel.rows) {
        groups[to_market_time(row.instant).date].push_back(&row);
    }
    for (const auto& [date, rows] : groups) {
        PanelRow mean{};
        mean.instant = rows.front()->instant;
        const double n = static_cast<double>(rows.size());
        for (const PanelRow* r : rows) {
            mean.open += r->open / n;
            mean.company_s += r->company_s / n;
            mean.ceo_s += r->ceo_s / n;
            mean.vaccine_s += r->vaccine_s / n;
            mean.covid_s += r->covid_s / n;
            mean.competitors_s += r->competitors_s / n;
        }
        daily.rows.push_back(mean);
    }
    return daily;
}

void write_panel_csv(std::ostream& out, const Panel& panel) {
    std::vector<std::string> header{"instant"};
    header.insert(header.end(), kPanelColumns.begin(), kPanelColumns.end());
    write_csv_row(out, header);
    for (const auto& r : panel.rows) {
        write_csv_row(out, std::vector<std::string>{
                               format_timestamp(r.instant), format_number(r.open),
                               format_number(r.company_s), format_number(r.ceo_s),
                               format_number(r.vaccine_s), format_number(r.covid_s),
                               format_number(r.competitors_s)});
    }
}

Panel read_panel_csv(std::istream& in, std::string company) {
    CsvReader reader(in);
    const auto header = reader.next_row();
    if (!header || header->size() != 7 || (*header)[0] != "instant") {
        throw std::invalid_argument("bad panel header");
    }
    Panel panel;
    panel.company = std::move(company);
    while (auto row = reader.next_row()) {
        if (row->size() == 1 && (*row)[0].empty()) {
            continue;
        }
        if (row->size() != 7) {
            throw RowError(reader.row_line(), "expected 7 columns");
        }
        PanelRow r;
        r.instant = parse_timestamp((*row)[0]);
        r.open = std::stod((*row)[1]);
        r.company_s = std::stod((*row)[2]);
        r.ceo_s = std::stod((*row)[3]);
        r.vaccine_s = std::stod((*row)[4]);
        r.covid_s = std::stod((*row)[5]);
        r.competitors_s = std::stod((*row)[6]);
        panel.rows.push_back(r);
    }
    return panel;
}

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& m) {
    std::vector<std::string> header{"variable"};
    header.insert(header.end(), m.labels.begin(), m.labels.end());
    write_csv_row(out, header);
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        std::vector<std::string> row{m.labels[i]};
        for (double v : m.values[i]) {
            row.push_back(std::isnan(v) ? "nan" : format_number(v));
        }
        write_csv_row(out, row);
    }
}

}  // namespace sentipulse
