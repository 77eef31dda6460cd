#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sentipulse/arima.hpp"
#include "sentipulse/config.hpp"
#include "sentipulse/csv.hpp"
#include "sentipulse/evaluate.hpp"
#include "sentipulse/ingest.hpp"
#include "sentipulse/panel.hpp"
#include "sentipulse/sentiment.hpp"
#include "sentipulse/synth.hpp"
#include "sentipulse/var.hpp"

namespace fs = std::filesystem;
using namespace sentipulse;
using namespace std::chrono;

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return in;
}

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

// "1h", "30m", "90s" or a bare number of seconds
seconds parse_duration(const std::string& text) {
    if (text.empty()) {
        throw CLI::ValidationError("duration", "empty duration");
    }
    long value = 0;
    std::size_t used = 0;
    value = std::stol(text, &used);
    if (used == text.size()) {
        return seconds{value};
    }
    if (used + 1 != text.size()) {
        throw CLI::ValidationError("duration", "bad duration '" + text + "'");
    }
    switch (text.back()) {
        case 's': return seconds{value};
        case 'm': return minutes{value};
        case 'h': return hours{value};
        default:
            throw CLI::ValidationError("duration", "bad duration '" + text + "'");
    }
}

ArimaGrid parse_grid(const std::string& text) {
    ArimaGrid grid;
    if (std::sscanf(text.c_str(), "%d,%d,%d", &grid.p_max, &grid.d_max,
                    &grid.q_max) != 3) {
        throw CLI::ValidationError("grid", "expected p,d,q bounds like 5,2,5");
    }
    return grid;
}

std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            ids.push_back(item);
        }
    }
    return ids;
}

// Panel columns for a covariate-set name or a comma-separated list of
// covariate ids (company,ceo,vaccine,covid,competitors).
std::vector<std::size_t> columns_for(const std::string& spec) {
    if (spec.empty()) {
        return {};
    }
    try {
        return covariate_set_columns(spec);
    } catch (const std::invalid_argument&) {
        std::vector<std::size_t> cols;
        for (const auto& id : split_ids(spec)) {
            const auto one = covariate_set_columns(id);
            cols.insert(cols.end(), one.begin(), one.end());
        }
        return cols;
    }
}

SplitSpec split_from_config(const PipelineConfig& cfg) {
    SplitSpec spec;
    spec.train_start = cfg.train_start;
    spec.train_end = cfg.train_end;
    spec.test_start = cfg.test_start;
    spec.test_end = cfg.test_end;
    spec.excluded.insert(cfg.excluded_dates.begin(), cfg.excluded_dates.end());
    return spec;
}

void save_config(const fs::path& path, const PipelineConfig& cfg) {
    std::ofstream out = open_output(path);
    const auto join = [](const std::vector<std::string>& items) {
        std::string joined;
        for (const auto& item : items) {
            joined += (joined.empty() ? "" : ", ") + item;
        }
        return joined;
    };
    const auto session = [](const TradingCalendar& cal) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%02d:%02d-%02d:%02d",
                      static_cast<int>(cal.session_start.count() / 3600),
                      static_cast<int>((cal.session_start.count() / 60) % 60),
                      static_cast<int>(cal.session_end.count() / 3600),
                      static_cast<int>((cal.session_end.count() / 60) % 60));
        return std::string(buf);
    };
    out << "# resolved pipeline configuration\n";
    out << "companies = " << join(cfg.companies) << "\n";
    out << "ceos = " << join(cfg.ceos) << "\n";
    out << "news = " << join(cfg.news) << "\n";
    out << "tweet_session = " << session(cfg.tweet_session) << "\n";
    out << "price_session = " << session(cfg.price_session) << "\n";
    std::vector<std::string> holidays;
    for (const auto& d : cfg.tweet_session.holidays) {
        holidays.push_back(format_date(d));
    }
    if (!holidays.empty()) {
        out << "holidays = " << join(holidays) << "\n";
    }
    if (!cfg.lexicon.empty()) {
        out << "lexicon = lexicon.tsv\n";
    }
    out << "train_start = " << format_date(cfg.train_start) << "\n";
    out << "train_end = " << format_date(cfg.train_end) << "\n";
    out << "test_start = " << format_date(cfg.test_start) << "\n";
    out << "test_end = " << format_date(cfg.test_end) << "\n";
    std::vector<std::string> excluded;
    for (const auto& d : cfg.excluded_dates) {
        excluded.push_back(format_date(d));
    }
    if (!excluded.empty()) {
        out << "excluded_dates = " << join(excluded) << "\n";
    }
}

// ---------------------------------------------------------------- score

int run_score(const std::string& lexicon_path, const std::string& input,
              const std::string& output) {
    const Lexicon lexicon = Lexicon::from_file(lexicon_path);
    std::ifstream in = open_input(input);
    const auto tweets = parse_tweets(in, "query");
    std::ofstream out = open_output(output);
    write_csv_row(out, std::vector<std::string>{"tweet_id", "neg", "neu", "pos",
                                                "compound"});
    const RuleConstants rules;
    for (const auto& tweet : tweets) {
        const SentimentScore s = score_text(tweet.text, lexicon, rules);
        write_csv_row(out, std::vector<std::string>{
                               tweet.tweet_id, format_number(s.neg),
                               format_number(s.neu), format_number(s.pos),
                               format_number(s.compound)});
    }
    std::cerr << "scored " << tweets.size() << " tweets\n";
    return 0;
}

// ---------------------------------------------------------------- ingest

int run_ingest(const std::string& tweets_dir, const std::string& stocks_dir,
               const std::string& config_path, const std::string& out_dir,
               const std::string& on_error) {
    const PipelineConfig cfg = load_config_file(config_path);
    const RowErrorPolicy policy = on_error == "skip" ? RowErrorPolicy::Skip
                                                     : RowErrorPolicy::Abort;
    fs::create_directories(out_dir);

    std::size_t kept_tweets = 0, kept_bars = 0;
    std::vector<std::string> skipped;
    for (const auto& label : cfg.query_labels()) {
        const fs::path src = fs::path(tweets_dir) / (label + ".csv");
        if (!fs::exists(src)) {
            std::cerr << "warning: no tweet file for label " << label << "\n";
            continue;
        }
        std::ifstream in = open_input(src.string());
        auto tweets = parse_tweets(in, label, policy, &skipped);
        tweets = apply_calendar(tweets, cfg.tweet_session,
                                [](const TweetRecord& t) { return t.window_start; });
        kept_tweets += tweets.size();
        std::ofstream out =
            open_output(fs::path(out_dir) / ("tweets_" + label + ".csv"));
        write_tweets(out, tweets);
    }
    for (const auto& company : cfg.companies) {
        const fs::path src = fs::path(stocks_dir) / (company + ".csv");
        if (!fs::exists(src)) {
            std::cerr << "warning: no stock file for company " << company << "\n";
            continue;
        }
        std::ifstream in = open_input(src.string());
        auto bars = parse_stock_bars(in, company, policy, &skipped);
        bars = apply_calendar(bars, cfg.price_session,
                              [](const StockBar& b) { return b.timestamp; });
        kept_bars += bars.size();
        std::ofstream out =
            open_output(fs::path(out_dir) / ("stock_" + company + ".csv"));
        write_stock_bars(out, bars);
    }

    if (!cfg.lexicon.empty()) {
        fs::copy_file(cfg.lexicon, fs::path(out_dir) / "lexicon.tsv",
                      fs::copy_options::overwrite_existing);
    }
    save_config(fs::path(out_dir) / "config.conf", cfg);

    for (const auto& message : skipped) {
        std::cerr << "skipped " << message << "\n";
    }
    std::cerr << "store written: " << kept_tweets << " tweets, " << kept_bars
              << " bars\n";
    return 0;
}

// ------------------------------------------------------------ build-panel

int run_build_panel(const std::string& store_dir, const std::string& config_path,
                    const std::string& lag_text, const std::string& bucket_text,
                    const std::string& out_dir) {
    const fs::path store(store_dir);
    const std::string resolved_config =
        config_path.empty() ? (store / "config.conf").string() : config_path;
    const PipelineConfig cfg = load_config_file(resolved_config);
    const seconds lag = lag_text.empty() ? cfg.lag : parse_duration(lag_text);
    const seconds bucket =
        bucket_text.empty() ? cfg.bucket : parse_duration(bucket_text);
    if (cfg.lexicon.empty()) {
        throw std::runtime_error("config must name a lexicon");
    }
    const Lexicon lexicon = Lexicon::from_file(cfg.lexicon);
    const RuleConstants rules;

    // align buckets with the price grid shifted by the lag
    const seconds phase{((cfg.price_session.session_start - lag).count() %
                             bucket.count() +
                         bucket.count()) %
                        bucket.count()};

    const auto load_series = [&](const std::string& label) {
        std::ifstream in =
            open_input((store / ("tweets_" + label + ".csv")).string());
        const auto tweets = parse_tweets(in, label);
        std::vector<ScoredTweet> scored;
        scored.reserve(tweets.size());
        for (const auto& tweet : tweets) {
            scored.push_back(ScoredTweet{
                tweet.window_start,
                score_text(tweet.text, lexicon, rules).compound});
        }
        return aggregate_entity_sentiment(scored, label, bucket, phase);
    };

    std::map<std::string, SentimentSeries> company_series;
    for (const auto& company : cfg.companies) {
        company_series[company] = load_series(company);
    }
    std::map<std::string, SentimentSeries> ceo_series;
    for (std::size_t i = 0; i < cfg.companies.size(); ++i) {
        ceo_series[cfg.companies[i]] = load_series(cfg.ceos[i]);
    }
    if (cfg.news.size() < 2) {
        throw std::runtime_error("config must list the two news labels");
    }
    const SentimentSeries covid_series = load_series(cfg.news[0]);
    const SentimentSeries vaccine_series = load_series(cfg.news[1]);

    fs::create_directories(out_dir);
    for (const auto& company : cfg.companies) {
        std::ifstream in =
            open_input((store / ("stock_" + company + ".csv")).string());
        const auto bars = parse_stock_bars(in, company);
        CategorySeries cats;
        cats.company = &company_series.at(company);
        cats.ceo = &ceo_series.at(company);
        cats.vaccine = &vaccine_series;
        cats.covid = &covid_series;
        cats.all_companies = &company_series;
        const Panel panel = build_panel(bars, cats, lag);
        if (panel.rows.empty()) {
            std::cerr << "warning: empty panel for " << company << "\n";
        }
        std::ofstream out =
            open_output(fs::path(out_dir) / ("panel_" + company + ".csv"));
        write_panel_csv(out, panel);
        std::cerr << company << ": " << panel.rows.size() << " panel rows\n";
    }
    return 0;
}

// -------------------------------------------------------------- correlate

int run_correlate(const std::string& panel_path, const std::string& out_path,
                  bool daily) {
    std::ifstream in = open_input(panel_path);
    Panel panel = read_panel_csv(in, fs::path(panel_path).stem().string());
    if (daily) {
        panel = resample_daily(panel);
    }
    const CorrelationMatrix matrix = correlation_matrix(panel);
    std::ofstream out = open_output(out_path);
    write_correlation_csv(out, matrix);
    return 0;
}

// -------------------------------------------------------------- fit-arima

Panel train_part(const Panel& panel, const PipelineConfig& cfg,
                 const std::string& train_end) {
    SplitSpec spec = split_from_config(cfg);
    if (!train_end.empty()) {
        spec.train_end = parse_date(train_end);
    }
    Panel train;
    train.company = panel.company;
    for (const auto& row : panel.rows) {
        const auto date = to_market_time(row.instant).date;
        if (date <= spec.train_end && !spec.excluded.contains(date)) {
            train.rows.push_back(row);
        }
    }
    if (train.rows.empty()) {
        throw std::runtime_error("no training rows on or before " +
                                 format_date(spec.train_end));
    }
    return train;
}

int run_fit_arima(const std::string& panel_path, const std::string& covariates,
                  const std::string& grid_text, const std::string& order_text,
                  const std::string& train_end, const std::string& out_path,
                  const std::string& search, const std::string& config_path) {
    const PipelineConfig cfg = config_path.empty()
                                   ? default_config()
                                   : load_config_file(config_path);
    std::ifstream in = open_input(panel_path);
    const Panel panel = read_panel_csv(in, fs::path(panel_path).stem().string());
    const Panel train = train_part(panel, cfg, train_end);

    const std::vector<double> y = train.column(0);
    const auto cols = columns_for(covariates);
    Eigen::MatrixXd x(static_cast<Eigen::Index>(train.rows.size()),
                      static_cast<Eigen::Index>(cols.size()));
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto col = train.column(cols[j]);
        for (std::size_t i = 0; i < col.size(); ++i) {
            x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                col[i];
        }
        labels.emplace_back(kPanelColumns[cols[j]]);
    }
    const Eigen::MatrixXd* xp = cols.empty() ? nullptr : &x;

    ArimaSettings settings;
    settings.exhaustive = search == "exhaustive";
    ArimaFit fit;
    if (!order_text.empty()) {
        ArimaOrder order;
        if (std::sscanf(order_text.c_str(), "%d,%d,%d", &order.p, &order.d,
                        &order.q) != 3) {
            throw CLI::ValidationError("order", "expected p,d,q like 1,1,0");
        }
        fit = fit_arima(y, order, xp, settings);
    } else {
        const ArimaGrid grid = grid_text.empty()
                                   ? ArimaGrid{cfg.arima_p_max, cfg.arima_d_max,
                                               cfg.arima_q_max}
                                   : parse_grid(grid_text);
        fit = auto_select(y, xp, grid, settings);
    }
    std::ofstream out = open_output(out_path);
    out << arima_fit_to_json(fit, labels);
    std::cerr << "selected order (" << fit.order.p << "," << fit.order.d << ","
              << fit.order.q << "), aic " << fit.aic << "\n";
    return 0;
}

// ---------------------------------------------------------------- fit-var

int run_fit_var(const std::string& panel_path, const std::string& covariates,
                int p_max, const std::string& train_end,
                const std::string& out_path, const std::string& config_path) {
    const PipelineConfig cfg = config_path.empty()
                                   ? default_config()
                                   : load_config_file(config_path);
    std::ifstream in = open_input(panel_path);
    const Panel panel = read_panel_csv(in, fs::path(panel_path).stem().string());
    const Panel train = train_part(panel, cfg, train_end);

    std::vector<std::size_t> cols{0};
    const auto extra = columns_for(covariates);
    cols.insert(cols.end(), extra.begin(), extra.end());
    Eigen::MatrixXd data(static_cast<Eigen::Index>(train.rows.size()),
                         static_cast<Eigen::Index>(cols.size()));
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto col = train.column(cols[j]);
        for (std::size_t i = 0; i < col.size(); ++i) {
            data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                col[i];
        }
        labels.emplace_back(kPanelColumns[cols[j]]);
    }
    const auto [p, fit] = select_var_lag(data, p_max, labels);
    std::ofstream out = open_output(out_path);
    out << var_fit_to_json(fit);
    std::cerr << "selected lag " << p << ", aic " << fit.aic << "\n";
    return 0;
}

// --------------------------------------------------------------- evaluate

void write_forecast_csvs(const fs::path& out_dir,
                         const std::vector<ForecastSeries>& forecasts) {
    for (const auto& series : forecasts) {
        std::ofstream out = open_output(
            out_dir / ("forecast_" + series.company + "_" +
                       series.covariate_set + ".csv"));
        write_csv_row(out,
                      std::vector<std::string>{"instant", "actual", "predicted"});
        for (std::size_t i = 0; i < series.instants.size(); ++i) {
            write_csv_row(out, std::vector<std::string>{
                                   format_timestamp(series.instants[i]),
                                   format_number(series.actual[i]),
                                   format_number(series.predicted[i])});
        }
    }
}

int run_evaluate(const std::string& panels_dir, const std::string& config_path,
                 const std::string& family, const std::string& out_dir,
                 bool strict, bool rolling, const std::string& grid_text,
                 const std::string& search) {
    const PipelineConfig cfg = load_config_file(config_path);
    std::map<std::string, Panel> panels;
    for (const auto& company : cfg.companies) {
        const fs::path path = fs::path(panels_dir) / ("panel_" + company + ".csv");
        if (!fs::exists(path)) {
            std::cerr << "warning: missing panel for " << company << "\n";
            continue;
        }
        std::ifstream in = open_input(path.string());
        panels[company] = read_panel_csv(in, company);
    }

    EvalOptions options;
    options.grid = grid_text.empty() ? ArimaGrid{cfg.arima_p_max, cfg.arima_d_max,
                                                 cfg.arima_q_max}
                                     : parse_grid(grid_text);
    options.arima_settings.exhaustive = search == "exhaustive";
    options.var_p_max = cfg.var_p_max;
    options.rolling = rolling;
    const SplitSpec split = split_from_config(cfg);

    fs::create_directories(out_dir);
    bool any_failed = false;
    const auto run_family = [&](ModelFamily model_family,
                                const std::string& stem) {
        const EvaluationOutput out =
            run_evaluation(panels, cfg.companies, split, model_family, options);
        {
            std::ofstream csv = open_output(fs::path(out_dir) / (stem + ".csv"));
            csv << render_report(out.report, ReportFormat::Csv);
        }
        {
            std::ofstream md = open_output(fs::path(out_dir) / (stem + ".md"));
            md << render_report(out.report, ReportFormat::Markdown);
        }
        write_forecast_csvs(out_dir, out.forecasts);
        for (const auto& row : out.report.cells) {
            for (const auto& cell : row) {
                if (!cell.ok) {
                    any_failed = true;
                    std::cerr << "failed cell: " << cell.error << "\n";
                }
            }
        }
        std::cerr << out.report.model_family << " report written to " << out_dir
                  << "/" << stem << ".csv\n";
    };

    if (family == "arima" || family == "both") {
        run_family(ModelFamily::Arima, "arima_mape");
    }
    if (family == "var" || family == "both") {
        run_family(ModelFamily::Var, "var_mape");
    }

    {
        std::ofstream meta = open_output(fs::path(out_dir) / "run_metadata.txt");
        meta << "family = " << family << "\n";
        meta << "train = " << format_date(cfg.train_start) << ".."
             << format_date(cfg.train_end) << "\n";
        meta << "test = " << format_date(cfg.test_start) << ".."
             << format_date(cfg.test_end) << "\n";
        meta << "grid = " << options.grid.p_max << "," << options.grid.d_max
             << "," << options.grid.q_max << "\n";
        meta << "var_p_max = " << options.var_p_max << "\n";
        meta << "search = " << (options.arima_settings.exhaustive ? "exhaustive"
                                                                  : "stepwise")
             << "\n";
        meta << "forecast = "
             << (rolling ? "rolling one-step refits"
                         : "fixed-origin multi-step")
             << "\n";
        meta << "covariates at forecast time = observed test-period values\n";
        meta << "panel granularity = as built (hourly by default)\n";
    }
    return strict && any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tweet-sentiment stock forecasting pipeline"};
    app.require_subcommand(1);

    auto* score = app.add_subcommand("score", "Score a tweet file with the lexicon");
    std::string lexicon_path, input_path, output_path;
    score->add_option("--lexicon", lexicon_path, "Lexicon TSV")->required();
    score->add_option("--input", input_path, "Tweet CSV (id,start,end,text)")
        ->required();
    score->add_option("--output", output_path, "Scores CSV")->required();

    auto* ingest = app.add_subcommand(
        "ingest", "Parse raw tweet/stock files into the filtered store");
    std::string tweets_dir, stocks_dir, calendar_path, store_out;
    std::string on_error = "abort";
    ingest->add_option("--tweets", tweets_dir, "Directory of <label>.csv tweet files")
        ->required();
    ingest->add_option("--stocks", stocks_dir, "Directory of <company>.csv bar files")
        ->required();
    ingest->add_option("--calendar", calendar_path, "Pipeline config file")
        ->required();
    ingest->add_option("--out", store_out, "Store directory")->required();
    ingest->add_option("--on-error", on_error, "Row error policy")
        ->check(CLI::IsMember({"skip", "abort"}));

    auto* build = app.add_subcommand(
        "build-panel", "Score, aggregate and join the store into panels");
    std::string store_dir, build_config, lag_text, bucket_text, panels_out;
    build->add_option("--store", store_dir, "Store directory from ingest")
        ->required();
    build->add_option("--config", build_config,
                      "Config file (default: <store>/config.conf)");
    build->add_option("--lag", lag_text, "Join lag, e.g. 1h");
    build->add_option("--bucket", bucket_text, "Aggregation bucket, e.g. 1h");
    build->add_option("--out", panels_out, "Panels directory")->required();

    auto* correlate =
        app.add_subcommand("correlate", "Pearson correlation matrix of a panel");
    std::string panel_path, matrix_out;
    bool daily = false;
    correlate->add_option("--panel", panel_path, "Panel CSV")->required();
    correlate->add_option("--out", matrix_out, "Matrix CSV")->required();
    correlate->add_flag("--daily", daily, "Resample to daily means first");

    auto* fita = app.add_subcommand("fit-arima",
                                    "Select and fit an ARIMA model on a panel");
    std::string fita_panel, fita_cov, fita_grid, fita_order, fita_train_end,
        fita_out, fita_config;
    std::string fita_search = "stepwise";
    fita->add_option("--panel", fita_panel, "Panel CSV")->required();
    fita->add_option("--covariates", fita_cov,
                     "Covariate ids, e.g. company,vaccine (empty = none)");
    fita->add_option("--grid", fita_grid, "Order bounds p,d,q (default 5,2,5)");
    fita->add_option("--order", fita_order, "Fixed order p,d,q (skips selection)");
    fita->add_option("--train-end", fita_train_end, "Last training date");
    fita->add_option("--out", fita_out, "Fit JSON")->required();
    fita->add_option("--config", fita_config, "Pipeline config file");
    fita->add_option("--search", fita_search, "Order search strategy")
        ->check(CLI::IsMember({"stepwise", "exhaustive"}));

    auto* fitv =
        app.add_subcommand("fit-var", "Select and fit a VAR model on a panel");
    std::string fitv_panel, fitv_cov, fitv_train_end, fitv_out, fitv_config;
    int fitv_pmax = 0;
    fitv->add_option("--panel", fitv_panel, "Panel CSV")->required();
    fitv->add_option("--covariates", fitv_cov,
                     "Covariate ids joined with the open price")
        ->required();
    fitv->add_option("--p-max", fitv_pmax, "Largest lag order tried");
    fitv->add_option("--train-end", fitv_train_end, "Last training date");
    fitv->add_option("--out", fitv_out, "Fit JSON")->required();
    fitv->add_option("--config", fitv_config, "Pipeline config file");

    auto* evaluate = app.add_subcommand(
        "evaluate", "Backtest every covariate configuration and report MAPE");
    std::string panels_dir, eval_config, eval_out;
    std::string family = "both";
    std::string eval_grid, eval_search = "stepwise";
    bool strict = false, rolling = false;
    evaluate->add_option("--panels", panels_dir, "Panels directory")->required();
    evaluate->add_option("--config", eval_config, "Pipeline config file")
        ->required();
    evaluate->add_option("--family", family, "Model family")
        ->check(CLI::IsMember({"arima", "var", "both"}));
    evaluate->add_option("--out", eval_out, "Report directory")->required();
    evaluate->add_flag("--strict", strict, "Exit nonzero on any failed cell");
    evaluate->add_flag("--rolling", rolling,
                       "Refit each test step instead of fixed-origin");
    evaluate->add_option("--grid", eval_grid, "ARIMA order bounds p,d,q");
    evaluate->add_option("--search", eval_search, "ARIMA order search strategy")
        ->check(CLI::IsMember({"stepwise", "exhaustive"}));

    auto* synth = app.add_subcommand(
        "synth", "Write the deterministic synthetic dataset");
    std::string synth_out;
    SynthSpec synth_spec;
    synth->add_option("--out", synth_out, "Output directory")->required();
    synth->add_option("--seed", synth_spec.seed, "Generator seed");
    synth->add_option("--companies", synth_spec.n_companies,
                      "Number of fake companies (1-10)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (score->parsed()) {
            return run_score(lexicon_path, input_path, output_path);
        }
        if (ingest->parsed()) {
            return run_ingest(tweets_dir, stocks_dir, calendar_path, store_out,
                              on_error);
        }
        if (build->parsed()) {
            return run_build_panel(store_dir, build_config, lag_text, bucket_text,
                                   panels_out);
        }
        if (correlate->parsed()) {
            return run_correlate(panel_path, matrix_out, daily);
        }
        if (fita->parsed()) {
            return run_fit_arima(fita_panel, fita_cov, fita_grid, fita_order,
                                 fita_train_end, fita_out, fita_search,
                                 fita_config);
        }
        if (fitv->parsed()) {
            return run_fit_var(fitv_panel, fitv_cov, fitv_pmax, fitv_train_end,
                               fitv_out, fitv_config);
        }
        if (evaluate->parsed()) {
            return run_evaluate(panels_dir, eval_config, family, eval_out, strict,
                                rolling, eval_grid, eval_search);
        }
        if (synth->parsed()) {
            write_synthetic_dataset(synth_out, synth_spec);
            std::cerr << "synthetic dataset written to " << synth_out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
