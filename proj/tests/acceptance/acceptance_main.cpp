// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criterion 7 drives the CLI binary end to end; pass its
// path with --cli.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sentipulse/arima.hpp"
#include "sentipulse/evaluate.hpp"
#include "sentipulse/panel.hpp"
#include "sentipulse/sentiment.hpp"
#include "sentipulse/time.hpp"
#include "sentipulse/var.hpp"

namespace fs = std::filesystem;
using namespace sentipulse;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail,
            double elapsed_s) {
    std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL",
                criterion, name, detail.c_str(), elapsed_s);
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

// ------------------------------------------------------------- criterion 1

void criterion_1_table_arithmetic() {
    const auto t0 = Clock::now();
    const std::vector<double> table1_hist{
        1.7654779, 1.3204773, 2.9809412, 0.5255876, 3.2607307,
        4.1593113, 1.2530694, 1.1308498, 1.1413635, 1.5176051};
    const std::vector<double> table2_companies{
        1.3397776, 1.9151156, 2.4082974, 0.5291664, 1.6485757,
        3.760676,  1.1126908, 1.4416417, 0.7356179, 1.3706057};

    const auto mean_of = [](const std::vector<double>& column) {
        EvaluationReport report;
        report.columns = {"col"};
        for (std::size_t i = 0; i < column.size(); ++i) {
            report.companies.push_back("C" + std::to_string(i));
            report.cells.push_back({ReportCell{true, column[i], ""}});
        }
        return report.mean_row()[0];
    };
    const double m1 = mean_of(table1_hist);
    const double m2 = mean_of(table2_companies);
    const bool ok = std::abs(m1 - 1.9055414) <= 1e-6 &&
                    std::abs(m2 - 1.6262165) <= 1e-6;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "table1 mean %.7f, table2 mean %.7f", m1, m2);
    report(1, "table-arithmetic reproduction", ok, detail,
           std::chrono::duration<double>(Clock::now() - t0).count());
}

// ------------------------------------------------------------- criterion 2

struct OracleCase {
    const char* text;
    double adjusted_sum;  // computed by hand from the documented rules
};

void criterion_2_sentiment() {
    const auto t0 = Clock::now();
    std::istringstream lex_in(
        "good\t1.9\ngreat\t3.1\nbad\t-2.5\nterrible\t-2.1\nhappy\t2.7\n"
        "sad\t-2.1\nlove\t3.2\nhate\t-2.7\nok\t0.9\n\xF0\x9F\x98\x8A\t0.3\n");
    const Lexicon lex = Lexicon::from_stream(lex_in);
    const RuleConstants rules;

    // 50 hand-derived cases. Constants: booster 0.293 (damped 0.95/0.90 at
    // distances 2/3), negation -0.74, caps 0.733, exclamation 0.292 (max 3),
    // but-clause 0.5/1.5.
    const std::vector<OracleCase> corpus{
        // plain lexicon sums
        {"good", 1.9},
        {"great", 3.1},
        {"bad", -2.5},
        {"terrible", -2.1},
        {"happy", 2.7},
        {"sad", -2.1},
        {"love", 3.2},
        {"hate", -2.7},
        {"ok", 0.9},
        {"\xF0\x9F\x98\x8A", 0.3},
        {"good bad", 1.9 - 2.5},
        {"the good day", 1.9},
        {"love love \xF0\x9F\x98\x8A", 3.2 + 3.2 + 0.3},
        {"good great happy", 1.9 + 3.1 + 2.7},
        {"the of and", 0.0},
        // negation
        {"not good", 1.9 * -0.74},
        {"not bad", -2.5 * -0.74},
        {"never happy", 2.7 * -0.74},
        {"don't hate", -2.7 * -0.74},
        {"cannot love", 3.2 * -0.74},
        {"no good", 1.9 * -0.74},
        {"isnt ok", 0.9 * -0.74},
        {"not the good", 1.9 * -0.74},
        {"NOT good", 1.9 * -0.74},
        // boosters and dampeners
        {"very good", 1.9 + 0.293},
        {"so bad", -2.5 - 0.293},
        {"really love", 3.2 + 0.293},
        {"extremely terrible", -2.1 - 0.293},
        {"barely good", 1.9 - 0.293},
        {"almost sad", -2.1 + 0.293},
        {"very the good", 1.9 + 0.293 * 0.95},
        {"very quite good", 1.9 + 0.293 + 0.293 * 0.95},
        {"very very good", 1.9 + 0.293 + 0.293 * 0.95},
        // all-caps emphasis
        {"GOOD day", 1.9 + 0.733},
        {"BAD day", -2.5 - 0.733},
        {"GOOD DAY", 1.9},
        {"i LOVE this", 3.2 + 0.733},
        {"HATE it so", -2.7 - 0.733},
        {"VERY good day", 1.9 + (0.293 + 0.733)},
        // exclamation emphasis
        {"good!", 1.9 + 0.292},
        {"good!!", 1.9 + 2 * 0.292},
        {"good!!!!", 1.9 + 3 * 0.292},
        {"bad!", -2.5 - 0.292},
        {"the of and!", 0.0},
        {"love you!!", 3.2 + 2 * 0.292},
        // but-clause reweighting
        {"good but bad", 1.9 * 0.5 - 2.5 * 1.5},
        {"bad but good", -2.5 * 0.5 + 1.9 * 1.5},
        {"good but the", 1.9 * 0.5},
        {"but good", 1.9 * 1.5},
        // mixed: dampened clause before "but", boosted sentiment after it
        {"sad but very good", -2.1 * 0.5 + (1.9 + 0.293) * 1.5},
    };

    bool ok = corpus.size() == 50;
    std::string detail = ok ? "" : "corpus size != 50";
    for (const auto& c : corpus) {
        if (!ok) {
            break;
        }
        const SentimentScore s = score_text(c.text, lex, rules);
        const double expected =
            c.adjusted_sum / std::sqrt(c.adjusted_sum * c.adjusted_sum + 15.0);
        if (std::abs(s.compound - expected) > 1e-9) {
            ok = false;
            detail = std::string("compound mismatch on '") + c.text + "'";
            break;
        }
        const double prop_sum = s.pos + s.neg + s.neu;
        if (std::abs(prop_sum - 1.0) > 1e-9) {
            ok = false;
            detail = std::string("proportions of '") + c.text + "' sum to " +
                     std::to_string(prop_sum);
        }
    }

    // fuzzed invariants: bounds and proportion sums for 10,000 texts over a
    // vocabulary that includes rule words and punctuation
    if (ok) {
        const std::vector<std::string> vocab{
            "good", "great",  "bad",  "terrible", "happy", "sad",   "love",
            "hate", "ok",     "not",  "very",     "so",    "but",   "never",
            "the",  "of",     "and",  "GOOD",     "BAD",   "a!",    "!!",
            "\xF0\x9F\x98\x8A", "don't", "barely", "almost", "i"};
        std::mt19937 rng(4711);
        std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
        std::uniform_int_distribution<int> len(0, 14);
        std::uniform_real_distribution<double> sums(-60.0, 60.0);
        for (int i = 0; i < 10000 && ok; ++i) {
            std::string text;
            const int n = len(rng);
            for (int w = 0; w < n; ++w) {
                if (w) text += ' ';
                text += vocab[pick(rng)];
            }
            const SentimentScore s = score_text(text, lex, rules);
            if (!(s.compound > -1.0 && s.compound < 1.0) || s.pos < 0.0 ||
                s.neg < 0.0 || s.neu < 0.0) {
                ok = false;
                detail = "bound violation on fuzzed text '" + text + "'";
            }
            const std::vector<std::string> tokens = tokenize(text);
            if (ok && !tokens.empty() &&
                std::abs(s.pos + s.neg + s.neu - 1.0) > 1e-9) {
                ok = false;
                detail = "proportion sum violation on fuzzed text";
            }
            // oddness of the normalization
            const double v = sums(rng);
            if (ok && std::abs(normalize_compound(-v, 15.0) +
                               normalize_compound(v, 15.0)) > 1e-12) {
                ok = false;
                detail = "normalize_compound is not odd";
            }
        }
    }
    if (ok) {
        detail = "50 hand-oracle texts + 10000 fuzzed texts";
    }
    report(2, "sentiment engine vs hand oracle", ok, detail,
           std::chrono::duration<double>(Clock::now() - t0).count());
}

// ------------------------------------------------------------- criterion 3

std::vector<double> gen_ar1(int n, double phi, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    std::vector<double> y(static_cast<std::size_t>(n));
    double prev = g(rng) / std::sqrt(1.0 - phi * phi);
    for (auto& v : y) {
        prev = phi * prev + g(rng);
        v = prev;
    }
    return y;
}

void criterion_3_arima() {
    const auto t0 = Clock::now();
    std::vector<double> abs_err;
    int picked_100 = 0;
    int q_above_2 = 0;
    for (unsigned seed = 0; seed < 100; ++seed) {
        const auto y = gen_ar1(2000, 0.8, 7000 + seed);
        const ArimaFit fit = fit_arima(y, {1, 0, 0});
        abs_err.push_back(std::abs(fit.ar[0] - 0.8));
        const ArimaFit sel = auto_select(y);
        if (sel.order.p == 1 && sel.order.d == 0 && sel.order.q == 0) {
            ++picked_100;
        }
        if (sel.order.q > 2) {
            ++q_above_2;
        }
    }
    const double med = median(abs_err);

    // random-walk forecast flatness
    std::mt19937 rng(424242);
    std::normal_distribution<double> g;
    std::vector<double> walk(1000);
    double level = 50.0;
    for (auto& v : walk) {
        level += g(rng);
        v = level;
    }
    const ArimaFit rw = fit_arima(walk, {0, 1, 0});
    const ForecastResult fc = forecast_arima(rw, 10);
    bool flat = true;
    for (double v : fc.point) {
        flat = flat && v == walk.back();
    }

    const bool ok = med <= 0.05 && picked_100 >= 70 && q_above_2 == 0 && flat;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "median |phi err| %.4f, (1,0,0) picked %d/100, q>2 %dx, "
                  "rw forecast flat %s",
                  med, picked_100, q_above_2, flat ? "yes" : "no");
    report(3, "ARIMA recovery and selection", ok, detail,
           std::chrono::duration<double>(Clock::now() - t0).count());
}

// ------------------------------------------------------------- criterion 4

void criterion_4_arimax() {
    const auto t0 = Clock::now();
    std::vector<double> errors;
    for (unsigned seed = 0; seed < 100; ++seed) {
        std::mt19937 rng(9000 + seed);
        std::normal_distribution<double> g;
        const int n = 2000;
        Eigen::MatrixXd x(n, 1);
        std::vector<double> y(static_cast<std::size_t>(n));
        double eta = 0.0;
        for (int i = 0; i < n; ++i) {
            x(i, 0) = g(rng);
            eta = 0.6 * eta + g(rng);
            y[static_cast<std::size_t>(i)] = 2.0 * x(i, 0) + eta;
        }
        const ArimaFit fit = fit_arima(y, {1, 0, 0}, &x);
        errors.push_back(std::abs(fit.beta[0] - 2.0));
    }
    const double med = median(errors);
    const bool ok = med <= 0.1;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "median |beta err| %.4f over 100 seeds",
                  med);
    report(4, "ARIMAX beta recovery", ok, detail,
           std::chrono::duration<double>(Clock::now() - t0).count());
}

// ------------------------------------------------------------- criterion 5

Eigen::MatrixXd gen_var(const Eigen::VectorXd& c,
                        const std::vector<Eigen::MatrixXd>& A, int n,
                        unsigned seed, double noise = 1.0) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    const int k = static_cast<int>(c.size());
    const int p = static_cast<int>(A.size());
    Eigen::MatrixXd data = Eigen::MatrixXd::Zero(n + 60, k);
    for (int t = p; t < data.rows(); ++t) {
        Eigen::VectorXd next = c;
        for (int lag = 1; lag <= p; ++lag) {
            next += A[static_cast<std::size_t>(lag - 1)] *
                    data.row(t - lag).transpose();
        }
        for (int j = 0; j < k; ++j) {
            next(j) += noise * g(rng);
        }
        data.row(t) = next.transpose();
    }
    return data.bottomRows(n);
}

void criterion_5_var() {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = true;

    Eigen::MatrixXd A1(2, 2);
    A1 << 0.5, 0.1, 0.0, 0.3;
    const Eigen::VectorXd zero2 = Eigen::VectorXd::Zero(2);

    // coefficient recovery
    {
        const Eigen::MatrixXd data = gen_var(zero2, {A1}, 2000, 11000);
        const VarFit fit = fit_var(data, 1);
        const double err = (fit.A[0] - A1).cwiseAbs().maxCoeff();
        if (err > 0.1) {
            ok = false;
            detail = "VAR(1) recovery error " + std::to_string(err);
        }
    }
    // noiseless recursion
    if (ok) {
        Eigen::VectorXd c(2);
        c << 1.0, -0.5;
        Eigen::MatrixXd data(300, 2);
        data.row(0) << 4.0, -3.0;
        for (int t = 1; t < 300; ++t) {
            data.row(t) = (c + A1 * data.row(t - 1).transpose()).transpose();
        }
        const VarFit fit = fit_var(data, 1);
        const double err = (fit.A[0] - A1).cwiseAbs().maxCoeff();
        if (err > 1e-8) {
            ok = false;
            detail = "noiseless recovery error " + std::to_string(err);
        }
    }
    // lag selection mode on VAR(2)
    int mode_count = 0;
    if (ok) {
        Eigen::MatrixXd B1(2, 2), B2(2, 2);
        B1 << 0.4, 0.1, 0.0, 0.3;
        B2 << 0.3, 0.0, 0.1, 0.25;
        std::map<int, int> histogram;
        for (unsigned seed = 0; seed < 30; ++seed) {
            const Eigen::MatrixXd data =
                gen_var(zero2, {B1, B2}, 2000, 12000 + seed);
            histogram[select_var_lag(data, 8).first]++;
        }
        int mode = 0;
        for (const auto& [p, count] : histogram) {
            if (count > mode_count) {
                mode_count = count;
                mode = p;
            }
        }
        if (mode != 2) {
            ok = false;
            detail = "modal selected lag " + std::to_string(mode);
        }
    }
    // Granger power and size
    int power_hits = 0, size_hits = 0;
    if (ok) {
        const std::vector<std::string> labels{"x", "y"};
        for (unsigned seed = 0; seed < 500; ++seed) {
            std::mt19937 rng(13000 + seed);
            std::normal_distribution<double> g;
            const int n = 1000;
            Eigen::MatrixXd causal(n, 2), null_data(n, 2);
            double prev = g(rng);
            for (int t = 0; t < n; ++t) {
                const double x = g(rng);
                causal(t, 0) = x;
                causal(t, 1) = 0.9 * prev + g(rng);
                prev = x;
                null_data(t, 0) = g(rng);
                null_data(t, 1) = g(rng);
            }
            if (granger_causality(causal, labels, "x", "y", 1).p_value < 0.05) {
                ++power_hits;
            }
            if (granger_causality(null_data, labels, "x", "y", 1).p_value <
                0.05) {
                ++size_hits;
            }
        }
        const double power = power_hits / 500.0;
        const double size = size_hits / 500.0;
        if (power < 0.90 || size < 0.02 || size > 0.08) {
            ok = false;
            char buf[96];
            std::snprintf(buf, sizeof(buf), "granger power %.3f size %.3f",
                          power, size);
            detail = buf;
        }
    }
    // IRF of a VAR(1) equals matrix powers
    if (ok) {
        const Eigen::MatrixXd data = gen_var(zero2, {A1}, 1500, 14000);
        const VarFit fit = fit_var(data, 1);
        const IrfResult irf = impulse_response(fit, 15);
        Eigen::MatrixXd power = Eigen::MatrixXd::Identity(2, 2);
        for (int h = 0; h <= 15 && ok; ++h) {
            if ((irf.responses[static_cast<std::size_t>(h)] - power)
                    .cwiseAbs()
                    .maxCoeff() > 1e-10) {
                ok = false;
                detail = "IRF mismatch at horizon " + std::to_string(h);
            }
            power = fit.A[0] * power;
        }
    }
    if (ok) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "recovery, noiseless, lag mode 2 (%d/30), power %.3f, "
                      "size %.3f, IRF exact",
                      mode_count, power_hits / 500.0, size_hits / 500.0);
        detail = buf;
    }
    report(5, "VAR estimation, Granger, IRF", ok, detail,
           std::chrono::duration<double>(Clock::now() - t0).count());
}

// ------------------------------------------------------------- criterion 6

void criterion_6_panel() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    // leave-one-out mean preservation on 1000 random instants
    std::mt19937 rng(15000);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Instant base = parse_timestamp("2023-02-01T09:30:00-05:00");
    for (int round = 0; round < 1000 && ok; ++round) {
        const Instant t = base + std::chrono::hours{round};
        std::map<std::string, SentimentSeries> all;
        double company_mean = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double v = u(rng);
            company_mean += v / 10.0;
            SentimentSeries s;
            s.entity = "C" + std::to_string(i);
            s.instants = {t};
            s.mean_compound = {v};
            s.counts = {1};
            all[s.entity] = std::move(s);
        }
        double competitor_mean = 0.0;
        for (const auto& [name, series] : all) {
            competitor_mean += *competitor_sentiment(all, name, t) / 10.0;
        }
        if (std::abs(competitor_mean - company_mean) > 1e-12) {
            ok = false;
            detail = "leave-one-out identity violated";
        }
    }

    // pearson against the textbook formula on 100 random pairs
    if (ok) {
        std::normal_distribution<double> g;
        for (int round = 0; round < 100 && ok; ++round) {
            const std::size_t n = static_cast<std::size_t>(50 + round);
            std::vector<double> x(n), y(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = g(rng);
                y[i] = 0.3 * x[i] + g(rng);
            }
            double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
            for (std::size_t i = 0; i < n; ++i) {
                sx += x[i];
                sy += y[i];
                sxy += x[i] * y[i];
                sxx += x[i] * x[i];
                syy += y[i] * y[i];
            }
            const double nn = static_cast<double>(n);
            const double oracle =
                (nn * sxy - sx * sy) / (std::sqrt(nn * sxx - sx * sx) *
                                        std::sqrt(nn * syy - sy * sy));
            if (std::abs(pearson(x, y) - oracle) > 1e-12) {
                ok = false;
                detail = "pearson oracle mismatch";
            }
        }
    }

    // calendar filter on a synthetic Feb-Mar 2023 fixture
    if (ok) {
        TradingCalendar cal;
        cal.session_start = std::chrono::hours{9} + std::chrono::minutes{30};
        cal.session_end = std::chrono::hours{15} + std::chrono::minutes{30};
        const auto feb20 = std::chrono::year_month_day{
            std::chrono::year{2023}, std::chrono::month{2}, std::chrono::day{20}};
        cal.holidays.insert(feb20);

        std::vector<Instant> records;
        const std::chrono::sys_days first{std::chrono::year_month_day{
            std::chrono::year{2023}, std::chrono::month{2}, std::chrono::day{1}}};
        const std::chrono::sys_days last{std::chrono::year_month_day{
            std::chrono::year{2023}, std::chrono::month{3}, std::chrono::day{19}}};
        for (auto d = first; d <= last; d += std::chrono::days{1}) {
            for (int h = 0; h < 24; ++h) {
                const Instant approx{d + std::chrono::hours{17}};
                records.push_back(Instant{d + std::chrono::hours{h} +
                                          std::chrono::minutes{30} -
                                          ny_utc_offset(approx)});
            }
        }
        const auto kept =
            apply_calendar(records, cal, [](const Instant& t) { return t; });
        std::size_t expected = 0;
        for (const auto& t : records) {
            const NyCivil c = to_market_time(t);
            const bool weekend = c.day_of_week == std::chrono::Saturday ||
                                 c.day_of_week == std::chrono::Sunday;
            const bool in_session = c.time_of_day >= cal.session_start &&
                                    c.time_of_day <= cal.session_end;
            if (!weekend && c.date != feb20 && in_session) {
                ++expected;
            }
        }
        if (kept.size() != expected) {
            ok = false;
            detail = "calendar kept " + std::to_string(kept.size()) +
                     " rows, expected " + std::to_string(expected);
        }
        for (const auto& t : kept) {
            const NyCivil c = to_market_time(t);
            if (c.date == feb20 || c.day_of_week == std::chrono::Saturday ||
                c.day_of_week == std::chrono::Sunday) {
                ok = false;
                detail = "calendar kept an excluded instant";
                break;
            }
        }
        if (ok && detail.empty()) {
            detail = "identity x1000, pearson x100, calendar fixture (" +
                     std::to_string(kept.size()) + " kept rows)";
        }
    }
    report(6, "panel identities and calendar filter", ok, detail,
           std::chrono::duration<double>(Clock::now() - t0).count());
}

// ------------------------------------------------------------- criterion 7

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void criterion_7_end_to_end(const std::string& cli) {
    const auto t0 = Clock::now();
    bool ok = !cli.empty();
    std::string detail = ok ? "" : "no --cli path given";

    const fs::path root =
        fs::temp_directory_path() / "sentipulse_acceptance_e2e";
    fs::remove_all(root);
    fs::create_directories(root);

    const auto run = [&](const std::string& args) {
        const std::string command =
            cli + " " + args + " >> " + (root / "log.txt").string() + " 2>&1";
        return std::system(command.c_str()) == 0;
    };

    for (const char* tag : {"run1", "run2"}) {
        if (!ok) {
            break;
        }
        const std::string base = (root / tag).string();
        ok = run("synth --out " + base + "/raw --seed 42") &&
             run("ingest --tweets " + base + "/raw/tweets --stocks " + base +
                 "/raw/stocks --calendar " + base + "/raw/config.conf --out " +
                 base + "/store") &&
             run("build-panel --store " + base + "/store --lag 1h --out " +
                 base + "/panels") &&
             run("evaluate --panels " + base + "/panels --config " + base +
                 "/store/config.conf --family both --strict --out " + base +
                 "/reports");
        if (!ok) {
            detail = std::string("pipeline step failed in ") + tag +
                     " (see " + (root / "log.txt").string() + ")";
        }
    }

    if (ok) {
        for (const char* name :
             {"arima_mape.csv", "var_mape.csv", "arima_mape.md", "var_mape.md"}) {
            const std::string a = slurp(root / "run1" / "reports" / name);
            const std::string b = slurp(root / "run2" / "reports" / name);
            if (a.empty() || a != b) {
                ok = false;
                detail = std::string("report ") + name +
                         (a.empty() ? " is empty" : " differs between runs");
                break;
            }
        }
    }
    if (ok) {
        // spot-check the report shape: header + 10 companies + mean row
        const std::string csv = slurp(root / "run1" / "reports" / "arima_mape.csv");
        const auto lines = std::count(csv.begin(), csv.end(), '\n');
        if (lines != 12) {
            ok = false;
            detail = "unexpected report shape";
        } else {
            detail = "reports byte-identical across two full runs";
        }
    }
    report(7, "end-to-end determinism", ok, detail,
           std::chrono::duration<double>(Clock::now() - t0).count());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") {
            cli = argv[i + 1];
        }
    }

    criterion_1_table_arithmetic();
    criterion_2_sentiment();
    criterion_3_arima();
    criterion_4_arimax();
    criterion_5_var();
    criterion_6_panel();
    criterion_7_end_to_end(cli);

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures);
    return 1;
}
