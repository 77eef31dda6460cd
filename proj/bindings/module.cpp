#include <pybind11/chrono.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "sentipulse/arima.hpp"
#include "sentipulse/evaluate.hpp"
#include "sentipulse/panel.hpp"
#include "sentipulse/sentiment.hpp"
#include "sentipulse/var.hpp"

namespace py = pybind11;
using namespace sentipulse;

namespace {

const Eigen::MatrixXd* maybe(const std::optional<Eigen::MatrixXd>& m) {
    return m.has_value() ? &*m : nullptr;
}

}  // namespace

PYBIND11_MODULE(_sentipulse, m) {
    m.doc() = "Lexicon sentiment scoring and ARIMA/VAR forecasting core";

    py::class_<Lexicon>(m, "Lexicon")
        .def(py::init<>())
        .def_static("from_file", &Lexicon::from_file, py::arg("path"))
        .def_static(
            "from_text",
            [](const std::string& text) {
                std::istringstream in(text);
                return Lexicon::from_stream(in);
            },
            py::arg("text"))
        .def("insert", &Lexicon::insert, py::arg("token"), py::arg("valence"))
        .def("valence", &Lexicon::valence, py::arg("token"))
        .def("__len__", &Lexicon::size)
        .def("__contains__", &Lexicon::contains);

    py::class_<RuleConstants>(m, "RuleConstants")
        .def(py::init<>())
        .def_static("lexicon_only", &RuleConstants::lexicon_only)
        .def_readwrite("alpha", &RuleConstants::alpha)
        .def_readwrite("booster_increment", &RuleConstants::booster_increment)
        .def_readwrite("negation_factor", &RuleConstants::negation_factor)
        .def_readwrite("caps_boost", &RuleConstants::caps_boost)
        .def_readwrite("exclamation_increment",
                       &RuleConstants::exclamation_increment)
        .def_readwrite("max_exclamations", &RuleConstants::max_exclamations)
        .def_readwrite("but_pre_weight", &RuleConstants::but_pre_weight)
        .def_readwrite("but_post_weight", &RuleConstants::but_post_weight);

    py::class_<SentimentScore>(m, "SentimentScore")
        .def_readonly("neg", &SentimentScore::neg)
        .def_readonly("neu", &SentimentScore::neu)
        .def_readonly("pos", &SentimentScore::pos)
        .def_readonly("compound", &SentimentScore::compound)
        .def("__repr__", [](const SentimentScore& s) {
            std::ostringstream out;
            out << "SentimentScore(neg=" << s.neg << ", neu=" << s.neu
                << ", pos=" << s.pos << ", compound=" << s.compound << ")";
            return out.str();
        });

    m.def("normalize_compound", &normalize_compound, py::arg("valence_sum"),
          py::arg("alpha") = 15.0);
    m.def("tokenize", &tokenize, py::arg("text"));
    m.def("score_text", &score_text, py::arg("text"), py::arg("lexicon"),
          py::arg("rules") = RuleConstants{});

    m.def(
        "pearson",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return pearson(x, y);
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "mape",
        [](const std::vector<double>& actual,
           const std::vector<double>& forecast) {
            return mape(actual, forecast);
        },
        py::arg("actual"), py::arg("forecast"));

    m.def(
        "difference",
        [](const std::vector<double>& y, int d) { return difference(y, d); },
        py::arg("y"), py::arg("d"));
    m.def(
        "integrate",
        [](const std::vector<double>& diffed, const std::vector<double>& initial,
           int d) { return integrate(diffed, initial, d); },
        py::arg("diffed"), py::arg("initial"), py::arg("d"));

    py::class_<ArimaOrder>(m, "ArimaOrder")
        .def(py::init<int, int, int>(), py::arg("p") = 0, py::arg("d") = 0,
             py::arg("q") = 0)
        .def_readwrite("p", &ArimaOrder::p)
        .def_readwrite("d", &ArimaOrder::d)
        .def_readwrite("q", &ArimaOrder::q);

    py::class_<ArimaFit>(m, "ArimaFit")
        .def_readonly("order", &ArimaFit::order)
        .def_readonly("ar", &ArimaFit::ar)
        .def_readonly("ma", &ArimaFit::ma)
        .def_readonly("beta", &ArimaFit::beta)
        .def_readonly("intercept", &ArimaFit::intercept)
        .def_readonly("sigma2", &ArimaFit::sigma2)
        .def_readonly("loglik", &ArimaFit::loglik)
        .def_readonly("aic", &ArimaFit::aic)
        .def_readonly("n_obs", &ArimaFit::n_obs)
        .def("to_json", [](const ArimaFit& fit) {
            return arima_fit_to_json(fit);
        });

    m.def(
        "fit_arima",
        [](const std::vector<double>& y, const ArimaOrder& order,
           const std::optional<Eigen::MatrixXd>& covariates) {
            return fit_arima(y, order, maybe(covariates));
        },
        py::arg("y"), py::arg("order"),
        py::arg("covariates") = std::nullopt);
    m.def(
        "auto_select",
        [](const std::vector<double>& y,
           const std::optional<Eigen::MatrixXd>& covariates, int p_max,
           int d_max, int q_max) {
            return auto_select(y, maybe(covariates),
                               ArimaGrid{p_max, d_max, q_max});
        },
        py::arg("y"), py::arg("covariates") = std::nullopt,
        py::arg("p_max") = 5, py::arg("d_max") = 2, py::arg("q_max") = 5);
    m.def(
        "forecast_arima",
        [](const ArimaFit& fit, int horizon,
           const std::optional<Eigen::MatrixXd>& future_covariates) {
            return forecast_arima(fit, horizon, maybe(future_covariates)).point;
        },
        py::arg("fit"), py::arg("horizon"),
        py::arg("future_covariates") = std::nullopt);

    py::class_<VarFit>(m, "VarFit")
        .def_readonly("k", &VarFit::k)
        .def_readonly("p", &VarFit::p)
        .def_readonly("c", &VarFit::c)
        .def_readonly("A", &VarFit::A)
        .def_readonly("sigma", &VarFit::sigma)
        .def_readonly("loglik", &VarFit::loglik)
        .def_readonly("aic", &VarFit::aic)
        .def_readonly("n_obs", &VarFit::n_obs)
        .def_readonly("labels", &VarFit::labels)
        .def("to_json", &var_fit_to_json);

    m.def("fit_var", &fit_var, py::arg("data"), py::arg("p"),
          py::arg("labels") = std::vector<std::string>{});
    m.def("select_var_lag", &select_var_lag, py::arg("data"),
          py::arg("p_max") = 0, py::arg("labels") = std::vector<std::string>{});
    m.def("forecast_var", &forecast_var, py::arg("fit"), py::arg("horizon"));

    py::class_<GrangerResult>(m, "GrangerResult")
        .def_readonly("cause", &GrangerResult::cause)
        .def_readonly("effect", &GrangerResult::effect)
        .def_readonly("f_stat", &GrangerResult::f_stat)
        .def_readonly("p_value", &GrangerResult::p_value)
        .def_readonly("restricted_rss", &GrangerResult::restricted_rss)
        .def_readonly("unrestricted_rss", &GrangerResult::unrestricted_rss)
        .def_readonly("df_num", &GrangerResult::df_num)
        .def_readonly("df_den", &GrangerResult::df_den);

    m.def("granger_causality", &granger_causality, py::arg("data"),
          py::arg("labels"), py::arg("cause"), py::arg("effect"), py::arg("p"));

    py::class_<IrfResult>(m, "IrfResult")
        .def_readonly("horizon", &IrfResult::horizon)
        .def_readonly("responses", &IrfResult::responses);

    m.def("impulse_response", &impulse_response, py::arg("fit"),
          py::arg("horizon"));

    py::register_exception<ArimaError>(m, "ArimaError");
    py::register_exception<VarError>(m, "VarError");
}
