"""Lexicon sentiment scoring and ARIMA/VAR stock forecasting.

Thin wrapper over the compiled extension; everything lives in C++.
"""

try:
    from . import _sentipulse as _core  # installed package layout
except ImportError:  # build-tree layout: extension on PYTHONPATH
    import _sentipulse as _core

__all__ = [
    "ArimaError",
    "ArimaFit",
    "ArimaOrder",
    "GrangerResult",
    "IrfResult",
    "Lexicon",
    "RuleConstants",
    "SentimentScore",
    "VarError",
    "VarFit",
    "auto_select",
    "difference",
    "fit_arima",
    "fit_var",
    "forecast_arima",
    "forecast_var",
    "granger_causality",
    "impulse_response",
    "integrate",
    "mape",
    "normalize_compound",
    "pearson",
    "score_text",
    "select_var_lag",
    "tokenize",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
del _name, _core
