"""Polyexponential functions e_s(x, lambda) = sum x^n / (n! (n + lambda)^s)."""

from . import _core
from ._core import (
    EvalResult,
    ParseError,
    PolyexpError,
    asymptotic_lambda,
    check_suites,
    eta,
    eval_hankel,
    eval_negint,
    eval_series,
    eval_via_recursion,
    evaluate,
    evaluate_scaled,
    generating_sum,
    h1_closed,
    h_neg_eval,
    h_series,
    hurwitz_zeta,
    inverse_mellin,
    inverse_mellin_json,
    lerch_phi,
    line_integral,
    mellin_transform_polyexp,
    riemann_zeta,
    run_checks,
    taylor_shift,
    vanishing_moment,
)

exact = _core.exact

__all__ = [name for name in dir() if not name.startswith("_")]
