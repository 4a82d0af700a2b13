"""Fat-point linear systems on rational surfaces.

Thin wrapper over the compiled core: JSON-string results are decoded into
dicts, the arithmetic genus into a Fraction.
"""

import json
from fractions import Fraction

from tpd._core import (
    ParseError,
    NotApplicable,
    TruncationTooLow,
    bogomolov_unstable,
    canonical,
    ci_normal_form,
    colength,
    curve_selfint_bound,
    defect,
    expected_dim,
    h0,
    hilbert_samuel,
    hodge_b2,
    hodge_pairs,
    intersect,
    jet_class,
    leading_ideal,
    verify_double_fiber,
)
from tpd import _core

__all__ = [
    "ParseError",
    "NotApplicable",
    "TruncationTooLow",
    "analyze",
    "bogomolov_unstable",
    "canonical",
    "cases",
    "ci_normal_form",
    "colength",
    "curve_selfint_bound",
    "defect",
    "dim_system",
    "equimult",
    "expected_dim",
    "genus",
    "h0",
    "hilbert_samuel",
    "hodge_b2",
    "hodge_pairs",
    "intersect",
    "jet_class",
    "leading_ideal",
    "verify_double_fiber",
]


def genus(surface, divisor):
    """Arithmetic genus of the divisor class, as an exact Fraction."""
    num, den = _core.genus(surface, divisor)
    return Fraction(num, den)


def dim_system(surface, divisor, mults, placement="random:1", trials=3, prime_bits=31):
    """Monte-Carlo dimension of the fat-point system, as a dict."""
    return json.loads(
        _core.dim_system_json(surface, divisor, list(mults), placement, trials, prime_bits)
    )


def equimult(poly, truncation=6):
    """Equimultiplicity ideal data of a triple-point germ, as a dict."""
    return json.loads(_core.equimult_json(poly, truncation))


def cases(length, hodge=False, lk_sq=17):
    """Destabilized-scheme case rows for the given length, as a dict."""
    return json.loads(_core.cases_json(length, hodge, lk_sq))


def analyze(surface, divisor, seed=1, trials=3, prime_bits=31, require_unstable=False):
    """Full triple-point analysis report, as a dict."""
    return json.loads(
        _core.analyze_json(surface, divisor, seed, trials, prime_bits, require_unstable)
    )
