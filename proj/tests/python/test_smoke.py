"""End-to-end checks of the compiled python module."""

import sys
from fractions import Fraction

import tpd


def check(cond, what):
    if not cond:
        print("FAIL:", what)
        sys.exit(1)


def main():
    check(tpd.intersect("p2", "2H", "5H") == 10, "plane intersection")
    check(tpd.intersect("hirzebruch:2", "C0", "C0") == -2, "C0 self-intersection")
    check(tpd.canonical("hirzebruch:2") == "-2C0-4F", "canonical class")
    check(tpd.genus("p2", "4H") == Fraction(3), "quartic genus")
    check(tpd.genus("hirzebruch:1", "C0+3F") == Fraction(0), "section genus")
    check(tpd.curve_selfint_bound(1, 0) == -2, "selfint bound")
    check(tpd.h0("hirzebruch:1", "C0+3F") == 7, "section count")
    check(tpd.expected_dim("p2", "4H", [3]) == 8, "expected dimension")

    sys_dim = tpd.dim_system("p2", "2H", [2, 2], "random:5")
    check(sys_dim["dim"] == 0 and sys_dim["agreed"], "conic double points")
    check(len(sys_dim["trials"]) == 3, "trial count")
    check(tpd.defect("hirzebruch:1", "C0+3F", [3], seed=2) == 1, "triple point defect")
    check(tpd.verify_double_fiber("hirzebruch:1", "C0+3F", 3), "double fiber")

    check(tpd.jet_class("x^3 - y^3") == "ThreeDistinctLines", "jet class")
    eq = tpd.equimult("x^3")
    check(eq["colength"] == 5, "equimult colength")
    check(eq["leading_ideal"] == ["x^2", "x*y^2", "y^3"], "equimult leading ideal")
    check(eq["normal_form"] == "NotCompleteIntersection", "equimult normal form")
    check(tpd.colength(["x^2 + y^3", "x*y"]) == 5, "colength")
    check(tpd.colength(["x^2"]) is None, "infinite colength")
    check(tpd.leading_ideal(["x^2 - y^2", "x*y"]) == ["x^2", "x*y", "y^3"], "leading ideal")
    check(tpd.hilbert_samuel(["x^2 + y^3", "x*y"]) == [1, 2, 1, 1], "hilbert-samuel")
    check(tpd.ci_normal_form(["x^2 + y^3", "y^2"]) == "TypeX2Y2", "normal form")

    check(tpd.bogomolov_unstable(17, 4), "unstable")
    check(not tpd.bogomolov_unstable(16, 4), "stable")
    check(tpd.hodge_b2(17, 4) == [0, 1, 2], "feasible b2")
    check(tpd.hodge_pairs(17, 3) == [(1, 0), (2, 0), (3, 0)], "feasible pairs")
    check(len(tpd.cases(4)["rows"]) == 12, "case rows")
    check(len(tpd.cases(3, hodge=True)["rows"]) == 4, "filtered case rows")

    rep = tpd.analyze("hirzebruch:1", "C0+3F")
    check(rep["defect"] == 1, "analyze defect")
    check(rep["feasible_b2"] == [0], "analyze feasible b2")
    check(rep["double_fiber"] is True, "analyze double fiber")

    try:
        tpd.intersect("nope", "H", "H")
        check(False, "surface parse error")
    except ValueError:
        pass
    try:
        tpd.hodge_b2(16, 4)
        check(False, "not applicable")
    except RuntimeError:
        pass
    try:
        tpd.colength(["x^"])
        check(False, "polynomial parse error")
    except ValueError:
        pass

    print("ok")


if __name__ == "__main__":
    main()
