import math
from fractions import Fraction

import pytest

from cfrac import (
    CfSpec,
    DivisionNearZero,
    NoConvergence,
    PolyTerm,
    TermPair,
    continuation_spec,
    eval_adaptive,
    eval_backward,
    eval_forward,
    eval_lentz,
    poly,
    sec_tan_spec,
    term_at,
    xcot_spec,
)

XCOT_1 = 0.6420926159343308  # reference trig: 1/tan(1)
SECTAN_1 = 3.4082234423358275  # reference trig: sec(1) + tan(1)

# Exact convergents of the sec-tan stream at x = 1 (independently recomputed
# by hand / exact rational folding; see also tests in test_exact.py).
FLAT_AT_1 = [
    Fraction(2),
    Fraction(3),
    Fraction(7, 2),
    Fraction(17, 5),
    Fraction(92, 27),
    Fraction(167, 49),
    Fraction(1077, 316),
    Fraction(2321, 681),
]


def test_polyterm_is_exact_at_rational_points():
    p = poly(Fraction(1, 3), -2, Fraction(5, 7))
    x = Fraction(9, 4)
    assert p(x) == Fraction(1, 3) - 2 * x + Fraction(5, 7) * x * x
    assert isinstance(p(x), Fraction)
    assert isinstance(p(0.5), float)


def test_polyterm_str():
    assert str(poly(3)) == "3"
    assert str(poly(0)) == "0"
    assert str(poly(c1=1)) == "x"
    assert str(poly(c1=-1)) == "-x"
    assert str(poly(c2=-1)) == "-x^2"
    assert str(poly(1, 0, -2)) == "-2*x^2 + 1"


def test_termpair_rejects_zero_numerator():
    with pytest.raises(ValueError):
        TermPair(a=poly(0), b=poly(3))


def test_term_at():
    cot = xcot_spec()
    assert term_at(cot, 1, 2.0) == (-4.0, 3.0)
    assert term_at(cot, 3, 1.0) == (-1.0, 7.0)
    assert term_at(sec_tan_spec(), 1, 0.0) == (0.0, 1.0)
    with pytest.raises(ValueError):
        term_at(cot, 0, 1.0)


def test_backward_matches_exact_convergents():
    flat = sec_tan_spec()
    for depth, expected in enumerate(FLAT_AT_1, start=1):
        assert eval_backward(flat, 1.0, depth) == pytest.approx(float(expected), rel=1e-14)


def test_backward_xcot_reference_values():
    cot = xcot_spec()
    assert eval_backward(cot, 0.0, 5) == 1.0
    assert eval_backward(cot, 1.0, 20) == pytest.approx(XCOT_1, rel=1e-13)
    assert abs(eval_backward(cot, math.pi / 2, 40)) < 1e-12  # x*cot(x) vanishes there


def test_backward_validates_depth():
    with pytest.raises(ValueError):
        eval_backward(xcot_spec(), 1.0, 0)


def test_backward_tail_guard():
    with pytest.raises(DivisionNearZero):
        eval_backward(sec_tan_spec(), 1.0, 8, tail=0.0)
    with pytest.raises(DivisionNearZero):
        eval_backward(sec_tan_spec(), 1.0, 8, tail=1e-310)


def test_true_continuation_tail_is_at_least_as_accurate():
    """Substituting the (deeply computed) continuation value for the tail
    must not hurt, measured against the reference function."""
    flat = sec_tan_spec()
    for x in (-1.3, -0.7, 0.5, 1.0, 1.4):
        reference = (1 + math.sin(x)) / math.cos(x)
        for depth in (4, 8, 16, 32):
            plain = eval_backward(flat, x, depth)
            tail = eval_backward(continuation_spec(flat, depth + 1), x, 2 * depth)
            improved = eval_backward(flat, x, depth, tail=tail)
            assert abs(improved - reference) <= abs(plain - reference)


def test_continuation_spec_shifts_indices():
    cot = xcot_spec()
    sub = continuation_spec(cot, 3)
    assert sub.leading == cot.termgen(3).b
    assert sub.termgen(1) == cot.termgen(4)
    with pytest.raises(ValueError):
        continuation_spec(cot, 0)


def test_forward_agrees_with_backward():
    for spec, xs in ((sec_tan_spec(), (-1.2, 0.3, 1.0)), (xcot_spec(), (0.4, 1.0, 2.9))):
        for x in xs:
            convergents = eval_forward(spec, x, 20)
            assert len(convergents) == 20
            assert convergents[-1] == pytest.approx(eval_backward(spec, x, 20), rel=1e-13)


def test_forward_exact_low_convergents():
    convergents = eval_forward(sec_tan_spec(), 1.0, 8)
    for got, expected in zip(convergents, FLAT_AT_1):
        assert got == pytest.approx(float(expected), rel=1e-15)
    # the neighboring truncations often confused for one another:
    assert convergents[4] == pytest.approx(92 / 27, rel=1e-15)  # ~3.4074
    assert convergents[5] == pytest.approx(167 / 49, rel=1e-15)  # ~3.4082


def test_forward_at_zero():
    assert eval_forward(xcot_spec(), 0.0, 6) == [1.0] * 6


def test_forward_rescale_is_invisible():
    """Forcing rescales at a low threshold must not change any convergent."""
    for x in (1.0, 0.7, -1.3):
        default = eval_forward(sec_tan_spec(), x, 12)
        forced = eval_forward(sec_tan_spec(), x, 12, rescale_threshold=10.0)
        assert forced == default


def test_lentz_reference_values():
    report = eval_lentz(xcot_spec(), 1.0, 1e-14, 100)
    assert report.method == "lentz"
    assert report.value == pytest.approx(XCOT_1, rel=1e-13)
    assert report.est_rel_err < 1e-14
    assert report.depth <= 100

    report = eval_lentz(sec_tan_spec(), 0.0, 1e-14, 100)
    assert report.value == 1.0
    assert report.depth <= 2

    report = eval_lentz(sec_tan_spec(), 1.0, 1e-14, 100)
    assert report.value == pytest.approx(SECTAN_1, rel=1e-12)


def test_lentz_no_convergence():
    with pytest.raises(NoConvergence):
        eval_lentz(xcot_spec(), 1.0, 1e-14, 2)


def test_lentz_validates_arguments():
    with pytest.raises(ValueError):
        eval_lentz(xcot_spec(), 1.0, 0.0, 100)
    with pytest.raises(ValueError):
        eval_lentz(xcot_spec(), 1.0, 1e-14, 1)


def test_adaptive_first_probe_at_zero():
    report = eval_adaptive(sec_tan_spec(), 0.0, 1e-12)
    assert report.value == 1.0
    assert report.depth == 8
    assert report.est_rel_err == 0.0
    assert report.method == "backward"


def test_adaptive_reference_values():
    report = eval_adaptive(xcot_spec(), 0.5, 1e-12)
    assert report.value == pytest.approx(0.5 / math.tan(0.5), rel=1e-12)
    assert report.depth <= 64

    report = eval_adaptive(sec_tan_spec(), -0.25, 1e-12)
    reference = (1 + math.sin(-0.25)) / math.cos(-0.25)
    assert report.value == pytest.approx(reference, rel=1e-12)


def test_adaptive_no_convergence_when_capped():
    with pytest.raises(NoConvergence):
        eval_adaptive(sec_tan_spec(), 1.0, 1e-12, max_depth=4)


def test_adaptive_validates_target():
    with pytest.raises(ValueError):
        eval_adaptive(xcot_spec(), 1.0, 0.0)


def test_deterministic_reruns():
    first = eval_adaptive(sec_tan_spec(), 1.1, 1e-12)
    second = eval_adaptive(sec_tan_spec(), 1.1, 1e-12)
    assert first == second
