import json
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macpoly.mpoly import (ExactDivisionError, MPoly, RationalForm,
                           VariableMismatchError, divided_difference,
                           exact_div_xfree, specialize, swap_vars,
                           t_multinomial, t_pochhammer)

N = 2  # default variable count for random polys


def mono(xe, qe=0, te=0, c=1, nvars=N):
    return MPoly.monomial(nvars, xe, qe, te, c)


@st.composite
def polys(draw, nvars=N, xfree=False, max_terms=4):
    nterms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(nterms):
        xe = tuple(0 if xfree else draw(st.integers(0, 2)) for _ in range(nvars))
        key = xe + (draw(st.integers(0, 2)), draw(st.integers(0, 2)))
        terms[key] = draw(st.integers(-4, 4))
    return MPoly(nvars, terms)


def test_construction_drops_zeros():
    p = MPoly(1, {(1, 0, 0): 0, (0, 1, 0): 2})
    assert len(p) == 1
    assert p.coefficient((0,), 1, 0) == 2


def test_width_mismatch():
    with pytest.raises(VariableMismatchError):
        MPoly(2, {(1, 0, 0): 1})
    with pytest.raises(VariableMismatchError):
        MPoly.x(2, 1) + MPoly.x(3, 1)


def test_additive_inverse():
    x1 = MPoly.x(2, 1)
    assert (x1 + (-x1)).is_zero()


def test_q_plus_t_two_terms():
    p = MPoly.q(0) + MPoly.t(0)
    assert len(p) == 2


def test_difference_of_squares():
    one, t = MPoly.one(0), MPoly.t(0)
    assert (one - t) * (one + t) == one - t ** 2


def test_pochhammer_small():
    assert t_pochhammer(0) == MPoly.one(0)
    one, t = MPoly.one(0), MPoly.t(0)
    assert t_pochhammer(2) == one - t - t ** 2 + t ** 3
    assert t_pochhammer(3) == (one - t) * (one - t ** 2) * (one - t ** 3)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys(), polys(xfree=True))
def test_exact_div_roundtrip(p, d):
    if d.is_zero():
        return
    assert exact_div_xfree(p * d, d) == p


def test_exact_div_examples():
    one, t = MPoly.one(1), MPoly.t(1)
    x1 = MPoly.x(1, 1)
    assert exact_div_xfree(x1 * (one - t ** 2), one - t) == x1 * (one + t)
    with pytest.raises(ExactDivisionError):
        exact_div_xfree(MPoly.q(1), one - t)


def test_exact_div_rejects_x_divisor():
    with pytest.raises(ValueError):
        exact_div_xfree(MPoly.x(1, 1), MPoly.x(1, 1))


def test_divided_difference_examples():
    x1, x2 = MPoly.x(2, 1), MPoly.x(2, 2)
    assert divided_difference(x1, 1) == MPoly.one(2)
    assert divided_difference(x1 * x2, 1).is_zero()
    assert divided_difference(x1 ** 2, 1) == x1 + x2


@given(polys())
def test_divided_difference_reconstructs(p):
    x1, x2 = MPoly.x(2, 1), MPoly.x(2, 2)
    d = divided_difference(p, 1)
    assert (x1 - x2) * d == p - swap_vars(p, 1, 2)


def test_specialize():
    p = MPoly.q(2) * MPoly.x(2, 1) + MPoly.t(2) * MPoly.x(2, 2)
    assert specialize(p, {"q": 0, "t": 0}).is_zero()
    assert specialize(p, {"q": 1, "t": 1}) == MPoly.x(2, 1) + MPoly.x(2, 2)
    # simultaneous swap
    qt = MPoly.q(0) * MPoly.t(0) ** 2
    assert specialize(qt, {"q": "t", "t": "q"}) == MPoly.q(0) ** 2 * MPoly.t(0)
    # variable-to-variable collapse
    assert specialize(MPoly.x(2, 1), {"x1": "x2"}) == MPoly.x(2, 2)


def test_t_multinomial_examples():
    assert t_multinomial(3, [3]) == MPoly.one(0)
    t = MPoly.t(0)
    expected = 1 + t + 2 * t ** 2 + t ** 3 + t ** 4
    assert t_multinomial(4, [2, 2]) == expected
    with pytest.raises(ValueError):
        t_multinomial(4, [2, 1])


def _inversions(word):
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word))
               if word[i] > word[j])


@pytest.mark.parametrize("parts", [
    (1,), (1, 1), (2,), (2, 1), (1, 1, 1), (2, 2), (3, 1), (2, 1, 1),
    (1, 1, 1, 1), (3, 2), (2, 2, 1), (4, 1), (2, 2, 2), (3, 2, 1),
])
def test_t_multinomial_counts_inversions(parts):
    # sum of t^inv over distinct rearrangements of the sorted word
    n = sum(parts)
    word = tuple(v for v, m in enumerate(parts, start=1) for _ in range(m))
    terms = {}
    for w in set(permutations(word)):
        key = (0, _inversions(w))
        terms[key] = terms.get(key, 0) + 1
    assert t_multinomial(n, parts) == MPoly(0, terms)


def test_t_multinomial_at_one():
    from math import factorial
    for n, parts in [(4, (2, 2)), (5, (3, 1, 1)), (6, (2, 2, 2))]:
        val = specialize(t_multinomial(n, parts), {"t": 1})
        expect = factorial(n)
        for m in parts:
            expect //= factorial(m)
        assert val == MPoly.const(0, expect)


def test_sorted_terms_graded_lex():
    p = MPoly.x(2, 2) + MPoly.x(2, 1) ** 2 + MPoly.q(2) + MPoly.one(2)
    keys = [k for k, _ in p.sorted_terms()]
    assert keys == sorted(keys, key=lambda k: (sum(k), k))
    assert keys[0] == (0, 0, 0, 0)


def test_json_roundtrip():
    p = MPoly(2, {(1, 0, 2, 0): 3, (0, 1, 0, 1): -7 ** 30})
    blob = json.dumps(p.to_json_dict())
    assert MPoly.from_json_dict(json.loads(blob)) == p
    data = p.to_json_dict()
    assert all(isinstance(rec["c"], str) for rec in data["terms"])


def test_text_and_latex():
    p = MPoly.x(2, 1) * MPoly.t(2) - 2 * MPoly.q(2)
    assert p.text() == "-2*q + x1*t"
    assert p.latex() == "-2 q + x_{1} t"
    assert MPoly.zero(1).text() == "0"


def test_rational_form():
    one, t = MPoly.one(0), MPoly.t(0)
    a = RationalForm(one - t ** 2, one - t)
    b = RationalForm(one + t, one)
    assert a == b
    assert a == one + t
    with pytest.raises(ValueError):
        RationalForm(one, MPoly.x(1, 1))
    with pytest.raises(ZeroDivisionError):
        RationalForm(one, MPoly.zero(0))


@settings(max_examples=30)
@given(polys())
def test_pow_matches_repeated_mul(p):
    assert p ** 3 == p * p * p
