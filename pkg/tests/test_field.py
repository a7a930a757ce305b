import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracecodes import FqElement, ParameterError, cyclotomic_class, eta_p, eta_q, linearized_solve, make_field, trace
from tracecodes.field import is_prime

from conftest import all_vectors, poly_mul_mod, poly_pow_mod, poly_trace

SMALL_FIELDS = [(3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (7, 1), (7, 2), (11, 2)]


def _poly_rem(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        a.pop()
    return a


def _irreducible_by_trial_division(mod, p):
    e = len(mod) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(mod, list(low) + [1], p)):
                return False
    return True


def _order(g, mod, p):
    e = len(mod) - 1
    one = tuple([1] + [0] * (e - 1))
    x, k = tuple(g), 1
    while x != one:
        x = poly_mul_mod(x, g, mod, p)
        k += 1
    return k


# -- construction -----------------------------------------------------------

def test_prime_field_f3():
    fp = make_field(3, 1)
    assert fp.q == 3
    assert fp.modulus == (0, 1)  # x itself is the smallest monic linear
    assert fp.generator.coeffs == (2,)
    assert _order((2,), fp.modulus, 3) == 2


@pytest.mark.parametrize("p,e", [(3, 2), (3, 4), (7, 2), (11, 2)])
def test_modulus_is_smallest_irreducible(p, e):
    fp = make_field(p, e)
    assert _irreducible_by_trial_division(fp.modulus, p)
    for low in itertools.product(range(p), repeat=e):
        cand = tuple(low) + (1,)
        if cand == fp.modulus:
            break
        assert not _irreducible_by_trial_division(cand, p)


@pytest.mark.parametrize("p,e", [(3, 2), (7, 2), (3, 4)])
def test_generator_is_smallest_primitive(p, e):
    fp = make_field(p, e)
    q = p ** e
    assert _order(fp.generator.coeffs, fp.modulus, p) == q - 1
    for cand in itertools.product(range(p), repeat=e):
        if cand == fp.generator.coeffs:
            break
        if any(cand):
            assert _order(cand, fp.modulus, p) < q - 1


def test_f9_modulus_exhaustive_scan():
    irreducible = [v + (1,) for v in all_vectors(3, 2) if _irreducible_by_trial_division(v + (1,), 3)]
    assert len(irreducible) == 3  # (9 - 3) / 2 monic irreducible quadratics
    assert make_field(3, 2).modulus == irreducible[0]


def test_deterministic_and_cached():
    assert make_field(7, 2) is make_field(7, 2)
    a, b = make_field.__wrapped__(7, 2), make_field.__wrapped__(7, 2)
    assert a == b
    assert np.array_equal(a._exp, b._exp)


@pytest.mark.parametrize("p,e", [(4, 2), (2, 3), (9, 1), (3, 0), (3, -1)])
def test_bad_parameters(p, e):
    with pytest.raises(ParameterError):
        make_field(p, e)


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_multiplication_matches_polynomial_arithmetic(p, e):
    fp = make_field(p, e)
    rng = random.Random(p * 100 + e)
    for _ in range(200):
        a, b = rng.randrange(fp.q), rng.randrange(fp.q)
        expect = poly_mul_mod(fp.element(a).coeffs, fp.element(b).coeffs, fp.modulus, p)
        assert fp.element(fp.mul(a, b)).coeffs == expect
        expect_add = tuple((x + y) % p for x, y in zip(fp.element(a).coeffs, fp.element(b).coeffs))
        assert fp.element(fp.add(a, b)).coeffs == expect_add


def test_is_prime():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


# -- trace ------------------------------------------------------------------

def test_trace_examples(f9):
    assert trace(FqElement((0, 0)), f9) == 0
    assert trace(f9.const(1), f9) == 2  # e * 1 mod 3
    g = f9.generator
    g3 = poly_pow_mod(g.coeffs, 3, f9.modulus, 3)
    s = tuple((x + y) % 3 for x, y in zip(g.coeffs, g3))
    assert s[1] == 0
    assert trace(g, f9) == s[0]


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_trace_table_matches_frobenius_sum(p, e):
    fp = make_field(p, e)
    idx = range(fp.q) if fp.q <= 81 else random.Random(1).sample(range(fp.q), 60)
    for a in idx:
        assert fp.tr(a) == poly_trace(fp.element(a).coeffs, fp.modulus, p)


@pytest.mark.parametrize("p,e", [(3, 2), (3, 4), (7, 2), (11, 2)])
def test_trace_linearity_exhaustive(p, e):
    fp = make_field(p, e)
    xs = fp.elements()
    tr = fp.tr(xs)
    for y in range(fp.q):
        for c in range(p):
            lhs = fp.tr(fp.add(xs, fp.scale(c, y)))
            assert np.array_equal(lhs, (tr + c * fp.tr(y)) % p)


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_trace_frobenius_invariant_and_balanced(p, e):
    fp = make_field(p, e)
    xs = fp.elements()
    assert np.array_equal(fp.tr(fp.pow(xs, p)), fp.tr(xs))
    counts = np.bincount(fp.tr(xs), minlength=p)
    assert counts.tolist() == [fp.q // p] * p


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 3 ** 8 - 1), st.integers(0, 3 ** 8 - 1), st.integers(0, 2))
def test_trace_linearity_random_large_field(x, y, c):
    fp = make_field(3, 8)
    assert fp.tr(fp.add(x, fp.scale(c, y))) == (fp.tr(x) + c * fp.tr(y)) % 3


# -- characters and classes ---------------------------------------------------

def test_eta_p_examples():
    assert eta_p(0, 7) == 0
    assert eta_p(2, 7) == 1
    for p in (3, 7, 11, 19, 23):
        assert eta_p(p - 1, p) == -1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29])
def test_eta_p_by_squares(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(1, p):
        assert eta_p(a, p) == (1 if a in squares else -1)
    for a in range(1, p):
        for b in range(1, p):
            assert eta_p(a * b, p) == eta_p(a, p) * eta_p(b, p)
    assert (eta_p(p - 1, p) == -1) == (p % 4 == 3)


@pytest.mark.parametrize("p,e", [(3, 2), (7, 2), (3, 4), (3, 3)])
def test_eta_q(p, e):
    fp = make_field(p, e)
    g = fp.generator
    assert eta_q(fp.element(0), fp) == 0
    assert eta_q(g, fp) == -1
    assert eta_q(fp.element(fp.mul(fp.index(g), fp.index(g))), fp) == 1
    squares = {fp.mul(x, x) for x in range(1, fp.q)}
    vals = {a: eta_q(fp.element(a), fp) for a in range(1, fp.q)}
    for a in range(1, fp.q):
        assert vals[a] == (1 if a in squares else -1)
    rng = random.Random(0)
    for _ in range(300):
        a, b = rng.randrange(1, fp.q), rng.randrange(1, fp.q)
        assert vals[fp.mul(a, b)] == vals[a] * vals[b]


def test_cyclotomic_classes():
    assert cyclotomic_class(0, 3) == {1} and cyclotomic_class(1, 3) == {2}
    assert cyclotomic_class(0, 7) == {1, 2, 4} and cyclotomic_class(1, 7) == {3, 5, 6}
    for p in (3, 5, 7, 11, 13, 19, 23):
        c0, c1 = cyclotomic_class(0, p), cyclotomic_class(1, p)
        assert not c0 & c1
        assert c0 | c1 == set(range(1, p))
        assert len(c0) == len(c1) == (p - 1) // 2
    with pytest.raises(ParameterError):
        cyclotomic_class(2, 7)


# -- linearized equations -----------------------------------------------------

def _image_table(fp, a, l):
    """L(X) = a^{p^l} X^{p^{2l}} + a X for every X, by direct evaluation."""
    xs = fp.elements()
    return fp.add(fp.mul(fp.frob(a, l), fp.frob(xs, 2 * l)), fp.mul(a, xs))


def _check_against_exhaustive(fp, a, l, betas):
    img = _image_table(fp, a, l)
    for b in betas:
        rhs = fp.neg(fp.frob(b, l))
        truth = set(np.nonzero(img == rhs)[0].tolist())
        sol = linearized_solve(fp.element(a), l, fp.element(b), fp)
        assert sol.solvable == bool(truth)
        assert sol.count == len(truth)
        if sol.solvable:
            x0 = fp.index(sol.representative)
            assert x0 in truth
            for k in sol.kernel:
                assert fp.add(x0, fp.index(k)) in truth
                assert img[fp.index(k)] == 0


@pytest.mark.parametrize("p,e,l", [(3, 2, 1), (3, 4, 1), (3, 4, 2), (3, 4, 3), (7, 2, 1)])
def test_linearized_solve_exhaustive(p, e, l):
    fp = make_field(p, e)
    for a in range(1, fp.q):
        _check_against_exhaustive(fp, a, l, range(fp.q))


@pytest.mark.parametrize("p,e,l", [(3, 8, 1), (3, 8, 2), (3, 8, 4), (11, 2, 1), (3, 6, 1)])
def test_linearized_solve_sampled(p, e, l):
    fp = make_field(p, e)
    rng = random.Random(p + e + l)
    for a in rng.sample(range(1, fp.q), 6):
        _check_against_exhaustive(fp, a, l, rng.sample(range(fp.q), 40))


def test_linearized_examples(f9, f81):
    sol = linearized_solve(f9.const(1), 1, f9.element(0), f9)
    assert sol.unique and f9.index(sol.representative) == 0
    for b in range(9):
        assert linearized_solve(f9.const(1), 1, f9.element(b), f9).unique
    sol = linearized_solve(f81.const(1), 1, f81.element(0), f81)
    assert sol.kernel_size == 9
    targets = {fp_b for fp_b in range(81) if linearized_solve(f81.const(1), 1, f81.element(fp_b), f81).solvable}
    rhs = {f81.neg(f81.frob(b, 1)) for b in targets}
    assert len(rhs) == 9
    with pytest.raises(ParameterError):
        linearized_solve(f9.element(0), 1, f9.element(1), f9)


@pytest.mark.parametrize("p,e", [(3, 2), (3, 4), (5, 2), (7, 2), (3, 3)])
def test_kernel_size_rule(p, e):
    fp = make_field(p, e)
    for l in range(1, 2 * e + 1):
        s = np.gcd(l, e)
        m = e // 2
        for a in range(1, fp.q):
            kernel = int(np.count_nonzero(_image_table(fp, a, l) == 0))
            special = False
            if (e // s) % 2 == 0:
                target = 1 if (m // s) % 2 == 0 else p - 1
                special = fp.pow(a, (fp.q - 1) // (p ** s + 1)) == target
            assert kernel == (p ** (2 * s) if special else 1)
            assert linearized_solve(fp.element(a), l, fp.element(0), fp).kernel_size == kernel
