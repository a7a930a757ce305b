import itertools

import pytest

from tracecodes import make_field


def poly_mul_mod(a, b, mod, p):
    """Schoolbook product of coefficient lists reduced by a monic modulus.

    Independent of the package's table-driven arithmetic; used as an oracle.
    """
    e = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for j in range(e + 1):
                prod[k - e + j] = (prod[k - e + j] - c * mod[j]) % p
    out = prod[:e] + [0] * max(0, e - len(prod))
    return tuple(out)


def poly_pow_mod(a, n, mod, p):
    e = len(mod) - 1
    result = tuple([1] + [0] * (e - 1))
    base = tuple(a)
    while n:
        if n & 1:
            result = poly_mul_mod(result, base, mod, p)
        base = poly_mul_mod(base, base, mod, p)
        n >>= 1
    return result


def poly_trace(a, mod, p):
    """Tr(a) = sum_k a^{p^k} by explicit powering."""
    e = len(mod) - 1
    acc = [0] * e
    for k in range(e):
        t = poly_pow_mod(a, p ** k, mod, p)
        acc = [(x + y) % p for x, y in zip(acc, t)]
    assert all(c == 0 for c in acc[1:]), "trace is not in the prime field"
    return acc[0]


def all_vectors(p, e):
    return [tuple(v) for v in itertools.product(range(p), repeat=e)]


@pytest.fixture(scope="session")
def f9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def f81():
    return make_field(3, 4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
