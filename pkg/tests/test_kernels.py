import random

import pytest

from rwhitney import kernels
from rwhitney.poly import MPoly

BACKENDS = kernels.available_backends()


def _brute_mul(a, b):
    out = {}
    for ka, na in a.items():
        for kb, nb in b.items():
            out[ka + kb] = out.get(ka + kb, 0) + na * nb
    return {k: v for k, v in out.items() if v}


def _random_terms(rng, n, big=False):
    limit = 10**30 if big else 50
    return {rng.randrange(0, 1 << 20): rng.randint(-limit, limit) or 1 for _ in range(n)}


def test_compiled_backend_built():
    # the extension is optional at install time, but this checkout builds it
    assert "compiled" in BACKENDS


@pytest.mark.parametrize("backend", sorted(BACKENDS))
@pytest.mark.parametrize("big", [False, True])
def test_mul_matches_brute_force(backend, big):
    mod = BACKENDS[backend]
    rng = random.Random(5)
    for _ in range(20):
        a = _random_terms(rng, rng.randint(0, 12), big)
        b = _random_terms(rng, rng.randint(0, 12), big)
        assert mod.mul_terms(a, b) == _brute_mul(a, b)


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_mul_word_overflow_falls_back(backend):
    mod = BACKENDS[backend]
    a = {0: 2**61, 1: 3}
    b = {0: 4, 1: 2**61}
    assert mod.mul_terms(a, b) == _brute_mul(a, b)
    # each product fits a word but the accumulated sum does not
    c = {0: 2**61 - 1, 1: 2**61 - 1}
    d = {1: 2, 0: 2}
    assert mod.mul_terms(c, d) == _brute_mul(c, d)


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_mul_cancellation_drops_zero(backend):
    mod = BACKENDS[backend]
    # (1 + t)(1 - t) = 1 - t^2
    assert mod.mul_terms({0: 1, 1: 1}, {0: 1, 1: -1}) == {0: 1, 2: -1}


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_add_terms(backend):
    mod = BACKENDS[backend]
    assert mod.add_terms({0: 1, 1: 2}, 3, {1: 3, 2: 5}, -2) == {0: 3, 2: -10}
    assert mod.add_terms({}, 1, {4: 1}, 1) == {4: 1}
    assert mod.add_terms({4: 1}, 1, {4: -1}, 1) == {}


def test_backends_agree_on_polynomials(monkeypatch):
    p = MPoly.parse("q + 2r - s/3 + 1")
    results = []
    for name, mod in BACKENDS.items():
        monkeypatch.setattr(kernels, "mul_terms", mod.mul_terms)
        monkeypatch.setattr(kernels, "add_terms", mod.add_terms)
        results.append(p**7 * (p - 1) ** 3)
    assert all(res == results[0] for res in results)
