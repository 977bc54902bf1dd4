import pytest
from hypothesis import settings

settings.register_profile("ci", derandomize=True, max_examples=50)
settings.load_profile("ci")

from fractions import Fraction

from cyclohecke.hecke import AlgebraContext, symbolic_context
from cyclohecke.rings import RationalDomain
from cyclohecke.suites import generic_contexts

_SYMBOLIC_CACHE = {}
_SAMPLED_CACHE = {}


@pytest.fixture(scope="session")
def symbolic_ctx():
    """Session-cached fully symbolic contexts (coefficients in the fraction
    field of Laurent polynomials in q, Q_i)."""
    def get(n, r):
        if (n, r) not in _SYMBOLIC_CACHE:
            _SYMBOLIC_CACHE[(n, r)] = symbolic_context(n, r)
        return _SYMBOLIC_CACHE[(n, r)]
    return get


@pytest.fixture(scope="session")
def sampled_ctxs():
    """Session-cached random rational specializations (3 per (n, r), seed 0)."""
    def get(n, r, samples=3, seed=0):
        key = (n, r, samples, seed)
        if key not in _SAMPLED_CACHE:
            _SAMPLED_CACHE[key] = generic_contexts(n, r, seed, samples)
        return _SAMPLED_CACHE[key]
    return get


@pytest.fixture(scope="session")
def rational_ctx():
    """Session-cached contexts at explicit rational parameters."""
    cache = {}

    def get(n, r, q, Qs):
        key = (n, r, Fraction(q), tuple(Fraction(Q) for Q in Qs))
        if key not in cache:
            cache[key] = AlgebraContext(
                n, r, RationalDomain(), Fraction(q),
                [Fraction(Q) for Q in Qs])
        return cache[key]
    return get
