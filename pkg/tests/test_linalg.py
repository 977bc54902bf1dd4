import random
from fractions import Fraction

import pytest

from cyclohecke.linalg import (
    RowSpace,
    coordinates_in,
    kernel_basis,
    rank,
    solve_linear,
)
from cyclohecke.rings import (
    CyclotomicDomain,
    LaurentFractionDomain,
    NotInvertibleError,
    RationalDomain,
    UnsupportedDomainError,
)

DOM = RationalDomain()


def frac_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


class TestKernel:
    def test_identity_has_empty_kernel(self):
        assert kernel_basis(frac_matrix([[1, 0], [0, 1]]), DOM) == []

    def test_rank_one_matrix(self):
        basis = kernel_basis(frac_matrix([[1, 1], [2, 2]]), DOM)
        assert len(basis) == 1
        v = basis[0]
        # (1, -1) up to scale
        assert v[0] == -v[1] and v[0] != 0

    def test_cyclotomic_dependent_rows(self):
        dom = CyclotomicDomain(4)
        i = dom.zeta(1)
        matrix = [[dom.one, i], [i, dom.from_int(-1)]]
        basis = kernel_basis(matrix, dom)
        assert len(basis) == 1
        v = basis[0]
        for row in matrix:
            acc = dom.zero
            for a, x in zip(row, v):
                acc = acc + a * x
            assert dom.is_zero(acc)

    def test_fraction_domain_rejected(self):
        dom = LaurentFractionDomain(1)
        with pytest.raises(UnsupportedDomainError):
            kernel_basis([[dom.one]], dom)

    def test_rank_nullity_and_exactness_random(self):
        rng = random.Random(11)
        for _ in range(60):
            nrows = rng.randint(1, 5)
            ncols = rng.randint(1, 5)
            matrix = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                       for _ in range(ncols)] for _ in range(nrows)]
            basis = kernel_basis(matrix, DOM)
            assert rank(matrix, DOM) + len(basis) == ncols
            for v in basis:
                for row in matrix:
                    assert sum(a * x for a, x in zip(row, v)) == 0


class TestSolve:
    def test_round_trip(self):
        rng = random.Random(13)
        for _ in range(40):
            n = rng.randint(1, 5)
            matrix = [[Fraction(rng.randint(-5, 5)) for _ in range(n)]
                      for _ in range(n)]
            if rank(matrix, DOM) < n:
                continue
            x = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
            rhs = [sum(matrix[i][j] * x[j] for j in range(n))
                   for i in range(n)]
            assert solve_linear(matrix, rhs, DOM) == x

    def test_inconsistent_system(self):
        with pytest.raises(NotInvertibleError):
            solve_linear(frac_matrix([[1], [1]]),
                         [Fraction(1), Fraction(2)], DOM)

    def test_coordinates_in(self):
        cols = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
        coords = coordinates_in(cols, [Fraction(3), Fraction(2)], DOM)
        assert coords == [Fraction(1), Fraction(2)]


class TestRowSpace:
    def test_incremental_rank(self):
        rs = RowSpace(DOM, 3)
        assert rs.add([Fraction(1), Fraction(1), Fraction(0)])
        assert not rs.add([Fraction(2), Fraction(2), Fraction(0)])
        assert rs.add([Fraction(0), Fraction(0), Fraction(5)])
        assert rs.rank == 2
        assert rs.contains([Fraction(3), Fraction(3), Fraction(-1)])
        assert not rs.contains([Fraction(1), Fraction(0), Fraction(0)])
        assert rs.non_pivot_columns() == [1]
