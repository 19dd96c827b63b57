import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from oddsymp.partitions import Partition, partitions_upto
from oddsymp.reptheory import (
    CENTER_ORDER, dim_gl, dim_odd, dim_sp, filtration_dimension_check,
    h0_line_bundle, interleavings, lie_algebra_dim, lie_dimension_check,
    shtepin_factors, wedge_odd_dim,
)
from oddsymp.tensors import trace_free_schur_dim


def count_ssyt(shape, m):
    """Semistandard tableaux of the given shape with entries 1..m, by brute force."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for values in itertools.product(range(1, m + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        if all(
            (j == 0 or t[(i, j - 1)] <= t[(i, j)]) and (i == 0 or t[(i - 1, j)] < t[(i, j)])
            for i, j in cells
        ):
            count += 1
    return count


# --- GL and Sp -------------------------------------------------------------


def test_dim_gl_examples():
    assert dim_gl((1,), 5) == 5
    assert dim_gl((1, 1), 3) == 3
    assert dim_gl((2, 1), 3) == 8
    assert dim_gl((1, 1, 1, 1), 3) == 0


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_dim_gl_counts_tableaux(m):
    for lam in partitions_upto(4):
        assert dim_gl(lam, m) == count_ssyt(lam, m)


def test_dim_gl_negative_weights():
    # det^{-1} and the dual standard module
    assert dim_gl((-1, -1, -1), 3) == 1
    assert dim_gl((0, 0, -1), 3) == 3
    with pytest.raises(ValueError):
        dim_gl((0, 1), 2)


def test_dim_sp_examples():
    assert dim_sp((1,), 1) == 2
    assert dim_sp((1, 1), 2) == 5
    assert dim_sp((2,), 1) == 3
    assert dim_sp((1, 1, 1), 2) == 0


@pytest.mark.parametrize("n", [1, 2])
def test_dim_sp_against_tensor_oracle(n):
    for lam in partitions_upto(4):
        assert dim_sp(lam, n) == trace_free_schur_dim(lam, 2 * n)


# --- odd modules -----------------------------------------------------------


def test_interleaving_examples():
    assert interleavings((1, 1), 1) == [(1,)]
    assert interleavings((2, 1), 1) == [(2,), (1,)]
    assert interleavings((), 3) == [()]
    with pytest.raises(ValueError):
        interleavings((1, 1, 1), 1)


def test_dim_odd_examples():
    assert dim_odd((1, 1), 1) == trace_free_schur_dim((1, 1), 3) == 2
    assert dim_odd((2, 1), 1) == trace_free_schur_dim((2, 1), 3) == 5
    assert dim_odd((1, 1), 2) == comb(5, 2) - comb(5, 0) == 9


@pytest.mark.parametrize("n", [1, 2])
def test_dim_odd_against_tensor_oracle(n):
    for lam in partitions_upto(4):
        assert dim_odd(lam, n) == trace_free_schur_dim(lam, 2 * n + 1)


def test_dim_odd_vanishes_for_long_partitions():
    assert dim_odd((1, 1, 1), 1) == 0
    assert dim_odd((2, 1, 1, 1), 2) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dim_odd_on_columns(n):
    for k in range(1, n + 2):
        assert dim_odd((1,) * k, n) == comb(2 * n + 1, k) - (comb(2 * n + 1, k - 2) if k >= 2 else 0)
        assert dim_odd((1,) * k, n) == wedge_odd_dim(k, n)


# --- filtration ------------------------------------------------------------


def test_shtepin_examples():
    assert shtepin_factors((1,), 1) == [((1,), 0), ((), -1)]
    assert shtepin_factors((), 2) == [((), 0)]
    # 1 >= mu_1 >= 1 >= mu_2 >= 0
    assert shtepin_factors((1, 1), 1) == [((1, 1), 0), ((1,), -1)]


def test_filtration_examples():
    assert filtration_dimension_check((1,), 1)
    assert dim_odd((1,), 1) + dim_odd((), 1) == 4
    assert filtration_dimension_check((), 1)
    assert filtration_dimension_check((1, 1), 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_filtration_identity(n):
    for lam in partitions_upto(5, max_len=n + 1):
        assert filtration_dimension_check(lam, n)


@given(st.integers(1, 3).flatmap(
    lambda n: st.tuples(st.just(n), st.sampled_from(partitions_upto(6, max_len=n + 1)))))
def test_shtepin_patterns_interleave(case):
    n, lam = case
    for mu, shift in shtepin_factors(lam, n):
        p = lam.padded(n + 1)
        q = Partition(mu).padded(n + 1)
        assert all(p[i] >= q[i] for i in range(n + 1))
        assert all(q[i] >= p[i + 1] for i in range(n))
        assert shift == -(lam.weight - mu.weight)


# --- Borel-Weil and Lie algebras ------------------------------------------


def test_h0_examples():
    assert h0_line_bundle((1, 1), 3) == 2
    assert h0_line_bundle((1,), 4) == 4
    assert h0_line_bundle((1, 1), 5) == 9
    with pytest.raises(ValueError):
        h0_line_bundle((1, 1, 1), 3)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_h0_even_is_symplectic(n):
    for lam in partitions_upto(5, max_len=n + 1):
        assert h0_line_bundle(lam, 2 * n + 2) == dim_sp(lam, n + 1)


@pytest.mark.parametrize("n,expected", [(1, (3, 6)), (2, (10, 15)), (3, (21, 28))])
def test_lie_dimensions(n, expected):
    dims = lie_dimension_check(n)
    assert (dims.sp_even, dims.sp_odd) == expected
    assert dims.center_order == CENTER_ORDER == 2


def test_lie_dimension_of_degenerate_forms():
    # C^1 carries the zero form: every endomorphism preserves it
    assert lie_algebra_dim(1) == 1
    with pytest.raises(ValueError):
        lie_dimension_check(5)
