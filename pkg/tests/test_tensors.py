import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oddsymp.linalg import SparseEchelon, kernel_and_rank
from oddsymp.partitions import partitions_upto
from oddsymp.reptheory import dim_gl
from oddsymp.tensors import (
    OddSymplecticForm, apply_contraction, contraction_matrix, schur_subspace,
    symmetrizer_scalar, trace_free_schur_dim, young_symmetrizer,
)


def test_form_basics():
    J = OddSymplecticForm(5).gram()
    assert all(J[i, j] == -J[j, i] for i in range(5) for j in range(5))
    rank, kernel = kernel_and_rank(J)
    assert rank == 4
    assert kernel == [(1, 0, 0, 0, 0)]  # spanned by e_0
    assert OddSymplecticForm(4).pair(0, 3) == 1


def test_contraction_examples():
    form = OddSymplecticForm(3)
    r, _ = kernel_and_rank(contraction_matrix(1, 2, 2, form))
    assert r == 1
    # e_1 (x) e_2 + e_2 (x) e_1 is symmetric; e_1 (x) e_1b pairs to 1
    assert apply_contraction({(1, 2): 1, (2, 1): 1}, 1, 2, form) == {}
    assert apply_contraction({(1, 2): 1}, 1, 2, form) == {(): 1}


def test_contraction_bounds():
    with pytest.raises(ValueError):
        contraction_matrix(2, 2, 3, OddSymplecticForm(3))
    with pytest.raises(ValueError):
        contraction_matrix(1, 2, 5, OddSymplecticForm(3))


@pytest.mark.parametrize("shape,N,dim", [((1, 1), 3, 3), ((2,), 3, 6), ((2, 1), 3, 8)])
def test_schur_subspace_examples(shape, N, dim):
    assert len(schur_subspace(shape, N)) == dim


@pytest.mark.parametrize("N", [2, 3, 4])
def test_schur_subspace_is_weyl_dimension(N):
    for lam in partitions_upto(4):
        assert len(schur_subspace(lam, N)) == dim_gl(lam, N)


@pytest.mark.parametrize("shape,N,dim", [((1, 1), 3, 2), ((2,), 3, 6), ((2, 1, 1), 3, 0)])
def test_trace_free_examples(shape, N, dim):
    assert trace_free_schur_dim(shape, N) == dim


def test_caps():
    with pytest.raises(ValueError):
        schur_subspace((3, 2), 3)
    with pytest.raises(ValueError):
        schur_subspace((1,), 8)


shapes = st.sampled_from([lam for lam in partitions_upto(4) if lam])
letters = st.integers(0, 2)


@settings(max_examples=40, deadline=None)
@given(shapes, st.data())
def test_symmetrizer_quasi_idempotent(shape, data):
    idx = tuple(data.draw(letters) for _ in range(shape.weight))
    once = young_symmetrizer(shape, {idx: Fraction(1)})
    twice = young_symmetrizer(shape, once)
    c = symmetrizer_scalar(shape)
    assert twice == {k: c * v for k, v in once.items()}


@settings(max_examples=20, deadline=None)
@given(shapes, st.data())
def test_other_tableau_fillings_give_same_dimension(shape, data):
    # conjugating the symmetrizer by a slot permutation changes the tableau, not the image size
    perm = data.draw(st.permutations(range(shape.weight)))
    span = SparseEchelon()
    for idx in itertools.product(range(3), repeat=shape.weight):
        image = young_symmetrizer(shape, {tuple(idx[p] for p in perm): Fraction(1)})
        span.add({tuple(k[perm.index(i)] for i in range(len(k))): v for k, v in image.items()})
    assert len(span) == dim_gl(shape, 3)
