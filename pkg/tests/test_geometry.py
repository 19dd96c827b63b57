import itertools
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from oddsymp.combinatorics import (
    AdmissibleIndex, SignedPermutation, admissible_indices, alphabet_for,
    enumerate_weyl_even, enumerate_weyl_odd, index_leq, length,
)
from oddsymp.geometry import (
    CellState, IntPolynomial, ambient_hyperplane_index, cell_dimension, cells,
    echelon_pattern, even_flag_poincare_product, flag_manifold_dim,
    hyperplane_interval, incidence_conditions, isotropic_grassmannian_dim,
    odd_flag_poincare_product, poincare_polynomial, schubert_divisor, variety_contains,
)
from oddsymp.tensors import OddSymplecticForm


def points_over_field(pivots, N, q):
    """
    Count isotropic echelon matrices over F_q with the given pivot rows.

    Row r has a 1 at its pivot, zeros right of it and in the columns of
    earlier pivots, and arbitrary entries elsewhere; a cell of dimension d
    has exactly q^d such matrices.
    """
    alph = alphabet_for(N)
    col = {x: c for c, x in enumerate(alph.letters)}
    form = OddSymplecticForm(N)
    slots = []
    for r, p in enumerate(pivots):
        for x in alph.letters:
            if x < p and x not in pivots[:r]:
                slots.append((r, col[x]))
    count = 0
    for values in itertools.product(range(q), repeat=len(slots)):
        rows = [[0] * N for _ in pivots]
        for r, p in enumerate(pivots):
            rows[r][col[p]] = 1
        for (r, c), v in zip(slots, values):
            rows[r][c] = v
        ok = all(
            sum(rows[a][i] * rows[b][j] * form.pair(i, j) for i in range(N) for j in range(N)) % q == 0
            for a in range(len(pivots)) for b in range(a + 1, len(pivots))
        )
        count += ok
    return count


def brute_poly(factors):
    out = [1]
    for a in factors:
        nxt = [0] * (len(out) + a - 1)
        for i, x in enumerate(out):
            for j in range(a):
                nxt[i + j] += x
        out = nxt
    return tuple(out)


# --- echelon patterns ------------------------------------------------------


def test_pattern_even_displayed_matrix():
    pat = echelon_pattern((4, 6, 8), 8)
    assert (pat.free_count, pat.determined_count) == (9, 3)
    assert pat.render().splitlines() == [
        "* * * 1 0 0 0 0",
        "* * * 0 • 1 0 0",
        "* * • 0 • 0 * 1",
    ]


def test_pattern_odd_displayed_matrix():
    pat = echelon_pattern((4, 6, 8), 9)
    assert (pat.free_count, pat.determined_count) == (12, 3)
    assert cell_dimension(AdmissibleIndex.parse("4,6,8", 9)) == 12


def test_pattern_fixed_point_has_no_free_entries():
    pat = echelon_pattern((1, 2, 3), 8)
    assert pat.free_count == 0 and pat.determined_count == 0


@pytest.mark.parametrize("N", [4, 5, 6, 7])
def test_pattern_invariants(N):
    top = N // 2 + N % 2
    for k in range(1, top + 1):
        for I in admissible_indices(k, N):
            pat = echelon_pattern(I.entries, N)
            alph = pat.alphabet
            for r, p in enumerate(I.entries):
                row = dict(zip(alph.letters, pat.grid[r]))
                assert row[p] is CellState.ONE
                assert sum(s is CellState.ONE for s in row.values()) == 1
                assert all(row[c] is CellState.ZERO for c in alph.letters if c > p)
                for later in range(r + 1, k):
                    assert pat.grid[later][list(alph.letters).index(p)] is CellState.ZERO
                for c, s in row.items():
                    if s is CellState.DETERMINED:
                        assert any(alph.bar(q) == c for q in I.entries[:r])


def test_cell_dimension_examples():
    assert cell_dimension(AdmissibleIndex.parse("3,4", 4)) == 3
    assert cell_dimension(SignedPermutation.parse("1b,2", 2)) == 3


@pytest.mark.parametrize("N,k,text", [(4, 2, "3,4"), (5, 2, "0,2"), (5, 2, "3,4"), (6, 2, "4,6"),
                                      (5, 3, "0,2,1b"), (7, 2, "5,6"), (9, 3, "4,6,8")])
def test_cell_dimension_against_finite_field_count(N, k, text):
    I = AdmissibleIndex.parse(text, N)
    q = 2 if N >= 9 else 3
    assert points_over_field(I.entries, N, q) == q ** cell_dimension(I)


@pytest.mark.parametrize("N", [4, 5])
def test_flag_cells_against_finite_field_count(N):
    n = N // 2
    group = enumerate_weyl_odd(n) if N % 2 else enumerate_weyl_even(n)
    for w in group:
        assert points_over_field(w.window, N, 3) == 3 ** cell_dimension(w)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_flag_cell_dimension_is_length_even(n):
    for w in enumerate_weyl_even(n):
        assert cell_dimension(w) == length(w)


@pytest.mark.parametrize("n", [1, 2])
def test_flag_cell_dimension_is_length_odd(n):
    for w in enumerate_weyl_odd(n):
        assert cell_dimension(w) == length(w)


# --- Poincare polynomials --------------------------------------------------


def test_poincare_examples():
    assert poincare_polynomial("flag", 3).coeffs == (1, 2, 1)
    assert poincare_polynomial("flag", 5).coeffs == brute_poly([3, 2, 4]) == (1, 3, 5, 6, 5, 3, 1)
    assert poincare_polynomial("grass", 4, 2).coeffs == (1, 1, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_odd_flag_poincare_product(n):
    P = poincare_polynomial("flag", 2 * n + 1)
    assert P == odd_flag_poincare_product(n)
    assert P.coeffs == brute_poly([n + 1] + [2 * i for i in range(1, n + 1)])
    assert P.degree == n * (n + 1) == flag_manifold_dim(2 * n + 1)
    assert P(1) == 2**n * factorial(n + 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_even_flag_poincare_product(n):
    assert poincare_polynomial("flag", 2 * n) == even_flag_poincare_product(n)


@pytest.mark.parametrize("N", range(2, 10))
def test_grassmannian_poincare_palindromic(N):
    for k in range(1, N // 2 + N % 2 + 1):
        P = poincare_polynomial("grass", N, k)
        assert P.is_palindromic()
        assert P.degree == isotropic_grassmannian_dim(k, N) == k * (N - k) - comb(k, 2)


@pytest.mark.parametrize("N,k", [(5, 1), (5, 2), (5, 3), (7, 2)])
def test_grassmannian_total_points(N, k):
    # sum of all cells = number of isotropic k-spaces over F_q
    q = 2
    total = sum(points_over_field(I.entries, N, q) for I in admissible_indices(k, N))
    assert total == poincare_polynomial("grass", N, k)(q)


def test_int_polynomial_basics():
    p = IntPolynomial((1, 1))
    assert (p * p).coeffs == (1, 2, 1)
    assert (p + p).coeffs == (2, 2)
    assert IntPolynomial((1, 0, 0)).coeffs == (1,)
    assert str(IntPolynomial((1, 2, 1))) == "1 + 2q + q^2"


# --- divisors and the hyperplane interval ----------------------------------


def test_schubert_divisor_examples():
    assert schubert_divisor(2, 9).entries == (6, 8)
    assert schubert_divisor(3, 5).to_str() == "0,2,1b"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unique_divisor(n):
    N = 2 * n + 1
    for k in range(1, n + 2):
        top = isotropic_grassmannian_dim(k, N)
        codim_one = [I for I in cells("grass", N, k) if cell_dimension(I) == top - 1]
        assert codim_one == [schubert_divisor(k, N)]


def test_ambient_hyperplane_index_examples():
    assert ambient_hyperplane_index(2, 3).entries == (5, 6)
    # n = 2: letters 0..5 with bar(i) = 5 - i, so (0, 2b, 1b) = (0, 3, 4)
    assert ambient_hyperplane_index(3, 2).entries == (0, 3, 4)
    assert ambient_hyperplane_index(3, 2).entries == admissible_indices(3, 5)[-1].entries
    assert len(hyperplane_interval(2, 3)) == 18


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hyperplane_interval_order_isomorphic(n):
    for k in range(1, n + 2):
        lower = hyperplane_interval(k, n)
        odd = admissible_indices(k, 2 * n + 1)
        assert [I.entries for I in lower] == [I.entries for I in odd]
        for (a, b), (c, d) in zip(itertools.product(lower, repeat=2), itertools.product(odd, repeat=2)):
            assert index_leq(a, b) == index_leq(c, d)


def test_variety_contains():
    I, J = AdmissibleIndex.parse("1,2", 5), AdmissibleIndex.parse("0,3", 5)
    assert variety_contains(AdmissibleIndex.parse("0,1", 5), I)
    assert not variety_contains(J, I)
    with pytest.raises(TypeError):
        variety_contains(I, SignedPermutation.parse("1,2", 2))


# --- incidence conditions --------------------------------------------------


def test_incidence_cell_example():
    conds = incidence_conditions(AdmissibleIndex.parse("0,2", 5))
    assert [(c.flag_level, c.bound) for c in conds] == [(0, 1), (1, 1), (2, 2), (3, 2), (4, 2)]
    assert all(c.relation == "=" for c in conds)


def test_incidence_identity_flag():
    w = SignedPermutation.parse("1,2,3", 3)
    for c in incidence_conditions(w):
        assert c.bound == min(c.subspace_dim, c.flag_level)


def test_incidence_closure_example():
    conds = incidence_conditions(AdmissibleIndex.parse("4,6,8", 9), closure=True)
    assert [(c.flag_level, c.bound, c.relation) for c in conds] == [(4, 1, ">="), (6, 2, ">="), (8, 3, ">=")]


@given(st.sampled_from(admissible_indices(3, 7)), st.sampled_from(admissible_indices(3, 7)))
def test_closure_conditions_describe_the_order(I, J):
    # the cell of I satisfies the closure conditions of J exactly when I <= J
    cell = {c.flag_level: c.bound for c in incidence_conditions(I)}
    holds = all(cell[c.flag_level] >= c.bound for c in incidence_conditions(J, closure=True))
    assert holds == index_leq(I, J)
