import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import monomial_ideals, squarefree_ideals
from lpk.errors import BudgetExceeded, IdealError
from lpk.homology import (
    HilbertNumerator, betti_table, codim, h_polynomial, hilbert_function, hilbert_numerator,
    hilbert_numerator_inclusion_exclusion, linear_resolution, multigraded_betti, polarize,
    ring_properties, sparse_rank,
)
from lpk.letterplace import coletterplace, letterplace_ideal
from lpk.monomial import MonomialIdeal, alexander_dual
from lpk.poset import antichain, chain, product

# frozen from a Koszul run (--method koszul) on L(2,[3]x[3])
L2_GRID33 = {'0,0': 1, '1,2': 36, '2,3': 160, '2,4': 25, '3,4': 340, '3,5': 146, '3,6': 1,
             '4,5': 434, '4,6': 363, '4,7': 6, '5,6': 362, '5,7': 498, '5,8': 15, '6,7': 204,
             '6,8': 407, '6,9': 20, '7,8': 77, '7,9': 198, '7,10': 15, '8,9': 18, '8,10': 53,
             '8,11': 6, '9,10': 2, '9,11': 6, '9,12': 1}

# Stanley-Reisner ideal of the six-vertex real projective plane
RP2_FACETS = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (3, 4, 6),
              (2, 4, 5), (3, 5, 6), (2, 4, 6)]


def rp2_ideal():
    names = [f"x{k}" for k in range(1, 7)]
    faces = {frozenset(s) for f in RP2_FACETS for r in range(4) for s in itertools.combinations(f, r)}
    nonfaces = []
    for r in range(1, 7):
        for s in itertools.combinations(range(1, 7), r):
            if frozenset(s) not in faces and all(frozenset(t) in faces
                                                  for t in itertools.combinations(s, r - 1)):
                nonfaces.append("*".join(f"x{k}" for k in s))
    return MonomialIdeal.from_strings(names, nonfaces)


# -- independent oracle: Hochster's formula ---------------------------------------------


def _rank(rows, p):
    m = [[Fraction(x) if not p else x % p for x in row] for row in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                if p:
                    f = m[r][col] * pow(m[rank][col], p - 2, p)
                    m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
                else:
                    f = m[r][col] / m[rank][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _reduced_homology(faces_by_dim, p):
    """Reduced Betti numbers of a complex given as {dim: sorted list of tuples}; dim -1 is the empty face."""
    out = {}
    dims = sorted(faces_by_dim)
    ranks = {}
    for d in dims:
        if d - 1 not in faces_by_dim:
            ranks[d] = 0
            continue
        lower = {f: k for k, f in enumerate(faces_by_dim[d - 1])}
        rows = [[0] * len(faces_by_dim[d]) for _ in lower]
        for j, f in enumerate(faces_by_dim[d]):
            for k in range(len(f)):
                rows[lower[f[:k] + f[k + 1:]]][j] = (-1) ** k
        ranks[d] = _rank(rows, p) if rows else 0
    for d in dims:
        out[d] = len(faces_by_dim[d]) - ranks[d] - ranks.get(d + 1, 0)
    return out


def hochster_betti(ideal, p=0):
    """beta_{i,j}(S/I) for squarefree I via reduced homology of induced subcomplexes."""
    n = len(ideal.variables)
    gens = [frozenset(ideal._pos[v] for v in g) for g in ideal.generators]
    table = {(0, 0): 1}
    for r in range(1, n + 1):
        for w in itertools.combinations(range(n), r):
            faces = {}
            for k in range(r + 1):
                for f in itertools.combinations(w, k):
                    if not any(g <= set(f) for g in gens):
                        faces.setdefault(k - 1, []).append(f)
            for d, b in _reduced_homology(faces, p).items():
                i = r - d - 1  # beta_{i,W}(S/I) = dim H~_{|W|-i-1}(Delta_W)
                if b and i >= 1:
                    table[(i, r)] = table.get((i, r), 0) + b
    return table


# -- tests ------------------------------------------------------------------------------


def test_small_tables():
    x = MonomialIdeal.from_strings(["x"], ["x"])
    assert betti_table(x).entries == {(0, 0): 1, (1, 1): 1}
    m = MonomialIdeal.from_strings(["x", "y"], ["x^2", "x*y", "y^2"])
    t = betti_table(m)
    assert t.to_json() == {"0,0": 1, "1,2": 3, "2,3": 2}
    assert str(t.k_polynomial()) == "1 - 3t^2 + 2t^3"
    assert betti_table(letterplace_ideal(2, chain(2))) == t
    with pytest.raises(IdealError):
        betti_table(MonomialIdeal.from_strings(["x"], []))


@given(squarefree_ideals(max_vars=5))
def test_koszul_matches_hochster(i):
    assert betti_table(i, method="koszul").entries == hochster_betti(i)


@given(squarefree_ideals(max_vars=7, max_gens=9))
def test_split_matches_koszul_squarefree(i):
    assert multigraded_betti(i, method="split") == multigraded_betti(i, method="koszul")


@given(monomial_ideals())
def test_split_matches_koszul_general(i):
    assert multigraded_betti(i, method="split") == multigraded_betti(i, method="koszul")


def test_split_matches_frozen_large_table():
    assert betti_table(letterplace_ideal(2, product(chain(3), chain(3))), method="split").to_json() == L2_GRID33


def test_characteristic_dependence():
    i = rp2_ideal()
    t0 = betti_table(i, 0, method="koszul")
    t2 = betti_table(i, 2, method="koszul")
    assert t0 != t2
    assert t0.entries == hochster_betti(i, 0)
    assert t2.entries == hochster_betti(i, 2)
    assert betti_table(i, 2, method="split") == t2
    assert betti_table(i, 3) == t0


def test_characteristic_from_environment(monkeypatch):
    monkeypatch.setenv("LPK_CHAR", "2")
    assert betti_table(rp2_ideal(), method="koszul") == betti_table(rp2_ideal(), 2, method="koszul")
    monkeypatch.setenv("LPK_CHAR", "4")
    with pytest.raises(IdealError):
        betti_table(rp2_ideal())


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5),
       st.sampled_from([0, 2, 3, 5]))
def test_sparse_rank(rows, p):
    cols = [{r: rows[r][c] for r in range(len(rows)) if rows[r][c]} for c in range(4)]
    assert sparse_rank(cols, p) == _rank(rows, p)


@given(monomial_ideals())
def test_euler_characteristic_gives_k_polynomial(i):
    assert betti_table(i).k_polynomial() == hilbert_numerator(i)


@given(monomial_ideals(max_vars=3, max_gens=4, max_exp=2))
def test_hilbert_function_matches_numerator(i):
    k = hilbert_numerator(i)
    assert k.series(len(i.variables), 6) == hilbert_function(i, 6)


@given(monomial_ideals(max_vars=4, max_gens=8))
def test_numerator_recursion_matches_inclusion_exclusion(i):
    assert hilbert_numerator(i) == hilbert_numerator_inclusion_exclusion(i)


def test_numerator_recursion_large():
    big = letterplace_ideal(2, product(chain(2), chain(3)))  # 18 generators
    assert hilbert_numerator(big) == betti_table(big).k_polynomial()


def test_h_polynomial():
    m = MonomialIdeal.from_strings(["x", "y"], ["x^2", "x*y", "y^2"])
    assert h_polynomial(m).coeffs == (1, 2)
    assert HilbertNumerator((1, -1)).divide_one_minus_t(1).coeffs == (1,)
    with pytest.raises(IdealError):
        HilbertNumerator((1, 1)).divide_one_minus_t(1)


def test_polarization_preserves_betti():
    m = MonomialIdeal.from_strings(["x", "y"], ["x^2", "x*y^3"])
    pol, origin = polarize(m)
    assert pol.is_squarefree() and len(pol.variables) == 5
    assert betti_table(pol) == betti_table(m, method="koszul")


def test_ring_properties():
    props = ring_properties(letterplace_ideal(2, chain(2)))
    assert props.CM and not props.Gorenstein and props.bi_CM and props.linear_resolution
    props = ring_properties(letterplace_ideal(2, antichain(2)))
    assert props.CM and props.Gorenstein and not props.bi_CM
    assert codim(letterplace_ideal(3, chain(2))) == 2  # height |P|
    assert codim(coletterplace(chain(2), 3)) == 3


def test_linear_resolution_of_coletterplace():
    ok, reason = linear_resolution(coletterplace(product(chain(2), chain(2)), 3))
    assert ok and reason == "4-linear"


def test_budget():
    with pytest.raises(BudgetExceeded):
        betti_table(letterplace_ideal(2, product(chain(2), chain(3))), budget=10, method="koszul")


def test_parallel_jobs_agree():
    i = letterplace_ideal(2, product(chain(2), chain(3)))
    assert betti_table(i, method="koszul", jobs=2) == betti_table(i, method="koszul")
