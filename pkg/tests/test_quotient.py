import itertools
import json

import pytest
from hypothesis import given, strategies as st

from conftest import monomial_ideals, squarefree_ideals
from lpk.errors import IdealError, PosetError
from lpk.letterplace import coletterplace, letterplace_ideal
from lpk.monomial import Monomial, MonomialIdeal, alexander_dual, merge_variables
from lpk.poset import chain, hom_poset, pair_label, product, v_poset
from lpk.quotient import (
    FiberedMap, bistrict_duality, check_difference, classify_fibers, dual_quotient_compat,
    is_regular_sequence, kernel_basis, parse_pairs_json, quotient_ideal, separations,
)


def proj(n, p):
    return FiberedMap.from_function(chain(n), p, p, lambda i, a: a)


def test_projection_of_letterplace():
    f = proj(2, chain(2))
    s = classify_fibers(f)
    assert s.left_strict and not s.right_strict
    assert kernel_basis(f) == [("(1,1)", "(2,1)"), ("(1,2)", "(2,2)")]
    img = quotient_ideal(letterplace_ideal(2, chain(2)), f)
    assert img == MonomialIdeal.from_strings(["1", "2"], ["1^2", "1*2", "2^2"])
    assert is_regular_sequence(letterplace_ideal(2, chain(2)), kernel_basis(f)).regular


def test_diagonal_map_is_bistrict():
    f = FiberedMap.from_function(chain(2), chain(2), chain(3), lambda i, a: str(int(i) + int(a) - 1))
    assert classify_fibers(f).bistrict
    img = quotient_ideal(letterplace_ideal(2, chain(2)), f)
    assert img == MonomialIdeal.from_strings(["1", "2", "3"], ["1*2", "1*3", "2*3"])
    chk = bistrict_duality(f, letterplace_ideal(2, chain(2)), coletterplace(chain(2), 2))
    assert chk.dual_matches


def test_first_coordinate_map_not_regular():
    # (i,p) -> i collapses a row: a chain in [2] x [2]^op, but not left strict
    f = FiberedMap.from_function(chain(2), chain(2), chain(2), lambda i, a: i)
    s = classify_fibers(f)
    assert s.chain and s.right_strict and not s.left_strict
    v = is_regular_sequence(letterplace_ideal(2, chain(2)), kernel_basis(f))
    assert not v.regular and v.failure is not None


def test_non_isotone_map_rejected():
    with pytest.raises(PosetError):
        FiberedMap.from_function(chain(2), chain(2), chain(2), lambda i, a: "2" if i == "1" else "1")


def test_zerodivisor_witness_face():
    i = MonomialIdeal.from_strings(["x", "y"], ["x", "y"])
    c = check_difference(i, "x", "y")
    assert not c.regular and c.face == frozenset() and c.prime == frozenset({"x", "y"})


@given(squarefree_ideals(max_vars=5))
def test_regularity_oracles_agree_squarefree(i):
    if len(i.variables) < 2:
        return
    for a, b in itertools.combinations(i.variables, 2):
        r = {m: check_difference(i, a, b, m).regular for m in ("associated", "brute", "face")}
        assert len(set(r.values())) == 1


@given(monomial_ideals())
def test_regularity_oracles_agree(i):
    if len(i.variables) < 2:
        return
    a, b = i.variables[:2]
    assert check_difference(i, a, b, "associated").regular == check_difference(i, a, b, "brute").regular


@given(monomial_ideals(max_vars=3, max_gens=3, max_exp=2))
def test_regular_difference_definition(i):
    """x_a - x_b regular iff no m outside I has both x_a m and x_b m in I (checked on a box)."""
    if len(i.variables) < 2:
        return
    a, b = i.variables[:2]
    top = i.to_dense(i.lcm())
    zd = False
    for vec in itertools.product(*(range(e + 1) for e in top)):
        m = i.from_dense(vec)
        if not i.contains(m) and i.contains(m * Monomial({a: 1})) and i.contains(m * Monomial({b: 1})):
            zd = True
            break
    assert check_difference(i, a, b).regular == (not zd)


def test_dependent_difference_rejected():
    i = letterplace_ideal(2, chain(2))
    with pytest.raises(IdealError):
        is_regular_sequence(i, [("(1,1)", "(2,1)"), ("(2,1)", "(1,1)")])


def test_unseparable_examples():
    assert not separations(letterplace_ideal(2, chain(2))).separable
    assert not separations(letterplace_ideal(2, v_poset())).separable
    assert not separations(MonomialIdeal.from_strings(["x"], ["x"])).separable


def test_separable_power():
    i = MonomialIdeal.from_strings(["x", "y"], ["x^2", "x*y", "y^2"])
    res = separations(i, collect_all=True)
    assert res.separable and res.exhaustive
    for w in res.witnesses:
        lifted = w.lifted_ideal
        a, b = w.new_labels
        assert check_difference(lifted, a, b).regular
        assert merge_variables(lifted, a, b).generators  # nonzero image
    assert any(str(w.lifted_ideal) == "(y^2, y*x_1, x_1*x_2)" for w in res.witnesses)


def test_subideals_of_coletterplace_unseparable():
    full = coletterplace(chain(2), 2)
    for r in (1, 2, 3):
        for gens in itertools.combinations(full.generators, r):
            i = MonomialIdeal(full.variables, tuple(gens))
            assert not separations(i).separable


def test_compat_examples():
    # path a-b-c: cutting by a - c
    i = MonomialIdeal.from_strings(["a", "b", "c"], ["a*b", "b*c"])
    rep = dual_quotient_compat(i, ("a", "c"))
    assert rep.consistent
    j = letterplace_ideal(2, chain(2))
    rep2 = dual_quotient_compat(j, ("(1,1)", "(2,1)"))
    assert rep2.regular_on_ideal and rep2.consistent


@given(squarefree_ideals(max_vars=5))
def test_compat_property(i):
    if len(i.variables) < 2:
        return
    for a, b in itertools.combinations(i.variables, 2):
        assert dual_quotient_compat(i, (a, b)).consistent


def test_map_json_roundtrip():
    f = proj(2, chain(2))
    pairs = parse_pairs_json(json.dumps(f.to_json()))
    g = FiberedMap.from_pairs(chain(2), chain(2), chain(2), pairs)
    assert g.assignment == f.assignment
    with pytest.raises(PosetError):
        parse_pairs_json('{"nope": 1}')


def test_transposed_map():
    f = FiberedMap.from_function(chain(2), chain(3), chain(4), lambda i, a: str(int(i) + int(a) - 1))
    t = f.transposed()
    assert t.factors[0].elements == chain(3).elements
    assert t.map(pair_label("3", "2")) == "4"
