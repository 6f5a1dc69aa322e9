import itertools

import pytest
from hypothesis import given, strategies as st

from lpk.errors import IdealError
from lpk.families import (
    FAMILY_NAMES, FamilySpec, borel_violation, family, ferrers_ideal, hom_ideal_from_stable,
    multichain_ideal, sqfree_power_dual, strongly_stable_bridge, uniform_face_dual,
)
from lpk.homology import betti_table, linear_resolution
from lpk.letterplace import letterplace_ideal
from lpk.monomial import MonomialIdeal, alexander_dual
from lpk.poset import antichain, chain, downset, full_ideal, hom_poset, product
from lpk.quotient import classify_fibers, is_regular_sequence, kernel_basis
from lpk.suite import check_regular_quotient


def gens(ideal):
    return sorted(str(g) for g in ideal.generators)


def fam(name, **params):
    return family(FamilySpec(name, params))


def brute_dual(ideal):
    vs = ideal.variables
    sets = [g.support for g in ideal.generators]
    hitting = [set(c) for r in range(len(vs) + 1) for c in itertools.combinations(vs, r)
               if all(set(c) & s for s in sets)]
    minimal = [h for h in hitting if not any(o < h for o in hitting)]
    return sorted("*".join(v for v in vs if v in h) for h in minimal)


def test_multichain_example():
    f = fam("multichain", P=chain(2), m=1, s=2)
    assert gens(f.ideal) == ["(1,1)*(1,2)", "(1,1)*(2,2)", "(2,1)*(2,2)"]


def test_ferrers_example():
    assert gens(ferrers_ideal((2, 1))) == sorted(["(1,1)*(2,1)", "(1,1)*(2,2)", "(1,2)*(2,1)"])


def test_uniform_face_example():
    f = fam("uniform_face", n=2, faces=[[1], [2]])
    # x_i = (i,2), y_i = (i,1)
    assert gens(f.ideal) == sorted(["(1,1)*(2,1)", "(1,2)*(2,1)", "(1,1)*(2,2)"])


def test_sqfree_power_dual_examples():
    assert gens(sqfree_power_dual(chain(1), 1, 2)) == ["(1,1)", "(1,2)"]
    assert len(sqfree_power_dual(antichain(2), 2, 1).generators) == 1
    d = sqfree_power_dual(chain(2), 1, 2)
    assert gens(d) == brute_dual(multichain_ideal(chain(2), 1, 2))


@pytest.mark.parametrize("p", [chain(1), chain(2), antichain(2)])
@pytest.mark.parametrize("m,s", [(1, 2), (2, 2), (2, 1), (1, 3)])
def test_sqfree_power_dual_is_dual(p, m, s):
    assert sqfree_power_dual(p, m, s) == alexander_dual(multichain_ideal(p, m, s))


def test_bridge_examples():
    h = hom_poset(chain(2), chain(2))
    j = downset(h, [h.find(["1", "2"])])
    assert gens(strongly_stable_bridge(j)) == sorted(["x1^2", "x1*x2"])
    full = strongly_stable_bridge(full_ideal(h))
    assert gens(full) == sorted(["x1^2", "x1*x2", "x2^2"])
    mu = fam("murai_stable", d=2, n=2, gens=[[1, 2]], a=(0, 1))
    assert gens(mu.ideal) == sorted(["x1*x2", "x1*x3"])


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_bridge_round_trip(d, n, data):
    h = hom_poset(chain(d), chain(n))
    picks = data.draw(st.lists(st.sampled_from(h.maps), min_size=1, max_size=3))
    j = downset(h, picks)
    back = hom_ideal_from_stable(strongly_stable_bridge(j))
    assert back.members == j.members


def test_bridge_rejects_non_borel():
    i = MonomialIdeal.from_strings(["x1", "x2"], ["x2^2"])
    assert borel_violation(i) is not None
    with pytest.raises(IdealError, match="not strongly stable"):
        hom_ideal_from_stable(i)
    with pytest.raises(IdealError):
        hom_ideal_from_stable(MonomialIdeal.from_strings(["x1", "x2"], ["x1", "x2^2"]))


def test_staircase_det_is_strict_minors():
    f = fam("det_initial", n=2, m=2, s=2, e=(0, 1), f=(0, 1))
    want = sorted(f"({a},{b})*({c},{d})" for a in range(1, 4) for c in range(a + 1, 4)
                  for b in range(1, 4) for d in range(b + 1, 4))
    assert gens(f.ideal) == want


def test_specializations_share_betti_table():
    ref = betti_table(letterplace_ideal(2, product(chain(2), chain(2))))
    for e, f in [((0, 1), (0, 1)), ((0, 0), (0, 1)), ((0, 1), (0, 0))]:
        img = fam("det_initial", n=2, m=2, s=2, e=e, f=f).ideal
        assert betti_table(img) == ref, (e, f)


@pytest.mark.parametrize("d,n,g", [(2, 2, [2, 2]), (2, 3, [1, 3]), (3, 2, [1, 1, 2]), (2, 3, [2, 3])])
def test_cointerval_linear(d, n, g):
    f = fam("cointerval", d=d, n=n, gens=[g])
    ok, reason = linear_resolution(f.ideal)
    assert ok, reason


@pytest.mark.parametrize("faces", [[], [[1]], [[1], [2]], [[1], [2], [3], [1, 2]],
                                   [[1], [2], [3], [1, 2], [2, 3], [1, 3]]])
def test_uniform_face_dual(faces):
    n = 3 if any(3 in f for f in faces) else 2
    f = fam("uniform_face", n=n, faces=faces)
    assert alexander_dual(f.ideal) == uniform_face_dual(n, faces)


def test_colored_face_nested_and_regular():
    f = fam("colored_face", sizes=(2, 1), faces=[["1.1"], ["1.2"], ["2.1"], ["1.1", "2.1"]])
    assert check_regular_quotient(f).ok
    with pytest.raises(IdealError, match="nested"):
        fam("colored_face", sizes=(2,), faces=[["1.2"]])
    with pytest.raises(IdealError, match="closed under subsets"):
        fam("colored_face", sizes=(1, 1), faces=[["1.1", "2.1"]])


@pytest.mark.parametrize("name,params", [
    ("multichain", dict(P=antichain(2), m=2, s=2)),
    ("sym2_initial", dict(n=2)),
    ("ladder_initial", dict(n=3)),
    ("strongly_stable", dict(d=2, n=3, gens=[[2, 3]])),
    ("det_initial", dict(n=2, m=3, s=2, e=(0, 2), f=(0, 1))),
])
def test_family_maps_are_regular_quotients(name, params):
    f = fam(name, **params)
    assert classify_fibers(f.map).left_strict
    assert is_regular_sequence(f.source_ideal, kernel_basis(f.map)).regular
    assert check_regular_quotient(f).ok


@pytest.mark.parametrize("name,params,msg", [
    ("ferrers", dict(lam=(1, 2)), "weakly decreasing"),
    ("det_initial", dict(n=2, m=2, s=2, e=(1, 2)), "start with 0"),
    ("det_initial", dict(n=2, m=2, s=2, e=(0, 2, 3)), "length"),
    ("multichain", dict(P=chain(2), s=0), ">= 1"),
    ("murai_stable", dict(d=2, n=2, gens=[[1, 2]], a=(0, 2, 3)), "weakly increasing"),
    ("ladder_initial", dict(m=2, n=2, cells=[(2, 2)]), "downset"),
    ("uniform_face", dict(n=2, faces=[[1, 2]]), "closed under subsets"),
    ("multichain", dict(P=chain(2)), "missing parameter"),
])
def test_parameter_errors(name, params, msg):
    with pytest.raises(IdealError, match=msg):
        fam(name, **params)


def test_unknown_family():
    with pytest.raises(IdealError, match="unknown family"):
        FamilySpec("bogus")
    assert len(FAMILY_NAMES) == 11
