import itertools
import math

import pytest
from hypothesis import given, strategies as st

from lpk.errors import InternalError, PosetError
from lpk.poset import (
    Poset, antichain, catalog, chain, conjugate, curry, diamond, disjoint_union, downset,
    endomaps, fixpoint, from_covers, hom_poset, max_antichain, opposite, parse_poset,
    partition_dual, partition_of, product, uncurry, v_poset, IsotoneMap,
)


def values(h):
    return [tuple(int(v) for v in phi.values) for phi in h.maps]


def test_constructors():
    c = chain(3)
    assert c.elements == ("1", "2", "3") and c.lt("1", "3")
    op = opposite(chain(2))
    assert op.lt("2", "1") and not op.leq("1", "2")
    g = product(chain(2), chain(2))
    assert len(g) == 4
    assert g.lt("(1,1)", "(1,2)") and g.lt("(1,2)", "(2,2)") and g.lt("(2,1)", "(2,2)")
    assert not g.comparable("(1,2)", "(2,1)")


def test_rejects_cycles_and_duplicates():
    with pytest.raises(PosetError, match="cyclic covers: a -> b -> c -> a"):
        from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    with pytest.raises(PosetError):
        Poset(("a", "a"))
    with pytest.raises(PosetError):
        from_covers(["a"], [("a", "z")])


def test_disjoint_union_relabels_clashes():
    u = disjoint_union(chain(2), chain(1))
    assert u.elements == ("1.1", "1.2", "2.1")
    assert u.lt("1.1", "1.2") and not u.comparable("1.1", "2.1")


def test_parse_poset():
    assert parse_poset("prod(chain:2,op(chain:3))").factors is not None
    assert len(parse_poset("union(V,chain:1)")) == 4
    with pytest.raises(PosetError):
        parse_poset("prod(chain:2")
    with pytest.raises(PosetError):
        parse_poset("chain:2 chain:3")


def test_hom_examples():
    assert values(hom_poset(chain(2), chain(2))) == [(1, 1), (1, 2), (2, 2)]
    h = hom_poset(antichain(2), chain(2))
    assert len(h) == 4
    lat = h.as_poset()
    assert len(lat.minimal()) == 1 and len(lat.maximal()) == 1
    assert values(hom_poset(chain(2), chain(3), strict=True)) == [(1, 2), (1, 3), (2, 3)]
    assert len(hom_poset(chain(3), chain(2), strict=True)) == 0


@pytest.mark.parametrize("d,n", [(d, n) for d in range(1, 6) for n in range(1, 6)])
def test_hom_chain_count(d, n):
    assert len(hom_poset(chain(d), chain(n))) == math.comb(n + d - 1, d)


@pytest.mark.parametrize("name", list(catalog()))
def test_pointwise_order(name):
    p = catalog()[name]
    h = hom_poset(p, chain(2))
    hp = h.as_poset()
    for a, b in itertools.product(h.maps, repeat=2):
        direct = all(int(x) <= int(y) for x, y in zip(a.values, b.values))
        assert hp.leq(a.label, b.label) == direct == h.leq(a, b)


def test_distributive_lattices():
    for n in range(1, 5):
        d = hom_poset(chain(n), chain(2)).as_poset()
        assert len(d) == n + 1 and d.is_total()
        b = hom_poset(antichain(n), chain(2)).as_poset()
        assert len(b) == 2 ** n
        # Boolean lattice: rank = number of 2s, covers change one coordinate
        assert all(sum(x != y for x, y in zip(a[1:-1].split(","), c[1:-1].split(","))) == 1
                   for a, c in b.covers)


def test_downset_examples():
    h = hom_poset(chain(2), chain(2))
    top, mid = h.find(["2", "2"]), h.find(["1", "2"])
    assert len(downset(h, [top])) == 3
    assert [m.values for m in downset(h, [mid]).maps()] == [("1", "1"), ("1", "2")]
    assert [m.values for m in downset(h, [mid], ("weak", "2")).maps()] == [("1", "2")]
    with pytest.raises(PosetError):
        downset(h, [mid], ("weak", "1"))
    j = downset(h, [mid])
    assert downset(h, j.maps()).members == j.members


def test_max_antichain():
    assert max_antichain(chain(4)) == 1
    assert max_antichain(antichain(3)) == 3
    assert max_antichain(product(chain(2), chain(2))) == 2
    assert max_antichain(diamond()) == 2


def _brute_width(p):
    best = 0
    for r in range(1, len(p) + 1):
        for s in itertools.combinations(p.elements, r):
            if p.is_antichain(s):
                best = r
    return best


@pytest.mark.parametrize("name", list(catalog()))
def test_max_antichain_matches_subset_search(name):
    p = catalog()[name]
    assert max_antichain(p) == _brute_width(p)


def small_pairs():
    cat = catalog()
    return [(a, b) for a in cat for b in cat if len(cat[a]) * len(cat[b]) <= 9]


@pytest.mark.parametrize("qn,pn", small_pairs()[:40])
def test_curry_roundtrip_and_order(qn, pn):
    q, p = catalog()[qn], catalog()[pn]
    qp = product(q, p)
    h = hom_poset(qp, chain(2))
    curried = [curry(f) for f in h.maps]
    for f, g in zip(h.maps, curried):
        assert uncurry(g).values == f.values
    # order isomorphism
    for (f1, g1), (f2, g2) in itertools.combinations(zip(h.maps, curried), 2):
        inner = g1.codomain
        both = all(inner.leq(a, b) for a, b in zip(g1.values, g2.values))
        assert h.leq(f1, f2) == both


def test_curry_count_and_constant():
    h = hom_poset(product(chain(2), chain(2)), chain(2))
    assert len(h) == 6 == len(hom_poset(chain(2), chain(3)))
    const = h.find(["2"] * 4)
    g = curry(const)
    assert set(g.values) == {"[2,2]"}


def test_partition_duality():
    h = hom_poset(chain(2), chain(3))
    for phi in h.maps:
        dual = partition_dual(phi)
        assert partition_of(dual) == conjugate(partition_of(phi), 2)
        assert partition_dual(dual).values == phi.values
    assert partition_dual(h.find(["1", "2"])).values == ("1", "2")
    assert partition_dual(h.find(["1", "3"])).values == ("2", "2")


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_partition_dual_is_conjugation(raw):
    part = tuple(sorted(raw, reverse=True))
    phi = IsotoneMap(chain(3), chain(4), tuple(str(part[3 - i] + 1) for i in range(1, 4)))
    assert partition_of(partition_dual(phi)) == conjugate(part, 3)


def test_fixpoint_examples():
    c = chain(3)
    assert fixpoint(IsotoneMap(c, c, ("2", "2", "2"))) == "2"
    assert fixpoint(IsotoneMap(c, c, ("2", "3", "3"))) == "3"
    v = v_poset()
    swap = IsotoneMap.from_mapping(v, v, {"a": "a", "b": "c", "c": "b"})
    assert fixpoint(swap) == "a"
    a2 = antichain(2)
    with pytest.raises(PosetError):
        fixpoint(IsotoneMap(a2, a2, ("2", "1")))


@pytest.mark.parametrize("name", [n for n, p in catalog().items() if len(p) <= 4])
def test_fixpoint_exhaustive(name):
    p = catalog()[name]
    if len(p.minimal()) != 1 and len(p.maximal()) != 1:
        pytest.skip("no unique extremal element")
    for f in endomaps(p):
        x = fixpoint(f)
        assert f(x) == x
