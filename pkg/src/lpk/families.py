"""Named ideal families realised as (images of) letterplace and co-letterplace ideals.

Every family is produced twice: once as the image of a source ideal under an
isotone map (or as the source ideal itself) and once directly from its
generator description.  :func:`family` insists that the two agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product as cartesian
from typing import Iterable, Sequence

from .errors import IdealError, InternalError, PosetError
from .letterplace import LetterplaceIdeal, letterplace
from .monomial import Monomial, MonomialIdeal, alexander_dual, normalize
from .poset import (
    HomIdeal, HomPoset, Poset, chain, downset, full_ideal, hom_poset, pair_label, product,
    subposet,
)
from .quotient import FiberedMap, quotient_ideal

FAMILY_NAMES = (
    "multichain", "sqfree_power_dual", "det_initial", "sym2_initial", "ladder_initial",
    "ferrers", "strongly_stable", "murai_stable", "cointerval", "uniform_face",
    "colored_face",
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise IdealError(f"unknown family {self.name!r}; expected one of {', '.join(FAMILY_NAMES)}")


@dataclass(frozen=True, eq=False)
class Family:
    spec: FamilySpec
    source: LetterplaceIdeal
    map: FiberedMap | None
    ideal: MonomialIdeal
    direct: MonomialIdeal

    @property
    def source_ideal(self) -> MonomialIdeal:
        return self.source.ideal


# -- small helpers ----------------------------------------------------------------------


def _labelled_chain(labels: Sequence[str]) -> Poset:
    labels = tuple(labels)
    return Poset(labels, tuple(zip(labels, labels[1:])))


def _weakly_increasing(seq: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:]))


def _positive(name: str, value: int) -> int:
    value = int(value)
    if value < 1:
        raise IdealError(f"{name} must be >= 1, got {value}")
    return value


def _shift_sequence(name: str, seq: Sequence[int] | None, s: int) -> tuple[int, ...]:
    if seq is None:
        return (0,) * s
    seq = tuple(int(v) for v in seq)
    if len(seq) != s:
        raise IdealError(f"{name} must have length s={s}")
    if seq[0] != 0:
        raise IdealError(f"{name} must start with 0")
    if not _weakly_increasing(seq):
        raise IdealError(f"{name} must be weakly increasing")
    return seq


def _ideal(gens: Iterable[Iterable[str]], variables: Sequence[str]) -> MonomialIdeal:
    """Ideal from generators given as lists of variable labels (repeats = powers)."""
    monos = []
    for labels in gens:
        exps: dict[str, int] = {}
        for v in labels:
            exps[v] = exps.get(v, 0) + 1
        monos.append(Monomial(exps))
    return normalize(monos, variables)


def _finish(spec: FamilySpec, source: LetterplaceIdeal, fmap: FiberedMap | None,
            direct: MonomialIdeal) -> Family:
    image = source.ideal if fmap is None else quotient_ideal(source.ideal, fmap)
    if image != direct:
        raise InternalError(f"{spec.name}: image {image} differs from direct generators {direct}")
    return Family(spec, source, fmap, image, direct)


def _multichains(p: Poset, s: int) -> list[tuple[str, ...]]:
    return [phi.values for phi in hom_poset(chain(s), p).maps]


# -- letterplace families ---------------------------------------------------------------


def _multichain(spec: FamilySpec, p: Poset, m: int, s: int) -> Family:
    """Image of ``L(s, P x [m])`` under ``(i,(p,a)) -> (p, a+i-1)``."""
    pm = product(p, chain(m))
    target = product(p, chain(m + s - 1))
    source = letterplace(chain(s), pm)

    def fn(i, pa):
        q, a = pa[1:-1].rsplit(",", 1)
        return pair_label(q, str(int(a) + int(i) - 1))

    fmap = FiberedMap.from_function(chain(s), pm, target, fn)
    gens = []
    for ps in _multichains(p, s):
        for idx in combinations(range(1, m + s), s):
            gens.append([pair_label(q, str(t)) for q, t in zip(ps, idx)])
    return _finish(spec, source, fmap, _ideal(gens, target.elements))


def multichain_ideal(p: Poset, m: int, s: int) -> MonomialIdeal:
    """``I_{m+s-1,s}(P)``: ``x_{p1,i1}...x_{ps,is}`` with ``p1 <= ... <= ps`` and ``i1 < ... < is``."""
    return family(FamilySpec("multichain", {"P": p, "m": m, "s": s})).ideal


def sqfree_power_dual(p: Poset, m: int, s: int) -> MonomialIdeal:
    """Generators ``prod_p prod_i x_{p, t_pi}`` over strictly increasing rows
    ``t_p`` in ``[m+s-1]`` with ``t_pj <= t_qj`` whenever ``p < q``."""
    m, s = _positive("m", m), _positive("s", s)
    target = product(p, chain(m + s - 1))
    rows = list(combinations(range(1, m + s), m))
    elems = p.elements
    gens = []
    for choice in cartesian(rows, repeat=len(elems)):
        t = dict(zip(elems, choice))
        if all(all(a <= b for a, b in zip(t[x], t[y])) for x, y in p.covers):
            gens.append([pair_label(x, str(v)) for x in elems for v in t[x]])
    return _ideal(gens, target.elements)


def _sqfree_power_dual_family(spec: FamilySpec, p: Poset, m: int, s: int) -> Family:
    """Image of ``L(P x [m], s)`` under ``((p,a),r) -> (p, r+a-1)``."""
    pm = product(p, chain(m))
    target = product(p, chain(m + s - 1))
    source = letterplace(pm, chain(s))

    def fn(pa, r):
        q, a = pa[1:-1].rsplit(",", 1)
        return pair_label(q, str(int(r) + int(a) - 1))

    fmap = FiberedMap.from_function(pm, chain(s), target, fn)
    direct = sqfree_power_dual(p, m, s)
    fam = _finish(spec, source, fmap, direct)
    dual = alexander_dual(multichain_ideal(p, m, s))
    if dual != direct:
        raise InternalError("squarefree power ideal is not the dual of the multichain ideal")
    return fam


def _det_initial(spec: FamilySpec, n: int, m: int, s: int, e, f) -> Family:
    """Image of ``L(s, [n] x [m])`` under ``(i,(a,b)) -> (a+e_i, b+f_i)``."""
    e = _shift_sequence("e", e, s)
    f = _shift_sequence("f", f, s)
    grid = product(chain(n), chain(m))
    target = product(chain(n + e[-1]), chain(m + f[-1]))
    source = letterplace(chain(s), grid)

    def fn(i, ab):
        a, b = ab[1:-1].split(",")
        k = int(i) - 1
        return pair_label(str(int(a) + e[k]), str(int(b) + f[k]))

    fmap = FiberedMap.from_function(chain(s), grid, target, fn)
    gens = []
    for rows in combinations_with_replacement(range(1, n + 1), s):
        for cols in combinations_with_replacement(range(1, m + 1), s):
            gens.append([pair_label(str(a + e[k]), str(b + f[k]))
                         for k, (a, b) in enumerate(zip(rows, cols))])
    direct = _ideal(gens, target.elements)
    stair = tuple(range(s))
    if e == stair and f == stair:
        # diagonal initial ideal of s-minors: strictly increasing rows and columns
        named = _ideal(([pair_label(str(a), str(b)) for a, b in zip(r, c)]
                        for r in combinations(range(1, n + s), s)
                        for c in combinations(range(1, m + s), s)), target.elements)
        if named != direct:
            raise InternalError("diagonal s-minor generators disagree")
    return _finish(spec, source, fmap, direct)


def _sym2_initial(spec: FamilySpec, n: int) -> Family:
    """Image of ``L(2, Hom([2],[n]))`` under ``(1,u) -> u``, ``(2,u) -> u + (1,1)``."""
    p = hom_poset(chain(2), chain(n)).as_poset()
    target = hom_poset(chain(2), chain(n + 1)).as_poset()
    source = letterplace(chain(2), p)

    def fn(i, u):
        a, b = (int(v) for v in u[1:-1].split(","))
        k = int(i) - 1
        return f"[{a + k},{b + k}]"

    fmap = FiberedMap.from_function(chain(2), p, target, fn)
    cells = [(a, b) for a in range(1, n + 2) for b in range(a, n + 2)]
    gens = [[f"[{a},{b}]", f"[{c},{d}]"] for (a, b) in cells for (c, d) in cells
            if a < c and b < d]
    return _finish(spec, source, fmap, _ideal(gens, target.elements))


def triangular_ladder(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a + b <= n + 1]


def _ladder_initial(spec: FamilySpec, m: int, n: int, cells) -> Family:
    """Image of ``L(2, J)`` for a downset ``J`` of ``[m] x [n]`` under
    ``(1,c) -> c`` and ``(2,c) -> c + (1,1)``."""
    grid = product(chain(m), chain(n))
    labels = [pair_label(str(a), str(b)) for a, b in cells]
    for c in labels:
        if c not in grid:
            raise IdealError(f"ladder cell {c} lies outside [{m}]x[{n}]")
    if not labels or not grid.is_downset(labels):
        raise IdealError("ladder cells must form a nonempty downset of the grid")
    j = subposet(grid, labels)
    target = product(chain(m + 1), chain(n + 1))
    source = letterplace(chain(2), j)

    def fn(i, ab):
        a, b = ab[1:-1].split(",")
        k = int(i) - 1
        return pair_label(str(int(a) + k), str(int(b) + k))

    fmap = FiberedMap.from_function(chain(2), j, target, fn)
    inside = {(int(a), int(b)) for a, b in cells}
    gens = [[pair_label(str(a), str(b)), pair_label(str(c), str(d))]
            for c, d in ((x + 1, y + 1) for x, y in inside)
            for a in range(1, c) for b in range(1, d)]
    return _finish(spec, source, fmap, _ideal(gens, target.elements))


# -- co-letterplace families ------------------------------------------------------------


def _ferrers(spec: FamilySpec, lam: Sequence[int]) -> Family:
    """``L(J)`` for the downset of ``Hom(antichain(2), [n])`` cut out by ``lam``.

    Variables ``(1,i)`` and ``(2,j)`` play the roles of ``x_i`` and ``y_j``.
    """
    lam = tuple(int(v) for v in lam)
    if not lam or any(v < 1 for v in lam):
        raise IdealError("partition parts must be positive")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise IdealError("partition must be weakly decreasing")
    n = max(len(lam), lam[0])
    h = hom_poset(Poset(("1", "2")), chain(n))
    members = frozenset(k for k, phi in enumerate(h.maps)
                        if int(phi("1")) <= len(lam) and int(phi("2")) <= lam[int(phi("1")) - 1])
    j = HomIdeal(h, members)
    source = letterplace(h.source, h.target, j)
    gens = [[pair_label("1", str(i)), pair_label("2", str(k))]
            for i, part in enumerate(lam, 1) for k in range(1, part + 1)]
    return _finish(spec, source, None, _ideal(gens, source.ideal.variables))


def ferrers_ideal(lam: Sequence[int]) -> MonomialIdeal:
    return family(FamilySpec("ferrers", {"lam": lam})).ideal


def _map_gens(h: HomPoset, gens) -> list:
    out = []
    for g in gens:
        if isinstance(g, str):
            g = monomial_to_map(Monomial.parse(g), len(h.source))
        out.append(h.find([str(v) for v in g]))
    return out


def monomial_to_map(mono: Monomial, d: int) -> tuple[int, ...]:
    """``x_{j1} ... x_{jd}`` (labels ``x<j>``) as the sorted tuple ``(j1, ..., jd)``."""
    vals = []
    for v, e in mono.items():
        if not v.startswith("x") or not v[1:].isdigit():
            raise IdealError(f"variable {v!r} is not of the form x<j>")
        vals.extend([int(v[1:])] * e)
    if len(vals) != d:
        raise IdealError(f"monomial {mono} does not have degree {d}")
    return tuple(sorted(vals))


def _hom_dn(d: int, n: int) -> HomPoset:
    return hom_poset(chain(_positive("d", d)), chain(_positive("n", n)))


def _stable_ideal(d: int, n: int, gens, order_mode="full") -> HomIdeal:
    h = _hom_dn(d, n)
    if gens is None:
        return full_ideal(h)
    return downset(h, _map_gens(h, gens), order_mode)


def _strongly_stable(spec: FamilySpec, d: int, n: int, gens) -> Family:
    j = _stable_ideal(d, n, gens)
    return _alpha_family(spec, j, (0,) * d)


def _murai_stable(spec: FamilySpec, d: int, n: int, gens, a) -> Family:
    a = tuple(int(v) for v in a) if a is not None else tuple(range(d))
    if len(a) != d or a[0] != 0 or not _weakly_increasing(a):
        raise IdealError("a must be a weakly increasing sequence 0 = a_0 <= ... <= a_{d-1} of length d")
    return _alpha_family(spec, _stable_ideal(d, n, gens), a)


def _alpha_family(spec: FamilySpec, j: HomIdeal, a: tuple[int, ...]) -> Family:
    """Image of ``L(J)`` under ``(i,k) -> x_{k + a_{i-1}}``; ``a = 0`` is the projection."""
    h = j.ambient
    d, n = len(h.source), len(h.target)
    target = _labelled_chain([f"x{k}" for k in range(1, n + a[-1] + 1)])
    source = letterplace(h.source, h.target, j)
    fmap = FiberedMap.from_function(h.source, h.target, target,
                                    lambda i, k: f"x{int(k) + a[int(i) - 1]}")
    gens = [[f"x{int(phi(str(i))) + a[i - 1]}" for i in range(1, d + 1)] for phi in j.maps()]
    return _finish(spec, source, fmap, _ideal(gens, target.elements))


def strongly_stable_bridge(j: HomIdeal) -> MonomialIdeal:
    """The strongly stable ideal ``prod_i x_{phi(i)}`` over ``phi`` in ``J``."""
    if j.order_mode != "full":
        raise PosetError("strongly stable correspondence uses the pointwise order")
    return _alpha_family(FamilySpec("strongly_stable"), j, (0,) * len(j.ambient.source)).ideal


def borel_violation(ideal: MonomialIdeal) -> tuple[Monomial, Monomial] | None:
    """A generator ``m`` and a Borel move ``x_i m / x_j`` (``i < j``) leaving the ideal."""
    for g in ideal.generators:
        for v in g:
            j = int(v[1:])
            for i in range(1, j):
                moved = dict(g.items())
                moved[v] -= 1
                moved[f"x{i}"] = moved.get(f"x{i}", 0) + 1
                cand = Monomial(moved)
                if not ideal.contains(cand):
                    return g, cand
    return None


def hom_ideal_from_stable(ideal: MonomialIdeal) -> HomIdeal:
    """Recover ``J`` in ``Hom([d],[n])`` from a strongly stable ideal generated in degree ``d``."""
    degs = ideal.degrees()
    if len(degs) != 1:
        raise IdealError("strongly stable ideal must be generated in a single degree")
    d = degs.pop()
    n = len(ideal.variables)
    if tuple(ideal.variables) != tuple(f"x{k}" for k in range(1, n + 1)):
        raise IdealError("variables must be x1, ..., xn in order")
    bad = borel_violation(ideal)
    if bad is not None:
        raise IdealError(f"not strongly stable: {bad[0]} moves to {bad[1]} outside the ideal")
    h = _hom_dn(d, n)
    members = frozenset(h.position(h.find([str(v) for v in monomial_to_map(g, d)]))
                        for g in ideal.generators)
    j = HomIdeal(h, members)
    closed = downset(h, j.maps())
    if closed.members != members:
        raise InternalError("strongly stable generators do not form a poset ideal")
    return j


def _cointerval(spec: FamilySpec, d: int, n: int, gens) -> Family:
    """Weak-order downset ``J`` of ``Hom([d],[n])`` mapped by ``(a,b) -> a+b-1``."""
    h = _hom_dn(d, n)
    j = downset(h, _map_gens(h, gens), ("weak", str(d))) if gens is not None else full_ideal(h)
    target = _labelled_chain([f"x{k}" for k in range(1, n + d)])
    source = letterplace(h.source, h.target, j)
    fmap = FiberedMap.from_function(h.source, h.target, target,
                                    lambda a, b: f"x{int(a) + int(b) - 1}")
    edges = [[f"x{int(phi(str(i))) + i - 1}" for i in range(1, d + 1)] for phi in j.maps()]
    return _finish(spec, source, fmap, _ideal(edges, target.elements))


def _faces(faces: Iterable, vertices: Sequence[str]) -> set[frozenset[str]]:
    out = {frozenset()}
    for face in faces:
        fs = frozenset(str(v) for v in face)
        unknown = fs - set(vertices)
        if unknown:
            raise IdealError(f"face uses unknown vertex {sorted(unknown)[0]}")
        out.add(fs)
    for face in out:
        for v in face:
            if face - {v} not in out:
                raise IdealError(f"faces are not closed under subsets: {sorted(face)} lacks {sorted(face - {v})}")
    return out


def _uniform_face(spec: FamilySpec, n: int, faces) -> Family:
    """``L(J)`` in ``Hom(antichain(n), [2])``; ``(i,2)`` is ``x_i`` and ``(i,1)`` is ``y_i``."""
    n = _positive("n", n)
    p = Poset(tuple(str(i) for i in range(1, n + 1)))
    delta = _faces(faces, p.elements)
    h = hom_poset(p, chain(2))
    members = frozenset(k for k, phi in enumerate(h.maps)
                        if frozenset(v for v in p.elements if phi(v) == "2") in delta)
    source = letterplace(p, chain(2), HomIdeal(h, members))
    gens = [[pair_label(v, "2" if v in face else "1") for v in p.elements] for face in delta]
    return _finish(spec, source, None, _ideal(gens, source.ideal.variables))


def uniform_face_dual(n: int, faces) -> MonomialIdeal:
    """Whiskers ``x_i y_i`` plus the Stanley-Reisner ideal of the complex in the ``y`` variables."""
    verts = tuple(str(i) for i in range(1, n + 1))
    delta = _faces(faces, verts)
    variables = product(Poset(verts), chain(2)).elements
    whiskers = [[pair_label(v, "1"), pair_label(v, "2")] for v in verts]
    nonfaces = []
    for r in range(1, n + 1):
        for sub in combinations(verts, r):
            fs = frozenset(sub)
            if fs not in delta and all(fs - {v} in delta for v in fs):
                nonfaces.append([pair_label(v, "1") for v in sub])
    return _ideal(whiskers + nonfaces, variables)


def _colored_face(spec: FamilySpec, sizes: Sequence[int], faces) -> Family:
    """Colour classes ``C_k = {k.1, ..., k.c_k}`` ordered ``k.1 < k.2 < ...``.

    A face maps to the isotone map taking the value 2 on the last
    ``|F cap C_k|`` elements of each class; the image under the projections
    ``[c_k] x [2] -> [2]`` has one generator ``prod_k x_k^{r_k} y_k^{c_k - r_k}``
    per face, with ``x_k = (k,2)`` and ``y_k = (k,1)``.
    """
    sizes = tuple(_positive("colour class size", c) for c in sizes)
    if not sizes:
        raise IdealError("need at least one colour class")
    verts = [f"{k}.{v}" for k, c in enumerate(sizes, 1) for v in range(1, c + 1)]
    covers = [(f"{k}.{v}", f"{k}.{v + 1}") for k, c in enumerate(sizes, 1) for v in range(1, c)]
    p = Poset(tuple(verts), tuple(covers))
    delta = _faces(faces, verts)
    # nested: inside a colour class a face may always trade a vertex for an earlier one
    for face in delta:
        for v in face:
            k, idx = v.split(".")
            for w in range(1, int(idx)):
                u = f"{k}.{w}"
                if u not in face and (face - {v}) | {u} not in delta:
                    raise IdealError(f"complex is not nested: {sorted(face)} with {v} -> {u}")
    counts = {tuple(sum(1 for v in face if v.split(".")[0] == str(k))
                    for k in range(1, len(sizes) + 1)) for face in delta}
    two = chain(2)
    h = hom_poset(p, two)
    members = frozenset(
        i for i, phi in enumerate(h.maps)
        if tuple(sum(1 for v in range(1, c + 1) if phi(f"{k}.{v}") == "2")
                 for k, c in enumerate(sizes, 1)) in counts)
    j = HomIdeal(h, members)
    if downset(h, j.maps()).members != members:
        raise InternalError("nested complex does not give a poset ideal")
    source = letterplace(p, two, j)
    target_elems = [pair_label(str(k), t) for k in range(1, len(sizes) + 1) for t in ("1", "2")]
    target = Poset(tuple(target_elems),
                   tuple((pair_label(str(k), "1"), pair_label(str(k), "2"))
                         for k in range(1, len(sizes) + 1)))
    fmap = FiberedMap.from_function(p, two, target,
                                    lambda v, t: pair_label(v.split(".")[0], t))
    gens = []
    for r in counts:
        labels = []
        for k, c in enumerate(sizes, 1):
            labels += [pair_label(str(k), "2")] * r[k - 1] + [pair_label(str(k), "1")] * (c - r[k - 1])
        gens.append(labels)
    return _finish(spec, source, fmap, _ideal(gens, target.elements))


# -- dispatch ------------------------------------------------------------------------------


def family(spec: FamilySpec) -> Family:
    """Build a family instance; raises :class:`IdealError` on invalid parameters."""
    pr = dict(spec.params)
    name = spec.name
    try:
        if name == "multichain":
            return _multichain(spec, pr["P"], _positive("m", pr.get("m", 1)), _positive("s", pr["s"]))
        if name == "sqfree_power_dual":
            return _sqfree_power_dual_family(spec, pr["P"], _positive("m", pr.get("m", 1)),
                                             _positive("s", pr["s"]))
        if name == "det_initial":
            s = _positive("s", pr["s"])
            return _det_initial(spec, _positive("n", pr["n"]), _positive("m", pr["m"]), s,
                                pr.get("e"), pr.get("f"))
        if name == "sym2_initial":
            return _sym2_initial(spec, _positive("n", pr["n"]))
        if name == "ladder_initial":
            if "cells" in pr:
                return _ladder_initial(spec, _positive("m", pr["m"]), _positive("n", pr["n"]), pr["cells"])
            n = _positive("n", pr["n"])
            return _ladder_initial(spec, n, n, triangular_ladder(n))
        if name == "ferrers":
            return _ferrers(spec, pr["lam"])
        if name == "strongly_stable":
            return _strongly_stable(spec, pr["d"], pr["n"], pr.get("gens"))
        if name == "murai_stable":
            return _murai_stable(spec, pr["d"], pr["n"], pr.get("gens"), pr.get("a"))
        if name == "cointerval":
            return _cointerval(spec, pr["d"], pr["n"], pr.get("gens"))
        if name == "uniform_face":
            return _uniform_face(spec, pr["n"], pr.get("faces", ()))
        return _colored_face(spec, pr["sizes"], pr.get("faces", ()))
    except KeyError as exc:
        raise IdealError(f"family {name} is missing parameter {exc.args[0]!r}") from None
