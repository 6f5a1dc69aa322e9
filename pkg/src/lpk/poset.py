"""Finite posets, isotone maps and Hom-posets.

Elements are opaque string labels.  Order comparisons go through bitmasks:
``_up[i]`` has bit ``j`` set iff ``elements[i] <= elements[j]``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import HomSizeError, InternalError, PosetError

DEFAULT_HOM_LIMIT = 50_000


def pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


def split_pair(label: str) -> tuple[str, str]:
    """Inverse of :func:`pair_label`, respecting nested parentheses."""
    if not (label.startswith("(") and label.endswith(")")):
        raise PosetError(f"label {label!r} is not a pair")
    depth = 0
    body = label[1:-1]
    for k, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:k], body[k + 1:]
    raise PosetError(f"label {label!r} is not a pair")


def map_label(values: Sequence[str]) -> str:
    return "[" + ",".join(values) + "]"


@dataclass(frozen=True)
class Poset:
    """A finite poset given by its elements and cover relations.

    ``covers`` may be any generating set of strict relations; it is
    reduced to the Hasse diagram on construction.
    """

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...] = ()
    factors: tuple["Poset", "Poset"] | None = field(default=None, compare=False, repr=False)
    hom: "HomPoset | None" = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        seen = set()
        for e in elements:
            if e in seen:
                raise PosetError(f"duplicate label {e!r}")
            seen.add(e)
        index = {e: i for i, e in enumerate(elements)}
        succ: list[set[int]] = [set() for _ in elements]
        for a, b in self.covers:
            a, b = str(a), str(b)
            for x in (a, b):
                if x not in index:
                    raise PosetError(f"cover mentions unknown label {x!r}")
            if a == b:
                raise PosetError(f"cyclic covers: {a} -> {a}")
            succ[index[a]].add(index[b])
        cycle = _find_cycle(succ)
        if cycle:
            raise PosetError("cyclic covers: " + " -> ".join(elements[i] for i in cycle))
        up = _transitive_closure(succ)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_up", up)
        object.__setattr__(self, "covers", _hasse(elements, up))

    # -- basic order queries -------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label):
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PosetError(f"{label!r} is not an element") from None

    def leq(self, a: str, b: str) -> bool:
        return bool(self._up[self.index(a)] >> self.index(b) & 1)

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def leq_index(self, i: int, j: int) -> bool:
        return bool(self._up[i] >> j & 1)

    @cached_property
    def _down(self) -> tuple[int, ...]:
        n = len(self.elements)
        down = [0] * n
        for i in range(n):
            for j in _bits(self._up[i]):
                down[j] |= 1 << i
        return tuple(down)

    def below(self, a: str) -> list[str]:
        """Elements strictly below ``a``."""
        i = self.index(a)
        return [self.elements[j] for j in _bits(self._down[i]) if j != i]

    def above(self, a: str) -> list[str]:
        i = self.index(a)
        return [self.elements[j] for j in _bits(self._up[i]) if j != i]

    def minimal(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if self._down[i] == 1 << i]

    def maximal(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if self._up[i] == 1 << i]

    @cached_property
    def linear_extension(self) -> tuple[str, ...]:
        """Deterministic linear extension: Kahn's algorithm, smallest index first."""
        n = len(self.elements)
        indeg = [bin(self._down[i]).count("1") - 1 for i in range(n)]
        ready = [i for i in range(n) if indeg[i] == 0]
        order = []
        while ready:
            ready.sort()
            i = ready.pop(0)
            order.append(i)
            for j in _bits(self._up[i]):
                if j != i:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        ready.append(j)
        return tuple(self.elements[i] for i in order)

    def is_chain(self, subset: Iterable[str]) -> bool:
        items = list(subset)
        return all(self.comparable(a, b) for a, b in itertools.combinations(items, 2))

    def is_antichain(self, subset: Iterable[str]) -> bool:
        items = list(subset)
        return not any(self.comparable(a, b) for a, b in itertools.combinations(items, 2))

    def is_total(self) -> bool:
        return self.is_chain(self.elements)

    def ideal_generated(self, gens: Iterable[str]) -> frozenset[str]:
        """The poset ideal (downset) generated by ``gens``."""
        mask = 0
        for g in gens:
            mask |= self._down[self.index(g)]
        return frozenset(self.elements[j] for j in _bits(mask))

    def is_downset(self, subset: Iterable[str]) -> bool:
        s = set(subset)
        return all(b in s for a in s for b in self.below(a))

    def rank_in_chain(self, label: str) -> int:
        """1-based position of ``label`` when the poset is a chain."""
        if not self.is_total():
            raise PosetError("poset is not totally ordered")
        return bin(self._down[self.index(label)]).count("1")

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers]}

    def __repr__(self):
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"


def _bits(mask: int):
    j = 0
    while mask:
        if mask & 1:
            yield j
        mask >>= 1
        j += 1


def _find_cycle(succ: list[set[int]]) -> list[int] | None:
    color = [0] * len(succ)
    stack_path: list[int] = []

    def visit(u):
        color[u] = 1
        stack_path.append(u)
        for v in sorted(succ[u]):
            if color[v] == 1:
                return stack_path[stack_path.index(v):] + [v]
            if color[v] == 0:
                found = visit(v)
                if found:
                    return found
        stack_path.pop()
        color[u] = 2
        return None

    for u in range(len(succ)):
        if color[u] == 0:
            found = visit(u)
            if found:
                return found
    return None


def _transitive_closure(succ: list[set[int]]) -> tuple[int, ...]:
    n = len(succ)
    up = [None] * n

    def go(i):
        if up[i] is None:
            m = 1 << i
            for j in succ[i]:
                m |= go(j)
            up[i] = m
        return up[i]

    for i in range(n):
        go(i)
    return tuple(up)


def _hasse(elements, up) -> tuple[tuple[str, str], ...]:
    n = len(elements)
    out = []
    for i in range(n):
        strict = up[i] & ~(1 << i)
        for j in _bits(strict):
            # j covers i iff nothing strictly between
            between = strict & ~(1 << j)
            if not any(up[k] >> j & 1 for k in _bits(between)):
                out.append((elements[i], elements[j]))
    return tuple(out)


# -- constructors -------------------------------------------------------------


def chain(n: int) -> Poset:
    if n < 1:
        raise PosetError("chain length must be >= 1")
    labels = [str(i) for i in range(1, n + 1)]
    return Poset(tuple(labels), tuple(zip(labels, labels[1:])))


def antichain(n: int) -> Poset:
    if n < 1:
        raise PosetError("antichain size must be >= 1")
    return Poset(tuple(str(i) for i in range(1, n + 1)))


def product(a: Poset, b: Poset) -> Poset:
    """Componentwise product; labels are ``"(x,y)"``."""
    elements = tuple(pair_label(x, y) for x in a.elements for y in b.elements)
    covers = []
    for x, x2 in a.covers:
        covers.extend((pair_label(x, y), pair_label(x2, y)) for y in b.elements)
    for y, y2 in b.covers:
        covers.extend((pair_label(x, y), pair_label(x, y2)) for x in a.elements)
    return Poset(elements, tuple(covers), factors=(a, b))


def opposite(a: Poset) -> Poset:
    return Poset(a.elements, tuple((y, x) for x, y in a.covers))


def disjoint_union(*parts: Poset) -> Poset:
    """Disjoint union.  Labels are kept unless two parts share a label, in
    which case every label becomes ``"k.label"`` with ``k`` the 1-based part."""
    labels = [e for p in parts for e in p.elements]
    if len(set(labels)) == len(labels):
        return Poset(tuple(labels), tuple(c for p in parts for c in p.covers))
    elements, covers = [], []
    for k, p in enumerate(parts, 1):
        elements.extend(f"{k}.{e}" for e in p.elements)
        covers.extend((f"{k}.{x}", f"{k}.{y}") for x, y in p.covers)
    return Poset(tuple(elements), tuple(covers))


def from_covers(elements: Sequence[str], covers: Iterable[Sequence[str]]) -> Poset:
    return Poset(tuple(elements), tuple((str(a), str(b)) for a, b in covers))


def subposet(p: Poset, subset: Iterable[str]) -> Poset:
    """Induced subposet, keeping the parent's element order."""
    keep = set(subset)
    for s in keep:
        p.index(s)
    elements = tuple(e for e in p.elements if e in keep)
    rel = [(a, b) for a in elements for b in elements if a != b and p.leq(a, b)]
    return Poset(elements, tuple(rel))


def v_poset() -> Poset:
    return from_covers(["a", "b", "c"], [("a", "b"), ("a", "c")])


def wedge_poset() -> Poset:
    """The Lambda-shaped poset: two minimal elements below one top."""
    return from_covers(["a", "b", "c"], [("a", "c"), ("b", "c")])


def diamond() -> Poset:
    return from_covers(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def poset_from_json(data: Mapping) -> Poset:
    return from_covers(data["elements"], data.get("covers", []))


_TOKEN = re.compile(r"\s*(prod|op|union|chain:\d+|antichain:\d+|file:[^,()]+|V|Lambda|diamond|\(|\)|,)")


def parse_poset(expr: str) -> Poset:
    """Parse a constructor expression such as ``prod(chain:2,op(chain:3))``.

    Atoms: ``chain:n``, ``antichain:n``, ``V``, ``Lambda``, ``diamond``,
    ``file:path.json``.  Combinators: ``prod(A,B)``, ``op(A)``, ``union(A,B,...)``.
    """
    tokens = []
    pos = 0
    expr = expr.strip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m:
            raise PosetError(f"cannot parse poset expression at column {pos}: {expr[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)
    k = 0

    def expect(tok):
        nonlocal k
        if tokens[k] != tok:
            raise PosetError(f"expected {tok!r} in poset expression, got {tokens[k]!r}")
        k += 1

    def parse():
        nonlocal k
        tok = tokens[k]
        k += 1
        if tok is None:
            raise PosetError("unexpected end of poset expression")
        if tok.startswith("chain:"):
            return chain(int(tok[6:]))
        if tok.startswith("antichain:"):
            return antichain(int(tok[10:]))
        if tok.startswith("file:"):
            with open(tok[5:]) as fh:
                return poset_from_json(json.load(fh))
        named = {"V": v_poset, "Lambda": wedge_poset, "diamond": diamond}
        if tok in named:
            return named[tok]()
        if tok in ("prod", "op", "union"):
            expect("(")
            args = [parse()]
            while tokens[k] == ",":
                k += 1
                args.append(parse())
            expect(")")
            if tok == "op":
                if len(args) != 1:
                    raise PosetError("op takes one argument")
                return opposite(args[0])
            if tok == "prod":
                out = args[0]
                for a in args[1:]:
                    out = product(out, a)
                return out
            return disjoint_union(*args)
        raise PosetError(f"unexpected token {tok!r} in poset expression")

    result = parse()
    if tokens[k] is not None:
        raise PosetError(f"trailing input in poset expression: {tokens[k]!r}")
    return result


# -- isotone maps ---------------------------------------------------------------


@dataclass(frozen=True)
class IsotoneMap:
    domain: Poset
    codomain: Poset
    values: tuple[str, ...]  # aligned with domain.elements

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != len(self.domain.elements):
            raise PosetError("assignment must cover the whole domain")
        for v in self.values:
            self.codomain.index(v)
        d, c = self.domain, self.codomain
        idx = [c.index(v) for v in self.values]
        for a, b in d.covers:
            if not c.leq_index(idx[d.index(a)], idx[d.index(b)]):
                raise PosetError(f"map is not isotone: {a} <= {b} but "
                                 f"{self(a)} !<= {self(b)}")

    @classmethod
    def from_mapping(cls, domain: Poset, codomain: Poset, assignment: Mapping[str, str]):
        return cls(domain, codomain, tuple(str(assignment[e]) for e in domain.elements))

    def __call__(self, q: str) -> str:
        return self.values[self.domain.index(q)]

    @property
    def assignment(self) -> dict[str, str]:
        return dict(zip(self.domain.elements, self.values))

    def graph(self) -> list[tuple[str, str]]:
        return list(zip(self.domain.elements, self.values))

    def graph_labels(self, transpose: bool = False) -> list[str]:
        if transpose:
            return [pair_label(p, q) for q, p in self.graph()]
        return [pair_label(q, p) for q, p in self.graph()]

    @property
    def label(self) -> str:
        return map_label(self.values)

    def is_strict(self) -> bool:
        return all(self.codomain.lt(self(a), self(b)) for a, b in self.domain.covers)

    def __hash__(self):
        return hash(self.values)

    def __eq__(self, other):
        if not isinstance(other, IsotoneMap):
            return NotImplemented
        return (self.values == other.values and self.domain.elements == other.domain.elements
                and self.codomain.elements == other.codomain.elements)

    def __repr__(self):
        return f"IsotoneMap{self.label}"


def compose(outer: IsotoneMap, inner: IsotoneMap) -> IsotoneMap:
    return IsotoneMap(inner.domain, outer.codomain, tuple(outer(v) for v in inner.values))


def endomaps(p: Poset) -> list[IsotoneMap]:
    return hom_poset(p, p).maps


# -- Hom posets -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HomPoset:
    """All (strict) isotone maps ``source -> target`` under the pointwise order."""

    source: Poset
    target: Poset
    maps: tuple[IsotoneMap, ...]
    strict: bool = False

    @cached_property
    def _pos(self) -> dict[tuple[str, ...], int]:
        return {m.values: i for i, m in enumerate(self.maps)}

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __contains__(self, phi):
        return phi.values in self._pos

    def position(self, phi: IsotoneMap) -> int:
        try:
            return self._pos[phi.values]
        except KeyError:
            raise PosetError(f"{phi} is not in this Hom-poset") from None

    def find(self, values: Sequence) -> IsotoneMap:
        key = tuple(str(v) for v in values)
        try:
            return self.maps[self._pos[key]]
        except KeyError:
            raise PosetError(f"no map with values {list(key)}") from None

    def leq(self, phi: IsotoneMap, psi: IsotoneMap) -> bool:
        t = self.target
        return all(t.leq(a, b) for a, b in zip(phi.values, psi.values))

    def as_poset(self) -> Poset:
        """The Hom-poset as a :class:`Poset`, labelled ``"[v1,v2,...]"``."""
        return self._as_poset

    @cached_property
    def _as_poset(self) -> Poset:
        labels = tuple(m.label for m in self.maps)
        rel = []
        for m in self.maps:
            # pointwise covers are single-coordinate covers in the target
            for k, v in enumerate(m.values):
                for a, b in self.target.covers:
                    if a == v:
                        vals = m.values[:k] + (b,) + m.values[k + 1:]
                        if vals in self._pos:
                            rel.append((m.label, map_label(vals)))
        return Poset(labels, tuple(rel), hom=self)

    def map_of_label(self, label: str) -> IsotoneMap:
        return self.maps[self.as_poset().index(label)]


def hom_poset(q: Poset, p: Poset, strict: bool = False,
              limit: int = DEFAULT_HOM_LIMIT) -> HomPoset:
    """Enumerate ``Hom(q, p)`` (or strict maps) by backtracking.

    Elements of ``q`` are assigned along ``q.linear_extension``; candidate
    values run through ``p.elements`` in order, so the result is sorted
    lexicographically along that extension.
    """
    ext = [q.index(e) for e in q.linear_extension]
    preds = [[q.index(b) for b in q.below(q.elements[i])] for i in ext]
    m = len(p.elements)
    values = [None] * len(q.elements)
    out: list[tuple[int, ...]] = []

    def rec(k):
        if k == len(ext):
            out.append(tuple(values))
            if len(out) > limit:
                raise HomSizeError(f"Hom-poset exceeds the size limit of {limit} maps")
            return
        i = ext[k]
        for v in range(m):
            ok = True
            for j in preds[k]:
                w = values[j]
                if not p.leq_index(w, v) or (strict and w == v):
                    ok = False
                    break
            if ok:
                values[i] = v
                rec(k + 1)
        values[i] = None

    rec(0)
    maps = tuple(IsotoneMap.__new__(IsotoneMap) for _ in out)
    for obj, vals in zip(maps, out):
        # skip re-validation: backtracking only yields isotone maps
        object.__setattr__(obj, "domain", q)
        object.__setattr__(obj, "codomain", p)
        object.__setattr__(obj, "values", tuple(p.elements[v] for v in vals))
    return HomPoset(q, p, maps, strict)


def distributive_lattice(p: Poset) -> Poset:
    """D(P) realised as Hom(P, [2])."""
    return hom_poset(p, chain(2)).as_poset()


# -- ideals in Hom posets -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HomIdeal:
    """A downward closed set of maps in a Hom-poset.

    ``order_mode`` is ``"full"`` (pointwise order) or ``("weak", p)``: maps
    must agree at the maximal element ``p`` and compare pointwise elsewhere.
    """

    ambient: HomPoset
    members: frozenset[int]
    order_mode: object = "full"

    def maps(self) -> list[IsotoneMap]:
        return [self.ambient.maps[i] for i in sorted(self.members)]

    def complement(self) -> list[IsotoneMap]:
        return [m for i, m in enumerate(self.ambient.maps) if i not in self.members]

    def __contains__(self, phi):
        return phi in self.ambient and self.ambient.position(phi) in self.members

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return (isinstance(other, HomIdeal) and self.members == other.members
                and self.ambient.source == other.ambient.source
                and self.ambient.target == other.ambient.target)

    def __hash__(self):
        return hash(self.members)


def order_leq(h: HomPoset, phi: IsotoneMap, psi: IsotoneMap, order_mode="full") -> bool:
    if order_mode == "full":
        return h.leq(phi, psi)
    _, p = order_mode
    return phi(p) == psi(p) and h.leq(phi, psi)


def _check_mode(h: HomPoset, order_mode):
    if order_mode == "full":
        return
    if not (isinstance(order_mode, tuple) and len(order_mode) == 2 and order_mode[0] == "weak"):
        raise PosetError(f"unknown order mode {order_mode!r}")
    p = order_mode[1]
    if p not in h.source.maximal():
        raise PosetError(f"weak order needs a maximal element; {p!r} is not maximal")


def downset(h: HomPoset, gens: Iterable[IsotoneMap], order_mode="full") -> HomIdeal:
    _check_mode(h, order_mode)
    gens = list(gens)
    for g in gens:
        h.position(g)
    members = frozenset(i for i, m in enumerate(h.maps)
                        if any(order_leq(h, m, g, order_mode) for g in gens))
    return HomIdeal(h, members, order_mode)


def full_ideal(h: HomPoset) -> HomIdeal:
    return HomIdeal(h, frozenset(range(len(h.maps))), "full")


def is_hom_ideal(h: HomPoset, members: Iterable[int], order_mode="full") -> bool:
    mem = set(members)
    return all(j in mem for i in mem for j in range(len(h.maps))
               if order_leq(h, h.maps[j], h.maps[i], order_mode))


def random_downset(h: HomPoset, rng, order_mode="full", max_gens: int = 3) -> HomIdeal:
    """Downset generated by 1..max_gens maps drawn with ``rng`` (a ``random.Random``)."""
    k = rng.randint(1, max(1, min(max_gens, len(h.maps))))
    gens = rng.sample(list(h.maps), k)
    return downset(h, gens, order_mode)


# -- currying --------------------------------------------------------------------


def curry(f: IsotoneMap, limit: int = DEFAULT_HOM_LIMIT) -> IsotoneMap:
    """``Hom(Q x P, R) -> Hom(Q, Hom(P, R))``."""
    if f.domain.factors is None:
        raise PosetError("curry needs a map whose domain is a product poset")
    q, p = f.domain.factors
    inner = hom_poset(p, f.codomain, limit=limit)
    target = inner.as_poset()
    values = []
    for a in q.elements:
        vals = tuple(f(pair_label(a, b)) for b in p.elements)
        values.append(map_label(vals))
    return IsotoneMap(q, target, tuple(values))


def uncurry(g: IsotoneMap) -> IsotoneMap:
    """``Hom(Q, Hom(P, R)) -> Hom(Q x P, R)``."""
    h = g.codomain.hom
    if h is None:
        raise PosetError("uncurry needs a map into a Hom-poset")
    q, p = g.domain, h.source
    dom = product(q, p)
    vals = []
    for a in q.elements:
        inner = h.map_of_label(g(a))
        vals.extend(inner(b) for b in p.elements)
    return IsotoneMap(dom, h.target, tuple(vals))


def swap_factors(f: IsotoneMap) -> IsotoneMap:
    """Precompose with the symmetry ``P x Q -> Q x P``."""
    if f.domain.factors is None:
        raise PosetError("swap needs a product domain")
    q, p = f.domain.factors
    dom = product(p, q)
    vals = tuple(f(pair_label(a, b)) for b, a in (split_pair(e) for e in dom.elements))
    return IsotoneMap(dom, f.codomain, vals)


def chain_as_hom(n: int) -> tuple[Poset, dict[str, str]]:
    """Identify ``[n+1]`` with ``Hom([n],[2])``: returns that Hom-poset and the
    order isomorphism from chain labels ``"1".."n+1"`` to its labels."""
    h = hom_poset(chain(n), chain(2)).as_poset()
    ext = h.linear_extension
    return h, {str(k): ext[k - 1] for k in range(1, n + 2)}


def partition_dual(phi: IsotoneMap) -> IsotoneMap:
    """Send ``phi`` in Hom([m],[n+1]) to the element of Hom([n],[m+1]) obtained
    through Hom([m]x[n],[2]) by uncurrying, swapping factors and currying."""
    m = len(phi.domain)
    n = len(phi.codomain) - 1
    h_n, iso_n = chain_as_hom(n)
    lifted = IsotoneMap(chain(m), h_n, tuple(iso_n[v] for v in phi.values))
    square = swap_factors(uncurry(lifted))
    curried = curry(square)
    h_m, iso_m = chain_as_hom(m)
    back = {v: k for k, v in iso_m.items()}
    return IsotoneMap(chain(n), chain(m + 1), tuple(back[v] for v in curried.values))


def partition_of(phi: IsotoneMap) -> tuple[int, ...]:
    """Partition ``l_1 >= ... >= l_m`` with ``phi(i) = l_{m+1-i} + 1``."""
    m = len(phi.domain)
    return tuple(int(phi.values[m - k]) - 1 for k in range(1, m + 1))


def conjugate(part: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(sum(1 for x in part if x >= k) for k in range(1, length + 1))


# -- fixpoints and antichains -------------------------------------------------------


def fixpoint(f: IsotoneMap) -> str:
    """A fixpoint of an isotone endomap, by iterating from the unique
    minimum (or maximum) element."""
    p = f.domain
    if f.codomain.elements != p.elements or f.codomain.covers != p.covers:
        raise PosetError("fixpoint needs an endomap")
    mins, maxs = p.minimal(), p.maximal()
    if len(mins) == 1:
        start = mins[0]
    elif len(maxs) == 1:
        start = maxs[0]
    else:
        raise PosetError("poset has neither a unique minimal nor a unique maximal element")
    x = start
    for _ in range(len(p) + 1):
        y = f(x)
        if y == x:
            return x
        x = y
    raise InternalError(f"no fixpoint reached from {start!r}")


def max_antichain(p: Poset) -> int:
    """Size of a largest antichain, by exhaustive branch and bound."""
    n = len(p.elements)
    comp = [p._up[i] | p._down[i] for i in range(n)]
    best = 0

    def rec(k, size, allowed):
        nonlocal best
        if size + bin(allowed >> k).count("1") <= best:
            return
        if k == n:
            best = max(best, size)
            return
        if allowed >> k & 1:
            rec(k + 1, size + 1, allowed & ~comp[k])
        rec(k + 1, size, allowed & ~(1 << k))

    rec(0, 0, (1 << n) - 1)
    return best


def catalog() -> dict[str, Poset]:
    """Small test posets: chains 1..4, antichains 2, 3, V, Lambda, diamond, 2x2 grid."""
    return {
        "chain1": chain(1), "chain2": chain(2), "chain3": chain(3), "chain4": chain(4),
        "antichain2": antichain(2), "antichain3": antichain(3),
        "V": v_poset(), "Lambda": wedge_poset(), "diamond": diamond(),
        "grid2x2": product(chain(2), chain(2)),
    }
