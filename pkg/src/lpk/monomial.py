"""Monomials and monomial ideals over explicitly labelled variables.

Generators are kept minimal.  Internally an ideal caches its generators as
dense exponent tuples aligned with ``variables`` and, for squarefree ideals,
as bitmasks; the set algorithms below work on those bitmasks.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import BudgetExceeded, IdealError, InternalError
from .poset import split_pair, pair_label

DUAL_METHODS = ("transversal", "facet_complement", "primes")


class Monomial(Mapping):
    """Immutable monomial ``{label: exponent}``; zero exponents are dropped."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] | None = None):
        if exponents is None:
            exponents = {}
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[str, int] = {}
        for k, e in items:
            e = int(e)
            if e < 0:
                raise IdealError(f"negative exponent for {k!r}")
            if e:
                acc[str(k)] = acc.get(str(k), 0) + e
        self._items = tuple(sorted(acc.items()))
        self._hash = hash(self._items)

    @classmethod
    def from_set(cls, labels: Iterable[str]) -> "Monomial":
        return cls((v, 1) for v in labels)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text == "1":
            return cls()
        out = []
        for term in text.split("*"):
            term = term.strip()
            if not term:
                raise IdealError(f"empty factor in monomial {text!r}")
            var, _, exp = term.partition("^")
            if exp and (not exp.isdigit() or int(exp) < 1):
                raise IdealError(f"bad exponent in {term!r}")
            out.append((var, int(exp) if exp else 1))
        return cls(out)

    def __getitem__(self, key):
        for k, e in self._items:
            if k == key:
                return e
        raise KeyError(key)

    def get(self, key, default=0):
        for k, e in self._items:
            if k == key:
                return e
        return default

    def __iter__(self):
        return (k for k, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Monomial):
            return self._items == other._items
        return NotImplemented

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._items)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(k for k, _ in self._items)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._items)

    def divides(self, other: "Monomial") -> bool:
        return all(other.get(k) >= e for k, e in self._items)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(list(self._items) + list(other._items))

    def lcm(self, other: "Monomial") -> "Monomial":
        acc = dict(self._items)
        for k, e in other._items:
            acc[k] = max(acc.get(k, 0), e)
        return Monomial(acc)

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial({k: min(e, other.get(k)) for k, e in self._items})

    def quotient(self, other: "Monomial") -> "Monomial":
        """``self / gcd(self, other)``."""
        return Monomial({k: e - min(e, other.get(k)) for k, e in self._items})

    def to_string(self, order: Sequence[str] | None = None) -> str:
        if not self._items:
            return "1"
        items = self._items
        if order is not None:
            pos = {v: i for i, v in enumerate(order)}
            items = sorted(items, key=lambda kv: pos.get(kv[0], len(pos)))
        return "*".join(k if e == 1 else f"{k}^{e}" for k, e in items)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Monomial({self.to_string()!r})"


@dataclass(frozen=True, eq=False)
class MonomialIdeal:
    """A monomial ideal of ``k[variables]`` stored by minimal generators.

    Build through :func:`normalize` (or :meth:`from_strings`); the
    constructor trusts that ``generators`` are already minimal and sorted.
    """

    variables: tuple[str, ...]
    generators: tuple[Monomial, ...]

    @classmethod
    def from_strings(cls, variables: Sequence[str], gens: Iterable[str]) -> "MonomialIdeal":
        return normalize([Monomial.parse(g) for g in gens], variables)

    @cached_property
    def _pos(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    @cached_property
    def dense(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.to_dense(g) for g in self.generators)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Support bitmasks of the generators."""
        pos = self._pos
        return tuple(sum(1 << pos[v] for v in g) for g in self.generators)

    def to_dense(self, m: Monomial) -> tuple[int, ...]:
        vec = [0] * len(self.variables)
        pos = self._pos
        for k, e in m.items():
            try:
                vec[pos[k]] = e
            except KeyError:
                raise IdealError(f"unknown variable {k!r}") from None
        return tuple(vec)

    def from_dense(self, vec: Sequence[int]) -> Monomial:
        return Monomial({v: e for v, e in zip(self.variables, vec) if e})

    def from_mask(self, mask: int) -> Monomial:
        return Monomial.from_set(v for i, v in enumerate(self.variables) if mask >> i & 1)

    def mask_of(self, labels: Iterable[str]) -> int:
        pos = self._pos
        return sum(1 << pos[v] for v in set(labels))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not self.generators[0]

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def contains_dense(self, vec: Sequence[int]) -> bool:
        return any(all(a <= b for a, b in zip(g, vec)) for g in self.dense)

    def __contains__(self, m):
        return self.contains(m)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (set(self.variables) == set(other.variables)
                and set(self.generators) == set(other.generators))

    def __hash__(self):
        return hash((frozenset(self.variables), frozenset(self.generators)))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if set(self.variables) != set(other.variables):
            raise IdealError("sum of ideals over different rings")
        return normalize(list(self.generators) + list(other.generators), self.variables)

    def lcm(self) -> Monomial:
        return reduce(Monomial.lcm, self.generators, Monomial())

    def degrees(self) -> set[int]:
        return {g.degree for g in self.generators}

    def with_variables(self, variables: Sequence[str]) -> "MonomialIdeal":
        """Same generators over a different (super)set of variables."""
        return normalize(self.generators, variables)

    def to_text(self) -> str:
        lines = ["vars: " + " ".join(self.variables)]
        lines.extend(g.to_string(self.variables) for g in self.generators)
        return "\n".join(lines) + "\n"

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(g.to_string(self.variables) for g in self.generators) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def _sort_key(ideal_vars: dict[str, int]):
    n = len(ideal_vars)

    def key(g: Monomial):
        vec = [0] * n
        for k, e in g.items():
            vec[ideal_vars[k]] = e
        return (g.degree, tuple(-e for e in vec))

    return key


def normalize(gens: Iterable[Monomial], variables: Sequence[str]) -> MonomialIdeal:
    """Minimal generators of the ideal spanned by ``gens``, in a fixed order
    (degree, then lexicographically descending along ``variables``)."""
    variables = tuple(str(v) for v in variables)
    if len(set(variables)) != len(variables):
        raise IdealError("duplicate variable labels")
    pos = {v: i for i, v in enumerate(variables)}
    uniq = set()
    for g in gens:
        if not isinstance(g, Monomial):
            g = Monomial(g)
        for k in g:
            if k not in pos:
                raise IdealError(f"unknown variable {k!r} in generator {g}")
        uniq.add(g)
    key = _sort_key(pos)
    ordered = sorted(uniq, key=key)
    kept: list[Monomial] = []
    for g in ordered:
        # sorted by degree, so only earlier generators can divide g
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return MonomialIdeal(variables, tuple(kept))


def ideal_from_masks(masks: Iterable[int], variables: Sequence[str]) -> MonomialIdeal:
    variables = tuple(variables)
    return normalize([Monomial.from_set(variables[i] for i in _bits(m)) for m in masks], variables)


def _bits(mask: int):
    j = 0
    while mask:
        if mask & 1:
            yield j
        mask >>= 1
        j += 1


def _popcount(x: int) -> int:
    return bin(x).count("1")


def minimize_masks(masks: Iterable[int]) -> list[int]:
    """Drop duplicates and supersets (dominated edges)."""
    out: list[int] = []
    for m in sorted(set(masks), key=lambda x: (_popcount(x), x)):
        if not any(o & m == o for o in out):
            out.append(m)
    return out


# -- transversals ---------------------------------------------------------------


def minimal_transversals(edges: Iterable[int], budget: int | None = None) -> list[int]:
    """All inclusion-minimal hitting sets of a hypergraph given by bitmasks.

    Branch and bound: each branch covers the uncovered edge with the fewest
    candidate vertices, and a vertex is only added while every chosen vertex
    keeps a private edge, so every output is minimal and produced once.
    """
    edges = minimize_masks(edges)
    if any(e == 0 for e in edges):
        return []
    if not edges:
        return [0]
    nv = max(e.bit_length() for e in edges)
    inc = [0] * nv
    for k, e in enumerate(edges):
        for v in _bits(e):
            inc[v] |= 1 << k
    out: list[int] = []

    def rec(chosen: int, uncov: int, crit: dict[int, int], cand: int):
        if not uncov:
            out.append(chosen)
            if budget is not None and len(out) > budget:
                raise BudgetExceeded(f"more than {budget} minimal transversals")
            return
        best, best_c = None, None
        for k in _bits(uncov):
            c = _popcount(edges[k] & cand)
            if best_c is None or c < best_c:
                best, best_c = k, c
                if c <= 1:
                    break
        branch = edges[best] & cand
        if not branch:
            return
        cand &= ~branch
        for v in _bits(branch):
            new_crit = {}
            for u, cu in crit.items():
                c2 = cu & ~inc[v]
                if not c2:
                    break
                new_crit[u] = c2
            else:
                new_crit[v] = uncov & inc[v]
                rec(chosen | 1 << v, uncov & ~inc[v], new_crit, cand)
            cand |= 1 << v

    rec(0, (1 << len(edges)) - 1, {}, (1 << nv) - 1)
    return sorted(out, key=lambda m: (_popcount(m), m))


def faces(ideal: MonomialIdeal, budget: int = 2_000_000) -> list[int]:
    """All faces (subsets supporting no generator) of a squarefree ideal's complex."""
    _require_squarefree(ideal)
    masks = ideal.masks
    n = len(ideal.variables)
    out: list[int] = []
    if any(m == 0 for m in masks):
        return out

    def rec(face: int, start: int):
        out.append(face)
        if len(out) > budget:
            raise BudgetExceeded(f"more than {budget} faces")
        for v in range(start, n):
            f2 = face | 1 << v
            if not any(m & f2 == m for m in masks):
                rec(f2, v + 1)

    rec(0, 0)
    return out


def facets(ideal: MonomialIdeal, budget: int = 2_000_000) -> list[int]:
    """Maximal faces, found by scanning every face for a free extension."""
    masks = ideal.masks
    n = len(ideal.variables)
    out = []
    for f in faces(ideal, budget):
        maximal = True
        for v in range(n):
            if not f >> v & 1:
                f2 = f | 1 << v
                if not any(m & f2 == m for m in masks):
                    maximal = False
                    break
        if maximal:
            out.append(f)
    return out


def _split_primes(gens: frozenset[int], memo: dict) -> list[int]:
    """Minimal primes of a squarefree ideal by repeated splitting
    (I, uv) = (I, u) cap (I, v) on a generator with two or more variables."""
    if gens in memo:
        return memo[gens]
    big = None
    for g in sorted(gens):
        if _popcount(g) > 1:
            big = g
            break
    if big is None:
        result = [reduce(lambda a, b: a | b, gens, 0)]
    else:
        v = big & -big
        rest = gens - {big}
        left = frozenset(minimize_masks(rest | {v}))
        right = frozenset(minimize_masks(rest | {big & ~v}))
        result = _inclusion_minimal(_split_primes(left, memo) + _split_primes(right, memo))
    memo[gens] = result
    return result


def _inclusion_minimal(sets: list[int]) -> list[int]:
    out: list[int] = []
    for s in sorted(set(sets), key=lambda x: (_popcount(x), x)):
        if not any(o & s == o for o in out):
            out.append(s)
    return out


def _require_squarefree(ideal: MonomialIdeal):
    for g in ideal.generators:
        if not g.is_squarefree():
            raise IdealError(f"ideal is not squarefree: generator {g.to_string(ideal.variables)}")


def alexander_dual(ideal: MonomialIdeal, method: str = "transversal") -> MonomialIdeal:
    """Alexander dual of a squarefree ideal in its own ambient ring.

    ``transversal``: generated by minimal sets meeting every generator.
    ``facet_complement``: complements of the facets of the complex.
    ``primes``: product of the variables of each minimal prime.
    """
    _require_squarefree(ideal)
    n = len(ideal.variables)
    full = (1 << n) - 1
    if method == "transversal":
        sets = minimal_transversals(ideal.masks)
    elif method == "facet_complement":
        if ideal.is_unit():
            sets = []
        else:
            sets = [full & ~f for f in facets(ideal)]
    elif method == "primes":
        if ideal.is_zero():
            sets = [0]
        elif ideal.is_unit():
            sets = []
        else:
            sets = _split_primes(frozenset(minimize_masks(ideal.masks)), {})
    else:
        raise IdealError(f"unknown duality method {method!r}; choose from {DUAL_METHODS}")
    return ideal_from_masks(sets, ideal.variables)


def dual_all_methods(ideal: MonomialIdeal) -> MonomialIdeal:
    """Dual computed by every method; raises if they disagree."""
    results = {m: alexander_dual(ideal, m) for m in DUAL_METHODS}
    first = results["transversal"]
    for m, r in results.items():
        if r != first:
            raise InternalError(f"duality methods disagree: transversal={first} {m}={r}")
    return first


# -- colon, primes, substitution -----------------------------------------------------


def colon(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    for k in m:
        if k not in ideal._pos:
            raise IdealError(f"unknown variable {k!r}")
    return normalize([g.quotient(m) for g in ideal.generators], ideal.variables)


def sum_ideals(*ideals: MonomialIdeal) -> MonomialIdeal:
    return reduce(lambda a, b: a + b, ideals)


def is_prime(ideal: MonomialIdeal) -> bool:
    return (not ideal.is_zero() and not ideal.is_unit()
            and all(g.degree == 1 for g in ideal.generators))


def prime_vars(ideal: MonomialIdeal) -> frozenset[str]:
    return frozenset(next(iter(g)) for g in ideal.generators)


def minimal_primes(ideal: MonomialIdeal, associated: bool = False,
                   budget: int = 500_000) -> list[frozenset[str]]:
    """Minimal primes (minimal vertex covers of the supports), or with
    ``associated=True`` every prime of the form ``(I : m)`` for ``m`` dividing
    the lcm of the generators, found by brute force over those ``m``."""
    if ideal.is_zero():
        raise IdealError("the zero ideal has no minimal primes")
    if ideal.is_unit():
        return []
    if not associated:
        covers = minimal_transversals(ideal.masks)
        return [frozenset(ideal.variables[i] for i in _bits(c)) for c in covers]
    return [frozenset(p) for p, _ in associated_primes_bruteforce(ideal, budget)]


def associated_primes_bruteforce(ideal: MonomialIdeal,
                                 budget: int = 500_000) -> list[tuple[frozenset[str], Monomial]]:
    """Pairs ``(P, m)`` with ``(I : m) = P`` prime, first ``m`` found per ``P``."""
    top = ideal.to_dense(ideal.lcm())
    count = 1
    for e in top:
        count *= e + 1
    if count > budget:
        raise BudgetExceeded(f"{count} divisors of the lcm exceed the budget of {budget}")
    found: dict[frozenset[str], Monomial] = {}
    for vec in itertools.product(*(range(e + 1) for e in top)):
        if ideal.contains_dense(vec):
            continue
        m = ideal.from_dense(vec)
        c = colon(ideal, m)
        if is_prime(c):
            found.setdefault(prime_vars(c), m)
    order = {v: i for i, v in enumerate(ideal.variables)}
    return sorted(found.items(), key=lambda kv: (len(kv[0]), sorted(order[v] for v in kv[0])))


def irreducible_components(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """Irredundant irreducible decomposition.  Each component is an exponent
    vector ``a`` standing for the ideal ``(x_i^a_i : a_i > 0)``."""
    if ideal.is_zero() or ideal.is_unit():
        return []
    memo: dict = {}

    def minimal(vecs):
        vecs = set(vecs)
        return frozenset(v for v in vecs
                         if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in vecs))

    def contains(big, small):
        # ideal ``big`` contains ideal ``small``: each x_i^s_i lies in big
        return all(0 < b <= s for b, s in zip(big, small) if s > 0)

    def rec(gens: frozenset):
        if gens in memo:
            return memo[gens]
        split = None
        for g in sorted(gens):
            if sum(1 for e in g if e) > 1:
                split = g
                break
        if split is None:
            comp = [0] * len(ideal.variables)
            for g in gens:
                i = next(k for k, e in enumerate(g) if e)
                comp[i] = g[i] if comp[i] == 0 else min(comp[i], g[i])
            result = [tuple(comp)]
        else:
            i = next(k for k, e in enumerate(split) if e)
            pure = tuple(split[i] if k == i else 0 for k in range(len(split)))
            rest_part = tuple(0 if k == i else e for k, e in enumerate(split))
            others = gens - {split}
            left = rec(minimal(others | {pure}))
            right = rec(minimal(others | {rest_part}))
            cands = set(left) | set(right)
            result = [c for c in cands
                      if not any(d != c and contains(c, d) for d in cands)]
        memo[gens] = result
        return result

    comps = rec(minimal(ideal.dense))
    return sorted(comps, key=lambda c: (sum(1 for e in c if e), tuple(-e for e in c)))


def associated_primes(ideal: MonomialIdeal) -> list[frozenset[str]]:
    """Associated primes as radicals of the irreducible components."""
    seen = []
    for comp in irreducible_components(ideal):
        p = frozenset(v for v, e in zip(ideal.variables, comp) if e)
        if p not in seen:
            seen.append(p)
    return seen


def zerodivisor_witness(ideal: MonomialIdeal, a: str, b: str) -> Monomial | None:
    """A monomial ``m`` outside ``I`` with ``(I : m)`` an associated prime
    containing ``x_a`` and ``x_b``, or None when no associated prime contains both.

    Such a prime exists iff some ``m`` outside ``I`` has ``x_a m`` and
    ``x_b m`` in ``I``; the minimal candidates are ``lcm(g : x_a, h : x_b)``
    over generators ``g, h``.  A found ``m`` is then enlarged until its colon
    ideal is prime.
    """
    if a == b:
        raise IdealError("difference of identical variables")
    xa, xb = Monomial({a: 1}), Monomial({b: 1})
    for v in (a, b):
        if v not in ideal._pos:
            raise IdealError(f"unknown variable {v!r}")
    left = {g.quotient(xa) for g in ideal.generators}
    right = {g.quotient(xb) for g in ideal.generators}
    for u in sorted(left, key=lambda m: (m.degree, m.to_string())):
        for w in sorted(right, key=lambda m: (m.degree, m.to_string())):
            m = u.lcm(w)
            if not ideal.contains(m):
                return _grow_to_prime(ideal, m)
    return None


def _grow_to_prime(ideal: MonomialIdeal, m: Monomial) -> Monomial:
    while True:
        c = colon(ideal, m)
        bad = next((g for g in c.generators if g.degree > 1), None)
        if bad is None:
            return m
        # bad = x_k * rest with rest outside (I : m): (I : m*rest) grows strictly
        k = next(iter(bad))
        rest = Monomial({v: e - (1 if v == k else 0) for v, e in bad.items()})
        m = m * rest


def substitute(ideal: MonomialIdeal, varmap: Mapping[str, str],
               new_variables: Sequence[str]) -> MonomialIdeal:
    """Image under the ring map sending each variable to ``varmap[variable]``."""
    new_variables = tuple(new_variables)
    targets = set(new_variables)
    for v in ideal.variables:
        if v not in varmap:
            raise IdealError(f"substitution is not defined on {v!r}")
    for v in set(varmap[v] for v in ideal.variables):
        if v not in targets:
            raise IdealError(f"image variable {v!r} missing from the new ring")
    gens = [Monomial([(varmap[k], e) for k, e in g.items()]) for g in ideal.generators]
    return normalize(gens, new_variables)


def merge_variables(ideal: MonomialIdeal, a: str, b: str) -> MonomialIdeal:
    """Quotient by ``x_a - x_b``: ``b`` is renamed to ``a`` and dropped."""
    if a == b:
        raise IdealError("difference of identical variables")
    new_vars = [v for v in ideal.variables if v != b]
    varmap = {v: v for v in ideal.variables}
    varmap[b] = a
    return substitute(ideal, varmap, new_vars)


def relabel(ideal: MonomialIdeal, rename: Mapping[str, str]) -> MonomialIdeal:
    """Bijective renaming of variables."""
    new_vars = [rename.get(v, v) for v in ideal.variables]
    if len(set(new_vars)) != len(new_vars):
        raise IdealError("relabelling is not injective")
    return substitute(ideal, {v: rename.get(v, v) for v in ideal.variables}, new_vars)


def transpose_label(label: str) -> str:
    a, b = split_pair(label)
    return pair_label(b, a)


def transpose(ideal: MonomialIdeal) -> MonomialIdeal:
    """Swap the coordinates of every pair-labelled variable ``(a,b) -> (b,a)``."""
    return relabel(ideal, {v: transpose_label(v) for v in ideal.variables})


# -- text format and exporters ----------------------------------------------------------


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``vars: v1 v2 ...`` followed by one monomial per line."""
    variables = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if variables is None:
            if not line.startswith("vars:"):
                raise IdealError(f"line {lineno}: expected 'vars:' header")
            variables = line[5:].split()
            continue
        try:
            mono = Monomial.parse(line)
        except IdealError as exc:
            raise IdealError(f"line {lineno}: {exc}") from None
        unknown = sorted(set(mono.support) - set(variables))
        if unknown:
            raise IdealError(f"line {lineno}: unknown variable {unknown[0]!r} in {line}")
        gens.append(mono)
    if variables is None:
        raise IdealError("missing 'vars:' header")
    try:
        return normalize(gens, variables)
    except IdealError as exc:
        raise IdealError(f"{exc}") from None


def _export_names(ideal: MonomialIdeal) -> list[str]:
    return [f"v{i}" for i in range(len(ideal.variables))]


def export(ideal: MonomialIdeal, dialect: str, name: str = "I") -> str:
    """Ideal definition as a Macaulay2 (``m2``) or Singular (``singular``) script.

    Variables are renamed ``v0, v1, ...``; a comment block records the labels.
    """
    names = _export_names(ideal)
    rename = dict(zip(ideal.variables, names))

    def mono(g: Monomial) -> str:
        if not g:
            return "1"
        return "*".join(rename[k] if e == 1 else f"{rename[k]}^{e}"
                        for k, e in sorted(g.items(), key=lambda kv: ideal._pos[kv[0]]))

    gens = ", ".join(mono(g) for g in ideal.generators) or "0"
    if dialect == "m2":
        lines = [f"-- {n} = {v}" for n, v in zip(names, ideal.variables)]
        lines.append(f"R = QQ[{', '.join(names)}];")
        lines.append(f"{name} = monomialIdeal({gens});")
    elif dialect == "singular":
        lines = [f"// {n} = {v}" for n, v in zip(names, ideal.variables)]
        lines.append(f"ring R = 0, ({', '.join(names)}), dp;")
        lines.append(f"ideal {name} = {gens};")
    else:
        raise IdealError(f"unknown export dialect {dialect!r}")
    return "\n".join(lines) + "\n"
