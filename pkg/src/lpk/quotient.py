"""Isotone maps out of product posets, their fibers, and cutting monomial
ideals down by the resulting variable differences.

A map ``f: Q x P -> R`` identifies the variables ``x[(q,p)]`` lying in one
fiber.  Fibers are judged as subsets of ``Q x P^op``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceeded, IdealError, InternalError, PosetError
from .monomial import (
    Monomial, MonomialIdeal, alexander_dual, associated_primes_bruteforce, colon,
    merge_variables, normalize, substitute, zerodivisor_witness,
)
from .poset import IsotoneMap, Poset, pair_label, product, split_pair


@dataclass(frozen=True, eq=False)
class FiberedMap:
    """An isotone map from a product poset ``Q x P`` to ``R``."""

    map: IsotoneMap

    def __post_init__(self):
        if self.map.domain.factors is None:
            raise PosetError("source of a fibered map must be a product poset")

    @classmethod
    def from_function(cls, q: Poset, p: Poset, target: Poset,
                      fn: Callable[[str, str], str]) -> "FiberedMap":
        src = product(q, p)
        vals = tuple(str(fn(*split_pair(e))) for e in src.elements)
        return cls(IsotoneMap(src, target, vals))

    @classmethod
    def from_pairs(cls, q: Poset, p: Poset, target: Poset,
                   pairs: Iterable[Sequence[str]]) -> "FiberedMap":
        table = {str(a): str(b) for a, b in pairs}
        src = product(q, p)
        missing = [e for e in src.elements if e not in table]
        if missing:
            raise PosetError(f"map is undefined on {missing[0]}")
        return cls(IsotoneMap(src, target, tuple(table[e] for e in src.elements)))

    @property
    def source(self) -> Poset:
        return self.map.domain

    @property
    def target(self) -> Poset:
        return self.map.codomain

    @property
    def factors(self) -> tuple[Poset, Poset]:
        return self.map.domain.factors

    @property
    def assignment(self) -> dict[str, str]:
        return self.map.assignment

    def fibers(self) -> list[tuple[str, list[str]]]:
        """Nonempty fibers in target order, elements along the source's linear extension."""
        by_target: dict[str, list[str]] = {}
        for e in self.source.linear_extension:
            by_target.setdefault(self.map(e), []).append(e)
        return [(r, by_target[r]) for r in self.target.elements if r in by_target]

    def transposed(self) -> "FiberedMap":
        """The same map read on ``P x Q``."""
        q, p = self.factors
        return FiberedMap.from_function(p, q, self.target,
                                        lambda b, a: self.map(pair_label(a, b)))

    def to_json(self) -> dict:
        return {"pairs": [[e, v] for e, v in self.map.graph()]}


@dataclass(frozen=True)
class FiberReport:
    target: str
    elements: tuple[str, ...]
    chain: bool
    left_strict: bool
    right_strict: bool

    @property
    def bistrict(self) -> bool:
        return self.left_strict and self.right_strict


@dataclass(frozen=True)
class FiberSummary:
    fibers: tuple[FiberReport, ...]

    @property
    def chain(self) -> bool:
        return all(f.chain for f in self.fibers)

    @property
    def left_strict(self) -> bool:
        return all(f.left_strict for f in self.fibers)

    @property
    def right_strict(self) -> bool:
        return all(f.right_strict for f in self.fibers)

    @property
    def bistrict(self) -> bool:
        return all(f.bistrict for f in self.fibers)


def classify_fibers(f: FiberedMap) -> FiberSummary:
    q, p = f.factors
    reports = []
    for r, elems in f.fibers():
        pts = [split_pair(e) for e in elems]
        chain = left = right = True
        for (a, b), (c, d) in itertools.combinations(pts, 2):
            # order in Q x P^op
            if q.leq(a, c) and p.leq(d, b):
                lo, hi = (a, b), (c, d)
            elif q.leq(c, a) and p.leq(b, d):
                lo, hi = (c, d), (a, b)
            else:
                chain = left = right = False
                break
            left = left and q.lt(lo[0], hi[0])
            right = right and p.lt(hi[1], lo[1])
        reports.append(FiberReport(r, tuple(elems), chain, chain and left, chain and right))
    return FiberSummary(tuple(reports))


def kernel_basis(f: FiberedMap) -> list[tuple[str, str]]:
    """Consecutive differences ``(a, b)`` standing for ``x_a - x_b`` inside each fiber."""
    out = []
    for _, elems in f.fibers():
        out.extend(zip(elems, elems[1:]))
    return out


def quotient_ideal(ideal: MonomialIdeal, f: FiberedMap) -> MonomialIdeal:
    """Image of ``ideal`` under the variable identification of ``f``."""
    if set(ideal.variables) != set(f.source.elements):
        raise IdealError("ideal variables do not match the map's source")
    return substitute(ideal, f.assignment, f.target.elements)


# -- zerodivisors and regular sequences -----------------------------------------------


def face_witness(ideal: MonomialIdeal, a: str, b: str) -> frozenset[str] | None:
    """For squarefree ``I``: a face ``F`` avoiding ``a, b`` with ``F + a`` and
    ``F + b`` both nonfaces, or None."""
    if any(not g.is_squarefree() for g in ideal.generators):
        raise IdealError("face oracle needs a squarefree ideal")
    ia, ib = ideal._pos[a], ideal._pos[b]
    ma, mb = 1 << ia, 1 << ib
    masks = ideal.masks
    with_a = [g & ~ma for g in masks if g & ma]
    with_b = [g & ~mb for g in masks if g & mb]
    best = None
    for u in with_a:
        for w in with_b:
            cand = u | w
            if cand & (ma | mb):
                continue
            if any(g & cand == g for g in masks):
                continue
            if best is None or (bin(cand).count("1"), cand) < (bin(best).count("1"), best):
                best = cand
    if best is None:
        return None
    return frozenset(ideal.variables[i] for i in range(len(ideal.variables)) if best >> i & 1)


@dataclass(frozen=True)
class ZerodivisorCheck:
    a: str
    b: str
    regular: bool
    monomial: Monomial | None = None  # (I : monomial) is a prime containing x_a, x_b
    prime: frozenset[str] | None = None
    face: frozenset[str] | None = None


def check_difference(ideal: MonomialIdeal, a: str, b: str, method: str = "associated",
                     budget: int = 500_000) -> ZerodivisorCheck:
    """Is ``x_a - x_b`` a nonzerodivisor on ``S/I``?

    ``associated`` searches for an associated prime containing both
    variables from pairs of generators; ``brute`` enumerates all primes
    ``(I : m)`` over divisors ``m`` of the lcm.  For squarefree ideals the
    face criterion is evaluated as well and must agree.
    """
    if a == b:
        raise IdealError(f"difference of identical variables {a!r}")
    for v in (a, b):
        if v not in ideal._pos:
            raise IdealError(f"unknown variable {v!r}")
    if method == "associated":
        m = zerodivisor_witness(ideal, a, b)
        prime = None
        if m is not None:
            prime = frozenset(next(iter(g)) for g in colon(ideal, m).generators)
    elif method == "brute":
        m = prime = None
        for pr, wit in associated_primes_bruteforce(ideal, budget):
            if a in pr and b in pr:
                m, prime = wit, pr
                break
    elif method == "face":
        face = face_witness(ideal, a, b)
        return ZerodivisorCheck(a, b, face is None, face=face)
    else:
        raise IdealError(f"unknown regularity method {method!r}")
    face = None
    if ideal.is_squarefree():
        face = face_witness(ideal, a, b)
        if (face is None) != (m is None):
            raise InternalError(f"face and associated-prime oracles disagree on {a} - {b} for {ideal}")
    return ZerodivisorCheck(a, b, m is None, m, prime, face)


@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    steps: tuple[ZerodivisorCheck, ...]
    final_ideal: MonomialIdeal
    renaming: dict = field(default_factory=dict)  # original label -> surviving label

    @property
    def failure(self) -> ZerodivisorCheck | None:
        return next((s for s in self.steps if not s.regular), None)


def is_regular_sequence(ideal: MonomialIdeal, diffs: Sequence[tuple[str, str]],
                        method: str = "associated") -> RegularityVerdict:
    """Check ``x_a - x_b`` for each pair in order, modulo the earlier ones.

    After a difference passes, ``b`` is merged into ``a``; later pairs are
    rewritten accordingly.  Stops at the first zerodivisor.
    """
    rep: dict[str, str] = {v: v for v in ideal.variables}

    def find(v):
        while rep[v] != v:
            v = rep[v]
        return v

    current = ideal
    steps = []
    for a0, b0 in diffs:
        for v in (a0, b0):
            if v not in rep:
                raise IdealError(f"unknown variable {v!r}")
        a, b = find(a0), find(b0)
        if a == b:
            raise IdealError(f"difference {a0} - {b0} is dependent on earlier ones")
        step = check_difference(current, a, b, method)
        steps.append(step)
        if not step.regular:
            return RegularityVerdict(False, tuple(steps), current,
                                     {v: find(v) for v in ideal.variables})
        current = merge_variables(current, a, b)
        rep[b] = a
    return RegularityVerdict(True, tuple(steps), current, {v: find(v) for v in ideal.variables})


# -- separations ---------------------------------------------------------------------


@dataclass(frozen=True)
class SeparationWitness:
    split_variable: str
    new_labels: tuple[str, str]
    lifted_ideal: MonomialIdeal
    regular_difference: tuple[str, str]


@dataclass(frozen=True)
class SeparationResult:
    separable: bool
    witness: SeparationWitness | None
    exhaustive: bool
    examined: int
    witnesses: tuple[SeparationWitness, ...] = ()


def _fresh_labels(ideal: MonomialIdeal, v: str) -> tuple[str, str]:
    taken = set(ideal.variables)
    a, b = f"{v}_1", f"{v}_2"
    while a in taken or b in taken:
        a, b = a + "'", b + "'"
    return a, b


def is_separation(ideal: MonomialIdeal, lifted: MonomialIdeal, v: str,
                  labels: tuple[str, str]) -> bool:
    """Check the three conditions for ``lifted`` to separate ``v`` into ``labels``."""
    v1, v2 = labels
    varmap = {u: u for u in lifted.variables}
    varmap[v1] = varmap[v2] = v
    if substitute(lifted, varmap, ideal.variables) != ideal:
        return False
    used = set().union(*(g.support for g in lifted.generators)) if lifted.generators else set()
    if v1 not in used or v2 not in used:
        return False
    return check_difference(lifted, v1, v2).regular


def separations(ideal: MonomialIdeal, budget: int = 100_000,
                collect_all: bool = False) -> SeparationResult:
    """Search single-variable separations.

    For a variable ``v`` every minimal generator ``g = v^e * g'`` is lifted to
    ``v1^k v2^(e-k) g'`` for a chosen ``0 <= k <= e``; the candidates are all
    such choices (up to swapping ``v1, v2``) that use both new variables.
    """
    examined = 0
    found: list[SeparationWitness] = []
    for v in ideal.variables:
        users = [g for g in ideal.generators if g.get(v)]
        if len(users) < 1:
            continue
        v1, v2 = _fresh_labels(ideal, v)
        new_vars = [u for u in ideal.variables if u != v] + [v1, v2]
        others = [g for g in ideal.generators if not g.get(v)]
        for split in itertools.product(*(range(g[v] + 1) for g in users)):
            flipped = tuple(g[v] - k for g, k in zip(users, split))
            if flipped > split:
                continue  # mirror image of a candidate already seen
            if not any(split) or not any(flipped):
                continue
            examined += 1
            if examined > budget:
                return SeparationResult(bool(found), found[0] if found else None, False,
                                        examined - 1, tuple(found))
            lifted_gens = []
            for g, k in zip(users, split):
                rest = {u: e for u, e in g.items() if u != v}
                if k:
                    rest[v1] = k
                if g[v] - k:
                    rest[v2] = g[v] - k
                lifted_gens.append(Monomial(rest))
            lifted = normalize(lifted_gens + others, new_vars)
            if is_separation(ideal, lifted, v, (v1, v2)):
                w = SeparationWitness(v, (v1, v2), lifted, (v1, v2))
                if not collect_all:
                    return SeparationResult(True, w, True, examined, (w,))
                found.append(w)
    return SeparationResult(bool(found), found[0] if found else None, True, examined, tuple(found))


# -- duality versus quotients -------------------------------------------------------------


@dataclass(frozen=True)
class CompatReport:
    difference: tuple[str, str]
    regular_on_ideal: bool
    regular_on_dual: bool
    image_squarefree: bool
    dual_image_squarefree: bool
    dual_of_image_matches: bool | None  # None when (c) makes no claim

    @property
    def part_a(self) -> bool:
        return (not self.regular_on_ideal) or self.dual_image_squarefree

    @property
    def part_b(self) -> bool:
        return (not self.image_squarefree) or self.regular_on_dual

    @property
    def part_c(self) -> bool:
        return self.dual_of_image_matches is not False

    @property
    def consistent(self) -> bool:
        return self.part_a and self.part_b and self.part_c


def dual_quotient_compat(ideal: MonomialIdeal, diff: tuple[str, str]) -> CompatReport:
    """Compare cutting by ``x_a - x_b`` with Alexander duality for squarefree ``I``.

    Evaluates: regular on ``S/I`` implies the image of the dual is squarefree;
    a squarefree image implies regularity on ``S/J``; and with both
    hypotheses the dual of the image is the image of the dual.
    """
    a, b = diff
    if not ideal.is_squarefree():
        raise IdealError("compatibility check needs a squarefree ideal")
    dual = alexander_dual(ideal)
    reg_i = check_difference(ideal, a, b).regular
    reg_j = check_difference(dual, a, b).regular
    img = merge_variables(ideal, a, b)
    dimg = merge_variables(dual, a, b)
    match = None
    if reg_i and img.is_squarefree():
        match = alexander_dual(img) == dimg
    return CompatReport((a, b), reg_i, reg_j, img.is_squarefree(), dimg.is_squarefree(), match)


@dataclass(frozen=True)
class BistrictDualityCheck:
    bistrict: bool
    image: MonomialIdeal
    transposed_image: MonomialIdeal
    dual_matches: bool


def bistrict_duality(f: FiberedMap, ideal: MonomialIdeal, dual: MonomialIdeal) -> BistrictDualityCheck:
    """For ``f`` on ``Q x P`` with ``ideal`` over ``Q x P`` and ``dual`` over
    ``P x Q``: is the dual of ``f(ideal)`` equal to the image of ``dual``
    under the transposed map?"""
    summary = classify_fibers(f)
    img = quotient_ideal(ideal, f)
    timg = quotient_ideal(dual, f.transposed())
    ok = img.is_squarefree() and alexander_dual(img) == timg
    return BistrictDualityCheck(summary.bistrict, img, timg, ok)


def parse_pairs_json(text: str) -> list[tuple[str, str]]:
    data = json.loads(text)
    try:
        return [(str(a), str(b)) for a, b in data["pairs"]]
    except (KeyError, TypeError, ValueError):
        raise PosetError('map JSON must look like {"pairs": [[source, target], ...]}') from None
