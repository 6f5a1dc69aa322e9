"""Letterplace and co-letterplace ideals of posets.

For posets Q and P the variables are ``x[(q,p)]`` for ``(q,p)`` in ``Q x P``;
the generator of an isotone map ``phi: Q -> P`` is the product of the
variables on its graph.  ``L(n,P)`` takes ``Q = [n]``; the co-letterplace
ideal ``L(P,n)`` takes ``Q = P`` and target ``[n]``, so its variables are
labelled ``(p,i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import IdealError, InternalError, PosetError
from .monomial import Monomial, MonomialIdeal, normalize, transpose_label
from .poset import (
    HomIdeal, HomPoset, IsotoneMap, Poset, chain, full_ideal, hom_poset, pair_label,
    split_pair,
)


@dataclass(frozen=True, eq=False)
class LetterplaceIdeal:
    Q: Poset
    P: Poset
    selection: HomIdeal | None  # None means all of Hom(Q, P)
    hom: HomPoset
    ideal: MonomialIdeal

    def maps(self) -> list[IsotoneMap]:
        return list(self.hom.maps) if self.selection is None else self.selection.maps()


def product_variables(q: Poset, p: Poset) -> tuple[str, ...]:
    return tuple(pair_label(a, b) for a in q.elements for b in p.elements)


def graph_monomial(phi: IsotoneMap, transpose: bool = False) -> Monomial:
    return Monomial.from_set(phi.graph_labels(transpose))


def letterplace(q: Poset, p: Poset, selection: HomIdeal | None = None) -> LetterplaceIdeal:
    """Ideal generated by the graph monomials of ``selection`` (default: all of Hom(q, p))."""
    if selection is None:
        hom = hom_poset(q, p)
        maps = hom.maps
    else:
        hom = selection.ambient
        if hom.source != q or hom.target != p:
            raise PosetError("selection lives in a different Hom-poset")
        maps = selection.maps()
    variables = product_variables(q, p)
    ideal = normalize([graph_monomial(phi) for phi in maps], variables)
    return LetterplaceIdeal(q, p, selection, hom, ideal)


def letterplace_ideal(n: int, p: Poset) -> MonomialIdeal:
    """``L(n, P)``: one generator per multichain of length ``n`` in ``P``."""
    return letterplace(chain(n), p).ideal


def coletterplace(p: Poset, n: int) -> MonomialIdeal:
    """``L(P, n)``: one generator per isotone map ``P -> [n]``."""
    return letterplace(p, chain(n)).ideal


def subideal(j: HomIdeal) -> MonomialIdeal:
    """``L(J)`` for a downset ``J`` of a Hom-poset."""
    h = j.ambient
    return letterplace(h.source, h.target, j).ideal


def _require_chain_target(h: HomPoset) -> int:
    t = h.target
    n = len(t)
    if t.elements != chain(n).elements or not t.is_total():
        raise PosetError("target must be a chain [n]")
    return n


def lambda_set(phi: IsotoneMap) -> list[tuple[str, int]]:
    """Pairs ``(p, i)`` with ``phi(q) <= i < phi(p)`` for every ``q < p``.

    For minimal ``p`` the lower bound is 1.
    """
    p_poset = phi.domain
    out = []
    for p in p_poset.elements:
        below = [int(phi(q)) for q in p_poset.below(p) if q != p]
        lo = max(below, default=1)
        out.extend((p, i) for i in range(lo, int(phi(p))))
    return out


def lambda_labels(phi: IsotoneMap, transpose: bool = False) -> list[str]:
    if transpose:
        return [pair_label(str(i), p) for p, i in lambda_set(phi)]
    return [pair_label(p, str(i)) for p, i in lambda_set(phi)]


def k_ideal(maps: Iterable[IsotoneMap], ambient: HomPoset, transpose: bool = False) -> MonomialIdeal:
    """Ideal generated by ``m_{Lambda phi}`` over ``maps`` (in ``P x [n]``
    variables, or ``[n] x P`` when ``transpose``)."""
    _require_chain_target(ambient)
    p, t = ambient.source, ambient.target
    variables = product_variables(t, p) if transpose else product_variables(p, t)
    gens = []
    for phi in maps:
        ambient.position(phi)
        gens.append(Monomial.from_set(lambda_labels(phi, transpose)))
    return normalize(gens, variables)


def coletterplace_dual(j: HomIdeal) -> MonomialIdeal:
    """``L(n,P) + K(J^c)`` in ``[n] x P`` variables: the Alexander dual of
    the transpose of ``L(J)``."""
    h = j.ambient
    n = _require_chain_target(h)
    if j.order_mode != "full" or h.strict:
        raise PosetError("dual formula needs a downset of Hom(P,[n]) in the pointwise order")
    lp = letterplace_ideal(n, h.source)
    return lp + k_ideal(j.complement(), h, transpose=True)


@dataclass(frozen=True)
class ColonStep:
    phi: IsotoneMap
    colon_vars: tuple[str, ...]
    expected: tuple[str, ...]  # variables of Lambda phi

    @property
    def matches(self) -> bool:
        return set(self.colon_vars) == set(self.expected)


@dataclass(frozen=True)
class LinearQuotientsCertificate:
    order: tuple[IsotoneMap, ...]
    steps: tuple[ColonStep, ...]
    order_mode: object

    @property
    def pd(self) -> int:
        """Projective dimension of the ideal: the largest colon."""
        return max((len(s.colon_vars) for s in self.steps), default=0)

    @property
    def max_lambda(self) -> int:
        return max((len(s.expected) for s in self.steps), default=0)


def linear_quotients_certificate(j: HomIdeal) -> LinearQuotientsCertificate:
    """Order the generators of ``L(J)`` along the enumeration order of the
    Hom-poset (lexicographic over a linear extension of ``P``) and verify
    that each colon by the earlier generators is generated by variables.

    In the pointwise order those variables must be exactly ``Lambda phi``;
    a mismatch raises :class:`InternalError`.  For the weak order only the
    linear-quotient property is checked.
    """
    h = j.ambient
    _require_chain_target(h)
    if not j.members:
        raise IdealError("empty poset ideal")
    variables = product_variables(h.source, h.target)
    pos = {v: i for i, v in enumerate(variables)}
    order = tuple(j.maps())
    masks = [sum(1 << pos[v] for v in phi.graph_labels()) for phi in order]
    steps = []
    for k, phi in enumerate(order):
        m = masks[k]
        quots = sorted({g & ~m for g in masks[:k]}, key=lambda x: bin(x).count("1"))
        minimal: list[int] = []
        for qm in quots:
            if not any(o & qm == o for o in minimal):
                minimal.append(qm)
        if any(bin(qm).count("1") != 1 for qm in minimal):
            raise InternalError(f"colon at {phi.label} is not generated by variables")
        colon_vars = tuple(sorted((variables[qm.bit_length() - 1] for qm in minimal),
                                  key=pos.__getitem__))
        expected = tuple(sorted(lambda_labels(phi), key=pos.__getitem__))
        step = ColonStep(phi, colon_vars, expected)
        if j.order_mode == "full" and not step.matches:
            raise InternalError(f"colon at {phi.label} is {colon_vars}, expected {expected}")
        steps.append(step)
    return LinearQuotientsCertificate(order, tuple(steps), j.order_mode)


@dataclass(frozen=True)
class DualityWitness:
    """Either an isotone map ``psi: P -> [n]`` whose graph lies in ``F`` or a
    multichain ``p_1 <= ... <= p_n`` with every ``(p_i, i)`` outside ``F``."""

    psi: IsotoneMap | None
    multichain: tuple[str, ...] | None

    @property
    def found(self) -> bool:
        return self.psi is not None


def _pairs(f: Iterable) -> set[tuple[str, int]]:
    out = set()
    for item in f:
        if isinstance(item, str):
            a, b = split_pair(item)
        else:
            a, b = item
        out.add((str(a), int(b)))
    return out


def duality_witness(f: Iterable, p: Poset, n: int) -> DualityWitness:
    """Given ``F`` inside ``P x [n]`` (pairs or ``"(p,i)"`` labels), build the
    filtration ``P = J_n >= ... >= J_0`` where ``J_{i-1}`` is generated by
    the ``q`` in ``J_i`` with ``(q, i)`` outside ``F``."""
    fset = _pairs(f)
    levels: dict[int, frozenset[str]] = {n: frozenset(p.elements)}
    for i in range(n, 0, -1):
        gens = [q for q in p.elements if q in levels[i] and (q, i) not in fset]
        levels[i - 1] = p.ideal_generated(gens)
    if levels[0]:
        # climb: each step picks a generator of the next level above the last
        chain_pts = []
        prev = None
        for i in range(1, n + 1):
            cands = [q for q in p.elements
                     if q in levels[i] and (q, i) not in fset and (prev is None or p.leq(prev, q))]
            if not cands:
                raise InternalError("filtration does not yield a multichain")
            prev = cands[0]
            chain_pts.append(prev)
        return DualityWitness(None, tuple(chain_pts))
    values = {}
    for i in range(1, n + 1):
        for q in levels[i] - levels[i - 1]:
            values[q] = str(i)
    psi = IsotoneMap.from_mapping(p, chain(n), values)
    if not all((q, int(v)) in fset for q, v in values.items()):
        raise InternalError("constructed map leaves F")
    return DualityWitness(psi, None)


def transpose_labels(labels: Iterable[str]) -> list[str]:
    return [transpose_label(v) for v in labels]


def full_certificate(p: Poset, n: int) -> LinearQuotientsCertificate:
    return linear_quotients_certificate(full_ideal(hom_poset(p, chain(n))))
