"""Graded Betti numbers, K-polynomials and derived ring invariants of ``S/I``.

Betti numbers come from the Koszul complex of ``S/I`` cut down to a single
multidegree ``sigma``: the basis in homological degree ``i`` is the set of
``i``-subsets ``F`` of the support of ``sigma`` with ``x^(sigma - F)`` not in
``I``.  Only multidegrees in the lcm lattice of the generators can carry
homology (plus ``sigma = 0`` in degree 0).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import comb, gcd
from typing import Iterable, Sequence

from .errors import BudgetExceeded, IdealError
from .monomial import MonomialIdeal, alexander_dual, minimal_transversals

DEFAULT_MULTIDEGREE_BUDGET = 300_000


def default_characteristic() -> int:
    raw = os.environ.get("LPK_CHAR", "0").strip()
    try:
        p = int(raw)
    except ValueError:
        raise IdealError(f"LPK_CHAR must be 0 or a prime, got {raw!r}") from None
    _check_char(p)
    return p


def _check_char(p: int):
    if p == 0:
        return
    if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise IdealError(f"characteristic must be 0 or a prime, got {p}")


# -- exact ranks -------------------------------------------------------------------


def sparse_rank(columns: Iterable[dict[int, int]], characteristic: int = 0) -> int:
    """Rank of a sparse integer matrix given column by column.

    Each column is reduced against stored pivot columns keyed by their
    smallest row index.  Over the rationals elimination is fraction free
    (cross multiplication, then division by the content); over ``GF(p)``
    arithmetic is modular.
    """
    pivots: dict[int, dict[int, int]] = {}
    p = characteristic
    rank = 0
    for col in columns:
        v = {r: c for r, c in col.items() if (c % p if p else c)}
        if p:
            v = {r: c % p for r, c in v.items()}
        while v:
            r = min(v)
            piv = pivots.get(r)
            if piv is None:
                if p:
                    inv = pow(v[r], p - 2, p)
                    v = {k: c * inv % p for k, c in v.items()}
                pivots[r] = v
                rank += 1
                break
            a, b = piv[r], v[r]
            if p:
                # piv is normalised so piv[r] == 1
                nv = dict(v)
                for k, c in piv.items():
                    x = (nv.get(k, 0) - b * c) % p
                    if x:
                        nv[k] = x
                    else:
                        nv.pop(k, None)
                v = nv
            else:
                nv = {k: a * c for k, c in v.items()}
                for k, c in piv.items():
                    x = nv.get(k, 0) - b * c
                    if x:
                        nv[k] = x
                    else:
                        nv.pop(k, None)
                g = reduce(gcd, nv.values(), 0)
                if g > 1:
                    nv = {k: c // g for k, c in nv.items()}
                v = nv
    return rank


# -- lcm lattice ------------------------------------------------------------------------


def lcm_lattice(ideal: MonomialIdeal, budget: int = DEFAULT_MULTIDEGREE_BUDGET) -> list[tuple[int, ...]]:
    """All lcms of nonempty sets of generators, as exponent vectors."""
    if ideal.is_squarefree():
        n = len(ideal.variables)
        masks = ideal.masks
        seen = set(masks)
        frontier = list(seen)
        while frontier:
            new = []
            for e in frontier:
                for g in masks:
                    u = e | g
                    if u not in seen:
                        seen.add(u)
                        new.append(u)
                        if len(seen) > budget:
                            raise BudgetExceeded(
                                f"lcm lattice has more than {budget} multidegrees")
            frontier = new
        return sorted((tuple(m >> i & 1 for i in range(n)) for m in seen),
                      key=lambda t: (sum(t), t))
    gens = ideal.dense
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                u = tuple(max(a, b) for a, b in zip(e, g))
                if u not in seen:
                    seen.add(u)
                    new.append(u)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"lcm lattice has more than {budget} multidegrees")
        frontier = new
    return sorted(seen, key=lambda t: (sum(t), t))


# -- Koszul strands ----------------------------------------------------------------------


def _strand_betti(sigma: tuple[int, ...], gens: Sequence[tuple[int, ...]],
                  characteristic: int) -> dict[int, int]:
    """``{i: beta_{i,sigma}(S/I)}`` for one multidegree."""
    supp = [k for k, e in enumerate(sigma) if e]
    s = len(supp)
    relevant = [g for g in gens if all(a <= b for a, b in zip(g, sigma))]
    if not relevant:
        return {0: 1} if s == 0 else {}
    # generator g divides x^(sigma - F) iff for each support position k in F,
    # g_k <= sigma_k - 1.  Encode the positions where g needs the full sigma_k.
    need = []
    for g in relevant:
        mask = 0
        for pos, k in enumerate(supp):
            if g[k] == sigma[k]:
                mask |= 1 << pos
        need.append(mask)
    # x^(sigma - F) in I  iff  some need-mask is disjoint from F
    full = (1 << s) - 1
    # so F is a basis element iff it meets every need-mask: enumerate the
    # transversals as supersets of the minimal ones
    valid: list[int] = []
    mins = minimal_transversals(need)
    if not mins:
        return {}
    seen = set()
    stack = list(mins)
    for m in mins:
        seen.add(m)
    while stack:
        f = stack.pop()
        valid.append(f)
        rest = full & ~f
        while rest:
            bit = rest & -rest
            rest ^= bit
            g = f | bit
            if g not in seen:
                seen.add(g)
                stack.append(g)
    by_deg: dict[int, list[int]] = {}
    for f in valid:
        by_deg.setdefault(bin(f).count("1"), []).append(f)
    index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_deg.items()}
    ranks: dict[int, int] = {}
    for d, fs in by_deg.items():
        lower = index.get(d - 1)
        if not lower:
            ranks[d] = 0
            continue
        cols = []
        for f in fs:
            col = {}
            sign = 1
            bits = f
            while bits:
                bit = bits & -bits
                bits ^= bit
                r = lower.get(f ^ bit)
                if r is not None:
                    col[r] = sign
                sign = -sign
            cols.append(col)
        ranks[d] = sparse_rank(cols, characteristic)
    out = {}
    for d, fs in by_deg.items():
        b = len(fs) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def _strand_chunk(args):
    sigmas, gens, characteristic = args
    return [(sigma, _strand_betti(sigma, gens, characteristic)) for sigma in sigmas]


def multigraded_betti(ideal: MonomialIdeal, characteristic: int | None = None,
                      budget: int = DEFAULT_MULTIDEGREE_BUDGET, jobs: int = 1,
                      method: str = "auto") -> dict[tuple[int, tuple[int, ...]], int]:
    """Nonzero ``beta_{i,sigma}(S/I)`` keyed by ``(i, sigma)``.

    ``koszul`` evaluates every multidegree of the lcm lattice directly.
    ``split`` recurses through variable partitions (see :func:`_split_betti`),
    polarizing first when ``I`` is not squarefree.  ``auto`` picks ``koszul``
    for small lattices and ``split`` otherwise.
    """
    if characteristic is None:
        characteristic = default_characteristic()
    _check_char(characteristic)
    if ideal.is_zero():
        raise IdealError("Betti numbers of the zero ideal are not computed")
    if ideal.is_unit():
        return {}
    if method not in ("auto", "koszul", "split"):
        raise IdealError(f"unknown Betti method {method!r}")
    n = len(ideal.variables)
    if method == "auto":
        method = "koszul" if len(ideal.generators) <= 8 or n <= 8 else "split"
    if method == "split":
        return _betti_by_splitting(ideal, characteristic, budget)
    zero = (0,) * n
    out = {(0, zero): 1}
    sigmas = lcm_lattice(ideal, budget)
    gens = ideal.dense
    if jobs > 1 and len(sigmas) > 64:
        chunks = [sigmas[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_strand_chunk, [(c, gens, characteristic) for c in chunks]))
        results = [r for part in parts for r in part]
    else:
        results = _strand_chunk((sigmas, gens, characteristic))
    for sigma, betti in sorted(results):
        for i, b in betti.items():
            out[(i, sigma)] = b
    return out


# -- splitting along a variable ------------------------------------------------------------


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _minimize(masks) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=lambda x: (_popcount(x), x)):
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def _koszul_masks(gens: Sequence[int], characteristic: int, budget: int) -> dict:
    """Ideal-convention ``beta_{i,W}(I)`` for squarefree generators given as bitmasks."""
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                u = e | g
                if u not in seen:
                    seen.add(u)
                    new.append(u)
        if len(seen) > budget:
            raise BudgetExceeded(f"lcm lattice has more than {budget} multidegrees")
        frontier = new
    out = {}
    for w in seen:
        rel = [g for g in gens if g & w == g]
        mins = minimal_transversals(rel)
        valid = set(mins)
        stack = list(mins)
        while stack:
            f = stack.pop()
            rest = w & ~f
            while rest:
                bit = rest & -rest
                rest ^= bit
                h = f | bit
                if h not in valid:
                    valid.add(h)
                    stack.append(h)
        by_deg: dict[int, list[int]] = {}
        for f in valid:
            by_deg.setdefault(_popcount(f), []).append(f)
        index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_deg.items()}
        ranks = {}
        for d, fs in by_deg.items():
            lower = index.get(d - 1)
            if not lower:
                ranks[d] = 0
                continue
            cols = []
            for f in fs:
                col, sign, bits = {}, 1, f
                while bits:
                    bit = bits & -bits
                    bits ^= bit
                    r = lower.get(f ^ bit)
                    if r is not None:
                        col[r] = sign
                    sign = -sign
                cols.append(col)
            ranks[d] = sparse_rank(cols, characteristic)
        for d, fs in by_deg.items():
            b = len(fs) - ranks.get(d, 0) - ranks.get(d + 1, 0)
            if b:
                out[(d - 1, w)] = b
    return out


class _SplitState:
    def __init__(self, characteristic: int, budget: int):
        self.characteristic = characteristic
        self.budget = budget
        self.memo: dict = {}
        self.fallbacks = 0


def _split_betti(gens: frozenset, st: _SplitState) -> dict:
    """Ideal-convention multigraded Betti numbers of a squarefree ideal.

    Picks a variable ``x`` and writes ``I = J + K`` with ``J = x J'`` the
    generators divisible by ``x`` and ``K`` the rest, so ``J cap K = x (J' cap K)``.
    The mapping cone of ``J cap K -> J + K`` is minimal whenever no
    multidegree carries Betti numbers of both ``J'`` and ``J' cap K`` in
    the same homological degree; then
    ``beta_i(I) = beta_i(J) + beta_i(K) + beta_{i-1}(J cap K)``.
    Without such a variable the Koszul computation is used.
    """
    memo = st.memo
    hit = memo.get(gens)
    if hit is not None:
        return hit
    gl = sorted(gens)
    if 0 in gens:
        res = {(0, 0): 1}
    elif len(gl) == 1:
        res = {(0, gl[0]): 1}
    elif all(not (a & b) for a, b in combinations(gl, 2)) and len(gl) <= 16:
        # complete intersection: Taylor complex is minimal
        res = {}
        for r in range(1, len(gl) + 1):
            for sub in combinations(gl, r):
                w = reduce(lambda a, b: a | b, sub)
                res[(r - 1, w)] = res.get((r - 1, w), 0) + 1
    elif len(gl) <= 4 or _popcount(reduce(lambda a, b: a | b, gl)) <= 6:
        res = _koszul_masks(gl, st.characteristic, st.budget)
    else:
        res = None
        freq: dict[int, int] = {}
        for g in gl:
            bits = g
            while bits:
                bit = bits & -bits
                bits ^= bit
                freq[bit] = freq.get(bit, 0) + 1
        order = sorted(freq, key=lambda b: (freq[b], b))
        for bit in order[:4]:
            jp = frozenset(_minimize(g & ~bit for g in gl if g & bit))
            k = [g for g in gl if not g & bit]
            if not k:
                res = {(i, w | bit): v for (i, w), v in _split_betti(jp, st).items()}
                break
            jk = frozenset(_minimize(j | h for j in jp for h in k))
            b_j = _split_betti(jp, st)
            b_jk = _split_betti(jk, st)
            if any(key in b_j for key in b_jk):
                continue
            b_k = _split_betti(frozenset(k), st)
            res = dict(b_k)
            for (i, w), v in b_j.items():
                key = (i, w | bit)
                res[key] = res.get(key, 0) + v
            for (i, w), v in b_jk.items():
                key = (i + 1, w | bit)
                res[key] = res.get(key, 0) + v
            break
        if res is None:
            st.fallbacks += 1
            res = _koszul_masks(gl, st.characteristic, st.budget)
    memo[gens] = res
    return res


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, list[int]]:
    """Squarefree polarization; also returns, for each new variable, the
    index of the original variable it copies."""
    from .monomial import Monomial, normalize

    top = [0] * len(ideal.variables)
    for g in ideal.dense:
        top = [max(a, b) for a, b in zip(top, g)]
    new_vars, origin = [], []
    for k, v in enumerate(ideal.variables):
        for c in range(1, max(top[k], 1) + 1):
            new_vars.append(v if top[k] <= 1 else f"{v}#{c}")
            origin.append(k)
    gens = []
    for g in ideal.generators:
        labels = []
        for v, e in g.items():
            k = ideal._pos[v]
            labels.extend([v] if top[k] <= 1 else [f"{v}#{c}" for c in range(1, e + 1)])
        gens.append(Monomial.from_set(labels))
    return normalize(gens, new_vars), origin


def _betti_by_splitting(ideal: MonomialIdeal, characteristic: int, budget: int) -> dict:
    pol, origin = (ideal, list(range(len(ideal.variables)))) if ideal.is_squarefree() \
        else polarize(ideal)
    st = _SplitState(characteristic, budget)
    ideal_betti = _split_betti(frozenset(pol.masks), st)
    n = len(ideal.variables)
    out = {(0, (0,) * n): 1}
    for (i, w), v in ideal_betti.items():
        sigma = [0] * n
        bits, k = w, 0
        while bits:
            if bits & 1:
                sigma[origin[k]] += 1
            bits >>= 1
            k += 1
        key = (i + 1, tuple(sigma))
        out[key] = out.get(key, 0) + v
    return out


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}(S/I)``."""

    entries: dict
    nvars: int

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(sorted(self.entries.items())))

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def totals(self) -> list[int]:
        top = self.pd
        return [sum(v for (i, _), v in self.entries.items() if i == k) for k in range(top + 1)]

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def ideal_entries(self) -> dict:
        """``beta_{i,j}(I) = beta_{i+1,j}(S/I)``."""
        return {(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1}

    def k_polynomial(self) -> "HilbertNumerator":
        top = max((j for _, j in self.entries), default=0)
        coeffs = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            coeffs[j] += (-1) ** i * v
        return HilbertNumerator(tuple(coeffs))

    def to_json(self) -> dict:
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}

    def format(self) -> str:
        """Diagonal layout: column ``i``, row ``j - i``."""
        if not self.entries:
            return "(empty)\n"
        top = self.pd
        rows = sorted({j - i for i, j in self.entries})
        cells = [[str(self.get(i, i + r)) if self.get(i, i + r) else "." for i in range(top + 1)]
                 for r in rows]
        totals = [str(t) for t in self.totals()]
        width = max(len(c) for row in cells + [totals] for c in row)
        label_w = max(len("total:"), max(len(f"{r}:") for r in rows))
        head = " " * (label_w + 1) + " ".join(str(i).rjust(width) for i in range(top + 1))
        lines = [head, "total:".rjust(label_w) + " " + " ".join(t.rjust(width) for t in totals)]
        for r, row in zip(rows, cells):
            lines.append(f"{r}:".rjust(label_w) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.format()


def betti_table(ideal: MonomialIdeal, characteristic: int | None = None,
                budget: int = DEFAULT_MULTIDEGREE_BUDGET, jobs: int = 1,
                method: str = "auto") -> BettiTable:
    graded: dict[tuple[int, int], int] = {}
    for (i, sigma), v in multigraded_betti(ideal, characteristic, budget, jobs, method).items():
        key = (i, sum(sigma))
        graded[key] = graded.get(key, 0) + v
    return BettiTable(dict(sorted(graded.items())), len(ideal.variables))


# -- Hilbert numerators ----------------------------------------------------------------


def _poly_trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_shift(a, k):
    return _poly_trim([0] * k + list(a))


@dataclass(frozen=True)
class HilbertNumerator:
    """Integer polynomial in ``t``; ``coeffs[k]`` is the coefficient of ``t^k``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _poly_trim(self.coeffs))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def divide_one_minus_t(self, times: int) -> "HilbertNumerator":
        """Exact division by ``(1 - t)^times``; raises if not divisible."""
        c = list(self.coeffs)
        for _ in range(times):
            # c(t) = (1 - t) q(t): q_k = c_0 + ... + c_k
            q, acc = [], 0
            for x in c:
                acc += x
                q.append(acc)
            if q[-1] != 0:
                raise IdealError("numerator is not divisible by (1 - t)")
            c = list(_poly_trim(q[:-1] or [0]))
        return HilbertNumerator(tuple(c))

    def multiply_one_minus_t(self, times: int) -> "HilbertNumerator":
        c = self.coeffs
        for _ in range(times):
            c = _poly_mul(c, (1, -1))
        return HilbertNumerator(c)

    def series(self, nvars: int, upto: int) -> list[int]:
        """Coefficients of ``numerator / (1 - t)^nvars`` in degrees ``0..upto``."""
        out = []
        for d in range(upto + 1):
            total = 0
            for k, c in enumerate(self.coeffs):
                if k <= d and c:
                    total += c * comb(d - k + nvars - 1, nvars - 1) if nvars else (c if d == k else 0)
            out.append(total)
        return out


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def hilbert_numerator_inclusion_exclusion(ideal: MonomialIdeal, max_gens: int = 20) -> HilbertNumerator:
    """Alternating sum of ``t^deg lcm(A)`` over all subsets ``A`` of generators."""
    gens = ideal.dense
    if len(gens) > max_gens:
        raise BudgetExceeded(f"{len(gens)} generators exceed the inclusion-exclusion limit {max_gens}")
    n = len(ideal.variables)
    coeffs: dict[int, int] = {0: 1}

    def rec(k, cur, size):
        for j in range(k, len(gens)):
            u = _lcm(cur, gens[j])
            d = sum(u)
            coeffs[d] = coeffs.get(d, 0) + (-1) ** (size + 1)
            rec(j + 1, u, size + 1)

    rec(0, (0,) * n, 0)
    top = max(coeffs)
    return HilbertNumerator(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def hilbert_numerator(ideal: MonomialIdeal) -> HilbertNumerator:
    """K-polynomial of ``S/I``.

    Small ideals use inclusion-exclusion over generator subsets directly;
    larger ones use the equivalent recursion
    ``K(J + (g)) = K(J) - t^deg(g) K(J : g)``.
    """
    if ideal.is_zero():
        return HilbertNumerator((1,))
    if len(ideal.generators) <= 12:
        return hilbert_numerator_inclusion_exclusion(ideal)
    memo: dict = {}

    def minimal(vecs):
        vecs = sorted(set(vecs), key=sum)
        out = []
        for v in vecs:
            if not any(all(a <= b for a, b in zip(w, v)) for w in out):
                out.append(v)
        return tuple(sorted(out))

    def k_poly(gens: tuple) -> tuple[int, ...]:
        if not gens:
            return (1,)
        if gens in memo:
            return memo[gens]
        # pairwise coprime generators: product formula
        supports = [frozenset(k for k, e in enumerate(g) if e) for g in gens]
        if all(not (a & b) for a, b in combinations(supports, 2)):
            res = (1,)
            for g in gens:
                res = _poly_mul(res, _poly_add((1,), _poly_shift((-1,), sum(g))))
        else:
            # pivot on the generator of largest degree
            last = max(gens, key=lambda g: (sum(g), g))
            rest = tuple(g for g in gens if g != last)
            quot = minimal(tuple(max(a - b, 0) for a, b in zip(g, last)) for g in rest)
            res = _poly_add(k_poly(rest), _poly_shift(tuple(-c for c in k_poly(quot)), sum(last)))
        memo[gens] = res
        return res

    return HilbertNumerator(k_poly(minimal(ideal.dense)))


def hilbert_function(ideal: MonomialIdeal, upto: int) -> list[int]:
    """Number of standard monomials in each degree ``0..upto``, by enumeration."""
    n = len(ideal.variables)
    counts = []
    layer = {(0,) * n}
    for d in range(upto + 1):
        std = [m for m in layer if not ideal.contains_dense(m)]
        counts.append(len(std))
        nxt = set()
        for m in std:
            for k in range(n):
                nxt.add(m[:k] + (m[k] + 1,) + m[k + 1:])
        layer = nxt
    return counts


def h_polynomial(ideal: MonomialIdeal) -> HilbertNumerator:
    """``K(t) / (1 - t)^codim``, the numerator of the reduced Hilbert series."""
    return hilbert_numerator(ideal).divide_one_minus_t(codim(ideal))


# -- ring properties ---------------------------------------------------------------------


def codim(ideal: MonomialIdeal) -> int:
    if ideal.is_zero():
        return 0
    if ideal.is_unit():
        raise IdealError("the unit ideal has no codimension")
    return min(bin(c).count("1") for c in minimal_transversals(ideal.masks))


@dataclass(frozen=True)
class RingProperties:
    pd_SI: int
    pd_ideal: int
    codim: int
    depth: int  # nvars - pd_SI (Auslander-Buchsbaum)
    CM: bool
    Gorenstein: bool
    linear_resolution: bool
    linear_reason: str
    dual_CM: bool | None  # None for non-squarefree ideals

    @property
    def bi_CM(self) -> bool:
        return bool(self.CM and self.dual_CM)

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["bi_CM"] = self.bi_CM
        return d


def linear_resolution(ideal: MonomialIdeal, table: BettiTable | None = None) -> tuple[bool, str]:
    degs = ideal.degrees()
    if len(degs) != 1:
        return False, f"generators in several degrees {sorted(degs)}"
    d = degs.pop()
    table = table or betti_table(ideal)
    for (i, j), v in table.ideal_entries().items():
        if v and j != d + i:
            return False, f"beta_{{{i},{j}}}(I) = {v} is off the linear strand"
    return True, f"{d}-linear"


def is_cm(ideal: MonomialIdeal, table: BettiTable | None = None) -> bool:
    table = table or betti_table(ideal)
    return table.pd == codim(ideal)


def ring_properties(ideal: MonomialIdeal, characteristic: int | None = None,
                    budget: int = DEFAULT_MULTIDEGREE_BUDGET) -> RingProperties:
    if ideal.is_zero():
        raise IdealError("ring properties need a nonzero ideal")
    table = betti_table(ideal, characteristic, budget)
    pd = table.pd
    c = codim(ideal)
    cm = pd == c
    top_total = table.totals()[-1]
    lin, reason = linear_resolution(ideal, table)
    dual_cm = None
    if ideal.is_squarefree():
        dual = alexander_dual(ideal)
        dual_cm = is_cm(dual, betti_table(dual, characteristic, budget))
    n = len(ideal.variables)
    return RingProperties(pd, pd - 1, c, n - pd, cm, cm and top_total == 1, lin, reason, dual_cm)
