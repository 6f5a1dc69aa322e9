import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from lpk.monomial import Monomial, MonomialIdeal, normalize

settings.register_profile("lpk", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("lpk")


@st.composite
def squarefree_ideals(draw, max_vars=6, max_gens=6):
    n = draw(st.integers(1, max_vars))
    names = [f"x{i}" for i in range(1, n + 1)]
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_gens))
    gens = [Monomial.from_set(v for k, v in enumerate(names) if m >> k & 1) for m in masks]
    return normalize(gens, names)


@st.composite
def monomial_ideals(draw, max_vars=4, max_gens=5, max_exp=3):
    n = draw(st.integers(1, max_vars))
    names = [f"x{i}" for i in range(1, n + 1)]
    vecs = draw(st.lists(st.lists(st.integers(0, max_exp), min_size=n, max_size=n)
                         .filter(any), min_size=1, max_size=max_gens))
    return normalize([Monomial({v: e for v, e in zip(names, vec) if e}) for vec in vecs], names)


def brute_transversals(ideal: MonomialIdeal) -> set[frozenset[str]]:
    """Minimal hitting sets by checking every subset."""
    supports = [g.support for g in ideal.generators]
    hits = [frozenset(s) for r in range(len(ideal.variables) + 1)
            for s in itertools.combinations(ideal.variables, r)
            if all(frozenset(s) & sup for sup in supports)]
    return {h for h in hits if not any(o < h for o in hits)}


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
