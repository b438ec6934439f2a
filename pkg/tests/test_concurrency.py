"""Shared immutable values must be safe to use from several threads."""

import random
from concurrent.futures import ThreadPoolExecutor

from toposlsc import fixtures
from toposlsc.lsc import build_lsc, xi_component
from toposlsc.fincat import quotient_of_representable
from toposlsc.normalize import normalization_operator
from toposlsc.words import nerode_congruence, orbit_meet_check, random_min_dfa


def test_concurrent_classification_matches_serial():
    G = fixtures.dihedral_4()
    L = build_lsc(G.site())
    samples = [quotient_of_representable(q) for q in L.elements("*")]
    serial = [xi_component(L, X).components for X in samples]
    with ThreadPoolExecutor(max_workers=4) as pool:
        parallel = list(pool.map(lambda X: xi_component(L, X).components, samples))
    assert serial == parallel
    op = normalization_operator(L)
    with ThreadPoolExecutor(max_workers=4) as pool:
        again = list(pool.map(lambda X: xi_component(L, X).components, samples))
    assert again == serial
    assert op == normalization_operator(L)


def test_concurrent_orbit_meets_match_serial():
    rng = random.Random(7)
    congruences = [nerode_congruence(random_min_dfa(rng, 5, "ab"))
                   for _ in range(12)]
    serial = [orbit_meet_check(rc) for rc in congruences]
    with ThreadPoolExecutor(max_workers=4) as pool:
        parallel = list(pool.map(orbit_meet_check, congruences))
    assert serial == parallel
