import pytest

from toposlsc import fixtures
from toposlsc.errors import (
    NotACongruenceOfSubgroupForm,
    NotAGroup,
    NotASubgroup,
)
from toposlsc.fincat import RepCongruence
from toposlsc.lsc import build_lsc
from toposlsc.normalize import (
    FiniteGroup,
    Subgroup,
    check_normalization_inflationary,
    congruence_to_subgroup,
    generated_subgroup,
    is_dedekind,
    monoid_site,
    normalization_is_top,
    normalization_operator,
    normalization_table,
    normalizer_direct,
    subgroup_congruence_bijection,
    subgroup_to_congruence,
    subgroups,
)
from toposlsc.verify import (
    d4_normalization_matches,
    find_non_idempotence_witness,
    find_non_monotonicity_witness,
)


@pytest.fixture(scope="module")
def d4():
    return fixtures.dihedral_4()


@pytest.fixture(scope="module")
def named(d4):
    return fixtures.d4_named_subgroups(d4)


# --- group construction -----------------------------------------------------

def test_group_table_validation():
    with pytest.raises(NotAGroup):
        FiniteGroup.from_table(["e", "a"], [[0, 1], [1, 1]])  # a has no inverse
    with pytest.raises(NotAGroup):
        FiniteGroup.from_table(["e", "a"], [[0, 1]])  # not square


def test_d4_satisfies_its_presentation(d4):
    s, t = "s", "t"
    assert d4.mult(t, s) == d4.mult("s3", t)  # t s = s^3 t
    assert d4.mult(s, "s3") == "e" and d4.mult(t, t) == "e"


def test_subgroup_validation(d4):
    with pytest.raises(NotASubgroup):
        Subgroup(d4, {"e", "s"})  # not closed: s*s = s2 missing


def test_d4_has_ten_subgroups(d4, named):
    subs = subgroups(d4)
    assert len(subs) == 10
    assert set(named.values()) == set(subs)
    assert sorted(H.order for H in subs) == [1, 2, 2, 2, 2, 2, 4, 4, 4, 8]


def test_q8_and_s3_subgroup_counts():
    assert len(subgroups(fixtures.quaternion_8())) == 6
    assert len(subgroups(fixtures.symmetric_3())) == 6
    assert len(subgroups(fixtures.symmetric_4())) == 30


# --- coset encoding ------------------------------------------------------------

def test_bijection_roundtrip_on_all_d4_subgroups(d4):
    forward, backward = subgroup_congruence_bijection(d4)
    for H in subgroups(d4):
        assert backward(forward(H)) == H


def test_forward_of_trivial_subgroup_is_discrete(d4):
    q = subgroup_to_congruence(d4, generated_subgroup(d4, []))
    assert q.is_discrete()
    q_all = subgroup_to_congruence(d4, generated_subgroup(d4, ["s", "t"]))
    assert q_all.is_total()


def test_coset_action_is_conjugation(d4, named):
    # s^-1 t s = s2t, so acting by s sends <t>-cosets to <s2t>-cosets
    conj = d4.conjugate("t", "s")
    assert conj == "s2t"
    q = subgroup_to_congruence(d4, named["<t>"])
    assert q.precompose("s") == subgroup_to_congruence(d4, named["<s2t>"])
    # and in general the action matches brute-force subgroup conjugation
    for H in subgroups(d4):
        for g in d4.elements:
            assert subgroup_to_congruence(d4, H).precompose(g) == \
                subgroup_to_congruence(d4, H.conjugate(g))


def test_backward_rejects_corrupt_congruence():
    z4 = fixtures.cyclic_group(4)
    # {0,1},{2,3} is a partition whose identity block is not a subgroup;
    # it is not right-compatible, so it can only arise from corrupted data
    corrupt = RepCongruence(z4.site(), "*", {"*": [["0", "1"], ["2", "3"]]})
    with pytest.raises(NotACongruenceOfSubgroupForm):
        congruence_to_subgroup(z4, corrupt)


# --- the brute-force oracle ---------------------------------------------------------

def test_normalizer_direct_examples(d4, named):
    assert normalizer_direct(d4, named["<t>"]) == named["<t,s2>"]
    assert normalizer_direct(d4, named["D4"]) == named["D4"]
    s3 = fixtures.symmetric_3()
    rotation = next(g for g in s3.elements if g == "(012)")
    cyclic = generated_subgroup(s3, [rotation])
    assert cyclic.order == 3
    assert normalizer_direct(s3, cyclic).members == set(s3.elements)


def test_normalizer_direct_requires_subgroup(d4):
    other = fixtures.cyclic_group(2)
    H = generated_subgroup(other, ["1"])
    with pytest.raises(NotASubgroup):
        normalizer_direct(d4, H)


# --- the categorical operator -----------------------------------------------------------

def test_d4_normalization_table_matches_expected_diagram():
    ok, got = d4_normalization_matches()
    assert ok, got


def test_categorical_equals_brute_force_on_small_groups():
    for G in [fixtures.dihedral_4(), fixtures.symmetric_3(),
              fixtures.quaternion_8(), fixtures.cyclic_group(4),
              fixtures.cyclic_group(6)]:
        table = normalization_table(G)
        for H, N in table.items():
            assert N == normalizer_direct(G, H), (G.label, H)


def test_normalization_lemma_on_bundled_groups():
    for G in fixtures.bundled_groups().values():
        L = build_lsc(G.site())
        assert check_normalization_inflationary(L).ok, G.label


def test_normalization_lemma_on_all_monoids_up_to_order_3():
    for elements, mult in fixtures.all_monoids(1) + fixtures.all_monoids(2) \
            + fixtures.all_monoids(3):
        site = monoid_site(elements, lambda a, b: mult[(a, b)])
        assert check_normalization_inflationary(build_lsc(site)).ok, mult


def test_normalization_lemma_on_sampled_order_4_monoids():
    import itertools
    import random

    elements = ["m0", "m1", "m2", "m3"]
    rng = random.Random(99)
    found = 0
    while found < 25:
        mult = {}
        for a in elements:
            mult[("m0", a)] = a
            mult[(a, "m0")] = a
        for a, b in itertools.product(elements[1:], repeat=2):
            mult[(a, b)] = rng.choice(elements)
        if any(mult[(mult[(a, b)], c)] != mult[(a, mult[(b, c)])]
               for a in elements for b in elements for c in elements):
            continue
        found += 1
        site = monoid_site(elements, lambda a, b: mult[(a, b)])
        L = build_lsc(site)
        assert check_normalization_inflationary(L).ok, mult
        # the classifier is meet-closed with the action preserving meets
        for q1 in L.elements("*"):
            for q2 in L.elements("*"):
                assert q1.meet(q2) in set(L.elements("*"))


def test_non_idempotence_witness_on_d4(d4, named):
    L = build_lsc(d4.site())
    op = normalization_operator(L)
    q_t = subgroup_to_congruence(d4, named["<t>"])
    once = op.components["*"][q_t]
    twice = op.components["*"][once]
    assert once == subgroup_to_congruence(d4, named["<t,s2>"])
    assert twice == subgroup_to_congruence(d4, named["D4"])
    assert twice != once
    assert find_non_idempotence_witness(L) is not None


def test_non_monotonicity_witness_on_d4(d4):
    L = build_lsc(d4.site())
    witness = find_non_monotonicity_witness(L)
    assert witness is not None
    c, q1, q2 = witness
    op = normalization_operator(L)
    assert q1.leq(q2)
    assert not op.components[c][q1].leq(op.components[c][q2])


def test_dedekind_detection():
    q8 = fixtures.quaternion_8()
    assert is_dedekind(q8)
    assert normalization_is_top(build_lsc(q8.site()))
    for n in range(1, 7):
        zn = fixtures.cyclic_group(n)
        assert is_dedekind(zn)
        assert normalization_is_top(build_lsc(zn.site())), f"Z{n}"
    d4 = fixtures.dihedral_4()
    assert not is_dedekind(d4)
    assert not normalization_is_top(build_lsc(d4.site()))
    assert not normalization_is_top(build_lsc(fixtures.symmetric_3().site()))


def test_localic_collapse_on_posets():
    for name, site in fixtures.BUNDLED_POSETS.items():
        L = build_lsc(site)
        op = normalization_operator(L)
        for c in site.objects:
            (q,) = L.elements(c)
            assert op.components[c][q] == q, name


def test_idempotent_monoid_operator_is_identity():
    L = build_lsc(fixtures.idempotent_monoid_site())
    op = normalization_operator(L)
    assert len(L.elements("*")) == 2
    assert all(op.components["*"][q] == q for q in L.elements("*"))
