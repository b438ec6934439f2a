import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toposlsc.errors import (
    AlphabetMismatch,
    RegexSyntaxError,
    SymbolOutsideAlphabet,
    UnknownState,
)
from toposlsc.words import (
    Alt,
    Concat,
    Dfa,
    EmptyLang,
    EmptyWord,
    RightCongruence,
    Star,
    Sym,
    congruence_action,
    congruence_leq,
    congruence_meet,
    find_pointed_isomorphism,
    minimize,
    nerode_congruence,
    orbit_meet_check,
    orbit_of,
    parse_regex,
    random_min_dfa,
    regex_member,
    regex_to_min_dfa,
    residual_count_by_words,
    residual_count_dfa,
    state_congruence,
    syntactic_congruence,
    syntactically_equivalent_bruteforce,
    top_congruence,
    transition_monoid,
    words_upto,
    words_normalization_operator,
)


# --- parsing -------------------------------------------------------------------

def test_parse_trees():
    assert parse_regex("(ab)*", "ab") == Star(Concat(Sym("a"), Sym("b")))
    assert parse_regex("a|b", "ab") == Alt(Sym("a"), Sym("b"))
    assert parse_regex("#e", "ab") == EmptyWord()
    assert parse_regex("#0", "ab") == EmptyLang()
    assert parse_regex("ab*", "ab") == Concat(Sym("a"), Star(Sym("b")))


@pytest.mark.parametrize("src,position", [
    ("a(", 1),       # unclosed group, reported at the opening paren
    ("*a", 0),
    ("a)", 1),
    ("", 0),
    ("a|", 2),
    ("(|a)", 1),
    ("#x", 0),
    ("()", 1),
])
def test_parse_errors_carry_positions(src, position):
    with pytest.raises(RegexSyntaxError) as err:
        parse_regex(src, "ab")
    assert err.value.position == position


def test_symbol_outside_alphabet_is_its_own_error():
    with pytest.raises(SymbolOutsideAlphabet) as err:
        parse_regex("ac", "ab")
    assert err.value.symbol == "c" and err.value.position == 1


# --- compilation, cross-checked against the naive matcher -----------------------

FIXED_REGEXES = ["(ab)*", "(a|b)*a", "a*", "#e", "#0", "a(a|b)*", "b(ab)*",
                 "a*b*", "(a|b)(a|b)"]


@pytest.mark.parametrize("expr", FIXED_REGEXES)
def test_min_dfa_agrees_with_naive_matcher(expr):
    tree = parse_regex(expr, "ab")
    d = regex_to_min_dfa(tree, "ab")
    memo = {}
    for w in words_upto(("a", "b"), 7):
        assert d.accepts(w) == regex_member(tree, w, memo), (expr, w)


# frozen facts, dual-route: Hopcroft pipeline vs word-enumeration oracle
FROZEN_STATES = {"(ab)*": 3, "(a|b)*a": 2, "a*": 2, "#e": 2, "#0": 1}


@pytest.mark.parametrize("expr,states", sorted(FROZEN_STATES.items()))
def test_min_dfa_state_counts(expr, states):
    d = regex_to_min_dfa(expr, "ab")
    assert d.n == states
    tree = parse_regex(expr, "ab")
    memo = {}
    brute = residual_count_by_words(lambda w: regex_member(tree, w, memo),
                                    ("a", "b"), 6, 7)
    assert brute == states


def test_empty_language_dfa_has_no_accepting_state():
    d = regex_to_min_dfa("#0", "ab")
    assert d.n == 1 and not d.accepting


def test_dfa_validation():
    with pytest.raises(UnknownState):
        Dfa("ab", 2, 5, set(), [[0, 1], [1, 0]])
    with pytest.raises(UnknownState):
        Dfa("ab", 2, 0, {3}, [[0, 1], [1, 0]])
    with pytest.raises(AlphabetMismatch):
        Dfa("aa", 1, 0, set(), [[0, 0]])


def test_dfa_trims_unreachable_states():
    d = Dfa("ab", 3, 0, {2}, [[0, 0], [1, 1], [2, 2]])
    assert d.n == 1 and not d.accepting


# --- nerode congruences ---------------------------------------------------------------

def test_nerode_indices():
    assert nerode_congruence(regex_to_min_dfa("(ab)*", "ab")).index == 3
    assert nerode_congruence(regex_to_min_dfa("(a|b)*a", "ab")).index == 2
    assert nerode_congruence(regex_to_min_dfa("(a|b)*", "ab")) == \
        top_congruence("ab")


def test_nerode_minimizes_internally():
    # (ab)* with the accepting state duplicated: q3 mirrors q0
    bloated = Dfa("ab", 4, 0, {0, 3}, [[1, 2], [2, 3], [2, 2], [1, 2]])
    assert bloated.accepts("") and bloated.accepts("abab") and not bloated.accepts("a")
    assert bloated.n == 4
    assert nerode_congruence(bloated).index == 3


def test_state_congruence_examples():
    rc = nerode_congruence(regex_to_min_dfa("(ab)*", "ab"))
    # initial state gives back the congruence itself
    assert state_congruence(rc, 0) == rc
    # the sink has all self-loops: the total congruence
    sink = rc.run("aa")
    assert state_congruence(rc, sink) == top_congruence("ab")
    # the state after a is the nerode congruence of the residual b(ab)*
    after_a = rc.run("a")
    assert state_congruence(rc, after_a) == \
        nerode_congruence(regex_to_min_dfa("b(ab)*", "ab"))
    with pytest.raises(UnknownState):
        state_congruence(rc, 17)


def test_congruence_action():
    rc = nerode_congruence(regex_to_min_dfa("(ab)*", "ab"))
    assert congruence_action(rc, "") == rc
    assert congruence_action(rc, "a") == \
        nerode_congruence(regex_to_min_dfa("b(ab)*", "ab"))
    top = top_congruence("ab")
    assert congruence_action(top, "abba") == top
    with pytest.raises(SymbolOutsideAlphabet):
        congruence_action(rc, "xyz")


# --- the lattice ------------------------------------------------------------------------

def test_meet_is_idempotent_and_bounded():
    rc = nerode_congruence(regex_to_min_dfa("(ab)*", "ab"))
    assert congruence_meet(rc, rc) == rc
    top = top_congruence("ab")
    assert congruence_meet(rc, top) == rc
    assert congruence_leq(rc, top)


def test_meet_of_ends_in_a_and_ends_in_b():
    rc1 = nerode_congruence(regex_to_min_dfa("(a|b)*a", "ab"))
    rc2 = nerode_congruence(regex_to_min_dfa("(a|b)*b", "ab"))
    met = congruence_meet(rc1, rc2)
    assert met.index == 3
    assert congruence_leq(met, rc1) and congruence_leq(met, rc2)
    # the two factors are incomparable
    assert not congruence_leq(rc1, rc2) and not congruence_leq(rc2, rc1)


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        congruence_meet(top_congruence("ab"), top_congruence("abc"))


# --- syntactic congruences ------------------------------------------------------------------

def test_syntactic_monoid_of_ab_star():
    d = regex_to_min_dfa("(ab)*", "ab")
    tm, syn = syntactic_congruence(d)
    assert tm.order == 6
    assert tm.witnesses == ("", "a", "b", "aa", "ab", "ba")
    assert syn.index == 6
    # monoid laws on the composition table
    table = tm.table()
    assert all(table[0][j] == j == table[j][0] for j in range(6))
    for i in range(6):
        for j in range(6):
            for k in range(6):
                assert table[table[i][j]][k] == table[i][table[j][k]]


def test_syntactic_monoid_orders():
    assert syntactic_congruence(regex_to_min_dfa("(a|b)*a", "ab"))[0].order == 3
    assert syntactic_congruence(regex_to_min_dfa("(a|b)*", "ab"))[0].order == 1
    assert syntactic_congruence(regex_to_min_dfa("a*", "ab"))[0].order == 2


def test_syntactic_congruence_agrees_with_two_sided_bruteforce():
    for expr in ("(ab)*", "(a|b)*a", "a*"):
        d = regex_to_min_dfa(expr, "ab")
        _, syn = syntactic_congruence(d)
        for u in words_upto(("a", "b"), 2):
            for v in words_upto(("a", "b"), 2):
                assert syn.related(u, v) == \
                    syntactically_equivalent_bruteforce(d, u, v), (expr, u, v)


def test_syntactic_refines_nerode():
    for expr in ("(ab)*", "(a|b)*a", "a*b*"):
        d = regex_to_min_dfa(expr, "ab")
        rc = nerode_congruence(d)
        _, syn = syntactic_congruence(d)
        assert congruence_leq(syn, rc), expr


# --- orbit infimum ---------------------------------------------------------------------------

def test_orbit_meet_equals_syntactic_on_fixtures():
    for expr in ("(ab)*", "(a|b)*a", "(a|b)*", "a*b*", "(a|b)*abb"):
        rc = nerode_congruence(regex_to_min_dfa(expr, "ab"))
        met, agrees = orbit_meet_check(rc)
        assert agrees, expr
        _, syn = syntactic_congruence(regex_to_min_dfa(expr, "ab"))
        assert met == syn


def test_orbit_of_ab_star_has_three_elements():
    rc = nerode_congruence(regex_to_min_dfa("(ab)*", "ab"))
    assert len(orbit_of(rc)) == 3
    assert orbit_meet_check(top_congruence("ab")) == (top_congruence("ab"), True)


def test_orbit_meet_scales_to_a_large_transition_monoid():
    # two transformations of a 6-state machine generating 32262 elements;
    # the orbit infimum must still match the transition-monoid route quickly
    delta = [[0, 5], [5, 2], [1, 0], [4, 1], [5, 3], [3, 4]]
    d = minimize(Dfa("ab", 6, 0, {0, 3}, delta))
    assert d.n == 6
    rc = nerode_congruence(d)
    meet, agrees = orbit_meet_check(rc)
    assert agrees
    assert meet.index == 32262
    assert meet.index == transition_monoid(rc.alphabet, rc.delta).order


# --- normalization on words ----------------------------------------------------------------------

def test_normalization_groups_isomorphic_futures():
    rc = nerode_congruence(regex_to_min_dfa("a(a|b)*", "ab"))
    assert rc.index == 3
    image = words_normalization_operator(rc)
    assert image.index == 2


def test_normalization_fixes_top():
    top = top_congruence("ab")
    assert words_normalization_operator(top) == top


def test_normalization_inflationary_on_random_dfas():
    rng = random.Random(4096)
    for i in range(50):
        d = random_min_dfa(rng, 6, "ab" if i % 2 else "abc")
        rc = nerode_congruence(d)
        assert congruence_leq(rc, words_normalization_operator(rc))


# --- canonical forms ------------------------------------------------------------------------------

def test_canonicalization_agrees_with_backtracking_iso_search():
    rng = random.Random(123)
    for i in range(60):
        n = rng.randint(1, 5)
        rows = [[rng.randrange(n) for _ in "ab"] for _ in range(n)]
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = [None] * n
        for s in range(n):
            relabeled[perm[s]] = [perm[t] for t in rows[s]]
        init = rng.randrange(n)
        a = RightCongruence("ab", rows, init)
        b = RightCongruence("ab", relabeled, perm[init])
        assert a == b
        other_rows = [[rng.randrange(n) for _ in "ab"] for _ in range(n)]
        c = RightCongruence("ab", other_rows, init)
        assert (a == c) == (find_pointed_isomorphism(a, c) is not None)


def test_witnesses_are_shortlex():
    rc = nerode_congruence(regex_to_min_dfa("(ab)*", "ab"))
    assert rc.witnesses() == ("", "a", "b")


# --- hypothesis properties -------------------------------------------------------------------------

small_seeds = st.integers(min_value=0, max_value=10_000)


@settings(max_examples=40, deadline=None)
@given(small_seeds, small_seeds)
def test_action_commutes_with_meet(seed1, seed2):
    rng = random.Random(seed1)
    rc1 = nerode_congruence(random_min_dfa(rng, 4, "ab"))
    rc2 = nerode_congruence(random_min_dfa(rng, 4, "ab"))
    word = "".join(random.Random(seed2).choice("ab") for _ in range(3))
    lhs = congruence_action(congruence_meet(rc1, rc2), word)
    rhs = congruence_meet(congruence_action(rc1, word), congruence_action(rc2, word))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(small_seeds)
def test_action_never_raises_index(seed):
    rng = random.Random(seed)
    rc = nerode_congruence(random_min_dfa(rng, 5, "ab"))
    for w in ("", "a", "ab", "bba"):
        assert congruence_action(rc, w).index <= rc.index


@settings(max_examples=25, deadline=None)
@given(small_seeds)
def test_orbit_meet_identity_on_random_dfas(seed):
    rng = random.Random(seed)
    rc = nerode_congruence(random_min_dfa(rng, 5, "ab"))
    assert orbit_meet_check(rc)[1]


@settings(max_examples=25, deadline=None)
@given(small_seeds)
def test_myhill_nerode_on_random_dfas(seed):
    rng = random.Random(seed)
    d = random_min_dfa(rng, 6, "ab")
    assert nerode_congruence(d).index == d.n == residual_count_dfa(d)


@settings(max_examples=30, deadline=None)
@given(small_seeds)
def test_minimization_preserves_language_and_matches_refinement_oracle(seed):
    # raw, usually non-minimal DFAs: Hopcroft against the Moore-style oracle
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    delta = [[rng.randrange(n) for _ in "ab"] for _ in range(n)]
    accepting = {s for s in range(n) if rng.random() < 0.4}
    d = Dfa("ab", n, 0, accepting, delta)
    m = minimize(d)
    assert m.n == residual_count_dfa(d)
    for w in words_upto(("a", "b"), 6):
        assert d.accepts(w) == m.accepts(w)


# --- degenerate alphabets ------------------------------------------------------------------------------

def test_empty_alphabet():
    top = top_congruence("")
    assert top.index == 1
    d = regex_to_min_dfa("#e", "")
    assert d.n == 1 and d.accepts("")
    d0 = regex_to_min_dfa("#0", "")
    assert d0.n == 1 and not d0.accepts("")
    assert words_upto((), 5) == [""]


def test_transition_monoid_of_top_is_trivial():
    tm = transition_monoid(("a", "b"), top_congruence("ab").delta)
    assert tm.order == 1 and tm.witnesses == ("",)
