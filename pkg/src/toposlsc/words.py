"""Right congruences on words: the free-monoid face of the classifier.

Over an alphabet S, the classifier of the topos of S-sets is the set of all
right congruences on S* acted on by (~ * w) relating u, v iff wu ~ wv.  A
finite-index right congruence is the same thing as a pointed accessible
deterministic transition system, which is how this module represents them:
`RightCongruence` stores the canonical (BFS shortlex) numbering, so
structural equality coincides with pointed isomorphism.

Only finite-index congruences are representable.  That is exactly the orbit-
finite fragment in which regular languages live; non-regular languages have
no representation here and are out of scope, not approximated.

The pipeline regex -> NFA -> DFA -> minimal DFA is deliberately standard
(Thompson, subset construction, Hopcroft); the interesting operations sit on
top of it: Nerode congruences, the congruence action and meets, syntactic
monoids via transition monoids, orbit infima, and the normalization operator
that groups states by the pointed-isomorphism class of their futures.
"""

import itertools
from dataclasses import dataclass

from .errors import (
    AlphabetMismatch,
    RegexSyntaxError,
    SymbolOutsideAlphabet,
    UnknownState,
)


def _check_alphabet(alphabet):
    symbols = tuple(alphabet)
    if len(set(symbols)) != len(symbols):
        raise AlphabetMismatch(f"duplicate symbols in alphabet {symbols!r}")
    for s in symbols:
        if not isinstance(s, str) or len(s) != 1:
            raise AlphabetMismatch(f"symbols must be single characters, got {s!r}")
        if s in "#()|*":
            raise AlphabetMismatch(f"symbol {s!r} is reserved by the regex grammar")
    return symbols


# ---------------------------------------------------------------------------
# regular expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EmptyLang:
    pass


@dataclass(frozen=True)
class EmptyWord:
    pass


@dataclass(frozen=True)
class Sym:
    ch: str


@dataclass(frozen=True)
class Concat:
    left: object
    right: object


@dataclass(frozen=True)
class Alt:
    left: object
    right: object


@dataclass(frozen=True)
class Star:
    inner: object


def parse_regex(src, alphabet):
    """Parse a regex over the given alphabet into a syntax tree.

    Grammar: single-character symbols, juxtaposition for concatenation, `|`
    for alternation, `*` for iteration, parentheses, `#e` for the empty word
    and `#0` for the empty language.
    """
    symbols = set(_check_alphabet(alphabet))
    n = len(src)
    pos = 0

    def fail(message, at):
        raise RegexSyntaxError(message, at)

    def parse_atom():
        nonlocal pos
        ch = src[pos]
        if ch == "(":
            open_pos = pos
            pos += 1
            if pos >= n:
                fail("unclosed group", open_pos)
            if src[pos] == ")":
                fail("empty group", pos)
            node = parse_alt()
            if pos >= n:
                fail("unclosed group", open_pos)
            if src[pos] != ")":
                fail(f"unexpected {src[pos]!r}", pos)
            pos += 1
            return node
        if ch == "#":
            if pos + 1 < n and src[pos + 1] == "e":
                pos += 2
                return EmptyWord()
            if pos + 1 < n and src[pos + 1] == "0":
                pos += 2
                return EmptyLang()
            fail("expected #e or #0", pos)
        if ch in symbols:
            pos += 1
            return Sym(ch)
        if ch in ")|*":
            fail(f"unexpected {ch!r}", pos)
        raise SymbolOutsideAlphabet(ch, sorted(symbols), position=pos)

    def parse_starred():
        nonlocal pos
        node = parse_atom()
        while pos < n and src[pos] == "*":
            node = Star(node)
            pos += 1
        return node

    def parse_concat():
        nonlocal pos
        if pos >= n or src[pos] in ")|":
            fail("expected an expression", pos)
        node = parse_starred()
        while pos < n and src[pos] not in ")|":
            node = Concat(node, parse_starred())
        return node

    def parse_alt():
        nonlocal pos
        node = parse_concat()
        while pos < n and src[pos] == "|":
            pos += 1
            node = Alt(node, parse_concat())
        return node

    tree = parse_alt()
    if pos != n:
        fail(f"unexpected {src[pos]!r}", pos)
    return tree


def regex_member(tree, word, _memo=None):
    """Naive structural matcher; the independent membership oracle."""
    memo = _memo if _memo is not None else {}

    def match(node, s):
        key = (id(node), s)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(node, EmptyLang):
            out = False
        elif isinstance(node, EmptyWord):
            out = s == ""
        elif isinstance(node, Sym):
            out = s == node.ch
        elif isinstance(node, Alt):
            out = match(node.left, s) or match(node.right, s)
        elif isinstance(node, Concat):
            out = any(match(node.left, s[:i]) and match(node.right, s[i:])
                      for i in range(len(s) + 1))
        elif isinstance(node, Star):
            out = s == "" or any(match(node.inner, s[:i]) and match(node, s[i:])
                                 for i in range(1, len(s) + 1))
        else:
            raise TypeError(f"not a regex node: {node!r}")
        memo[key] = out
        return out

    return match(tree, word)


def words_upto(alphabet, bound):
    """All words of length <= bound, in shortlex order."""
    out = [""]
    for length in range(1, bound + 1):
        out.extend("".join(w) for w in itertools.product(alphabet, repeat=length))
    return out


# ---------------------------------------------------------------------------
# DFAs
# ---------------------------------------------------------------------------

def _bfs_order(n, rows, initial):
    """First-visit order of reachable states, expanding letters in order."""
    order = [initial]
    number = {initial: 0}
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for t in rows[s]:
            if t not in number:
                number[t] = len(order)
                order.append(t)
    return order, number


class Dfa:
    """A complete DFA, trimmed to its reachable part and canonically numbered.

    States are 0..n-1 with 0 initial; `delta` is a state-major tuple of
    tuples indexed by letter position.
    """

    __slots__ = ("alphabet", "n", "initial", "accepting", "delta")

    def __init__(self, alphabet, n, initial, accepting, delta):
        self.alphabet = _check_alphabet(alphabet)
        if n <= 0:
            raise UnknownState("a DFA needs at least one state")
        if not 0 <= initial < n:
            raise UnknownState(f"initial state {initial!r} out of range")
        rows = [tuple(row) for row in delta]
        if len(rows) != n or any(len(r) != len(self.alphabet) for r in rows):
            raise UnknownState("transition table shape does not match states x alphabet")
        for r in rows:
            for t in r:
                if not 0 <= t < n:
                    raise UnknownState(f"transition target {t!r} out of range")
        for s in accepting:
            if not 0 <= s < n:
                raise UnknownState(f"accepting state {s!r} out of range")
        order, number = _bfs_order(n, rows, initial)
        self.n = len(order)
        self.initial = 0
        self.delta = tuple(tuple(number[rows[s][a]] for a in range(len(self.alphabet)))
                           for s in order)
        self.accepting = frozenset(number[s] for s in accepting if s in number)

    def letter(self, sym):
        try:
            return self.alphabet.index(sym)
        except ValueError:
            raise SymbolOutsideAlphabet(sym, self.alphabet) from None

    def run(self, word, start=None):
        s = self.initial if start is None else start
        for ch in word:
            s = self.delta[s][self.letter(ch)]
        return s

    def accepts(self, word):
        return self.run(word) in self.accepting

    def __eq__(self, other):
        return (isinstance(other, Dfa) and self.alphabet == other.alphabet
                and self.delta == other.delta and self.accepting == other.accepting)

    def __hash__(self):
        return hash((self.alphabet, self.delta, self.accepting))

    def __repr__(self):
        return f"Dfa({self.n} states over {''.join(self.alphabet)!r})"


def _hopcroft_blocks(n, delta, accepting):
    """Hopcroft partition refinement; returns a block id per state."""
    k = len(delta[0]) if n else 0
    acc = frozenset(accepting)
    non = frozenset(range(n)) - acc
    partition = [s for s in (acc, non) if s]
    work = [s for s in (acc, non) if s]
    preimage = [[set() for _ in range(n)] for _ in range(k)]
    for s in range(n):
        for a in range(k):
            preimage[a][delta[s][a]].add(s)
    while work:
        splitter = work.pop()
        for a in range(k):
            hits = set()
            for q in splitter:
                hits |= preimage[a][q]
            if not hits:
                continue
            next_partition = []
            for block in partition:
                inside = block & hits
                outside = block - hits
                if inside and outside:
                    next_partition.extend((frozenset(inside), frozenset(outside)))
                    if block in work:
                        work.remove(block)
                        work.extend((frozenset(inside), frozenset(outside)))
                    else:
                        work.append(frozenset(min(inside, outside, key=len)))
                else:
                    next_partition.append(block)
            partition = next_partition
    block_of = [0] * n
    for i, block in enumerate(partition):
        for s in block:
            block_of[s] = i
    return block_of


def minimize(d):
    """The minimal complete DFA of the same language, canonically numbered."""
    block_of = _hopcroft_blocks(d.n, d.delta, d.accepting)
    reps = {}
    for s in range(d.n):
        reps.setdefault(block_of[s], s)
    ids = {b: i for i, b in enumerate(sorted(reps, key=reps.get))}
    m = len(ids)
    delta = [[0] * len(d.alphabet) for _ in range(m)]
    for b, s in reps.items():
        for a in range(len(d.alphabet)):
            delta[ids[b]][a] = ids[block_of[d.delta[s][a]]]
    accepting = {ids[block_of[s]] for s in d.accepting}
    return Dfa(d.alphabet, m, ids[block_of[d.initial]], accepting, delta)


# ---------------------------------------------------------------------------
# regex -> minimal DFA
# ---------------------------------------------------------------------------

def _thompson(tree, symbols):
    """Thompson construction: returns (state count, eps, trans, start, accept)."""
    eps = []
    trans = []

    def new_state():
        eps.append(set())
        trans.append({})
        return len(eps) - 1

    def build(node):
        if isinstance(node, EmptyLang):
            return new_state(), new_state()
        if isinstance(node, EmptyWord):
            s, t = new_state(), new_state()
            eps[s].add(t)
            return s, t
        if isinstance(node, Sym):
            s, t = new_state(), new_state()
            trans[s][node.ch] = trans[s].get(node.ch, set()) | {t}
            return s, t
        if isinstance(node, Concat):
            s1, t1 = build(node.left)
            s2, t2 = build(node.right)
            eps[t1].add(s2)
            return s1, t2
        if isinstance(node, Alt):
            s, t = new_state(), new_state()
            s1, t1 = build(node.left)
            s2, t2 = build(node.right)
            eps[s] |= {s1, s2}
            eps[t1].add(t)
            eps[t2].add(t)
            return s, t
        if isinstance(node, Star):
            s, t = new_state(), new_state()
            s1, t1 = build(node.inner)
            eps[s] |= {s1, t}
            eps[t1] |= {s1, t}
            return s, t
        raise TypeError(f"not a regex node: {node!r}")

    start, accept = build(tree)
    return len(eps), eps, trans, start, accept


def _eps_closure(eps, states):
    out = set(states)
    stack = list(states)
    while stack:
        s = stack.pop()
        for t in eps[s]:
            if t not in out:
                out.add(t)
                stack.append(t)
    return frozenset(out)


def regex_to_min_dfa(tree, alphabet):
    """Compile to the minimal complete DFA (sink state included).

    Accepts a parse tree or a source string.  Subset construction over the
    Thompson automaton, then Hopcroft minimization.
    """
    symbols = _check_alphabet(alphabet)
    if isinstance(tree, str):
        tree = parse_regex(tree, symbols)
    _, eps, trans, start, accept = _thompson(tree, symbols)
    start_set = _eps_closure(eps, {start})
    numbering = {start_set: 0}
    sets = [start_set]
    rows = []
    i = 0
    while i < len(sets):
        cur = sets[i]
        i += 1
        row = []
        for ch in symbols:
            moved = set()
            for s in cur:
                moved |= trans[s].get(ch, set())
            nxt = _eps_closure(eps, moved)
            if nxt not in numbering:
                numbering[nxt] = len(sets)
                sets.append(nxt)
            row.append(numbering[nxt])
        rows.append(row)
    accepting = {i for i, ss in enumerate(sets) if accept in ss}
    d = Dfa(symbols, len(sets), 0, accepting, rows)
    return minimize(d)


# ---------------------------------------------------------------------------
# right congruences
# ---------------------------------------------------------------------------

class RightCongruence:
    """A finite-index right congruence on S*, i.e. a pointed accessible
    deterministic transition system in canonical (BFS shortlex) numbering.

    The initial state is always 0, so two values are structurally equal iff
    the pointed automata are isomorphic.  ``index`` (= the number of states)
    is the number of congruence classes.
    """

    __slots__ = ("alphabet", "delta", "_hash")

    def __init__(self, alphabet, delta_rows, initial=0):
        self.alphabet = _check_alphabet(alphabet)
        rows = [tuple(row) for row in delta_rows]
        if not rows or any(len(r) != len(self.alphabet) for r in rows):
            raise UnknownState("transition table shape does not match alphabet")
        if not 0 <= initial < len(rows):
            raise UnknownState(f"initial state {initial!r} out of range")
        order, number = _bfs_order(len(rows), rows, initial)
        self.delta = tuple(tuple(number[rows[s][a]] for a in range(len(self.alphabet)))
                           for s in order)
        self._hash = hash((self.alphabet, self.delta))

    @classmethod
    def top(cls, alphabet):
        symbols = _check_alphabet(alphabet)
        return cls(symbols, [tuple(0 for _ in symbols)])

    @property
    def n(self):
        return len(self.delta)

    @property
    def index(self):
        return len(self.delta)

    def letter(self, sym):
        try:
            return self.alphabet.index(sym)
        except ValueError:
            raise SymbolOutsideAlphabet(sym, self.alphabet) from None

    def run(self, word, start=0):
        s = start
        for ch in word:
            s = self.delta[s][self.letter(ch)]
        return s

    def related(self, u, v):
        return self.run(u) == self.run(v)

    def witnesses(self):
        """Shortlex-least word reaching each state; state i gets the i-th."""
        out = [None] * self.n
        out[0] = ""
        queue = [0]
        i = 0
        while i < len(queue):
            s = queue[i]
            i += 1
            for a, ch in enumerate(self.alphabet):
                t = self.delta[s][a]
                if out[t] is None:
                    out[t] = out[s] + ch
                    queue.append(t)
        return tuple(out)

    def is_total(self):
        return self.n == 1

    def __eq__(self, other):
        return (isinstance(other, RightCongruence)
                and self.alphabet == other.alphabet and self.delta == other.delta)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"RightCongruence(index={self.n}, alphabet={''.join(self.alphabet)!r})"


def top_congruence(alphabet):
    return RightCongruence.top(alphabet)


def nerode_congruence(d):
    """States of the minimal DFA with acceptance forgotten but kept distinct:
    u ~ v iff the residuals after u and v coincide."""
    m = minimize(d)
    return RightCongruence(m.alphabet, m.delta, m.initial)


def state_congruence(x, q):
    """The congruence relating u, v iff q.u = q.v: the accessible part of x
    pointed at q.  Accepts a Dfa or a RightCongruence."""
    if isinstance(x, Dfa):
        rows, count = x.delta, x.n
    elif isinstance(x, RightCongruence):
        rows, count = x.delta, x.n
    else:
        raise TypeError(f"expected Dfa or RightCongruence, got {type(x).__name__}")
    if not 0 <= q < count:
        raise UnknownState(f"state {q!r} out of range")
    return RightCongruence(x.alphabet, rows, q)


def congruence_action(rc, word):
    """rc * word: relates u, v iff (word u) ~ (word v).  Never raises the
    index."""
    return state_congruence(rc, rc.run(word))


def _check_same_alphabet(a, b):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet!r} vs {b.alphabet!r}")


def congruence_meet(rc1, rc2):
    """Intersection of the relations: reachable part of the pointed product."""
    _check_same_alphabet(rc1, rc2)
    k = len(rc1.alphabet)
    numbering = {(0, 0): 0}
    pairs = [(0, 0)]
    rows = []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        i += 1
        row = []
        for a in range(k):
            nxt = (rc1.delta[p][a], rc2.delta[q][a])
            if nxt not in numbering:
                numbering[nxt] = len(pairs)
                pairs.append(nxt)
            row.append(numbering[nxt])
        rows.append(row)
    return RightCongruence(rc1.alphabet, rows)


def congruence_leq(rc1, rc2):
    """Relation inclusion rc1 <= rc2, i.e. [u]_1 |-> [u]_2 is well-defined.

    Decided by checking that the reachable pointed product projects
    injectively onto rc1's states.
    """
    _check_same_alphabet(rc1, rc2)
    k = len(rc1.alphabet)
    image = {0: 0}
    stack = [(0, 0)]
    seen = {(0, 0)}
    while stack:
        p, q = stack.pop()
        for a in range(k):
            np, nq = rc1.delta[p][a], rc2.delta[q][a]
            if (np, nq) in seen:
                continue
            seen.add((np, nq))
            if image.setdefault(np, nq) != nq:
                return False
            stack.append((np, nq))
    return True


# ---------------------------------------------------------------------------
# transition monoids and syntactic congruences
# ---------------------------------------------------------------------------

class TransitionMonoid:
    """The monoid of state transformations realized by words, each element
    stored with its shortlex-least witness word.  Element 0 is the identity;
    ``letter_indices[a]`` locates the transformation of the a-th letter."""

    def __init__(self, alphabet, elements, witnesses, letter_indices):
        self.alphabet = tuple(alphabet)
        self.elements = tuple(tuple(e) for e in elements)
        self.witnesses = tuple(witnesses)
        self.letter_indices = tuple(letter_indices)
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._table = None

    @property
    def order(self):
        return len(self.elements)

    def mult(self, i, j):
        """Index of the element realized by witness_i followed by witness_j."""
        ei, ej = self.elements[i], self.elements[j]
        return self._index[tuple(ej[s] for s in ei)]

    def table(self):
        """Full composition table; quadratic, built on demand."""
        if self._table is None:
            self._table = [[self.mult(i, j) for j in range(self.order)]
                           for i in range(self.order)]
        return self._table

    def cayley_congruence(self):
        """Right-multiplication Cayley structure pointed at the identity."""
        rows = [[self.mult(i, li) for li in self.letter_indices]
                for i in range(self.order)]
        return RightCongruence(self.alphabet, rows)

    def __repr__(self):
        return f"TransitionMonoid(order={self.order})"


def transition_monoid(alphabet, delta_rows):
    """Close the letter transformations under composition, breadth-first in
    shortlex order so the recorded witnesses are least."""
    symbols = _check_alphabet(alphabet)
    count = len(delta_rows)
    k = len(symbols)
    letters = [tuple(delta_rows[s][a] for s in range(count)) for a in range(k)]
    identity = tuple(range(count))
    elements = [identity]
    witnesses = [""]
    index = {identity: 0}
    i = 0
    while i < len(elements):
        f = elements[i]
        w = witnesses[i]
        i += 1
        for a in range(k):
            g = tuple(letters[a][f[s]] for s in range(count))
            if g not in index:
                index[g] = len(elements)
                elements.append(g)
                witnesses.append(w + symbols[a])
    return TransitionMonoid(symbols, elements, witnesses,
                            [index[letters[a]] for a in range(k)])


def syntactic_congruence(d):
    """The syntactic monoid and the two-sided congruence of L(d).

    Computed as the transition monoid of the minimal DFA (which realizes the
    syntactic monoid) with its right-multiplication Cayley structure pointed
    at the identity.
    """
    m = minimize(d)
    tm = transition_monoid(m.alphabet, m.delta)
    return tm, tm.cayley_congruence()


def orbit_of(rc):
    """The (finite) orbit { rc * w }: one congruence per state, deduplicated."""
    seen = set()
    orbit = []
    for q in range(rc.n):
        cg = state_congruence(rc, q)
        if cg not in seen:
            seen.add(cg)
            orbit.append(cg)
    return orbit


def orbit_meet_check(rc):
    """Fold the meet over the orbit of rc and compare with the syntactic
    congruence computed through the transition monoid.  Returns the meet and
    whether the two routes agree."""
    orbit = orbit_of(rc)
    meet = orbit[0]
    for other in orbit[1:]:
        meet = congruence_meet(meet, other)
    tm = transition_monoid(rc.alphabet, rc.delta)
    return meet, meet == tm.cayley_congruence()


def words_normalization_operator(rc):
    """xi_Xi on words: relates u, v iff rc * u = rc * v.

    States are grouped by the pointed-isomorphism class of their accessible
    futures (canonical-form hashing); the quotient transition structure is
    well-defined because pointed isomorphism commutes with stepping.  The
    result is always finite, witnessing that the image stays orbit-finite.
    """
    classes = {}
    cls_of = []
    for q in range(rc.n):
        cf = state_congruence(rc, q)
        cls_of.append(classes.setdefault(cf, len(classes)))
    reps = {}
    for q in range(rc.n):
        reps.setdefault(cls_of[q], q)
    k = len(rc.alphabet)
    rows = [[cls_of[rc.delta[reps[c]][a]] for a in range(k)]
            for c in range(len(classes))]
    for q in range(rc.n):
        for a in range(k):
            assert cls_of[rc.delta[q][a]] == rows[cls_of[q]][a], \
                "state classes are not transition-compatible"
    return RightCongruence(rc.alphabet, rows, cls_of[0])


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def residual_count_by_words(member, alphabet, prefix_bound, suffix_bound):
    """Number of distinct residuals L*u over prefixes |u| <= prefix_bound,
    where residuals are told apart on words |w| <= suffix_bound.

    ``member`` is any membership predicate; with generous bounds this is the
    brute-force side of the minimal-state-count equality.
    """
    suffixes = words_upto(alphabet, suffix_bound)
    signatures = set()
    for u in words_upto(alphabet, prefix_bound):
        signatures.add(tuple(member(u + w) for w in suffixes))
    return len(signatures)


def residual_count_dfa(d, rounds=None):
    """Residual count of L(d) by plain signature refinement (Moore-style),
    independent of the Hopcroft route.  ``rounds`` bounds the signature
    length; the default 2n is far beyond the n-1 needed for exactness."""
    rounds = 2 * d.n if rounds is None else rounds
    classes = [1 if s in d.accepting else 0 for s in range(d.n)]
    k = len(d.alphabet)
    for _ in range(rounds):
        keys = {}
        nxt = []
        for s in range(d.n):
            key = (classes[s], tuple(classes[d.delta[s][a]] for a in range(k)))
            nxt.append(keys.setdefault(key, len(keys)))
        if nxt == classes:
            break
        classes = nxt
    return len(set(classes))


def syntactically_equivalent_bruteforce(d, u, v, bound=None):
    """Two-sided check: w u w' in L iff w v w' in L for all |w|, |w'| <= bound.

    The default bound n*n is far larger than needed; contexts are deduplicated
    through the state reached, which does not change the predicate."""
    bound = d.n * d.n if bound is None else bound
    contexts = words_upto(d.alphabet, bound)
    left_states = {d.run(w) for w in contexts}
    for p in left_states:
        pu = d.run(u, start=p)
        pv = d.run(v, start=p)
        if pu == pv:
            continue
        for w2 in contexts:
            if (d.run(w2, start=pu) in d.accepting) != (d.run(w2, start=pv) in d.accepting):
                return False
    return True


def find_pointed_isomorphism(a, b):
    """Backtracking search for a pointed isomorphism between two transition
    systems, independent of canonical numbering.

    Inputs are RightCongruence values or (delta_rows, initial) pairs over the
    same alphabet size.  Returns the state mapping or None.
    """
    def unpack(x):
        if isinstance(x, RightCongruence):
            return x.delta, 0
        rows, initial = x
        return [tuple(r) for r in rows], initial

    da, ia = unpack(a)
    db, ib = unpack(b)
    if len(da) != len(db) or (da and db and len(da[0]) != len(db[0])):
        return None
    k = len(da[0]) if da else 0
    count = len(da)

    def consistent(mapping):
        for s, t in mapping.items():
            for l in range(k):
                s2 = da[s][l]
                t2 = db[t][l]
                if s2 in mapping:
                    if mapping[s2] != t2:
                        return False
                elif t2 in mapping.values():
                    return False
        return True

    def backtrack(mapping, used):
        if len(mapping) == count:
            return dict(mapping)
        s = next(i for i in range(count) if i not in mapping)
        for t in range(count):
            if t in used:
                continue
            mapping[s] = t
            used.add(t)
            if consistent(mapping):
                found = backtrack(mapping, used)
                if found is not None:
                    return found
            del mapping[s]
            used.remove(t)
        return None

    start = {ia: ib}
    if not consistent(start):
        return None
    return backtrack(start, {ib})


# ---------------------------------------------------------------------------
# random fixtures
# ---------------------------------------------------------------------------

def random_min_dfa(rng, max_states=6, alphabet="ab"):
    """A random minimal complete DFA with at most max_states states."""
    symbols = _check_alphabet(alphabet)
    count = rng.randint(1, max_states)
    delta = [[rng.randrange(count) for _ in symbols] for _ in range(count)]
    accepting = {s for s in range(count) if rng.random() < 0.5}
    return minimize(Dfa(symbols, count, 0, accepting, delta))
