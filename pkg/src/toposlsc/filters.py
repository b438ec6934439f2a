"""Internal filters of the classifier and the quotients they induce.

A subpresheaf F of Xi that contains top and is pointwise upward- and
meet-closed picks out a full subcategory E_F (the presheaves all of whose
elements classify into F) together with an idempotent lex comonad G with
GX(c) = { x in X(c) | xi_X(x) in F(c) } and monic counit.  The certificate
routine checks, exhaustively on sample presheaves, that the corestricted
cocone behaves as the local state classifier of that quotient.
"""

from collections import namedtuple

from .certificates import Certificate
from .errors import (
    MissingTop,
    NotMeetClosed,
    NotSubpresheaf,
    NotUpwardClosed,
    SiteMismatch,
)
from .fincat import (
    Presheaf,
    PresheafMorphism,
    coproduct,
    enumerate_morphisms,
    equalizer,
    product,
    quotient_of_representable,
    terminal,
)
from .lsc import xi_component
from .normalize import normalization_operator


class InternalFilter:
    """A per-object selection of congruences.  Construction does not
    validate; use `validate_filter` for a checked instance."""

    def __init__(self, lsc, selection):
        self.lsc = lsc
        self.selection = {c: frozenset(selection.get(c, ())) for c in lsc.site.objects}

    def contains(self, c, q):
        return q in self.selection[c]

    def size(self):
        return sum(len(v) for v in self.selection.values())

    def subpresheaf_violation(self):
        """(q, f) with q selected but q.f not, or None."""
        cat = self.lsc.site
        for name, s, d in cat.morphisms:
            for q in self.selection[d]:
                if q.precompose(name) not in self.selection[s]:
                    return (q, name)
        return None

    def as_presheaf(self):
        """The selection as a subpresheaf of Xi (requires action-closure)."""
        bad = self.subpresheaf_violation()
        if bad is not None:
            raise NotSubpresheaf(
                f"{bad[0]!r} . {bad[1]!r} leaves the selection", witness=bad)
        cat = self.lsc.site
        carrier = {c: tuple(q for q in self.lsc.elements(c) if q in self.selection[c])
                   for c in cat.objects}
        action = {name: {q: q.precompose(name) for q in carrier[d]}
                  for name, s, d in cat.morphisms}
        return Presheaf(cat, carrier, action, check=False)

    def inclusion(self):
        F = self.as_presheaf()
        comps = {c: {q: q for q in F.elements(c)} for c in self.lsc.site.objects}
        return PresheafMorphism(F, self.lsc.xi, comps, check=False)

    def __eq__(self, other):
        return (isinstance(other, InternalFilter) and self.lsc is other.lsc
                and self.selection == other.selection)

    def __repr__(self):
        sizes = ", ".join(f"{c}:{len(self.selection[c])}"
                          for c in self.lsc.site.objects)
        return f"InternalFilter({sizes})"


def full_filter(L):
    return InternalFilter(L, {c: L.elements(c) for c in L.site.objects})


def top_filter(L):
    """The principal filter generated by top: just the total congruences."""
    return InternalFilter(L, {c: (L.top_at(c),) for c in L.site.objects})


def validate_filter(L, selection):
    """Check the filter clauses, raising the first violated one with witness.

    Order: subpresheaf, upward closure, top membership, meet closure.  With
    this order a selection missing top is reported as an upward-closure
    failure whenever it contains anything below top; MissingTop is reserved
    for selections that are empty somewhere.
    """
    F = selection if isinstance(selection, InternalFilter) else InternalFilter(L, selection)
    bad = F.subpresheaf_violation()
    if bad is not None:
        raise NotSubpresheaf(f"{bad[0]!r} . {bad[1]!r} leaves the selection",
                             witness=bad)
    for c in L.site.objects:
        chosen = F.selection[c]
        for q in chosen:
            for q2 in L.elements(c):
                if q.leq(q2) and q2 not in chosen:
                    raise NotUpwardClosed(
                        f"{q!r} is selected at {c!r} but {q2!r} above it is not",
                        witness=(c, q, q2))
    for c in L.site.objects:
        if L.top_at(c) not in F.selection[c]:
            raise MissingTop(f"total congruence missing at {c!r}",
                             witness=(c, L.top_at(c)))
    for c in L.site.objects:
        chosen = sorted(F.selection[c], key=lambda q: q.sort_key())
        for i, q1 in enumerate(chosen):
            for q2 in chosen[i:]:
                if q1.meet(q2) not in F.selection[c]:
                    raise NotMeetClosed(
                        f"meet of {q1!r} and {q2!r} escapes the selection at {c!r}",
                        witness=(c, q1, q2))
    return F


def filter_generated_by(L, seeds):
    """Least internal filter containing the seeds.

    Fixed-point closure under the action, pairwise meets and upward closure;
    terminates because Xi is finite.  Empty seeds give the top filter.
    """
    cat = L.site
    selection = {c: {L.top_at(c)} for c in cat.objects}
    for c, qs in dict(seeds).items():
        if isinstance(qs, (list, tuple, set, frozenset)):
            selection[c].update(qs)
        else:
            selection[c].add(qs)
    changed = True
    while changed:
        changed = False
        for name, s, d in cat.morphisms:
            for q in list(selection[d]):
                q2 = q.precompose(name)
                if q2 not in selection[s]:
                    selection[s].add(q2)
                    changed = True
        for c in cat.objects:
            chosen = list(selection[c])
            for i, q1 in enumerate(chosen):
                for q2 in chosen[i + 1:]:
                    m = q1.meet(q2)
                    if m not in selection[c]:
                        selection[c].add(m)
                        changed = True
            for q in list(selection[c]):
                for up in L.elements(c):
                    if q.leq(up) and up not in selection[c]:
                        selection[c].add(up)
                        changed = True
    return InternalFilter(L, selection)


Membership = namedtuple("Membership", ["member", "lift", "witness"])


def in_subcategory(F, X):
    """Does xi_X land in F?  If so, also return the corestriction to F."""
    L = F.lsc
    if not L.site.same_site(X.site):
        raise SiteMismatch("presheaf does not live on the filter's site")
    xi = xi_component(L, X)
    for c in L.site.objects:
        for x in X.elements(c):
            q = xi.components[c][x]
            if not F.contains(c, q):
                return Membership(False, None, (c, x, q))
    Fp = F.as_presheaf()
    lift = PresheafMorphism(X, Fp, xi.components, check=False)
    return Membership(True, lift, None)


def comonad_apply(F, X):
    """GX as the elements classifying into F, with its (monic) counit."""
    L = F.lsc
    if not L.site.same_site(X.site):
        raise SiteMismatch("presheaf does not live on the filter's site")
    cat = L.site
    xi = xi_component(L, X)
    carrier = {c: tuple(x for x in X.elements(c)
                        if F.contains(c, xi.components[c][x]))
               for c in cat.objects}
    action = {name: {x: X.act(x, name) for x in carrier[d]}
              for name, s, d in cat.morphisms}
    GX = Presheaf(cat, carrier, action, check=False)
    counit = PresheafMorphism(GX, X, {c: {x: x for x in carrier[c]}
                                      for c in cat.objects}, check=False)
    return GX, counit


def _default_samples(F):
    """Representable quotients of the selected congruences, plus terminal."""
    out = [terminal(F.lsc.site)]
    for c in F.lsc.site.objects:
        for q in sorted(F.selection[c], key=lambda q: q.sort_key()):
            out.append(quotient_of_representable(q))
    return out


def certify_quotient_classifier(F, samples=None, *, mono_limit=64):
    """Certificate that the corestricted cocone classifies the quotient.

    Clauses, each recorded with a witness on failure:
      F-in-EF             xi sends every selected congruence back into F;
      cocone              xi^F is constant along injective maps of members;
      joint-surjectivity  every selected q is hit by the quotient y(c)/q,
                          which itself belongs to the subcategory;
      comonad             G is idempotent with monic counit and preserves
                          the terminal object, sampled binary products and
                          sampled equalizers.
    """
    cert = Certificate("quotient-classifier")
    L = F.lsc
    cat = L.site

    # (a) the filter lives in its own subcategory
    bad = F.subpresheaf_violation()
    if bad is not None:
        cert.record("F-in-EF", False, bad)
    else:
        op = normalization_operator(L)
        witness = None
        for c in cat.objects:
            for q in sorted(F.selection[c], key=lambda q: q.sort_key()):
                if not F.contains(c, op.components[c][q]):
                    witness = q
                    break
            if witness is not None:
                break
        cert.record("F-in-EF", witness is None, witness)

    # sample pool: provided samples, their pairwise coproducts, defaults
    pool = list(samples) if samples is not None else _default_samples(F)
    if len(pool) >= 2:
        P, _, _ = coproduct(pool[0], pool[1])
        pool.append(P)
    members = [X for X in pool if in_subcategory(F, X).member]

    # (b) cocone property along injective morphisms between members
    witness = None
    checked = 0
    for Z in members:
        xi_z = xi_component(L, Z)
        for Zp in members:
            xi_zp = xi_component(L, Zp)
            for m in enumerate_morphisms(Z, Zp, injective_only=True,
                                         limit=mono_limit):
                checked += 1
                for c in cat.objects:
                    for x in Z.elements(c):
                        if xi_zp.components[c][m.components[c][x]] != xi_z.components[c][x]:
                            witness = (c, x, m)
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    cert.record("cocone", witness is None,
                witness if witness is not None else f"{checked} injective maps checked")

    # (c) joint surjectivity through representable quotients
    witness = None
    for c in cat.objects:
        for q in sorted(F.selection[c], key=lambda q: q.sort_key()):
            Q = quotient_of_representable(q)
            membership = in_subcategory(F, Q)
            if not membership.member:
                witness = (c, q, "quotient not a member", membership.witness)
                break
            base = q.block_members(cat.identity(c))
            hit = xi_component(L, Q).components[c][base]
            if hit != q:
                witness = (c, q, "identity class classifies to", hit)
                break
        if witness:
            break
    cert.record("joint-surjectivity", witness is None, witness)

    # (d) comonad sanity: idempotent, monic counit, lex on samples
    witness = None
    images = []
    for X in pool:
        GX, counit = comonad_apply(F, X)
        images.append(GX)
        if not counit.is_mono():
            witness = ("counit not monic", X)
            break
        GGX, _ = comonad_apply(F, GX)
        if GGX.carrier != GX.carrier:
            witness = ("G not idempotent", X)
            break
    if witness is None:
        T = terminal(cat)
        GT, _ = comonad_apply(F, T)
        if GT.carrier != T.carrier:
            witness = ("G does not preserve the terminal object",)
    if witness is None:
        for X, Y in zip(pool, pool[1:]):
            P = product(cat, [X, Y])
            GP, _ = comonad_apply(F, P)
            GX, _ = comonad_apply(F, X)
            GY, _ = comonad_apply(F, Y)
            expected = {c: tuple(p for p in P.elements(c)
                                 if p[0] in set(GX.elements(c))
                                 and p[1] in set(GY.elements(c)))
                        for c in cat.objects}
            if GP.carrier != expected:
                witness = ("G does not preserve a binary product", X, Y)
                break
    if witness is None:
        for X in pool[:3]:
            for Y in pool[:3]:
                fs = enumerate_morphisms(X, Y, limit=4)
                for f in fs:
                    for g in fs:
                        E, _ = equalizer(f, g)
                        GE, _ = comonad_apply(F, E)
                        GX, _ = comonad_apply(F, X)
                        kept = set()
                        for c in cat.objects:
                            kept |= {(c, x) for x in GX.elements(c)
                                     if f.components[c][x] == g.components[c][x]}
                        got = {(c, x) for c in cat.objects for x in GE.elements(c)}
                        if got != kept:
                            witness = ("G does not preserve an equalizer", f, g)
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
    cert.record("comonad", witness is None, witness)
    return cert
