#!/usr/bin/env python3
"""Finite sites, their presheaves, and the classifier of local states.

A finite category is the site; a presheaf assigns a finite set to each object
and a compatible right action to each morphism.  The classifier Xi collects,
at every object c, the right-compatible partitions of the representable y(c);
the element xi_X(x) records exactly which arrows into c are fused by x.
"""

from toposlsc import fixtures
from toposlsc.fincat import (
    Presheaf,
    enumerate_quotient_objects,
    representable,
)
from toposlsc.lsc import build_lsc, xi_component

# -- the site of directed graphs: two parallel arrows V => E ------------------

graph = fixtures.graph_site()
print("site objects:", graph.objects)
print("hom(V, E) =", graph.hom("V", "E"))

yE = representable(graph, "E")
print("\ny(E) has", len(yE.elements("E")), "element at E and",
      len(yE.elements("V")), "at V")

# Quotient objects of y(E): either the two vertex arrows stay apart or they
# are fused.  These are the two local states an edge can have.
for q in enumerate_quotient_objects(graph, "E"):
    print("  quotient object:", q)

# -- the classifier as a graph --------------------------------------------------

L = build_lsc(graph)
print("\nXi(V) has", len(L.elements("V")), "element;",
      "Xi(E) has", len(L.elements("E")), "elements")
for q in L.elements("E"):
    print("  edge", q, "from", L.act(q, "s"), "to", L.act(q, "t"),
          "(a loop)" if L.act(q, "s") == L.act(q, "t") else "")

# A concrete graph: one edge e from p to q, plus a loop l at v.
X = Presheaf(graph, {"V": ("p", "q", "v"), "E": ("e", "l")},
             {"id_V": {"p": "p", "q": "q", "v": "v"},
              "id_E": {"e": "e", "l": "l"},
              "s": {"e": "p", "l": "v"}, "t": {"e": "q", "l": "v"}})
xi = xi_component(L, X)
print("\nclassifying the edges of a concrete graph:")
for e in X.elements("E"):
    print(f"  edge {e!r} |->", xi.components["E"][e])

# -- the idempotent two-element monoid: a one-object site ------------------------

idem = fixtures.idempotent_monoid_site()
Li = build_lsc(idem)
print("\nidempotent monoid classifier:", [repr(q) for q in Li.elements("*")])
print("action of x:", {repr(q): repr(Li.act(q, "x")) for q in Li.elements("*")})

# -- posets collapse: every representable has at most one arrow per source -------

for name, site in fixtures.BUNDLED_POSETS.items():
    Lp = build_lsc(site)
    sizes = [len(Lp.elements(c)) for c in site.objects]
    print(f"poset {name}: classifier sizes {sizes} (terminal)")
