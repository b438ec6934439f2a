#!/usr/bin/env python3
"""The normalization operator on group sites.

For a group G the classifier is the set of subgroups under the right
conjugate action H . g = g^-1 H g, encoded here as right-coset partitions.
The self-referential cocone component sends each subgroup to its normalizer;
the categorical computation never mentions normalizers, yet reproduces them,
which is checked below against the brute-force definition.
"""

from toposlsc import fixtures
from toposlsc.lsc import build_lsc
from toposlsc.normalize import (
    congruence_to_subgroup,
    normalization_is_top,
    normalization_operator,
    normalizer_direct,
    subgroup_to_congruence,
    subgroups,
)

G = fixtures.dihedral_4()
named = fixtures.d4_named_subgroups(G)
inverse = {H: n for n, H in named.items()}

print("D4 has", len(subgroups(G)), "subgroups:",
      ", ".join(sorted(inverse.values())))

L = build_lsc(G.site())
op = normalization_operator(L)

print("\nsubgroup -> categorical image -> brute-force normalizer")
for name, H in sorted(named.items(), key=lambda kv: (kv[1].order, kv[0])):
    q = subgroup_to_congruence(G, H)
    image = congruence_to_subgroup(G, op.components["*"][q])
    direct = normalizer_direct(G, H)
    mark = "ok" if image == direct else "MISMATCH"
    print(f"  {name:>8} -> {inverse[image]:>8} -> {inverse[direct]:>8}   {mark}")

# The operator is neither idempotent nor monotone on D4: applying it twice to
# <t> keeps climbing, and the trivial subgroup overtakes <t> after one step.
q_t = subgroup_to_congruence(G, named["<t>"])
once = op.components["*"][q_t]
twice = op.components["*"][once]
print("\n<t> -> ", inverse[congruence_to_subgroup(G, once)],
      " -> ", inverse[congruence_to_subgroup(G, twice)], " (not idempotent)")

q_triv = subgroup_to_congruence(G, named["<>"])
print("<> <= <t> but their images are",
      inverse[congruence_to_subgroup(G, op.components['*'][q_triv])],
      "and", inverse[congruence_to_subgroup(G, once)],
      "(not order-preserving)")

# Dedekind groups: all subgroups normal, so the operator is constantly top.
for G2 in [fixtures.quaternion_8(), fixtures.cyclic_group(6),
           fixtures.symmetric_3()]:
    L2 = build_lsc(G2.site())
    print(f"{G2.label}: operator constantly top? {normalization_is_top(L2)}")
