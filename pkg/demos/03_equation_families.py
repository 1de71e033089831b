"""Equation families a x + b y + c z = d, the invariants T and T*,
and sets avoiding every equation of a family.

Run:  python3 demos/03_equation_families.py
"""

from fpcomb import (
    PrimeField,
    build_family,
    construct_parity_set,
    avoids,
    count_solutions,
    deviation_regime,
    dump_family,
    greedy_t_witness,
    max_avoiding,
    parse_family,
    ratio_set_size,
    t_invariant,
    t_star_invariant,
    verify_witness,
)

# ------------------------------------------------- a subgroup family
fld = PrimeField(7)
fam = build_family(fld, "subgroup", order=3)  # S(E) = Gamma x Gamma
print(f"subgroup family over F_7: |E| = {len(fam)}")

t = t_invariant(fam)
print(f"T  = {t.value} (witness in plane {t.witness.plane}: {t.witness.indices})")
print(f"   witness verifies: {verify_witness(fam, t.witness)}")

ts = t_star_invariant(fam, "exact")
print(f"T* = {ts.value} (exact branch-and-bound)")
print(f"T* >= |ratio set| = {ratio_set_size(fam)}")

g = greedy_t_witness(fam)
print(f"greedy T witness: size {len(g.indices)} >= ceil(sqrt(|E|)) = 3")

# ------------------------------------------------- family file format
text = dump_family(build_family(PrimeField(11), "lambda", lambdas=[1, 2, 3]))
print("\nfamily file round-trip:")
print(text, end="")
fam11 = parse_family(text)
print(f"parsed back {len(fam11)} equations over p = {fam11.p}")

# -------------------------------------- solution counts and avoidance
eq = fam11.equations[0]
a_set = max_avoiding(fam11.field, fam11, mode="greedy").witness
print(f"\ngreedy avoiding set for the lambda family: {a_set.elements}")
print(f"avoids all equations: {avoids(a_set, fam11)}")
sc = count_solutions(fam11.field, eq, a_set, a_set, a_set)
print(f"solutions of {eq} inside it: {sc.count} (random model: {sc.expected})")
for entry in deviation_regime(fam11, a_set):
    print(f"  {entry.equation}: count {entry.count} -> {entry.regime}")

# ------------------------------------------- the parity construction
big = PrimeField(10007)
built = construct_parity_set(big, 16)
print(
    f"\nparity construction at p = 10007, q = 16: |A| = {len(built.a)}, "
    f"|E| = {len(built.family)}, avoids = {avoids(built.a, built.family)}"
)
