"""Applications: collinear triples, non-averaging sets, mixed energy
sums, and the reproducible experiment harness behind the CLI.

Run:  python3 demos/04_applications_and_experiments.py
"""

import json
import random

from fpcomb import (
    ExperimentConfig,
    PrimeField,
    ResidueSet,
    collinear_deviation,
    collinear_triples,
    is_nonaveraging,
    max_nonaveraging,
    mixed_energy_sum,
    multiplicative_subgroup,
    q_lambda,
    run_experiment,
)

# ----------------------------------------------------- collinear triples
rng = random.Random(12)
fld = PrimeField(101)
a = ResidueSet.of(fld, rng.sample(range(101), 20))
stats = collinear_triples(a, "fast")
dev = collinear_deviation(a)
print(f"A x A in F_101^2 with |A| = {len(a)}")
print(f"collinear triples: {stats.total}")
print(
    f"random model |A|^6/p^2: {float(dev.expected):.1f}, "
    f"deviation {float(dev.deviation):+.1f}"
)

q = q_lambda(a)
n = len(a)
print(f"q(0) = q(1) = {q[0]} = |A|(|A|-1) = {n * (n - 1)}")
print(f"sum_lambda q(lambda) = {sum(q.values())} = |A|^2(|A|-1) = {n * n * (n - 1)}")

# ------------------------------------------------------- non-averaging
fld = PrimeField(31)
found = max_nonaveraging(fld, 1, mode="greedy", seed=3)
print(f"\ngreedy non-averaging set in F_31 (t = 1): {found.witness.elements}")
print(f"really non-averaging: {is_nonaveraging(found.witness, 1)}")
exact = max_nonaveraging(PrimeField(13), 1, mode="exhaustive")
print(f"exhaustive maximum in F_13: size {exact.size}, e.g. {exact.witness.elements}")

# ------------------------------------------------------- mixed energies
fld = PrimeField(101)
gamma = multiplicative_subgroup(fld, 10)
x = multiplicative_subgroup(fld, 5)
rep = mixed_energy_sum(gamma, x)
print(
    f"\nsum over s in X of E+(G, sG): {rep.total} "
    f"(random model |X||G|^4/p = {float(rep.expected):.1f}, "
    f"deviation {float(rep.deviation):+.1f})"
)

# ------------------------------------------- reproducible experiments
# The same sweeps are reachable from the shell:
#   fpcomb experiment --kind collinear --primes 101,103,107 --seed 7 \
#       --format json --out report.json
config = ExperimentConfig(
    kind="collinear",
    primes=[101, 103, 107],
    seed=7,
    params={"density": 0.25},
)
report = run_experiment(config)
print(f"\ncollinear sweep over primes {config.primes}:")
for row in report.measurements:
    print(
        f"  p = {row['p']}: triples {row['T']}, "
        f"expected {float(row['expected']):.1f}"
    )
print(f"all invariant checks passed: {report.all_passed}")
payload = json.loads(report.to_json())
print(f"JSON report schema_version = {payload['schema_version']}")
