"""The large spectrum Spec_eps(A) and its checked structure bounds.

Run:  python3 demos/02_spectrum.py
"""

import random

from fpcomb import (
    PrimeField,
    ResidueSet,
    SpectrumParams,
    les_inequality_check,
    spectrum,
    spectrum_mult_energy_report,
    spectrum_size_bound_check,
)

rng = random.Random(5)
fld = PrimeField(499)
a = ResidueSet.of(fld, rng.sample(range(499), 60))

for eps in (0.2, 0.4, 0.8):
    params = SpectrumParams(a, eps)
    spec = spectrum(params)
    size_chk = spectrum_size_bound_check(params)
    print(
        f"eps = {eps}: |Spec| = {len(spec):3d}  "
        f"<= p/(|A| eps^2) = {size_chk.rhs:8.1f}  ok={size_chk.ok}"
    )

# Subsets of the spectrum have large additive moments.
params = SpectrumParams(a, 0.4)
spec = spectrum(params)
b = ResidueSet.of(fld, rng.sample(spec.elements, min(6, len(spec))))
for k in (2, 3):
    chk = les_inequality_check(params, b, k=k)
    print(
        f"T_{k}(B) = {chk.lhs:12.0f} >= eps^{2*k} |B|^{2*k} |A|/p "
        f"= {chk.rhs:10.3f}  ok={chk.ok}"
    )

# Multiplicative energy of a small spectrum subset: the constant in the
# theorem is unspecified, so this is a ratio report, not a verdict.
rep = spectrum_mult_energy_report(params, b)
print(
    f"Ex(B) = {rep.measured}, reference |B|^2 delta^(-2/3) eps^(-8/3) "
    f"= {rep.reference:.1f}, ratio = {rep.ratio:.3f}"
)

# The point-mass case achieves the structure bound with equality.
point = SpectrumParams(ResidueSet.of(5, [0]), 1.0)
full = spectrum(point)
chk = les_inequality_check(point, full, k=2)
print(f"\npoint mass at p=5: T_2(Spec) = {chk.lhs:.0f} = bound {chk.rhs:.0f}")
