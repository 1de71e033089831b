"""Tour of the exact-arithmetic core: prime fields, convolutions,
Fourier magnitudes and energy statistics.

Run:  python3 demos/01_fourier_and_energies.py
"""

from fpcomb import (
    IntegerProfile,
    PrimeField,
    ResidueSet,
    additive_energy,
    convolve_add,
    dft,
    dilate,
    energy_star,
    moment_T_k,
    multiplicative_energy,
    multiplicative_subgroup,
    pigeonhole_decompose,
    sigma_k,
)

# ------------------------------------------------------------------ field
fld = PrimeField(101)
print(f"F_{fld.p}: primitive root {fld.primitive_root()}")

gamma = multiplicative_subgroup(fld, 4)
print(f"subgroup of order 4: {gamma.elements}")
print(f"dilated by 3:        {dilate(gamma, 3).elements}")

# --------------------------------------------------- exact convolutions
a = ResidueSet.of(fld, [0, 1, 2, 3, 4, 50, 60, 70])
prof = IntegerProfile.from_set(a)
sumset_profile = convolve_add(prof, prof)
sumset = sumset_profile.support()
print(f"\n|A| = {len(a)}, |A+A| = {len(sumset)}")
print(f"max representation count in A+A: {max(sumset_profile.values)}")

# ------------------------------------------------------- Fourier table
table = dft(a)
parseval = sum(table.squared_magnitudes)
print(f"\nParseval: sum |hat A|^2 = {parseval:.6f} (= p|A| = {fld.p * len(a)})")

# ------------------------------------------------------------- energies
print(f"\nE+(A)  = {additive_energy(a, a).value}")
print(f"Ex(A)  = {multiplicative_energy(a, a).value}")
print(f"T_3(A) = {moment_T_k(a, 3)}")
print(f"sigma_2(A) = {sigma_k(a, 2)}  (equals |A| iff A = -A)")
print(f"E+_*(A) = E+(A) - |A|^4/p = {energy_star(a)} (exact rational)")

# ------------------------------------- dyadic pigeonhole decomposition
pset = ResidueSet.of(fld, {0, 1, 2, 99, 100})  # symmetric window
dec = pigeonhole_decompose(a, pset)
print(
    f"\npigeonhole over P = {pset.elements}: subset of size "
    f"{len(dec.subset)} with (A*P) >= {dec.level} on it"
)
