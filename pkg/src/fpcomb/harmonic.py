"""Exact convolutions and floating-point Fourier transforms over Z/pZ.

Two parallel computational paths are kept deliberately separate:

* counting quantities (convolutions, energies, solution counts) are
  computed with exact integer arithmetic -- schoolbook for small inputs,
  big-integer coefficient packing (Kronecker substitution) for large ones;
* spectrum magnitudes are computed in double precision, either by direct
  summation over the support or by an O(p log p) transform (numpy's
  pocketfft, which handles prime lengths via Bluestein's chirp).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import FieldMismatch
from .field import PrimeField, ResidueSet

# Below this modulus the O(p^2) schoolbook convolution is competitive.
_SCHOOLBOOK_MAX_P = 512

# Direct DFT summation is used up to this support size.
_DIRECT_DFT_MAX_SUPPORT = 64


@dataclass(frozen=True)
class IntegerProfile:
    """An exact integer-valued function on F_p (e.g. representation counts)."""

    field: PrimeField
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.field.p:
            raise ValueError(
                f"profile length {len(self.values)} != p = {self.field.p}"
            )
        if self.values and min(self.values) < 0:
            raise ValueError("profile values must be non-negative")

    @classmethod
    def from_set(cls, a: ResidueSet) -> "IntegerProfile":
        return cls(a.field, tuple(a.indicator()))

    @classmethod
    def delta(cls, fld: PrimeField, x: int) -> "IntegerProfile":
        vals = [0] * fld.p
        vals[x % fld.p] = 1
        return cls(fld, tuple(vals))

    @property
    def p(self) -> int:
        return self.field.p

    def total(self) -> int:
        return sum(self.values)

    def __getitem__(self, x: int) -> int:
        return self.values[x % self.p]

    def support(self) -> ResidueSet:
        return ResidueSet(
            self.field, tuple(x for x, v in enumerate(self.values) if v > 0)
        )


def _check_same_field(f: IntegerProfile, g: IntegerProfile) -> None:
    if f.field.p != g.field.p:
        raise FieldMismatch(f"p = {f.field.p} vs p = {g.field.p}")


def _cyclic_convolve_exact(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    """Exact cyclic convolution of length p.

    Schoolbook for small p, otherwise coefficients are packed into one big
    integer per operand (Kronecker substitution): a single CPython
    big-integer multiply performs the whole linear convolution exactly.
    """
    maxf = max(f, default=0)
    maxg = max(g, default=0)
    if maxf == 0 or maxg == 0:
        return [0] * p
    # Every linear-convolution coefficient is at most this.
    bound = min(maxf * sum(g), maxg * sum(f))
    if p <= _SCHOOLBOOK_MAX_P and 2 * bound < (1 << 62):
        lin = np.convolve(
            np.asarray(f, dtype=np.int64), np.asarray(g, dtype=np.int64)
        )
        out = np.zeros(p, dtype=np.int64)
        out[: lin.shape[0] - p] += lin[p:]
        out[: min(p, lin.shape[0])] += lin[:p]
        return out.tolist()

    # Slot width in bytes so that every linear-convolution coefficient fits.
    slot = (bound.bit_length() + 7) // 8
    for width in (2, 4, 8):
        if slot <= width:
            slot = width
            break

    if slot <= 8:
        packed_f = np.asarray(f, dtype=np.uint64).astype(f"<u{slot}").tobytes()
        packed_g = np.asarray(g, dtype=np.uint64).astype(f"<u{slot}").tobytes()
        prod = int.from_bytes(packed_f, "little") * int.from_bytes(packed_g, "little")
        raw = prod.to_bytes(2 * p * slot, "little")
        lin = np.frombuffer(raw, dtype=f"<u{slot}")[: 2 * p - 1]
        if 2 * bound < (1 << 63):
            out = lin[:p].astype(np.uint64)
            out[: p - 1] += lin[p:].astype(np.uint64)
            return out.tolist()
        out = [int(v) for v in lin[:p]]
        for i, c in enumerate(lin[p:]):
            out[i] += int(c)
        return out

    # Huge coefficients: pack/unpack slot by slot with Python integers.
    shift = slot * 8
    big_f = sum(int(v) << (i * shift) for i, v in enumerate(f))
    big_g = sum(int(v) << (i * shift) for i, v in enumerate(g))
    prod = big_f * big_g
    mask = (1 << shift) - 1
    out = [0] * p
    for i in range(2 * p - 1):
        out[i % p] += (prod >> (i * shift)) & mask
    return out


def convolve_add(f: IntegerProfile, g: IntegerProfile) -> IntegerProfile:
    """(f * g)(x) = sum_y f(y) g(x - y), exact."""
    _check_same_field(f, g)
    vals = _cyclic_convolve_exact(f.values, g.values, f.p)
    return IntegerProfile(f.field, tuple(vals))


def correlate_add(f: IntegerProfile, g: IntegerProfile) -> IntegerProfile:
    """(f o g)(x) = sum_y f(y) g(y + x), exact.

    Equals (f^c * g) where f^c(y) = f(-y).
    """
    _check_same_field(f, g)
    p = f.p
    reflected = tuple(f.values[(-x) % p] for x in range(p))
    vals = _cyclic_convolve_exact(reflected, g.values, p)
    return IntegerProfile(f.field, tuple(vals))


def convolve_mult(f: IntegerProfile, g: IntegerProfile) -> IntegerProfile:
    """(f (x) g)(x) = sum_{y != 0} f(y) g(x y^{-1}), exact.

    Index 0 of f is ignored per the summation over F_p*.
    """
    _check_same_field(f, g)
    p = f.p
    out = np.zeros(p, dtype=object)
    gv = np.asarray(g.values, dtype=object)
    idx = np.arange(p)
    for y in range(1, p):
        fy = f.values[y]
        if fy:
            # out[z*y] += f(y) g(z)  <=>  out[x] += f(y) g(x y^{-1})
            np.add.at(out, idx * y % p, fy * gv)
    return IntegerProfile(f.field, tuple(int(v) for v in out))


def convolve_add_iterated(f: IntegerProfile, k: int) -> IntegerProfile:
    """k-fold additive self-convolution; k = 1 returns f itself."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out = f
    for _ in range(k - 1):
        out = convolve_add(out, f)
    return out


@dataclass(frozen=True)
class SpectrumTable:
    """Magnitudes |hat A(xi)| for all frequencies of one source set.

    magnitudes[0] is overwritten with the exact integer |A| to remove
    float noise from the one value the spectrum definition always includes;
    the table is mirror-symmetric (real 0/1 input).
    """

    field: PrimeField
    source_size: int
    magnitudes: tuple[float, ...]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def squared_magnitudes(self) -> tuple[float, ...]:
        m0 = float(self.source_size)
        return (m0 * m0,) + tuple(m * m for m in self.magnitudes[1:])


def _complex_transform(values: Sequence[int], p: int) -> np.ndarray:
    """hat f(xi) = sum_x f(x) e(-xi x / p) for all xi, double precision."""
    vals = np.asarray(values, dtype=np.float64)
    support = np.nonzero(vals)[0]
    if support.size <= _DIRECT_DFT_MAX_SUPPORT:
        roots = np.exp(-2j * np.pi * np.arange(p) / p)
        xi = np.arange(p)
        acc = np.zeros(p, dtype=np.complex128)
        for a in support:
            acc += vals[a] * roots[xi * int(a) % p]
        return acc
    return np.fft.fft(vals)


def dft(a: ResidueSet) -> SpectrumTable:
    """Magnitude spectrum of the indicator of A."""
    p = a.p
    hat = _complex_transform(a.indicator(), p)
    mags = np.abs(hat)
    # enforce exact mirror symmetry |hat A(xi)| = |hat A(p - xi)|
    if p > 1:
        half = (p - 1) // 2
        mags[p - half :] = mags[1 : half + 1][::-1]
    mags[0] = float(len(a))
    return SpectrumTable(a.field, len(a), tuple(mags.tolist()))


def profile_dft(f: IntegerProfile) -> np.ndarray:
    """Complex transform of an arbitrary integer profile."""
    return _complex_transform(f.values, f.p)


def inverse_transform(hat: np.ndarray) -> np.ndarray:
    """Reconstruct f from its complex transform (double precision)."""
    return np.fft.ifft(hat)


def sup_norm_nonzero(t: SpectrumTable) -> float:
    """max over xi != 0 of |hat A(xi)|."""
    if t.p == 1:
        return 0.0
    return max(t.magnitudes[1:])
