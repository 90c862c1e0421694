"""Elementary symmetric polynomials, polynomial evaluation, Vandermonde determinants.

A *track* is the canonical identity sequence used everywhere in the
package: strictly increasing, pairwise distinct, nonzero residues.  The
symmetric-function ladder tau_0..tau_r of a track drives the privileged
coalition predicates, and the (generalized) Vandermonde determinants
drive the share-recovery formulas.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ParameterError
from .field import PrimeField

# canonical track: sorted tuple of distinct residues in [1, p-1]
Track = tuple[int, ...]


def as_track(values: Iterable[int], field: PrimeField) -> Track:
    """Validate and canonicalize a sequence of identities into a Track."""
    vals = tuple(int(v) for v in values)
    if not vals:
        raise ParameterError("a track must contain at least one identity")
    for v in vals:
        if not 1 <= v <= field.p - 1:
            raise ParameterError(f"identity {v} outside [1, {field.p - 1}]")
    if len(set(vals)) != len(vals):
        raise ParameterError("track identities must be pairwise distinct")
    return tuple(sorted(vals))


def elem_sym_all(values: Sequence[int], field: PrimeField) -> tuple[int, ...]:
    """The full ladder (tau_0, ..., tau_r) of elementary symmetric polynomials.

    Computed as the coefficients of prod(x + v) by incremental polynomial
    multiplication, O(r^2) field multiplications; tau_w is the coefficient
    of x^(r-w).
    """
    p = field.p
    taus = [1]
    for v in values:
        taus = (
            [1]
            + [(taus[k] + v * taus[k - 1]) % p for k in range(1, len(taus))]
            + [v * taus[-1] % p]
        )
    return tuple(taus)


def elem_sym(values: Sequence[int], w: int, field: PrimeField) -> int:
    """tau_w of the given values; 1 at w=0 and 0 outside [0, len(values)]."""
    if w == 0:
        return 1
    if w < 0 or w > len(values):
        return 0
    return elem_sym_all(values, field)[w]


def poly_eval(coeffs: Sequence[int], x: int, field: PrimeField) -> int:
    """Evaluate sum(coeffs[k] * x**k) mod p by Horner's rule."""
    p = field.p
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def vandermonde_det(values: Sequence[int], field: PrimeField) -> int:
    """prod_{i<j} (values[j] - values[i]) mod p.

    The sign depends on the sequence order; zero exactly when the sequence
    has a repeated entry (impossible for a valid Track).
    """
    p = field.p
    out = 1
    for i in range(len(values)):
        vi = values[i]
        for j in range(i + 1, len(values)):
            out = out * (values[j] - vi) % p
    return out


def generalized_vandermonde_det(
    values: Sequence[int], exponents: Sequence[int], field: PrimeField
) -> int:
    """det of the matrix with entry (i, k) = values[i] ** exponents[k], mod p.

    Exponents must be strictly increasing and non-negative; the classical
    Vandermonde determinant is the special case exponents = (0, ..., r-1).
    """
    if len(exponents) != len(values):
        raise ParameterError(
            f"{len(exponents)} exponents for {len(values)} points"
        )
    if any(e < 0 for e in exponents):
        raise ParameterError("exponents must be non-negative")
    if any(a >= b for a, b in zip(exponents, exponents[1:])):
        raise ParameterError("exponents must be strictly increasing")
    from . import linalg

    p = field.p
    rows = [[pow(v % p, e, p) for e in exponents] for v in values]
    return linalg.det(rows, p)
