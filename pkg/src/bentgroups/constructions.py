"""Certified bent class functions on Z_n from CAZAC sequences.

A unimodular sequence with zero cyclic autocorrelation at every nonzero lag
(constant amplitude, zero autocorrelation) scaled by 1/sqrt(n) is exactly a
coefficient vector passing the cyclic bentness criterion.  Zadoff-Chu chirps
provide such a sequence for every length n and every root coprime to n, and
plain quadratic chirps do for odd n.  Every constructor re-verifies its
output with the derivative-sum check and refuses to return anything that
does not certify.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .bentness import BENT, BentReport, is_bent
from .characters import character_table
from .class_functions import ClassFunction, from_coefficients, from_values
from .errors import CapabilityError, ConstructionError
from .groups import make_cyclic

__all__ = [
    "CertifiedFunction",
    "SequenceKind",
    "SequenceSpec",
    "TransformKind",
    "character_twist",
    "global_phase",
    "make_bent_cyclic",
    "quadratic_chirp",
    "transform",
    "translate",
    "zadoff_chu",
]


class SequenceKind(str, enum.Enum):
    ZADOFF_CHU = "zadoff-chu"
    QUADRATIC_CHIRP = "chirp"


@dataclass(frozen=True)
class SequenceSpec:
    """Recipe for a unimodular sequence of length ``length``.

    ``root`` is the Zadoff-Chu root u, which must be coprime to the length;
    quadratic chirps ignore it and require odd length.
    """

    kind: SequenceKind
    length: int
    root: int = 1

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"sequence length must be positive, got {self.length}")
        if self.kind is SequenceKind.ZADOFF_CHU:
            if math.gcd(self.root, self.length) != 1:
                raise ValueError(
                    f"Zadoff-Chu root must be coprime to the length; "
                    f"gcd({self.root}, {self.length}) = {math.gcd(self.root, self.length)}"
                )
        elif self.kind is SequenceKind.QUADRATIC_CHIRP:
            if self.length % 2 == 0:
                raise ValueError(
                    f"quadratic chirps require odd length, got {self.length}"
                )
        else:
            raise ValueError(f"unknown sequence kind {self.kind!r}")


@dataclass(frozen=True, eq=False)
class CertifiedFunction:
    """A class function bundled with the BentReport that certified it."""

    function: ClassFunction
    report: BentReport


def zadoff_chu(n: int, u: int) -> np.ndarray:
    """Zadoff-Chu sequence g_k = exp(-i*pi*u*k(k+1)/n) (odd n) or
    exp(-i*pi*u*k^2/n) (even n), for gcd(u, n) = 1.

    The parity split keeps the sequence n-periodic and drives every nonzero
    cyclic autocorrelation lag to zero.
    """
    if n < 1:
        raise ValueError(f"sequence length must be positive, got {n}")
    if math.gcd(u, n) != 1:
        raise ValueError(
            f"Zadoff-Chu root must be coprime to the length; "
            f"gcd({u}, {n}) = {math.gcd(u, n)}"
        )
    k = np.arange(n)
    if n % 2:
        phase = -np.pi * u * k * (k + 1) / n
    else:
        phase = -np.pi * u * k * k / n
    return np.exp(1j * phase)


def quadratic_chirp(n: int) -> np.ndarray:
    """Quadratic chirp g_k = omega^(k^2), omega = exp(2*pi*i/n), odd n only."""
    if n < 1:
        raise ValueError(f"sequence length must be positive, got {n}")
    if n % 2 == 0:
        raise ValueError(f"quadratic chirps require odd length, got {n}")
    k = np.arange(n)
    return np.exp(2j * np.pi * ((k * k) % n) / n)


def _sequence(spec: SequenceSpec) -> np.ndarray:
    if spec.kind is SequenceKind.ZADOFF_CHU:
        return zadoff_chu(spec.length, spec.root)
    return quadratic_chirp(spec.length)


def make_bent_cyclic(spec: SequenceSpec, tol: float = 1e-8) -> CertifiedFunction:
    """Build the class function on Z_n with coefficients g/sqrt(n) and certify it.

    Raises ConstructionError if the self-check does not come back BENT.
    """
    n = spec.length
    table = character_table(make_cyclic(n))
    coefficients = _sequence(spec) / math.sqrt(n)
    f = from_coefficients(table, coefficients)
    report = is_bent(f, tol)
    if report.verdict != BENT:
        raise ConstructionError(
            f"construction {spec} failed its bentness self-check: "
            f"verdict {report.verdict}, max residual {report.max_residual:.3e}"
        )
    return CertifiedFunction(function=f, report=report)


# ---------------------------------------------------------------------------
# bentness-preserving transforms


class TransformKind(str, enum.Enum):
    GLOBAL_PHASE = "global-phase"
    TRANSLATE = "translate"
    CHARACTER_TWIST = "character-twist"


def global_phase(f: ClassFunction, c: complex) -> ClassFunction:
    """Multiply every value by a fixed unit-modulus constant."""
    if abs(abs(c) - 1.0) > 1e-9:
        raise ValueError(f"phase factor must be unimodular, got |c| = {abs(c):.6g}")
    return from_coefficients(f.table, f.coefficients * c)


def translate(f: ClassFunction, tau: int) -> ClassFunction:
    """Left-translate the argument: x -> f(tau x)."""
    group = f.group
    tau = int(tau)
    if not 0 <= tau < group.order:
        raise IndexError(
            f"translation index {tau} out of range for group of order {group.order}"
        )
    return from_values(f.table, f.values[group.cayley[tau]])


def character_twist(f: ClassFunction, i: int) -> ClassFunction:
    """Multiply pointwise by the i-th character (0-based, one-dimensional only)."""
    table = f.table
    if not 0 <= i < table.n_irreps:
        raise IndexError(f"character index {i} out of range for {table.n_irreps} irreps")
    if table.degrees[i] != 1:
        raise CapabilityError(
            f"character twist requires a one-dimensional character; "
            f"chi_{i + 1} has degree {table.degrees[i]}"
        )
    return from_values(table, f.values * table.phi[:, i])


def transform(f: ClassFunction, kind: TransformKind, value) -> ClassFunction:
    """Dispatch one of the three bentness-preserving transforms."""
    kind = TransformKind(kind)
    if kind is TransformKind.GLOBAL_PHASE:
        return global_phase(f, value)
    if kind is TransformKind.TRANSLATE:
        return translate(f, value)
    return character_twist(f, value)
