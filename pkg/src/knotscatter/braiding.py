"""Two-channel unitary braid representation and braid-word amplitudes.

A scattering event on the two-state basis (|up> = transmitted, |down> =
reflected) is represented by 2x2 matrices built from the topological phase
theta:

    A = exp(i*theta),   d = -A^2 - A^(-2) = -2*cos(2*theta)

    R1 = A*I + A^(-1)*U1,   U1 = [[d, 0], [0, 0]]
    R2 = A*I + A^(-1)*U2,   U2 = [[1/d, s], [s, d - 1/d]],  s^2 = 1 - 1/d^2

R1 and R2 generate the three-strand braid group (R1 R2 R1 = R2 R1 R2) and
the U's satisfy the Temperley-Lieb relations U_i^2 = d*U_i,
U1 U2 U1 = U1, U2 U1 U2 = U2.  Both R's are unitary exactly on the theta
intervals where |d| >= 1.

Transmission through a device described by a braid word is the squared
modulus of the (0, 0) matrix element of the word's matrix product.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import PoleError

__all__ = [
    "Params",
    "BraidWord",
    "POLE_EPS",
    "make_params",
    "in_unitary_domain",
    "unitary_intervals",
    "u1",
    "u2",
    "r1",
    "r2",
    "f_matrix",
    "check_word",
    "word_crossings",
    "word_inverse",
    "eval_braid",
    "amplitude",
    "transmission",
]

#: Guard on |d| below which the representation is treated as singular.
POLE_EPS = 1e-9

#: A braid word: letters (generator, exponent), generator 1 or 2, exponent
#: nonzero.  The LAST letter acts first on the initial state, i.e. letters
#: are listed in the same order the operators appear in a right-acting
#: product string.  Generator 1 is the mixing matrix R2 (it braids the pair
#: of strands carrying the signal), generator 2 is the diagonal matrix R1.
BraidWord = Sequence[tuple[int, int]]


@dataclass(frozen=True)
class Params:
    """Phase point of the representation.

    Attributes:
        theta: phase in radians.
        A: unit-modulus weight exp(i*theta).
        d: loop value -2*cos(2*theta).
        unitary: True iff theta lies in the closed unitarity intervals
            (equivalently |d| >= 1).
    """

    theta: float
    A: complex
    d: float
    unitary: bool


def make_params(theta: float) -> Params:
    """Build the derived quantities for a phase ``theta``."""
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    theta = float(theta)
    return Params(
        theta=theta,
        A=cmath.exp(1j * theta),
        d=-2.0 * math.cos(2.0 * theta),
        unitary=in_unitary_domain(theta),
    )


def in_unitary_domain(theta: float) -> bool:
    """Whether both generators are unitary at this phase.

    The closed intervals [0, pi/6], [pi/3, 2pi/3], [5pi/6, 7pi/6],
    [4pi/3, 5pi/3], [11pi/6, 2pi] (mod 2pi) are exactly where
    |cos(2*theta)| >= 1/2; boundary points count as unitary.  A small
    tolerance absorbs floating-point rounding at the endpoints.
    """
    return abs(math.cos(2.0 * theta)) >= 0.5 - 1e-12


def unitary_intervals() -> list[tuple[float, float]]:
    """The closed unitarity intervals on [0, 2*pi]."""
    p = math.pi
    return [
        (0.0, p / 6),
        (p / 3, 2 * p / 3),
        (5 * p / 6, 7 * p / 6),
        (4 * p / 3, 5 * p / 3),
        (11 * p / 6, 2 * p),
    ]


def _require_regular(p: Params, eps: float = POLE_EPS) -> None:
    if abs(p.d) <= eps:
        raise PoleError(
            f"representation singular at theta={p.theta!r}: |d|={abs(p.d):.3e}"
        )


def u1(p: Params) -> np.ndarray:
    """Temperley-Lieb generator acting diagonally: diag(d, 0)."""
    return np.array([[p.d, 0.0], [0.0, 0.0]], dtype=complex)


def u2(p: Params) -> np.ndarray:
    """Temperley-Lieb generator in the mixing channel.

    The off-diagonal entry is sqrt(d^2-1)/d (principal square root of
    d^2-1).  For d > 0 this equals the principal sqrt(1 - 1/d^2); for d < 0
    it differs by a sign, which is the choice that keeps the similarity
    r2 == f @ r1 @ inv(f) an identity on both sides of d = 0.  Word
    amplitudes are unchanged by that sign (it amounts to conjugation by
    diag(1, -1)).
    """
    _require_regular(p)
    d = p.d
    s = cmath.sqrt(complex(d * d - 1.0)) / d
    return np.array([[1.0 / d, s], [s, d - 1.0 / d]], dtype=complex)


def r1(p: Params) -> np.ndarray:
    """Diagonal braid generator; equals diag(-A^-3, A) identically."""
    return p.A * np.eye(2, dtype=complex) + u1(p) / p.A


def r2(p: Params) -> np.ndarray:
    """Mixing braid generator A*I + A^(-1)*U2.

    Raises:
        PoleError: when |d| <= POLE_EPS (U2 contains 1/d).
    """
    return p.A * np.eye(2, dtype=complex) + u2(p) / p.A


def f_matrix(p: Params) -> np.ndarray:
    """Basis-change matrix with r2 == f @ r1 @ inv(f).

    Unitary (real entries) for |d| >= 1; outside that range the principal
    complex square root keeps it defined but non-unitary.
    """
    _require_regular(p)
    d = p.d
    sig = cmath.sqrt(complex(d * d - 1.0))
    return np.array(
        [[1.0 / d, -sig / d], [sig / d, 1.0 / d]], dtype=complex
    )


def check_word(word: BraidWord) -> None:
    """Validate a braid word; raises ValueError on malformed letters."""
    for letter in word:
        try:
            gen, exp = letter
        except (TypeError, ValueError):
            raise ValueError(f"letter {letter!r} is not a (generator, exponent) pair")
        if gen not in (1, 2):
            raise ValueError(f"generator must be 1 or 2, got {gen!r}")
        if not isinstance(exp, int) or exp == 0:
            raise ValueError(f"exponent must be a nonzero integer, got {exp!r}")


def word_crossings(word: BraidWord) -> int:
    """Total number of crossings (sum of |exponent|)."""
    return sum(abs(e) for _, e in word)


def word_inverse(word: BraidWord) -> list[tuple[int, int]]:
    """Word of the inverse braid: reversed order, negated exponents."""
    return [(g, -e) for g, e in reversed(word)]


def eval_braid(word: BraidWord, p: Params) -> np.ndarray:
    """Matrix of a braid word at phase ``p``.

    Letters are multiplied in listed order, so the last letter's matrix sits
    rightmost in the product and acts first on the initial state.  Negative
    exponents use the true matrix inverse (not the adjoint, which would be
    wrong outside the unitary domain).
    """
    check_word(word)
    gens = {1: None, 2: None}
    out = np.eye(2, dtype=complex)
    for gen, exp in word:
        if gens[gen] is None:
            gens[gen] = r2(p) if gen == 1 else r1(p)
        out = out @ np.linalg.matrix_power(gens[gen], exp)
    return out


def amplitude(word: BraidWord, p: Params) -> complex:
    """Forward-scattering amplitude: the (0, 0) element of the word matrix."""
    return complex(eval_braid(word, p)[0, 0])


def transmission(word: BraidWord, p: Params) -> float:
    """Transmission coefficient |amplitude|^2.

    Values above 1 occur (and are meaningful as a diagnostic) only outside
    the unitary domain.
    """
    return abs(amplitude(word, p)) ** 2
