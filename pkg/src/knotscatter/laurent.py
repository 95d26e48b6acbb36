"""Exact integer-coefficient Laurent polynomials in one variable.

The variable is called ``A`` throughout the package.  Quantities that are
naturally polynomials in ``q`` (or half-integer powers of ``q``) are stored
in the ``A`` variable through ``q = A**4``, so ``q**(1/2) -> A**2`` and every
exponent stays an integer.

Coefficients are Python ints, so all arithmetic is exact; zero coefficients
are never stored.  Division is plain long division and must terminate with a
zero remainder, otherwise :class:`~knotscatter.errors.InexactDivisionError`
is raised.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .errors import InexactDivisionError, PoleError

__all__ = ["LaurentPoly", "RationalLaurent", "DELTA"]


class LaurentPoly:
    """A Laurent polynomial ``sum_k c_k * A**k`` with integer coefficients.

    Instances are immutable and hashable.  Supports ``+``, ``-``, ``*``,
    ``**`` (non-negative powers), exact division via :meth:`exact_div`,
    and numeric evaluation via :meth:`__call__`.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs} if coeffs else {}
        clean = {}
        for exp, c in coeffs.items():
            if not isinstance(exp, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            if c:
                clean[exp] = c
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        """Return ``coeff * A**exponent``."""
        return cls({exponent: coeff})

    # -- inspection --------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def span(self) -> int:
        """Width of the exponent range (0 for the zero polynomial)."""
        if not self._coeffs:
            return 0
        return self.max_exp() - self.min_exp()

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs sorted by exponent."""
        return iter(sorted(self._coeffs.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, k: int) -> LaurentPoly:
        """Return ``self * A**k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Divide exactly by ``divisor`` in the Laurent ring.

        Raises:
            InexactDivisionError: if the remainder is nonzero or a leading
                coefficient does not divide evenly.
            ZeroDivisionError: if ``divisor`` is zero.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly(0)
        # Shift both to ordinary polynomials, divide, shift back.
        fshift, gshift = self.min_exp(), divisor.min_exp()
        rem = {e - fshift: c for e, c in self._coeffs.items()}
        den = {e - gshift: c for e, c in divisor._coeffs.items()}
        dmax = max(den)
        dlead = den[dmax]
        quot: dict[int, int] = {}
        while rem:
            rmax = max(rem)
            if rmax < dmax:
                raise InexactDivisionError(f"remainder of degree {rmax} left")
            lead = rem[rmax]
            if lead % dlead:
                raise InexactDivisionError(
                    f"leading coefficient {lead} not divisible by {dlead}"
                )
            c = lead // dlead
            qe = rmax - dmax
            quot[qe] = c
            for e, dc in den.items():
                s = rem.get(qe + e, 0) - c * dc
                if s:
                    rem[qe + e] = s
                else:
                    rem.pop(qe + e, None)
        return LaurentPoly(quot).shifted(fshift - gshift)

    # -- evaluation --------------------------------------------------------

    def __call__(self, a: complex) -> complex:
        """Evaluate at a numeric point ``A = a``.

        Negative exponents require ``a != 0``.  Positive and negative parts
        are evaluated by Horner's rule.
        """
        if not self._coeffs:
            return 0j
        if a == 0 and self.min_exp() < 0:
            raise PoleError("evaluation at A = 0 with negative exponents")
        items = sorted(self._coeffs.items())
        # Horner on A for exponents >= 0, on 1/A for exponents < 0.
        pos = [(e, c) for e, c in items if e >= 0]
        neg = [(e, c) for e, c in items if e < 0]
        total = 0j
        if pos:
            acc = 0j
            prev = pos[-1][0]
            for e, c in reversed(pos):
                acc *= a ** (prev - e)
                acc += c
                prev = e
            total += acc * a ** pos[0][0]
        if neg:
            inv = 1 / a
            acc = 0j
            prev = -neg[0][0]
            for e, c in neg:
                acc *= inv ** (-e - prev)
                acc += c
                prev = -e
            total += acc * inv ** (-neg[-1][0])
        return total

    # -- comparisons / hashing / display ------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        """Render as sorted ``coeff*A^k`` terms, e.g. ``-1*A^-10 + -1*A^-2``."""
        if not self._coeffs:
            return "0"
        return " + ".join(f"{c}*A^{e}" for e, c in sorted(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self._coeffs!r})"


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


#: Loop value delta = -A^2 - A^-2 (one closed strand).
DELTA = LaurentPoly({2: -1, -2: -1})


class RationalLaurent:
    """A ratio of two Laurent polynomials, kept unreduced.

    Used for bracket amplitudes: numerator = plat bracket, denominator =
    delta**2.  No GCD reduction is attempted; evaluation divides numerically
    and raises :class:`PoleError` where the denominator vanishes.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly):
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    def __call__(self, a: complex, pole_tol: float = 1e-12) -> complex:
        den = self.denominator(a)
        if abs(den) <= pole_tol:
            raise PoleError(f"denominator vanishes at A = {a!r}")
        return self.numerator(a) / den

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalLaurent):
            return NotImplemented
        # Unreduced representation: compare by cross-multiplication.
        return (self.numerator * other.denominator
                == other.numerator * self.denominator)

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"RationalLaurent({self.numerator!r}, {self.denominator!r})"

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"
