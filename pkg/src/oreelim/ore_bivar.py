"""The bivariate Ore algebra A[x1;sigma1][x2;sigma2].

Representation is recursive: a polynomial is a sequence of inner OrePoly
values in x1, indexed by x2-power, highest-index coefficient nonzero.  The
indeterminates commute with each other (x1*x2 = x2*x1) and each twists the
base-field coefficients by its own automorphism; moving x2 past an inner
polynomial applies sigma2 to its base coefficients and fixes x1, because
sigma2 fixes x1.  Both automorphisms are Frobenius powers, hence commute.
"""

from __future__ import annotations

from .errors import RingMismatch
from .field import NEG_INF, Automorphism, FieldElem
from .ore_uni import OrePoly, OreRing


class BivarRing:
    """A[x1;sigma1][x2;sigma2] over one field context."""

    __slots__ = ("ctx", "sigma1", "sigma2", "inner")

    def __init__(self, ctx, sigma1, sigma2):
        if not isinstance(sigma1, Automorphism) or sigma1.ctx != ctx:
            raise RingMismatch("sigma1 must be an automorphism of ctx")
        if not isinstance(sigma2, Automorphism) or sigma2.ctx != ctx:
            raise RingMismatch("sigma2 must be an automorphism of ctx")
        self.ctx = ctx
        self.sigma1 = sigma1
        self.sigma2 = sigma2
        self.inner = OreRing(ctx, sigma1)

    def __eq__(self, other):
        return (
            isinstance(other, BivarRing)
            and self.ctx == other.ctx
            and self.sigma1 == other.sigma1
            and self.sigma2 == other.sigma2
        )

    def __hash__(self):
        return hash((self.ctx, self.sigma1, self.sigma2))

    def __repr__(self):
        return f"{self.ctx!r}[x1; {self.sigma1!r}][x2; {self.sigma2!r}]"

    # -- constructors ------------------------------------------------------------

    def zero(self):
        return BivarOrePoly(self, ())

    def one(self):
        return BivarOrePoly(self, (self.inner.one(),))

    def x1(self, k=1):
        return BivarOrePoly(self, (self.inner.x(k),))

    def x2(self, k=1):
        return BivarOrePoly(self, (self.inner.zero(),) * k + (self.inner.one(),))

    def constant(self, value):
        return self.poly([self.inner.constant(value)])

    def from_uni(self, f):
        """Embed an inner polynomial as an x2-degree-0 element."""
        if f.ring != self.inner:
            raise RingMismatch("inner polynomial from another ring")
        return BivarOrePoly(self, _normalize((f,)))

    def poly(self, coeffs):
        """Polynomial from a low-to-high sequence of inner-coercible values."""
        inner = []
        for c in coeffs:
            if isinstance(c, OrePoly):
                if c.ring != self.inner:
                    raise RingMismatch("coefficient from another inner ring")
                inner.append(c)
            elif isinstance(c, (FieldElem, int)):
                inner.append(self.inner.constant(c))
            elif isinstance(c, (list, tuple)):
                inner.append(self.inner.poly(c))
            else:
                raise RingMismatch(f"cannot use {type(c).__name__} as coefficient")
        return BivarOrePoly(self, _normalize(inner))


def _normalize(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero:
        n -= 1
    return tuple(coeffs[:n])


class BivarOrePoly:
    """Element of A[x1;sigma1][x2;sigma2]; immutable value type."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs  # normalized tuple of OrePoly

    # -- structure ----------------------------------------------------------------

    @property
    def degree(self):
        """Degree in x2 (-inf for the zero polynomial)."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        """The x2^i coefficient (zero polynomial when out of range)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.inner.zero()

    @property
    def lead_coeff(self):
        if not self.coeffs:
            raise RingMismatch("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def max_inner_degree(self):
        """Largest x1-degree among the x2-coefficients (0 for constants)."""
        degs = [c.degree for c in self.coeffs if not c.is_zero]
        return max(degs) if degs else 0

    def __eq__(self, other):
        if isinstance(other, BivarOrePoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BivarOrePoly):
            if other.ring != self.ring:
                raise RingMismatch(
                    f"polynomials of {self.ring!r} and {other.ring!r} cannot mix"
                )
            return other
        if isinstance(other, OrePoly):
            return self.ring.from_uni(other)
        if isinstance(other, (FieldElem, int)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        a, b = self.coeffs, g.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BivarOrePoly(self.ring, _normalize(out))

    __radd__ = __add__

    def __neg__(self):
        return BivarOrePoly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        a, b = self.coeffs, g.coeffs
        if not a or not b:
            return BivarOrePoly(self.ring, ())
        zero = self.ring.inner.zero()
        e2 = self.ring.sigma2.e
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero:
                continue
            for j, bj in enumerate(b):
                if bj.is_zero:
                    continue
                out[i + j] = out[i + j] + ai * bj.coeff_twist(i * e2)
        return BivarOrePoly(self.ring, _normalize(out))

    def __rmul__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g * self

    def __pow__(self, k):
        if k < 0:
            raise RingMismatch("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_left(self, k):
        """x2^k * self: coefficient of x2^(i+k) is sigma2^k applied to the
        x2^i coefficient (coefficient-wise on base-field values)."""
        if k < 0:
            raise RingMismatch("shift power must be nonnegative")
        if k == 0 or self.is_zero:
            return self
        e2 = self.ring.sigma2.e
        zero = self.ring.inner.zero()
        shifted = (zero,) * k + tuple(c.coeff_twist(k * e2) for c in self.coeffs)
        return BivarOrePoly(self.ring, shifted)

    # -- presentation ---------------------------------------------------------------

    def text(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            if i == 0:
                terms.append(c.text("x1"))
                continue
            xpow = "x2" if i == 1 else f"x2^{i}"
            if c.degree == 0 and c.coeffs[0] == 1:
                terms.append(xpow)
            else:
                ct = c.text("x1")
                terms.append(f"({ct})*{xpow}" if " + " in ct else f"{ct}*{xpow}")
        return " + ".join(terms)

    def __str__(self):
        return self.text()

    __repr__ = __str__
