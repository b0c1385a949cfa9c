"""The univariate Ore polynomial ring A[x;sigma] over a finite field.

Elements are dense coefficient sequences (packed field values, index i =
coefficient of x^i) normalized so the highest-index coefficient is nonzero;
the zero polynomial is the empty sequence with degree -inf.  Multiplication
follows the commutation rule x*a = sigma(a)*x, so

    (a_i x^i) * (b_j x^j) = a_i * sigma^i(b_j) * x^(i+j),

and deg(f*g) = deg(f) + deg(g) because the coefficient field has no zero
divisors.  With sigma the identity this is ordinary commutative polynomial
arithmetic.

The same type doubles as the ring of formal sigma-polynomials (operator
composition as multiplication) under the renaming x <-> sigma; `opeval`
builds on that reading.  Divisibility conventions are right-sided: quotients
multiply the divisor from the left, matching row operations that act by left
multiplication.
"""

from __future__ import annotations

from .errors import BothZero, DivisionByZero, RingMismatch, ZeroPolynomial
from .field import NEG_INF, Automorphism, FieldCtx, FieldElem


class OreRing:
    """The ring A[x;sigma]: a field context plus one automorphism."""

    __slots__ = ("ctx", "sigma")

    def __init__(self, ctx, sigma):
        if not isinstance(ctx, FieldCtx):
            raise RingMismatch("ctx must be a FieldCtx")
        if not isinstance(sigma, Automorphism) or sigma.ctx != ctx:
            raise RingMismatch("sigma must be an automorphism of ctx")
        self.ctx = ctx
        self.sigma = sigma

    def __eq__(self, other):
        return (
            isinstance(other, OreRing)
            and self.ctx == other.ctx
            and self.sigma == other.sigma
        )

    def __hash__(self):
        return hash((self.ctx, self.sigma))

    def __repr__(self):
        return f"{self.ctx!r}[x; {self.sigma!r}]"

    # -- constructors ---------------------------------------------------------

    def zero(self):
        return OrePoly(self, ())

    def one(self):
        return OrePoly(self, (1,))

    def x(self, k=1):
        return OrePoly(self, (0,) * k + (1,))

    def constant(self, value):
        """Constant polynomial from a FieldElem or a prime-subfield int."""
        return self.poly([value])

    def poly(self, coeffs):
        """Polynomial from a low-to-high coefficient sequence of FieldElem or
        prime-subfield ints."""
        packed = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.ctx != self.ctx:
                    raise RingMismatch("coefficient from another field")
                packed.append(c.val)
            elif isinstance(c, int):
                packed.append(c % self.ctx.p)
            else:
                raise RingMismatch(f"cannot use {type(c).__name__} as coefficient")
        return OrePoly(self, _normalize(packed))

    def from_packed(self, packed):
        """Polynomial directly from packed coefficient values (trusted input)."""
        return OrePoly(self, _normalize(list(packed)))


def _normalize(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class OrePoly:
    """A skew polynomial; immutable value type."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs  # normalized tuple of packed values

    # -- structure -------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return FieldElem(self.ring.ctx, self.coeffs[i])
        return self.ring.ctx.zero

    @property
    def lead_coeff(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FieldElem(self.ring.ctx, self.coeffs[-1])

    def __eq__(self, other):
        if isinstance(other, OrePoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, OrePoly):
            if other.ring != self.ring:
                raise RingMismatch(
                    f"polynomials of {self.ring!r} and {other.ring!r} cannot mix"
                )
            return other
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
        add = self.ring.ctx.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return OrePoly(self.ring, _normalize(out))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.ctx.neg
        return OrePoly(self.ring, tuple(neg(c) for c in self.coeffs))

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
            return OrePoly(self.ring, ())
        ctx = self.ring.ctx
        e = self.ring.sigma.e
        add, mul, frob = ctx.add, ctx.mul, ctx.frob
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            if e and i:
                tb = [frob(bj, i * e) for bj in b]
            else:
                tb = b
            for j, bj in enumerate(tb):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
        return OrePoly(self.ring, _normalize(out))

    def __rmul__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g * self

    def __pow__(self, k):
        if k < 0:
            raise DivisionByZero("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- Euclidean structure ------------------------------------------------------

    def right_divmod(self, b):
        """q, r with self = q*b + r and deg r < deg b (quotient on the left)."""
        b = self._coerce(b)
        if b is None or not isinstance(b, OrePoly):
            raise RingMismatch("divisor must live in the same ring")
        if b.is_zero:
            raise DivisionByZero("right division by the zero polynomial")
        ctx = self.ring.ctx
        e = self.ring.sigma.e
        sub, mul, frob, inv = ctx.sub, ctx.mul, ctx.frob, ctx.inv
        bc = b.coeffs
        db = len(bc) - 1
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return OrePoly(self.ring, ()), self
        q = [0] * (len(r) - db)
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            qk = mul(r[-1], inv(frob(bc[-1], k * e)))
            q[k] = qk
            for j in range(db + 1):
                r[k + j] = sub(r[k + j], mul(qk, frob(bc[j], k * e)))
            while r and r[-1] == 0:
                r.pop()
        return OrePoly(self.ring, _normalize(q)), OrePoly(self.ring, tuple(r))

    def left_divmod(self, b):
        """q, r with self = b*q + r and deg r < deg b."""
        b = self._coerce(b)
        if b is None or not isinstance(b, OrePoly):
            raise RingMismatch("divisor must live in the same ring")
        if b.is_zero:
            raise DivisionByZero("left division by the zero polynomial")
        ctx = self.ring.ctx
        e = self.ring.sigma.e
        sub, mul, frob, inv = ctx.sub, ctx.mul, ctx.frob, ctx.inv
        bc = b.coeffs
        db = len(bc) - 1
        blead_inv = inv(bc[-1])
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return OrePoly(self.ring, ()), self
        q = [0] * (len(r) - db)
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            qk = frob(mul(blead_inv, r[-1]), -db * e)
            q[k] = qk
            for j in range(db + 1):
                r[j + k] = sub(r[j + k], mul(bc[j], frob(qk, j * e)))
            while r and r[-1] == 0:
                r.pop()
        return OrePoly(self.ring, _normalize(q)), OrePoly(self.ring, tuple(r))

    def monic(self):
        """lc(f)^-1 * f: left-multiplication by the inverse leading coefficient."""
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        ctx = self.ring.ctx
        c = ctx.inv(lc)
        return OrePoly(self.ring, tuple(ctx.mul(c, a) for a in self.coeffs))

    def coeff_twist(self, e):
        """Apply the e-th Frobenius to every coefficient (degree-preserving)."""
        if e % self.ring.ctx.m == 0 or self.is_zero:
            return self
        frob = self.ring.ctx.frob
        return OrePoly(self.ring, tuple(frob(c, e) for c in self.coeffs))

    # -- presentation -----------------------------------------------------------

    def text(self, var="x"):
        if self.is_zero:
            return "0"
        ctx = self.ring.ctx
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            ce = FieldElem(ctx, c)
            cs = str(ce)
            if i == 0:
                terms.append(cs)
                continue
            xpow = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(xpow)
            elif "+" in cs:
                terms.append(f"({cs})*{xpow}")
            else:
                terms.append(f"{cs}*{xpow}")
        return " + ".join(terms)

    def __str__(self):
        return self.text()

    __repr__ = __str__


def gcrd(f, g):
    """Monic greatest common right divisor via the right-Euclidean algorithm."""
    if not isinstance(f, OrePoly) or not isinstance(g, OrePoly):
        raise RingMismatch("gcrd expects two Ore polynomials")
    if f.ring != g.ring:
        raise RingMismatch("gcrd of polynomials from different rings")
    if f.is_zero and g.is_zero:
        raise BothZero("gcrd(0, 0) is undefined")
    while not g.is_zero:
        f, g = g, f.right_divmod(g)[1]
    return f.monic()
