"""Exact arithmetic tower: rationals, sparse multivariate Laurent polynomials,
cyclotomic number fields, and the pluggable scalar domains built on them.

Everything here is immutable after construction and exact (big rationals
underneath, no floats anywhere).
"""

from __future__ import annotations

import hashlib
import math
from fractions import Fraction
from functools import reduce


class DomainError(Exception):
    """Evaluation or coercion outside the domain (e.g. inverting zero)."""


class NotInvertibleError(DomainError):
    """Element has no inverse in its domain."""


class UnsupportedDomainError(DomainError):
    """Operation not available over this scalar domain."""


# ---------------------------------------------------------------------------
# univariate polynomial helpers over Fraction (dense, ascending coefficients)
# ---------------------------------------------------------------------------

def _poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_add(p, q):
    n = max(len(p), len(q))
    return _poly_trim([
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
        for i in range(n)
    ])


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod(p, q):
    """Exact division with remainder; q must be nonzero."""
    p = [Fraction(c) for c in p]
    q = _poly_trim([Fraction(c) for c in q])
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(_poly_trim(p)) >= len(q):
        p = _poly_trim(p)
        shift = len(p) - len(q)
        factor = p[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(q):
            p[shift + i] -= factor * c
    return _poly_trim(quot), _poly_trim(p)


def euler_phi(n):
    count = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            count += 1
    return count


_CYCLO_CACHE = {}


def cyclotomic_polynomial(order):
    """Coefficients (ascending, ints) of the cyclotomic polynomial of the
    given order, computed by exact division of x^order - 1 by the product of
    the cyclotomic polynomials of the proper divisors.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if order in _CYCLO_CACHE:
        return _CYCLO_CACHE[order]
    num = [Fraction(-1)] + [Fraction(0)] * (order - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, order):
        if order % d == 0:
            den = _poly_mul(den, [Fraction(c) for c in cyclotomic_polynomial(d)])
    quot, rem = _poly_divmod(num, den)
    assert not rem, "cyclotomic division must be exact"
    coeffs = tuple(int(c) for c in quot)
    assert len(coeffs) == euler_phi(order) + 1
    _CYCLO_CACHE[order] = coeffs
    return coeffs


# ---------------------------------------------------------------------------
# sparse multivariate Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial in ``nvars`` commuting variables with
    Fraction coefficients.

    Terms map exponent tuples (ints, possibly negative) to nonzero
    coefficients; the term map is the canonical form, so equality is map
    equality. By convention slot 0 is the Hecke parameter q and slots 1..r
    the cyclotomic parameters Q_1..Q_r, but nothing below depends on that
    reading (the character map reuses the same class with variables
    x_1..x_n).
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has wrong length")
                coeff = Fraction(coeff)
                if coeff:
                    key = tuple(exps)
                    acc = clean.get(key, Fraction(0)) + coeff
                    if acc:
                        clean[key] = acc
                    else:
                        clean.pop(key, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, coeff, nvars):
        return cls(nvars, {(0,) * nvars: Fraction(coeff)})

    @classmethod
    def monomial(cls, coeff, exps):
        return cls(len(exps), {tuple(exps): Fraction(coeff)})

    @classmethod
    def variable(cls, slot, nvars, power=1):
        exps = [0] * nvars
        exps[slot] = power
        return cls.monomial(1, exps)

    @property
    def num_Q_vars(self):
        """Number of Q variables under the (q, Q_1..Q_r) reading."""
        return self.nvars - 1

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e, Fraction(0)) + c
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        out = LaurentPoly(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(e, Fraction(0)) + c1 * c2
                if acc:
                    terms[e] = acc
                else:
                    terms.pop(e, None)
        out = LaurentPoly(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def inverse(self):
        """Inverse of a single-term (monomial) Laurent polynomial."""
        if len(self.terms) != 1:
            raise NotInvertibleError("only monomials are invertible")
        ((e, c),) = self.terms.items()
        return LaurentPoly.monomial(Fraction(1) / c, tuple(-x for x in e))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms in total-degree then lexicographic order (the canonical
        iteration order used for printing)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def render(self, names=None):
        if names is None:
            names = ["q"] + [f"Q{i}" for i in range(1, self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            vars_part = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps) if e != 0
            )
            mag = abs(coeff)
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return self.render()

    def evaluate(self, values, domain):
        """Image under the ring homomorphism sending variable i to
        values[i]; negative exponents use domain inverses."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = domain.zero
        for exps, coeff in self.terms.items():
            term = domain.from_fraction(coeff)
            for v, e in zip(values, exps):
                if e == 0:
                    continue
                base = v if e > 0 else domain.inv(v)
                for _ in range(abs(e)):
                    term = term * base
            total = total + term
        return total

    def swap_variables(self, i, j):
        terms = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            e[i], e[j] = e[j], e[i]
            terms[tuple(e)] = coeff
        out = LaurentPoly(self.nvars)
        out.terms = terms
        return out

    def is_symmetric(self):
        """True if invariant under all adjacent variable swaps."""
        return all(
            self.swap_variables(i, i + 1) == self
            for i in range(self.nvars - 1)
        )


def specialize(poly, q_val, Q_vals, domain):
    """Image of ``poly`` under q -> q_val, Q_i -> Q_vals[i] inside ``domain``.

    This is the evaluation ring homomorphism; negative powers require the
    value to be invertible in the target domain.
    """
    return poly.evaluate([q_val] + list(Q_vals), domain)


def q_poly(num_Q):
    return LaurentPoly.variable(0, 1 + num_Q)


def Q_poly(k, num_Q):
    """The variable Q_k (1-based k)."""
    if not 1 <= k <= num_Q:
        raise ValueError("Q index out of range")
    return LaurentPoly.variable(k, 1 + num_Q)


def elementary_symmetric(k, values, one):
    """e_k of a list of ring elements, by the iterative one-row recurrence."""
    if k < 0 or k > len(values):
        raise ValueError("elementary symmetric degree out of range")
    row = [one] + [None] * k
    for v in values:
        for j in range(min(k, len(row) - 1), 0, -1):
            if row[j] is None:
                if row[j - 1] is not None:
                    row[j] = row[j - 1] * v
            else:
                row[j] = row[j] + row[j - 1] * v
    if row[k] is None:
        raise ValueError("not enough values")
    return row[k]


def elementary_symmetric_poly(k, n):
    """e_k(x_1..x_n) as a LaurentPoly in n variables."""
    one = LaurentPoly.const(1, n)
    xs = [LaurentPoly.variable(i, n) for i in range(n)]
    if k == 0:
        return one
    return elementary_symmetric(k, xs, one)


# ---------------------------------------------------------------------------
# cyclotomic numbers
# ---------------------------------------------------------------------------

class CyclotomicNumber:
    """Element of the cyclotomic field of the given order, stored as the
    reduced residue mod the cyclotomic polynomial (coefficient vector of
    length phi(order))."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        phi = euler_phi(order)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > phi:
            modulus = [Fraction(c) for c in cyclotomic_polynomial(order)]
            _, coeffs = _poly_divmod(coeffs, modulus)
        coeffs = list(coeffs) + [Fraction(0)] * (phi - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_fraction(cls, order, value):
        return cls(order, [Fraction(value)])

    @classmethod
    def zeta(cls, order, power=1):
        """The root of unity zeta_order ** power."""
        power %= order
        coeffs = [Fraction(0)] * power + [Fraction(1)]
        return cls(order, coeffs)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError("cyclotomic order mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_fraction(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prod = _poly_mul(list(self.coeffs), list(other.coeffs))
        return CyclotomicNumber(self.order, prod)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse mod the cyclotomic polynomial via the extended Euclidean
        algorithm (the modulus is irreducible, so any nonzero residue is a
        unit)."""
        if self.is_zero():
            raise NotInvertibleError("zero has no inverse")
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        # extended euclid on (self, modulus)
        r0, r1 = _poly_trim(list(self.coeffs)), modulus
        s0, s1 = [Fraction(1)], []
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_add(s0, [-c for c in _poly_mul(q, s1)])
        assert len(r0) == 1, "gcd with irreducible modulus must be a unit"
        inv_scale = Fraction(1) / r0[0]
        return CyclotomicNumber(self.order, [c * inv_scale for c in s0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.from_fraction(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise DomainError("not a rational cyclotomic number")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_fraction(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def render(self):
        name = f"zeta_{self.order}"
        poly = LaurentPoly(1, {(i,): c for i, c in enumerate(self.coeffs) if c})
        return poly.render([name])

    def __repr__(self):
        return self.render()


# ---------------------------------------------------------------------------
# fractions of Laurent polynomials
# ---------------------------------------------------------------------------

def _content(poly):
    """(rational content, monomial content) of a nonzero LaurentPoly."""
    nums = [c.numerator for c in poly.terms.values()]
    dens = [c.denominator for c in poly.terms.values()]
    rat = Fraction(reduce(math.gcd, nums), reduce(math.lcm, dens))
    mins = [min(e[i] for e in poly.terms) for i in range(poly.nvars)]
    return rat, tuple(mins)


class PolyFraction:
    """Quotient of two Laurent polynomials with nonzero denominator.

    Reduced only by monomial and integer content (no multivariate gcd);
    equality is tested by cross-multiplication, so distinct stored
    representatives may be equal. Not hashable for that reason.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.const(1, num.nvars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.nvars != den.nvars:
            raise ValueError("variable count mismatch")
        if num.is_zero():
            den = LaurentPoly.const(1, num.nvars)
        else:
            nc, nm = _content(num)
            dc, dm = _content(den)
            scale_num = LaurentPoly.monomial(
                Fraction(1) / nc, tuple(-x for x in nm))
            scale_den = LaurentPoly.monomial(
                Fraction(1) / dc, tuple(-x for x in dm))
            num = num * scale_num
            den = den * scale_den
            ratio = nc / dc
            mono = tuple(a - b for a, b in zip(nm, dm))
            num = num * LaurentPoly.monomial(ratio, mono)
            # canonical sign: first canonical-order term of den positive
            lead = den.sorted_terms()[0][1]
            if lead < 0:
                num = -num
                den = -den
        self.num = num
        self.den = den

    @property
    def nvars(self):
        return self.num.nvars

    def _coerce(self, other):
        if isinstance(other, PolyFraction):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, LaurentPoly):
            return PolyFraction(other)
        if isinstance(other, (int, Fraction)):
            return PolyFraction(LaurentPoly.const(other, self.nvars))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PolyFraction(
            self.num * other.den + other.num * self.den,
            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(PolyFraction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PolyFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise NotInvertibleError("zero has no inverse")
        return PolyFraction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = PolyFraction(LaurentPoly.const(1, self.nvars))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def render(self, names=None):
        if self.den == LaurentPoly.const(1, self.nvars):
            return self.num.render(names)
        return f"({self.num.render(names)}) / ({self.den.render(names)})"

    def __repr__(self):
        return self.render()


# ---------------------------------------------------------------------------
# scalar domains
# ---------------------------------------------------------------------------

class ScalarDomain:
    """Tagged choice of exact coefficient field with its ring operations.

    Elements carry their own arithmetic through operator overloading; the
    domain supplies constants, coercions, inverses and serialization.
    """

    name = "abstract"

    def inv(self, x):
        raise NotImplementedError

    def is_zero(self, x):
        raise NotImplementedError

    def fingerprint(self):
        return hashlib.sha256(self.name.encode()).hexdigest()[:12]

    def serialize(self, x):
        raise NotImplementedError

    def deserialize(self, data):
        raise NotImplementedError

    def render(self, x):
        return str(x)


class RationalDomain(ScalarDomain):
    name = "rational"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def from_fraction(self, f):
        return Fraction(f)

    def inv(self, x):
        if x == 0:
            raise NotInvertibleError("zero has no inverse")
        return Fraction(1) / x

    def is_zero(self, x):
        return x == 0

    def serialize(self, x):
        return str(Fraction(x))

    def deserialize(self, data):
        return Fraction(data)


class CyclotomicDomain(ScalarDomain):
    def __init__(self, order):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.name = f"cyclotomic_{order}"
        self.zero = CyclotomicNumber.from_fraction(order, 0)
        self.one = CyclotomicNumber.from_fraction(order, 1)

    def zeta(self, power=1):
        return CyclotomicNumber.zeta(self.order, power)

    def from_int(self, k):
        return CyclotomicNumber.from_fraction(self.order, k)

    def from_fraction(self, f):
        return CyclotomicNumber.from_fraction(self.order, f)

    def inv(self, x):
        return self._as_element(x).inverse()

    def _as_element(self, x):
        if isinstance(x, CyclotomicNumber):
            return x
        return self.from_fraction(x)

    def is_zero(self, x):
        return self._as_element(x).is_zero()

    def serialize(self, x):
        return [str(c) for c in self._as_element(x).coeffs]

    def deserialize(self, data):
        return CyclotomicNumber(self.order, [Fraction(c) for c in data])

    def render(self, x):
        return self._as_element(x).render()


class LaurentFractionDomain(ScalarDomain):
    """Field of fractions of Laurent polynomials in q, Q_1..Q_r."""

    def __init__(self, num_Q):
        self.num_Q = num_Q
        self.nvars = 1 + num_Q
        self.name = f"laurent_fraction_{num_Q}"
        self.zero = PolyFraction(LaurentPoly.const(0, self.nvars))
        self.one = PolyFraction(LaurentPoly.const(1, self.nvars))

    def q(self):
        return PolyFraction(q_poly(self.num_Q))

    def Q(self, k):
        return PolyFraction(Q_poly(k, self.num_Q))

    def from_int(self, k):
        return PolyFraction(LaurentPoly.const(k, self.nvars))

    def from_fraction(self, f):
        return PolyFraction(LaurentPoly.const(f, self.nvars))

    def from_poly(self, p):
        return PolyFraction(p)

    def inv(self, x):
        return self._as_element(x).inverse()

    def _as_element(self, x):
        if isinstance(x, PolyFraction):
            return x
        if isinstance(x, LaurentPoly):
            return PolyFraction(x)
        return self.from_fraction(x)

    def is_zero(self, x):
        return self._as_element(x).is_zero()

    def serialize(self, x):
        x = self._as_element(x)
        return {
            "num": [[list(e), str(c)] for e, c in x.num.sorted_terms()],
            "den": [[list(e), str(c)] for e, c in x.den.sorted_terms()],
        }

    def deserialize(self, data):
        num = LaurentPoly(self.nvars, {
            tuple(e): Fraction(c) for e, c in data["num"]})
        den = LaurentPoly(self.nvars, {
            tuple(e): Fraction(c) for e, c in data["den"]})
        return PolyFraction(num, den)

    def render(self, x):
        return self._as_element(x).render()
