"""Exact arithmetic in GF(p^h), plus extension towers over such fields.

Elements are plain integers: the base-p digits of an element are the
coefficients of its polynomial representative in the power basis, least
significant first, so GF(4) = {0, 1, 2, 3} with 2 <-> x.  That integer
encoding is also the wire format.  Multiplication and inversion go
through exp/log tables built for a fixed primitive element, which keeps
every operation exact and reproducible across runs.

``ExtensionField`` models GF(Q^m) as a degree-m extension of a base
GF(Q); its elements are coefficient tuples over the base, which is
exactly the coordinate form the column constructions need.
"""

from __future__ import annotations

from .errors import (
    FieldTooLarge,
    NonPrimeCharacteristic,
    NonSquareFieldOrder,
    ReducibleModulus,
)

MAX_FIELD_ORDER = 1 << 20

# Fixed moduli (little-endian, monic) for the small fields everything
# else is built on; other fields use the deterministic search below.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (3, 2): (1, 0, 1),        # x^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (5, 2): (1, 1, 1),        # x^2 + x + 1
    (7, 2): (3, 1, 1),        # x^2 + x + 3
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Write q = p^e with p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    ps = prime_factors(q)
    if len(ps) != 1:
        return None
    p = ps[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


class _PrimeArith:
    """Arithmetic of GF(p) used to bootstrap table construction."""

    def __init__(self, p: int):
        self.q = p

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def neg(self, a):
        return (-a) % self.q

    def mul(self, a, b):
        return (a * b) % self.q

    def inv(self, a):
        return pow(a, self.q - 2, self.q)


# -- polynomial helpers over an arbitrary coefficient field ------------------
# Polynomials are lists of coefficient values, little-endian, trimmed.


def _ptrim(cs):
    i = len(cs)
    while i > 0 and cs[i - 1] == 0:
        i -= 1
    return cs[:i]


def _pmul(K, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = K.add(out[i + j], K.mul(ai, bj))
    return _ptrim(out)


def _pmod(K, a, f):
    """a mod f, with f monic."""
    a = list(a)
    df = len(f) - 1
    while len(a) > df:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - df
            for j in range(df):
                if f[j]:
                    a[shift + j] = K.sub(a[shift + j], K.mul(lead, f[j]))
        a.pop()
    return _ptrim(a)


def _pmulmod(K, a, b, f):
    return _pmod(K, _pmul(K, a, b), f)


def _ppowmod(K, a, e, f):
    result = [1]
    base = _pmod(K, a, f)
    while e > 0:
        if e & 1:
            result = _pmulmod(K, result, base, f)
        base = _pmulmod(K, base, base, f)
        e >>= 1
    return result


def _pgcd(K, a, b):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        # reduce a mod b after making b monic
        lead_inv = K.inv(b[-1])
        b_monic = [K.mul(lead_inv, c) for c in b]
        a, b = b, _pmod(K, a, b_monic)
    return a


def _psub(K, a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = K.sub(ai, bi)
    return _ptrim(out)


def is_irreducible(K, f) -> bool:
    """Rabin's test for a monic polynomial f over the field K."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False  # divisible by x
    x = [0, 1]
    # frob[i] = x^(Q^i) mod f
    frob = [x]
    for _ in range(m):
        frob.append(_ppowmod(K, frob[-1], K.q, f))
    if _ptrim(_psub(K, frob[m], x)) != []:
        return False
    for d in prime_factors(m):
        g = _pgcd(K, _psub(K, frob[m // d], x), f)
        if len(g) - 1 != 0:
            return False
    return True


class FiniteField:
    """GF(p^h) with integer-encoded elements and exp/log tables."""

    def __init__(self, p: int, h: int, modulus=None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if h < 1:
            raise ReducibleModulus(f"extension degree {h} must be >= 1")
        q = p**h
        if q > MAX_FIELD_ORDER:
            raise FieldTooLarge(f"field order {q} exceeds {MAX_FIELD_ORDER}")
        self.p = p
        self.h = h
        self.q = q
        K = _PrimeArith(p)
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, h)) or _find_modulus(K, p, h)
        modulus = tuple(int(c) for c in modulus)
        if (
            len(modulus) != h + 1
            or modulus[-1] != 1
            or any(not 0 <= c < p for c in modulus)
            or not is_irreducible(K, list(modulus))
        ):
            raise ReducibleModulus(
                f"modulus {list(modulus)} is not monic irreducible of degree {h} over GF({p})"
            )
        self.modulus = modulus
        self._build_tables(K)
        self._conj_exp = p ** (h // 2) if h % 2 == 0 else None

    # -- construction ---------------------------------------------------

    def _int_to_poly(self, a: int) -> list[int]:
        cs = []
        for _ in range(self.h):
            cs.append(a % self.p)
            a //= self.p
        return _ptrim(cs)

    def _poly_to_int(self, cs) -> int:
        v = 0
        for c in reversed(list(cs)):
            v = v * self.p + c
        return v

    def _raw_mul(self, a: int, b: int) -> int:
        K = _PrimeArith(self.p)
        return self._poly_to_int(
            _pmulmod(K, self._int_to_poly(a), self._int_to_poly(b), list(self.modulus))
        )

    def _raw_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e > 0:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self, K) -> None:
        q = self.q
        if q == 2:
            alpha = 1
        else:
            factors = prime_factors(q - 1)
            alpha = None
            for g in range(2, q):
                if all(self._raw_pow(g, (q - 1) // f) != 1 for f in factors):
                    alpha = g
                    break
            if alpha is None:
                raise ReducibleModulus(
                    f"no primitive element found; modulus {list(self.modulus)} is reducible"
                )
        self.alpha = alpha
        exp = [0] * (q - 1)
        log = [0] * q
        seen = [False] * q
        val = 1
        for i in range(q - 1):
            if seen[val]:
                raise ReducibleModulus(
                    f"exp table collision; modulus {list(self.modulus)} is reducible"
                )
            seen[val] = True
            exp[i] = val
            log[val] = i
            val = self._raw_mul(val, alpha)
        if val != 1:
            raise ReducibleModulus("primitive element order check failed")
        self.exp = exp
        self.log = log
        # small-field addition table; larger fields fall back to digits
        if q <= 256:
            self._add_table = [
                [self._digit_add(a, b) for b in range(q)] for a in range(q)
            ]
            self._neg_table = [self._digit_neg(a) for a in range(q)]
        else:
            self._add_table = None
            self._neg_table = None

    def _digit_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        v, mult = 0, 1
        for _ in range(self.h):
            v += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return v

    def _digit_neg(self, a: int) -> int:
        if self.p == 2:
            return a
        v, mult = 0, 1
        for _ in range(self.h):
            v += ((-a) % self.p) * mult
            a //= self.p
            mult *= self.p
        return v

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._neg_table is not None:
            return self._neg_table[a]
        return self._digit_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def conj(self, a: int) -> int:
        """Frobenius conjugate a -> a^q0 on GF(q0^2); an involution."""
        if self._conj_exp is None:
            raise NonSquareFieldOrder(
                f"GF({self.q}) has odd extension degree; no conjugation"
            )
        return self.pow(a, self._conj_exp)

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Power-basis coefficients of a, least significant first."""
        out = []
        for _ in range(self.h):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.h, self.modulus) == (other.p, other.h, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.h, self.modulus))


def _find_modulus(K, p: int, h: int) -> tuple[int, ...]:
    """First monic irreducible of degree h, candidates ordered by the
    base-p integer encoding of their non-leading coefficients."""
    for code in range(p**h):
        cs = []
        c = code
        for _ in range(h):
            cs.append(c % p)
            c //= p
        cs.append(1)
        if is_irreducible(K, cs):
            return tuple(cs)
    raise ReducibleModulus(f"no irreducible polynomial of degree {h} over GF({p})")


def make_field(p: int, h: int, modulus=None) -> FiniteField:
    """Build GF(p^h); modulus defaults to the fixed table or the search."""
    return FiniteField(p, h, modulus)


def make_field_of_order(q: int) -> FiniteField:
    """GF(q) for a prime power q, with the default modulus."""
    pe = prime_power(q)
    if pe is None:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return FiniteField(*pe)


def frobenius_conjugate(field: FiniteField, x: int) -> int:
    """x -> x^q on GF(q^2)."""
    return field.conj(x)


def power_sum(field: FiniteField, t: int) -> int:
    """Sum of x^t over every x in the field, with 0^0 = 1."""
    if t < 0:
        raise ValueError("exponent must be nonnegative")
    s = 0
    for x in field.elements():
        s = field.add(s, field.pow(x, t))
    return s


class ExtensionField:
    """GF(Q^m) as a degree-m extension of a base GF(Q).

    Elements are length-m coefficient tuples over the base field, which
    doubles as their coordinate vector in the power basis.  Only the
    operations the column constructions need are provided.
    """

    def __init__(self, base: FiniteField, m: int, modulus=None):
        if m < 1:
            raise ReducibleModulus(f"extension degree {m} must be >= 1")
        order = base.q**m
        if order > MAX_FIELD_ORDER:
            raise FieldTooLarge(f"extension order {order} exceeds {MAX_FIELD_ORDER}")
        self.base = base
        self.m = m
        self.order = order
        if modulus is None:
            modulus = self._find_modulus()
        modulus = tuple(int(c) for c in modulus)
        if (
            len(modulus) != m + 1
            or modulus[-1] != 1
            or not is_irreducible(base, list(modulus))
        ):
            raise ReducibleModulus(
                f"{list(modulus)} is not monic irreducible of degree {m} over GF({base.q})"
            )
        self.modulus = modulus
        # y^m = -(f_0 + f_1 y + ... + f_{m-1} y^{m-1})
        self._red = tuple(base.neg(c) for c in modulus[:m])
        self._primitive = None

    def _find_modulus(self) -> tuple[int, ...]:
        base, m = self.base, self.m
        for code in range(base.q**m):
            cs = []
            c = code
            for _ in range(m):
                cs.append(c % base.q)
                c //= base.q
            cs.append(1)
            if is_irreducible(base, cs):
                return tuple(cs)
        raise ReducibleModulus(
            f"no irreducible polynomial of degree {m} over GF({base.q})"
        )

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.m

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.m - 1)

    def int_to_elt(self, code: int) -> tuple[int, ...]:
        cs = []
        for _ in range(self.m):
            cs.append(code % self.base.q)
            code //= self.base.q
        return tuple(cs)

    def elt_to_int(self, elt) -> int:
        v = 0
        for c in reversed(elt):
            v = v * self.base.q + c
        return v

    def add(self, a, b):
        K = self.base
        return tuple(K.add(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        K, m = self.base, self.m
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = K.add(prod[i + j], K.mul(ai, bj))
        for d in range(2 * m - 2, m - 1, -1):
            coef = prod[d]
            if coef:
                prod[d] = 0
                for j, rj in enumerate(self._red):
                    if rj:
                        prod[d - m + j] = K.add(prod[d - m + j], K.mul(coef, rj))
        return tuple(prod[:m])

    def pow(self, a, e: int):
        result, base = self.one(), a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def primitive_element(self) -> tuple[int, ...]:
        """First element (by integer encoding) of full multiplicative order."""
        if self._primitive is not None:
            return self._primitive
        factors = prime_factors(self.order - 1)
        one = self.one()
        for code in range(2, self.order):
            elt = self.int_to_elt(code)
            if all(self.pow(elt, (self.order - 1) // f) != one for f in factors):
                self._primitive = elt
                return elt
        raise ReducibleModulus("no primitive element; modulus is reducible")
