"""Prime-power finite fields GF(p^k).

Elements are encoded as integers ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``
where ``sum c_i a^i`` is the element and ``a`` is a root of the field's
canonical modulus.  For prime fields the code is simply the residue.

Multiplication uses exp/log tables when the field is small enough, and
schoolbook polynomial multiplication otherwise.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd

from ..config import max_field_size
from ..errors import BoundExceeded, FieldMismatch, NotPrime

TABLE_LIMIT = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- raw polynomial helpers over the prime field (lists of ints, ascending) --

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible_prime_field(poly: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    n = len(poly) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    xq = _ppowmod(x, p**n, poly, p)
    diff = _trim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)])
    if diff:
        return False
    for r in prime_factors(n):
        xr = _ppowmod(x, p ** (n // r), poly, p)
        diff = _trim([(a - b) % p for a, b in itertools.zip_longest(xr, x, fillvalue=0)])
        g = _pgcd(poly, diff, p)
        if len(g) > 1:
            return False
    return True


def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k, ordering ascending coefficient tuples."""
    if k == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=k):
        # product() is lexicographic with the constant term leading
        cand = list(low) + [1]
        if cand[0] == 0:
            continue
        if is_irreducible_prime_field(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The finite field GF(p^k) with its canonical modulus."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = canonical_modulus(p, k)
        self._mod_list = list(self.modulus)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._prim: int | None = None

    # -- identity --
    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("GF", self.p, self.k))

    def __reduce__(self):
        return (field_make, (self.p, self.k))

    # -- element construction --
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self}")
            return value
        return FieldElement(self, int(value) % self.p)

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self}")
        return FieldElement(self, code)

    def from_coeffs(self, coeffs) -> "FieldElement":
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + int(c) % self.p
        return self.from_code(code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        for c in range(self.q):
            yield FieldElement(self, c)

    def digits(self, code: int) -> list[int]:
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return out

    def _undigits(self, digits) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    # -- code-level arithmetic --
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out, place = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * place
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _pmul(self.digits(a), self.digits(b), self.p)
        return self._undigits(_pmod(prod, self._mod_list, self.p))

    def _ensure_tables(self) -> bool:
        if self._exp is not None:
            return True
        if self.k == 1 or self.q > TABLE_LIMIT:
            return False
        g = self.primitive_code()
        exp = [0] * (2 * (self.q - 1))
        log = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        for i in range(self.q - 1, 2 * (self.q - 1)):
            exp[i] = exp[i - (self.q - 1)]
        self._exp, self._log = exp, log
        return True

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        if self._exp is not None or self._ensure_tables():
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None or self._ensure_tables():
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None or self._ensure_tables():
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def from_int(self, n: int) -> int:
        return n % self.p

    # -- structure --
    def primitive_code(self) -> int:
        if self._prim is None:
            factors = prime_factors(self.q - 1)
            for c in range(1, self.q):
                if all(self._pow_slow(c, (self.q - 1) // r) != 1 for r in factors):
                    self._prim = c
                    break
            else:  # pragma: no cover
                raise AssertionError("no primitive element")
        return self._prim

    def _pow_slow(self, a: int, e: int) -> int:
        if self.k == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a: int) -> int | None:
        """A square root of ``a`` (the one with the smaller code), or None."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if not self.is_square(a):
            return None
        q = self.q
        # Tonelli-Shanks
        s, t = 0, q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = next(c for c in range(2, q) if not self.is_square(c))
        m, c, r, u = s, self.pow(z, t), self.pow(a, (t + 1) // 2), self.pow(a, t)
        while u != 1:
            i, tt = 0, u
            while tt != 1:
                tt = self.mul(tt, tt)
                i += 1
            b = self.pow(c, 1 << (m - i - 1))
            m, c = i, self.mul(b, b)
            r, u = self.mul(r, b), self.mul(u, c)
        return min(r, self.neg(r))

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)


class FieldElement:
    """An element of a :class:`FieldSpec`; immutable and hashable."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = code

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    @property
    def coeffs(self) -> list[int]:
        return self.field.digits(self.code)

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.code))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(b, self.field.inv(self.code)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def sqrt(self) -> "FieldElement | None":
        r = self.field.sqrt(self.code)
        return None if r is None else FieldElement(self.field, r)

    def is_square(self) -> bool:
        return self.field.is_square(self.code)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"{self.field}({self.code})"


@lru_cache(maxsize=None)
def _field_cached(p: int, k: int) -> FieldSpec:
    return FieldSpec(p, k)


def field_make(p: int, k: int = 1, max_q: int | None = None) -> FieldSpec:
    """Return GF(p^k) with its canonical modulus.

    Raises NotPrime if p is not prime and BoundExceeded if p^k is larger than
    ``max_q`` (default: :func:`equicurve.config.max_field_size`).
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    bound = max_field_size() if max_q is None else max_q
    if p**k > bound:
        raise BoundExceeded(f"{p}^{k} exceeds the field-size bound {bound}")
    return _field_cached(p, k)


def embedding(small: FieldSpec, big: FieldSpec):
    """Field embedding GF(p^k) -> GF(p^K) for k | K, as a code -> code map.

    The generator of ``small`` is sent to the root of its modulus in ``big``
    with the least code, so the embedding is deterministic.
    """
    if small.p != big.p or big.k % small.k:
        raise FieldMismatch(f"{small} does not embed in {big}")
    if small.k == 1:
        return lambda code: code
    mod = small.modulus
    root = None
    for c in range(big.q):
        acc = 0
        for coef in reversed(mod):
            acc = big.add(big.mul(acc, c), coef)
        if acc == 0:
            root = c
            break
    assert root is not None
    powers = [1]
    for _ in range(small.k - 1):
        powers.append(big.mul(powers[-1], root))

    cache: dict[int, int] = {}

    def embed(code: int) -> int:
        if code not in cache:
            acc = 0
            for d, pw in zip(small.digits(code), powers):
                if d:
                    acc = big.add(acc, big.mul(d, pw))
            cache[code] = acc
        return cache[code]

    return embed


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
