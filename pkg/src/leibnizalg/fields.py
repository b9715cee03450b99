"""Exact ground-field arithmetic: the rationals and small finite fields.

Scalars are plain Python values.  Over the rationals a scalar is a
`fractions.Fraction`, which is always reduced with positive denominator.
Over a finite field with q = p**k elements a scalar is an int in
``range(q)`` encoding the coefficient vector of the element in base p,
least significant digit first; for a prime field (k = 1) this is just the
residue.  Field objects supply the operations, so every higher layer stays
field-agnostic and exact.

Extension fields with q below a small threshold precompute full q x q
multiplication/addition tables, which keeps the enumeration-heavy callers
fast without any compiled dependency.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import ClassVar

from .errors import BadSpec, FieldParseError, InfiniteFieldUnsupported

_TABLE_LIMIT = 512  # build q x q lookup tables when q is at most this


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# GF(p)[x] helpers on plain int tuples (ascending coefficients, trimmed).
# Only what extension-field construction needs; general polynomials over any
# field live in poly.py.

def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _gfp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _gfp_mod(a, m, p):
    # m must be monic
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1] % p
        if lead:
            shift = len(r) - 1 - dm
            for i, mi in enumerate(m):
                r[shift + i] = (r[shift + i] - lead * mi) % p
        while r and r[-1] % p == 0:
            r.pop()
    return _trim(x % p for x in r)


def _gfp_monic_polys(p, degree):
    for tail in itertools.product(range(p), repeat=degree):
        yield tail + (1,)


def _gfp_irreducible(m, p):
    """Trial division by monic polynomials of degree up to deg(m)//2."""
    dm = len(m) - 1
    if dm < 1:
        return False
    for d in range(1, dm // 2 + 1):
        for g in _gfp_monic_polys(p, d):
            if not _gfp_mod(m, g, p):
                return False
    return True


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rationals:
    """The field of rational numbers; scalars are `fractions.Fraction`."""

    kind: ClassVar[str] = "rationals"
    char: ClassVar[int] = 0
    is_finite: ClassVar[bool] = False
    size: ClassVar[None] = None

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a):
        return a == 0

    def from_int(self, m: int):
        return Fraction(m)

    def elements(self):
        raise InfiniteFieldUnsupported("the rationals are not enumerable")

    def random_scalar(self, rng):
        return Fraction(rng.randint(-6, 6), rng.randint(1, 6))

    def parse_scalar(self, obj):
        if isinstance(obj, bool):
            raise FieldParseError(f"not a rational literal: {obj!r}")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            try:
                return Fraction(obj)
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldParseError(f"bad rational literal {obj!r}: {exc}") from None
        raise FieldParseError(f"not a rational literal: {obj!r}")

    def serialize_scalar(self, a):
        return str(a)

    def __str__(self):
        return "Q"


def _check_finite_scalar(obj, p, k):
    """Normalize a parsed finite-field literal to digit tuple form."""
    if isinstance(obj, bool):
        raise FieldParseError(f"not a field element literal: {obj!r}")
    if isinstance(obj, int):
        return (obj % p,) + (0,) * (k - 1)
    if isinstance(obj, list) and all(isinstance(d, int) and not isinstance(d, bool) for d in obj):
        if len(obj) > k:
            raise FieldParseError(f"coefficient array longer than field degree {k}: {obj!r}")
        digits = [d % p for d in obj]
        digits += [0] * (k - len(digits))
        return tuple(digits)
    raise FieldParseError(f"not a field element literal: {obj!r}")


@dataclass(frozen=True)
class PrimeField:
    """GF(p); scalars are ints in range(p)."""

    p: int
    kind: ClassVar[str] = "prime_field"

    def __post_init__(self):
        if not is_prime(self.p):
            raise BadSpec(f"{self.p} is not prime")

    @property
    def char(self):
        return self.p

    @property
    def size(self):
        return self.p

    @property
    def is_finite(self):
        return True

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def from_int(self, m: int):
        return m % self.p

    def elements(self):
        return range(self.p)

    def random_scalar(self, rng):
        return rng.randrange(self.p)

    def parse_scalar(self, obj):
        return _check_finite_scalar(obj, self.p, 1)[0]

    def serialize_scalar(self, a):
        return [a]

    def __str__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class ExtensionField:
    """GF(p**k) as GF(p)[x] modulo a monic irreducible of degree k.

    Scalars are ints in range(p**k): the base-p digits of the int are the
    coefficient vector of the element, least significant digit first.
    """

    p: int
    k: int
    modulus: tuple  # ascending coefficients, length k+1, monic

    def __post_init__(self):
        if not is_prime(self.p):
            raise BadSpec(f"{self.p} is not prime")
        if self.k < 1:
            raise BadSpec("extension degree must be at least 1")
        mod = tuple(int(c) % self.p for c in self.modulus)
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise BadSpec("modulus must be monic of degree k")
        if not _gfp_irreducible(mod, self.p):
            raise BadSpec(f"modulus {mod} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", mod)
        q = self.p ** self.k
        object.__setattr__(self, "_q", q)
        if q <= _TABLE_LIMIT:
            mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
            add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
            inv = [0] * q
            for a in range(1, q):
                row = mul[a]
                inv[a] = row.index(1)
            object.__setattr__(self, "_mul_tab", mul)
            object.__setattr__(self, "_add_tab", add)
            object.__setattr__(self, "_inv_tab", inv)
        else:
            object.__setattr__(self, "_mul_tab", None)
            object.__setattr__(self, "_add_tab", None)
            object.__setattr__(self, "_inv_tab", None)

    # digit codecs -----------------------------------------------------
    def _decode(self, a):
        digits = []
        for _ in range(self.k):
            a, d = divmod(a, self.p)
            digits.append(d)
        return digits

    def _encode(self, digits):
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def _add_slow(self, a, b):
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def _mul_slow(self, a, b):
        prod = _gfp_mul(_trim(self._decode(a)), _trim(self._decode(b)), self.p)
        rem = _gfp_mod(prod, self.modulus, self.p)
        digits = list(rem) + [0] * (self.k - len(rem))
        return self._encode(digits)

    # field API ----------------------------------------------------------
    @property
    def char(self):
        return self.p

    @property
    def size(self):
        return self._q

    @property
    def is_finite(self):
        return True

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        if self._add_tab is not None:
            return self._add_tab[a][b]
        return self._add_slow(a, b)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul_tab is not None:
            return self._mul_tab[a][b]
        return self._mul_slow(a, b)

    def neg(self, a):
        return self._encode([(-d) % self.p for d in self._decode(a)])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._inv_tab is not None:
            return self._inv_tab[a]
        # a**(q-2) by square and multiply
        result, base, e = 1, a, self._q - 2
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return result

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def from_int(self, m: int):
        return m % self.p

    def elements(self):
        return range(self._q)

    def random_scalar(self, rng):
        return rng.randrange(self._q)

    def parse_scalar(self, obj):
        return self._encode(list(_check_finite_scalar(obj, self.p, self.k)))

    def serialize_scalar(self, a):
        return self._decode(a)

    def __str__(self):
        return f"GF({self._q})"


QQ = Rationals()


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int):
    """Smallest monic irreducible of degree k over GF(p), ascending-lex."""
    for tail in itertools.product(range(p), repeat=k):
        cand = tail + (1,)
        if _gfp_irreducible(cand, p):
            return cand
    raise BadSpec(f"no irreducible of degree {k} over GF({p})")  # pragma: no cover


@lru_cache(maxsize=None)
def gf(q: int):
    """The finite field with q elements (default modulus when q = p**k, k > 1)."""
    if q < 2:
        raise BadSpec(f"no field with {q} elements")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise BadSpec(f"{q} is not a prime power")
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, k, default_modulus(p, k))


def field_to_doc(field) -> dict:
    if isinstance(field, Rationals):
        return {"kind": "rationals"}
    if isinstance(field, PrimeField):
        return {"kind": "prime_field", "p": field.p}
    if isinstance(field, ExtensionField):
        return {"kind": "extension_field", "p": field.p, "k": field.k,
                "modulus": list(field.modulus)}
    raise BadSpec(f"not a field: {field!r}")


def field_from_doc(doc) -> object:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise FieldParseError(f"bad field descriptor: {doc!r}")
    kind = doc["kind"]
    try:
        if kind == "rationals":
            return QQ
        if kind == "prime_field":
            return PrimeField(int(doc["p"]))
        if kind == "extension_field":
            return ExtensionField(int(doc["p"]), int(doc["k"]),
                                  tuple(int(c) for c in doc["modulus"]))
    except (KeyError, TypeError, ValueError, BadSpec) as exc:
        raise FieldParseError(f"bad field descriptor {doc!r}: {exc}") from None
    raise FieldParseError(f"unknown field kind {kind!r}")


def parse_field_name(name: str):
    """Parse CLI field names: 'q', 'rationals', 'gf4', 'gf(3,2)'."""
    s = name.strip().lower()
    if s in ("q", "qq", "rationals", "rational"):
        return QQ
    if s.startswith("gf(") and s.endswith(")"):
        inner = s[3:-1]
        parts = [t.strip() for t in inner.split(",")]
        try:
            nums = [int(t) for t in parts]
        except ValueError:
            raise BadSpec(f"bad field name {name!r}") from None
        if len(nums) == 1:
            return gf(nums[0])
        if len(nums) == 2:
            p, k = nums
            if k == 1:
                return PrimeField(p)
            return ExtensionField(p, k, default_modulus(p, k))
        raise BadSpec(f"bad field name {name!r}")
    if s.startswith("gf"):
        try:
            return gf(int(s[2:]))
        except ValueError:
            raise BadSpec(f"bad field name {name!r}") from None
    raise BadSpec(f"bad field name {name!r}")
