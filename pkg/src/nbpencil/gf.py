"""Arithmetic in GF(p^k).

Elements are residues of polynomials of degree < k over F_p modulo a fixed
monic irreducible.  Internally an element is an integer *code*: the base-p
number whose digits are the coefficients, constant term least significant.
Code order is therefore the enumeration order (lexicographic on the
coefficient vector, constant term varying fastest).
"""

import math
import os
import re
from functools import lru_cache

from . import upoly

DEFAULT_MAX_Q = 2 ** 16
MAX_Q_ENV = "NBPENCIL_MAX_Q"

# Fields up to this size get full add/mul tables.
_TABLE_LIMIT = 256


def _is_prime(n):
    if n < 2:
        return False
    return all(n % i for i in range(2, math.isqrt(n) + 1))


def max_q():
    return int(os.environ.get(MAX_Q_ENV, DEFAULT_MAX_Q))


class FiniteField:
    """GF(p^k).  Build instances with :func:`make_field`."""

    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.q = p ** k
        self._add = self._mul = None
        if k > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- pickling / identity --------------------------------------------
    def __reduce__(self):
        return (make_field, (self.p, self.k))

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.k == other.k and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    @property
    def spec(self):
        return f"{self.p}^{self.k}"

    # -- code level arithmetic ------------------------------------------
    def digits(self, code):
        out = []
        for _ in range(self.k):
            code, c = divmod(code, self.p)
            out.append(c)
        return out

    def undigits(self, digits):
        code = 0
        for c in reversed(digits):
            code = code * self.p + c % self.p
        return code

    def _build_tables(self):
        q = self.q
        self._add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]

    def _add_slow(self, a, b):
        p = self.p
        return self.undigits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _mul_slow(self, a, b):
        p, k = self.p, self.k
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, u in enumerate(x):
            if u:
                for j, v in enumerate(y):
                    prod[i + j] = (prod[i + j] + u * v) % p
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return self.undigits(prod[:k])

    def add_code(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        if self.p == 2:
            return a ^ b
        return self._add_slow(a, b)

    def neg_code(self, a):
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.undigits([-c for c in self.digits(a)])

    def sub_code(self, a, b):
        return self.add_code(a, self.neg_code(b))

    def mul_code(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if self._mul is not None:
            return self._mul[a][b]
        if a == 0 or b == 0:
            return 0
        return self._mul_slow(a, b)

    def pow_code(self, a, e):
        if e < 0:
            return self.pow_code(self.inv_code(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul_code(result, a)
            a = self.mul_code(a, a)
            e >>= 1
        return result

    def inv_code(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow_code(a, self.q - 2)

    # -- element level ---------------------------------------------------
    def __call__(self, value):
        """Coerce an int (image of the integer in the prime subfield),
        a coefficient sequence, a string, or an element of this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field!r} used in {self!r}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        if isinstance(value, str):
            return self.parse(value)
        return FieldElement(self, self.undigits(list(value)))

    def element(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def gen(self):
        """The class of t (equals 0 in a prime field, whose modulus is t)."""
        return FieldElement(self, 0 if self.k == 1 else self.p)

    def elements(self):
        return enumerate_elements(self)

    def format_code(self, code):
        if self.k == 1:
            return str(code)
        terms = []
        for i, c in reversed(list(enumerate(self.digits(code)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coeff = str(c) if (c != 1 or i == 0) else ""
            terms.append(coeff + mono)
        return "+".join(terms) if terms else "0"

    _TERM = re.compile(r"^(\d*)\*?(t(?:\^(\d+))?)?$")

    def parse(self, text):
        """Inverse of ``str(element)``: sums of terms like ``2t^3``, ``t``, ``1``."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty field element string")
        digits = [0] * self.k
        for term in text.split("+"):
            m = self._TERM.match(term)
            if not term or m is None or (not m.group(1) and not m.group(2)):
                raise ValueError(f"cannot parse field element {text!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            exp = 0 if not m.group(2) else int(m.group(3) or 1)
            if exp and self.k == 1:
                raise ValueError(f"{text!r} is not an element of {self!r}")
            # reduce t^exp via the modulus by multiplying codes
            code = self.mul_code(coeff % self.p, self.pow_code(self.gen.code, exp) if exp else 1)
            for i, c in enumerate(self.digits(code)):
                digits[i] = (digits[i] + c) % self.p
        return FieldElement(self, self.undigits(digits))


class FieldElement:
    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    @property
    def rep(self):
        return tuple(self.field.digits(self.code))

    def _other(self, other):
        if isinstance(other, int):
            return other % self.field.p
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field is not self.field and other.field != self.field:
            raise ValueError(f"mixed fields {self.field!r} and {other.field!r}")
        return other.code

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add_code(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub_code(self.code, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul_code(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul_code(self.code, self.field.inv_code(b)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow_code(self.code, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_code(self.code))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == other % self.field.p
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.code == other.code and (other.field is self.field or other.field == self.field)

    def __hash__(self):
        return hash((self.field.q, self.code))

    def __lt__(self, other):
        return self.code < other.code

    def __repr__(self):
        return f"{self.field!r}({self.field.format_code(self.code)})"

    def __str__(self):
        return self.field.format_code(self.code)


@lru_cache(maxsize=None)
def _make_field(p, k):
    if k == 1:
        return FiniteField(p, 1, (0, 1))
    prime = _make_field(p, 1)
    modulus = upoly.first_monic_irreducible(prime, k)
    return FiniteField(p, k, modulus)


def make_field(p, k=1, bound=None):
    """GF(p^k) with the first monic irreducible modulus in enumeration order.

    Instances are cached, so equal arguments return the same object.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise ValueError(f"characteristic {p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree must be a positive integer, got {k!r}")
    limit = max_q() if bound is None else bound
    if p ** k > limit:
        raise ValueError(f"field size {p}^{k} = {p ** k} exceeds bound {limit}")
    return _make_field(p, k)


def prime_power(q):
    """Return (p, k) with q = p^k, or None when q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 else None
    return (q, 1)


def parse_field_spec(spec, bound=None):
    """``"p^k"`` or a plain prime power ``"q"``."""
    spec = str(spec).strip()
    try:
        if "^" in spec:
            p, k = (int(s) for s in spec.split("^"))
        else:
            pk = prime_power(int(spec))
            if pk is None:
                raise ValueError(f"{spec} is not a prime power")
            p, k = pk
    except ValueError as exc:
        raise ValueError(f"invalid field spec {spec!r}: {exc}") from None
    return make_field(p, k, bound=bound)


def enumerate_elements(F):
    return [FieldElement(F, c) for c in range(F.q)]


def frobenius(a):
    return a ** a.field.p


def is_power_residue(a, m):
    """True iff ``a`` is an m-th power in F_q^*."""
    if not a:
        raise ValueError("power residue test is undefined for 0")
    q = a.field.q
    return a ** ((q - 1) // math.gcd(m, q - 1)) == a.field.one


def embed_subfield(small, big):
    """Injective homomorphism ``small -> big`` as a callable.

    The generator t of ``small`` is sent to the first root of its modulus
    in ``big`` (enumeration order).
    """
    if small.p != big.p:
        raise ValueError(f"characteristic mismatch: {small!r} vs {big!r}")
    if big.k % small.k:
        raise ValueError(f"{small!r} is not a subfield of {big!r}: {small.k} does not divide {big.k}")
    # modulus coefficients are in F_p, which sits inside big as codes 0..p-1
    mod = list(small.modulus)
    root = next(c for c in range(big.q) if upoly.evaluate(big, mod, c) == 0)
    powers = [big.pow_code(root, i) for i in range(small.k)]
    table = []
    for code in range(small.q):
        acc = 0
        for c, pw in zip(small.digits(code), powers):
            acc = big.add_code(acc, big.mul_code(c, pw))
        table.append(acc)

    def embed(a):
        if a.field != small:
            raise ValueError(f"{a!r} is not in {small!r}")
        return FieldElement(big, table[a.code])

    embed.root = FieldElement(big, root)
    embed.table = table
    return embed
