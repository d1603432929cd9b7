"""Exact arithmetic in odd prime fields F_p and quadratic extensions F_{p^2}.

The enumeration engine needs three things fast: reduction mod p, a
quadratic-character test, and degree-at-most-6 polynomial evaluation over
the quadratic extension. Residue tables are built once per field so the
character test inside hot loops is a single lookup; the extension-field
character reduces to the base field through the norm map.
"""

from dataclasses import dataclass

from .errors import DomainError, IntegrityError

# Residue tables are O(p) in memory; fields are meant for enumeration, not
# cryptographic sizes.
_MAX_TABLE_PRIME = 1_000_003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldElem:
    """Canonical representative(s) of a field element, reduced mod p.

    For a PrimeField the element is `a`; for a QuadExtField it is
    a + b*sqrt(n) with n the field's nonresidue.
    """

    field: object
    a: int
    b: int = 0

    def __add__(self, other: "FieldElem") -> "FieldElem":
        p = self.field.p
        return FieldElem(self.field, (self.a + other.a) % p, (self.b + other.b) % p)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        p = self.field.p
        return FieldElem(self.field, (self.a - other.a) % p, (self.b - other.b) % p)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        return self.field.mul(self, other)

    def __pow__(self, e: int) -> "FieldElem":
        if e < 0:
            raise DomainError("negative exponents are not supported")
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


class PrimeField:
    """F_p for an odd prime p, with a precomputed quadratic-residue table."""

    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise DomainError(f"base field characteristic must be an odd prime, got {p}")
        if p > _MAX_TABLE_PRIME:
            raise DomainError(f"p={p} exceeds the supported table range")
        self.p = p
        squares = bytearray(p)
        for x in range(1, p):
            squares[x * x % p] = 1
        self.chi = (0,) + tuple(1 if squares[a] else -1 for a in range(1, p))
        self.one = FieldElem(self, 1)
        self.zero = FieldElem(self, 0)

    def elem(self, a: int) -> FieldElem:
        return FieldElem(self, a % self.p)

    def mul(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return FieldElem(self, x.a * y.a % self.p)

    def character(self, a: int) -> int:
        return self.chi[a % self.p]

    def __repr__(self):
        return f"PrimeField({self.p})"


class QuadExtField:
    """F_{p^2} presented as F_p(sqrt(nonresidue))."""

    def __init__(self, base: PrimeField, nonresidue: int | None = None):
        n = find_nonresidue(base.p) if nonresidue is None else nonresidue % base.p
        if base.chi[n] != -1:
            raise DomainError(f"{n} is not a quadratic nonresidue mod {base.p}")
        self.base = base
        self.p = base.p
        self.n = n
        self.one = FieldElem(self, 1)
        self.zero = FieldElem(self, 0)

    def elem(self, a: int, b: int = 0) -> FieldElem:
        return FieldElem(self, a % self.p, b % self.p)

    def lift(self, x: FieldElem) -> FieldElem:
        return FieldElem(self, x.a % self.p)

    def mul(self, x: FieldElem, y: FieldElem) -> FieldElem:
        p = self.p
        return FieldElem(
            self,
            (x.a * y.a + self.n * x.b * y.b) % p,
            (x.a * y.b + x.b * y.a) % p,
        )

    def norm(self, x: FieldElem) -> int:
        return (x.a * x.a - self.n * x.b * x.b) % self.p

    def character(self, x: FieldElem) -> int:
        # chi_{p^2}(x) = chi_p(Norm x): x^((p^2-1)/2) = Norm(x)^((p-1)/2).
        return self.base.chi[self.norm(x)]

    def __repr__(self):
        return f"QuadExtField({self.p}, sqrt({self.n}))"


def find_nonresidue(p: int) -> int:
    """Smallest positive quadratic nonresidue mod the odd prime p."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    squares = set(x * x % p for x in range(1, p))
    for a in range(2, p):
        if a not in squares:
            return a
    raise IntegrityError(f"no nonresidue found mod {p}")  # pragma: no cover


def quadratic_character(c: FieldElem) -> int:
    """0 for c = 0, +1 for a nonzero square, -1 otherwise."""
    f = c.field
    if isinstance(f, PrimeField):
        return f.chi[c.a]
    return f.character(c)


def ext_eval(coeffs, x: FieldElem) -> FieldElem:
    """Evaluate a base-coefficient polynomial at a point of F_{p^2}.

    `coeffs[i]` is the coefficient of x^i; the degree is capped at 6.
    """
    field = x.field
    if not isinstance(field, QuadExtField):
        raise DomainError("ext_eval expects a quadratic-extension element")
    if len(coeffs) > 7:
        raise DomainError("polynomial degree above 6 is not supported")
    acc = field.zero
    for c in reversed(coeffs):
        acc = acc * x + field.elem(c)
    return acc
