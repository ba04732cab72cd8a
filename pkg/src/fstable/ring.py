"""Multivariate polynomial rings over prime fields.

Polynomials live in F_p[x_1, ..., x_n] with a fixed monomial order and are
stored sparsely: an int64 exponent matrix (one row per term) plus a
coefficient vector, rows strictly descending in the order, coefficients in
[1, p). Every constructor normalizes to this canonical form, so equal
polynomials are structurally equal and printing is deterministic.

The text grammar, shared by the parser and the canonical printer:

    poly   := term (('+' | '-') term)*
    term   := coef ('*' factor)* | factor ('*' factor)*
    factor := var ('^' uint)?
    coef   := uint

No parentheses and no unary minus; '-' is the additive inverse mod p.
Parse errors carry the byte offset of the offending token, and parsing a
printed polynomial gives back the same polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ParseError, SetupError

# per-variable exponent bound; multiplication and Frobenius powers check it
EXP_LIMIT = 1 << 40


def is_prime(n: int) -> bool:
    """Trial division, adequate for word-sized moduli."""
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


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: "lex", "grevlex", or "block".

    "block" is the elimination order whose leading block is the first
    `block` variables, with grevlex inside each block; any monomial using
    a leading-block variable exceeds every monomial in the remaining ones.
    """

    kind: str
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise ValueError("block order needs a positive leading block size")
        if self.kind != "block" and self.block != 0:
            raise ValueError("only block orders take a block size")

    @staticmethod
    def lex() -> "MonomialOrder":
        return MonomialOrder("lex")

    @staticmethod
    def grevlex() -> "MonomialOrder":
        return MonomialOrder("grevlex")

    @staticmethod
    def elimination(k: int) -> "MonomialOrder":
        return MonomialOrder("block", k)

    @property
    def code(self) -> int:
        return {"lex": kernels.LEX, "grevlex": kernels.GREVLEX, "block": kernels.BLOCK}[self.kind]

    def key(self, exps: np.ndarray) -> np.ndarray:
        """Per-row sort key; rows compare lexicographically as the order."""
        return kernels.sort_keys(exps, self.code, self.block)

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block({self.block})"
        return self.kind


class Ring:
    """F_p[vars] with a fixed monomial order (default grevlex)."""

    __slots__ = ("p", "vars", "order", "_index")

    def __init__(self, p: int, vars: tuple[str, ...] | list[str], order: MonomialOrder | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise SetupError(f"modulus must be a prime integer, got {p!r}")
        if p >= 1 << 31:
            raise SetupError("modulus must fit in 31 bits")
        vars = tuple(vars)
        if not vars:
            raise SetupError("need at least one variable")
        for v in vars:
            # a leading '@' marks internal auxiliary variables; the parser
            # cannot produce them, so they never collide with user names
            body = v[1:] if v.startswith("@") else v
            if not body or not (body[0].isalpha() or body[0] == "_") or not all(
                c.isalnum() or c == "_" for c in body
            ):
                raise SetupError(f"bad variable name {v!r}")
        if len(set(vars)) != len(vars):
            raise SetupError("variable names must be distinct")
        order = order or MonomialOrder.grevlex()
        if order.kind == "block" and not 0 < order.block < len(vars):
            raise SetupError("elimination block must leave at least one variable")
        self.p = p
        self.vars = vars
        self.order = order
        self._index = {v: i for i, v in enumerate(vars)}

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ring)
            and self.p == other.p
            and self.vars == other.vars
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.p, self.vars, self.order))

    def __repr__(self) -> str:
        return f"Ring(p={self.p}, vars={','.join(self.vars)}, order={self.order})"

    # constructors

    def _poly(self, exps: np.ndarray, coeffs: np.ndarray) -> "Polynomial":
        """Wrap arrays that are already canonical. Internal."""
        return Polynomial(self, exps, coeffs)

    def make_poly(self, exps, coeffs) -> "Polynomial":
        """Polynomial from arbitrary (rows, coeffs) data; normalizes."""
        exps = np.asarray(exps, dtype=np.int64).reshape(-1, self.nvars)
        coeffs = np.asarray(coeffs, dtype=np.int64)
        e, c = kernels.canon_terms(exps, coeffs, self.p, self.order.code, self.order.block)
        return self._poly(e, c)

    def zero(self) -> "Polynomial":
        return self._poly(np.zeros((0, self.nvars), dtype=np.int64), np.zeros(0, dtype=np.int64))

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        c = c % self.p
        if c == 0:
            return self.zero()
        return self._poly(
            np.zeros((1, self.nvars), dtype=np.int64), np.array([c], dtype=np.int64)
        )

    def gen(self, name: str) -> "Polynomial":
        if name not in self._index:
            raise SetupError(f"{name!r} is not a variable of {self!r}")
        row = np.zeros((1, self.nvars), dtype=np.int64)
        row[0, self._index[name]] = 1
        return self._poly(row, np.array([1], dtype=np.int64))

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.vars)

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.p, self.vars, order)

    def extend_front(self, names: tuple[str, ...]) -> "Ring":
        """Ring with auxiliary variables prepended and an elimination order
        putting them in the leading block. Used for intersections."""
        return Ring(self.p, tuple(names) + self.vars, MonomialOrder.elimination(len(names)))

    # parsing

    def parse(self, text: str) -> "Polynomial":
        toks = _tokenize(text)
        pos = 0
        rows: list[np.ndarray] = []
        coeffs: list[int] = []

        def factor(row):
            # var ('^' uint)?  -- caller guarantees a name token is next
            nonlocal pos
            kind, val, off = toks[pos]
            if val not in self._index:
                raise ParseError(f"unknown variable {val!r}", _byte_off(text, off))
            idx = self._index[val]
            pos += 1
            e = 1
            if toks[pos][0] == "^":
                pos += 1
                kind, val, off = toks[pos]
                if kind != "int":
                    raise ParseError("expected an integer exponent after '^'", _byte_off(text, off))
                e = int(val)
                if e >= EXP_LIMIT:
                    raise ParseError("exponent too large", _byte_off(text, off))
                pos += 1
            row[idx] += e

        def term(sign: int):
            nonlocal pos
            kind, val, off = toks[pos]
            coef = 1
            row = np.zeros(self.nvars, dtype=np.int64)
            if kind == "int":
                coef = int(val)
                pos += 1
            elif kind == "name":
                factor(row)
            else:
                raise ParseError("expected a term", _byte_off(text, off))
            while toks[pos][0] == "*":
                pos += 1
                kind, val, off = toks[pos]
                if kind != "name":
                    raise ParseError("expected a variable after '*'", _byte_off(text, off))
                factor(row)
            rows.append(row)
            coeffs.append((sign * coef) % self.p)

        term(1)
        while toks[pos][0] in ("+", "-"):
            sign = 1 if toks[pos][0] == "+" else -1
            pos += 1
            term(sign)
        kind, val, off = toks[pos]
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", _byte_off(text, off))
        return self.make_poly(np.vstack(rows), coeffs)

    def __reduce__(self):
        return (Ring, (self.p, self.vars, self.order))


def _byte_off(text: str, char_off: int) -> int:
    return len(text[:char_off].encode("utf-8"))


def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", _byte_off(text, i))
    toks.append(("end", "", n))
    return toks


class Polynomial:
    """Immutable element of a Ring, in canonical sparse term form."""

    __slots__ = ("ring", "exps", "coeffs")

    def __init__(self, ring: Ring, exps: np.ndarray, coeffs: np.ndarray):
        self.ring = ring
        self.exps = exps
        self.coeffs = coeffs
        exps.flags.writeable = False
        coeffs.flags.writeable = False

    # predicates and accessors

    def is_zero(self) -> bool:
        return self.coeffs.shape[0] == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def nterms(self) -> int:
        return self.coeffs.shape[0]

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if self.is_zero():
            return -1
        return int(self.exps.sum(axis=1).max())

    def constant_term(self) -> int:
        if self.is_zero() or self.exps[-1].any():
            return 0
        return int(self.coeffs[-1])

    def leading_exponents(self) -> np.ndarray:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return self.exps[0]

    def leading_coefficient(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return int(self.coeffs[0])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = int(self.coeffs[0])
        if lc == 1:
            return self
        inv = kernels.modinv(lc, self.ring.p)
        return self.ring._poly(self.exps, (self.coeffs * inv) % self.ring.p)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise SetupError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        r = self.ring
        e, c = kernels.merge_terms(
            self.exps, self.coeffs, other.exps, other.coeffs, r.p, r.order.code, r.order.block
        )
        return r._poly(e, c)

    __radd__ = __add__

    def __neg__(self):
        r = self.ring
        if self.is_zero():
            return self
        return r._poly(self.exps, (r.p - self.coeffs) % r.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0 or self.is_zero():
                return self.ring.zero()
            return self.ring._poly(self.exps, (self.coeffs * c) % self.ring.p)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        r = self.ring
        if not self.is_zero() and not other.is_zero():
            if int(self.exps.max()) + int(other.exps.max()) > EXP_LIMIT:
                raise OverflowError("exponent overflow in product")
        e, c = kernels.mul_terms(
            self.exps, self.coeffs, other.exps, other.coeffs, r.p, r.order.code, r.order.block
        )
        return r._poly(e, c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # identity

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.exps.shape == other.exps.shape
            and np.array_equal(self.exps, other.exps)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.exps.tobytes(), self.coeffs.tobytes()))

    def key(self) -> tuple[bytes, bytes]:
        """Cheap canonical identity for dedup tables."""
        return (self.exps.tobytes(), self.coeffs.tobytes())

    # printing

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        names = self.ring.vars
        parts = []
        for row, c in zip(self.exps, self.coeffs):
            factors = []
            for i, e in enumerate(row):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{int(e)}")
            c = int(c)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"
