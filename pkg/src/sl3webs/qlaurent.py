"""Exact Laurent-polynomial arithmetic in the half-integer powers of q.

Everything downstream (graph invariants, congruence tests) takes values in
Z[q^(1/2), q^(-1/2)].  A polynomial is stored sparsely as a mapping from the
half-exponent index k (meaning q^(k/2)) to an exact integer coefficient, so
no rational exponents ever appear.  The module also provides the quantum
integers [n], a parser for bracket expressions such as "2[2]^2[3]", and the
finite quotient rings Z[q^(±1/2)]/(d, [3]^d - [3]) used by the symmetry
criterion.
"""

from __future__ import annotations

import re


class HalfLaurent:
    """An exact Laurent polynomial in x = q^(1/2) with integer coefficients.

    Immutable; zero coefficients are never stored, so the zero polynomial is
    the one with an empty term mapping.  Supports +, -, *, ** and mixes with
    plain ints.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in dict(terms).items():
                if not isinstance(k, int) or not isinstance(c, int):
                    raise TypeError("half-exponents and coefficients must be int")
                if c != 0:
                    clean[k] = c
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "HalfLaurent":
        return cls()

    @classmethod
    def one(cls) -> "HalfLaurent":
        return cls({0: 1})

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "HalfLaurent":
        """coeff * q^(k/2)."""
        return cls({k: coeff})

    # -- inspection --------------------------------------------------------

    def items(self):
        """Term items sorted by descending half-exponent."""
        return sorted(self._terms.items(), key=lambda kv: -kv[0])

    def coefficient(self, k: int) -> int:
        return self._terms.get(k, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_palindromic(self) -> bool:
        """True when invariant under q -> q^(-1)."""
        return all(self._terms.get(-k) == c for k, c in self._terms.items())

    def eval_at_one(self) -> int:
        """Specialize q = 1, i.e. the sum of all coefficients."""
        return sum(self._terms.values())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = HalfLaurent({0: other})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, int):
            return HalfLaurent({0: other})
        if isinstance(other, HalfLaurent):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            out[k] = out.get(k, 0) + c
        return HalfLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in o._terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- rendering ---------------------------------------------------------

    @staticmethod
    def _power_str(k: int) -> str:
        if k % 2 == 0:
            e = k // 2
            return "q" if e == 1 else f"q^{e}"
        return f"q^({k}/2)"

    def pretty(self) -> str:
        """Render with descending exponents, e.g. '2q^2+6q+8+6q^-1+2q^-2'."""
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + self._power_str(k)
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"HalfLaurent({self.pretty()!r})"

    def to_json_obj(self) -> dict:
        """JSON form: half-exponent (as string) -> coefficient (as string)."""
        return {str(k): str(c) for k, c in self.items()}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "HalfLaurent":
        return cls({int(k): int(c) for k, c in obj.items()})


def qint(n: int) -> HalfLaurent:
    """The quantum integer [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)).

    Expanded form: sum of q^((n-1-2j)/2) for j = 0..n-1.  [0] = 0.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("quantum integer index must be a non-negative integer")
    return HalfLaurent({n - 1 - 2 * j: 1 for j in range(n)})


class QExprError(ValueError):
    """Malformed bracket expression; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_INT_RE = re.compile(r"\d+")
_BRACKET_RE = re.compile(r"\[(\d+)\]")


def _tokenize_qexpr(text: str):
    """Yield (kind, value, position) tokens: sign, '^', int, or bracket."""
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in "+-^":
            tokens.append((ch, ch, pos))
            pos += 1
        elif ch.isdigit():
            m = _INT_RE.match(text, pos)
            tokens.append(("int", int(m.group()), pos))
            pos = m.end()
        elif ch == "[":
            m = _BRACKET_RE.match(text, pos)
            if m is None:
                raise QExprError("malformed '[n]' factor", pos)
            tokens.append(("qint", int(m.group(1)), pos))
            pos = m.end()
        else:
            raise QExprError(f"unexpected character {ch!r}", pos)
    return tokens


def parse_qexpr(text: str) -> HalfLaurent:
    """Parse a signed sum of bracket terms, e.g. "[2]^4[3]+2[2]^2[3]".

    Each term is an optional integer coefficient followed by factors "[n]"
    with optional "^e" exponents; this is exactly the shape of the invariant
    entries in the reference fixture tables.
    """
    tokens = _tokenize_qexpr(text)
    if not tokens:
        raise QExprError("empty expression", 0)
    total = HalfLaurent.zero()
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if first:
            if tokens[i][0] == "-":
                sign = -1
                i += 1
        else:
            kind = tokens[i][0]
            if kind not in "+-":
                raise QExprError("expected '+' or '-' between terms", tokens[i][2])
            sign = -1 if kind == "-" else 1
            i += 1
        coeff = None
        acc = HalfLaurent.one()
        have_factor = False
        if i < len(tokens) and tokens[i][0] == "int":
            coeff = tokens[i][1]
            i += 1
        while i < len(tokens) and tokens[i][0] == "qint":
            base = qint(tokens[i][1])
            i += 1
            exp = 1
            if i < len(tokens) and tokens[i][0] == "^":
                caret_pos = tokens[i][2]
                i += 1
                if i >= len(tokens) or tokens[i][0] != "int":
                    raise QExprError("expected integer exponent after '^'", caret_pos)
                exp = tokens[i][1]
                i += 1
            acc = acc * base**exp
            have_factor = True
        if coeff is None and not have_factor:
            pos = tokens[i][2] if i < len(tokens) else len(text)
            raise QExprError("expected a term", pos)
        total = total + sign * (coeff if coeff is not None else 1) * acc
        first = False
    return total


_QPOLY_TERM = re.compile(
    r"\s*(?P<sign>[+-]?)\s*(?P<coeff>\d+)?"
    r"(?:(?P<q>q)(?:\^(?:(?P<int>-?\d+)|\((?P<num>-?\d+)/2\)))?)?"
)


def parse_qpoly(text: str) -> HalfLaurent:
    """Parse the raw monomial form produced by HalfLaurent.pretty()."""
    pos = 0
    total = HalfLaurent.zero()
    stripped = text.strip()
    if stripped == "0":
        return total
    first = True
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _QPOLY_TERM.match(text, pos)
        if m is None or m.end() == pos or (m.group("coeff") is None and m.group("q") is None):
            raise QExprError("expected a monomial", pos)
        if not first and not m.group("sign"):
            raise QExprError("missing '+' or '-' between terms", pos)
        sign = -1 if m.group("sign") == "-" else 1
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("q"):
            if m.group("int") is not None:
                k = 2 * int(m.group("int"))
            elif m.group("num") is not None:
                k = int(m.group("num"))
            else:
                k = 2
        else:
            k = 0
        total = total + HalfLaurent.monomial(k, sign * coeff)
        pos = m.end()
        first = False
    if first:
        raise QExprError("empty expression", 0)
    return total


# -- quotient rings Z[q^(±1/2)] / (d, [3]^d - [3]) --------------------------


def ideal_generator(d: int) -> HalfLaurent:
    """The polynomial generator [3]^d - [3] of the congruence ideal."""
    if d < 2:
        raise ValueError("modulus must be at least 2")
    return qint(3) ** d - qint(3)


class IdealResidue:
    """Canonical representative of a class in Z[q^(±1/2)]/(d, [3]^d - [3]).

    Coefficients live in [0, d) on the half-exponent window [-2d, 2d-1]; the
    quotient is a free Z/d-module on those 4d monomials, so representatives
    are unique.  Stored as ``coeffs[i]`` = coefficient of q^((i-2d)/2).
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs):
        if d < 2:
            raise ValueError("modulus must be at least 2")
        coeffs = tuple(int(c) % d for c in coeffs)
        if len(coeffs) != 4 * d:
            raise ValueError(f"residue needs exactly {4 * d} coefficients")
        self.d = d
        self.coeffs = coeffs

    @classmethod
    def zero(cls, d: int) -> "IdealResidue":
        return cls(d, (0,) * (4 * d))

    @classmethod
    def one(cls, d: int) -> "IdealResidue":
        c = [0] * (4 * d)
        c[2 * d] = 1
        return cls(d, c)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, IdealResidue)
            and self.d == other.d
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __repr__(self):
        return f"IdealResidue(d={self.d}, {self.to_poly().pretty()!r})"

    def to_poly(self) -> HalfLaurent:
        return HalfLaurent({i - 2 * self.d: c for i, c in enumerate(self.coeffs) if c})

    def _check_same_ring(self, other):
        if not isinstance(other, IdealResidue) or other.d != self.d:
            raise ValueError("residues from different rings")

    def __add__(self, other):
        self._check_same_ring(other)
        d = self.d
        return IdealResidue(d, [(a + b) % d for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        self._check_same_ring(other)
        return mod_reduce(self.to_poly() * other.to_poly(), self.d)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = IdealResidue.one(self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def mod_reduce(p: HalfLaurent, d: int) -> IdealResidue:
    """Reduce a polynomial to its canonical residue mod (d, [3]^d - [3]).

    Coefficients are taken mod d; exponents outside [-2d, 2d-1] are folded in
    by eliminating against the generator, whose extreme terms q^(±d) both
    have coefficient 1.  Eliminations from the top only insert exponents
    >= -2d and ones from the bottom only insert exponents <= 2d-1, so the
    procedure terminates with a unique representative.
    """
    if d < 2:
        raise ValueError("modulus must be at least 2")
    gen = ideal_generator(d)
    g = {k: c % d for k, c in gen.items() if c % d}
    work = {k: c % d for k, c in p.items() if c % d}
    hi, lo = 2 * d, -2 * d

    def eliminate(k):
        c = work.pop(k)
        shift = k - hi if k >= hi else k - lo
        for j, gc in g.items():
            jj = j + shift
            if jj == k:
                continue
            v = (work.get(jj, 0) - c * gc) % d
            if v:
                work[jj] = v
            else:
                work.pop(jj, None)

    while work:
        top = max(work)
        if top >= hi:
            eliminate(top)
            continue
        bottom = min(work)
        if bottom < lo:
            eliminate(bottom)
            continue
        break

    coeffs = [0] * (4 * d)
    for k, c in work.items():
        coeffs[k + 2 * d] = c
    return IdealResidue(d, coeffs)


def congruent_mod(p: HalfLaurent, r: HalfLaurent, d: int) -> bool:
    """True iff p and r fall in the same class mod (d, [3]^d - [3])."""
    return mod_reduce(p, d) == mod_reduce(r, d)
