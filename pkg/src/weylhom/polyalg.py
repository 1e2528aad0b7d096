"""The ring R_{k,l} = Q[t_1^{+-1}, ..., t_k^{+-1}, u_1, ..., u_l] and its bialgebra structure.

Comultiplication is the algebra map with t_s -> t_s (x) t_s (group-like) and
u_r -> u_r (x) 1 + 1 (x) u_r (primitive); the counit sends t_s -> 1, u_r -> 0.

Text format for ring elements::

    element := '0' | term (('+' | '-') term)*
    term    := [coeff '*'] factor ('*' factor)* | coeff
    factor  := 't' INDEX ['^' INT] | 'u' INDEX ['^' NAT]
    coeff   := NAT ['/' NAT]

Negative exponents are allowed on t-variables only.  The printer emits the
canonical form (terms in decreasing monomial order, no spaces around '*') and
``parse_element(format_element(x)) == x`` holds exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .linalg import bareiss_det

Exps = Tuple[int, ...]
MonoKey = Tuple[Exps, Exps]


class RingError(ValueError):
    pass


def unit_key(k: int, l: int) -> MonoKey:
    return ((0,) * k, (0,) * l)


def key_mul(a: MonoKey, b: MonoKey) -> MonoKey:
    return (tuple(x + y for x, y in zip(a[0], b[0])), tuple(x + y for x, y in zip(a[1], b[1])))


def deg_t(key: MonoKey) -> int:
    return sum(key[0])


def deg_u(key: MonoKey) -> int:
    return sum(key[1])


def order_key(key: MonoKey):
    """Sort key for monomials; larger means printed first."""
    return (deg_u(key), key[1], deg_t(key), key[0])


@dataclass(frozen=True)
class Monomial:
    """coeff * t^t_exps * u^u_exps; the t-part is always a unit."""

    t_exps: Exps
    u_exps: Exps
    coeff: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "t_exps", tuple(int(e) for e in self.t_exps))
        object.__setattr__(self, "u_exps", tuple(int(e) for e in self.u_exps))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if any(e < 0 for e in self.u_exps):
            raise RingError("u-exponents must be nonnegative")

    @property
    def key(self) -> MonoKey:
        return (self.t_exps, self.u_exps)

    @property
    def k(self) -> int:
        return len(self.t_exps)

    @property
    def l(self) -> int:
        return len(self.u_exps)

    @property
    def m_t(self) -> "Monomial":
        return Monomial(self.t_exps, (0,) * self.l)

    @property
    def m_u(self) -> "Monomial":
        return Monomial((0,) * self.k, self.u_exps, self.coeff)

    @property
    def deg_t(self) -> int:
        return sum(self.t_exps)

    @property
    def deg_u(self) -> int:
        return sum(self.u_exps)

    def element(self) -> "RingElement":
        return RingElement(self.k, self.l, {self.key: self.coeff})

    def __str__(self) -> str:
        return format_element(self.element())


class RingElement:
    """Sparse element of R_{k,l} with rational coefficients."""

    __slots__ = ("k", "l", "terms")

    def __init__(self, k: int, l: int, terms: Optional[Mapping[MonoKey, Fraction]] = None):
        self.k = k
        self.l = l
        self.terms: Dict[MonoKey, Fraction] = {}
        for key, c in (terms or {}).items():
            if len(key[0]) != k or len(key[1]) != l:
                raise RingError(f"monomial {key} does not belong to R_{{{k},{l}}}")
            if any(e < 0 for e in key[1]):
                raise RingError("u-exponents must be nonnegative")
            if c:
                self.terms[(tuple(key[0]), tuple(key[1]))] = Fraction(c)

    @classmethod
    def constant(cls, k: int, l: int, c=1) -> "RingElement":
        return cls(k, l, {unit_key(k, l): c})

    @classmethod
    def monomial(cls, t_exps: Sequence[int], u_exps: Sequence[int], coeff=1) -> "RingElement":
        return cls(len(t_exps), len(u_exps), {(tuple(t_exps), tuple(u_exps)): coeff})

    @classmethod
    def t(cls, k: int, l: int, s: int, e: int = 1) -> "RingElement":
        te = [0] * k
        te[s - 1] = e
        return cls(k, l, {(tuple(te), (0,) * l): 1})

    @classmethod
    def u(cls, k: int, l: int, r: int, e: int = 1) -> "RingElement":
        ue = [0] * l
        ue[r - 1] = e
        return cls(k, l, {((0,) * k, tuple(ue)): 1})

    def _same(self, other: "RingElement") -> None:
        if (self.k, self.l) != (other.k, other.l):
            raise RingError(f"ring mismatch R_{{{self.k},{self.l}}} vs R_{{{other.k},{other.l}}}")

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            self._same(other)
            return other
        return RingElement.constant(self.k, self.l, Fraction(other))

    def __add__(self, other) -> "RingElement":
        other = self._coerce(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return RingElement(self.k, self.l, out)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.k, self.l, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other) -> "RingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RingElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RingElement":
        other = self._coerce(other)
        out: Dict[MonoKey, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = key_mul(k1, k2)
                out[key] = out.get(key, 0) + c1 * c2
        return RingElement(self.k, self.l, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElement":
        if n < 0:
            if len(self.terms) == 1:
                (key, c), = self.terms.items()
                if not any(key[1]):
                    return RingElement(self.k, self.l, {(tuple(-e for e in key[0]), key[1]): 1 / c}) ** (-n)
            raise RingError("only units can be inverted")
        out = RingElement.constant(self.k, self.l)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RingElement):
            return (self.k, self.l) == (other.k, other.l) and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == RingElement.constant(self.k, self.l, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.k, self.l, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        for key in sorted(self.terms, key=order_key, reverse=True):
            yield Monomial(key[0], key[1], self.terms[key])

    def evaluate(self, t_point: Sequence, u_point: Sequence) -> Fraction:
        if len(t_point) != self.k or len(u_point) != self.l:
            raise RingError("point has wrong number of coordinates")
        total = Fraction(0)
        for (te, ue), c in self.terms.items():
            v = c
            for p, e in zip(t_point, te):
                v *= Fraction(p) ** e
            for p, e in zip(u_point, ue):
                v *= Fraction(p) ** e
            total += v
        return total

    def deg_u(self) -> int:
        return max((deg_u(key) for key in self.terms), default=0)

    def __repr__(self) -> str:
        return f"RingElement({format_element(self)!r}, k={self.k}, l={self.l})"

    def __str__(self) -> str:
        return format_element(self)


# ---------------------------------------------------------------------------
# text format

def _format_key(key: MonoKey, with_one: bool = True) -> str:
    factors = []
    for s, e in enumerate(key[0], 1):
        if e:
            factors.append(f"t{s}" if e == 1 else f"t{s}^{e}")
    for r, e in enumerate(key[1], 1):
        if e:
            factors.append(f"u{r}" if e == 1 else f"u{r}^{e}")
    if not factors:
        return "1" if with_one else ""
    return "*".join(factors)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_term(key: MonoKey, c: Fraction) -> str:
    body = _format_key(key, with_one=False)
    if not body:
        return _format_coeff(c)
    if c == 1:
        return body
    return f"{_format_coeff(c)}*{body}"


def format_element(x: RingElement) -> str:
    if not x.terms:
        return "0"
    out = []
    for i, key in enumerate(sorted(x.terms, key=order_key, reverse=True)):
        c = x.terms[key]
        term = _format_term(key, abs(c))
        if i == 0:
            out.append(term if c > 0 else f"-{term}")
        else:
            out.append(f" + {term}" if c > 0 else f" - {term}")
    return "".join(out)


_TOKEN = re.compile(r"(?P<num>\d+(?:/\d+)?)|(?P<var>[tu])(?P<idx>\d+)(?:\^(?P<exp>-?\d+))?|(?P<op>[*+-])")


def _tokenize(text: str) -> List[re.Match]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise RingError(f"element: unexpected character {text[pos]!r} at position {pos}")
        tokens.append(m)
        pos = m.end()
    return tokens


def parse_element(text: str, k: int, l: int) -> RingElement:
    """Parse the text format into an element of R_{k,l}; raises RingError on bad input."""
    tokens = _tokenize(text)
    if not tokens:
        raise RingError("element: empty input")
    pos = 0

    def peek(kind: str) -> bool:
        return pos < len(tokens) and tokens[pos].group(kind) is not None

    def factor(te: List[int], ue: List[int]) -> None:
        nonlocal pos
        if not peek("var"):
            got = tokens[pos].group(0) if pos < len(tokens) else "end of input"
            raise RingError(f"factor: expected t<i> or u<i>, got {got!r}")
        tok = tokens[pos]
        pos += 1
        var, idx = tok.group("var"), int(tok.group("idx"))
        exp = int(tok.group("exp")) if tok.group("exp") is not None else 1
        if var == "t":
            if not 1 <= idx <= k:
                raise RingError(f"factor: t{idx} is not a variable of R_{{{k},{l}}}")
            te[idx - 1] += exp
        else:
            if not 1 <= idx <= l:
                raise RingError(f"factor: u{idx} is not a variable of R_{{{k},{l}}}")
            if exp < 0:
                raise RingError(f"factor: negative exponent on u{idx}")
            ue[idx - 1] += exp

    def term(sign: int) -> RingElement:
        nonlocal pos
        coeff = Fraction(sign)
        te, ue = [0] * k, [0] * l
        if peek("num"):
            coeff *= Fraction(tokens[pos].group("num"))
            pos += 1
            if not (pos < len(tokens) and tokens[pos].group("op") == "*"):
                return RingElement(k, l, {(tuple(te), tuple(ue)): coeff})
            pos += 1
        factor(te, ue)
        while pos < len(tokens) and tokens[pos].group("op") == "*":
            pos += 1
            factor(te, ue)
        return RingElement(k, l, {(tuple(te), tuple(ue)): coeff})

    sign = 1
    if tokens[0].group("op") in ("+", "-"):
        sign = -1 if tokens[0].group("op") == "-" else 1
        pos = 1
    total = RingElement(k, l)
    while True:
        if pos >= len(tokens):
            raise RingError("term: expected a coefficient or factor, got end of input")
        total = total + term(sign)
        if pos >= len(tokens):
            return total
        op = tokens[pos].group("op")
        if op not in ("+", "-"):
            raise RingError(f"element: expected '+' or '-', got {tokens[pos].group(0)!r}")
        sign = -1 if op == "-" else 1
        pos += 1


# ---------------------------------------------------------------------------
# tensor powers of R_{k,l}

class TensorElement:
    """Element of the tensor power A^{(x) order}, sparse over tuples of monomials."""

    __slots__ = ("order", "k", "l", "terms")

    def __init__(self, order: int, k: int, l: int, terms: Optional[Mapping[Tuple[MonoKey, ...], Fraction]] = None):
        self.order = order
        self.k = k
        self.l = l
        self.terms: Dict[Tuple[MonoKey, ...], Fraction] = {}
        for keys, c in (terms or {}).items():
            if len(keys) != order:
                raise RingError(f"tensor term of order {len(keys)} in order-{order} tensor")
            if c:
                self.terms[tuple(keys)] = Fraction(c)

    @classmethod
    def pure(cls, factors: Sequence[RingElement]) -> "TensorElement":
        """a_1 (x) ... (x) a_r."""
        if not factors:
            raise RingError("need at least one factor")
        k, l = factors[0].k, factors[0].l
        out: Dict[Tuple[MonoKey, ...], Fraction] = {(): Fraction(1)}
        for f in factors:
            nxt: Dict[Tuple[MonoKey, ...], Fraction] = {}
            for keys, c in out.items():
                for key, d in f.terms.items():
                    nk = keys + (key,)
                    nxt[nk] = nxt.get(nk, 0) + c * d
            out = nxt
        return cls(len(factors), k, l, out)

    @classmethod
    def one(cls, order: int, k: int, l: int) -> "TensorElement":
        return cls(order, k, l, {(unit_key(k, l),) * order: 1})

    def _same(self, other: "TensorElement") -> None:
        if (self.order, self.k, self.l) != (other.order, other.k, other.l):
            raise RingError("tensor shape mismatch")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._same(other)
        out = dict(self.terms)
        for keys, c in other.terms.items():
            out[keys] = out.get(keys, 0) + c
        return TensorElement(self.order, self.k, self.l, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.order, self.k, self.l, {keys: -c for keys, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        return TensorElement(self.order, self.k, self.l, {keys: v * c for keys, v in self.terms.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Slotwise product in the algebra A^{(x) order}."""
        self._same(other)
        out: Dict[Tuple[MonoKey, ...], Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                keys = tuple(key_mul(a, b) for a, b in zip(k1, k2))
                out[keys] = out.get(keys, 0) + c1 * c2
        return TensorElement(self.order, self.k, self.l, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.order, self.k, self.l) == (other.order, other.k, other.l) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self.terms.items())))

    def permute(self, perm: Sequence[int]) -> "TensorElement":
        """Move the factor in slot perm[i] to slot i."""
        return TensorElement(
            self.order, self.k, self.l, {tuple(keys[p] for p in perm): c for keys, c in self.terms.items()}
        )

    def apply_slot(self, slot: int, fn: Callable[[MonoKey], Mapping[Tuple[MonoKey, ...], Fraction]], width: int) -> "TensorElement":
        """Replace slot ``slot`` by the ``width``-fold tensor fn(monomial), extended linearly."""
        out: Dict[Tuple[MonoKey, ...], Fraction] = {}
        for keys, c in self.terms.items():
            for sub, d in fn(keys[slot]).items():
                nk = keys[:slot] + tuple(sub) + keys[slot + 1:]
                out[nk] = out.get(nk, 0) + c * d
        return TensorElement(self.order - 1 + width, self.k, self.l, out)

    def slot_element(self) -> RingElement:
        """The underlying ring element of an order-1 tensor."""
        if self.order != 1:
            raise RingError("slot_element needs an order-1 tensor")
        return RingElement(self.k, self.l, {keys[0]: c for keys, c in self.terms.items()})

    def __iter__(self):
        order = lambda item: tuple(order_key(k) for k in item[0])
        return iter(sorted(self.terms.items(), key=order, reverse=True))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (keys, c) in enumerate(self):
            body = " (x) ".join(_format_key(key) for key in keys)
            a = abs(c)
            term = body if a == 1 else f"{_format_coeff(a)}*{body}"
            if i == 0:
                out.append(term if c > 0 else f"-{term}")
            else:
                out.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"TensorElement(order={self.order}, {self})"


# ---------------------------------------------------------------------------
# bialgebra structure

def comultiply_key(key: MonoKey) -> Dict[Tuple[MonoKey, MonoKey], Fraction]:
    te, ue = key
    out: Dict[Tuple[MonoKey, MonoKey], Fraction] = {}
    for split in product(*(range(e + 1) for e in ue)):
        c = 1
        for e, a in zip(ue, split):
            c *= comb(e, a)
        left = (te, tuple(split))
        right = (te, tuple(e - a for e, a in zip(ue, split)))
        out[(left, right)] = Fraction(c)
    return out


def comultiply(m, k: int | None = None, l: int | None = None) -> TensorElement:
    """Delta(m) for a Monomial or RingElement, expanded multiplicatively from the generators."""
    if isinstance(m, Monomial):
        m = m.element()
    if not isinstance(m, RingElement):
        raise TypeError("comultiply expects a Monomial or RingElement")
    if (k is not None and k != m.k) or (l is not None and l != m.l):
        raise RingError("monomial does not live in the requested ring")
    out: Dict[Tuple[MonoKey, ...], Fraction] = {}
    for key, c in m.terms.items():
        for pair, d in comultiply_key(key).items():
            out[pair] = out.get(pair, 0) + c * d
    return TensorElement(2, m.k, m.l, out)


def counit_key(key: MonoKey) -> Fraction:
    return Fraction(0) if any(key[1]) else Fraction(1)


def counit(x: RingElement) -> Fraction:
    return sum((c * counit_key(key) for key, c in x.terms.items()), Fraction(0))


def comultiply_slot(x: TensorElement, slot: int) -> TensorElement:
    """Apply Delta to one tensor slot (e.g. (Delta (x) id) for slot 0)."""
    return x.apply_slot(slot, comultiply_key, 2)


def counit_slot(x: TensorElement, slot: int) -> TensorElement:
    return x.apply_slot(slot, lambda key: {(): counit_key(key)}, 0)


def check_degree_bookkeeping(m: Monomial) -> bool:
    """Degree conditions on the cross terms of Delta(m) = m (x) m_t + sum_q ...

    Every term other than m (x) m_t has the form m'_u m_t (x) m''_u m_t with
    deg_u m'_u < deg_u m and deg_u m'_u + deg_u m''_u = deg_u m.
    """
    if m.deg_u == 0:
        raise RingError("deg_u m = 0: Delta(m) has no cross terms")
    unit = Monomial(m.t_exps, m.u_exps)
    delta = comultiply(unit)
    lead = (unit.key, unit.m_t.key)
    if delta.terms.get(lead) != 1:
        return False
    for (left, right), c in delta.terms.items():
        if (left, right) == lead:
            continue
        if left[0] != m.t_exps or right[0] != m.t_exps:
            return False
        if not deg_u(left) < m.deg_u:
            return False
        if deg_u(left) + deg_u(right) != m.deg_u:
            return False
    return True


# ---------------------------------------------------------------------------
# symmetrizers

@dataclass(frozen=True)
class SymmetrizerContext:
    """Block structure r = (r_1, ..., r_n) of the tensor power A^{(x) r_lambda}."""

    r: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        if any(x < 0 for x in self.r):
            raise RingError("block sizes must be nonnegative")
        if not any(self.r):
            raise RingError("r_lambda must be positive")

    @property
    def r_lambda(self) -> int:
        return sum(self.r)

    def block(self, i: int) -> range:
        """Slots of block i (1-based)."""
        start = sum(self.r[: i - 1])
        return range(start, start + self.r[i - 1])

    @property
    def blocks(self) -> List[range]:
        return [self.block(i) for i in range(1, len(self.r) + 1)]


def sym_element(ctx: SymmetrizerContext, i: int, a: RingElement) -> TensorElement:
    """sym^i_lambda(a): the sum of a placed in each slot of block i, 1 elsewhere."""
    if not 1 <= i <= len(ctx.r):
        raise RingError(f"block index {i} out of range")
    if ctx.r[i - 1] == 0:
        raise RingError(f"block {i} is empty (r_{i} = 0)")
    one = RingElement.constant(a.k, a.l)
    total = TensorElement(ctx.r_lambda, a.k, a.l)
    for slot in ctx.block(i):
        factors = [one] * ctx.r_lambda
        factors[slot] = a
        total = total + TensorElement.pure(factors)
    return total


def is_block_invariant(ctx: SymmetrizerContext, x: TensorElement) -> bool:
    """Fixed by every adjacent transposition inside each block."""
    if x.order != ctx.r_lambda:
        raise RingError("tensor order does not match r_lambda")
    for blk in ctx.blocks:
        for s in list(blk)[:-1]:
            perm = list(range(x.order))
            perm[s], perm[s + 1] = perm[s + 1], perm[s]
            if x.permute(perm) != x:
                return False
    return True


# ---------------------------------------------------------------------------
# binomial matrix C(N, K)

def binom_matrix(N: int, K: int) -> List[List[int]]:
    """C(N, K) = (binom(K + N - s, r))_{0 <= s, r <= N}."""
    if N < 0 or K < 0:
        raise ValueError("N and K must be nonnegative")
    return [[comb(K + N - s, r) for r in range(N + 1)] for s in range(N + 1)]


def binom_matrix_det(N: int, K: int) -> int:
    return bareiss_det(binom_matrix(N, K))


def predicted_binom_det(N: int) -> int:
    return -1 if (N * (N + 1) // 2) % 2 else 1


# ---------------------------------------------------------------------------
# shift automorphisms

@dataclass(frozen=True)
class ShiftAutomorphism:
    """phi: t_s -> scale_s * t_s, u_r -> u_r + shift_r.

    phi maps the base ideal I = (t_s - 1, u_r) to the ideal of ``image_point``
    = (1 / scale_s, -shift_r); more generally the ideal of a point p goes to
    the ideal of ``point_map(p)``.
    """

    scale: Tuple[Fraction, ...]
    shift: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "scale", tuple(Fraction(c) for c in self.scale))
        object.__setattr__(self, "shift", tuple(Fraction(b) for b in self.shift))
        if any(c == 0 for c in self.scale):
            raise RingError("t-coordinates must be nonzero (t_s is a unit)")

    @property
    def k(self) -> int:
        return len(self.scale)

    @property
    def l(self) -> int:
        return len(self.shift)

    def is_identity(self) -> bool:
        return all(c == 1 for c in self.scale) and not any(self.shift)

    def inverse(self) -> "ShiftAutomorphism":
        return ShiftAutomorphism(tuple(1 / c for c in self.scale), tuple(-b for b in self.shift))

    def __call__(self, x: RingElement) -> RingElement:
        if (x.k, x.l) != (self.k, self.l):
            raise RingError("automorphism applied to an element of another ring")
        out = RingElement(x.k, x.l)
        for (te, ue), c in x.terms.items():
            term = RingElement(x.k, x.l, {(te, (0,) * x.l): c * _prod(cs ** e for cs, e in zip(self.scale, te))})
            for r, e in enumerate(ue):
                if e:
                    term = term * (RingElement.u(x.k, x.l, r + 1) + self.shift[r]) ** e
            out = out + term
        return out

    def point_map(self, t_point: Sequence, u_point: Sequence) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        """phi(m_p) = m_q; returns q."""
        return (
            tuple(Fraction(p) / c for p, c in zip(t_point, self.scale)),
            tuple(Fraction(p) - b for p, b in zip(u_point, self.shift)),
        )

    @property
    def image_point(self) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        return self.point_map((1,) * self.k, (0,) * self.l)


def _prod(xs: Iterable[Fraction]) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def shift_automorphism(k: int, l: int, target_point: Sequence) -> ShiftAutomorphism:
    """t_s -> c_s t_s, u_r -> u_r + b_r with (c, b) read off ``target_point``."""
    if len(target_point) != k + l:
        raise RingError(f"need {k + l} coordinates, got {len(target_point)}")
    return ShiftAutomorphism(tuple(target_point[:k]), tuple(target_point[k:]))


def automorphism_to_point(t_point: Sequence, u_point: Sequence) -> ShiftAutomorphism:
    """The shift automorphism with phi(I) equal to the maximal ideal of the given point."""
    if any(Fraction(p) == 0 for p in t_point):
        raise RingError("t-coordinates must be nonzero (t_s is a unit)")
    return ShiftAutomorphism(tuple(1 / Fraction(p) for p in t_point), tuple(-Fraction(p) for p in u_point))


def ideal_generators(t_point: Sequence, u_point: Sequence) -> List[RingElement]:
    """Generators t_s - p_s, u_r - q_r of the maximal ideal of a point."""
    k, l = len(t_point), len(u_point)
    gens = [RingElement.t(k, l, s + 1) - Fraction(p) for s, p in enumerate(t_point)]
    gens += [RingElement.u(k, l, r + 1) - Fraction(q) for r, q in enumerate(u_point)]
    return gens


def monomials_in_window(k: int, l: int, max_u: int, max_t: int) -> List[MonoKey]:
    """Monomials with total u-degree <= max_u and every |t-exponent| <= max_t."""
    t_parts = list(product(range(-max_t, max_t + 1), repeat=k))
    u_parts = [ue for ue in product(range(max_u + 1), repeat=l) if sum(ue) <= max_u]
    keys = [(te, ue) for te in t_parts for ue in u_parts]
    return sorted(keys, key=lambda key: (deg_u(key), key[1], abs(deg_t(key)), key[0]))
