"""Sparse integer polynomials with per-variable exponent caps.

Terms live in a dict keyed by a packed exponent vector: variable ``v`` owns
bits ``[v*width, (v+1)*width)`` of a Python int. Capped products drop every
intermediate term that exceeds a cap; this is exact on the capped region
because multiplying by further factors never lowers an exponent.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from .errors import ExceedsCaps

INF = None  # unbounded cap


def _normalize_caps(caps, n: int) -> tuple:
    if caps is None:
        return (None,) * n
    if isinstance(caps, int):
        return (caps,) * n
    if isinstance(caps, Mapping):
        return tuple(caps.get(v) for v in range(n))
    caps = tuple(caps)
    if len(caps) != n:
        raise ValueError(f"cap vector has length {len(caps)}, expected {n}")
    return caps


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _width(max_exp: int) -> int:
    return max(4, max_exp.bit_length())


class SparsePolynomial:
    """Immutable sparse polynomial in ``n`` variables over the integers."""

    __slots__ = ("n", "caps", "ordering", "_terms", "_width")

    def __init__(self, n: int, terms=None, caps=None, ordering=None, *, _packed=None, _width=None):
        self.n = n
        self.caps = _normalize_caps(caps, n)
        self.ordering = tuple(range(n)) if ordering is None else tuple(ordering)
        if _packed is not None:
            self._terms = _packed
            self._width = _width
            return
        terms = dict(terms or {})
        max_exp = max((max(e) for e in terms if len(e)), default=0)
        self._width = _width_for(max_exp, self.caps)
        packed = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent vector {e} has wrong length")
            if c == 0 or not self._in_caps(e):
                continue
            k = self._pack(e)
            packed[k] = packed.get(k, 0) + c
        self._terms = {k: c for k, c in packed.items() if c}

    # -- packing -------------------------------------------------------
    def _pack(self, e: Sequence[int]) -> int:
        w = self._width
        key = 0
        for v, x in enumerate(e):
            key |= x << (w * v)
        return key

    def _unpack(self, key: int) -> tuple:
        w = self._width
        mask = (1 << w) - 1
        return tuple((key >> (w * v)) & mask for v in range(self.n))

    def _in_caps(self, e: Sequence[int]) -> bool:
        return all(c is None or x <= c for x, c in zip(e, self.caps))

    # -- constructors --------------------------------------------------
    @classmethod
    def one(cls, n: int, caps=None, ordering=None) -> "SparsePolynomial":
        return cls(n, {(0,) * n: 1}, caps, ordering)

    @classmethod
    def variable(cls, n: int, v: int, caps=None) -> "SparsePolynomial":
        e = [0] * n
        e[v] = 1
        return cls(n, {tuple(e): 1}, caps)

    # -- views ---------------------------------------------------------
    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        """``(exponent_tuple, coefficient)`` pairs, unordered."""
        for k, c in self._terms.items():
            yield self._unpack(k), c

    def terms(self) -> dict:
        return dict(self.items())

    def sorted_terms(self) -> list:
        return sorted(self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.n == other.n and self.terms() == other.terms()

    def __repr__(self) -> str:
        return f"SparsePolynomial(n={self.n}, terms={len(self)})"

    def __str__(self) -> str:
        return format_terms(self.sorted_terms())

    def coefficient(self, e: Sequence[int]) -> int:
        e = tuple(e)
        if len(e) != self.n:
            raise ValueError(f"exponent vector {e} has wrong length")
        if not self._in_caps(e):
            raise ExceedsCaps(f"{e} lies outside caps {self.caps}")
        if max(e, default=0) >= 1 << self._width:
            return 0
        return self._terms.get(self._pack(e), 0)

    def total_degrees(self) -> set:
        return {sum(e) for e, _ in self.items()}

    def evaluate(self, values: Sequence[int]) -> int:
        total = 0
        for e, c in self.items():
            t = c
            for x, p in zip(values, e):
                if p:
                    t *= x**p
            total += t
        return total

    def dump(self) -> str:
        """One ``<coeff> <e0> ... <en-1>`` line per term, lexicographic order."""
        return "".join(
            f"{c} " + " ".join(map(str, e)) + "\n" for e, c in self.sorted_terms()
        )

    # -- arithmetic ----------------------------------------------------
    def _repacked(self, width: int) -> dict:
        if width == self._width:
            return self._terms
        out = {}
        for e, c in self.items():
            key = 0
            for v, x in enumerate(e):
                key |= x << (width * v)
            out[key] = c
        return out

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(
            self.n, caps=self.caps, ordering=self.ordering,
            _packed={k: -c for k, c in self._terms.items()}, _width=self._width,
        )

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        caps = tuple(_min_cap(a, b) for a, b in zip(self.caps, other.caps))
        terms = dict(self.terms())
        for e, c in other.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePolynomial(self.n, terms, caps, self.ordering)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return multiply(self, other)

    def times_linear(self, a: int, b: int) -> "SparsePolynomial":
        """Capped product with ``(x_a - x_b)``."""
        width = self._width
        top = max((max(e) for e, _ in self.items()), default=0)
        if top + 1 >= 1 << width:
            width = _width(top + 2)
        terms = _times_linear(self._repacked(width), a, b, width, self.caps)
        return SparsePolynomial(self.n, caps=self.caps, ordering=self.ordering, _packed=terms, _width=width)


def _width_for(max_exp: int, caps) -> int:
    bound = max_exp
    for c in caps:
        if c is not None:
            bound = max(bound, c)
    return _width(bound + 1)


def _times_linear(terms: dict, a: int, b: int, width: int, caps) -> dict:
    sa, sb = width * a, width * b
    mask = (1 << width) - 1
    ca, cb = caps[a], caps[b]
    inc_a, inc_b = 1 << sa, 1 << sb
    out: dict = {}
    get = out.get
    for key, c in terms.items():
        if ca is None or ((key >> sa) & mask) < ca:
            k = key + inc_a
            out[k] = get(k, 0) + c
        if cb is None or ((key >> sb) & mask) < cb:
            k = key + inc_b
            out[k] = get(k, 0) - c
    return {k: c for k, c in out.items() if c}


def multiply(p: SparsePolynomial, q: SparsePolynomial, caps=None) -> SparsePolynomial:
    """Capped product; the result's caps never exceed those of either factor."""
    if p.n != q.n:
        raise ValueError("factors live in different variable sets")
    n = p.n
    caps = _normalize_caps(caps, n)
    caps = tuple(_min_cap(_min_cap(c, a), b) for c, a, b in zip(caps, p.caps, q.caps))
    pmax = max((max(e) for e, _ in p.items()), default=0)
    qmax = max((max(e) for e, _ in q.items()), default=0)
    width = _width_for(pmax + qmax, caps)
    pt, qt = p._repacked(width), q._repacked(width)
    mask = (1 << width) - 1
    capped = [(v * width, c) for v, c in enumerate(caps) if c is not None]
    out: dict = {}
    for kp, cp in pt.items():
        for kq, cq in qt.items():
            k = kp + kq
            if any(((k >> s) & mask) > c for s, c in capped):
                continue
            out[k] = out.get(k, 0) + cp * cq
    return SparsePolynomial(
        n, caps=caps, ordering=p.ordering,
        _packed={k: c for k, c in out.items() if c}, _width=width,
    )


def _factor_order(n: int, edges, caps) -> list:
    """Edge order that exhausts tightly capped vertices first."""
    big = float("inf")
    rank = sorted(range(n), key=lambda v: (big if caps[v] is None else caps[v], v))
    done = set()
    order = []
    for v in rank:
        for e in edges:
            if e not in done and v in e:
                done.add(e)
                order.append(e)
    return order


def graph_polynomial(g, ordering: Optional[Sequence[int]] = None, caps=None) -> SparsePolynomial:
    """Capped expansion of ``prod (x_a - x_b)`` over edges, ``a`` before ``b`` in ``ordering``.

    ``g`` only needs ``n`` and ``edges``. The default ordering is vertex index order.
    """
    n = g.n
    caps = _normalize_caps(caps, n)
    ordering = tuple(range(n)) if ordering is None else tuple(ordering)
    if sorted(ordering) != list(range(n)):
        raise ValueError("ordering must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(ordering)}
    deg = [0] * n
    for a, b in g.edges:
        deg[a] += 1
        deg[b] += 1
    width = _width_for(max(deg, default=0), caps)
    terms = {0: 1}
    for a, b in _factor_order(n, sorted(g.edges), caps):
        if pos[a] > pos[b]:
            a, b = b, a
        terms = _times_linear(terms, a, b, width, caps)
        if not terms:
            break
    return SparsePolynomial(n, caps=caps, ordering=ordering, _packed=terms, _width=width)


def coefficient(p: SparsePolynomial, e: Sequence[int]) -> int:
    return p.coefficient(e)


def find_monomial(
    p: SparsePolynomial,
    zero_set: Iterable[int] = (),
    bound=None,
) -> Optional[tuple[tuple, int]]:
    """Lexicographically smallest nonzero term vanishing on ``zero_set`` and within ``bound``."""
    zeros = tuple(zero_set)
    bound = _normalize_caps(bound, p.n)
    best = None
    for e, c in p.items():
        if any(e[v] for v in zeros):
            continue
        if any(b is not None and x > b for x, b in zip(e, bound)):
            continue
        if best is None or e < best[0]:
            best = (e, c)
    return best


def format_terms(terms, names: Optional[Sequence[str]] = None) -> str:
    """Human-readable rendering, e.g. ``x0^2*x1 - x0^2*x2``."""
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        mono = "*".join(
            (names[v] if names else f"x{v}") + (f"^{x}" if x > 1 else "")
            for v, x in enumerate(e) if x
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def parse_dump(text: str) -> SparsePolynomial:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty dump; the number of variables is unknown")
    n = len(rows[0]) - 1
    return SparsePolynomial(n, {tuple(map(int, r[1:])): int(r[0]) for r in rows})
