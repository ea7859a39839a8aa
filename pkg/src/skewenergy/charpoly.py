"""Exact integer characteristic polynomials of skew-adjacency matrices.

For an antisymmetric integer matrix S the polynomial det(xI - S) has
zero coefficients at every odd power-offset and nonnegative ones at
even offsets, so only the even-offset coefficients are stored:
coeffs[i] is the coefficient of x^(n-2i).  (The alternating-sign
convention sum (-1)^k a_k x^(n-k) stores identical numbers, since the
odd terms vanish and (-1)^(2i) = 1; the two conventions agree on
everything kept here.)

The production algorithm is the trace recursion of Faddeev-LeVerrier
run over exact integers.  Every division it performs is checked to be
exact and the vanishing/nonnegativity structure is asserted; a
violation raises RuntimeError because it can only mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

import numpy as np

from .graphs import OrientedGraph, delete_arc, delete_vertices, skew_adjacency, underlying
from .subgraphs import arc_on_even_cycle

__all__ = [
    "SkewCharPoly",
    "QuasiOrder",
    "charpoly",
    "charpoly_delete_arc",
    "pendant_coefficients",
    "quasi_compare",
]


@dataclass(frozen=True)
class SkewCharPoly:
    """Even-offset coefficients (a_0, a_2, ..., a_{2*floor(n/2)}) of det(xI - S).

    Coefficients are exact Python integers; a_0 is always 1 and every
    stored coefficient is nonnegative.
    """

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"degree must be nonnegative, got {self.n}")
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        want = self.n // 2 + 1
        if len(coeffs) != want:
            raise ValueError(f"expected {want} even coefficients for n={self.n}, got {len(coeffs)}")
        if coeffs[0] != 1:
            raise ValueError(f"leading coefficient must be 1, got {coeffs[0]}")
        if any(c < 0 for c in coeffs):
            raise ValueError(f"negative coefficient in {coeffs}")

    def coefficient(self, i: int) -> int:
        """a_i, i.e. the coefficient of x^(n-i).  Odd i gives 0."""
        if not (0 <= i <= self.n):
            raise IndexError(f"coefficient index {i} outside [0, {self.n}]")
        return 0 if i % 2 else self.coeffs[i // 2]

    def line(self) -> str:
        """One-line serialization "n: a0 a2 a4 ..."."""
        return f"{self.n}: " + " ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_line(cls, text: str) -> "SkewCharPoly":
        head, _, rest = text.partition(":")
        try:
            n = int(head.strip())
            coeffs = tuple(int(tok) for tok in rest.split())
        except ValueError:
            raise ValueError(f"malformed coefficient line {text!r}") from None
        return cls(n, coeffs)


class QuasiOrder(Enum):
    STRICTLY_LESS = "StrictlyLess"
    STRICTLY_GREATER = "StrictlyGreater"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"


@lru_cache(maxsize=None)
def _int64_recursion_safe(n: int) -> bool:
    """Whether the trace recursion for an n x n {-1,0,1} matrix fits in int64.

    Entry bound: the k-th auxiliary matrix is sum_j c_j A^(k-1-j) with
    |c_j| <= C(n,j) * j^ceil(j/2) (Hadamard on principal minors) and
    |A^p| entries <= n^(p-1), so one more multiplication by A stays
    below n * max_k sum_j C(n,j) j^ceil(j/2) n^(k-1-j).
    """
    worst = 0
    for k in range(1, n + 1):
        total = 0
        for j in range(k):
            cj = comb(n, j) * j ** ((j + 1) // 2) if j else 1
            total += cj * n ** max(k - 1 - j, 0)
        worst = max(worst, n * total + comb(n, k) * k ** ((k + 1) // 2))
    return worst < 2**62


def _fl_coeffs(s: np.ndarray) -> list[int]:
    """All coefficients [c_0..c_n] of det(xI - S), exact.

    Uses int64 when the entry bound allows it, otherwise Python
    integers in an object array.  Raises RuntimeError on any non-exact
    division or if the terminating Cayley-Hamilton identity fails.
    """
    n = s.shape[0]
    if n == 0:
        return [1]
    work = s.astype(np.int64) if _int64_recursion_safe(n) else s.astype(object)
    ident = np.eye(n, dtype=work.dtype)
    coeffs = [1]
    am = work.dot(ident)
    for k in range(1, n + 1):
        t = int(np.trace(am))
        q, r = divmod(-t, k)
        if r:
            raise RuntimeError(
                f"non-exact division at recursion step {k} (trace {t}); this is a bug"
            )
        coeffs.append(q)
        if k < n:
            m = am + q * ident
            am = work.dot(m)
    residual = am + coeffs[-1] * ident
    if not np.equal(residual, 0).all():
        raise RuntimeError("Cayley-Hamilton residual is nonzero; this is a bug")
    return [int(c) for c in coeffs]


def _fl_even_coeffs_batch(s: np.ndarray) -> np.ndarray:
    """Even coefficients for a (B, n, n) int64 stack of skew matrices.

    Same recursion as the scalar path, vectorized over the batch axis.
    The caller is responsible for n passing _int64_recursion_safe.
    """
    b, n, _ = s.shape
    out = np.empty((b, n // 2 + 1), dtype=np.int64)
    out[:, 0] = 1
    ident = np.eye(n, dtype=np.int64)
    am = s.copy()
    q = np.zeros(b, dtype=np.int64)
    for k in range(1, n + 1):
        t = np.einsum("bii->b", am)
        if np.any((-t) % k):
            raise RuntimeError(f"non-exact division at recursion step {k}; this is a bug")
        q = (-t) // k
        if k % 2:
            if np.any(q):
                raise RuntimeError(f"nonzero odd coefficient at step {k}; this is a bug")
        else:
            out[:, k // 2] = q
        if k < n:
            m = am + q[:, None, None] * ident
            am = s @ m
    if not np.all(am + q[:, None, None] * ident == 0):
        raise RuntimeError("Cayley-Hamilton residual is nonzero; this is a bug")
    if np.any(out < 0):
        raise RuntimeError("negative even coefficient; this is a bug")
    return out


def charpoly(g: OrientedGraph) -> SkewCharPoly:
    """Exact even-offset coefficients of det(xI - S(g))."""
    cs = _fl_coeffs(skew_adjacency(g))
    for k in range(1, g.n + 1, 2):
        if cs[k] != 0:
            raise RuntimeError(f"odd coefficient a_{k} = {cs[k]} is nonzero; this is a bug")
    even = tuple(cs[k] for k in range(0, g.n + 1, 2))
    if any(c < 0 for c in even):
        raise RuntimeError(f"negative even coefficient in {even}; this is a bug")
    if g.n >= 2 and even[1] != g.m:
        raise RuntimeError(f"a_2 = {even[1]} does not equal the arc count {g.m}; this is a bug")
    return SkewCharPoly(g.n, even)


def _coeff_or_zero(p: SkewCharPoly, i: int) -> int:
    if i < 0 or i > p.n:
        return 0
    return p.coefficient(i)


def charpoly_delete_arc(g: OrientedGraph, arc: tuple[int, int]) -> SkewCharPoly:
    """Assemble charpoly(g) from the deletion identity for an arc on no even cycle.

    For such an arc e=(u,v): det(xI - S(g)) equals the polynomial of
    g - e plus the polynomial of g - u - v, aligned by powers of x.
    The arc must be present and must avoid every even cycle; both
    conditions are checked.
    """
    u, v = int(arc[0]), int(arc[1])
    if (u, v) not in g.arc_set:
        raise ValueError(f"arc ({u},{v}) is not present in the graph")
    if arc_on_even_cycle(g, (u, v)):
        raise ValueError(
            f"arc ({u},{v}) lies on an even cycle; the deletion identity does not apply"
        )
    minus_arc = charpoly(delete_arc(g, (u, v)))
    if g.n == 2:
        minus_ends = SkewCharPoly(0, (1,))
    else:
        minus_ends = charpoly(delete_vertices(g, (u, v)))
    coeffs = tuple(
        _coeff_or_zero(minus_arc, 2 * i) + _coeff_or_zero(minus_ends, 2 * (i - 1))
        for i in range(g.n // 2 + 1)
    )
    return SkewCharPoly(g.n, coeffs)


def pendant_coefficients(g: OrientedGraph, u: int, v: int) -> SkewCharPoly:
    """Assemble charpoly(g) from the pendant recurrence at leaf v attached to u.

    a_i(g) = a_i(g - v) + a_{i-2}(g - v - u), indices read within each
    graph's own degree.
    """
    u, v = int(u), int(v)
    adj = underlying(g).adjacency_sets()
    if not (0 <= v < g.n) or adj[v] != {u}:
        raise ValueError(f"vertex {v} is not a pendant vertex attached to {u}")
    minus_leaf = charpoly(delete_vertices(g, (v,)))
    if g.n == 2:
        minus_both = SkewCharPoly(0, (1,))
    else:
        minus_both = charpoly(delete_vertices(g, (v, u)))
    coeffs = tuple(
        _coeff_or_zero(minus_leaf, 2 * i) + _coeff_or_zero(minus_both, 2 * i - 2)
        for i in range(g.n // 2 + 1)
    )
    return SkewCharPoly(g.n, coeffs)


def quasi_compare(p: SkewCharPoly, q: SkewCharPoly) -> QuasiOrder:
    """Componentwise comparison of two equal-degree coefficient vectors."""
    if p.n != q.n:
        raise ValueError(f"only polynomials of equal degree compare; got n={p.n} and n={q.n}")
    le = all(a <= b for a, b in zip(p.coeffs, q.coeffs))
    ge = all(a >= b for a, b in zip(p.coeffs, q.coeffs))
    if le and ge:
        return QuasiOrder.EQUIVALENT
    if le:
        return QuasiOrder.STRICTLY_LESS
    if ge:
        return QuasiOrder.STRICTLY_GREATER
    return QuasiOrder.INCOMPARABLE
