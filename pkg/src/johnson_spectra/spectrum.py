"""Exact spectra of Johnson graphs G(n, r, s) and checks of known eigenvalue bounds.

Vertices of G(n, r, s) are the 0/1 vectors of length n and weight r; two are
adjacent when their inner product equals s. For r <= n/2 the distinct
eigenvalues are the Eberlein values E_{r-s}(i), i = 0..r, with multiplicity
C(n, i) - C(n, i-1). Everything here is integer or Fraction arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .exactmath import binom

__all__ = [
    "GraphParams",
    "DegenerateGraphError",
    "SpectrumEntry",
    "Spectrum",
    "BoundReport",
    "ScanError",
    "ScanResult",
    "THEOREMS",
    "as_params",
    "canonicalize",
    "degree",
    "eigenvalue_formula_a",
    "eigenvalue_formula_b",
    "full_spectrum",
    "lemma6_coefficient",
    "lemma6_residual",
    "lemma6_domain",
    "verify_bound",
    "scan_bounds",
]


class DegenerateGraphError(ValueError):
    """Raised when G(n, r, s) has no edges (2r - s > n)."""


@dataclass(frozen=True, order=True)
class GraphParams:
    """A validated triple (n, r, s) with 0 <= s < r <= n."""

    n: int
    r: int
    s: int

    def __post_init__(self):
        for name in ("n", "r", "s"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, int):
                raise TypeError(f"{name} must be an int, got {val!r}")
        if self.n < 1:
            raise ValueError(f"invalid G({self.n},{self.r},{self.s}): need n >= 1")
        if self.r < 1:
            raise ValueError(f"invalid G({self.n},{self.r},{self.s}): need r >= 1")
        if self.s < 0:
            raise ValueError(f"invalid G({self.n},{self.r},{self.s}): need s >= 0")
        if self.s >= self.r:
            raise ValueError(f"invalid G({self.n},{self.r},{self.s}): need s < r")
        if self.r > self.n:
            raise ValueError(f"invalid G({self.n},{self.r},{self.s}): need r <= n")

    @property
    def k(self) -> int:
        return self.r - self.s

    @property
    def is_canonical(self) -> bool:
        return 2 * self.r <= self.n

    @property
    def degenerate(self) -> bool:
        return 2 * self.r - self.s > self.n

    @property
    def vertex_count(self) -> int:
        return binom(self.n, self.r)

    def __str__(self):
        return f"G({self.n},{self.r},{self.s})"


ParamsLike = Union[GraphParams, Sequence[int]]


def as_params(p: ParamsLike) -> GraphParams:
    if isinstance(p, GraphParams):
        return p
    n, r, s = p
    return GraphParams(int(n), int(r), int(s))


def canonicalize(params: ParamsLike) -> GraphParams:
    """Map to the isomorphic G(n, n-r, n-2r+s) when r > n/2.

    Complementing every vector sends weight r to n - r and inner product s to
    n - 2r + s. Degenerate (edgeless) triples have no valid complement and are
    returned unchanged; check ``.degenerate`` on the result.
    """
    p = as_params(params)
    if p.is_canonical or p.degenerate:
        return p
    return GraphParams(p.n, p.n - p.r, p.n - 2 * p.r + p.s)


def degree(params: ParamsLike) -> int:
    """C(r, s) * C(n - r, r - s); zero for edgeless triples."""
    p = as_params(params)
    return binom(p.r, p.s) * binom(p.n - p.r, p.r - p.s)


def _check_index(p: GraphParams, i: int) -> None:
    if not p.is_canonical:
        raise ValueError(f"{p} is not canonical (need r <= n/2); call canonicalize() first")
    if not 0 <= i <= p.r:
        raise ValueError(f"eigenvalue index i={i} outside [0, {p.r}] for {p}")


def eigenvalue_formula_a(params: ParamsLike, i: int) -> int:
    """E_{r-s}(i) = sum_j (-1)^(k-j) C(r-j, k-j) C(r-i, j) C(n-r+j-i, j)."""
    p = as_params(params)
    _check_index(p, i)
    n, r, k = p.n, p.r, p.k
    total = 0
    for j in range(k + 1):
        term = binom(r - j, k - j) * binom(r - i, j) * binom(n - r + j - i, j)
        total += -term if (k - j) & 1 else term
    return total


def eigenvalue_formula_b(params: ParamsLike, i: int) -> int:
    """E_{r-s}(i) = sum_j (-1)^j C(i, j) C(r-i, k-j) C(n-r-i, k-j).

    Only j <= min(i, k) contribute, so this is the cheaper of the two sums.
    """
    p = as_params(params)
    _check_index(p, i)
    n, r, k = p.n, p.r, p.k
    total = 0
    for j in range(min(i, k) + 1):
        term = binom(i, j) * binom(r - i, k - j) * binom(n - r - i, k - j)
        if j & 1:
            total -= term
        else:
            total += term
    return total


@dataclass(frozen=True)
class SpectrumEntry:
    index: int
    value: int
    multiplicity: int


@dataclass(frozen=True)
class Spectrum:
    params: GraphParams
    entries: tuple[SpectrumEntry, ...]
    degree: int
    lam: int
    argmax: int

    @property
    def values(self) -> list[int]:
        return [e.value for e in self.entries]

    @property
    def multiplicities(self) -> list[int]:
        return [e.multiplicity for e in self.entries]

    def merged(self) -> list[tuple[int, int]]:
        """(value, total multiplicity) pairs, largest value first."""
        acc: dict[int, int] = {}
        for e in self.entries:
            acc[e.value] = acc.get(e.value, 0) + e.multiplicity
        return sorted(acc.items(), reverse=True)

    def moment(self, k: int) -> int:
        """sum_i mult_i * E(i)^k, which equals tr(A^k)."""
        return sum(e.multiplicity * e.value**k for e in self.entries)


def full_spectrum(params: ParamsLike) -> Spectrum:
    """All eigenvalues E_{r-s}(0..r) with multiplicities, plus lambda(G).

    Non-canonical input is canonicalized first, so ``result.params`` may differ
    from the argument. lambda is the largest |E(i)| over i >= 1, ties going to
    the smallest i.
    """
    p = canonicalize(params)
    if p.degenerate:
        raise DegenerateGraphError(
            f"{as_params(params)} has no edges (2r - s > n): every eigenvalue is 0 "
            f"with multiplicity C(n, r) = {p.vertex_count}, lambda = 0"
        )
    entries = []
    prev = 0
    for i in range(p.r + 1):
        cur = binom(p.n, i)
        entries.append(SpectrumEntry(i, eigenvalue_formula_b(p, i), cur - prev))
        prev = cur
    lam, argmax = 0, 1
    for e in entries[1:]:
        if abs(e.value) > lam:
            lam, argmax = abs(e.value), e.index
    return Spectrum(p, tuple(entries), entries[0].value, lam, argmax)


def lemma6_coefficient(params: ParamsLike, i: int, j: int) -> int:
    """C_{n,r,s}(i, j) = C(i, j) C(r-i, r-s-j) C(n-r-i, r-s-j), zero off range."""
    p = as_params(params)
    if i < 0 or i > p.r or p.n - p.r - i < 0:
        raise ValueError(f"coefficient index i={i} out of range for {p}")
    t = p.r - p.s - j
    return binom(i, j) * binom(p.r - i, t) * binom(p.n - p.r - i, t)


def lemma6_residual(params: ParamsLike, i: int, j: int) -> Fraction:
    """LHS minus RHS of the one-step recurrence for C_{n,r,s}(i, j) in i.

    C(i, j) = (r-s-j+1)^2 / D * C(i-1, j-1)
              + (s-i+j+1)(n-2r+s+j-i+1) / D * C(i-1, j),
    with D = (r-i+1)(n-r-i+1). The identity is exact, so the result is 0.
    """
    p = as_params(params)
    n, r, s = p.n, p.r, p.s
    if not 1 <= i <= r:
        raise ValueError(f"need 1 <= i <= r, got i={i} for {p}")
    if not 0 <= j <= i:
        raise ValueError(f"need 0 <= j <= i, got j={j}, i={i}")
    denom = (r - i + 1) * (n - r - i + 1)
    if denom <= 0:
        raise ValueError(f"recurrence denominator vanishes at i={i} for {p}")
    lhs = lemma6_coefficient(p, i, j)
    rhs = Fraction((r - s - j + 1) ** 2, denom) * lemma6_coefficient(p, i - 1, j - 1)
    rhs += Fraction((s - i + j + 1) * (n - 2 * r + s + j - i + 1), denom) * lemma6_coefficient(p, i - 1, j)
    return lhs - rhs


def lemma6_domain(params: ParamsLike) -> Iterable[tuple[int, int]]:
    """Every (i, j) at which :func:`lemma6_residual` is defined."""
    p = as_params(params)
    for i in range(1, p.r + 1):
        if p.n - p.r - i + 1 <= 0:
            break
        for j in range(i + 1):
            yield i, j


# -- bound verification -------------------------------------------------------

THEOREMS = ("lovasz", "brouwer", "t4", "t5.1", "t5.2", "t5.3", "main")

# Index at which each theorem locates lambda, where it names one.
_CLAIMED_INDEX = {"brouwer": 1, "t4": 2, "t5.1": 1}


@dataclass(frozen=True)
class BoundReport:
    """One theorem evaluated on one parameter triple.

    ``normalizer`` is the quantity lambda is divided by to get ``ratio``; for
    exact theorems it equals ``predicted``. ``claim_holds`` is None when the
    statement is asymptotic and has no pointwise content.
    """

    theorem: str
    params: GraphParams
    applicable: bool
    actual: int
    degree: int
    argmax: int
    predicted: Optional[Fraction] = None
    normalizer: Optional[Fraction] = None
    ratio: Optional[Fraction] = None
    claimed_index: Optional[int] = None
    claim_holds: Optional[bool] = None
    identity_holds: Optional[bool] = None
    alpha: Optional[Fraction] = None
    note: str = ""


def _ratio(lam: int, norm: Optional[Fraction]) -> Optional[Fraction]:
    if norm is None or norm == 0:
        return None
    return Fraction(lam) / norm


def _coerce_alpha(alpha) -> Fraction:
    if isinstance(alpha, float):
        raise TypeError("alpha must be exact (Fraction, int or 'p/q' string), not float")
    a = Fraction(alpha)
    if not 0 < a < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {a}")
    return a


def verify_bound(params: ParamsLike, theorem: str, alpha=None) -> BoundReport:
    """Evaluate one eigenvalue statement against the exact lambda.

    Theorem ids: ``lovasz`` (s = 0), ``brouwer`` ((r-s)(n-1) >= r(n-r)),
    ``t4`` (n = 4s, r = 2s), ``t5.1``/``t5.2``/``t5.3`` (asymptotic ratio
    reports) and ``main`` (needs ``alpha``). An inapplicable theorem gives a
    report with ``applicable=False`` and no prediction.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    given = as_params(params)
    spec = full_spectrum(given)
    p = spec.params
    n, r, s = p.n, p.r, p.s
    d, lam = spec.degree, spec.lam
    base = dict(theorem=theorem, params=p, actual=lam, degree=d, argmax=spec.argmax)
    claimed = _CLAIMED_INDEX.get(theorem)

    def holds_at(idx: int) -> bool:
        return idx <= r and abs(spec.entries[idx].value) == lam

    if theorem == "lovasz":
        if s != 0:
            return BoundReport(applicable=False, note="requires s = 0", **base)
        pred = Fraction(r, n - r) * d
        return BoundReport(applicable=True, predicted=pred, normalizer=pred,
                           ratio=_ratio(lam, pred), claim_holds=lam == pred, **base)

    if theorem == "brouwer":
        if (r - s) * (n - 1) < r * (n - r):
            return BoundReport(applicable=False, claimed_index=claimed,
                               note="requires (r-s)(n-1) >= r(n-r)", **base)
        pred = Fraction(abs(s * n - r * r), r * (n - r)) * d
        e1 = abs(spec.entries[1].value)
        ok = lam == pred and spec.argmax == 1
        return BoundReport(applicable=True, predicted=pred, normalizer=pred,
                           ratio=_ratio(lam, pred), claimed_index=claimed,
                           claim_holds=ok, identity_holds=e1 == pred, **base)

    if theorem == "t4":
        if not (s >= 1 and n == 4 * s and r == 2 * s):
            return BoundReport(applicable=False, claimed_index=claimed,
                               note="requires (n, r, s) = (4t, 2t, t)", **base)
        pred = Fraction(4 * s - 2, s * s) * binom(2 * s - 2, s - 1) ** 2
        e2 = abs(spec.entries[2].value)
        chain = e2 == pred == Fraction(spec.entries[0].value, 4 * s - 2)
        return BoundReport(applicable=True, predicted=pred, normalizer=pred,
                           ratio=_ratio(lam, pred), claimed_index=claimed,
                           claim_holds=holds_at(2), identity_holds=chain, **base)

    if theorem in ("t5.1", "t5.3"):
        if s < 1:
            return BoundReport(applicable=False, claimed_index=claimed,
                               note="requires r > s >= 1", **base)
        norm = Fraction(s, r) * d
        holds = None
        if theorem == "t5.1":
            # lambda = E_{r-s}(1) itself, not just in absolute value
            holds = spec.entries[1].value == lam
        return BoundReport(applicable=True, predicted=norm, normalizer=norm,
                           ratio=_ratio(lam, norm), claimed_index=claimed,
                           claim_holds=holds, note="asymptotic; ratio trend only", **base)

    if theorem == "t5.2":
        norm = Fraction(d)
        return BoundReport(applicable=True, normalizer=norm, ratio=_ratio(lam, norm),
                           note="lambda = o(d); ratio trend only", **base)

    # main
    if alpha is None:
        raise ValueError("theorem 'main' needs alpha")
    a = _coerce_alpha(alpha)
    # f_r, f_s from the triple as given: the normalizer is invariant under the
    # joint complement (r, s, alpha) -> (n-r, n-2r+s, 1-alpha), not under r alone.
    gn, gr, gs = given.n, given.r, given.s
    f_r = gr - a * gn
    f_s = gs - a * a * gn
    m = max(Fraction(1), abs(f_s - 2 * a * f_r), f_r * f_r / gn)
    norm = Fraction(d) * m / gn
    return BoundReport(applicable=True, normalizer=norm, ratio=_ratio(lam, norm),
                       alpha=a, note=f"f_r={f_r}, f_s={f_s}, max-term={m}", **base)


@dataclass(frozen=True)
class ScanError:
    position: int
    item: object
    message: str


@dataclass
class ScanResult:
    theorem: str
    rows: list = field(default_factory=list)  # BoundReport or ScanError, input order
    threshold: Optional[GraphParams] = None
    threshold_position: Optional[int] = None

    @property
    def reports(self) -> list[BoundReport]:
        return [x for x in self.rows if isinstance(x, BoundReport)]

    @property
    def errors(self) -> list[ScanError]:
        return [x for x in self.rows if isinstance(x, ScanError)]

    @property
    def max_ratio(self) -> Optional[Fraction]:
        vals = [x.ratio for x in self.reports if x.applicable and x.ratio is not None]
        return max(vals) if vals else None


def scan_bounds(items: Iterable, theorem: str, alpha=None) -> ScanResult:
    """Run :func:`verify_bound` over a parameter list, collecting per-item errors.

    Items are triples/GraphParams or ``(triple, alpha)`` pairs; a bare triple
    uses the ``alpha`` argument. For t4 and t5.1 the result also records the
    first position from which the located index carries lambda for every
    later applicable item (an empirical threshold, not a certified one).
    """
    res = ScanResult(theorem)
    for pos, item in enumerate(items):
        it_alpha = alpha
        try:
            if (isinstance(item, tuple) and len(item) == 2
                    and not isinstance(item[0], int)):
                item, it_alpha = item
            res.rows.append(verify_bound(item, theorem, it_alpha))
        except (ValueError, TypeError) as exc:
            res.rows.append(ScanError(pos, item, str(exc)))

    if theorem in ("t4", "t5.1"):
        start = None
        for pos, row in enumerate(res.rows):
            if not isinstance(row, BoundReport) or not row.applicable:
                continue
            if row.claim_holds:
                if start is None:
                    start = pos
            else:
                start = None
        if start is not None:
            res.threshold_position = start
            res.threshold = res.rows[start].params
    return res
