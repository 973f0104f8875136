"""Weight combinatorics for Spin(n).

Dominance, the Weyl dimension formula, Casimir scalars, branching between
Spin(n+1) and Spin(n), tensor products with the vector and spinor
representations, and the ladder of spinor-valued-form components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, NotDominant, OutOfRange
from .exact import HalfInt, binomial


@dataclass(frozen=True)
class GroupId:
    """Label for Spin(n); rank and parity are derived, never stored."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("Spin(n) requires n >= 2")

    @property
    def rank(self) -> int:
        return self.n // 2

    @property
    def parity(self) -> str:
        return "B" if self.n % 2 else "D"

    def __str__(self):
        return f"Spin({self.n})"


@dataclass(frozen=True)
class Weight:
    """Highest weight: rank-many half-integers, all of one integrality class."""

    group: GroupId
    entries: tuple

    def __post_init__(self):
        entries = tuple(
            e if isinstance(e, HalfInt) else HalfInt.from_fraction(Fraction(e))
            for e in self.entries
        )
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.group.rank:
            raise ValueError(
                f"{self.group} weight needs {self.group.rank} entries, got {len(entries)}"
            )
        parities = {e.doubled % 2 for e in entries}
        if len(parities) > 1:
            raise ValueError("entries must be all integers or all strict half-integers")

    @property
    def doubled(self) -> tuple:
        return tuple(e.doubled for e in self.entries)

    def is_dominant(self) -> bool:
        d = self.doubled
        k = len(d)
        if any(d[i] < d[i + 1] for i in range(k - 1)):
            return False
        if self.group.parity == "B":
            return d[-1] >= 0
        if k >= 2:
            return d[-2] >= abs(d[-1])
        return True

    def check_dominant(self):
        if not self.is_dominant():
            raise NotDominant(f"{self} is not dominant for {self.group}")

    def __str__(self):
        return ",".join(str(e) for e in self.entries)


def weight_from_doubled(group: GroupId, doubled) -> Weight:
    return Weight(group, tuple(HalfInt(d) for d in doubled))


def parse_weight(group: GroupId, text: str) -> Weight:
    """Parse the CLI weight format, e.g. '3/2,3/2,1/2'."""
    return Weight(group, tuple(HalfInt.parse(p) for p in text.split(",")))


def rho(group: GroupId) -> tuple:
    """Half-sum of positive roots, as HalfInts."""
    k = group.rank
    if group.parity == "B":
        return tuple(HalfInt(2 * (k - i) + 1) for i in range(1, k + 1))
    return tuple(HalfInt(2 * (k - i)) for i in range(1, k + 1))


def _rho_doubled(group: GroupId):
    return tuple(r.doubled for r in rho(group))


def weyl_dim(w: Weight) -> int:
    """Weyl dimension formula for B_k / D_k, evaluated exactly."""
    w.check_dominant()
    k = w.group.rank
    r = _rho_doubled(w.group)
    a = tuple(d + rd for d, rd in zip(w.doubled, r))
    num = 1
    den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= (a[i] - a[j]) * (a[i] + a[j])
            den *= (r[i] - r[j]) * (r[i] + r[j])
    if w.group.parity == "B":
        for i in range(k):
            num *= a[i]
            den *= r[i]
    dim = Fraction(num, den)
    if dim.denominator != 1 or dim <= 0:
        raise ArithmeticError(f"Weyl formula gave non-positive-integer {dim} for {w}")
    return int(dim)


def casimir_scalar(w: Weight) -> Fraction:
    """<lambda, lambda + 2 rho> with the Euclidean pairing."""
    w.check_dominant()
    r = _rho_doubled(w.group)
    total = 0
    for d, rd in zip(w.doubled, r):
        total += d * (d + 2 * rd)
    return Fraction(total, 4)


def _range_doubled(lo: int, hi: int):
    """Doubled values from lo to hi inclusive, stepping by whole integers."""
    return range(lo, hi + 1, 2)


def branch_down(alpha: Weight) -> list:
    """All Spin(n) weights interlacing the Spin(n+1) weight alpha."""
    alpha.check_dominant()
    m = alpha.group.n
    target = GroupId(m - 1)
    a = alpha.doubled
    k = target.rank
    if m % 2 == 1:
        # B_k -> D_k: a1 >= l1 >= a2 >= ... >= ak >= |lk|
        ranges = [_range_doubled(a[i + 1], a[i]) for i in range(k - 1)]
        ranges.append(_range_doubled(-a[k - 1], a[k - 1]))
    else:
        # D_{k+1} -> B_k: a1 >= l1 >= a2 >= ... >= ak >= lk >= |a_{k+1}|
        ranges = [_range_doubled(a[i + 1], a[i]) for i in range(k - 1)]
        ranges.append(_range_doubled(abs(a[k]), a[k - 1]))
    return [weight_from_doubled(target, lam) for lam in itertools.product(*ranges)]


def branch_up(lam: Weight, a1_max: HalfInt) -> list:
    """All dominant Spin(n+1) weights alpha with alpha interlacing lam and
    alpha_1 <= a1_max."""
    lam.check_dominant()
    if not isinstance(a1_max, HalfInt):
        a1_max = HalfInt.from_fraction(Fraction(a1_max))
    n = lam.group.n
    target = GroupId(n + 1)
    d = lam.doubled
    k = len(d)
    if a1_max.doubled < d[0] or (a1_max.doubled - d[0]) % 2 != 0:
        # a1 must exceed lambda_1 and share its integrality class
        if a1_max.doubled < d[0]:
            return []
        raise ValueError("a1_max must be in the same integrality class as lam")
    ranges = [_range_doubled(d[0], a1_max.doubled)]
    if n % 2 == 0:
        # D_k -> B_k: alpha_i in [l_i, l_{i-1}], alpha_k in [|l_k|, l_{k-1}]
        ranges += [_range_doubled(d[i], d[i - 1]) for i in range(1, k - 1)]
        if k >= 2:
            ranges.append(_range_doubled(abs(d[k - 1]), d[k - 2]))
        elif k == 1:
            ranges = [_range_doubled(abs(d[0]), a1_max.doubled)]
    else:
        # B_k -> D_{k+1}: alpha_i in [l_i, l_{i-1}], alpha_{k+1} in [-l_k, l_k]
        ranges += [_range_doubled(d[i], d[i - 1]) for i in range(1, k)]
        ranges.append(_range_doubled(-d[k - 1], d[k - 1]))
    return [weight_from_doubled(target, al) for al in itertools.product(*ranges)]


@dataclass
class DecompositionReport:
    """Irreducible pieces of a tensor product plus the verified dimension sum."""

    factor_dims: tuple
    components: list  # (Weight, dimension, multiplicity)
    checked: bool = False
    cartan: Weight | None = None

    def total(self) -> int:
        return sum(dim * mult for _, dim, mult in self.components)


def _sorted_components(comps):
    return sorted(comps, key=lambda c: tuple(-d for d in c[0].doubled))


def tensor_vector(lam: Weight) -> DecompositionReport:
    """Decomposition of V_lam tensor the vector representation C_n."""
    lam.check_dominant()
    g = lam.group
    n, k = g.n, g.rank
    d = list(lam.doubled)
    candidates = []
    for i in range(k):
        for step in (2, -2):
            cand = d.copy()
            cand[i] += step
            w = weight_from_doubled(g, cand)
            if w.is_dominant():
                candidates.append(w)
    if g.parity == "B" and d[-1] > 0:
        candidates.append(lam)
    components = _sorted_components([(w, weyl_dim(w), 1) for w in candidates])
    report = DecompositionReport((weyl_dim(lam), n), components)
    if report.total() != n * weyl_dim(lam):
        raise DimensionMismatch(
            f"vector tensor rule failed for {lam}: {report.total()} != {n * weyl_dim(lam)}"
        )
    report.checked = True
    return report


def _spinor_weights_doubled(k: int):
    """All 2^k sign patterns (+-1/2, ..., +-1/2), doubled."""
    return itertools.product((1, -1), repeat=k)


def _dominant_chamber(v, parity: str):
    """Map v (doubled, regular) into the dominant chamber by the Weyl group.

    Returns (w(v), det w) or None when v is singular (fixed by a reflection).
    """
    k = len(v)
    absv = [abs(x) for x in v]
    if parity == "B":
        if 0 in absv or len(set(absv)) != k:
            return None
        flips = sum(1 for x in v if x < 0)
    else:
        if len(set(absv)) != k:
            return None
        flips = sum(1 for x in v if x < 0)
    order = sorted(range(k), key=lambda i: -absv[i])
    inversions = sum(
        1 for i in range(k) for j in range(i + 1, k) if order[i] > order[j]
    )
    perm_sign = -1 if inversions % 2 else 1
    out = [absv[i] for i in order]
    if parity == "B":
        det = perm_sign * (-1 if flips % 2 else 1)
    else:
        # D_k: only even numbers of sign flips; an odd count leaves the
        # smallest (last) coordinate negative. A zero coordinate flips freely.
        if flips % 2 and out[-1] != 0:
            out[-1] = -out[-1]
        det = perm_sign
    return tuple(out), det


def tensor_spinor(lam_prime: Weight) -> DecompositionReport:
    """Decomposition of S tensor V_{lam'} by the signed weight-shift rule.

    S is the full 2^{floor(n/2)}-dimensional spinor space (both chirality
    pieces in even dimensions). Each candidate lam' + mu is pushed to the
    dominant chamber with the reflection sign; surviving multiplicities must
    be positive, and the dimension sum is verified before returning.
    """
    lam_prime.check_dominant()
    g = lam_prime.group
    k = g.rank
    r = _rho_doubled(g)
    d = lam_prime.doubled
    counter: dict = {}
    for mu in _spinor_weights_doubled(k):
        v = tuple(d[i] + mu[i] + r[i] for i in range(k))
        res = _dominant_chamber(v, g.parity)
        if res is None:
            continue
        wv, det = res
        key = tuple(wv[i] - r[i] for i in range(k))
        counter[key] = counter.get(key, 0) + det
    components = []
    for key, mult in counter.items():
        if mult == 0:
            continue
        if mult < 0:
            raise DimensionMismatch(
                f"negative multiplicity {mult} for {key} in S x {lam_prime}"
            )
        w = weight_from_doubled(g, key)
        w.check_dominant()
        components.append((w, weyl_dim(w), mult))
    components = _sorted_components(components)
    dim_s = 2**k
    cartan = weight_from_doubled(g, tuple(x + 1 for x in d))
    report = DecompositionReport(
        (dim_s, weyl_dim(lam_prime)), components, cartan=cartan
    )
    if report.total() != dim_s * weyl_dim(lam_prime):
        raise DimensionMismatch(
            f"spinor tensor rule failed for {lam_prime}: "
            f"{report.total()} != {dim_s * weyl_dim(lam_prime)}"
        )
    if cartan.doubled not in {w.doubled for w, _, _ in components}:
        raise DimensionMismatch(f"Cartan product {cartan} missing in S x {lam_prime}")
    report.checked = True
    return report


def spinor_form_components(group: GroupId, k_form: int) -> list:
    """The ladder components of spinor-valued k-forms.

    Returns a list of (j, weights, dimension); for even n the two sign
    variants of each component are listed together and the dimension is
    their sum. Components for k_form above the middle mirror the lower ones
    (Hodge star symmetry). The dimension-sum identity
    sum_j dim = binomial(n, k_form) * 2^{floor(n/2)} is verified.
    """
    n, k = group.n, group.rank
    if not 0 <= k_form <= n:
        raise OutOfRange(f"k_form must be in [0, {n}], got {k_form}")
    j_max = k_form if k_form <= k else n - k_form
    out = []
    for j in range(j_max + 1):
        base = [3] * j + [1] * (k - j)
        if group.parity == "B":
            weights = (weight_from_doubled(group, base),)
            dim = weyl_dim(weights[0])
        else:
            minus = base.copy()
            minus[-1] = -minus[-1]
            weights = (
                weight_from_doubled(group, base),
                weight_from_doubled(group, minus),
            )
            dim = sum(weyl_dim(w) for w in weights)
        out.append((j, weights, dim))
    total = sum(dim for _, _, dim in out)
    expected = binomial(n, k_form) * 2**k
    if total != expected:
        raise DimensionMismatch(
            f"spinor-form ladder for n={n}, k_form={k_form}: {total} != {expected}"
        )
    return out
