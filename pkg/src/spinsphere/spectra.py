"""Closed-form spectra of the Dirac and higher spin Dirac operators on S^n.

Eigenvalues and multiplicities are exact rationals/integers; every entry
carries the Spin(n+1) K-type weight it lives on.  The telescoped spectral
function turns the Gamma-ratio formula into an exact rational product, and
``verify_consistency`` ties the closed forms, the Weyl dimension formula and
the spectral function together.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonIntegerMultiplicity, OutOfRange, PoleArgument
from .exact import binomial
from .reptheory import GroupId, Weight, weight_from_doubled, weyl_dim

DIRAC_LIKE = "dirac-like"
REDUCED = "reduced"


@dataclass(frozen=True)
class KTypeLabel:
    """K-type of an eigenspace: ladder position plus the Spin(n+1) weight.

    Branch 'B' weights carry j copies of the entry 3/2 after the leading
    (2l+1)/2; branch 'A' weights carry j-1 copies.  The sign distinguishes
    the two mirror weights in odd dimensions; in even dimensions each
    isotypic component appears with multiplicity two and there is no sign.
    """

    branch: str  # 'A' or 'B'
    j: int
    l: int
    sign: int | None
    weight: Weight


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: Fraction
    multiplicity: int
    ktype: KTypeLabel
    branch_tag: str


@dataclass
class ConsistencyReport:
    pairing: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case: str, expected, got):
        self.cases += 1
        if not ok:
            self.failures.append((case, str(expected), str(got)))


def ktype_weight(n: int, branch: str, j: int, l: int, sign: int | None = None) -> Weight:
    """The Spin(n+1) weight of a K-type: leading (2l+1)/2, then 3/2 repeated
    (j copies for branch 'B', j-1 for branch 'A'), then 1/2 fill; for odd n
    the sign applies to the last entry."""
    group = GroupId(n + 1)
    r = group.rank
    m = j if branch == "B" else j - 1
    if m < 0 or m > r - 1:
        raise OutOfRange(f"branch {branch} at j={j} has no weight for n={n}")
    doubled = [2 * l + 1] + [3] * m + [1] * (r - 1 - m)
    if n % 2 == 1:
        if sign is None:
            raise ValueError("odd n requires a sign for the K-type weight")
        if sign < 0:
            doubled[-1] = -doubled[-1]
    w = weight_from_doubled(group, doubled)
    w.check_dominant()
    return w


def z_function(n: int, alpha: Weight) -> Fraction:
    """Telescoped spectral function: product over a = 1..floor((n+1)/2) of
    ((n+1)/2 - a + alpha_a).  Each Gamma-ratio pair collapses to one exact
    rational factor; ratios of Z values are the eigenvalue ratios."""
    alpha.check_dominant()
    if alpha.group.n != n + 1:
        raise ValueError(f"alpha must be a Spin({n + 1}) weight")
    z = Fraction(1)
    for a, entry in enumerate(alpha.entries, start=1):
        x = Fraction(n + 1, 2) - a + entry.as_fraction()
        if x == 0 or (x.denominator == 1 and x <= 0):
            raise PoleArgument(
                f"Gamma argument {x} at position {a} of {alpha} is a pole"
            )
        z *= x
    return z


def _make_entries(n, mu_abs, mult, branch, j, l, tag):
    """The +/- pair of spectrum entries for one branch at one level."""
    entries = []
    if n % 2 == 1:
        for sign in (1, -1):
            w = ktype_weight(n, branch, j, l, sign)
            label = KTypeLabel(branch, j, l, sign, w)
            entries.append(SpectrumEntry(sign * mu_abs, mult, label, tag))
    else:
        w = ktype_weight(n, branch, j, l)
        label = KTypeLabel(branch, j, l, None, w)
        for sign in (1, -1):
            entries.append(SpectrumEntry(sign * mu_abs, mult, label, tag))
    return entries


def _sorted_spectrum(entries):
    return sorted(
        entries,
        key=lambda e: (abs(e.eigenvalue), 0 if e.eigenvalue > 0 else 1, e.ktype.l),
    )


def dirac_spectrum(n: int, l_max: int) -> list:
    """Dirac eigenvalues +-(n/2 + l) with multiplicity
    2^{floor(n/2)} * C(l+n-1, l) per sign, l = 0..l_max."""
    if n < 2 or l_max < 0:
        raise OutOfRange("need n >= 2 and l_max >= 0")
    entries = []
    for l in range(l_max + 1):
        mu = Fraction(n, 2) + l
        mult = 2 ** (n // 2) * binomial(l + n - 1, l)
        entries.extend(_make_entries(n, mu, mult, "B", 0, l, DIRAC_LIKE))
    return _sorted_spectrum(entries)


def _mult1(n, j, l) -> Fraction:
    return Fraction(
        2 ** (n // 2) * binomial(n + 1, j + 1) * binomial(l + n, l - 1)
        * (n - 2 * j) * (j + 1),
        (l + j) * (l + n - j),
    )


def _mult2(n, j, l) -> Fraction:
    return Fraction(
        2 ** (n // 2) * binomial(n + 1, j) * binomial(l + n, l - 1)
        * (n - 2 * j + 2) * j,
        (l + j - 1) * (l + n - j + 1),
    )


def _as_positive_int(m: Fraction, what: str) -> int:
    if m.denominator != 1 or m <= 0:
        raise NonIntegerMultiplicity(f"{what} evaluated to {m}")
    return int(m)


def higher_spin_spectrum(n: int, j: int, l_max: int) -> list:
    """Spectrum of the level-j higher spin Dirac operator, l = 1..l_max.

    The dirac-like branch |mu| = n/2 + l pairs with the B-type K-weight
    (j copies of 3/2); the reduced branch |mu| = (n-2j)/(n-2j+2) (n/2 + l)
    pairs with the A-type K-weight (j-1 copies).  The pairing is the one
    validated by the Weyl-dimension cross-check.
    """
    if not 0 < 2 * j < n:
        raise OutOfRange(f"need 0 < j < n/2, got j={j}, n={n}")
    if l_max < 1:
        raise OutOfRange("l_max must be >= 1")
    entries = []
    for l in range(1, l_max + 1):
        mu1 = Fraction(n, 2) + l
        mu2 = Fraction(n - 2 * j, n - 2 * j + 2) * mu1
        m1 = _as_positive_int(_mult1(n, j, l), f"mu1 multiplicity (n={n},j={j},l={l})")
        m2 = _as_positive_int(_mult2(n, j, l), f"mu2 multiplicity (n={n},j={j},l={l})")
        entries.extend(_make_entries(n, mu1, m1, "B", j, l, DIRAC_LIKE))
        entries.extend(_make_entries(n, mu2, m2, "A", j, l, REDUCED))
    return _sorted_spectrum(entries)


def transfer_factor(n: int, j: int) -> Fraction:
    """Factor carrying an eigenvalue of the level-j operator to the level
    j+1 operator on the shared K-type: -(n-2j-2)/(n-2j).  For j = 0 this is
    the classical twistor-transfer value -(n-2)/n; for j >= 1 it is derived
    from the closed-form spectra.
    """
    if not 0 <= 2 * j < n - 2:
        raise OutOfRange(f"need 0 <= j < n/2 - 1, got j={j}, n={n}")
    return Fraction(-(n - 2 * j - 2), n - 2 * j)


def _entry_groups(entries):
    """Entries grouped by (sign, l), keyed for pairwise checks."""
    plus = [e for e in entries if e.eigenvalue > 0]
    minus = [e for e in entries if e.eigenvalue < 0]
    return plus, minus


def verify_consistency(
    n: int, j_max: int, l_max: int, swap_pairing: bool = False
) -> ConsistencyReport:
    """Exact cross-checks between the closed-form spectra, the Weyl dimension
    formula and the spectral function.

    ``swap_pairing`` is a test hook that deliberately exchanges the K-type
    weights of the two branches; with it the report must fail everywhere.
    """
    report = ConsistencyReport(
        pairing="dirac-like branch <-> B-type K-weight; +mu <-> +1/2 last entry"
    )
    odd = n % 2 == 1

    def swapped(entries):
        if not swap_pairing:
            return entries
        # exchange K-types between the two branches at each (l, sign)
        out = []
        index = {}
        for e in entries:
            index[(e.ktype.l, e.ktype.sign, e.branch_tag, e.eigenvalue > 0)] = e
        for e in entries:
            other_tag = REDUCED if e.branch_tag == DIRAC_LIKE else DIRAC_LIKE
            partner = index.get(
                (e.ktype.l, e.ktype.sign, other_tag, e.eigenvalue > 0)
            )
            if partner is None:
                out.append(e)
            else:
                out.append(
                    SpectrumEntry(e.eigenvalue, e.multiplicity, partner.ktype, e.branch_tag)
                )
        return out

    js = list(range(0, j_max + 1))
    for j in js:
        if j == 0:
            entries = dirac_spectrum(n, l_max)
        elif 2 * j < n:
            entries = swapped(higher_spin_spectrum(n, j, l_max))
        else:
            continue
        # (a) per-sign multiplicity equals the Weyl dimension of the K-type
        for e in entries:
            dim = weyl_dim(e.ktype.weight)
            report.record(
                e.multiplicity == dim,
                f"n={n} j={j} l={e.ktype.l} {e.branch_tag} mult=weyl_dim",
                dim,
                e.multiplicity,
            )
        # (c) both signs together match the isotypic dimension count
        by_lvl: dict = {}
        for e in entries:
            by_lvl.setdefault((e.ktype.l, e.branch_tag), []).append(e)
        for (l, tag), group in sorted(by_lvl.items()):
            total_mult = sum(e.multiplicity for e in group)
            if odd:
                total_dim = sum(weyl_dim(e.ktype.weight) for e in group)
            else:
                total_dim = 2 * weyl_dim(group[0].ktype.weight)
            report.record(
                total_mult == total_dim,
                f"n={n} j={j} l={l} {tag} isotypic sum",
                total_dim,
                total_mult,
            )
        # (b) spectral-function ratios reproduce eigenvalue ratios
        plus, minus = _entry_groups(entries)
        for side in (plus, minus):
            zs = [(e, z_function(n, e.ktype.weight)) for e in side]
            for i in range(len(zs)):
                for kk in range(i + 1, len(zs)):
                    e1, z1 = zs[i]
                    e2, z2 = zs[kk]
                    report.record(
                        e1.eigenvalue * z2 == e2.eigenvalue * z1,
                        f"n={n} j={j} Z-ratio l={e1.ktype.l}{e1.branch_tag[0]}"
                        f"/{e2.ktype.l}{e2.branch_tag[0]} sign={'+' if e1.eigenvalue > 0 else '-'}",
                        f"{e1.eigenvalue}/{e2.eigenvalue}",
                        f"{z1}/{z2}",
                    )
        # (d) branch ratio mu2/mu1 = (n-2j)/(n-2j+2)
        if j >= 1:
            expected = Fraction(n - 2 * j, n - 2 * j + 2)
            for l in range(1, l_max + 1):
                mus = {
                    e.branch_tag: e.eigenvalue
                    for e in entries
                    if e.ktype.l == l and e.eigenvalue > 0
                }
                got = mus[REDUCED] / mus[DIRAC_LIKE]
                report.record(
                    got == expected, f"n={n} j={j} l={l} mu2/mu1", expected, got
                )
    # (e) the j = 0 transfer factor matches the classical twistor value
    if n >= 3:
        report.record(
            transfer_factor(n, 0) == Fraction(-(n - 2), n),
            f"n={n} transfer_factor(0)",
            Fraction(-(n - 2), n),
            transfer_factor(n, 0),
        )
    return report
