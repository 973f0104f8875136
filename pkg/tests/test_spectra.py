from fractions import Fraction

import pytest

from spinsphere import (
    GroupId,
    dirac_spectrum,
    higher_spin_spectrum,
    ktype_weight,
    parse_weight,
    transfer_factor,
    verify_consistency,
    weyl_dim,
    z_function,
)
from spinsphere.errors import OutOfRange, PoleArgument
from spinsphere.spectra import DIRAC_LIKE, REDUCED, _mult1, _mult2


def entries_at(entries, l, tag, positive=True):
    return [
        e
        for e in entries
        if e.ktype.l == l and e.branch_tag == tag and (e.eigenvalue > 0) == positive
    ]


def test_z_function_values():
    g5 = GroupId(5)
    assert z_function(4, parse_weight(g5, "3/2,3/2")) == 6
    assert z_function(4, parse_weight(g5, "3/2,1/2")) == 3
    g4 = GroupId(4)
    for l in range(0, 6):
        alpha = parse_weight(g4, f"{2 * l + 1}/2,1/2")
        assert z_function(3, alpha) == (Fraction(2 * l + 3, 2)) * Fraction(1, 2)


def test_z_function_poles():
    g4 = GroupId(4)
    with pytest.raises(PoleArgument):
        z_function(3, parse_weight(g4, "1,0"))  # zero factor
    with pytest.raises(PoleArgument):
        z_function(3, parse_weight(g4, "2,-1"))  # nonpositive integer factor
    with pytest.raises(ValueError):
        z_function(4, parse_weight(g4, "1,0"))  # wrong group


def test_z_ratio_matches_dirac_ratio():
    g4 = GroupId(4)
    for l in range(0, 5):
        for lp in range(0, 5):
            z1 = z_function(3, parse_weight(g4, f"{2 * l + 1}/2,1/2"))
            z2 = z_function(3, parse_weight(g4, f"{2 * lp + 1}/2,1/2"))
            assert z1 / z2 == Fraction(2 * l + 3, 2 * lp + 3)


def test_dirac_examples():
    s3 = dirac_spectrum(3, 1)
    at = {(e.eigenvalue, e.multiplicity) for e in s3}
    assert (Fraction(3, 2), 2) in at and (Fraction(-3, 2), 2) in at
    assert (Fraction(5, 2), 6) in at and (Fraction(-5, 2), 6) in at
    s4 = dirac_spectrum(4, 1)
    at = {(e.eigenvalue, e.multiplicity) for e in s4}
    assert (Fraction(3), 16) in at and (Fraction(-3), 16) in at


def test_dirac_sorted_and_symmetric():
    entries = dirac_spectrum(5, 6)
    mags = [abs(e.eigenvalue) for e in entries]
    assert mags == sorted(mags)
    bag = {}
    for e in entries:
        bag[e.eigenvalue] = bag.get(e.eigenvalue, 0) + e.multiplicity
    for mu, m in bag.items():
        assert bag[-mu] == m


def test_higher_spin_examples():
    entries = higher_spin_spectrum(4, 1, 1)
    d = entries_at(entries, 1, DIRAC_LIKE)
    r = entries_at(entries, 1, REDUCED)
    assert [(e.eigenvalue, e.multiplicity) for e in d] == [(Fraction(3), 20)]
    assert [(e.eigenvalue, e.multiplicity) for e in r] == [(Fraction(3, 2), 16)]
    # pairing fixed by the dimension oracle
    assert str(d[0].ktype.weight) == "3/2,3/2"
    assert str(r[0].ktype.weight) == "3/2,1/2"
    assert weyl_dim(d[0].ktype.weight) == 20
    assert weyl_dim(r[0].ktype.weight) == 16

    entries = higher_spin_spectrum(3, 1, 1)
    d = entries_at(entries, 1, DIRAC_LIKE)
    r = entries_at(entries, 1, REDUCED)
    assert sorted((e.eigenvalue, e.multiplicity) for e in d) == [(Fraction(5, 2), 4)]
    assert sorted((e.eigenvalue, e.multiplicity) for e in r) == [(Fraction(5, 6), 6)]


def test_higher_spin_range_errors():
    with pytest.raises(OutOfRange):
        higher_spin_spectrum(4, 2, 3)
    with pytest.raises(OutOfRange):
        higher_spin_spectrum(4, 0, 3)
    with pytest.raises(OutOfRange):
        higher_spin_spectrum(4, 1, 0)


def test_j_zero_degeneration():
    # the dirac-like multiplicity formula at j = 0 reproduces the Dirac
    # multiplicity, and the reduced formula vanishes (factor j)
    for n in range(3, 10):
        for l in range(1, 8):
            dirac = next(
                e.multiplicity for e in dirac_spectrum(n, l) if e.ktype.l == l and e.eigenvalue > 0
            )
            assert _mult1(n, 0, l) == dirac
            if l >= 2:
                # at l = 1 the j = 0 denominator vanishes with the numerator
                assert _mult2(n, 0, l) == 0


def test_exact_slopes():
    for n, j in [(4, 1), (5, 1), (5, 2), (7, 3)]:
        entries = higher_spin_spectrum(n, j, 6)
        for tag, slope in [
            (DIRAC_LIKE, Fraction(1)),
            (REDUCED, Fraction(n - 2 * j, n - 2 * j + 2)),
        ]:
            mus = [
                entries_at(entries, l, tag)[0].eigenvalue for l in range(1, 7)
            ]
            assert all(b - a == slope for a, b in zip(mus, mus[1:]))


def test_z_ratio_transitivity():
    entries = higher_spin_spectrum(5, 1, 4)
    pos = [e for e in entries if e.eigenvalue > 0]
    zs = [z_function(5, e.ktype.weight) for e in pos]
    mus = [e.eigenvalue for e in pos]
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            for k in range(j + 1, len(pos)):
                assert (mus[i] / mus[j]) * (mus[j] / mus[k]) == mus[i] / mus[k]
                assert (zs[i] / zs[j]) * (zs[j] / zs[k]) == zs[i] / zs[k]
                assert zs[i] / zs[k] == mus[i] / mus[k]


def test_ktype_weight_patterns():
    assert str(ktype_weight(6, "B", 2, 3)) == "7/2,3/2,3/2"
    assert str(ktype_weight(6, "A", 2, 3)) == "7/2,3/2,1/2"
    assert str(ktype_weight(3, "B", 0, 1, -1)) == "3/2,-1/2"
    with pytest.raises(ValueError):
        ktype_weight(3, "B", 0, 1)  # odd n needs a sign
    with pytest.raises(OutOfRange):
        ktype_weight(4, "A", 0, 1)


def test_transfer_factor_values():
    for n in range(3, 10):
        assert transfer_factor(n, 0) == Fraction(-(n - 2), n)
    assert transfer_factor(6, 1) == Fraction(-1, 2)
    assert transfer_factor(4, 0) == Fraction(-1, 2)
    with pytest.raises(OutOfRange):
        transfer_factor(4, 1)
    with pytest.raises(OutOfRange):
        transfer_factor(5, 2)


def test_verify_consistency_passes():
    for n in (3, 4):
        rep = verify_consistency(n, (n - 1) // 2, 10)
        assert rep.passed, rep.failures[:5]
        assert rep.cases > 0


def test_verify_consistency_swap_fails():
    rep = verify_consistency(4, 1, 6, swap_pairing=True)
    assert not rep.passed
    # the pairing cross-checks must flag the swap, not a stray corner case
    assert len(rep.failures) > 10
