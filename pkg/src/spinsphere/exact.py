"""Exact arithmetic substrate.

Rationals are stdlib ``fractions.Fraction`` (arbitrary precision, always in
lowest terms).  On top of that this module provides half-integers stored as
doubled integers, complexified rationals, and dense exact matrices with
rank/kernel computation and Lagrange spectral projectors.  No floating point
is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import AnnihilationFailure

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def double_factorial(n: int) -> int:
    """n!! = n (n-2) (n-4) ... down to 1 or 2."""
    if n < 0:
        raise ValueError("double_factorial requires n >= 0")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


class HalfInt:
    """A half-integer stored as its doubled value.

    Dominance comparisons become plain integer comparisons and no
    denominator drift can occur.  The parity of ``doubled`` distinguishes
    integers from strict half-integers.
    """

    __slots__ = ("doubled",)

    def __init__(self, doubled: int):
        self.doubled = int(doubled)

    @classmethod
    def from_int(cls, v: int) -> "HalfInt":
        return cls(2 * v)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "HalfInt":
        f = Fraction(f)
        if f.denominator not in (1, 2):
            raise ValueError(f"{f} is not a half-integer")
        return cls(f.numerator * (2 // f.denominator))

    @classmethod
    def parse(cls, s: str) -> "HalfInt":
        """Parse '2', '-3' or '3/2', '-1/2'."""
        s = s.strip()
        if "/" in s:
            num, den = s.split("/")
            if int(den) != 2:
                raise ValueError(f"half-integer denominator must be 2: {s!r}")
            return cls(int(num))
        return cls(2 * int(s))

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.doubled + other.doubled)
        if isinstance(other, int):
            return HalfInt(self.doubled + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.doubled - other.doubled)
        if isinstance(other, int):
            return HalfInt(self.doubled - 2 * other)
        return NotImplemented

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __abs__(self):
        return HalfInt(abs(self.doubled))

    def _key(self, other):
        if isinstance(other, HalfInt):
            return other.doubled
        if isinstance(other, int):
            return 2 * other
        return NotImplemented

    def __eq__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.doubled == k

    def __lt__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.doubled < k

    def __le__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.doubled <= k

    def __gt__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.doubled > k

    def __ge__(self, other):
        k = self._key(other)
        return NotImplemented if k is NotImplemented else self.doubled >= k

    def __hash__(self):
        return hash(Fraction(self.doubled, 2))

    def __str__(self):
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self):
        return f"HalfInt({self.doubled})"


class ComplexRational:
    """A complexified rational a + b*i with exact field arithmetic."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, v) -> "ComplexRational":
        if isinstance(v, ComplexRational):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v, 0)
        if isinstance(v, tuple) and len(v) == 2:
            return cls(v[0], v[1])
        raise TypeError(f"cannot coerce {v!r} to ComplexRational")

    def __add__(self, other):
        other = ComplexRational.coerce(other)
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = ComplexRational.coerce(other)
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return ComplexRational.coerce(other) - self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __mul__(self, other):
        other = ComplexRational.coerce(other)
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ComplexRational.coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero ComplexRational")
        return ComplexRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        try:
            other = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"ComplexRational({self.re!r}, {self.im!r})"


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class ExactMatrix:
    """Dense matrix over complexified rationals.

    Internally the matrix is stored as Gaussian-integer numerator arrays
    (numpy object dtype holding Python ints) over a single positive common
    denominator.  Matrix products run through numpy's object matmul, which
    keeps arithmetic exact while looping in C.  Instances are immutable.
    """

    __slots__ = ("rows", "cols", "_re", "_im", "_den")

    def __init__(self, rows: int, cols: int, re, im, den: int):
        self.rows = rows
        self.cols = cols
        self._re = re
        self._im = im  # None means identically-zero imaginary part
        self._den = den

    # ---------------------------------------------------------------- build

    @classmethod
    def from_rows(cls, data) -> "ExactMatrix":
        entries = [[ComplexRational.coerce(v) for v in row] for row in data]
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        den = 1
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged rows")
            for v in row:
                den = _lcm(den, _lcm(v.re.denominator, v.im.denominator))
        re = np.empty((rows, cols), dtype=object)
        im = np.empty((rows, cols), dtype=object)
        any_im = False
        for i, row in enumerate(entries):
            for j, v in enumerate(row):
                re[i, j] = int(v.re * den)
                iv = int(v.im * den)
                im[i, j] = iv
                any_im = any_im or iv != 0
        return cls(rows, cols, re, im if any_im else None, den)._reduced()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, np.full((rows, cols), 0, dtype=object), None, 1)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        re = np.full((n, n), 0, dtype=object)
        for i in range(n):
            re[i, i] = 1
        return cls(n, n, re, None, 1)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, items) -> "ExactMatrix":
        """Build from an iterable of ((i, j), ComplexRational-like)."""
        vals = [((i, j), ComplexRational.coerce(v)) for (i, j), v in items]
        den = 1
        for _, v in vals:
            den = _lcm(den, _lcm(v.re.denominator, v.im.denominator))
        re = np.full((rows, cols), 0, dtype=object)
        im = np.full((rows, cols), 0, dtype=object)
        any_im = False
        for (i, j), v in vals:
            re[i, j] += int(v.re * den)
            iv = int(v.im * den)
            if iv:
                im[i, j] += iv
                any_im = True
        return cls(rows, cols, re, im if any_im else None, den)._reduced()

    # ------------------------------------------------------------- helpers

    def _reduced(self) -> "ExactMatrix":
        g = self._den
        for v in self._re.flat:
            g = math.gcd(g, v)
            if g == 1:
                return self
        if self._im is not None:
            for v in self._im.flat:
                g = math.gcd(g, v)
                if g == 1:
                    return self
        if g > 1:
            re = self._re // g
            im = None if self._im is None else self._im // g
            return ExactMatrix(self.rows, self.cols, re, im, self._den // g)
        return self

    def entry(self, i: int, j: int) -> ComplexRational:
        im = 0 if self._im is None else self._im[i, j]
        return ComplexRational(
            Fraction(int(self._re[i, j]), self._den), Fraction(int(im), self._den)
        )

    def to_rows(self):
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    # ------------------------------------------------------------ algebra

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        d = _lcm(self._den, other._den)
        fa, fb = d // self._den, d // other._den
        re = self._re * fa + other._re * fb
        if self._im is None and other._im is None:
            im = None
        else:
            ia = self._im * fa if self._im is not None else 0
            ib = other._im * fb if other._im is not None else 0
            im = ia + ib
        return ExactMatrix(self.rows, self.cols, re, im, d)._reduced()

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ar, ai = self._re, self._im
        br, bi = other._re, other._im
        re = ar @ br
        im = None
        if ai is not None and bi is not None:
            re = re - ai @ bi
            im = ar @ bi + ai @ br
        elif bi is not None:
            im = ar @ bi
        elif ai is not None:
            im = ai @ br
        return ExactMatrix(
            self.rows, other.cols, re, im, self._den * other._den
        )._reduced()

    def scale(self, c) -> "ExactMatrix":
        c = ComplexRational.coerce(c)
        if c.im == 0:
            f = c.re
            re = self._re * f.numerator
            im = None if self._im is None else self._im * f.numerator
            return ExactMatrix(
                self.rows, self.cols, re, im, self._den * f.denominator
            )._reduced()
        d = _lcm(c.re.denominator, c.im.denominator)
        cr, ci = int(c.re * d), int(c.im * d)
        sim = self._im if self._im is not None else np.full_like(self._re, 0)
        re = self._re * cr - sim * ci
        im = self._re * ci + sim * cr
        return ExactMatrix(self.rows, self.cols, re, im, self._den * d)._reduced()

    def add_scalar_diag(self, c) -> "ExactMatrix":
        """self + c * I."""
        if self.rows != self.cols:
            raise ValueError("square matrix required")
        c = ComplexRational.coerce(c)
        d = _lcm(self._den, _lcm(c.re.denominator, c.im.denominator))
        f = d // self._den
        re = self._re * f
        im = None if self._im is None else self._im * f
        cr, ci = int(c.re * d), int(c.im * d)
        for i in range(self.rows):
            re[i, i] += cr
        if ci:
            if im is None:
                im = np.full_like(re, 0)
            for i in range(self.rows):
                im[i, i] += ci
        return ExactMatrix(self.rows, self.cols, re, im, d)._reduced()

    def conj_transpose(self) -> "ExactMatrix":
        re = self._re.T.copy()
        im = None if self._im is None else (-self._im.T).copy()
        return ExactMatrix(self.cols, self.rows, re, im, self._den)

    def trace(self) -> ComplexRational:
        tr = sum(int(self._re[i, i]) for i in range(min(self.rows, self.cols)))
        ti = (
            0
            if self._im is None
            else sum(int(self._im[i, i]) for i in range(min(self.rows, self.cols)))
        )
        return ComplexRational(Fraction(tr, self._den), Fraction(ti, self._den))

    def is_zero(self) -> bool:
        if any(v != 0 for v in self._re.flat):
            return False
        return self._im is None or all(v == 0 for v in self._im.flat)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.rows, self.cols))

    # -------------------------------------------------------- rank / kernel

    def _fraction_rows(self):
        """Rows as lists of (re, im) Fraction pairs."""
        d = self._den
        out = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                im = 0 if self._im is None else int(self._im[i, j])
                row.append((Fraction(int(self._re[i, j]), d), Fraction(im, d)))
            out.append(row)
        return out

    def rank(self) -> int:
        """Rank via fraction-free (Bareiss) elimination over Gaussian integers."""
        m = [
            [
                (int(self._re[i, j]), 0 if self._im is None else int(self._im[i, j]))
                for j in range(self.cols)
            ]
            for i in range(self.rows)
        ]
        rows, cols = self.rows, self.cols
        r = 0
        prev = (1, 0)
        for c in range(cols):
            piv = None
            for i in range(r, rows):
                if m[i][c] != (0, 0):
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            pr = m[r]
            pv = pr[c]
            for i in range(r + 1, rows):
                fi = m[i][c]
                mi = m[i]
                if fi == (0, 0):
                    if prev != (1, 0):
                        for j in range(c + 1, cols):
                            mi[j] = _gdiv(_gmul(pv, mi[j]), prev)
                    else:
                        for j in range(c + 1, cols):
                            mi[j] = _gmul(pv, mi[j])
                else:
                    for j in range(c + 1, cols):
                        mi[j] = _gdiv(_gsub(_gmul(pv, mi[j]), _gmul(fi, pr[j])), prev)
                mi[c] = (0, 0)
            prev = pv
            r += 1
            if r == rows:
                break
        return r

    def rref(self):
        """Reduced row echelon form; returns (pivot column list, rows)."""
        m = self._fraction_rows()
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            piv = None
            for i in range(r, rows):
                if m[i][c] != (0, 0):
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = _cinv(m[r][c])
            m[r] = [_cmul(inv, v) for v in m[r]]
            for i in range(rows):
                if i != r and m[i][c] != (0, 0):
                    f = m[i][c]
                    m[i] = [_csub(a, _cmul(f, b)) for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return pivots, m


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gdiv(a, b):
    """Exact division in the Gaussian integers."""
    d = b[0] * b[0] + b[1] * b[1]
    re_num = a[0] * b[0] + a[1] * b[1]
    im_num = a[1] * b[0] - a[0] * b[1]
    qr, rr = divmod(re_num, d)
    qi, ri = divmod(im_num, d)
    if rr or ri:
        raise ArithmeticError("inexact Gaussian division in Bareiss elimination")
    return (qr, qi)


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _csub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _cinv(a):
    d = a[0] * a[0] + a[1] * a[1]
    return (a[0] / d, -a[1] / d)


def rank_and_kernel(m: ExactMatrix):
    """Exact rank and a kernel basis; rank + len(kernel) == cols."""
    pivots, rows = m.rref()
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    kernel = []
    for fc in free:
        vec = [ComplexRational(0) for _ in range(m.cols)]
        vec[fc] = ComplexRational(1)
        for r, pc in enumerate(pivots):
            coeff = rows[r][fc]
            vec[pc] = ComplexRational(-coeff[0], -coeff[1])
        kernel.append(vec)
    return rank, kernel


def lagrange_projectors(m: ExactMatrix, eigenvalues):
    """Spectral projectors P_i = prod_{j != i} (m - c_j I) / (c_i - c_j).

    Verifies exact annihilation prod_i (m - c_i I) = 0 first and raises
    AnnihilationFailure otherwise (a wrong predicted eigenvalue list).
    """
    eigenvalues = [Fraction(c) for c in eigenvalues]
    if len(set(eigenvalues)) != len(eigenvalues):
        raise ValueError("eigenvalues must be pairwise distinct")
    if m.rows != m.cols:
        raise ValueError("square matrix required")
    t = len(eigenvalues)
    factors = [m.add_scalar_diag(-c) for c in eigenvalues]
    # prefix[i] = F_0 ... F_{i-1}, suffix[i] = F_i ... F_{t-1}
    ident = ExactMatrix.identity(m.rows)
    prefix = [ident]
    for f in factors:
        prefix.append(prefix[-1] @ f)
    suffix = [ident] * (t + 1)
    for i in range(t - 1, -1, -1):
        suffix[i] = factors[i] @ suffix[i + 1]
    if not prefix[t].is_zero():
        raise AnnihilationFailure(
            "matrix is not annihilated by the predicted eigenvalue polynomial"
        )
    projectors = []
    for i, ci in enumerate(eigenvalues):
        denom = Fraction(1)
        for j, cj in enumerate(eigenvalues):
            if j != i:
                denom *= ci - cj
        p = prefix[i] @ suffix[i + 1]
        projectors.append(p.scale(Fraction(1) / denom))
    return projectors
