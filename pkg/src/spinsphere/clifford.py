"""Exact Clifford-algebra verification backend.

Gamma matrices with entries in {0, +-1, +-i}, the so(n) action on
spinor-valued forms, Casimir spectral projectors realizing the ladder
decomposition, the contraction operator Y, and the symbol nontriviality
check.  Everything is exact; matrices stay small (a few hundred rows at the
default cap).

Conventions (fixed here, covariant everywhere downstream):
  * Clifford relation e_i e_j + e_j e_i = -2 delta_ij I, i.e. e_i^2 = -I.
  * For the index pair a < b the rotation generator acts on the vector
    representation by e_a -> e_b, e_b -> -e_a and on spinors by
    (1/2) e_a e_b; the Casimir is minus the sum of squared generators,
    normalized against casimir_scalar on the spinor space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import AnnihilationFailure, CapExceeded, DegenerateCasimir, OutOfRange
from .exact import ExactMatrix, binomial, lagrange_projectors
from .reptheory import GroupId, casimir_scalar, spinor_form_components

DEFAULT_GAMMA_CAP = 10
DEFAULT_ORACLE_CAP = 6


# ----------------------------------------------------------------- sparse

class _Sp:
    """Minimal sparse matrix over complex rationals: dict keyed by (row, col)
    holding (re, im) Fraction pairs.  Internal helper only."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        self.data = data if data is not None else {}

    def put(self, i, j, re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        old = self.data.get((i, j), (Fraction(0), Fraction(0)))
        new = (old[0] + re, old[1] + im)
        if new == (0, 0):
            self.data.pop((i, j), None)
        else:
            self.data[(i, j)] = new

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): (Fraction(1), Fraction(0)) for i in range(n)})

    def mul(self, other: "_Sp") -> "_Sp":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict = {}
        for (i, j), v in other.data.items():
            by_row.setdefault(i, []).append((j, v))
        out: dict = {}
        for (i, k), (ar, ai) in self.data.items():
            for j, (br, bi) in by_row.get(k, ()):
                re = ar * br - ai * bi
                im = ar * bi + ai * br
                old = out.get((i, j))
                if old is None:
                    out[(i, j)] = (re, im)
                else:
                    out[(i, j)] = (old[0] + re, old[1] + im)
        out = {k: v for k, v in out.items() if v != (0, 0)}
        return _Sp(self.rows, other.cols, out)

    def add(self, other: "_Sp") -> "_Sp":
        out = dict(self.data)
        for k, (br, bi) in other.data.items():
            old = out.get(k)
            new = (br, bi) if old is None else (old[0] + br, old[1] + bi)
            if new == (0, 0):
                out.pop(k, None)
            else:
                out[k] = new
        return _Sp(self.rows, self.cols, out)

    def sub(self, other: "_Sp") -> "_Sp":
        return self.add(other.scale(-1))

    def scale(self, c) -> "_Sp":
        if isinstance(c, tuple):
            cr, ci = Fraction(c[0]), Fraction(c[1])
        else:
            cr, ci = Fraction(c), Fraction(0)
        out = {}
        for k, (ar, ai) in self.data.items():
            v = (ar * cr - ai * ci, ar * ci + ai * cr)
            if v != (0, 0):
                out[k] = v
        return _Sp(self.rows, self.cols, out)

    def kron(self, other: "_Sp") -> "_Sp":
        out = {}
        for (i, j), (ar, ai) in self.data.items():
            for (p, q), (br, bi) in other.data.items():
                out[(i * other.rows + p, j * other.cols + q)] = (
                    ar * br - ai * bi,
                    ar * bi + ai * br,
                )
        return _Sp(self.rows * other.rows, self.cols * other.cols, out)

    def conj_transpose(self) -> "_Sp":
        return _Sp(
            self.cols,
            self.rows,
            {(j, i): (re, -im) for (i, j), (re, im) in self.data.items()},
        )

    def is_zero(self) -> bool:
        return not self.data

    def equals(self, other: "_Sp") -> bool:
        return self.sub(other).is_zero()

    def to_exact(self) -> ExactMatrix:
        return ExactMatrix.from_sparse(self.rows, self.cols, self.data.items())


def _sparsify(m: ExactMatrix) -> _Sp:
    out = _Sp(m.rows, m.cols)
    for i in range(m.rows):
        for j in range(m.cols):
            v = m.entry(i, j)
            if not v.is_zero():
                out.put(i, j, v.re, v.im)
    return out


# ------------------------------------------------------------ gamma ladder

_SIGMA1 = _Sp(2, 2, {(0, 1): (Fraction(1), Fraction(0)), (1, 0): (Fraction(1), Fraction(0))})
_SIGMA2 = _Sp(2, 2, {(0, 1): (Fraction(0), Fraction(-1)), (1, 0): (Fraction(0), Fraction(1))})
_SIGMA3 = _Sp(2, 2, {(0, 0): (Fraction(1), Fraction(0)), (1, 1): (Fraction(-1), Fraction(0))})


def _raw_hermitian_gammas(n: int):
    """Hermitian anticommuting Gamma_i with Gamma_i^2 = +I, by the 2x2
    tensor ladder."""
    if n == 2:
        return [_SIGMA1, _SIGMA2]
    if n % 2 == 0:
        prev = _raw_hermitian_gammas(n - 2)
        ident = _Sp.identity(prev[0].rows)
        return [g.kron(_SIGMA3) for g in prev] + [ident.kron(_SIGMA1), ident.kron(_SIGMA2)]
    prev = _raw_hermitian_gammas(n - 1)
    return prev + [_volume_element(prev)]


def _volume_element(gammas):
    """(-i)^k Gamma_1 ... Gamma_2k: the chirality, diagonal with entries +-1."""
    k = len(gammas) // 2
    prod = gammas[0]
    for g in gammas[1:]:
        prod = prod.mul(g)
    phase = [(1, 0), (0, -1), (-1, 0), (0, 1)][k % 4]  # (-i)^k
    return prod.scale(phase)


@dataclass(frozen=True)
class CliffordRep:
    """Exact Clifford generators e_i (e_i^2 = -I) for Spin(n)."""

    n: int
    dim_s: int
    gammas: tuple  # ExactMatrix
    chirality: ExactMatrix | None


def gamma_matrices(n: int, cap: int = DEFAULT_GAMMA_CAP) -> CliffordRep:
    """Clifford generators by the standard tensor-product ladder; for even n
    the basis is permuted so the chirality is diag(+1.., -1..)."""
    if n < 2:
        raise OutOfRange("need n >= 2")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the gamma construction cap {cap}")
    hermitian = _raw_hermitian_gammas(n)
    dim_s = hermitian[0].rows
    es = [g.scale((0, 1)) for g in hermitian]  # e_i = i * Gamma_i
    chirality = None
    if n % 2 == 0:
        chi = _volume_element(hermitian)
        diag = [chi.data.get((i, i), (Fraction(0), Fraction(0)))[0] for i in range(dim_s)]
        perm = sorted(range(dim_s), key=lambda i: -diag[i])
        def permute(sp):
            inv = {p: i for i, p in enumerate(perm)}
            return _Sp(
                dim_s,
                dim_s,
                {(inv[i], inv[j]): v for (i, j), v in sp.data.items()},
            )
        es = [permute(e) for e in es]
        chirality = permute(chi).to_exact()
    return CliffordRep(n, dim_s, tuple(e.to_exact() for e in es), chirality)


# ----------------------------------------------------------- form machinery

@dataclass(frozen=True)
class FormSpinorSpace:
    """Basis bookkeeping for Lambda^k(C^n) tensor S: lexicographic index
    subsets, then the spinor index."""

    n: int
    k_form: int
    dim_s: int

    @property
    def subsets(self):
        return list(itertools.combinations(range(self.n), self.k_form))

    @property
    def dimension(self) -> int:
        return binomial(self.n, self.k_form) * self.dim_s

    def index(self, subset_pos: int, spin: int) -> int:
        return subset_pos * self.dim_s + spin


def _sort_sign(seq):
    """Parity sign of sorting seq; None if it has a repeat."""
    if len(set(seq)) != len(seq):
        return None
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def _sp_gammas(rep: CliffordRep):
    return [_sparsify(g) for g in rep.gammas]


def _so_generators_sparse(rep: CliffordRep, k_form: int):
    """Sparse L_ab = (form derivation) + (1/2) e_a e_b, one per pair a < b."""
    n, ds = rep.n, rep.dim_s
    space = FormSpinorSpace(n, k_form, ds)
    subsets = space.subsets
    pos = {s: i for i, s in enumerate(subsets)}
    es = _sp_gammas(rep)
    dim = space.dimension
    out = []
    for a, b in itertools.combinations(range(n), 2):
        L = _Sp(dim, dim)
        spin = es[a].mul(es[b]).scale(Fraction(1, 2))
        for si in range(len(subsets)):
            for (u, t), (re, im) in spin.data.items():
                L.put(si * ds + u, si * ds + t, re, im)
        for si, s in enumerate(subsets):
            for swap_from, swap_to, coeff in ((a, b, 1), (b, a, -1)):
                if swap_from in s and swap_to not in s:
                    seq = [swap_to if x == swap_from else x for x in s]
                    sign = _sort_sign(seq)
                    tj = pos[tuple(sorted(seq))]
                    for u in range(ds):
                        L.put(tj * ds + u, si * ds + u, coeff * sign)
        out.append(L)
    return out


def so_action(rep: CliffordRep, k_form: int) -> list:
    """Rotation generators on Lambda^k tensor S, one ExactMatrix per a < b."""
    return [L.to_exact() for L in _so_generators_sparse(rep, k_form)]


def _casimir_sparse(rep: CliffordRep, k_form: int) -> _Sp:
    gens = _so_generators_sparse(rep, k_form)
    dim = gens[0].rows
    cas = _Sp(dim, dim)
    for L in gens:
        cas = cas.sub(L.mul(L))
    return cas


def casimir_matrix(rep: CliffordRep, k_form: int) -> ExactMatrix:
    """-sum_{a<b} L_ab^2; eigenvalues are the casimir_scalar values of the
    ladder components."""
    return _casimir_sparse(rep, k_form).to_exact()


_proj_cache: dict = {}


def ekj_projectors(rep: CliffordRep, k_form: int) -> list:
    """Casimir spectral projectors onto the ladder components.

    Returns (j, projector, rank) per component.  Exact annihilation by the
    predicted eigenvalue polynomial is verified inside lagrange_projectors;
    idempotency P^2 = P is then checked directly, after which the rank is
    the (integer) trace.
    """
    key = (rep.n, k_form)
    if key in _proj_cache:
        return _proj_cache[key]
    comps = spinor_form_components(GroupId(rep.n), k_form)
    eigs = []
    for _, weights, _ in comps:
        vals = {casimir_scalar(w) for w in weights}
        if len(vals) != 1:
            raise DegenerateCasimir(
                "sign variants of one component have unequal Casimir scalars"
            )
        eigs.append(vals.pop())
    if len(set(eigs)) != len(eigs):
        raise DegenerateCasimir(f"Casimir eigenvalues collide: {eigs}")
    cas = casimir_matrix(rep, k_form)
    projectors = lagrange_projectors(cas, eigs)
    out = []
    for (j, _, _), p in zip(comps, projectors):
        if not (p @ p == p):
            raise AnnihilationFailure("Lagrange projector is not idempotent")
        tr = p.trace()
        if tr.im != 0 or tr.re.denominator != 1:
            raise AnnihilationFailure(f"projector trace {tr} is not an integer")
        out.append((j, p, int(tr.re)))
    _proj_cache[key] = out
    return out


def _y_sparse(rep: CliffordRep, k_form: int) -> _Sp:
    n, ds = rep.n, rep.dim_s
    src = FormSpinorSpace(n, k_form, ds)
    dst = FormSpinorSpace(n, k_form - 1, ds)
    dst_pos = {s: i for i, s in enumerate(dst.subsets)}
    es = _sp_gammas(rep)
    Y = _Sp(dst.dimension, src.dimension)
    for si, s in enumerate(src.subsets):
        for p, i in enumerate(s):
            rest = tuple(x for x in s if x != i)
            tj = dst_pos[rest]
            coeff = -(-1) ** p  # -iota(e_i) contraction sign
            for (u, t), (re, im) in es[i].data.items():
                Y.put(tj * ds + u, si * ds + t, coeff * re, coeff * im)
    return Y


def y_matrix(rep: CliffordRep, k_form: int) -> ExactMatrix:
    """Y(omega tensor s) = -sum_i iota(e_i) omega tensor e_i . s, as a matrix
    from k-form spinors to (k-1)-form spinors."""
    if not 1 <= k_form <= rep.n:
        raise OutOfRange(f"k_form must be in [1, {rep.n}]")
    return _y_sparse(rep, k_form).to_exact()


def _epsilon_sparse(rep: CliffordRep, k_form: int, i: int) -> _Sp:
    """Exterior multiplication by e_i tensored with the spinor identity."""
    n, ds = rep.n, rep.dim_s
    src = FormSpinorSpace(n, k_form, ds)
    dst = FormSpinorSpace(n, k_form + 1, ds)
    dst_pos = {s: i2 for i2, s in enumerate(dst.subsets)}
    E = _Sp(dst.dimension, src.dimension)
    for si, s in enumerate(src.subsets):
        if i in s:
            continue
        q = sum(1 for x in s if x < i)
        tj = dst_pos[tuple(sorted(s + (i,)))]
        sign = -1 if q % 2 else 1
        for u in range(ds):
            E.put(tj * ds + u, si * ds + u, sign)
    return E


def epsilon_matrix(rep: CliffordRep, k_form: int, i: int) -> ExactMatrix:
    if not 0 <= k_form < rep.n:
        raise OutOfRange(f"k_form must be in [0, {rep.n - 1}]")
    if not 0 <= i < rep.n:
        raise OutOfRange(f"coordinate index must be in [0, {rep.n - 1}]")
    return _epsilon_sparse(rep, k_form, i).to_exact()


def symbol_nontrivial(rep: CliffordRep, j: int) -> bool:
    """True iff P_{j+1,j+1} (eps(e_i) tensor I) P_{j,j} is nonzero for some
    coordinate vector e_i."""
    if not 0 <= 2 * j <= rep.n - 2:
        raise OutOfRange(f"need 0 <= j <= n/2 - 1, got j={j}, n={rep.n}")
    p_src = _top_projector(rep, j)
    p_dst = _top_projector(rep, j + 1)
    for i in range(rep.n):
        eps = epsilon_matrix(rep, j, i)
        if not (p_dst @ eps @ p_src).is_zero():
            return True
    return False


def _top_projector(rep: CliffordRep, k_form: int) -> ExactMatrix:
    projs = ekj_projectors(rep, k_form)
    j, p, _ = projs[-1]
    assert j == k_form
    return p


# --------------------------------------------------------------- the suite

def _check(report, ok, case, expected="0", got=None):
    report.append(
        {
            "case": case,
            "ok": bool(ok),
            "expected": str(expected),
            "got": str(got) if got is not None else ("ok" if ok else "mismatch"),
        }
    )


def run_oracle(cap: int = DEFAULT_ORACLE_CAP, bracket_kforms=(0, 1)) -> list:
    """Run every Clifford-side verification for n = 3..cap.

    Returns a list of structured pass/fail records consumed by the CLI
    ``verify`` subcommand and the acceptance tests.
    """
    report: list = []
    for n in range(3, cap + 1):
        rep = gamma_matrices(n)
        es = _sp_gammas(rep)
        ident = _Sp.identity(rep.dim_s)
        ok = all(
            es[i].mul(es[j]).add(es[j].mul(es[i])).equals(
                ident.scale(-2) if i == j else _Sp(rep.dim_s, rep.dim_s)
            )
            for i in range(n)
            for j in range(n)
        )
        _check(report, ok, f"n={n} clifford relations e_i e_j + e_j e_i = -2 delta I")
        ok = all(e.mul(e.conj_transpose()).equals(ident) for e in es)
        _check(report, ok, f"n={n} generators unitary")
        if n % 2 == 0:
            chi = _sparsify(rep.chirality)
            _check(report, chi.mul(chi).equals(ident), f"n={n} chirality squares to I")
            ok = all(chi.mul(e).add(e.mul(chi)).is_zero() for e in es)
            _check(report, ok, f"n={n} chirality anticommutes")
            diag_ok = all(i == j for (i, j) in chi.data)
            _check(report, diag_ok, f"n={n} chirality diagonal")
            tr = rep.chirality.trace()
            _check(report, tr.is_zero(), f"n={n} chirality traceless", 0, tr)
        else:
            vol = es[0]
            for e in es[1:]:
                vol = vol.mul(e)
            scalars = {v for v in vol.data.values()}
            diag_only = all(i == j for (i, j) in vol.data)
            ok = diag_only and len(scalars) == 1 and len(vol.data) == rep.dim_s
            _check(report, ok, f"n={n} odd volume element is scalar")
        for kf in bracket_kforms:
            if kf > n:
                continue
            _check(
                report,
                _bracket_relations_hold(rep, kf),
                f"n={n} k={kf} so(n) bracket relations",
            )
        for kf in range(0, n + 1):
            comps = spinor_form_components(GroupId(n), kf)
            projs = ekj_projectors(rep, kf)
            ranks = [r for _, _, r in projs]
            dims = [d for _, _, d in comps]
            _check(
                report,
                ranks == dims,
                f"n={n} k={kf} projector ranks = ladder dims",
                dims,
                ranks,
            )
            total = projs[0][1]
            for _, p, _ in projs[1:]:
                total = total + p
            _check(
                report,
                total == ExactMatrix.identity(total.rows),
                f"n={n} k={kf} projector completeness",
            )
            cas = _casimir_sparse(rep, kf)
            gens = _so_generators_sparse(rep, kf)
            ok = all(L.mul(cas).equals(cas.mul(L)) for L in gens)
            _check(report, ok, f"n={n} k={kf} Casimir commutes with so(n)")
        for kf in range(1, n // 2 + 1):
            ysp = _y_sparse(rep, kf)
            gens_src = _so_generators_sparse(rep, kf)
            gens_dst = _so_generators_sparse(rep, kf - 1)
            ok = all(
                Ld.mul(ysp).equals(ysp.mul(Ls))
                for Ld, Ls in zip(gens_dst, gens_src)
            )
            _check(report, ok, f"n={n} k={kf} Y equivariance")
            y = ysp.to_exact()
            projs = dict((j, p) for j, p, _ in ekj_projectors(rep, kf))
            projs_dst = dict((j, p) for j, p, _ in ekj_projectors(rep, kf - 1))
            for j, p in projs.items():
                yp = y @ p
                if j == kf:
                    _check(report, yp.is_zero(), f"n={n} Y vanishes on E^{kf},{kf}")
                elif j in projs_dst:
                    _check(
                        report,
                        projs_dst[j] @ yp == yp,
                        f"n={n} k={kf} Y preserves ladder index j={j}",
                    )
                if j < kf - 1 and kf - 1 < n // 2:
                    comps = dict(
                        (jj, d) for jj, _, d in spinor_form_components(GroupId(n), kf - 1)
                    )
                    rk = yp.rank()
                    _check(
                        report,
                        rk == comps[j],
                        f"n={n} Y iso rank on E^{kf},{j}",
                        comps[j],
                        rk,
                    )
        for j in range(0, (n - 2) // 2 + 1):
            _check(
                report,
                symbol_nontrivial(rep, j),
                f"n={n} twistor symbol nontrivial j={j}",
                True,
                symbol_nontrivial(rep, j),
            )
            p_dst = _top_projector(rep, j + 1)
            projs = dict((jj, p) for jj, p, _ in ekj_projectors(rep, j))
            for jp in range(0, j - 1):
                ok = all(
                    (p_dst @ epsilon_matrix(rep, j, i) @ projs[jp]).is_zero()
                    for i in range(n)
                )
                _check(
                    report,
                    ok,
                    f"n={n} symbol trivial E^{j},{jp} -> E^{j + 1},{j + 1}",
                )
    return report


def _bracket_relations_hold(rep: CliffordRep, k_form: int) -> bool:
    """Commutators of the generators match the structure constants read off
    from the vector representation."""
    n = rep.n
    pairs = list(itertools.combinations(range(n), 2))
    gens = _so_generators_sparse(rep, k_form)
    vec = {}
    for a, b in pairs:
        A = _Sp(n, n)
        A.put(b, a, 1)
        A.put(a, b, -1)
        vec[(a, b)] = A
    for (p1, A1), (p2, A2) in itertools.combinations(zip(pairs, vec.values()), 2):
        comm_vec = A1.mul(A2).sub(A2.mul(A1))
        expected = _Sp(gens[0].rows, gens[0].cols)
        for idx, (a, b) in enumerate(pairs):
            coeff = comm_vec.data.get((b, a), (Fraction(0), Fraction(0)))[0]
            if coeff:
                expected = expected.add(gens[idx].scale(coeff))
        i1 = pairs.index(p1)
        i2 = pairs.index(p2)
        comm = gens[i1].mul(gens[i2]).sub(gens[i2].mul(gens[i1]))
        if not comm.equals(expected):
            return False
    return True
