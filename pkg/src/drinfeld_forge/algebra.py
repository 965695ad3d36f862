"""Structure tables for the centrally extended classical series.

The four families are built over Cartan indices 1..N (N = rank+1 for series
A, N = rank otherwise), with central generators I_i adjoined as an abelian
block. Nonvanishing bracket rules, with d short for the Kronecker delta:

  common      [H_i, F_jk] = (d_ij - d_ik) F_jk
              [F_ij, F_kl] = d_jk E_il - d_il E_kj
  series C    [H_i, P_jk] = (d_ij + d_ik) P_jk          (so 2 d_ij on P_jj)
              [H_i, Q_jk] = -(d_ij + d_ik) Q_jk
              [F_ij, P_kk] = sqrt2 d_jk P_ik
              [F_ij, P_kl] = d_jk [P_il] + d_jl [P_ik]          (k != l)
              [F_ij, Q_kk] = -sqrt2 d_ik Q_jk
              [F_ij, Q_kl] = -d_ik [Q_jl] - d_il [Q_jk]         (k != l)
              [P_ii, Q_jj] = 2 d_ij H_i
              [P_ii, Q_jk] = sqrt2 (d_ij F_ik + d_ik F_ij)      (j != k)
              [P_ij, Q_kk] = sqrt2 (d_ik F_jk + d_jk F_ik)      (i != j)
              [P_ij, Q_kl] = d_jl E_ik + d_il E_jk + d_jk E_il + d_ik E_jl
                             + (d_ik d_jl + d_il d_jk) 1        (i != j, k != l)
  series D/B  [H_i, S_jk] = (d_ij + d_ik) S_jk,  [H_i, T_jk] = -(d_ij + d_ik) T_jk
              [F_ij, S_kl] = d_jk S_il - d_jl S_ik
              [F_ij, T_kl] = -d_ik T_jl + d_il T_jk
              [S_ij, T_kl] = -d_jk E_il + d_jl E_ik + d_ik E_jl - d_il E_jk
                             - (d_ik d_jl - d_il d_jk) 1
  series B    [H_i, U_j] = d_ij U_j,   [H_i, V_j] = -d_ij V_j
              [F_ij, U_k] = d_jk U_i,  [F_ij, V_k] = -d_ik V_j
              [S_ij, V_k] = -d_ik U_j + d_jk U_i
              [T_ij, U_k] = d_ik V_j - d_jk V_i
              [U_i, U_j] = S_ij,  [V_i, V_j] = -T_ij
              [U_i, V_j] = (1 - d_ij) F_ij + d_ij H_i

E_ab is the formal quadratic unit: off the diagonal it is F_ab; on the
diagonal it resolves to H_a plus a constant (-1/2 in the symmetric-pair
series, +1/2 in the antisymmetric ones) whose net coefficient provably
cancels in every bracket, which the builder asserts. [P_ab] and [Q_ab]
resolve a diagonal collision to sqrt2 P_aa / sqrt2 Q_aa; S/T symbols are
normalized by antisymmetry and vanish on the diagonal. I_i are central.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache

from . import serialize
from .elements import Element
from .errors import ClosureError, ForeignGeneratorError
from .generators import (GeneratorId, cartan_count, enumerate_generators,
                         resolve, weight)
from .reporting import CheckReport
from .scalars import ONE, SQRT2, Scalar

_TWO = Scalar(2)
_NEG_SQRT2 = -SQRT2
_PREC = {"H": 0, "F": 1, "P": 2, "S": 2, "Q": 3, "T": 3, "U": 4, "V": 5}


class _Acc:
    """Accumulator for bracket outputs with formal diagonal-unit bookkeeping."""

    def __init__(self, diag_const: Scalar):
        self._elem = Element()
        self._const = Scalar(0)
        self._diag_const = diag_const

    def add(self, gid: GeneratorId | None, coeff, sign: int = 1) -> None:
        if gid is not None and sign:
            self._elem.add_term(gid, coeff if sign == 1 else -coeff)

    def add_unit(self, a: int, b: int, coeff: Scalar) -> None:
        if a == b:
            self.add(GeneratorId("H", a), coeff)
            self._const = self._const + coeff * self._diag_const
        else:
            self.add(GeneratorId("F", a, b), coeff)

    def add_const(self, coeff: Scalar) -> None:
        self._const = self._const + coeff

    def element(self) -> Element:
        if self._const:
            raise ClosureError(f"diagonal constants failed to cancel: {self._const}")
        return self._elem


def _sym_or_diag(kind: str, a: int, b: int) -> tuple[GeneratorId, Scalar]:
    """P/Q collision rule: the diagonal symbol carries a sqrt2 weight."""
    if a == b:
        return GeneratorId(kind, a, a), SQRT2
    gid, _ = resolve(kind, a, b)
    return gid, ONE


def _rule(series: str, g1: GeneratorId, g2: GeneratorId) -> Element:
    k1, k2 = g1.kind, g2.kind
    if k1 == "I" or k2 == "I":
        return Element()
    if _PREC[k1] > _PREC[k2]:
        return -_rule(series, g2, g1)

    fermionic = series in ("B", "D")
    acc = _Acc(Scalar(Fraction(1, 2) if fermionic else Fraction(-1, 2)))
    pair = k1 + k2

    if pair == "HH" or pair in ("PP", "QQ", "SS", "TT", "SU", "TV"):
        return acc.element()

    if k1 == "H":
        i = g1.i
        j, k = g2.i, g2.j
        if k2 == "F":
            acc.add(g2, Scalar((i == j) - (i == k)))
        elif k2 in ("P", "S"):
            acc.add(g2, Scalar((i == j) + (i == k)))
        elif k2 in ("Q", "T"):
            acc.add(g2, Scalar(-((i == j) + (i == k))))
        elif k2 == "U":
            acc.add(g2, Scalar(i == j))
        elif k2 == "V":
            acc.add(g2, Scalar(-(i == j)))
        return acc.element()

    if pair == "FF":
        i, j = g1.i, g1.j
        k, l = g2.i, g2.j
        if j == k:
            acc.add_unit(i, l, ONE)
        if i == l:
            acc.add_unit(k, j, -ONE)
        return acc.element()

    if pair == "FP":
        i, j = g1.i, g1.j
        k, l = g2.i, g2.j
        if k == l:
            if j == k:
                acc.add(resolve("P", i, k)[0], SQRT2)
            return acc.element()
        if j == k:
            gid, w = _sym_or_diag("P", i, l)
            acc.add(gid, w)
        if j == l:
            gid, w = _sym_or_diag("P", i, k)
            acc.add(gid, w)
        return acc.element()

    if pair == "FQ":
        i, j = g1.i, g1.j
        k, l = g2.i, g2.j
        if k == l:
            if i == k:
                acc.add(resolve("Q", j, k)[0], _NEG_SQRT2)
            return acc.element()
        if i == k:
            gid, w = _sym_or_diag("Q", j, l)
            acc.add(gid, -w)
        if i == l:
            gid, w = _sym_or_diag("Q", j, k)
            acc.add(gid, -w)
        return acc.element()

    if pair == "FS":
        i, j = g1.i, g1.j
        k, l = g2.i, g2.j
        if j == k:
            gid, sign = resolve("S", i, l)
            acc.add(gid, ONE, sign)
        if j == l:
            gid, sign = resolve("S", i, k)
            acc.add(gid, -ONE, sign)
        return acc.element()

    if pair == "FT":
        i, j = g1.i, g1.j
        k, l = g2.i, g2.j
        if i == k:
            gid, sign = resolve("T", j, l)
            acc.add(gid, -ONE, sign)
        if i == l:
            gid, sign = resolve("T", j, k)
            acc.add(gid, ONE, sign)
        return acc.element()

    if pair == "FU":
        if g1.j == g2.i:
            acc.add(GeneratorId("U", g1.i), ONE)
        return acc.element()

    if pair == "FV":
        if g1.i == g2.i:
            acc.add(GeneratorId("V", g1.j), -ONE)
        return acc.element()

    if pair == "PQ":
        i, j = g1.i, g1.j
        k, l = g2.i, g2.j
        if i == j and k == l:
            if i == k:
                acc.add(GeneratorId("H", i), _TWO)
            return acc.element()
        if i == j:
            if i == k:
                acc.add(GeneratorId("F", i, l), SQRT2)
            if i == l:
                acc.add(GeneratorId("F", i, k), SQRT2)
            return acc.element()
        if k == l:
            if i == k:
                acc.add(GeneratorId("F", j, k), SQRT2)
            if j == k:
                acc.add(GeneratorId("F", i, k), SQRT2)
            return acc.element()
        if j == l:
            acc.add_unit(i, k, ONE)
        if i == l:
            acc.add_unit(j, k, ONE)
        if j == k:
            acc.add_unit(i, l, ONE)
        if i == k:
            acc.add_unit(j, l, ONE)
        acc.add_const(Scalar((i == k and j == l) + (i == l and j == k)))
        return acc.element()

    if pair == "ST":
        i, j = g1.i, g1.j
        k, l = g2.i, g2.j
        if j == k:
            acc.add_unit(i, l, -ONE)
        if j == l:
            acc.add_unit(i, k, ONE)
        if i == k:
            acc.add_unit(j, l, ONE)
        if i == l:
            acc.add_unit(j, k, -ONE)
        acc.add_const(Scalar((i == l and j == k) - (i == k and j == l)))
        return acc.element()

    if pair == "SV":
        i, j = g1.i, g1.j
        k = g2.i
        if i == k:
            acc.add(GeneratorId("U", j), -ONE)
        if j == k:
            acc.add(GeneratorId("U", i), ONE)
        return acc.element()

    if pair == "TU":
        i, j = g1.i, g1.j
        k = g2.i
        if i == k:
            acc.add(GeneratorId("V", j), ONE)
        if j == k:
            acc.add(GeneratorId("V", i), -ONE)
        return acc.element()

    if pair == "UU":
        gid, sign = resolve("S", g1.i, g2.i)
        acc.add(gid, ONE, sign)
        return acc.element()

    if pair == "UV":
        if g1.i == g2.i:
            acc.add(GeneratorId("H", g1.i), ONE)
        else:
            acc.add(GeneratorId("F", g1.i, g2.i), ONE)
        return acc.element()

    if pair == "VV":
        gid, sign = resolve("T", g1.i, g2.i)
        acc.add(gid, -ONE, sign)
        return acc.element()

    raise ValueError(f"no bracket rule for kinds {k1!r}, {k2!r} in series {series}")


class LieAlgebra:
    """A basis, its index map, and the antisymmetric structure table.

    Instances are treated as immutable; mutation helpers return copies.
    """

    def __init__(self, series: str, rank: int, basis, table, n_indices: int):
        self.series = series
        self.rank = rank
        self.basis = tuple(basis)
        self.index = {gid: pos for pos, gid in enumerate(self.basis)}
        self.table = table
        self.n_indices = n_indices

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_member(self, gid: GeneratorId) -> None:
        if gid not in self.index:
            raise ForeignGeneratorError(f"{gid.label} is not in the {self.series}{self.rank} basis")

    def bracket_gens(self, p: GeneratorId, q: GeneratorId) -> Element:
        self._check_member(p)
        self._check_member(q)
        if p == q:
            return Element()
        if self.index[p] < self.index[q]:
            entry = self.table.get((p, q))
            return entry.copy() if entry is not None else Element()
        entry = self.table.get((q, p))
        return -entry if entry is not None else Element()

    def bracket(self, x, y) -> Element:
        if isinstance(x, GeneratorId):
            x = Element.gen(x)
        if isinstance(y, GeneratorId):
            y = Element.gen(y)
        out = Element()
        for gx, cx in x.terms():
            for gy, cy in y.terms():
                inner = self.bracket_gens(gx, gy)
                if inner:
                    factor = cx * cy
                    for gid, coeff in inner.terms():
                        out.add_term(gid, coeff * factor)
        return out

    def weight_of(self, gid: GeneratorId) -> tuple[int, ...]:
        return weight(gid, self.n_indices)

    def restrict(self, keep) -> LieAlgebra:
        """Sub-table on a bracket-closed subset of the basis (order kept)."""
        keep = tuple(keep)
        kept = set(keep)
        for gid in keep:
            self._check_member(gid)
        table = {}
        for p, q in itertools.combinations(keep, 2):
            out = self.bracket_gens(p, q)
            if out.support() - kept:
                raise ClosureError(
                    f"[{p.label}, {q.label}] leaves the restricted span")
            if out:
                key = (p, q) if self.index[p] < self.index[q] else (q, p)
                entry = out if key == (p, q) else -out
                table[key] = entry
        sub = LieAlgebra(self.series, self.rank, keep, table, self.n_indices)
        return sub

    def to_json(self) -> dict:
        return serialize.table_json(self.series, self.rank, self.basis, self.table)


@lru_cache(maxsize=None)
def build_series(series: str, rank: int) -> LieAlgebra:
    """Construct the centrally extended algebra with its full bracket table."""
    basis = enumerate_generators(series, rank)
    members = set(basis)
    n = cartan_count(series, rank)
    table = {}
    for p, q in itertools.combinations(basis, 2):
        out = _rule(series, p, q)
        if out:
            stray = out.support() - members
            if stray:
                raise ClosureError(
                    f"[{p.label}, {q.label}] produced foreign generators "
                    f"{sorted(g.label for g in stray)}")
            table[(p, q)] = out
    return LieAlgebra(series, rank, basis, table, n)


def mutate_bracket(alg: LieAlgebra, p: GeneratorId, q: GeneratorId,
                   value: Element) -> LieAlgebra:
    """Copy of alg with a single table entry replaced (test fixture helper)."""
    alg._check_member(p)
    alg._check_member(q)
    if alg.index[p] > alg.index[q]:
        p, q, value = q, p, -value
    table = dict(alg.table)
    if value:
        table[(p, q)] = value
    else:
        table.pop((p, q), None)
    return LieAlgebra(alg.series, alg.rank, alg.basis, table, alg.n_indices)


def shift_generator(gid: GeneratorId, offset: int) -> GeneratorId:
    if gid.j is None:
        return GeneratorId(gid.kind, gid.i + offset)
    return GeneratorId(gid.kind, gid.i + offset, gid.j + offset)


def _jacobi_residual(alg: LieAlgebra, x: GeneratorId, y: GeneratorId,
                     z: GeneratorId) -> Element:
    total = alg.bracket(alg.bracket_gens(x, y), Element.gen(z))
    total = total + alg.bracket(alg.bracket_gens(y, z), Element.gen(x))
    total = total + alg.bracket(alg.bracket_gens(z, x), Element.gen(y))
    return total


def _jacobi_chunk(args):
    alg, combos = args
    bad = []
    for x, y, z in combos:
        residual = _jacobi_residual(alg, x, y, z)
        if residual:
            bad.append((x, y, z, residual))
    return bad


def verify_jacobi(alg: LieAlgebra, jobs: int = 1) -> CheckReport:
    """Brute-force Jacobi identity over every unordered basis triple."""
    combos = list(itertools.combinations(alg.basis, 3))
    report = CheckReport(check="jacobi", passed=True, checked=len(combos))
    if jobs > 1 and len(combos) >= 4000:
        chunk = (len(combos) + jobs - 1) // jobs
        batches = [(alg, combos[k:k + chunk]) for k in range(0, len(combos), chunk)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_jacobi_chunk, batches)
        bad = [item for sub in results for item in sub]
    else:
        bad = _jacobi_chunk((alg, combos))
    for x, y, z, residual in bad:
        report.add_violation({
            "indices": [x.label, y.label, z.label],
            "residual": serialize.element_json(residual, alg.index),
        })
    return report
