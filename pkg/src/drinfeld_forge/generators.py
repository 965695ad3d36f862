"""Generator identities, canonical basis enumeration, and labels.

Index conventions, shared by every module:

* series A at rank n carries Cartan indices 1..n+1 (its diagonal block is the
  full gl(n+1)), series B/C/D carry 1..n;
* H_i and the central I_i are indexed by single Cartan indices;
* F_ij (i != j) are the gl-type root generators;
* P_ij = P_ji (i <= j stored) are the symmetric raising pairs of series C and
  Q_ij their lowering mirrors;
* S_ij = -S_ji (i < j stored, diagonal vanishes) are the antisymmetric raising
  pairs of series D and B, T_ij their lowering mirrors;
* U_i / V_i are the odd raising/lowering generators of series B;
* X / x name rotated Cartan combinations: X_k = (H_k + i I_k)/sqrt2 with one
  index, or (H_i + i H_j)/sqrt2 with an index pair, and x mirrors with -i.

Canonical basis order: all H ascending, all I ascending, positive-root
generators grouped by kind (F, then P or S, then U) each in lexicographic
index order, then negative-root generators mirroring the positive block
element for element.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import RankError

SERIES = ("A", "B", "C", "D")

_SINGLE_INDEX = frozenset("HIUVXx")
_SYMMETRIC = frozenset("PQ")
_ANTISYMMETRIC = frozenset("ST")
_RAISING_OF = {"F": "F", "P": "Q", "S": "T", "U": "V"}
_LOWERING_OF = {v: k for k, v in _RAISING_OF.items()}


class GeneratorId(NamedTuple):
    kind: str
    i: int
    j: int | None = None

    @property
    def label(self) -> str:
        sep = "^" if self.kind == "x" else ""
        if self.j is None:
            return f"{self.kind}{sep}{self.i}"
        return f"{self.kind}{sep}{self.i},{self.j}"


def parse_label(text: str) -> GeneratorId:
    kind = text[0]
    body = text[1:]
    if body.startswith("^"):
        body = body[1:]
    try:
        if "," in body:
            left, right = body.split(",")
            return GeneratorId(kind, int(left), int(right))
        return GeneratorId(kind, int(body))
    except ValueError as exc:
        raise ValueError(f"unparseable generator label {text!r}") from exc


def validate_series_rank(series: str, rank: int) -> None:
    if series not in SERIES:
        raise RankError(f"unknown series {series!r}, expected one of {SERIES}")
    minimum = 2 if series == "D" else 1
    if not isinstance(rank, int) or rank < minimum:
        raise RankError(f"series {series} requires integer rank >= {minimum}, got {rank}")


def cartan_count(series: str, rank: int) -> int:
    """Number of Cartan indices N (rank+1 for A, rank otherwise)."""
    validate_series_rank(series, rank)
    return rank + 1 if series == "A" else rank


def dimension(series: str, rank: int) -> int:
    """Dimension of the centrally extended algebra, basis included."""
    n = rank
    if series == "A":
        return (n + 1) * (n + 1) + (n + 1)
    if series == "B" or series == "C":
        return n * (2 * n + 1) + n
    return n * (2 * n - 1) + n


def positive_roots(series: str, rank: int) -> list[GeneratorId]:
    """Positive-root block in canonical order (no Cartan, no centrals)."""
    n = cartan_count(series, rank)
    out = [GeneratorId("F", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if series == "C":
        out += [GeneratorId("P", i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    elif series in ("D", "B"):
        out += [GeneratorId("S", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if series == "B":
        out += [GeneratorId("U", i) for i in range(1, n + 1)]
    return out


def mirror(gid: GeneratorId) -> GeneratorId:
    """Matched opposite-root generator: F_ij <-> F_ji, P <-> Q, S <-> T, U <-> V."""
    if gid.kind == "F":
        return GeneratorId("F", gid.j, gid.i)
    if gid.kind in _RAISING_OF:
        return GeneratorId(_RAISING_OF[gid.kind], gid.i, gid.j)
    if gid.kind in _LOWERING_OF:
        return GeneratorId(_LOWERING_OF[gid.kind], gid.i, gid.j)
    raise ValueError(f"{gid.label} has no mirror")


def enumerate_generators(series: str, rank: int) -> tuple[GeneratorId, ...]:
    """Canonical ordered basis of the centrally extended algebra."""
    n = cartan_count(series, rank)
    basis = [GeneratorId("H", i) for i in range(1, n + 1)]
    basis += [GeneratorId("I", i) for i in range(1, n + 1)]
    plus = positive_roots(series, rank)
    basis += plus
    basis += [mirror(g) for g in plus]
    assert len(basis) == dimension(series, rank)
    return tuple(basis)


def resolve(kind: str, i: int, j: int) -> tuple[GeneratorId | None, int]:
    """Normalize a raw two-index symbol to (stored generator, sign).

    P/Q are symmetric, S/T antisymmetric with vanishing diagonal; F keeps its
    index order (both orders are basis members). Returns (None, 0) for a
    symbol that is identically zero.
    """
    if kind == "F":
        if i == j:
            raise ValueError("F requires distinct indices; diagonal must be resolved upstream")
        return GeneratorId("F", i, j), 1
    if kind in _SYMMETRIC:
        return (GeneratorId(kind, i, j), 1) if i <= j else (GeneratorId(kind, j, i), 1)
    if kind in _ANTISYMMETRIC:
        if i == j:
            return None, 0
        return (GeneratorId(kind, i, j), 1) if i < j else (GeneratorId(kind, j, i), -1)
    raise ValueError(f"resolve() does not apply to kind {kind!r}")


def weight(gid: GeneratorId, n_indices: int) -> tuple[int, ...]:
    """Cartan weight vector: bracket(H_k, g) = weight[k-1] * g."""
    w = [0] * n_indices
    kind = gid.kind
    if kind in ("H", "I", "X", "x"):
        return tuple(w)
    sign = 1 if kind in ("P", "S", "U") else -1
    if kind == "F":
        w[gid.i - 1] += 1
        w[gid.j - 1] -= 1
    elif kind in ("U", "V"):
        w[gid.i - 1] += sign
    else:
        w[gid.i - 1] += sign
        w[gid.j - 1] += sign
    return tuple(w)
