"""Small exact linear-algebra helpers over the Scalar field.

Used for span-membership tests (sub-bialgebra checks) and for inverting the
pairing matrix when crossed brackets are reconstructed. Vectors are sparse
dicts keyed by arbitrary hashable coordinates.
"""

from __future__ import annotations

from .scalars import Scalar


class SpanBasis:
    """Incremental row echelon basis over Q(i, sqrt2) for sparse vectors."""

    def __init__(self):
        self._rows: dict = {}          # pivot coordinate -> reduced row

    def reduce(self, vector: dict) -> dict:
        """Residual of vector after elimination against the stored rows."""
        residual = {k: v for k, v in vector.items() if v}
        while residual:
            pivot = next((k for k in residual if k in self._rows), None)
            if pivot is None:
                break
            row = self._rows[pivot]
            factor = residual[pivot]
            for key, value in row.items():
                acc = residual.get(key, Scalar(0)) - factor * value
                if acc:
                    residual[key] = acc
                else:
                    residual.pop(key, None)
        return residual

    def add(self, vector: dict) -> bool:
        """Insert vector; returns True if it enlarged the span."""
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual, key=repr)
        inv = residual[pivot].inv()
        self._rows[pivot] = {k: v * inv for k, v in residual.items()}
        return True

    def contains(self, vector: dict) -> bool:
        return not self.reduce(vector)

    def rows(self):
        """Reduced rows, one per pivot; they span the same space."""
        return list(self._rows.values())

    def __len__(self) -> int:
        return len(self._rows)


def invert_matrix(rows: list[list[Scalar]]) -> list[list[Scalar]]:
    """Exact inverse of a small dense matrix; raises on singular input."""
    n = len(rows)
    aug = [[rows[r][c] for c in range(n)] + [Scalar(1 if k == r else 0) for k in range(n)]
           for r, row in enumerate(rows)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot_row is None:
            raise ZeroDivisionError("singular pairing matrix")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
