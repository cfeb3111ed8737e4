"""Exact linear algebra over Q: row reduction and incremental spans.

Vectors are lists of Fractions; the incremental span keeps its rows fully
reduced so membership tests are a single elimination pass.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], int, list[int]]:
    """Reduced row echelon form.

    Returns (nonzero reduced rows, rank, pivot column indices).  The input
    is not mutated.  Empty input is fine.
    """
    if not rows:
        return [], 0, []
    m = [list(r) for r in rows]
    ncols = len(m[0])
    for r in m:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(m)):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], rank, pivots


def rank_of(rows: list[list[Fraction]]) -> int:
    return rref(rows)[1]


class Span:
    """Incrementally built subspace of Q^N with exact membership tests.

    Rows are stored reduced: each has a unique pivot column with entry 1,
    and that column is zero in every other row.  When track_original is
    set, each reduced row also carries its expression in the original
    accepted vectors, so expand() can answer in that basis.
    """

    __slots__ = ("ncols", "_rows", "_pivot_of_row", "_track", "_combos")

    def __init__(self, ncols: int, track_original: bool = False) -> None:
        self.ncols = ncols
        self._rows: list[list[Fraction]] = []
        self._pivot_of_row: list[int] = []
        self._track = track_original
        # _combos[i][j] = coefficient of accepted vector j in reduced row i
        self._combos: list[dict[int, Fraction]] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _eliminate(self, vec: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
        v = list(vec)
        coeffs = [Fraction(0)] * len(self._rows)
        for i, (row, piv) in enumerate(zip(self._rows, self._pivot_of_row)):
            c = v[piv]
            if c:
                coeffs[i] = c
                v = [a - c * b for a, b in zip(v, row)]
        return v, coeffs

    def contains(self, vec: list[Fraction]) -> bool:
        if len(vec) != self.ncols:
            raise ValueError("wrong vector length")
        residue, _ = self._eliminate(vec)
        return not any(residue)

    def add(self, vec: list[Fraction]) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        if len(vec) != self.ncols:
            raise ValueError("wrong vector length")
        v, coeffs = self._eliminate(vec)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [c * inv for c in v]
        combo: dict[int, Fraction] = {}
        if self._track:
            # vec = sum coeffs[i] * row_i + residue, so the new reduced row
            # is inv * (vec - sum coeffs[i] * row_i) in original terms
            combo = {self.dim: inv}
            for i, c in enumerate(coeffs):
                if c:
                    for j, cj in self._combos[i].items():
                        val = combo.get(j, Fraction(0)) - inv * c * cj
                        if val:
                            combo[j] = val
                        else:
                            combo.pop(j, None)
        for i, row in enumerate(self._rows):
            c = row[piv]
            if c:
                self._rows[i] = [a - c * b for a, b in zip(row, v)]
                if self._track:
                    updated = dict(self._combos[i])
                    for j, cj in combo.items():
                        val = updated.get(j, Fraction(0)) - c * cj
                        if val:
                            updated[j] = val
                        else:
                            updated.pop(j, None)
                    self._combos[i] = updated
        self._rows.append(v)
        self._pivot_of_row.append(piv)
        if self._track:
            self._combos.append(combo)
        return True

    def expand(self, vec: list[Fraction]) -> list[Fraction] | None:
        """Coordinates of vec in the accepted-vector basis, or None.

        Requires track_original.  Index k refers to the k-th vector for
        which add() returned True.
        """
        if not self._track:
            raise ValueError("span was built without original tracking")
        if len(vec) != self.ncols:
            raise ValueError("wrong vector length")
        residue, coeffs = self._eliminate(vec)
        if any(residue):
            return None
        out = [Fraction(0)] * self.dim
        for i, c in enumerate(coeffs):
            if c:
                for j, cj in self._combos[i].items():
                    out[j] += c * cj
        return out

    def basis_rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]
