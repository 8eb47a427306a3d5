"""Small exact linear-algebra helpers over Fractions (dense, desk scale)."""

from __future__ import annotations

from fractions import Fraction

__all__ = ["rref", "rank", "det", "gram_signature"]


def rref(rows) -> list[list[Fraction]]:
    """Reduced row echelon form; zero rows dropped."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return []
    ncols = len(work[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(work):
            break
        src = next(
            (r for r in range(pivot_row, len(work)) if work[r][col] != 0), None
        )
        if src is None:
            continue
        work[pivot_row], work[src] = work[src], work[pivot_row]
        inv = 1 / work[pivot_row][col]
        work[pivot_row] = [c * inv for c in work[pivot_row]]
        for r in range(len(work)):
            if r != pivot_row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
    return work[:pivot_row]


def rank(rows) -> int:
    return len(rref(rows))


def det(rows) -> Fraction:
    """Determinant of a square rational matrix by exact elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    n = len(work)
    if any(len(row) != n for row in work):
        raise ValueError("determinant needs a square matrix")
    out = Fraction(1)
    for col in range(n):
        src = next((r for r in range(col, n) if work[r][col] != 0), None)
        if src is None:
            return Fraction(0)
        if src != col:
            work[col], work[src] = work[src], work[col]
            out = -out
        piv = work[col][col]
        out *= piv
        for r in range(col + 1, n):
            if work[r][col] != 0:
                f = work[r][col] / piv
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return out


def gram_signature(gram) -> tuple[int, int]:
    """(positive, negative) inertia of a symmetric rational matrix.

    Exact symmetric congruence reduction; zero eigenvalues count in
    neither entry.
    """
    A = [[Fraction(x) for x in row] for row in gram]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("signature needs a square matrix")
    if any(A[i][j] != A[j][i] for i in range(n) for j in range(i)):
        raise ValueError("signature needs a symmetric matrix")
    pos = neg = 0
    for i in range(n):
        if A[i][i] == 0:
            j = next((t for t in range(i + 1, n) if A[t][t] != 0), None)
            if j is not None:
                A[i], A[j] = A[j], A[i]
                for row in A:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((t for t in range(i + 1, n) if A[i][t] != 0), None)
                if j is None:
                    continue
                for t in range(n):
                    A[i][t] += A[j][t]
                for t in range(n):
                    A[t][i] += A[t][j]
        piv = A[i][i]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            if A[r][i] != 0:
                f = A[r][i] / piv
                for c in range(n):
                    A[r][c] -= f * A[i][c]
                for c in range(n):
                    A[c][r] -= f * A[c][i]
    return pos, neg
