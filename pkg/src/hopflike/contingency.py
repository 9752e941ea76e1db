"""Non-negative integer matrices with prescribed row and column margins.

A matrix K with row margins alpha and column margins beta induces two
refinements of n = sum(alpha): its entries read row by row (kappa-row)
and column by column (kappa-col), together with the permutation of
(1, ..., n) that translates each cell's row-order interval onto its
column-order interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .compositions import Composition
from .errors import HopflikeError, SumMismatchError


class Permutation:
    """Bijection on 1..n; ``images[p-1]`` is the image of position p."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise HopflikeError(f"not a bijection on 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, pos: int) -> int:
        return self.images[pos - 1]

    def after(self, other: "Permutation") -> "Permutation":
        """self . other (apply ``other`` first)."""
        if self.size != other.size:
            raise HopflikeError("size mismatch in permutation composition")
        return Permutation(self.images[v - 1] for v in other.images)

    def inverse(self) -> "Permutation":
        out = [0] * self.size
        for p, v in enumerate(self.images, start=1):
            out[v - 1] = p
        return Permutation(out)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.images})"


class ContingencyMatrix:
    """Immutable grid of non-negative integers."""

    __slots__ = ("entries", "nrows", "ncols")

    def __init__(self, entries, ncols=None):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if rows:
            ncols = len(rows[0])
            for row in rows:
                if len(row) != ncols:
                    raise HopflikeError("ragged matrix")
                for v in row:
                    if v < 0:
                        raise HopflikeError(f"negative entry {v}")
        else:
            ncols = int(ncols or 0)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("ContingencyMatrix is immutable")

    @property
    def raw_row_margins(self) -> tuple:
        return tuple(sum(row) for row in self.entries)

    @property
    def raw_col_margins(self) -> tuple:
        return tuple(
            sum(row[j] for row in self.entries) for j in range(self.ncols)
        )

    @property
    def row_margins(self) -> Composition:
        return Composition(self.raw_row_margins)

    @property
    def col_margins(self) -> Composition:
        return Composition(self.raw_col_margins)

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, ContingencyMatrix)
            and self.entries == other.entries
            and self.ncols == other.ncols
        )

    def __hash__(self):
        return hash((self.entries, self.ncols))

    def __repr__(self):
        return f"ContingencyMatrix({self.entries!r})"

    def __str__(self):
        return "[" + ",".join(
            "[" + ",".join(str(v) for v in row) + "]" for row in self.entries
        ) + "]"


@dataclass(frozen=True)
class KappaResult:
    """Row- and column-order refinements of a matrix, raw and canonical."""

    row: Composition
    col: Composition
    row_raw: tuple
    col_raw: tuple


def _parts(margins):
    if isinstance(margins, Composition):
        return margins.parts
    return tuple(margins)


def enumerate_matrices(alpha, beta, mode: str = "nonnegative") -> list:
    """All matrices with the given margins, largest-first row-major order.

    ``mode`` is ``nonnegative`` (entries >= 0, the default: block sums
    need zeros) or ``strictly-positive`` (entries >= 1).  Matrices are
    ordered by their flattened entry tuple, lexicographically largest
    first, so reports and caches are deterministic.
    """
    a = _parts(alpha)
    b = _parts(beta)
    if sum(a) != sum(b):
        raise SumMismatchError(
            f"margin sums differ: {sum(a)} vs {sum(b)}"
        )
    if mode not in ("nonnegative", "strictly-positive"):
        raise HopflikeError(f"unknown mode {mode!r}")
    low = 0 if mode == "nonnegative" else 1
    r, s = len(a), len(b)
    if r == 0 or s == 0:
        # only reachable for n = 0; a grid with no cells
        if r == 0:
            return [ContingencyMatrix((), ncols=s)]
        return [ContingencyMatrix(((),) * r, ncols=0)]
    out = []
    rows = []

    def fill(i, colrem):
        if i == r:
            out.append(ContingencyMatrix(tuple(rows)))
            return
        remaining_rows = r - i - 1
        row = [0] * s

        def cell(j, rowrem):
            if j == s - 1:
                v = rowrem
                if low <= v <= colrem[j] - low * remaining_rows:
                    row[j] = v
                    colrem[j] -= v
                    rows.append(tuple(row))
                    fill(i + 1, colrem)
                    rows.pop()
                    colrem[j] += v
                return
            later_capacity = sum(
                colrem[k] - low * remaining_rows for k in range(j + 1, s)
            )
            hi = min(rowrem - low * (s - 1 - j), colrem[j] - low * remaining_rows)
            lo = max(low, rowrem - later_capacity)
            for v in range(hi, lo - 1, -1):
                row[j] = v
                colrem[j] -= v
                cell(j + 1, rowrem - v)
                colrem[j] += v

        cell(0, a[i])

    fill(0, list(b))
    return out


@lru_cache(maxsize=None)
def _count(rows, cols, low):
    # cols is sorted; the count only depends on the multiset of capacities.
    if not rows:
        return 1 if sum(cols) == 0 else 0
    total = 0
    s = len(cols)
    remaining = len(rows) - 1

    def distribute(j, rowrem, acc):
        nonlocal total
        if j == s - 1:
            v = rowrem
            if low <= v <= cols[j] - low * remaining:
                rest = tuple(sorted(acc + (cols[j] - v,)))
                total += _count(rows[1:], rest, low)
            return
        hi = min(rowrem - low * (s - 1 - j), cols[j] - low * remaining)
        for v in range(low, hi + 1):
            distribute(j + 1, rowrem - v, acc + (cols[j] - v,))

    distribute(0, rows[0], ())
    return total


def count_matrices(alpha, beta, mode: str = "nonnegative") -> int:
    """Number of matrices with the given margins.

    Same count as ``len(enumerate_matrices(alpha, beta, mode))`` but via
    a memoized recursion that never materializes the matrices.
    """
    a = _parts(alpha)
    b = _parts(beta)
    if sum(a) != sum(b):
        raise SumMismatchError(f"margin sums differ: {sum(a)} vs {sum(b)}")
    low = 0 if mode == "nonnegative" else 1
    if len(a) == 0 or len(b) == 0:
        return 1  # no cells; equal sums force n = 0
    if low == 1 and (min(a) < len(b) or min(b) < len(a)):
        return 0
    return _count(a, tuple(sorted(b)), low)


def kappa(K: ContingencyMatrix) -> KappaResult:
    """Row-by-row and column-by-column readings of the entries."""
    row_raw = tuple(v for row in K.entries for v in row)
    col_raw = tuple(
        K.entries[i][j] for j in range(K.ncols) for i in range(K.nrows)
    )
    return KappaResult(Composition(row_raw), Composition(col_raw), row_raw, col_raw)


def sigma_K(K: ContingencyMatrix) -> Permutation:
    """Positionwise shuffle from the row-order to the column-order reading.

    Each cell (i, j) occupies an interval of width k[i][j] in both
    readings; the permutation translates the row-order interval onto the
    column-order one (the i-th sub-interval of the j-th column block).
    """
    n = K.total
    row_start = {}
    pos = 1
    for i in range(K.nrows):
        for j in range(K.ncols):
            row_start[i, j] = pos
            pos += K.entries[i][j]
    col_start = {}
    pos = 1
    for j in range(K.ncols):
        for i in range(K.nrows):
            col_start[i, j] = pos
            pos += K.entries[i][j]
    images = [0] * n
    for i in range(K.nrows):
        for j in range(K.ncols):
            for d in range(K.entries[i][j]):
                images[row_start[i, j] + d - 1] = col_start[i, j] + d
    return Permutation(images)


def slot_sources(K: ContingencyMatrix) -> tuple:
    """For each nonzero cell in row-major order, its column-major index.

    This is the slot-level shadow of :func:`sigma_K` on the canonical
    refinements: slot p of kappa-row is cell ``rm[p]``, which sits at
    position ``slot_sources(K)[p]`` in kappa-col.
    """
    rm = [
        (i, j)
        for i in range(K.nrows)
        for j in range(K.ncols)
        if K.entries[i][j] > 0
    ]
    cm_index = {}
    idx = 0
    for j in range(K.ncols):
        for i in range(K.nrows):
            if K.entries[i][j] > 0:
                cm_index[i, j] = idx
                idx += 1
    return tuple(cm_index[cell] for cell in rm)


def transpose(K: ContingencyMatrix) -> ContingencyMatrix:
    return ContingencyMatrix(
        tuple(
            tuple(K.entries[i][j] for i in range(K.nrows))
            for j in range(K.ncols)
        ),
        ncols=K.nrows,
    )


def block_decompose(K: ContingencyMatrix) -> list:
    """Finest splitting of K into diagonal blocks along contiguous cuts.

    A cut after row r0 and column s0 is valid when everything outside
    the two diagonal blocks vanishes.  Trailing rows or columns that
    cannot be paired stay inside the final block.
    """
    blocks = []
    r0 = 0
    c0 = 0
    R, S = K.nrows, K.ncols
    while r0 < R and c0 < S:
        # smallest closed block containing row r0 and column c0
        rr, cc = 1, 1
        changed = True
        while changed:
            changed = False
            for i in range(r0, r0 + rr):
                for j in range(c0 + cc, S):
                    if K.entries[i][j]:
                        cc = j - c0 + 1
                        changed = True
            for j in range(c0, c0 + cc):
                for i in range(r0 + rr, R):
                    if K.entries[i][j]:
                        rr = i - r0 + 1
                        changed = True
        if (r0 + rr == R) != (c0 + cc == S):
            # one dimension exhausted: absorb the rest into this block
            rr, cc = R - r0, S - c0
        blocks.append(
            ContingencyMatrix(
                tuple(
                    tuple(K.entries[i][j] for j in range(c0, c0 + cc))
                    for i in range(r0, r0 + rr)
                )
            )
        )
        r0 += rr
        c0 += cc
    if not blocks:
        blocks.append(K)
    return blocks
