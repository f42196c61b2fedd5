"""Dense exact Gaussian elimination over a Field.

Matrices are lists of rows; rows are lists of field values.  Everything
here is deterministic: pivots are chosen left to right, rows in order.
"""


def mat_rank(field, rows):
    if not rows:
        return 0
    work = [list(r) for r in rows]
    ncols = len(work[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(work)):
            if work[r][c] != field.zero:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = field.inv(work[rank][c])
        for r in range(rank + 1, len(work)):
            if work[r][c] != field.zero:
                f = field.mul(work[r][c], inv)
                for cc in range(c, ncols):
                    work[r][cc] = field.sub(work[r][cc], field.mul(f, work[rank][cc]))
        rank += 1
        if rank == len(work):
            break
    return rank


class SpanTracker:
    """Incremental row space with exact elimination.

    Supports rank queries, membership tests and coordinate extraction
    of a vector in terms of the added generators.
    """

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        # echelon rows together with their expression in the generators
        self.rows = []       # list of (pivot_col, row, combo)
        self.ngens = 0

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec, combo=None):
        field = self.field
        vec = list(vec)
        for (pc, row, rcombo) in self.rows:
            if vec[pc] != field.zero:
                f = vec[pc]
                for c in range(pc, self.ncols):
                    if row[c] != field.zero:
                        vec[c] = field.sub(vec[c], field.mul(f, row[c]))
                if combo is not None:
                    for k, v in rcombo.items():
                        combo[k] = field.sub(combo.get(k, field.zero), field.mul(f, v))
        return vec

    def add(self, vec):
        """Add a generator; returns True if it enlarged the span."""
        field = self.field
        idx = self.ngens
        self.ngens += 1
        combo = {idx: field.one}
        vec = self._reduce(vec, combo)
        pc = None
        for c in range(self.ncols):
            if vec[c] != field.zero:
                pc = c
                break
        if pc is None:
            return False
        inv = field.inv(vec[pc])
        vec = [field.mul(inv, v) for v in vec]
        combo = {k: field.mul(inv, v) for k, v in combo.items()}
        self.rows.append((pc, vec, combo))
        self.rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vec):
        vec = self._reduce(vec)
        return all(v == self.field.zero for v in vec)

    def coordinates(self, vec):
        """Express vec in the added generators; None if not in the span.

        Returns a dict generator-index -> coefficient with
        vec = sum coeff * generator.
        """
        field = self.field
        combo = {}
        red = self._reduce(vec, combo)
        if any(v != field.zero for v in red):
            return None
        return {k: field.neg(v) for k, v in combo.items() if v != field.zero}


def nullspace(field, rows, ncols):
    """Basis of the right nullspace of the matrix (rows x ncols).

    Deterministic: free columns in increasing order, reduced echelon.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if work[r][c] != field.zero:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = field.inv(work[rank][c])
        work[rank] = [field.mul(inv, v) for v in work[rank]]
        for r in range(nrows):
            if r != rank and work[r][c] != field.zero:
                f = work[r][c]
                work[r] = [field.sub(work[r][cc], field.mul(f, work[rank][cc]))
                           for cc in range(ncols)]
        pivots.append(c)
        rank += 1
        if rank == nrows:
            break
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [field.zero] * ncols
        vec[free] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(work[r][free])
        basis.append(vec)
    return basis
