"""Pure-Python incremental reduced echelon form over the Gaussian integers.

Rows are sparse ``dict[int, tuple[int, int]]`` mapping a column to the
Gaussian integer ``(re, im)``.  A row may be rescaled by any nonzero scalar
without changing the row space, so elimination is fraction-free: every
stored row has a real positive pivot and its integer content divided out.

The compiled twin in ``_echelon_c.pyx`` implements the same interface.
"""
from math import gcd

BACKEND = "python"


def _content_reduce(row):
    g = 0
    for re_, im_ in row.values():
        g = gcd(g, re_, im_)
        if g == 1:
            return row
    if g > 1:
        for c, (re_, im_) in row.items():
            row[c] = (re_ // g, im_ // g)
    return row


def _eliminate(r, p, col, pv):
    """Return ``pv*r - r[col]*p``; ``pv`` is the real pivot of ``p`` at ``col``."""
    br, bi = r.pop(col)
    if pv != 1:
        for c, (x, y) in r.items():
            r[c] = (pv * x, pv * y)
    for c, (x, y) in p.items():
        if c == col:
            continue
        tr = br * x - bi * y
        ti = br * y + bi * x
        old = r.get(c)
        if old is None:
            r[c] = (-tr, -ti)
        else:
            nr = old[0] - tr
            ni = old[1] - ti
            if nr or ni:
                r[c] = (nr, ni)
            else:
                del r[c]
    return r


class Echelon:
    """Row space kept in fully reduced echelon form.

    ``rows`` maps each pivot column to its row; every row vanishes on all
    other pivot columns and has a real positive integer at its own pivot.
    """

    __slots__ = ("ncols", "rows")

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}

    def copy(self):
        e = Echelon(self.ncols)
        e.rows = {c: dict(r) for c, r in self.rows.items()}
        return e

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def reduce(self, row):
        """Reduced (and rescaled) copy of ``row``; empty iff it lies in the span."""
        r = {c: v for c, v in row.items() if v[0] or v[1]}
        rows = self.rows
        hits = [c for c in r if c in rows]
        if not hits:
            return r
        hits.sort()
        for c in hits:
            if c in r:
                p = rows[c]
                r = _eliminate(r, p, c, p[c][0])
        if r:
            _content_reduce(r)
        return r

    def insert(self, row):
        """Add ``row`` to the span; return True iff the rank increased."""
        r = self.reduce(row)
        if not r:
            return False
        lead = min(r)
        a, b = r[lead]
        if b or a < 0:
            # multiply by conj(pivot) so the pivot becomes |pivot|^2 > 0
            r = {c: (x * a + y * b, y * a - x * b) for c, (x, y) in r.items()}
            _content_reduce(r)
        pv = r[lead][0]
        rows = self.rows
        for c in list(rows):
            other = rows[c]
            if lead in other:
                rows[c] = _content_reduce(_eliminate(other, r, lead, pv))
        rows[lead] = r
        return True

    def extend(self, rows):
        grew = False
        for row in rows:
            if self.insert(row):
                grew = True
        return grew

    def contains(self, row):
        return not self.reduce(row)
