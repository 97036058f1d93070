# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled incremental reduced echelon form over the Gaussian integers.

Same data layout and semantics as ``_echelon_py``: rows are dicts mapping a
column to a ``(re, im)`` pair of Python integers (entries can grow past 64
bits, so they stay arbitrary precision); the speedup comes from typed
containers and C-level loops.
"""
from math import gcd as _gcd

BACKEND = "cython"


cdef dict _content_reduce(dict row):
    cdef object g = 0
    cdef object re_, im_
    for re_, im_ in row.values():
        g = _gcd(g, re_, im_)
        if g == 1:
            return row
    if g > 1:
        for c, v in list(row.items()):
            row[c] = ((<tuple>v)[0] // g, (<tuple>v)[1] // g)
    return row


cdef dict _eliminate(dict r, dict p, object col, object pv):
    cdef tuple t = r.pop(col)
    cdef object br = t[0], bi = t[1]
    cdef object x, y, tr, ti, nr, ni
    cdef tuple old
    if pv != 1:
        for c, v in list(r.items()):
            r[c] = (pv * (<tuple>v)[0], pv * (<tuple>v)[1])
    for c, v in p.items():
        if c == col:
            continue
        x = (<tuple>v)[0]
        y = (<tuple>v)[1]
        tr = br * x - bi * y
        ti = br * y + bi * x
        o = r.get(c)
        if o is None:
            r[c] = (-tr, -ti)
        else:
            old = <tuple>o
            nr = old[0] - tr
            ni = old[1] - ti
            if nr or ni:
                r[c] = (nr, ni)
            else:
                del r[c]
    return r


cdef class Echelon:
    cdef public object ncols
    cdef public dict rows

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}

    def copy(self):
        cdef Echelon e = Echelon(self.ncols)
        e.rows = {c: dict(r) for c, r in self.rows.items()}
        return e

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    cpdef dict reduce(self, dict row):
        cdef dict r = {c: v for c, v in row.items() if (<tuple>v)[0] or (<tuple>v)[1]}
        cdef dict rows = self.rows
        cdef dict p
        cdef list hits = [c for c in r if c in rows]
        if not hits:
            return r
        hits.sort()
        for c in hits:
            if c in r:
                p = <dict>rows[c]
                r = _eliminate(r, p, c, (<tuple>p[c])[0])
        if r:
            _content_reduce(r)
        return r

    cpdef bint insert(self, dict row):
        cdef dict r = self.reduce(row)
        cdef dict other
        if not r:
            return False
        lead = min(r)
        a, b = r[lead]
        if b or a < 0:
            r = {c: ((<tuple>v)[0] * a + (<tuple>v)[1] * b, (<tuple>v)[1] * a - (<tuple>v)[0] * b) for c, v in r.items()}
            _content_reduce(r)
        pv = (<tuple>r[lead])[0]
        rows = self.rows
        for c in list(rows):
            other = <dict>rows[c]
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

    cpdef bint contains(self, dict row):
        return not self.reduce(row)
