# cython: language_level=3
"""Compiled kernel routines; _kernels_py holds the reference semantics."""

from fractions import Fraction
from math import gcd, lcm

BACKEND = "compiled"


def poly_add(dict a, dict b):
    cdef dict out
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = v
        else:
            s = s + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def poly_neg(dict a):
    cdef dict out = {}
    for k, v in a.items():
        out[k] = -v
    return out


def poly_scale(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        out[k] = v * c
    return out


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef Py_ssize_t i, m
    cdef list lst
    if not a or not b:
        return out
    for ka, va in a.items():
        m = len(<tuple> ka)
        for kb, vb in b.items():
            lst = [0] * m
            for i in range(m):
                lst[i] = (<tuple> ka)[i] + (<tuple> kb)[i]
            k = tuple(lst)
            c = va * vb
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def poly_eval(dict a, tuple values):
    cdef Py_ssize_t i, m
    total = Fraction(0)
    for exps, coeff in a.items():
        term = Fraction(coeff)
        m = len(<tuple> exps)
        for i in range(m):
            e = (<tuple> exps)[i]
            if e:
                term = term * values[i] ** e
        total = total + term
    return total


def ladder_apply(dict a, tuple rules):
    """Apply sum_r m_r * a_dst(r) * d/d a_src(r) to a term dict."""
    cdef dict out = {}
    cdef Py_ssize_t src, dst
    cdef list lst
    for exps, coeff in a.items():
        for rule in rules:
            src = (<tuple> rule)[0]
            dst = (<tuple> rule)[1]
            mult = (<tuple> rule)[2]
            e = (<tuple> exps)[src]
            if not e:
                continue
            lst = list(<tuple> exps)
            lst[src] = e - 1
            lst[dst] = lst[dst] + 1
            k = tuple(lst)
            c = coeff * (mult * e)
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


cdef dict _primitive_row(dict row):
    cdef dict out
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        out = {}
        for j, v in row.items():
            out[j] = v // g
        return out
    return row


cdef list _primitive_vector(list fracs):
    cdef list ints
    den = 1
    for x in fracs:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def nullspace_int(rows, Py_ssize_t ncols):
    """Primitive integer basis of the right nullspace; see _kernels_py."""
    cdef list work = []
    cdef list echelon = []
    cdef list reduced, v, basis
    cdef dict row, pivot, new
    cdef Py_ssize_t col, i, pidx, f
    for r in rows:
        row = {j: vv for j, vv in (<dict> r).items() if vv}
        if row:
            work.append(_primitive_row(row))
    for col in range(ncols):
        pidx = -1
        for i in range(len(work)):
            if (<dict> work[i]).get(col):
                pidx = i
                break
        if pidx < 0:
            continue
        pivot = work.pop(pidx)
        if pivot[col] < 0:
            pivot = {j: -vv for j, vv in pivot.items()}
        p = pivot[col]
        reduced = []
        for row in work:
            b = row.get(col)
            if not b:
                reduced.append(row)
                continue
            new = {}
            for j, vv in row.items():
                new[j] = vv * p
            for j, vv in pivot.items():
                s = new.get(j, 0) - b * vv
                if s:
                    new[j] = s
                elif j in new:
                    del new[j]
            if new:
                reduced.append(_primitive_row(new))
        work = reduced
        echelon.append((col, pivot))
    pivot_cols = {c for c, _ in echelon}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for col, row in reversed(echelon):
            s = Fraction(0)
            for j, c in row.items():
                if j > col:
                    s = s + c * v[j]
            v[col] = -s / row[col]
        basis.append(_primitive_vector(v))
    return basis
