"""Pure-Python kernel routines.

These functions are the hot paths of the whole package: merging term
dictionaries, distributing products, applying the weight ladder operators
and running the exact integer elimination behind invariant discovery.
The compiled build (_kernels_cy) mirrors this module function for
function; either one satisfies the same contract and the test suite
cross-checks them against each other.

Polynomials enter as plain dicts mapping exponent tuples to nonzero
coefficients (Fraction or int). Functions never mutate their arguments.
"""

from fractions import Fraction
from math import gcd, lcm

BACKEND = "pure"


def poly_add(a, b):
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


def poly_neg(a):
    return {k: -v for k, v in a.items()}


def poly_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def poly_mul(a, b):
    if not a or not b:
        return {}
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
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


def poly_eval(a, values):
    total = Fraction(0)
    for exps, coeff in a.items():
        term = Fraction(coeff)
        for v, e in zip(values, exps):
            if e:
                term *= v**e
        total += term
    return total


def ladder_apply(a, rules):
    """Apply sum_r m_r * a_dst(r) * d/d a_src(r) to a term dict.

    Each rule is a (src, dst, m) triple of small ints; adjacent src/dst
    indices make this a weight shift by +-1 on every term.
    """
    out = {}
    for exps, coeff in a.items():
        for src, dst, mult in rules:
            e = exps[src]
            if not e:
                continue
            lst = list(exps)
            lst[src] = e - 1
            lst[dst] += 1
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


def _primitive_row(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _primitive_vector(fracs):
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


def nullspace_int(rows, ncols):
    """Primitive integer basis of the right nullspace of an integer matrix.

    `rows` holds sparse rows as {column: value} dicts. Elimination is
    fraction-free (cross multiplication with content reduction) and fully
    deterministic: columns are scanned in order, the first remaining row
    with a nonzero entry pivots, and one basis vector is emitted per free
    column, ascending. Each vector has coprime entries and a positive
    first nonzero entry.
    """
    work = []
    for r in rows:
        row = {j: v for j, v in r.items() if v}
        if row:
            work.append(_primitive_row(row))
    echelon = []
    for col in range(ncols):
        pidx = -1
        for i in range(len(work)):
            if work[i].get(col):
                pidx = i
                break
        if pidx < 0:
            continue
        pivot = work.pop(pidx)
        if pivot[col] < 0:
            pivot = {j: -v for j, v in pivot.items()}
        p = pivot[col]
        reduced = []
        for row in work:
            b = row.get(col)
            if not b:
                reduced.append(row)
                continue
            new = {j: v * p for j, v in row.items()}
            for j, v in pivot.items():
                s = new.get(j, 0) - b * v
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
                    s += c * v[j]
            v[col] = -s / row[col]
        basis.append(_primitive_vector(v))
    return basis
