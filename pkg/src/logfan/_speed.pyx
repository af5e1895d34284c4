# cython: language_level=3
"""Compiled lattice-point enumeration kernels.

Same contract as _speed_py; inputs must fit 64-bit arithmetic including the
intermediate dot products (_kernels checks a worst-case bound before
dispatching here).
"""

from libc.stdlib cimport malloc, free


def parallelepiped_points(lo, hi, sub, adj, det, mat, int d, int k):
    cdef long long cdet = det
    cdef long long *clo = <long long *> malloc(d * sizeof(long long))
    cdef long long *chi = <long long *> malloc(d * sizeof(long long))
    cdef long long *cx = <long long *> malloc(d * sizeof(long long))
    cdef long long *ca = <long long *> malloc(k * sizeof(long long))
    cdef int *csub = <int *> malloc(k * sizeof(int))
    cdef long long *cadj = <long long *> malloc(k * k * sizeof(long long))
    cdef long long *cmat = <long long *> malloc(d * k * sizeof(long long))
    cdef int i, j, r, pos
    cdef long long s
    cdef bint ok
    out = []
    try:
        for i in range(d):
            clo[i] = lo[i]
            chi[i] = hi[i]
            cx[i] = clo[i]
            if clo[i] > chi[i]:
                return out
        for i in range(k):
            csub[i] = sub[i]
        for i in range(k * k):
            cadj[i] = adj[i]
        for i in range(d * k):
            cmat[i] = mat[i]
        while True:
            ok = True
            for i in range(k):
                s = 0
                for j in range(k):
                    s += cadj[i * k + j] * cx[csub[j]]
                if s < 0 or s >= cdet:
                    ok = False
                    break
                ca[i] = s
            if ok:
                for r in range(d):
                    s = 0
                    for j in range(k):
                        s += cmat[r * k + j] * ca[j]
                    if s != cdet * cx[r]:
                        ok = False
                        break
                if ok:
                    out.append(tuple([cx[i] for i in range(d)]))
            pos = d - 1
            while pos >= 0:
                if cx[pos] < chi[pos]:
                    cx[pos] += 1
                    break
                cx[pos] = clo[pos]
                pos -= 1
            if pos < 0:
                return out
    finally:
        free(clo); free(chi); free(cx); free(ca)
        free(csub); free(cadj); free(cmat)


def box_cone_points(lo, hi, ineq, int n_ineq, eq, int n_eq, int d):
    cdef long long *clo = <long long *> malloc(d * sizeof(long long))
    cdef long long *chi = <long long *> malloc(d * sizeof(long long))
    cdef long long *cx = <long long *> malloc(d * sizeof(long long))
    cdef long long *cineq = NULL
    cdef long long *ceq = NULL
    cdef int i, r, pos
    cdef long long s
    cdef bint ok
    out = []
    if n_ineq > 0:
        cineq = <long long *> malloc(n_ineq * d * sizeof(long long))
    if n_eq > 0:
        ceq = <long long *> malloc(n_eq * d * sizeof(long long))
    try:
        for i in range(d):
            clo[i] = lo[i]
            chi[i] = hi[i]
            cx[i] = clo[i]
            if clo[i] > chi[i]:
                return out
        for i in range(n_ineq * d):
            cineq[i] = ineq[i]
        for i in range(n_eq * d):
            ceq[i] = eq[i]
        while True:
            ok = True
            for r in range(n_ineq):
                s = 0
                for i in range(d):
                    s += cineq[r * d + i] * cx[i]
                if s < 0:
                    ok = False
                    break
            if ok:
                for r in range(n_eq):
                    s = 0
                    for i in range(d):
                        s += ceq[r * d + i] * cx[i]
                    if s != 0:
                        ok = False
                        break
            if ok:
                out.append(tuple([cx[i] for i in range(d)]))
            pos = d - 1
            while pos >= 0:
                if cx[pos] < chi[pos]:
                    cx[pos] += 1
                    break
                cx[pos] = clo[pos]
                pos -= 1
            if pos < 0:
                return out
    finally:
        free(clo); free(chi); free(cx)
        if cineq != NULL:
            free(cineq)
        if ceq != NULL:
            free(ceq)
