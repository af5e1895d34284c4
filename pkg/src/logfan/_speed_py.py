"""Pure-Python lattice-point enumeration kernels.

These are the reference implementations: arbitrary precision, no overflow
concerns.  The compiled module _speed mirrors their semantics for inputs that
fit in 64-bit arithmetic; _kernels picks between the two.
"""

from __future__ import annotations


def parallelepiped_points(lo, hi, sub, adj, det, mat, d, k):
  """Lattice points of a half-open parallelepiped spanned by k independent
  vectors in Z^d.

  The parallelepiped is {sum t_i r_i : 0 <= t_i < 1} where the r_i are the
  columns of mat (d x k, row-major flat list).  sub lists k row indices such
  that the corresponding k x k submatrix M_I is invertible; adj is its
  adjugate (row-major flat) and det its determinant, normalized positive.
  For each integer point x of the box [lo, hi] the candidate coefficients are
  a = adj * x_I with t = a / det; x belongs iff 0 <= a_i < det for all i and
  mat * a == det * x exactly.

  Returns the accepted points as tuples, in box iteration order.
  """
  assert det > 0
  out = []
  x = list(lo)
  if any(l > h for l, h in zip(lo, hi)):
    return out
  while True:
    a = [0] * k
    ok = True
    for i in range(k):
      s = 0
      for j in range(k):
        s += adj[i * k + j] * x[sub[j]]
      if s < 0 or s >= det:
        ok = False
        break
      a[i] = s
    if ok:
      for r in range(d):
        s = 0
        for j in range(k):
          s += mat[r * k + j] * a[j]
        if s != det * x[r]:
          ok = False
          break
      if ok:
        out.append(tuple(x))
    # odometer increment
    pos = d - 1
    while pos >= 0:
      if x[pos] < hi[pos]:
        x[pos] += 1
        break
      x[pos] = lo[pos]
      pos -= 1
    if pos < 0:
      return out


def box_cone_points(lo, hi, ineq, n_ineq, eq, n_eq, d):
  """Integer points x of the box [lo, hi] with ineq_r . x >= 0 for every
  inequality row and eq_r . x == 0 for every equality row.

  ineq and eq are row-major flat lists (n_ineq x d and n_eq x d).
  """
  out = []
  if any(l > h for l, h in zip(lo, hi)):
    return out
  x = list(lo)
  while True:
    ok = True
    for r in range(n_ineq):
      s = 0
      for j in range(d):
        s += ineq[r * d + j] * x[j]
      if s < 0:
        ok = False
        break
    if ok:
      for r in range(n_eq):
        s = 0
        for j in range(d):
          s += eq[r * d + j] * x[j]
        if s != 0:
          ok = False
          break
    if ok:
      out.append(tuple(x))
    pos = d - 1
    while pos >= 0:
      if x[pos] < hi[pos]:
        x[pos] += 1
        break
      x[pos] = lo[pos]
      pos -= 1
    if pos < 0:
      return out
