"""Exact integer linear algebra over lattices.

Matrices are immutable, arbitrary-precision, and row-major.  The normal forms
(row Hermite, Smith) come with unimodular transformation matrices so callers
can track bases, kernels and cokernels exactly.  No floating point is used
anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
  """An immutable integer matrix.

  Attributes:
    rows: number of rows.
    cols: number of columns.
    entries: row-major tuple of length rows * cols.
  """

  rows: int
  cols: int
  entries: tuple[int, ...]

  def __post_init__(self):
    if self.rows < 0 or self.cols < 0:
      raise ValueError("negative dimensions")
    if len(self.entries) != self.rows * self.cols:
      raise ValueError("entries length %d does not match %dx%d"
                       % (len(self.entries), self.rows, self.cols))
    if not all(isinstance(e, int) for e in self.entries):
      raise TypeError("entries must be integers")

  @staticmethod
  def from_rows(rows: list) -> "IntMatrix":
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if any(len(r) != n for r in rows):
      raise ValueError("ragged rows")
    return IntMatrix(m, n, tuple(int(x) for r in rows for x in r))

  @staticmethod
  def identity(n: int) -> "IntMatrix":
    return IntMatrix(n, n, tuple(1 if i == j else 0
                                 for i in range(n) for j in range(n)))

  @staticmethod
  def zero(m: int, n: int) -> "IntMatrix":
    return IntMatrix(m, n, (0,) * (m * n))

  def entry(self, i: int, j: int) -> int:
    return self.entries[i * self.cols + j]

  def row(self, i: int) -> tuple[int, ...]:
    return self.entries[i * self.cols:(i + 1) * self.cols]

  def row_list(self) -> list:
    return [list(self.row(i)) for i in range(self.rows)]

  def transpose(self) -> "IntMatrix":
    return IntMatrix(self.cols, self.rows,
                     tuple(self.entry(i, j)
                           for j in range(self.cols) for i in range(self.rows)))

  def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
    if self.cols != other.rows:
      raise ValueError("shape mismatch %dx%d @ %dx%d"
                       % (self.rows, self.cols, other.rows, other.cols))
    out = []
    for i in range(self.rows):
      ri = self.row(i)
      for j in range(other.cols):
        out.append(sum(ri[k] * other.entry(k, j) for k in range(self.cols)))
    return IntMatrix(self.rows, other.cols, tuple(out))

  def apply(self, v) -> tuple[int, ...]:
    """Matrix-vector product A*v with v a length-cols sequence."""
    if len(v) != self.cols:
      raise ValueError("vector length %d does not match cols %d" % (len(v), self.cols))
    return tuple(sum(self.row(i)[k] * v[k] for k in range(self.cols))
                 for i in range(self.rows))

  def is_identity(self) -> bool:
    return self.rows == self.cols and self == IntMatrix.identity(self.rows)


@dataclass(frozen=True)
class AbelianQuotient:
  """Structure of a finitely generated abelian group: Z^free_rank + sum of
  Z/d_i with the d_i forming a divisibility chain, every d_i >= 2."""

  free_rank: int
  invariant_factors: tuple[int, ...]

  def __post_init__(self):
    if self.free_rank < 0:
      raise ValueError("negative free rank")
    for d in self.invariant_factors:
      if d < 2:
        raise ValueError("invariant factor %d < 2" % d)
    for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
      if b % a != 0:
        raise ValueError("broken divisibility chain %s" % (self.invariant_factors,))

  @property
  def is_trivial(self) -> bool:
    return self.free_rank == 0 and not self.invariant_factors


def _row_op_gcd(rows, urows, r0, r1, c):
  """Left-multiply by the 2x2 unimodular matrix that puts gcd at (r0, c) and
  zero at (r1, c).

  When the pivot already divides the target a plain elimination is used; the
  Bezout transform is reserved for the strict-gcd case so that repeated calls
  always make progress.
  """
  a, b = rows[r0][c], rows[r1][c]
  if b == 0:
    return
  if a == 0:
    rows[r0], rows[r1] = rows[r1], rows[r0]
    urows[r0], urows[r1] = urows[r1], urows[r0]
    return
  if b % a == 0:
    q = b // a
    rows[r1] = [v - q * u for u, v in zip(rows[r0], rows[r1])]
    urows[r1] = [v - q * u for u, v in zip(urows[r0], urows[r1])]
    return
  g, x, y = _xgcd(a, b)
  p, q = a // g, b // g
  for mat in (rows, urows):
    ra, rb = mat[r0], mat[r1]
    mat[r0] = [x * u + y * v for u, v in zip(ra, rb)]
    mat[r1] = [-q * u + p * v for u, v in zip(ra, rb)]


def _xgcd(a: int, b: int):
  """Extended gcd: returns (g, x, y) with g = ax + by, g >= 0 when possible."""
  x0, x1, y0, y1 = 1, 0, 0, 1
  while b:
    q, a, b = a // b, b, a % b
    x0, x1 = x1, x0 - q * x1
    y0, y1 = y1, y0 - q * y1
  if a < 0:
    a, x0, y0 = -a, -x0, -y0
  return a, x0, y0


def hnf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
  """Row Hermite normal form.

  Returns (H, U) with U unimodular and H = U*A.  Convention: pivots are
  positive and leftmost per row, entries above a pivot are reduced into
  [0, pivot), zero rows are at the bottom.
  """
  m, n = A.rows, A.cols
  rows = A.row_list()
  urows = IntMatrix.identity(m).row_list()
  r = 0
  for c in range(n):
    piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
    if piv is None:
      continue
    if piv != r:
      rows[r], rows[piv] = rows[piv], rows[r]
      urows[r], urows[piv] = urows[piv], urows[r]
    for i in range(r + 1, m):
      _row_op_gcd(rows, urows, r, i, c)
    if rows[r][c] < 0:
      rows[r] = [-x for x in rows[r]]
      urows[r] = [-x for x in urows[r]]
    p = rows[r][c]
    for i in range(r):
      q = rows[i][c] // p
      if q:
        rows[i] = [u - q * v for u, v in zip(rows[i], rows[r])]
        urows[i] = [u - q * v for u, v in zip(urows[i], urows[r])]
    r += 1
    if r == m:
      break
  H = IntMatrix.from_rows(rows) if rows else IntMatrix.zero(m, n)
  U = IntMatrix.from_rows(urows) if urows else IntMatrix.identity(m)
  assert U @ A == H
  return H, U


def rank(A: IntMatrix) -> int:
  H, _ = hnf(A)
  return sum(1 for i in range(H.rows) if any(H.row(i)))


def snf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
  """Smith normal form.

  Returns (D, U, V) with U, V unimodular and D = U*A*V diagonal with
  nonnegative entries forming a divisibility chain.
  """
  m, n = A.rows, A.cols
  work = A.row_list()
  u = IntMatrix.identity(m).row_list()
  v = IntMatrix.identity(n).row_list()  # stored transposed: v holds columns as rows

  def col_op_gcd(c0, c1, r):
    a, b = work[r][c0], work[r][c1]
    if b == 0:
      return
    if a == 0:
      for row in work:
        row[c0], row[c1] = row[c1], row[c0]
      v[c0], v[c1] = v[c1], v[c0]
      return
    if b % a == 0:
      q = b // a
      for row in work:
        row[c1] -= q * row[c0]
      v[c1] = [y_ - q * x_ for x_, y_ in zip(v[c0], v[c1])]
      return
    g, x, y = _xgcd(a, b)
    p, q = a // g, b // g
    for row in work:
      s, t = row[c0], row[c1]
      row[c0] = x * s + y * t
      row[c1] = -q * s + p * t
    s, t = v[c0], v[c1]
    v[c0] = [x * a_ + y * b_ for a_, b_ in zip(s, t)]
    v[c1] = [-q * a_ + p * b_ for a_, b_ in zip(s, t)]

  def clear_position(t):
    while True:
      for i in range(t + 1, m):
        _row_op_gcd(work, u, t, i, t)
      if all(work[t][j] == 0 for j in range(t + 1, n)):
        break
      for j in range(t + 1, n):
        col_op_gcd(t, j, t)
      if all(work[i][t] == 0 for i in range(t + 1, m)):
        break

  t = 0
  while t < min(m, n):
    piv = next(((i, j) for i in range(t, m) for j in range(t, n)
                if work[i][j] != 0), None)
    if piv is None:
      break
    i, j = piv
    if i != t:
      work[t], work[i] = work[i], work[t]
      u[t], u[i] = u[i], u[t]
    if j != t:
      for row in work:
        row[t], row[j] = row[j], row[t]
      v[t], v[j] = v[j], v[t]
    clear_position(t)
    t += 1

  # Divisibility chain: repair adjacent violations and re-clear.
  changed = True
  while changed:
    changed = False
    for i in range(min(m, n) - 1):
      a, b = work[i][i], work[i + 1][i + 1]
      if a != 0 and b % a != 0:
        # fold the next diagonal entry into column i, then re-eliminate
        for row_idx in range(m):
          work[row_idx][i] += work[row_idx][i + 1]
        v[i] = [x + y for x, y in zip(v[i], v[i + 1])]
        clear_position(i)
        clear_position(i + 1)
        changed = True

  for i in range(min(m, n)):
    if work[i][i] < 0:
      work[i] = [-x for x in work[i]]
      u[i] = [-x for x in u[i]]

  D = IntMatrix.from_rows(work) if work else IntMatrix.zero(m, n)
  U = IntMatrix.from_rows(u) if u else IntMatrix.identity(m)
  V = IntMatrix.from_rows(v).transpose() if v else IntMatrix.identity(n)
  assert U @ A @ V == D
  diag = [D.entry(i, i) for i in range(min(m, n))]
  assert all(b % a == 0 for a, b in zip(diag, diag[1:]) if a != 0)
  return D, U, V


def kernel_basis(A: IntMatrix) -> list:
  """Basis of the right kernel {x in Z^cols : A*x = 0}.

  The basis is returned in row Hermite normal form, so it is canonical.
  """
  H, U = hnf(A.transpose())
  vecs = [list(U.row(i)) for i in range(H.rows) if not any(H.row(i))]
  if not vecs:
    return []
  K, _ = hnf(IntMatrix.from_rows(vecs))
  out = [list(K.row(i)) for i in range(K.rows) if any(K.row(i))]
  for x in out:
    assert all(s == 0 for s in A.apply(x))
  return out


def cokernel(A: IntMatrix) -> AbelianQuotient:
  """Structure of Z^rows / column-span(A)."""
  D, _, _ = snf(A)
  diag = [D.entry(i, i) for i in range(min(D.rows, D.cols))]
  nonzero = [d for d in diag if d != 0]
  return AbelianQuotient(free_rank=A.rows - len(nonzero),
                         invariant_factors=tuple(d for d in nonzero if d > 1))


def det(A: IntMatrix) -> int:
  """Exact determinant by fraction-free (Bareiss) elimination."""
  if A.rows != A.cols:
    raise ValueError("determinant of non-square matrix")
  n = A.rows
  if n == 0:
    return 1
  w = A.row_list()
  sign = 1
  prev = 1
  for k in range(n - 1):
    if w[k][k] == 0:
      piv = next((i for i in range(k + 1, n) if w[i][k] != 0), None)
      if piv is None:
        return 0
      w[k], w[piv] = w[piv], w[k]
      sign = -sign
    for i in range(k + 1, n):
      for j in range(k + 1, n):
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) // prev
      w[i][k] = 0
    prev = w[k][k]
  return sign * w[n - 1][n - 1]


def is_unimodular(A: IntMatrix) -> bool:
  return A.rows == A.cols and det(A) in (1, -1)


def unimodular_inverse(U: IntMatrix) -> IntMatrix:
  """Inverse of a unimodular matrix, computed over the integers."""
  d = det(U)
  if d not in (1, -1):
    raise ValueError("matrix is not unimodular")
  n = U.rows
  H, W = hnf(U)
  # H must be the identity for a unimodular matrix with positive pivots
  assert H == IntMatrix.identity(n)
  return W


def row_lattice_basis(vectors: list, dim: int) -> list:
  """Canonical (HNF) basis of the sublattice of Z^dim generated by vectors."""
  if not vectors:
    return []
  H, _ = hnf(IntMatrix.from_rows(vectors))
  return [list(H.row(i)) for i in range(H.rows) if any(H.row(i))]


def saturate_row_lattice(vectors: list, dim: int) -> list:
  """Canonical basis of {x in Z^dim : n*x in the lattice for some n > 0}."""
  if not vectors:
    return []
  perps = kernel_basis(IntMatrix.from_rows(vectors))
  if not perps:
    return row_lattice_basis([list(r) for r in IntMatrix.identity(dim).row_list()], dim)
  return kernel_basis(IntMatrix.from_rows(perps))


def express_in_rows(basis: list, v) -> list | None:
  """Integer coefficients c with sum(c_i * basis_i) = v, or None.

  basis need not be square but must consist of independent rows.
  """
  if not basis:
    return [] if not any(v) else None
  B = IntMatrix.from_rows(basis)
  H, U = hnf(B)
  # back-substitute against the echelon rows of H
  coeffs_h = [0] * B.rows
  rem = list(v)
  for i in range(B.rows):
    hrow = H.row(i)
    piv = next((j for j in range(B.cols) if hrow[j] != 0), None)
    if piv is None:
      continue
    if rem[piv] % hrow[piv] != 0:
      return None
    c = rem[piv] // hrow[piv]
    coeffs_h[i] = c
    rem = [a - c * b for a, b in zip(rem, hrow)]
  if any(rem):
    return None
  # v = coeffs_h * H = coeffs_h * U * B
  return [sum(coeffs_h[i] * U.entry(i, k) for i in range(B.rows))
          for k in range(B.rows)]


def in_row_span(basis: list, v) -> bool:
  """Whether v lies in the rational span of the basis rows."""
  if not any(v):
    return True
  if not basis:
    return False
  r0 = rank(IntMatrix.from_rows(basis))
  r1 = rank(IntMatrix.from_rows(list(basis) + [list(v)]))
  return r0 == r1


def complement_projection(sub_basis: list, dim: int) -> IntMatrix:
  """Projection Z^dim -> Z^(dim-r) whose kernel is the saturation of the row
  lattice spanned by sub_basis.

  The projection is surjective, so it realizes the quotient of Z^dim by the
  saturated sublattice as a lattice.
  """
  sat = saturate_row_lattice(sub_basis, dim)
  r = len(sat)
  if r == 0:
    return IntMatrix.identity(dim)
  D, U, V = snf(IntMatrix.from_rows(sat))
  for i in range(r):
    assert D.entry(i, i) == 1, "saturated sublattice must have unit elementary divisors"
  # rows of V^-1 form a basis of Z^dim whose first r rows span the sublattice;
  # coordinates in that basis are x*V, so dropping the first r gives the quotient.
  proj_cols = [[V.entry(i, j) for i in range(dim)] for j in range(r, dim)]
  if not proj_cols:
    return IntMatrix.zero(0, dim)
  P = IntMatrix.from_rows(proj_cols)
  for b in sat:
    assert not any(P.apply(b))
  return P


def solve(A: IntMatrix, b) -> tuple[int, ...] | None:
  """One integer solution x of A*x = b, or None if none exists."""
  if len(b) != A.rows:
    raise ValueError("vector length %d does not match rows %d" % (len(b), A.rows))
  D, U, V = snf(A)
  ub = U.apply(b)
  z = [0] * A.cols
  for i in range(min(A.rows, A.cols)):
    d = D.entry(i, i)
    if d:
      if ub[i] % d != 0:
        return None
      z[i] = ub[i] // d
  x = V.apply(z)
  if A.apply(x) != tuple(b):
    return None
  return x


def primitive(v) -> tuple[int, ...]:
  """Scale a nonzero integer vector down by the gcd of its entries."""
  g = 0
  for x in v:
    g = gcd(g, x)
  if g == 0:
    raise ValueError("zero vector has no primitive form")
  return tuple(x // g for x in v)
