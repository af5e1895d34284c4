"""Kernel dispatch: compiled fast path when available and safe, pure Python
otherwise.

The compiled kernels work in C long long arithmetic, so they are only used
when a worst-case bound on every intermediate product stays below 2**62.
Results are identical between the two paths; exactness is never traded away.
"""

from __future__ import annotations

from . import _speed_py

try:
  from . import _speed  # type: ignore[attr-defined]
except ImportError:
  _speed = None

_LIMIT = 1 << 62


def compiled_available() -> bool:
  return _speed is not None


def _maxabs(seq) -> int:
  m = 0
  for v in seq:
    a = -v if v < 0 else v
    if a > m:
      m = a
  return m


def parallelepiped_points(lo, hi, sub, adj, det, mat, d, k, force=None):
  """See _speed_py.parallelepiped_points.  force may be "py" or "c"."""
  impl = _pick_paral(lo, hi, adj, det, mat, d, k, force)
  return impl(lo, hi, sub, adj, det, mat, d, k)


def _pick_paral(lo, hi, adj, det, mat, d, k, force):
  if force == "py":
    return _speed_py.parallelepiped_points
  if force == "c":
    if _speed is None:
      raise RuntimeError("compiled kernels are not available")
    return _speed.parallelepiped_points
  if _speed is None:
    return _speed_py.parallelepiped_points
  box = max(_maxabs(lo), _maxabs(hi))
  # |a_i| <= k * max|adj| * box, then |mat . a| <= k * max|mat| * that
  a_bound = k * _maxabs(adj) * box
  chk = max(a_bound, k * _maxabs(mat) * a_bound, det * box, det)
  if chk >= _LIMIT:
    return _speed_py.parallelepiped_points
  return _speed.parallelepiped_points


def box_cone_points(lo, hi, ineq, eq, d, force=None):
  """Integer points of the box satisfying ineq . x >= 0 and eq . x == 0.

  ineq and eq are lists of length-d rows; flattening for the kernels happens
  here.
  """
  flat_i = [x for row in ineq for x in row]
  flat_e = [x for row in eq for x in row]
  if force == "py":
    impl = _speed_py.box_cone_points
  elif force == "c":
    if _speed is None:
      raise RuntimeError("compiled kernels are not available")
    impl = _speed.box_cone_points
  elif _speed is None:
    impl = _speed_py.box_cone_points
  else:
    box = max(_maxabs(lo), _maxabs(hi))
    coeff = max(_maxabs(flat_i), _maxabs(flat_e), 1)
    if d * coeff * box >= _LIMIT:
      impl = _speed_py.box_cone_points
    else:
      impl = _speed.box_cone_points
  return impl(lo, hi, flat_i, len(ineq), flat_e, len(eq), d)
