"""Finitely generated submonoids of lattices and their homomorphisms.

A monoid is a canonically sorted generator list in an ambient lattice.  The
operations here are the ones that matter for charts and fans: saturation,
sharpening, faces, localization, quotients, pushouts, roots, and the Kummer
and exactness predicates for homomorphisms.  Everything reduces to cone
machinery plus exact lattice arithmetic; sizes are capped at desk scale
because membership and saturation enumerate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from types import SimpleNamespace

from .cone import Cone, hilbert_basis
from .cone import faces as cone_faces
from .lattice import (
    IntMatrix,
    complement_projection,
    express_in_rows,
    kernel_basis,
    rank,
    row_lattice_basis,
    solve,
)

MAX_AMBIENT_RANK = 6
MAX_GENERATORS = 16


def _dot(a, b):
  return sum(x * y for x, y in zip(a, b))


def _neg(v):
  return tuple(-x for x in v)


@dataclass(frozen=True)
class AffineMonoid:
  """A finitely generated submonoid of Z^ambient_rank.

  Generators are stored deduplicated and sorted, so equal monoid
  presentations compare equal.  The generated group and the recession cone
  are derived on demand and cached.
  """

  ambient_rank: int
  gens: tuple[tuple[int, ...], ...]

  def __post_init__(self):
    if self.ambient_rank < 0 or self.ambient_rank > MAX_AMBIENT_RANK:
      raise ValueError("ambient rank %d outside supported range 0..%d"
                       % (self.ambient_rank, MAX_AMBIENT_RANK))
    if len(self.gens) > MAX_GENERATORS:
      raise ValueError("too many generators (%d > %d)"
                       % (len(self.gens), MAX_GENERATORS))
    for g in self.gens:
      if len(g) != self.ambient_rank:
        raise ValueError("generator %s does not have length %d"
                         % (g, self.ambient_rank))

  @staticmethod
  def make(generators, ambient_rank: int) -> "AffineMonoid":
    gens = set()
    for g in generators:
      g = tuple(int(x) for x in g)
      if len(g) != ambient_rank:
        raise ValueError("generator %s does not have length %d" % (g, ambient_rank))
      if any(g):
        gens.add(g)
    return AffineMonoid(ambient_rank, tuple(sorted(gens)))

  @property
  def cone(self) -> Cone:
    return Cone.from_rays(self.gens, self.ambient_rank)

  def contains(self, v) -> bool:
    return membership(self, v)


@lru_cache(maxsize=4096)
def _gp_basis(P: AffineMonoid) -> tuple:
  """Hermite basis of the group generated by the generators (not saturated)."""
  return tuple(tuple(r) for r in
               row_lattice_basis([list(g) for g in P.gens], P.ambient_rank))


@lru_cache(maxsize=4096)
def _unit_split(P: AffineMonoid):
  """Split the generators along the lineality of the recession cone.

  Returns (units_basis, rest): units_basis generates the unit group P* (the
  generators lying in the lineality space generate a group), rest is the
  tuple of remaining generators.
  """
  C = P.cone
  unit_gens = [g for g in P.gens if C.contains(_neg(g))]
  rest = tuple(g for g in P.gens if not C.contains(_neg(g)))
  basis = tuple(tuple(r) for r in
                row_lattice_basis([list(g) for g in unit_gens], P.ambient_rank))
  return basis, rest


@lru_cache(maxsize=65536)
def _member(P: AffineMonoid, v: tuple) -> bool:
  if not P.cone.contains(v):
    return False
  units, rest = _unit_split(P)
  if express_in_rows([list(b) for b in _gp_basis(P)], v) is None:
    return False
  if not rest:
    return express_in_rows([list(b) for b in units], v) is not None
  pi = complement_projection([list(b) for b in units], P.ambient_rank)
  pgens = [pi.apply(r) for r in rest]
  pc = Cone.from_rays(pgens, pi.rows)
  assert pc.is_strictly_convex
  w = pi.apply(v)
  grade_vec = [sum(nu[i] for nu in pc.facet_normals) for i in range(pi.rows)]
  gr = {i: _dot(grade_vec, pg) for i, pg in enumerate(pgens)}
  assert all(g > 0 for g in gr.values())
  ubasis = [list(b) for b in units]
  memo = {}

  def search(i, w_left, v_left):
    key = (i, v_left)
    if key in memo:
      return memo[key]
    if i == len(rest):
      out = not any(w_left) and express_in_rows(ubasis, v_left) is not None
      memo[key] = out
      return out
    out = False
    c = 0
    while True:
      wl = tuple(a - c * b for a, b in zip(w_left, pgens[i]))
      if _dot(grade_vec, wl) < 0 or not pc.contains(wl):
        break
      vl = tuple(a - c * b for a, b in zip(v_left, rest[i]))
      if search(i + 1, wl, vl):
        out = True
        break
      c += 1
    memo[key] = out
    return out

  return search(0, w, tuple(v))


def membership(P: AffineMonoid, x) -> bool:
  """Whether x is a nonnegative integer combination of the generators."""
  if len(x) != P.ambient_rank:
    raise ValueError("vector length %d does not match ambient rank %d"
                     % (len(x), P.ambient_rank))
  return _member(P, tuple(int(c) for c in x))


def group_completion(P: AffineMonoid) -> list:
  """Hermite basis of the subgroup of the ambient lattice generated by P."""
  return [list(b) for b in _gp_basis(P)]


def _cone_lattice_generators(ineqs, eqs, basis_rows, d) -> list:
  """Generators of {x in the lattice spanned by basis_rows : x in C} where C
  is the cone cut out by the given inequalities and equalities.

  The lattice basis must consist of independent rows.  Works by rewriting the
  cone in lattice coordinates; the lineality part contributes a group, the
  pointed image contributes a Hilbert basis whose preimages all lie in C
  because every constraint vanishes on the lineality space.
  """
  if not basis_rows:
    return []
  k = len(basis_rows)
  ineq_c = [[_dot(b, nu) for b in basis_rows] for nu in ineqs]
  eq_c = [[_dot(b, s) for b in basis_rows] for s in eqs]
  C = Cone.from_inequalities(ineq_c, eq_c, k)
  gens_c = []
  for b in C.lineality_basis:
    gens_c.append(b)
    gens_c.append(_neg(b))
  if C.rays:
    pi = complement_projection([list(b) for b in C.lineality_basis], k)
    img = Cone.from_rays([pi.apply(r) for r in C.rays], pi.rows)
    for h in hilbert_basis(img):
      c = solve(pi, h)
      assert c is not None
      assert C.contains(c)
      gens_c.append(c)
  out = []
  for c in gens_c:
    x = [0] * d
    for ci, b in zip(c, basis_rows):
      x = [a + ci * t for a, t in zip(x, b)]
    out.append(tuple(x))
  return out


def saturation(P: AffineMonoid) -> AffineMonoid:
  """The saturation P^sat = {x in P^gp : n*x in P for some n > 0}.

  Equal to cone(P) intersected with the generated group, computed via a
  Hilbert basis in group coordinates.
  """
  C = P.cone
  basis = [list(b) for b in _gp_basis(P)]
  gens = _cone_lattice_generators(C.facet_normals, C.span_normals, basis,
                                  P.ambient_rank)
  return AffineMonoid.make(gens, P.ambient_rank)


def structure_queries(P: AffineMonoid) -> SimpleNamespace:
  """Saturation flag, sharpness, unit sublattice, and the sharpening.

  The sharpening is represented in the quotient of the ambient lattice by
  the saturated span of the units, which matches the abstract sharpening for
  the monoids handled here.
  """
  units, _ = _unit_split(P)
  sat = saturation(P)
  is_saturated = all(membership(P, g) for g in sat.gens)
  pi = complement_projection([list(b) for b in units], P.ambient_rank)
  sharp = AffineMonoid.make([pi.apply(g) for g in P.gens], pi.rows)
  return SimpleNamespace(is_saturated=is_saturated,
                         is_sharp=not units,
                         units=[list(b) for b in units],
                         sharpening=sharp)


@lru_cache(maxsize=1024)
def _faces_cached(P: AffineMonoid) -> tuple:
  out = []
  seen = set()
  for F in cone_faces(P.cone):
    idx = frozenset(i for i, g in enumerate(P.gens) if F.contains(g))
    if idx not in seen:
      seen.add(idx)
      out.append((AffineMonoid.make([P.gens[i] for i in idx], P.ambient_rank),
                  idx))
  return tuple(sorted(out, key=lambda t: (len(t[1]), sorted(t[1]))))


def faces(P: AffineMonoid) -> list:
  """All faces of P, each as (face monoid, generator index set).

  A face is a submonoid closed under summand splitting; for an affine monoid
  these are exactly the traces of the faces of the recession cone.
  """
  return list(_faces_cached(P))


def _require_face(P: AffineMonoid, F: AffineMonoid) -> frozenset:
  for face, idx in _faces_cached(P):
    if face == F:
      return idx
  raise ValueError("%r is not a face of %r" % (F, P))


def localize(P: AffineMonoid, F: AffineMonoid) -> AffineMonoid:
  """P_F = P + (-F), the localization at a face."""
  _require_face(P, F)
  return AffineMonoid.make(list(P.gens) + [_neg(g) for g in F.gens],
                           P.ambient_rank)


def quotient(P: AffineMonoid, F: AffineMonoid) -> AffineMonoid:
  """P/F realized as the image of P in the quotient lattice by span(F)."""
  _require_face(P, F)
  pi = complement_projection([list(g) for g in F.gens], P.ambient_rank)
  return AffineMonoid.make([pi.apply(g) for g in P.gens], pi.rows)


@dataclass(frozen=True)
class MonoidHom:
  """A monoid homomorphism induced by a lattice map between the ambients.

  The matrix must carry every source generator into the target monoid; this
  is verified at construction.
  """

  source: AffineMonoid
  target: AffineMonoid
  gp_matrix: IntMatrix

  def __post_init__(self):
    M = self.gp_matrix
    if M.rows != self.target.ambient_rank or M.cols != self.source.ambient_rank:
      raise ValueError("matrix shape %dx%d does not map rank %d to rank %d"
                       % (M.rows, M.cols, self.source.ambient_rank,
                          self.target.ambient_rank))
    for g in self.source.gens:
      img = M.apply(g)
      if not membership(self.target, img):
        raise ValueError("generator %s maps to %s outside the target monoid"
                         % (g, img))

  def apply(self, v) -> tuple[int, ...]:
    return self.gp_matrix.apply(v)


def amalgamated_sum(left: MonoidHom, right: MonoidHom,
                    mode: str = "integral") -> AffineMonoid:
  """Pushout of target(left) <- source -> target(right).

  The result lives in the quotient of the direct sum of the target lattices
  by the antidiagonal image of the source group.  mode "integral" gives that
  image monoid; mode "saturated" saturates it afterwards.
  """
  if mode not in ("integral", "saturated"):
    raise ValueError("mode must be integral or saturated, got %r" % mode)
  if left.source != right.source:
    raise ValueError("legs must share their source monoid")
  Q1, Q2 = left.target, right.target
  d1, d2 = Q1.ambient_rank, Q2.ambient_rank
  rel = [tuple(left.apply(b)) + _neg(right.apply(b))
         for b in _gp_basis(left.source)]
  pi = complement_projection([list(r) for r in rel], d1 + d2)
  zero2 = (0,) * d2
  zero1 = (0,) * d1
  gens = [pi.apply(tuple(g) + zero2) for g in Q1.gens]
  gens += [pi.apply(zero1 + tuple(g)) for g in Q2.gens]
  out = AffineMonoid.make(gens, pi.rows)
  if mode == "saturated":
    out = saturation(out)
  return out


def nth_root(P: AffineMonoid, n: int) -> tuple[AffineMonoid, IntMatrix]:
  """The n-th root monoid of a saturated P with its refinement map.

  The root monoid has the same generator tuples, read in the lattice that
  refines the ambient by a factor n in every coordinate; the returned matrix
  n*I is the inclusion of the original lattice into the refinement.
  """
  if n < 1:
    raise ValueError("n must be >= 1")
  if not structure_queries(P).is_saturated:
    raise ValueError("nth_root requires a saturated monoid")
  d = P.ambient_rank
  ref = IntMatrix(d, d, tuple(n if i == j else 0
                              for i in range(d) for j in range(d)))
  return AffineMonoid.make(P.gens, d), ref


def is_kummer(theta: MonoidHom) -> bool:
  """Whether theta is injective with rationally surjective induced cone map.

  Surjectivity is at the level of rational cones: every target generator
  must lie in the image cone, which is the condition that some positive
  multiple of each target element comes from the source.
  """
  P, Q, M = theta.source, theta.target, theta.gp_matrix
  bp = [list(b) for b in _gp_basis(P)]
  K = kernel_basis(M)
  if K:
    stacked = rank(IntMatrix.from_rows(bp + K)) if bp else len(K)
    if stacked != (rank(IntMatrix.from_rows(bp)) if bp else 0) + len(K):
      return False
  img_cone = Cone.from_rays([M.apply(g) for g in P.gens], Q.ambient_rank)
  return all(img_cone.contains(q) for q in Q.gens)


def _preimage_generators(theta: MonoidHom) -> list:
  """Generators of {x in source group : theta(x) in target monoid}."""
  P, Q, M = theta.source, theta.target, theta.gp_matrix
  bp = [list(b) for b in _gp_basis(P)]
  k = len(bp)
  if k == 0:
    return []
  # images of the group basis span everything theta can reach
  n_cols = [M.apply(b) for b in bp]
  if structure_queries(Q).is_saturated:
    # theta(x) in Q  <=>  theta(x) in cone(Q) and theta(x) in Q^gp
    bq = [list(b) for b in _gp_basis(Q)]
    block = [[n_cols[j][i] for j in range(k)] + [-bq[j][i] for j in range(len(bq))]
             for i in range(Q.ambient_rank)]
    ker = kernel_basis(IntMatrix.from_rows(block)) if block else []
    cparts = [v[:k] for v in ker]
    lam = row_lattice_basis(cparts, k)
    CQ = Q.cone
    ineq_c = [[sum(nu[i] * n_cols[j][i] for i in range(Q.ambient_rank))
               for j in range(k)] for nu in CQ.facet_normals]
    eq_c = [[sum(s[i] * n_cols[j][i] for i in range(Q.ambient_rank))
             for j in range(k)] for s in CQ.span_normals]
    coeff_gens = _cone_lattice_generators(ineq_c, eq_c, lam, k)
  else:
    # coefficient space: a in Z^k, c in N^m with  sum a_j theta(b_j) = sum c_i q_i
    m = len(Q.gens)
    if k + m > MAX_AMBIENT_RANK:
      raise ValueError(
          "exactness for a non-saturated target needs coefficient rank %d > %d"
          % (k + m, MAX_AMBIENT_RANK))
    eqs = [[n_cols[j][i] for j in range(k)] + [-Q.gens[t][i] for t in range(m)]
           for i in range(Q.ambient_rank)]
    ineqs = [[0] * k + [1 if t == s else 0 for t in range(m)] for s in range(m)]
    eye = [[1 if i == j else 0 for j in range(k + m)] for i in range(k + m)]
    pair_gens = _cone_lattice_generators(ineqs, eqs, eye, k + m)
    coeff_gens = [g[:k] for g in pair_gens]
  out = []
  for c in coeff_gens:
    x = [0] * P.ambient_rank
    for ci, b in zip(c, bp):
      x = [a + ci * t for a, t in zip(x, b)]
    if any(x):
      out.append(tuple(x))
  return out


def is_exact(theta: MonoidHom) -> bool:
  """Whether the source equals the full preimage of the target monoid.

  The preimage {x in P^gp : theta(x) in Q} always contains P; exactness
  means nothing else sneaks in, checked on preimage generators.
  """
  return all(membership(theta.source, x) for x in _preimage_generators(theta))
