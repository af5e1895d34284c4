"""Fans of strictly convex cones, fan maps, subdivisions, and refinements.

A fan stores its maximal cones canonically; the face closure is derived.
Support comparisons that decide the subdivision predicate are done exactly,
by slicing every cone with a positive functional and summing rational
section volumes, so there is no sampling anywhere on the decision path.
The completion and resolution routines are rank-2 only, and the refinement
search is a plain bounded breadth-first search over star subdivision moves.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from types import SimpleNamespace

from .cone import Cone, _dot, _simplicial_pieces, hilbert_basis, intersect, is_face_of, is_smooth
from .cone import faces as cone_faces
from .lattice import IntMatrix, express_in_rows, is_unimodular, saturate_row_lattice


@dataclass(frozen=True)
class Fan:
  """A fan, identified with its canonically sorted set of maximal cones."""

  ambient_rank: int
  max_cones: tuple[Cone, ...]

  @staticmethod
  def make(cones, ambient_rank: int) -> "Fan":
    """Build a fan from any iterable of cones, dropping non-maximal ones.

    No fan axioms are checked here; run validate for that.
    """
    pool = []
    for c in cones:
      if c.ambient_rank != ambient_rank:
        raise ValueError("cone of ambient rank %d in a rank-%d fan"
                         % (c.ambient_rank, ambient_rank))
      if c not in pool:
        pool.append(c)
    if not pool:
      pool = [Cone.from_rays([], ambient_rank)]
    keep = []
    for c in pool:
      if not any(o is not c and o.contains_cone(c) for o in pool):
        keep.append(c)
    keep.sort(key=lambda c: (c.dim, c.rays))
    return Fan(ambient_rank, tuple(keep))

  @property
  def all_cones(self) -> frozenset:
    return _closure(self)

  @property
  def rays(self) -> tuple:
    """All primitive ray generators appearing in the fan, sorted."""
    out = set()
    for c in self.max_cones:
      out.update(c.rays)
    return tuple(sorted(out))


@functools.lru_cache(maxsize=4096)
def _closure(fan: Fan) -> frozenset:
  out = set()
  for c in fan.max_cones:
    for f in cone_faces(c):
      out.add(f)
  return frozenset(out)


def validate(fan: Fan) -> SimpleNamespace:
  """Check strict convexity and the pairwise common-face condition.

  The report lists one entry per violation instead of raising, so callers
  can show all problems at once.  Face closure is structural here (the
  closure is derived), so the meaningful conditions are convexity and that
  any two maximal cones meet in a common face.
  """
  problems = []
  for c in fan.max_cones:
    if not c.is_strictly_convex:
      problems.append(("not strictly convex", c.rays, c.lineality_basis))
  mc = fan.max_cones
  for i in range(len(mc)):
    for j in range(i + 1, len(mc)):
      w = intersect(mc[i], mc[j])
      if not (is_face_of(w, mc[i]) and is_face_of(w, mc[j])):
        problems.append(("intersection not a common face",
                         mc[i].rays, mc[j].rays))
  return SimpleNamespace(ok=not problems, violations=problems)


def support_query(fan: Fan) -> SimpleNamespace:
  """Point containment test and exact completeness flag for the support.

  Completeness is decided by the wall criterion: nonempty, every maximal
  cone full-dimensional, and every facet of a maximal cone shared by
  exactly two of them.  A positive answer is cross-checked against a
  deterministic sample of 500 points.
  """
  d = fan.ambient_rank

  def contains(v) -> bool:
    if len(v) != d:
      raise ValueError("point length %d does not match rank %d" % (len(v), d))
    return any(c.contains(v) for c in fan.max_cones)

  if d == 0:
    complete = bool(fan.max_cones)
  else:
    complete = bool(fan.max_cones) and all(c.dim == d for c in fan.max_cones)
    if complete:
      ridge_count = {}
      for c in fan.max_cones:
        for f in cone_faces(c):
          if f.dim == d - 1:
            ridge_count[f] = ridge_count.get(f, 0) + 1
      complete = all(n == 2 for n in ridge_count.values())
  if complete and d:
    rng = random.Random(0)
    for _ in range(500):
      p = tuple(rng.randint(-40, 40) for _ in range(d))
      assert contains(p), "wall criterion disagrees with sampling at %s" % (p,)
  return SimpleNamespace(contains=contains, is_complete=complete)


def is_fan_map(matrix: IntMatrix, source: Fan, target: Fan) -> bool:
  """Whether the lattice map sends every source cone into some target cone."""
  if matrix.cols != source.ambient_rank or matrix.rows != target.ambient_rank:
    raise ValueError("matrix shape %dx%d does not map rank %d to rank %d"
                     % (matrix.rows, matrix.cols, source.ambient_rank,
                        target.ambient_rank))
  for c in source.max_cones:
    imgs = [matrix.apply(r) for r in c.rays]
    if not any(all(t.contains(v) for v in imgs) for t in target.max_cones):
      return False
  return True


@dataclass(frozen=True)
class FanMap:
  """A fan morphism: a lattice map under which cones map into cones."""

  matrix: IntMatrix
  source: Fan
  target: Fan

  def __post_init__(self):
    if not is_fan_map(self.matrix, self.source, self.target):
      raise ValueError("matrix does not carry every source cone into the target fan")


def _frac_det(rows) -> Fraction:
  k = len(rows)
  m = [list(r) for r in rows]
  out = Fraction(1)
  for col in range(k):
    piv = None
    for r in range(col, k):
      if m[r][col]:
        piv = r
        break
    if piv is None:
      return Fraction(0)
    if piv != col:
      m[col], m[piv] = m[piv], m[col]
      out = -out
    out *= m[col][col]
    for r in range(col + 1, k):
      f = Fraction(m[r][col], 1) / m[col][col]
      if f:
        m[r] = [a - f * b for a, b in zip(m[r], m[col])]
  return out


def _section_volume(sigma: Cone, ell) -> Fraction:
  """Total rational volume of the slice {x in sigma : <ell, x> = 1}.

  ell must be strictly positive on sigma minus the origin.  Additive across
  cones that tile a region, because all sections live in one hyperplane.
  """
  if sigma.dim == 0:
    return Fraction(0)
  total = Fraction(0)
  for piece in _simplicial_pieces(sigma):
    w = [tuple(Fraction(x, _dot(ell, r)) for x in r) for r in piece]
    total += abs(_frac_det(w))
  return total


def _covers(pieces, container: Cone) -> bool:
  """Whether cones known to sit inside the container jointly fill it."""
  k = container.dim
  if k == 0:
    return True
  basis = saturate_row_lattice([list(r) for r in container.rays],
                               container.ambient_rank)
  coords = {}
  for c in list(pieces) + [container]:
    rs = []
    for r in c.rays:
      e = express_in_rows(basis, r)
      assert e is not None
      rs.append(tuple(e))
    coords[c] = rs
  big = Cone.from_rays(coords[container], k)
  ell = [sum(nu[i] for nu in big.facet_normals) for i in range(k)]
  want = _section_volume(big, ell)
  got = Fraction(0)
  for c in pieces:
    if c.dim == k:
      got += _section_volume(Cone.from_rays(coords[c], k), ell)
  assert got <= want
  return got == want


def subdivision_predicates(matrix: IntMatrix, source: Fan,
                           target: Fan) -> SimpleNamespace:
  """Partial-subdivision and subdivision flags for a fan map.

  Partial means the lattice map is an isomorphism; full subdivision
  additionally needs support equality, decided exactly by rational section
  volumes of the pieces cut inside each maximal target cone.
  """
  if not is_fan_map(matrix, source, target):
    raise ValueError("not a fan map")
  partial = is_unimodular(matrix)
  full = False
  if partial:
    if target.ambient_rank > 4:
      raise ValueError("support comparison is only guaranteed up to rank 4")
    full = True
    mapped = [Cone.from_rays([matrix.apply(r) for r in c.rays],
                             target.ambient_rank)
              for c in source.max_cones]
    for t in target.max_cones:
      pieces = [intersect(m, t) for m in mapped]
      if not _covers([p for p in pieces if p.dim == t.dim], t):
        full = False
        break
  return SimpleNamespace(is_partial_subdivision=partial, is_subdivision=full)


def star_subdivision(fan: Fan, tau: Cone) -> Fan:
  """Subdivide at the barycentric ray of tau.

  Every maximal cone containing tau is replaced by the cones spanned by its
  rays with one tau ray swapped out for the center c = sum of tau's rays;
  the rest of the fan is untouched.  Containing cones must be smooth so
  that faces are ray subsets and the center is primitive.
  """
  if tau not in fan.all_cones:
    raise ValueError("tau is not a cone of the fan")
  if tau.dim == 0:
    raise ValueError("cannot subdivide at the zero cone")
  tset = set(tau.rays)
  holders = [c for c in fan.max_cones if tset <= set(c.rays)]
  for c in fan.all_cones:
    if tset <= set(c.rays) and not is_smooth(c):
      raise ValueError("a cone containing tau is singular")
  center = tuple(sum(r[i] for r in tau.rays) for i in range(fan.ambient_rank))
  out = [c for c in fan.max_cones if c not in holders]
  for c in holders:
    for a in tau.rays:
      rest = [r for r in c.rays if r != a]
      out.append(Cone.from_rays(rest + [center], fan.ambient_rank))
  return Fan.make(out, fan.ambient_rank)


def fiber_product(left: FanMap, right: FanMap) -> Fan:
  """Fiber product of two fan maps with a common target fan.

  Requires at least one leg to be a partial subdivision (its matrix a
  lattice isomorphism).  The result lives in the ambient of the other leg:
  each cone is the preimage of a mapped left cone intersected with a right
  cone, computed from stacked inequality systems.
  """
  if left.target != right.target:
    raise ValueError("legs must share their target fan")
  if is_unimodular(left.matrix):
    a, b = left, right
  elif is_unimodular(right.matrix):
    a, b = right, left
  else:
    raise ValueError("neither leg is a partial subdivision")
  d = b.source.ambient_rank
  pieces = []
  for ca in a.source.max_cones:
    img = Cone.from_rays([a.matrix.apply(r) for r in ca.rays],
                         a.target.ambient_rank)
    pull_ineq = [_row_times(nu, b.matrix) for nu in img.facet_normals]
    pull_eq = [_row_times(s, b.matrix) for s in img.span_normals]
    for cb in b.source.max_cones:
      ineqs = pull_ineq + [list(nu) for nu in cb.facet_normals]
      eqs = pull_eq + [list(s) for s in cb.span_normals]
      pieces.append(Cone.from_inequalities(ineqs, eqs, d))
  return Fan.make(pieces, d)


def _row_times(nu, m: IntMatrix) -> list:
  return [sum(nu[i] * m.entry(i, j) for i in range(m.rows))
          for j in range(m.cols)]


def product_fan(f1: Fan, f2: Fan) -> Fan:
  """Fan in the direct sum whose maximal cones are pairwise products."""
  d1, d2 = f1.ambient_rank, f2.ambient_rank
  z1, z2 = (0,) * d1, (0,) * d2
  out = []
  for a in f1.max_cones:
    for b in f2.max_cones:
      rays = [tuple(r) + z2 for r in a.rays] + [z1 + tuple(r) for r in b.rays]
      out.append(Cone.from_rays(rays, d1 + d2))
  return Fan.make(out, d1 + d2)


def _angle_class(v):
  # 0 for the open upper half plane plus the positive x-axis, 1 below
  if v[1] > 0 or (v[1] == 0 and v[0] > 0):
    return 0
  return 1


def _ccw_cmp(a, b):
  if a == b:
    return 0
  ha, hb = _angle_class(a), _angle_class(b)
  if ha != hb:
    return -1 if ha < hb else 1
  cr = a[0] * b[1] - a[1] * b[0]
  if cr == 0:
    return 0
  return -1 if cr > 0 else 1


def complete_2d(fan: Fan) -> Fan:
  """Extend a rank-2 fan to a complete one by a fixed gap-filling rule.

  Rays are sorted counterclockwise; an uncovered angular gap wider than a
  half turn first receives the negation of its starting ray, a gap of
  exactly a half turn receives the perpendicular of its start, and what
  remains is closed off with single cones.  The input fan must be valid.
  """
  if fan.ambient_rank != 2:
    raise ValueError("completion rule is specific to rank 2")
  rays = [tuple(r) for r in fan.rays]
  if not rays:
    rays = [(1, 0)]
  two_cones = [c for c in fan.max_cones if c.dim == 2]

  def sort_ccw(rs):
    return sorted(rs, key=functools.cmp_to_key(_ccw_cmp))

  def sector_covered(a, b):
    # the gap runs counterclockwise from a to b; an existing cone with ray
    # set {a, b} spans the short side, which is that gap only if cross > 0
    cr = a[0] * b[1] - a[1] * b[0]
    return cr > 0 and any(set((a, b)) == set(c.rays) for c in two_cones)

  while True:
    rays = sort_ccw(rays)
    inserted = False
    for i, a in enumerate(rays):
      b = rays[(i + 1) % len(rays)]
      if sector_covered(a, b):
        continue
      cr = a[0] * b[1] - a[1] * b[0]
      if len(rays) == 1 or cr < 0:
        rays.append((-a[0], -a[1]))
        inserted = True
        break
      if cr == 0:
        rays.append((-a[1], a[0]))
        inserted = True
        break
    if not inserted:
      break
  rays = sort_ccw(rays)
  out = list(fan.max_cones)
  for i, a in enumerate(rays):
    b = rays[(i + 1) % len(rays)]
    if not sector_covered(a, b):
      out.append(Cone.from_rays([a, b], 2))
  return Fan.make(out, 2)


def _insert_ray_2d(fan: Fan, ray) -> Fan:
  """Stellar insertion of a primitive ray into a rank-2 fan: every
  two-dimensional cone whose relative interior meets the ray is split."""
  out = []
  for c in fan.max_cones:
    if c.dim == 2 and c.contains(ray) and ray not in c.rays:
      a, b = c.rays
      out.append(Cone.from_rays([a, ray], 2))
      out.append(Cone.from_rays([ray, b], 2))
    else:
      out.append(c)
  return Fan.make(out, 2)


def resolve_2d(fan: Fan) -> tuple[Fan, list]:
  """Make every cone of a rank-2 fan smooth by inserting Hilbert basis rays.

  Returns the resolved fan and the rays inserted, in order.  Each step
  picks the smallest non-ray Hilbert basis element of the first singular
  cone, so the run is deterministic.
  """
  if fan.ambient_rank != 2:
    raise ValueError("resolution rule is specific to rank 2")
  cur = fan
  steps = []
  while True:
    bad = [c for c in cur.max_cones if c.dim == 2 and not is_smooth(c)]
    if not bad:
      return cur, steps
    c = bad[0]
    extra = sorted(h for h in hilbert_basis(c) if h not in c.rays)
    assert extra, "singular rank-2 cone with no interior Hilbert element"
    cur = _insert_ray_2d(cur, extra[0])
    steps.append(extra[0])


def _support_equal(f1: Fan, f2: Fan) -> bool:
  for t in f2.max_cones:
    pieces = [intersect(s, t) for s in f1.max_cones]
    if not _covers([p for p in pieces if p.dim == t.dim], t):
      return False
  for t in f1.max_cones:
    pieces = [intersect(s, t) for s in f2.max_cones]
    if not _covers([p for p in pieces if p.dim == t.dim], t):
      return False
  return True


def search_refinement(fan: Fan, goal: Fan, depth: int = 4):
  """Breadth-first search for star subdivisions taking fan below goal.

  Returns the list of subdivision centers (cones of the intermediate fans)
  if some sequence of at most depth moves makes the result a subdivision
  of goal, and None when the search space is exhausted first.  None means
  "not found within depth", never a proof of impossibility.
  """
  if fan.ambient_rank != goal.ambient_rank:
    raise ValueError("ambient ranks differ")
  for c in list(fan.max_cones) + list(goal.max_cones):
    if not is_smooth(c):
      raise ValueError("search requires smooth fans on both sides")
  if not _support_equal(fan, goal):
    raise ValueError("supports differ")
  ident = IntMatrix.identity(fan.ambient_rank)

  def refines(f):
    return is_fan_map(ident, f, goal)

  if refines(fan):
    return []
  frontier = [(fan, [])]
  seen = {fan}
  for _ in range(depth):
    nxt = []
    for cur, path in frontier:
      for tau in sorted(cur.all_cones, key=lambda c: (c.dim, c.rays)):
        if tau.dim < 2:
          continue
        cand = star_subdivision(cur, tau)
        if cand in seen:
          continue
        seen.add(cand)
        if refines(cand):
          return path + [tau]
        nxt.append((cand, path + [tau]))
    frontier = nxt
  return None
