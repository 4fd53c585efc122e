"""
Convex rational polyhedra kept in both representations at once.

A polyhedron is stored as an irredundant list of facet inequalities
``<a, u> >= b`` plus the equations of its affine hull (the H-representation),
and as vertices, extreme rays and a lineality basis (the V-representation,
i.e. the Minkowski-Weyl decomposition ``conv(vertices) + cone(rays) + span(lines)``).

Conversion between the two is cddlib's double description method in exact
rational arithmetic. The V-representation is then brought to a canonical form:

* lines are the nonzero rows of the rref of the lineality basis;
* vertices and rays live in the orthogonal complement of the lineality space;
* rays are primitive integer vectors;
* everything is sorted lexicographically.

Two polyhedra are therefore equal as point sets iff their V-representations
are equal, which is what ``__eq__`` and ``__hash__`` use.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, List, NamedTuple, Sequence, Tuple

import cdd

from recfan.errors import InputError, NoFaceError, PreconditionError
from recfan.exactq import (
    QMatrix,
    QVector,
    RationalLike,
    add,
    dot,
    integer_vector,
    kernel_basis,
    parse_rational,
    primitive,
    qvector,
    rank,
    rational_to_str,
    rref,
    scale,
    sign_normalized,
    solve,
    sub,
    unit_vector,
    zero_vector,
)


@dataclass(frozen=True, order=True)
class Halfspace:
    """``{u : <normal, u> >= offset}``; as an equality, ``<normal, u> = offset``."""

    normal: QVector
    offset: Fraction

    @classmethod
    def of(cls, normal: Iterable[RationalLike], offset: RationalLike = 0) -> "Halfspace":
        normal = qvector(normal)
        if not any(normal):
            raise InputError("halfspace normals must be nonzero")
        return cls(normal, parse_rational(offset))

    def flipped(self) -> "Halfspace":
        """The opposite closed side ``<normal, u> <= offset``."""
        return Halfspace(scale(self.normal, -1), -self.offset)

    def value(self, p: Sequence) -> Fraction:
        return dot(self.normal, p) - self.offset

    def holds(self, p: Sequence) -> bool:
        return self.value(p) >= 0

    def is_tight(self, p: Sequence) -> bool:
        return self.value(p) == 0

    def slope(self, direction: Sequence) -> Fraction:
        return dot(self.normal, direction)

    def __str__(self):
        terms = ", ".join(rational_to_str(_) for _ in self.normal)
        return "<({}), u> >= {}".format(terms, rational_to_str(self.offset))


@dataclass(frozen=True)
class HRep:
    dim: int
    inequalities: Tuple[Halfspace, ...] = ()
    equalities: Tuple[Halfspace, ...] = ()

    @classmethod
    def of(cls, dim: int, inequalities=(), equalities=()) -> "HRep":
        """
        Build an HRep from ``(normal, offset)`` pairs.

        Examples
        --------
        >>> HRep.of(3, inequalities=[([1, 0, 0], 0), ([0, 1, 0], 0)], equalities=[([0, 0, 1], 0)])
        """
        return cls(
            dim,
            tuple(_ if isinstance(_, Halfspace) else Halfspace.of(*_) for _ in inequalities),
            tuple(_ if isinstance(_, Halfspace) else Halfspace.of(*_) for _ in equalities),
        )


@dataclass(frozen=True)
class VRep:
    dim: int
    vertices: Tuple[QVector, ...] = ()
    rays: Tuple[QVector, ...] = ()
    lines: Tuple[QVector, ...] = ()

    @classmethod
    def of(cls, dim: int, vertices=(), rays=(), lines=()) -> "VRep":
        return cls(
            dim,
            tuple(qvector(_) for _ in vertices),
            tuple(qvector(_) for _ in rays),
            tuple(qvector(_) for _ in lines),
        )


@dataclass(frozen=True)
class FaceHandle:
    """A face named by the indices of the parent's inequalities tight on it."""

    tight_indices: FrozenSet[int]


class RecessionFace(NamedTuple):
    face: "Polyhedron"
    recession: "Polyhedron"


class Polyhedron:
    """
    Immutable convex rational polyhedron. Build it with ``from_hrep`` or
    ``from_vrep``; the constructor itself trusts its (already canonical) input.
    """

    def __init__(self, hrep: HRep, vrep: VRep, empty: bool = False):
        self.hrep = hrep
        self.vrep = vrep
        self.empty = empty

    @property
    def dim(self) -> int:
        return self.vrep.dim

    @property
    def is_empty(self) -> bool:
        return self.empty

    @cached_property
    def dimension(self) -> int:
        """Dimension of the affine hull; -1 for the empty polyhedron."""
        if self.empty:
            return -1
        return _generator_dimension(self.vrep.vertices, self.vrep.rays, self.vrep.lines, self.dim)

    @property
    def is_cone(self) -> bool:
        return not self.empty and self.vrep.vertices == (zero_vector(self.dim),)

    @property
    def sort_key(self):
        return (self.dimension, self.vrep.vertices, self.vrep.rays, self.vrep.lines)

    @cached_property
    def _lattice(self) -> List[Tuple[FaceHandle, "Polyhedron"]]:
        return _enumerate_faces(self)

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self.empty == other.empty and self.vrep == other.vrep

    def __hash__(self):
        return hash((self.empty, self.vrep))

    def __lt__(self, other: "Polyhedron") -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self):
        if self.empty:
            return "Polyhedron(dim={}, empty)".format(self.dim)

        def fmt(vectors):
            return [tuple(rational_to_str(x) for x in v) for v in vectors]

        return "Polyhedron(dim={}, vertices={}, rays={}, lines={})".format(
            self.dim, fmt(self.vrep.vertices), fmt(self.vrep.rays), fmt(self.vrep.lines)
        )


####################### DOUBLE DESCRIPTION #####################################


def _cdd_matrix(rows: Sequence, linear_rows: Sequence, rep_type) -> "cdd.Matrix":
    mat = cdd.Matrix([list(_) for _ in rows], number_type="fraction")
    mat.rep_type = rep_type
    if linear_rows:
        mat.extend([list(_) for _ in linear_rows], linear=True)
    return mat


def _orthogonal_part(v: Sequence, lines: Sequence) -> QVector:
    """Component of ``v`` orthogonal to ``span(lines)``; ``lines`` must be independent."""
    v = tuple(Fraction(_) for _ in v)
    if not lines:
        return v
    gram = QMatrix.of([[dot(a, b) for b in lines] for a in lines])
    coefficients = solve(gram, [dot(a, v) for a in lines])
    for c, line in zip(coefficients, lines):
        v = sub(v, scale(line, c))
    return v


def _h_to_v(n: int, inequalities: Sequence, equalities: Sequence):
    """
    Vertices, rays and lines of ``{<a,u> >= b} ∩ {<a,u> = b}``, or None if empty.

    Vertices and rays come back orthogonal to the lines.
    """
    # cdd rows are [c, a] for c + <a, u> >= 0; the first one is the trivial 1 >= 0
    rows = [(1,) + zero_vector(n)] + [(-b,) + tuple(a) for a, b in inequalities]
    mat = _cdd_matrix(rows, [(-b,) + tuple(a) for a, b in equalities], cdd.RepType.INEQUALITY)
    generators = cdd.Polyhedron(mat).get_generators()
    points, directions, lines = [], [], []
    for i in range(generators.row_size):
        t, *x = (Fraction(_) for _ in generators[i])
        if i in generators.lin_set:
            lines.append(tuple(x))
        elif t:
            points.append(tuple(_ / t for _ in x))
        else:
            directions.append(tuple(x))
    if not points:
        return None
    lines = _canonical_lines(lines, n)
    vertices = [_orthogonal_part(_, lines) for _ in points]
    rays = [_orthogonal_part(_, lines) for _ in directions]

    return vertices, rays, list(lines)


def _v_to_h(n: int, vertices: Sequence, rays: Sequence, lines: Sequence) -> List[Tuple[QVector, Fraction]]:
    """Facet inequalities ``(a, b)``, i.e. ``<a, u> >= b``, of ``conv(vertices) + cone(rays) + span(lines)``."""
    rows = [(1,) + tuple(v) for v in vertices] + [(0,) + tuple(r) for r in rays]
    mat = _cdd_matrix(rows, [(0,) + tuple(l) for l in lines], cdd.RepType.GENERATOR)
    inequalities = cdd.Polyhedron(mat).get_inequalities()
    facets = []
    for i in range(inequalities.row_size):
        if i in inequalities.lin_set:
            continue
        c, *a = (Fraction(_) for _ in inequalities[i])
        # a == 0 is the trivial inequality
        if any(a):
            facets.append((tuple(a), -c))

    return facets


####################### CANONICAL FORMS #####################################


def _generator_dimension(vertices: Sequence, rays: Sequence, lines: Sequence, n: int) -> int:
    if not vertices:
        return -1
    base = vertices[0]
    rows = [sub(v, base) for v in vertices[1:]] + list(rays) + list(lines)
    if not rows:
        return 0
    return rank(QMatrix.of(rows, n))


def _canonical_lines(lines: Sequence, n: int) -> Tuple[QVector, ...]:
    if not lines:
        return ()
    reduced, _ = rref(QMatrix.of(lines, n))
    return tuple(_ for _ in reduced.rows if any(_))


def _affine_hull(n: int, vertices: Sequence, rays: Sequence, lines: Sequence) -> List[Tuple[QVector, Fraction, int]]:
    """
    Equations ``<a, u> = b`` of the affine hull, in rref: each comes with the
    pivot column where ``a`` is 1 and every other equation is 0.
    """
    rows = [tuple(v) + (-1,) for v in vertices]
    rows += [tuple(r) + (0,) for r in rays]
    rows += [tuple(l) + (0,) for l in lines]
    normals = kernel_basis(QMatrix.of(rows, n + 1))
    if not normals:
        return []
    reduced, pivots = rref(QMatrix.of(normals, n + 1))
    return [(row[:n], row[n], c) for row, c in zip(reduced.rows, pivots)]


def _canonical_inequality(a: Sequence, b: Fraction, equalities) -> Halfspace:
    """Reduce ``<a,u> >= b`` modulo the affine hull, then scale to primitive integers."""
    a, b = list(a), Fraction(b)
    for normal, offset, c in equalities:
        f = a[c]
        if f:
            a = [x - f * y for x, y in zip(a, normal)]
            b = b - f * offset
    scaled = integer_vector(a + [b])
    return Halfspace(tuple(Fraction(_) for _ in scaled[:-1]), Fraction(scaled[-1]))


def _assemble(n: int, vertices: Sequence, rays: Sequence, lines: Sequence, candidates: Sequence) -> Polyhedron:
    """
    Build a polyhedron from a minimal V-representation whose vertices and rays
    are orthogonal to ``lines``, and from a list of valid inequalities
    ``(a, b)`` that contains a defining inequality for every facet.

    Facets are the candidates whose tight generators span dimension one less
    than the polyhedron.
    """
    lines = _canonical_lines(lines, n)
    vertices = tuple(sorted(set(tuple(Fraction(x) for x in v) for v in vertices)))
    rays = tuple(sorted(set(primitive(r) for r in rays if any(r))))
    hull = _affine_hull(n, vertices, rays, lines)
    d = _generator_dimension(vertices, rays, lines, n)
    facets = set()
    for a, b in candidates:
        tight_vertices = [v for v in vertices if dot(a, v) == b]
        if not tight_vertices:
            continue
        tight_rays = [r for r in rays if dot(a, r) == 0]
        if _generator_dimension(tight_vertices, tight_rays, lines, n) != d - 1:
            continue
        facets.add(_canonical_inequality(a, b, hull))
    equalities = []
    for normal, offset, _ in hull:
        scaled = sign_normalized(tuple(normal) + (offset,))
        equalities.append(Halfspace(scaled[:-1], scaled[-1]))

    return Polyhedron(
        HRep(n, tuple(sorted(facets)), tuple(sorted(equalities))),
        VRep(n, vertices, rays, lines),
    )


def _empty(n: int) -> Polyhedron:
    infeasible = (
        Halfspace(unit_vector(n, 0), Fraction(1)),
        Halfspace(scale(unit_vector(n, 0), -1), Fraction(0)),
    )
    return Polyhedron(HRep(n, tuple(sorted(infeasible)), ()), VRep(n), empty=True)


def _check_dim(dim: int, *vectors: Sequence):
    if not isinstance(dim, int) or dim < 1:
        raise InputError("ambient dimension must be a positive integer, got {!r}".format(dim))
    for v in vectors:
        if len(v) != dim:
            raise InputError("expected a vector with {} coordinates, got {}".format(dim, len(v)))


def _same_dim(*polyhedra: Polyhedron):
    dims = {_.dim for _ in polyhedra}
    if len(dims) != 1:
        raise InputError("polyhedra live in different dimensions: {}".format(sorted(dims)))


def _require_nonempty(p: Polyhedron, what: str):
    if p.is_empty:
        raise InputError("{} of an empty polyhedron".format(what))


####################### CONSTRUCTION #####################################


def from_hrep(h: HRep) -> Polyhedron:
    """
    Polyhedron ``{u : <a_i, u> >= b_i, <c_j, u> = d_j}`` with its minimal V-rep.

    Examples
    --------
    >>> square = from_hrep(HRep.of(2, [([1, 0], 0), ([-1, 0], -1), ([0, 1], 0), ([0, -1], -1)]))
    >>> len(square.vrep.vertices)
    4
    """
    _check_dim(h.dim, *(_.normal for _ in h.inequalities + h.equalities))
    inequalities = [(_.normal, _.offset) for _ in h.inequalities]
    equalities = [(_.normal, _.offset) for _ in h.equalities]
    generators = _h_to_v(h.dim, inequalities, equalities)
    if generators is None:
        return _empty(h.dim)
    vertices, rays, lines = generators

    return _assemble(h.dim, vertices, rays, lines, inequalities)


def from_vrep(v: VRep) -> Polyhedron:
    """
    Polyhedron ``conv(vertices) + cone(rays) + span(lines)`` with its minimal
    H-rep. Redundant generators are dropped.
    """
    _check_dim(v.dim, *(v.vertices + v.rays + v.lines))
    if not v.vertices:
        if v.rays or v.lines:
            raise InputError("a nonempty polyhedron needs at least one vertex")
        return _empty(v.dim)
    if any(not any(_) for _ in v.rays + v.lines):
        raise InputError("rays and lines must be nonzero")
    candidates = _v_to_h(v.dim, v.vertices, v.rays, v.lines)
    hull = _affine_hull(v.dim, v.vertices, v.rays, v.lines)
    vertices, rays, lines = _h_to_v(v.dim, candidates, [(a, b) for a, b, _ in hull])

    return _assemble(v.dim, vertices, rays, lines, candidates)


def whole_space(n: int) -> Polyhedron:
    return from_hrep(HRep(n))


def upper_halfspace(n: int) -> Polyhedron:
    """``{u : u_n >= 0}``, the ambient space of conic complexes."""
    return from_hrep(HRep(n, (Halfspace(unit_vector(n, n - 1), Fraction(0)),)))


def point(p: Sequence[RationalLike]) -> Polyhedron:
    p = qvector(p)
    return from_vrep(VRep(len(p), (p,)))


def ray_cone(u: Sequence[RationalLike]) -> Polyhedron:
    """The half-line ``R_{>=0} u``; ``{0}`` when ``u`` is zero."""
    u = qvector(u)
    return from_vrep(VRep(len(u), (zero_vector(len(u)),), (u,) if any(u) else ()))


####################### PREDICATES #####################################


def is_empty(p: Polyhedron) -> bool:
    return p.is_empty


def contains_point(p: Polyhedron, x: Sequence[RationalLike]) -> bool:
    x = qvector(x)
    _check_dim(p.dim, x)
    if p.is_empty:
        return False
    return all(h.holds(x) for h in p.hrep.inequalities) and all(h.is_tight(x) for h in p.hrep.equalities)


def in_relative_interior(p: Polyhedron, x: Sequence[RationalLike]) -> bool:
    x = qvector(x)
    return contains_point(p, x) and all(h.value(x) > 0 for h in p.hrep.inequalities)


def contains(outer: Polyhedron, inner: Polyhedron) -> bool:
    """True iff ``inner`` is a subset of ``outer``."""
    _same_dim(outer, inner)
    if inner.is_empty:
        return True
    if outer.is_empty:
        return False
    ineqs, eqs = outer.hrep.inequalities, outer.hrep.equalities
    if not all(contains_point(outer, v) for v in inner.vrep.vertices):
        return False
    for r in inner.vrep.rays:
        if any(h.slope(r) < 0 for h in ineqs) or any(h.slope(r) != 0 for h in eqs):
            return False
    for l in inner.vrep.lines:
        if any(h.slope(l) != 0 for h in ineqs + eqs):
            return False

    return True


def equals(p: Polyhedron, q: Polyhedron) -> bool:
    _same_dim(p, q)
    return p == q


####################### OPERATIONS #####################################


def intersect(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    _same_dim(p, q)
    if p.is_empty or q.is_empty:
        return _empty(p.dim)
    if contains(q, p):
        return p
    if contains(p, q):
        return q
    return from_hrep(
        HRep(
            p.dim,
            p.hrep.inequalities + q.hrep.inequalities,
            p.hrep.equalities + q.hrep.equalities,
        )
    )


def recession_cone(p: Polyhedron) -> Polyhedron:
    """
    ``rec(P) = {u : P + u ⊂ P}``: the homogenized system ``<a_i, u> >= 0``,
    ``<c_j, u> = 0``, generated by the rays and lines of ``P``.
    """
    _require_nonempty(p, "recession cone")
    candidates = [(h.normal, Fraction(0)) for h in p.hrep.inequalities]
    return _assemble(p.dim, [zero_vector(p.dim)], p.vrep.rays, p.vrep.lines, candidates)


def lift_cone(p: Polyhedron) -> Polyhedron:
    """
    ``c(P)``, the closed cone over ``P x {1}`` in one more dimension.

    Its slice at height 1 is ``P`` and its slice at height 0 is ``rec(P)``.
    """
    _require_nonempty(p, "cone")
    n = p.dim
    rays = [tuple(v) + (Fraction(1),) for v in p.vrep.vertices]
    rays += [tuple(r) + (Fraction(0),) for r in p.vrep.rays]
    lines = [tuple(l) + (Fraction(0),) for l in p.vrep.lines]
    candidates = [(tuple(h.normal) + (-h.offset,), Fraction(0)) for h in p.hrep.inequalities]
    candidates.append((unit_vector(n + 1, n), Fraction(0)))

    return _assemble(n + 1, [zero_vector(n + 1)], rays, lines, candidates)


def embed_at_height_zero(p: Polyhedron) -> Polyhedron:
    """``P x {0}`` in one more dimension."""
    _require_nonempty(p, "embedding")
    n = p.dim
    vertices = [tuple(v) + (Fraction(0),) for v in p.vrep.vertices]
    rays = [tuple(r) + (Fraction(0),) for r in p.vrep.rays]
    lines = [tuple(l) + (Fraction(0),) for l in p.vrep.lines]
    candidates = [(tuple(h.normal) + (Fraction(0),), h.offset) for h in p.hrep.inequalities]

    return _assemble(n + 1, vertices, rays, lines, candidates)


def affine_slice(cone: Polyhedron, height: RationalLike) -> Polyhedron:
    """``{u : (u, height) in cone}`` in one dimension less."""
    h = parse_rational(height)
    n = cone.dim - 1
    if n < 1:
        raise InputError("cannot slice a polyhedron of dimension {}".format(cone.dim))
    if cone.is_empty:
        return _empty(n)
    ineqs = tuple(Halfspace(_.normal[:n], _.offset - _.normal[n] * h) for _ in cone.hrep.inequalities)
    eqs = tuple(Halfspace(_.normal[:n], _.offset - _.normal[n] * h) for _ in cone.hrep.equalities)

    return from_hrep(HRep(n, ineqs, eqs))


def minkowski_sum(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    _same_dim(p, q)
    if p.is_empty or q.is_empty:
        return _empty(p.dim)
    vertices = tuple(add(v, w) for v in p.vrep.vertices for w in q.vrep.vertices)
    return from_vrep(VRep(p.dim, vertices, p.vrep.rays + q.vrep.rays, p.vrep.lines + q.vrep.lines))


def polytope_part(p: Polyhedron) -> Polyhedron:
    """Convex hull of the vertices: the polytope of the Minkowski-Weyl decomposition."""
    _require_nonempty(p, "polytope part")
    return from_vrep(VRep(p.dim, p.vrep.vertices))


def lineality_space(p: Polyhedron) -> List[QVector]:
    _require_nonempty(p, "lineality space")
    return list(p.vrep.lines)


def is_strongly_convex(p: Polyhedron) -> bool:
    _require_nonempty(p, "strong convexity")
    return not p.vrep.lines


def relative_interior_point(p: Polyhedron) -> QVector:
    """Barycenter of the vertices plus the sum of the rays."""
    _require_nonempty(p, "relative interior point")
    vertices = p.vrep.vertices
    x = scale(
        [sum(column, Fraction(0)) for column in zip(*vertices)],
        Fraction(1, len(vertices)),
    )
    for r in p.vrep.rays:
        x = add(x, r)

    return x


def face_where_minimized(p: Polyhedron, x: Sequence[RationalLike]) -> Polyhedron:
    """
    ``P_x = {u in P : <x,u> <= <x,v> for all v in P}``.

    Raises NoFaceError when ``x`` is unbounded below on ``P``.
    """
    x = qvector(x)
    _check_dim(p.dim, x)
    _require_nonempty(p, "face")
    if any(dot(x, r) < 0 for r in p.vrep.rays) or any(dot(x, l) != 0 for l in p.vrep.lines):
        raise NoFaceError("functional is unbounded below on the polyhedron")
    values = [dot(x, v) for v in p.vrep.vertices]
    low = min(values)
    vertices = [v for v, value in zip(p.vrep.vertices, values) if value == low]
    rays = [r for r in p.vrep.rays if dot(x, r) == 0]
    candidates = [(h.normal, h.offset) for h in p.hrep.inequalities]

    return _assemble(p.dim, vertices, rays, p.vrep.lines, candidates)


def _enumerate_faces(p: Polyhedron) -> List[Tuple[FaceHandle, Polyhedron]]:
    if p.is_empty:
        return []
    vertices, rays, lines = p.vrep.vertices, p.vrep.rays, p.vrep.lines
    ineqs = p.hrep.inequalities
    everything = frozenset(range(len(ineqs)))
    vertex_tight = [frozenset(i for i, h in enumerate(ineqs) if h.is_tight(v)) for v in vertices]
    ray_tight = [frozenset(i for i, h in enumerate(ineqs) if h.slope(r) == 0) for r in rays]

    def close(vs, rs):
        tight = everything
        for v in vs:
            tight &= vertex_tight[v]
        for r in rs:
            tight &= ray_tight[r]
        vs = frozenset(v for v in range(len(vertices)) if tight <= vertex_tight[v])
        rs = frozenset(r for r in range(len(rays)) if tight <= ray_tight[r])
        return tight, vs, rs

    queue = [close(range(len(vertices)), range(len(rays)))]
    seen = {queue[0][1:]}
    for tight, vs, rs in queue:
        for i in everything - tight:
            sub_vertices = [v for v in vs if i in vertex_tight[v]]
            if not sub_vertices:
                continue
            face = close(sub_vertices, [r for r in rs if i in ray_tight[r]])
            if face[1:] not in seen:
                seen.add(face[1:])
                queue.append(face)

    candidates = [(h.normal, h.offset) for h in ineqs]
    lattice = []
    for tight, vs, rs in queue:
        if not tight:
            face = p
        else:
            face = _assemble(
                p.dim,
                [vertices[_] for _ in sorted(vs)],
                [rays[_] for _ in sorted(rs)],
                lines,
                candidates,
            )
        lattice.append((FaceHandle(tight), face))
    lattice.sort(key=lambda _: _[1].sort_key)

    return lattice


def face_lattice(p: Polyhedron) -> List[Tuple[FaceHandle, Polyhedron]]:
    """Every nonempty face with the handle naming it, smallest dimension first."""
    _require_nonempty(p, "faces")
    return list(p._lattice)


def faces(p: Polyhedron) -> List[Polyhedron]:
    """
    All nonempty faces of ``p``, including ``p``.

    Examples
    --------
    >>> len(faces(unit_square))
    9
    """
    return [face for _, face in face_lattice(p)]


def is_face_of(f: Polyhedron, p: Polyhedron) -> bool:
    """
    True iff ``f`` is a nonempty face of ``p``: the face of ``p`` cut out by
    the inequalities tight at a relative-interior point of ``f`` equals ``f``.
    """
    _same_dim(f, p)
    if f.is_empty or p.is_empty or not contains(p, f):
        return False
    x = relative_interior_point(f)
    tight = [h for h in p.hrep.inequalities if h.is_tight(x)]
    vertices = tuple(v for v in p.vrep.vertices if all(h.is_tight(v) for h in tight))
    rays = tuple(r for r in p.vrep.rays if all(h.slope(r) == 0 for h in tight))

    return f.vrep == VRep(p.dim, vertices, rays, p.vrep.lines)


def locate_recession_face(p: Polyhedron, v: Sequence[RationalLike]) -> RecessionFace:
    """
    A face ``F`` of ``p`` with ``v`` in the relative interior of ``rec(F)``,
    together with ``rec(F)``. ``rec(F)`` is unique; the face returned is the
    first such face in canonical order (smallest dimension first).
    """
    v = qvector(v)
    _check_dim(p.dim, v)
    _require_nonempty(p, "recession face")
    if not contains_point(recession_cone(p), v):
        raise PreconditionError("direction is not in the recession cone")
    for _, face in face_lattice(p):
        cone = recession_cone(face)
        if in_relative_interior(cone, v):
            return RecessionFace(face, cone)
    raise AssertionError("recession cone faces do not cover the recession cone")
