"""
Polyhedral complexes, their supports, and the decidable hypotheses of the
recession/cone constructions: validity, connectedness, completeness and the
Minkowski-Weyl condition.

Connectedness. The support of finitely many closed polyhedra is connected iff
their intersection graph is: two unions of closed pieces that share no point
are closed, disjoint and cover the support, so they would disconnect it.

Minkowski-Weyl. ``E = ∪ Λ_i`` satisfies the condition iff ``E = Δ + σ`` for a
finite union of polytopes ``Δ`` and a single cone ``σ``. With ``σ_i = rec(Λ_i)``
and ``τ`` the cone spanned by all the ``σ_i``:

* if the condition holds then ``σ = rec(E)``; the tail of any ray inside ``E``
  lies in one piece, so ``rec(E) = ∪ σ_i``, which is then convex and equal
  to ``τ``; hence ``τ ⊆ ∪ σ_i`` and ``Δ_i + τ ⊆ E`` for every ``i``;
* conversely those two coverage facts give ``E = ∪ (Δ_i + τ)``.

When the condition fails, some ``Λ_j + σ_k`` is not covered by ``E`` (otherwise
``E + τ ⊆ E`` and both facts hold), and an uncovered point of it yields a
direction in ``rec_p(E)`` for ``p ∈ Λ_k`` that is not in ``rec(E)``.
"""
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from recfan.errors import InputError, PreconditionError
from recfan.exactq import QVector, qvector, sub, zero_vector
from recfan.polyhedron import (
    HRep,
    Polyhedron,
    VRep,
    contains,
    contains_point,
    faces,
    from_hrep,
    from_vrep,
    intersect,
    is_face_of,
    minkowski_sum,
    polytope_part,
    ray_cone,
    recession_cone,
    relative_interior_point,
    upper_halfspace,
    whole_space,
)

# pairwise axiom checks fan out over a pathos pool when > 1
WORKERS = int(os.environ.get("RECFAN_WORKERS", "1"))


class STATUS(Enum):
    VALID = "valid"
    MISSING_FACE = "missing_face"
    BAD_PAIR = "bad_pair"


@dataclass(frozen=True)
class ComplexVerdict:
    """
    Outcome of the two complex axioms. ``cells`` holds the offending cell (a
    missing face) or pair (a bad intersection); ``witness`` is the missing
    face or the intersection.
    """

    status: STATUS
    cells: Tuple[Polyhedron, ...] = ()
    witness: Optional[Polyhedron] = None

    @property
    def is_valid(self) -> bool:
        return self.status == STATUS.VALID


VALID = ComplexVerdict(STATUS.VALID)


@dataclass(frozen=True)
class PolyhedralSet:
    """A finite union of nonempty polyhedra."""

    dim: int
    pieces: Tuple[Polyhedron, ...]

    @classmethod
    def of(cls, pieces: Iterable[Polyhedron], dim: Optional[int] = None) -> "PolyhedralSet":
        pieces = tuple(sorted(set(pieces)))
        dim = _common_dim(pieces, dim)
        if any(_.is_empty for _ in pieces):
            raise InputError("pieces of a polyhedral set must be nonempty")
        return cls(dim, pieces)


@dataclass(frozen=True)
class PolyhedralComplex:
    dim: int
    cells: Tuple[Polyhedron, ...]

    @classmethod
    def empty(cls, dim: int) -> "PolyhedralComplex":
        return cls(dim, ())

    @property
    def is_empty(self) -> bool:
        return not self.cells

    @property
    def rational(self) -> bool:
        return True

    @property
    def strongly_convex(self) -> bool:
        return all(not _.vrep.lines for _ in self.cells)

    @property
    def conic(self) -> bool:
        return all(_.is_cone for _ in self.cells)

    @property
    def is_fan(self) -> bool:
        return self.conic and self.strongly_convex


@dataclass(frozen=True)
class MWReport:
    holds: bool
    sigma: Optional[Polyhedron] = None
    delta_pieces: Optional[Tuple[Polyhedron, ...]] = None
    failure_witness: Optional[Tuple[QVector, QVector]] = field(default=None)


def _common_dim(polyhedra: Sequence[Polyhedron], dim: Optional[int] = None) -> int:
    dims = {_.dim for _ in polyhedra}
    if dim is not None:
        dims.add(dim)
    if len(dims) != 1:
        if not dims:
            raise InputError("cannot infer the dimension of an empty collection")
        raise InputError("cells live in different dimensions: {}".format(sorted(dims)))
    return dims.pop()


####################### COMPLEX AXIOMS #####################################


def close_under_faces(cells: Iterable[Polyhedron]) -> Tuple[Polyhedron, ...]:
    closed = set()
    for cell in cells:
        if cell.is_empty:
            raise InputError("cells of a complex must be nonempty")
        closed.update(faces(cell))
    return tuple(sorted(closed))


def maximal_cells(cells: Iterable[Polyhedron]) -> Tuple[Polyhedron, ...]:
    """Cells that are not a proper face of another cell."""
    cells = sorted(set(cells))
    proper_faces = set()
    for cell in cells:
        proper_faces.update(_ for _ in faces(cell) if _ != cell)
    return tuple(_ for _ in cells if _ not in proper_faces)


def _pair_violation(pair: Tuple[Polyhedron, Polyhedron]) -> Optional[Polyhedron]:
    first, second = pair
    common = intersect(first, second)
    if common.is_empty:
        return None
    if is_face_of(common, first) and is_face_of(common, second):
        return None
    return common


def _pair_violations(pairs: List[Tuple[Polyhedron, Polyhedron]]) -> List[Optional[Polyhedron]]:
    if WORKERS > 1 and len(pairs) > 1:
        from pathos.multiprocessing import ProcessingPool

        pool = ProcessingPool(nodes=WORKERS)
        try:
            return list(pool.map(_pair_violation, pairs))
        finally:
            pool.close()
            pool.join()
            pool.clear()
    return [_pair_violation(_) for _ in pairs]


def verify_cells(cells: Iterable[Polyhedron]) -> ComplexVerdict:
    """
    Check both complex axioms on ``cells`` as given, without closing them.

    Face closure is checked first. For a face-closed collection it is enough
    to check pairs of maximal cells: faces of a common face are common faces.
    The witness is the first violation in canonical order.
    """
    cells = tuple(sorted(set(cells)))
    if not cells:
        return VALID
    _common_dim(cells)
    if any(_.is_empty for _ in cells):
        raise InputError("cells of a complex must be nonempty")
    present = set(cells)
    for cell in cells:
        for face in faces(cell):
            if face not in present:
                return ComplexVerdict(STATUS.MISSING_FACE, (cell,), face)
    pairs = list(combinations(maximal_cells(cells), 2))
    for pair, violation in zip(pairs, _pair_violations(pairs)):
        if violation is not None:
            return ComplexVerdict(STATUS.BAD_PAIR, pair, violation)

    return VALID


def build_complex(cells: Iterable[Polyhedron]) -> Tuple[PolyhedralComplex, ComplexVerdict]:
    """
    Close ``cells`` under faces and check the pairwise intersection axiom.

    Examples
    --------
    >>> complex_, verdict = build_complex([square, shifted_square])
    >>> verdict.status
    <STATUS.BAD_PAIR: 'bad_pair'>
    """
    cells = list(cells)
    if not cells:
        raise InputError("a complex needs at least one cell")
    dim = _common_dim(cells)
    closed = close_under_faces(cells)
    return PolyhedralComplex(dim, closed), complex_verdict(PolyhedralComplex(dim, closed))


@lru_cache(maxsize=256)
def complex_verdict(complex_: PolyhedralComplex) -> ComplexVerdict:
    return verify_cells(complex_.cells)


def require_valid(complex_: PolyhedralComplex):
    if complex_.is_empty:
        raise InputError("the complex has no cells")
    if not complex_verdict(complex_).is_valid:
        raise InputError("not a polyhedral complex: {}".format(complex_verdict(complex_).status.value))


def support(complex_: PolyhedralComplex) -> PolyhedralSet:
    """``|Π|``, represented by the maximal cells."""
    return PolyhedralSet(complex_.dim, maximal_cells(complex_.cells))


####################### CONNECTEDNESS #####################################


def connected_components(e: PolyhedralSet) -> List[Tuple[Polyhedron, ...]]:
    """Pieces grouped by the components of the intersection graph."""
    import networkx as nx

    graph = nx.Graph()
    graph.add_nodes_from(range(len(e.pieces)))
    for i, j in combinations(range(len(e.pieces)), 2):
        if not intersect(e.pieces[i], e.pieces[j]).is_empty:
            graph.add_edge(i, j)
    components = sorted(sorted(_) for _ in nx.connected_components(graph))

    return [tuple(e.pieces[i] for i in component) for component in components]


def is_connected(e: PolyhedralSet) -> bool:
    return len(connected_components(e)) <= 1


####################### COVERAGE #####################################


def _uncovered(pieces: Tuple[Polyhedron, ...], region: Polyhedron, strict: tuple) -> Optional[QVector]:
    """
    A point of ``region`` outside every piece, or None.

    Parts outside a piece are closed, so each carries the open side it stands
    for in ``strict``; a part is only explored when its relative interior lies
    on the open side of all of them.
    """
    for index, piece in enumerate(pieces):
        if contains(piece, region):
            return None
        if intersect(piece, region).is_empty:
            continue
        sides = list(piece.hrep.inequalities)
        for h in piece.hrep.equalities:
            sides += [h, h.flipped()]
        kept = []
        for side in sides:
            part = from_hrep(
                HRep(
                    region.dim,
                    region.hrep.inequalities + tuple(kept) + (side.flipped(),),
                    region.hrep.equalities,
                )
            )
            kept.append(side)
            if part.is_empty:
                continue
            bounds = strict + (side,)
            x = relative_interior_point(part)
            if any(g.value(x) >= 0 for g in bounds):
                continue
            witness = _uncovered(pieces[index + 1:], part, bounds)
            if witness is not None:
                return witness
        return None

    return relative_interior_point(region)


@lru_cache(maxsize=4096)
def uncovered_point(e: PolyhedralSet, p: Polyhedron) -> Optional[QVector]:
    """
    A relative-interior point of a part of ``p`` that no piece of ``e``
    covers, or None when ``p ⊆ ∪ pieces``.
    """
    _common_dim(e.pieces + (p,), e.dim)
    if p.is_empty:
        return None
    return _uncovered(e.pieces, p, ())


def covers(e: PolyhedralSet, p: Polyhedron) -> bool:
    return uncovered_point(e, p) is None


def completeness_notion(complex_: PolyhedralComplex) -> str:
    """Region ``is_complete`` compares the support with: ``"t >= 0"`` or ``"whole space"``."""
    return "t >= 0" if complex_.conic else "whole space"


def is_complete(complex_: PolyhedralComplex) -> bool:
    """
    ``|Π|`` is the whole space, or the halfspace ``t >= 0`` on the last
    coordinate when the complex is conic.

    So the cone complex of a complete complex is complete, and so is the fan
    of the two upper quadrants of the plane, although neither covers the
    whole space. ``completeness_notion`` names the region that was used.
    """
    if complex_.is_empty:
        return False
    if completeness_notion(complex_) == "t >= 0":
        ambient = upper_halfspace(complex_.dim)
    else:
        ambient = whole_space(complex_.dim)
    return covers(support(complex_), ambient)


####################### RECESSION #####################################


def _ray_interval(piece: Polyhedron, p: QVector, u: QVector):
    """``{λ >= 0 : p + λu ∈ piece}`` as ``(low, high)``; ``high`` None is unbounded."""
    low, high = Fraction(0), None
    constraints = [(h, False) for h in piece.hrep.inequalities]
    constraints += [(h, True) for h in piece.hrep.equalities]
    for h, is_equality in constraints:
        c, s = h.value(p), h.slope(u)
        if s == 0:
            if c < 0 or (is_equality and c != 0):
                return None
            continue
        bound = -c / s
        if is_equality:
            low, high = max(low, bound), bound if high is None else min(high, bound)
        elif s > 0:
            low = max(low, bound)
        else:
            high = bound if high is None else min(high, bound)
    if high is not None and high < low:
        return None

    return low, high


def ray_in_set(e: PolyhedralSet, p: Sequence, u: Sequence) -> bool:
    """
    True iff ``p + λu ∈ E`` for every ``λ >= 0``, i.e. ``u ∈ rec_p(E)``.

    The ray meets each piece in a closed interval of ``λ``; the union of those
    intervals must reach from 0 to infinity.
    """
    p, u = qvector(p), qvector(u)
    if len(p) != e.dim or len(u) != e.dim:
        raise InputError("expected vectors with {} coordinates".format(e.dim))
    if not any(contains_point(_, p) for _ in e.pieces):
        raise PreconditionError("the base point is not in the set")
    if not any(u):
        return True
    intervals = [_ for _ in (_ray_interval(piece, p, u) for piece in e.pieces) if _ is not None]
    reach = Fraction(0)
    for low, high in sorted(intervals, key=lambda _: _[0]):
        if low > reach:
            return False
        if high is None:
            return True
        reach = max(reach, high)

    return False


def global_recession_contains(e: PolyhedralSet, u: Sequence) -> bool:
    """
    True iff ``u ∈ rec(E)``: every piece slid along ``R_{>=0} u`` stays in ``E``.
    """
    u = qvector(u)
    if len(u) != e.dim:
        raise InputError("expected a vector with {} coordinates".format(e.dim))
    if not any(u):
        return True
    ray = ray_cone(u)
    return all(covers(e, minkowski_sum(piece, ray)) for piece in e.pieces)


def _failure_witness(e: PolyhedralSet, cones: Sequence[Polyhedron]) -> Optional[Tuple[QVector, QVector]]:
    """
    ``(p, u)`` with ``u ∈ rec_p(E)`` but ``u ∉ rec(E)``, from the first pair
    ``(k, j)`` with ``Λ_j + σ_k`` not covered by ``E``.
    """
    for k, cone in enumerate(cones):
        for piece in e.pieces:
            target = uncovered_point(e, minkowski_sum(piece, cone))
            if target is None:
                continue
            backwards = from_vrep(
                VRep(
                    e.dim,
                    (target,),
                    tuple(tuple(-x for x in r) for r in cone.vrep.rays),
                    cone.vrep.lines,
                )
            )
            x = relative_interior_point(intersect(piece, backwards))
            return relative_interior_point(e.pieces[k]), sub(target, x)

    return None


def check_minkowski_weyl(complex_: PolyhedralComplex) -> MWReport:
    """
    Decide whether ``|Π| = Δ + σ`` for a finite union of polytopes ``Δ`` and a
    cone ``σ``.

    Parameters
    ----------
    complex_ : PolyhedralComplex
        a valid complex

    Returns
    -------
    MWReport
        ``sigma`` and ``delta_pieces`` when the condition holds, otherwise a
        ``failure_witness`` ``(p, u)`` with ``u ∈ rec_p(E) \\ rec(E)``
    """
    require_valid(complex_)
    e = support(complex_)
    n = e.dim
    cones = [recession_cone(_) for _ in e.pieces]
    tau = from_vrep(
        VRep(
            n,
            (zero_vector(n),),
            tuple(r for c in cones for r in c.vrep.rays),
            tuple(l for c in cones for l in c.vrep.lines),
        )
    )
    deltas = tuple(polytope_part(_) for _ in e.pieces)
    holds = covers(PolyhedralSet.of(cones, n), tau) and all(
        covers(e, minkowski_sum(delta, tau)) for delta in deltas
    )
    if holds:
        rebuilt = PolyhedralSet.of([minkowski_sum(delta, tau) for delta in deltas], n)
        assert all(covers(rebuilt, _) for _ in e.pieces), "Minkowski-Weyl reconstruction does not cover the support"
        return MWReport(True, sigma=tau, delta_pieces=deltas)
    witness = _failure_witness(e, cones)
    assert witness is not None, "Minkowski-Weyl condition failed without a witness"

    return MWReport(False, failure_witness=witness)


def recession_of_support(complex_: PolyhedralComplex) -> Optional[Polyhedron]:
    """
    ``rec(|Π|)`` as a single cone, or None when ``|Π|`` fails the
    Minkowski-Weyl condition; use ``global_recession_contains`` then.
    """
    report = check_minkowski_weyl(complex_)
    return report.sigma if report.holds else None

