"""
Constructions on complexes: the recession collection ``rec(Π)``, the cone
collection ``c(Π)``, the slice ``aff(Σ)`` at height one, the check list
behind the recession/cone theorem, extendable subdivisions through hyperplane
arrangements, and the fan datum of a complete strongly convex complex.
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from recfan.checklist import CheckList, complex_check
from recfan.complex import (
    STATUS,
    ComplexVerdict,
    MWReport,
    PolyhedralComplex,
    PolyhedralSet,
    require_valid,
    build_complex,
    check_minkowski_weyl,
    close_under_faces,
    covers,
    is_connected,
    maximal_cells,
    support,
    verify_cells,
)
from recfan.errors import InputError, PreconditionError, ToricDatumRefused
from recfan.exactq import sign_normalized
from recfan.logs import LOGGER
from recfan.polyhedron import (
    Halfspace,
    HRep,
    Polyhedron,
    affine_slice,
    contains,
    embed_at_height_zero,
    faces,
    from_hrep,
    intersect,
    lift_cone,
    recession_cone,
    upper_halfspace,
    whole_space,
)

Cells = Tuple[Polyhedron, ...]


####################### rec AND c #####################################


def recession_complex(complex_: PolyhedralComplex) -> Tuple[Cells, ComplexVerdict]:
    """
    ``rec(Π) = {rec(Λ) : Λ ∈ Π}`` and its verdict. The collection is always
    closed under faces, since the faces of ``rec(Λ)`` are the recession cones of
    the faces of ``Λ``.
    """
    require_valid(complex_)
    cells = tuple(sorted({recession_cone(_) for _ in complex_.cells}))
    verdict = verify_cells(cells)
    assert verdict.status != STATUS.MISSING_FACE, "recession cones are not closed under faces"

    return cells, verdict


def cone_complex(complex_: PolyhedralComplex) -> Tuple[Cells, ComplexVerdict]:
    """``c(Π) = {c(Λ) : Λ ∈ Π} ∪ {σ x {0} : σ ∈ rec(Π)}`` and its verdict."""
    require_valid(complex_)
    cells = {lift_cone(_) for _ in complex_.cells}
    cells.update(embed_at_height_zero(recession_cone(_)) for _ in complex_.cells)
    cells = tuple(sorted(cells))
    verdict = verify_cells(cells)
    assert verdict.status != STATUS.MISSING_FACE, "lifted cones are not closed under faces"

    return cells, verdict


def cone_intersection_formula_holds(first: Polyhedron, second: Polyhedron) -> bool:
    """
    ``c(Λ1) ∩ c(Λ2)`` is ``c(Λ1 ∩ Λ2)`` when the cells meet and
    ``(rec(Λ1) ∩ rec(Λ2)) x {0}`` when they do not.
    """
    lifted = intersect(lift_cone(first), lift_cone(second))
    common = intersect(first, second)
    if not common.is_empty:
        return lifted == lift_cone(common)
    return lifted == embed_at_height_zero(intersect(recession_cone(first), recession_cone(second)))


def aff(complex_: PolyhedralComplex) -> PolyhedralComplex:
    """
    Slice a conic complex with the hyperplane ``t = 1`` on its last coordinate.

    Returns the empty complex when no cell reaches height one.
    """
    if complex_.dim < 2:
        raise InputError("aff needs a complex of dimension at least 2")
    if not complex_.conic:
        raise PreconditionError("aff is defined for conic complexes")
    upper = upper_halfspace(complex_.dim)
    for cell in complex_.cells:
        if not contains(upper, cell):
            raise PreconditionError("a cell reaches below t = 0: {!r}".format(cell))
    slices = [affine_slice(_, 1) for _ in complex_.cells]
    slices = [_ for _ in slices if not _.is_empty]
    if not slices:
        return PolyhedralComplex.empty(complex_.dim - 1)

    return PolyhedralComplex(complex_.dim - 1, close_under_faces(slices))


def _covers_space(complex_: PolyhedralComplex, ambient: Polyhedron) -> bool:
    return not complex_.is_empty and covers(support(complex_), ambient)


def roundtrip_check(complex_: PolyhedralComplex) -> bool:
    """
    ``aff`` and ``c`` are inverse on complete complexes.

    A complex covering the whole space is treated as ``Π`` and checked for
    ``aff(c(Π)) = Π`` and ``c(aff(c(Π))) = c(Π)``. Otherwise a conic complex
    covering ``t >= 0`` is treated as ``Σ`` and checked for ``c(aff(Σ)) = Σ``
    and ``aff(c(aff(Σ))) = aff(Σ)``.
    """
    require_valid(complex_)
    n = complex_.dim
    if _covers_space(complex_, whole_space(n)):
        lifted = PolyhedralComplex(n + 1, cone_complex(complex_)[0])
        sliced = aff(lifted)
        return sliced == complex_ and cone_complex(sliced)[0] == lifted.cells
    upper = upper_halfspace(n)
    if complex_.conic and all(contains(upper, _) for _ in complex_.cells) and _covers_space(complex_, upper):
        sliced = aff(complex_)
        if sliced.is_empty:
            return False
        lifted = cone_complex(sliced)[0]
        return lifted == complex_.cells and aff(PolyhedralComplex(n, lifted)) == sliced
    raise PreconditionError("round trips are only defined for complete complexes")


def is_fan(cells: Iterable[Polyhedron]) -> bool:
    cells = tuple(cells)
    if not all(_.is_cone and not _.vrep.lines for _ in cells):
        return False
    return verify_cells(cells).is_valid


####################### RECESSION AND CONE CHECK LIST #####################################


@dataclass(frozen=True)
class Theorem14Report:
    connected: bool
    mw: MWReport
    rec_cells: Cells
    rec_verdict: ComplexVerdict
    cone_cells: Cells
    cone_verdict: ComplexVerdict
    support_identity_rec: bool
    support_identity_cone: bool
    rational: bool
    fans: bool

    @property
    def hypotheses_hold(self) -> bool:
        return self.connected and self.mw.holds

    @property
    def conclusions_hold(self) -> bool:
        return (
            self.rec_verdict.is_valid
            and self.cone_verdict.is_valid
            and self.support_identity_rec
            and self.support_identity_cone
        )


class Theorem14CheckList(CheckList):
    """
    Hypotheses and conclusions of the recession/cone theorem for one complex:
    a complex with connected support satisfying the Minkowski-Weyl condition
    has complexes ``rec(Π)`` and ``c(Π)``, with ``|rec(Π)| = rec(|Π|)`` and
    ``|c(Π)| = c(|Π|)``.
    """

    def __init__(self, complex_: PolyhedralComplex, logger: LOGGER = LOGGER.SILENT, **kwargs):
        require_valid(complex_)
        self.complex = complex_
        self.support_set = support(complex_)
        super().__init__(logger=logger, **kwargs)

    @complex_check(check_type="connected", order=1)
    def check_connected(self):
        """
        The support is connected
        """
        self.connected = is_connected(self.support_set)
        return self.connected

    @complex_check(check_type="minkowski_weyl", order=2)
    def check_minkowski_weyl(self):
        """
        The support is a union of polytopes plus one cone
        """
        self.mw = check_minkowski_weyl(self.complex)
        return self.mw.holds

    @complex_check(check_type="recession_complex", order=3)
    def check_recession_complex(self):
        """
        rec(Π) is a complex
        """
        self.rec_cells, self.rec_verdict = recession_complex(self.complex)
        return self.rec_verdict.status.value

    @complex_check(check_type="cone_complex", order=4)
    def check_cone_complex(self):
        """
        c(Π) is a complex
        """
        self.cone_cells, self.cone_verdict = cone_complex(self.complex)
        return self.cone_verdict.status.value

    @complex_check(check_type="support_identity_rec", order=5)
    def check_support_identity_rec(self):
        """
        |rec(Π)| = rec(|Π|)
        """
        if not self.mw.holds:
            # the failure witness direction lies in some rec(Λ) but not in rec(|Π|)
            self.support_identity_rec = False
            return False
        sigma = self.mw.sigma
        inside = all(contains(sigma, _) for _ in self.rec_cells)
        self.support_identity_rec = inside and covers(PolyhedralSet.of(self.rec_cells), sigma)
        return self.support_identity_rec

    @complex_check(check_type="support_identity_cone", order=6)
    def check_support_identity_cone(self):
        """
        |c(Π)| = c(|Π|)
        """
        lifted = PolyhedralSet.of([lift_cone(_) for _ in self.support_set.pieces])
        cones = PolyhedralSet.of(self.cone_cells)
        self.support_identity_cone = all(covers(lifted, _) for _ in cones.pieces) and all(
            covers(cones, _) for _ in lifted.pieces
        )
        return self.support_identity_cone

    @complex_check(check_type="flags", order=7)
    def check_flags(self):
        """
        rec(Π) and c(Π) are rational, and fans when Π is strongly convex
        """
        self.rational = self.complex.rational
        self.fans = (
            self.complex.strongly_convex and self.rec_verdict.is_valid and self.cone_verdict.is_valid
        )
        return {"rational": self.rational, "fans": self.fans}

    def report(self) -> Theorem14Report:
        report = Theorem14Report(
            connected=self.connected,
            mw=self.mw,
            rec_cells=self.rec_cells,
            rec_verdict=self.rec_verdict,
            cone_cells=self.cone_cells,
            cone_verdict=self.cone_verdict,
            support_identity_rec=self.support_identity_rec,
            support_identity_cone=self.support_identity_cone,
            rational=self.rational,
            fans=self.fans,
        )
        if report.hypotheses_hold:
            assert report.conclusions_hold, "hypotheses hold but a conclusion fails"
            assert report.fans == self.complex.strongly_convex, "strongly convex input without fans"

        return report


def theorem14_pipeline(complex_: PolyhedralComplex, logger: LOGGER = LOGGER.SILENT) -> Theorem14Report:
    checks = Theorem14CheckList(complex_, logger=logger)
    checks()
    return checks.report()


####################### ARRANGEMENTS AND SUBDIVISIONS #####################################


def _hyperplane_key(h: Halfspace) -> tuple:
    return sign_normalized(tuple(h.normal) + (h.offset,))


def arrangement_complex(hyperplanes: Sequence[Halfspace], dim: int) -> PolyhedralComplex:
    """
    The complete complex cut out by the hyperplanes ``<a, u> = b``: closures
    of the full-dimensional sign regions and all their faces.
    """
    keys = set()
    for h in hyperplanes:
        if len(h.normal) != dim:
            raise InputError("hyperplane normal has {} coordinates, expected {}".format(len(h.normal), dim))
        if not any(h.normal):
            raise InputError("hyperplane normals must be nonzero")
        keys.add(_hyperplane_key(h))
    regions = [whole_space(dim)]
    for key in sorted(keys):
        h = Halfspace(key[:-1], key[-1])
        split = []
        for region in regions:
            for side in (h, h.flipped()):
                part = from_hrep(
                    HRep(dim, region.hrep.inequalities + (side,), region.hrep.equalities)
                )
                if part.dimension == dim:
                    split.append(part)
        regions = split
    complex_, verdict = build_complex(regions)
    assert verdict.is_valid, "arrangement regions do not form a complex"

    return complex_


def _defining_hyperplanes(complex_: PolyhedralComplex) -> List[Halfspace]:
    hyperplanes = []
    for cell in maximal_cells(complex_.cells):
        hyperplanes += list(cell.hrep.inequalities) + list(cell.hrep.equalities)
    return hyperplanes


@dataclass(frozen=True)
class SubdivisionResult:
    refined: PolyhedralComplex
    extension: PolyhedralComplex
    same_support: bool
    refines: bool
    extension_complete: bool


def extendable_subdivision(complex_: PolyhedralComplex) -> SubdivisionResult:
    """
    A subdivision ``Π'`` of ``Π`` that is a subcomplex of a complete complex
    ``Π̄``: ``Π̄`` is the arrangement of every hyperplane defining a maximal cell,
    and ``Π'`` keeps the cells of ``Π̄`` lying inside a cell of ``Π``.
    """
    require_valid(complex_)
    n = complex_.dim
    extension = arrangement_complex(_defining_hyperplanes(complex_), n)
    targets = maximal_cells(complex_.cells)
    refined_cells = tuple(_ for _ in extension.cells if any(contains(t, _) for t in targets))
    refined = PolyhedralComplex(n, refined_cells)
    pieces = support(refined)
    same_support = all(covers(pieces, _) for _ in targets)
    refines = all(any(contains(t, _) for t in complex_.cells) for _ in refined_cells)
    extension_complete = covers(support(extension), whole_space(n))
    assert same_support and refines and extension_complete, "subdivision invariants fail"

    return SubdivisionResult(refined, extension, same_support, refines, extension_complete)


@dataclass(frozen=True)
class ExtendabilityCertificate:
    """
    ``not_extendable`` is True when ``rec(Π)`` or ``c(Π)`` fails to be a
    complex; False means inconclusive.
    """

    not_extendable: bool
    rec_verdict: ComplexVerdict
    cone_verdict: ComplexVerdict


def extendability_certificate(complex_: PolyhedralComplex) -> ExtendabilityCertificate:
    rec_verdict = recession_complex(complex_)[1]
    cone_verdict = cone_complex(complex_)[1]
    return ExtendabilityCertificate(
        not (rec_verdict.is_valid and cone_verdict.is_valid), rec_verdict, cone_verdict
    )


####################### FAN DATUM #####################################


@dataclass(frozen=True)
class ToricDatum:
    """
    ``c(Π)`` for a complete strongly convex rational ``Π``: the cones in
    canonical order, their primitive ray generators, and for each cone the
    indices of the cones having it as a proper face.
    """

    dim: int
    cones: Cells
    rays: Tuple[Tuple[Tuple[int, ...], ...], ...]
    faces_of: Tuple[Tuple[int, ...], ...]
    complete: bool = True
    strongly_convex: bool = True
    proper: bool = True


def toric_datum(complex_: PolyhedralComplex) -> ToricDatum:
    """
    Raises ToricDatumRefused naming the first failing predicate among
    ``valid``, ``strongly_convex``, ``rational``, ``complete``.
    """
    if complex_.is_empty:
        raise ToricDatumRefused("valid", "the complex has no cells")
    if not verify_cells(complex_.cells).is_valid:
        raise ToricDatumRefused("valid", "not a polyhedral complex")
    if not complex_.strongly_convex:
        raise ToricDatumRefused("strongly_convex", "a cell contains a line")
    if not complex_.rational:
        raise ToricDatumRefused("rational", "a cell is not rational")
    if not _covers_space(complex_, whole_space(complex_.dim)):
        raise ToricDatumRefused("complete", "the support is not the whole space")
    cones, verdict = cone_complex(complex_)
    assert verdict.is_valid, "cone complex of a complete complex is not a fan"
    index = {cone: i for i, cone in enumerate(cones)}
    parents = [[] for _ in cones]
    for j, cone in enumerate(cones):
        for face in faces(cone):
            if face != cone:
                parents[index[face]].append(j)
    rays = tuple(
        tuple(tuple(int(x) for x in r) for r in cone.vrep.rays)
        for cone in cones
    )

    return ToricDatum(
        complex_.dim + 1,
        cones,
        rays,
        tuple(tuple(sorted(_)) for _ in parents),
    )
