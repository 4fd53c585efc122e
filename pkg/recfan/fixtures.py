"""
Bundled complexes with known behaviour under ``rec`` and ``c``.

* ``example17``: two cones at heights 0 and 1 whose recession cones overlap
  in a cone that is a face of neither.
* ``example1_case1``: satisfies the Minkowski-Weyl condition but has a
  disconnected support; ``rec`` is not a complex.
* ``example1_case2``: fails the Minkowski-Weyl condition, yet ``rec`` is a fan.
  It is extendable, which no check here decides.
* ``complete_square_complex``: the arrangement of the four lines through the
  edges of the unit square, nine maximal cells covering the plane.
* ``quadrant_fan``: the four closed quadrants of the plane.
"""
from recfan.codec import cells_to_dict
from recfan.complex import PolyhedralComplex, build_complex, is_complete, maximal_cells
from recfan.polyhedron import Halfspace, HRep, from_hrep
from recfan.fanops import arrangement_complex


def _complex(dim, *cells) -> PolyhedralComplex:
    complex_, verdict = build_complex(from_hrep(HRep.of(dim, *_)) for _ in cells)
    assert verdict.is_valid, "fixture is not a polyhedral complex"
    return complex_


def example17() -> PolyhedralComplex:
    return _complex(
        3,
        ([([1, 0, 0], 0), ([0, 1, 0], 0)], [([0, 0, 1], 0)]),
        ([([1, 1, 0], 0), ([1, -1, 0], 0)], [([0, 0, 1], 1)]),
    )


def example1_case1() -> PolyhedralComplex:
    return _complex(
        3,
        ([([1, 0, 0], 0), ([0, 1, 0], 0)], [([0, 0, 1], 0)]),
        ([([1, -1, 0], 0), ([0, 1, 0], 0)], [([0, 0, 1], 1)]),
        ([([-1, 1, 0], 0), ([1, 0, 0], 0)], [([0, 0, 1], 1)]),
    )


def example1_case2() -> PolyhedralComplex:
    return _complex(
        3,
        ([([1, -1, 0], 0), ([0, 1, 0], 0)], [([0, 0, 1], 0)]),
        ([([-1, 1, 0], 0), ([1, 0, 0], 0)], [([0, 0, 1], 1)]),
    )


def complete_square_complex() -> PolyhedralComplex:
    return arrangement_complex(
        [
            Halfspace.of([1, 0], 0),
            Halfspace.of([1, 0], 1),
            Halfspace.of([0, 1], 0),
            Halfspace.of([0, 1], 1),
        ],
        2,
    )


def quadrant_fan() -> PolyhedralComplex:
    return arrangement_complex([Halfspace.of([1, 0], 0), Halfspace.of([0, 1], 0)], 2)


def _document(complex_: PolyhedralComplex) -> dict:
    return cells_to_dict(complex_.dim, maximal_cells(complex_.cells))


def fixture_documents() -> dict:
    """``{file name: JSON document}`` for the bundled complexes, maximal cells only."""
    square = complete_square_complex()
    assert is_complete(square), "complete square complex does not cover the plane"

    return {
        "example17.json": _document(example17()),
        "example1-case1.json": _document(example1_case1()),
        "example1-case2.json": _document(example1_case2()),
        "complete-square-complex.json": _document(square),
    }
