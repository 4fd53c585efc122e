#!/usr/bin/env python

"""Tests for `recfan.polyhedron`."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from recfan.errors import InputError, NoFaceError, PreconditionError
from recfan.exactq import add
from recfan.polyhedron import (
    Halfspace,
    HRep,
    VRep,
    affine_slice,
    contains,
    contains_point,
    equals,
    face_lattice,
    face_where_minimized,
    faces,
    from_hrep,
    from_vrep,
    in_relative_interior,
    intersect,
    is_face_of,
    is_strongly_convex,
    lift_cone,
    lineality_space,
    locate_recession_face,
    minkowski_sum,
    point,
    polytope_part,
    ray_cone,
    recession_cone,
    relative_interior_point,
    whole_space,
)
from tests.strategies import polyhedra

LAMBDA1 = HRep.of(3, [([1, 0, 0], 0), ([0, 1, 0], 0)], [([0, 0, 1], 0)])
LAMBDA2 = HRep.of(3, [([1, 1, 0], 0), ([1, -1, 0], 0)], [([0, 0, 1], 1)])
SQUARE = HRep.of(2, [([1, 0], 0), ([-1, 0], -1), ([0, 1], 0), ([0, -1], -1)])


def test_from_hrep():
    """
    Testing halfspace descriptions turn into minimal generators
    """
    lambda1 = from_hrep(LAMBDA1)
    assert lambda1.vrep.vertices == ((0, 0, 0),)
    assert lambda1.vrep.rays == ((0, 1, 0), (1, 0, 0))
    assert lambda1.vrep.lines == ()

    square = from_hrep(SQUARE)
    assert set(square.vrep.vertices) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert square.vrep.rays == ()

    lambda2 = from_hrep(LAMBDA2)
    assert lambda2.vrep.vertices == ((0, 0, 1),)
    assert lambda2.vrep.rays == ((1, -1, 0), (1, 1, 0))


def test_from_vrep():
    """
    Testing generators turn into irredundant halfspaces
    """
    quadrant = from_vrep(VRep.of(2, [[0, 0]], [[1, 0], [0, 1]]))
    assert set(quadrant.hrep.inequalities) == {Halfspace.of([1, 0], 0), Halfspace.of([0, 1], 0)}
    assert quadrant.hrep.equalities == ()

    cone = from_vrep(VRep.of(2, [[0, 0]], [[1, 1], [1, -1]]))
    assert set(cone.hrep.inequalities) == {Halfspace.of([1, 1], 0), Halfspace.of([1, -1], 0)}

    segment = from_vrep(VRep.of(1, [[0], [1]]))
    assert set(segment.hrep.inequalities) == {Halfspace.of([1], 0), Halfspace.of([-1], -1)}

    # redundant generators are dropped
    triangle = from_vrep(VRep.of(2, [[0, 0], [2, 0], [0, 2], [1, "1/2"]]))
    assert len(triangle.vrep.vertices) == 3


def test_generators_are_orthogonal_to_lines():
    """
    Testing vertices and rays are normalized into the complement of the lineality space
    """
    halfplane = from_hrep(HRep.of(2, [([1, 1], 2)]))
    assert halfplane.vrep.lines == ((1, -1),)
    assert halfplane.vrep.vertices == ((1, 1),)
    assert halfplane.vrep.rays == ((1, 1),)
    assert from_vrep(VRep.of(2, [[2, 0]], [[1, 0]], [[-2, 2]])) == halfplane

    strip = from_hrep(HRep.of(3, [([1, 0, 0], 1), ([-1, 0, 0], -3)], [([0, 1, 1], 4)]))
    assert strip.vrep.lines == ((0, 1, -1),)
    assert strip.vrep.vertices == ((1, 2, 2), (3, 2, 2))
    assert strip.vrep.rays == ()
    assert strip.dimension == 2
    assert whole_space(3).vrep.vertices == ((0, 0, 0),)


def test_malformed_input():
    """
    Testing dimension mismatches and degenerate generators are refused
    """
    with pytest.raises(InputError):
        from_hrep(HRep.of(2, [([1, 0, 0], 0)]))
    with pytest.raises(InputError):
        Halfspace.of([0, 0], 1)
    with pytest.raises(InputError):
        from_vrep(VRep.of(2, [], [[1, 0]]))
    with pytest.raises(InputError):
        from_vrep(VRep.of(2, [[0, 0]], [[0, 0]]))
    with pytest.raises(InputError):
        contains(whole_space(2), whole_space(3))


def test_empty_polyhedron():
    """
    Testing infeasible systems give the empty polyhedron
    """
    empty = from_hrep(HRep.of(1, [([1], 1), ([-1], 0)]))
    assert empty.is_empty
    assert empty.dimension == -1
    assert empty.hrep.inequalities == (Halfspace.of([-1], 0), Halfspace.of([1], 1))
    assert from_vrep(VRep.of(2)).is_empty
    with pytest.raises(InputError):
        recession_cone(empty)


def test_containment_and_equality():
    """
    Testing point and polyhedron containment
    """
    quadrant = from_vrep(VRep.of(2, [[0, 0]], [[1, 0], [0, 1]]))
    assert contains(quadrant, point([0, 0]))
    assert contains_point(quadrant, ["1/2", 3])
    assert not contains_point(quadrant, [-1, 0])

    lambda2 = from_hrep(LAMBDA2)
    assert equals(lambda2, from_hrep(lambda2.hrep))
    assert equals(lambda2, from_vrep(lambda2.vrep))

    common = intersect(recession_cone(from_hrep(LAMBDA1)), recession_cone(lambda2))
    assert contains(common, ray_cone([1, 1, 0]))


def test_intersect():
    """
    Testing intersections, including the empty one
    """
    common = intersect(recession_cone(from_hrep(LAMBDA1)), recession_cone(from_hrep(LAMBDA2)))
    assert common == from_hrep(HRep.of(3, [([0, 1, 0], 0), ([1, -1, 0], 0)], [([0, 0, 1], 0)]))

    square = from_hrep(SQUARE)
    assert intersect(square, square) == square

    line0 = from_hrep(HRep.of(2, equalities=[([0, 1], 0)]))
    line1 = from_hrep(HRep.of(2, equalities=[([0, 1], 1)]))
    assert intersect(line0, line1).is_empty


def test_recession_cone():
    """
    Testing recession cones of polytopes, polyhedra and cones
    """
    assert recession_cone(from_hrep(SQUARE)) == point([0, 0])
    assert recession_cone(from_hrep(LAMBDA2)) == from_hrep(
        HRep.of(3, [([1, 1, 0], 0), ([1, -1, 0], 0)], [([0, 0, 1], 0)])
    )
    lambda1 = from_hrep(LAMBDA1)
    assert recession_cone(lambda1) == lambda1


def test_lift_cone():
    """
    Testing the cone over a polyhedron placed at height one
    """
    assert lift_cone(point([1, 2])) == ray_cone([1, 2, 1])

    lifted = lift_cone(from_hrep(LAMBDA1))
    expected = from_vrep(VRep.of(4, [[0, 0, 0, 0]], [[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]))
    assert lifted == expected
    assert affine_slice(lifted, 1) == from_hrep(LAMBDA1)
    assert affine_slice(lifted, 0) == recession_cone(from_hrep(LAMBDA1))

    segment = from_vrep(VRep.of(1, [[0], [1]]))
    assert lift_cone(segment) == from_vrep(VRep.of(2, [[0, 0]], [[0, 1], [1, 1]]))


def test_face_where_minimized():
    """
    Testing faces cut out by minimizing a functional
    """
    square = from_hrep(SQUARE)
    assert face_where_minimized(square, [0, 0]) == square
    assert face_where_minimized(square, [1, 1]) == point([0, 0])
    assert face_where_minimized(square, [0, -1]) == from_vrep(VRep.of(2, [[0, 1], [1, 1]]))

    lambda2 = from_hrep(LAMBDA2)
    assert face_where_minimized(lambda2, [1, 0, 0]) == point([0, 0, 1])

    quadrant = from_vrep(VRep.of(2, [[0, 0]], [[1, 0], [0, 1]]))
    with pytest.raises(NoFaceError):
        face_where_minimized(quadrant, [-1, 0])


def test_faces():
    """
    Testing face enumeration
    """
    square = from_hrep(SQUARE)
    assert len(faces(square)) == 9
    assert sorted(_.dimension for _ in faces(square)) == [0, 0, 0, 0, 1, 1, 1, 1, 2]

    lambda1 = from_hrep(LAMBDA1)
    assert set(faces(lambda1)) == {
        point([0, 0, 0]),
        ray_cone([1, 0, 0]),
        ray_cone([0, 1, 0]),
        lambda1,
    }

    half_line = ray_cone([1])
    assert faces(half_line) == [point([0]), half_line]

    assert len(faces(whole_space(2))) == 1
    for handle, face in face_lattice(square):
        assert all(square.hrep.inequalities[i].is_tight(v) for i in handle.tight_indices for v in face.vrep.vertices)


def test_is_face_of():
    """
    Testing the face relation
    """
    rec1 = recession_cone(from_hrep(LAMBDA1))
    rec2 = recession_cone(from_hrep(LAMBDA2))
    common = intersect(rec1, rec2)
    assert not is_face_of(common, rec1)
    assert not is_face_of(common, rec2)

    square = from_hrep(SQUARE)
    assert is_face_of(square, square)
    assert is_face_of(point([0, 0]), square)
    assert not is_face_of(point(["1/2", 0]), square)
    assert not is_face_of(point([2, 0]), square)


def test_relative_interior_point():
    """
    Testing relative interior points
    """
    assert relative_interior_point(point([3, "1/2"])) == (3, Fraction(1, 2))
    assert relative_interior_point(from_vrep(VRep.of(1, [[0], [1]]))) == (Fraction(1, 2),)
    lambda1 = from_hrep(LAMBDA1)
    x = relative_interior_point(lambda1)
    assert x == (1, 1, 0)
    assert in_relative_interior(lambda1, x)
    assert not in_relative_interior(lambda1, [1, 0, 0])


def test_minkowski_sum():
    """
    Testing Minkowski sums and the polytope plus cone decomposition
    """
    square = from_hrep(SQUARE)
    assert minkowski_sum(square, point([0, 0])) == square

    segment = from_vrep(VRep.of(2, [[0, 0], [1, 0]]))
    strip = from_hrep(HRep.of(2, [([1, 0], 0), ([-1, 0], -1), ([0, 1], 0)]))
    assert minkowski_sum(segment, ray_cone([0, 1])) == strip

    lambda2 = from_hrep(LAMBDA2)
    assert polytope_part(lambda2) == point([0, 0, 1])
    assert minkowski_sum(polytope_part(lambda2), recession_cone(lambda2)) == lambda2


def test_lineality():
    """
    Testing lineality spaces and strong convexity
    """
    plane = whole_space(2)
    assert len(lineality_space(plane)) == 2
    assert not is_strongly_convex(plane)
    assert is_strongly_convex(from_hrep(LAMBDA1))
    halfplane = from_hrep(HRep.of(2, [([1, 0], 0)]))
    assert lineality_space(halfplane) == [(0, 1)]


def test_locate_recession_face():
    """
    Testing the face whose recession cone holds a direction in its relative interior
    """
    lambda1 = from_hrep(LAMBDA1)
    face, cone = locate_recession_face(lambda1, [0, 0, 0])
    assert face == point([0, 0, 0]) and cone == point([0, 0, 0])

    face, cone = locate_recession_face(lambda1, [1, 1, 0])
    assert face == lambda1 and cone == lambda1

    face, cone = locate_recession_face(lambda1, [1, 0, 0])
    assert face == ray_cone([1, 0, 0])

    square = from_hrep(SQUARE)
    face, cone = locate_recession_face(square, [0, 0])
    assert face.dimension == 0 and cone == point([0, 0])

    with pytest.raises(PreconditionError):
        locate_recession_face(lambda1, [-1, 0, 0])


def test_affine_slice():
    """
    Testing slices of cones at a fixed height
    """
    lambda2 = from_hrep(LAMBDA2)
    lifted = lift_cone(lambda2)
    assert affine_slice(lifted, 1) == lambda2
    assert affine_slice(lifted, 0) == recession_cone(lambda2)
    assert affine_slice(lifted, 2) == from_vrep(VRep.of(3, [[0, 0, 2]], lambda2.vrep.rays))

    empty = from_hrep(HRep.of(2, [([1, 0], 1), ([-1, 0], 0)]))
    assert affine_slice(empty, 1).is_empty


@settings(max_examples=100)
@given(polyhedra())
def test_representations_agree(p):
    """
    H to V to H gives back the same polyhedron, and every generator satisfies the halfspaces
    """
    assert from_hrep(p.hrep) == p
    assert from_vrep(p.vrep) == p
    for v in p.vrep.vertices:
        assert contains_point(p, v)
    for r in p.vrep.rays:
        assert all(h.slope(r) >= 0 for h in p.hrep.inequalities)
        assert all(h.slope(r) == 0 for h in p.hrep.equalities)


@settings(max_examples=100)
@given(polyhedra())
def test_recession_cones_of_faces_are_faces_of_the_recession_cone(p):
    """
    {rec(F) : F face of P} equals the set of faces of rec(P)
    """
    assert {recession_cone(_) for _ in faces(p)} == set(faces(recession_cone(p)))


@settings(max_examples=100)
@given(polyhedra())
def test_lift_cone_slices(p):
    """
    The lifted cone slices back to P at height one and to rec(P) at height zero
    """
    lifted = lift_cone(p)
    assert affine_slice(lifted, 1) == p
    assert affine_slice(lifted, 0) == recession_cone(p)
    assert is_strongly_convex(lifted) == is_strongly_convex(p)
    assert is_strongly_convex(recession_cone(p)) == is_strongly_convex(p)


@settings(max_examples=100)
@given(polyhedra(max_inequalities=6))
def test_polytope_plus_recession_cone(p):
    """
    P is the convex hull of its vertices plus its recession cone
    """
    assert minkowski_sum(polytope_part(p), recession_cone(p)) == p


@settings(max_examples=60)
@given(polyhedra(dims=(1, 2, 3), max_inequalities=6))
def test_faces_are_realized_by_functionals(p):
    """
    Every face minimizes the sum of the normals tight on it, and relative interiors are disjoint
    """
    for handle, face in face_lattice(p):
        x = [0] * p.dim
        for i in handle.tight_indices:
            x = add(x, p.hrep.inequalities[i].normal)
        assert face_where_minimized(p, x) == face
        assert is_face_of(face, p)
        inside = relative_interior_point(face)
        holders = [other for _, other in face_lattice(p) if in_relative_interior(other, inside)]
        assert holders == [face]
