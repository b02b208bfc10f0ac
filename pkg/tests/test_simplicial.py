import pytest

from ncgar.lattice import AbsolutePoset
from ncgar.simplicial import (AbstractComplex, DuplicateVertex,
                              FaceNotInComplex, UnknownVertex,
                              from_maximal_faces, order_complex)

# the running example: order complex of the poset with 2<=1, 2<=3, 2<=4, 1<=3
DELTA_FACES = [(), ("1",), ("2",), ("3",), ("4",),
               ("1", "2"), ("1", "3"), ("2", "3"), ("2", "4"),
               ("1", "2", "3")]


@pytest.fixture(scope="module")
def delta():
    return from_maximal_faces(["1", "2", "3", "4"], [("1", "2", "3"), ("2", "4")])


def faceset(cpx):
    return {tuple(sorted(f)) for f in cpx.faces}


def test_from_maximal_faces(delta):
    assert faceset(delta) == {tuple(sorted(f)) for f in DELTA_FACES}


def test_from_maximal_faces_triangle():
    tri = from_maximal_faces(["1", "2", "3"], [("1", "2", "3")])
    assert len(tri.faces) == 8


def test_from_maximal_faces_empty():
    cpx = from_maximal_faces([], [])
    assert cpx.faces == frozenset({frozenset()})


def test_closure_golden(delta):
    cl = delta.closure([("1",), ("2", "3")])
    assert faceset(cl) == {(), ("1",), ("2",), ("3",), ("2", "3")}
    assert delta.closure([()]).faces == frozenset({frozenset()})
    assert delta.closure(delta.maximal_faces()) == delta


def test_closure_error(delta):
    with pytest.raises(FaceNotInComplex):
        delta.closure([("1", "4")])


def test_star_golden(delta):
    assert delta.star("2") == delta
    assert faceset(delta.star("4")) == {(), ("2",), ("4",), ("2", "4")}
    isolated = from_maximal_faces(["a", "b"], [])
    assert faceset(isolated.star("a")) == {(), ("a",)}
    with pytest.raises(UnknownVertex):
        delta.star("9")


def test_link_golden(delta):
    assert faceset(delta.link("2")) == {(), ("1",), ("3",), ("4",), ("1", "3")}
    assert faceset(delta.link("4")) == {(), ("2",)}
    isolated = from_maximal_faces(["a"], [])
    assert isolated.link("a").faces == frozenset({frozenset()})


def test_cone_golden():
    ell = from_maximal_faces(["1", "2"], [("1", "2")])
    cone = ell.cone("3")
    assert faceset(cone) == {(), ("1",), ("2",), ("3",), ("1", "2"), ("1", "3"),
                             ("2", "3"), ("1", "2", "3")}


def test_cone_properties(delta):
    just_empty = from_maximal_faces([], [])
    assert faceset(just_empty.cone("c")) == {(), ("c",)}
    coned = delta.cone("c")
    assert len(coned.faces) == 2 * len(delta.faces)
    with pytest.raises(DuplicateVertex):
        delta.cone("1")


def test_is_cone(delta):
    assert delta.cone("c").is_cone() is not None
    assert delta.link("2").is_cone() is None  # {1,4} is missing
    single = from_maximal_faces(["v"], [])
    assert single.is_cone() == "v"
    # every vertex of a full simplex qualifies; the first in vertex order wins
    simplex = from_maximal_faces(["b", "a", "c"], [("a", "b", "c")])
    assert simplex.is_cone() == "b"


def test_star_is_cone_over_link(delta):
    # st(v) = cone over lk(v) with apex v, as labelled face sets
    complexes = [delta, delta.cone("c"), delta.star("2"), delta.link("2"),
                 order_complex([1, 2, 3, 4],
                               lambda a, b: (a, b) in {(1, 1), (2, 2), (3, 3),
                                                       (4, 4), (2, 1), (2, 3),
                                                       (2, 4), (1, 3)})]
    for cpx in complexes:
        for v in cpx.vertices:
            assert cpx.star(v) == cpx.link(v).cone(v)


def test_order_complex_matches_running_example(delta):
    pairs = {(1, 1), (2, 2), (3, 3), (4, 4), (2, 1), (2, 3), (2, 4), (1, 3)}
    oc = order_complex([1, 2, 3, 4], lambda a, b: (a, b) in pairs)
    assert oc == delta


def test_order_complex_of_interval(lattice, system):
    lat = lattice("A2")
    s = system("A2")
    oc = order_complex(lat.members, lat.leq, s.format_element)
    assert oc.f_vector() == (5, 7, 3)
    assert oc.euler_characteristic() == 1


def test_order_complex_antichain():
    oc = order_complex(["x", "y", "z"], lambda a, b: a == b)
    assert oc.f_vector() == (3,)
    assert faceset(oc) == {(), ("x",), ("y",), ("z",)}


def test_f_vector_and_euler(delta):
    assert delta.f_vector() == (4, 4, 1)
    assert delta.euler_characteristic() == 1
    assert from_maximal_faces([], []).euler_characteristic() == 0


def test_subcomplexes_are_closed(delta):
    for cpx in [delta.closure([("1", "2", "3")]), delta.star("2"),
                delta.link("2"), delta.cone("z")]:
        for f in cpx.faces:
            for v in f:
                assert f - {v} in cpx.faces


def test_full_group_order_complex(system):
    # order complex over the whole group stays a legal complex
    s = system("A2")
    poset = AbsolutePoset(s)
    oc = order_complex(poset.members, poset.leq, s.format_element)
    assert oc.f_vector()[0] == 6
    for f in oc.faces:
        for v in f:
            assert f - {v} in oc.faces


def test_json_and_dot(delta):
    js = delta.to_json()
    assert js == delta.to_json()
    assert js.startswith('{"vertices":["1","2","3","4"]')
    dot = delta.skeleton_dot("delta")
    assert "n0 -- n1;" in dot
    assert dot == delta.skeleton_dot("delta")


def test_unknown_vertex_in_faces():
    with pytest.raises(UnknownVertex):
        AbstractComplex(["a"], [("a", "b")])
