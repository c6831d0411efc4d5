import pytest

import monoext


def test_t3_headline_both_ways():
    t3 = monoext.Monoid.full_transformation(3)
    assert t3.size == 27
    for name, want in [("trivial", [0, 0, 0, 0]), ("sign", [0, 0, 1, 0])]:
        top = monoext.ext(t3, e=0, W=name, hi=3)
        orc = monoext.ext(t3, e=0, W=name, hi=3, method="oracle")
        assert list(top["dims"].values()) == want
        assert orc["dims"] == top["dims"]


def test_builder_description_and_green():
    aff = monoext.Monoid.from_json({"type": "affine", "n": 1, "q": 3})
    assert len(aff) == 9
    g = monoext.green(aff)
    assert g["regular"]
    assert len(g["j_classes"]) == 2
    op = aff.opposite()
    assert sorted(map(sorted, monoext.green(op)["r_classes"])) == sorted(map(sorted, g["l_classes"]))


def test_reduced_homology_and_gldim():
    aff = monoext.Monoid.affine(2, 2)
    assert monoext.reduced_homology_dims(aff, max_degree=2) == [0, 0, 3, 0]
    bound = monoext.global_dimension_bound(aff)
    assert bound["applicable"] and bound["bound"] == 2
    t3 = monoext.global_dimension_bound(monoext.Monoid.full_transformation(3))
    assert not t3["applicable"]


def test_resolution_and_homology():
    r = monoext.standard_resolution(monoext.Monoid.affine(1, 3))
    assert r["length"] == 1
    assert all(r["exact"]) and all(r["projective"])
    assert monoext.homology(monoext.Monoid.cyclic_group(2), field="p:2", max_n=2) == [1, 1, 1]
    coh = monoext.cohomology(monoext.Monoid.cyclic_group(2), field="q", hi=2)
    assert list(coh["dims"].values()) == [1, 0, 0]


def test_errors_are_python_exceptions():
    t3 = monoext.Monoid.full_transformation(3)
    with pytest.raises(monoext.MonoextError, match="bad_characteristic"):
        monoext.ext(t3, e=0, field="p:2", hi=1)
    with pytest.raises(monoext.MonoextError):
        monoext.ext(t3, e=1)
