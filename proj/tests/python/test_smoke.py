import math

import pytest

import poncelet


def test_homothetic_vertices():
    tri = poncelet.homothetic_triangle(2.0, 1.0, 0.0)
    assert tri[0] == pytest.approx((2.0, 0.0), abs=1e-15)
    assert tri[1] == pytest.approx((-1.0, math.sqrt(3) / 2), abs=1e-15)


def test_brocard_porism_constants():
    p = poncelet.brocard_porism_params(1.0, 0.8)
    assert p["R"] == pytest.approx(2.5, rel=1e-12)
    assert p["circumcenter"][1] == pytest.approx(-1.374773, abs=1e-6)
    tri = poncelet.brocard_triangle(1.0, 0.8, 0.7)
    o1, o2 = poncelet.brocard_points(tri)
    assert o1 == pytest.approx((-0.6, 0.0), abs=1e-12)
    assert o2 == pytest.approx((0.6, 0.0), abs=1e-12)
    assert 1.0 / math.tan(poncelet.brocard_angle(tri)) == pytest.approx(math.sqrt(5.25), rel=1e-12)


def test_invariant_suite_passes():
    reports = poncelet.invariant_suite("homothetic", 2.0, 1.0, n=200)
    by_name = {r["name"]: r for r in reports}
    assert by_name["cot_omega"]["mean"] == pytest.approx(2.165064, abs=1e-6)
    assert by_name["area"]["note"].startswith("erratum")
    assert all(r["pass"] for r in reports)


def test_loci_fits_match_closed_forms():
    pts = poncelet.sample_locus("homothetic", 2.0, 1.0, "X39", 180)
    fit = poncelet.fit_axis_aligned_ellipse(pts)
    assert fit["semi_axes"] == pytest.approx(poncelet.x39_locus_semi_axes(2.0, 1.0), rel=1e-10)
    circle = poncelet.fit_circle(poncelet.sample_locus("brocard", 1.0, 0.8, "X2", 180))
    assert circle["semi_axes"][0] == pytest.approx(0.3, rel=1e-10)


def test_similarity_preserves_angle():
    frame = poncelet.homothetic_to_brocard(2.0, 1.0, 1.0, 0.4)
    assert poncelet.brocard_angle(frame["image"]) == pytest.approx(poncelet.brocard_angle(frame["source"]), abs=1e-12)


def test_moses_reproduces_porism_triangle():
    target = poncelet.brocard_triangle(1.0, 0.8, math.pi / 2)
    result = poncelet.moses_construct((-0.6, 0.0), (0.6, 0.0), target[0])
    got = sorted(result["triangle"])
    want = sorted(target)
    for p, q in zip(got, want):
        assert p == pytest.approx(q, abs=1e-7)


def test_geometry_error_carries_code():
    with pytest.raises(poncelet.GeometryError) as info:
        poncelet.brocard_triangle(0.5, 1.0, 0.0)
    assert info.value.args[0] == "InvalidAxes"
