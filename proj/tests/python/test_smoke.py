"""Smoke tests for the python bindings."""

import pytest

circ16 = pytest.importorskip("circ16")


def test_det_identity():
    assert circ16.det([1] + [0] * 15) == 1
    assert circ16.det([0, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, -1, -1]) == 320
    assert circ16.det([3, 2]) == 5  # order 2: a0^2 - a1^2


def test_det_routes_agree():
    v = [2, -1, 0, 3, 1, 1, -2, 0, 4, 0, 0, -1, 1, 2, -3, 1]
    assert circ16.det(v) == circ16.det_via_norms(v)


def test_norms_factor_the_determinant():
    v = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16]
    n = circ16.norms(v)
    product = 1
    for key in ("n1", "n2", "n4", "n8", "n16"):
        product *= int(n[key])
    assert product == circ16.det(v)


def test_classify_member():
    verdict = circ16.classify(320)
    assert verdict["member"] is True
    assert verdict["reason_kind"] == "Prime5Mod8"
    assert verdict["reason_prime"] == "5"


def test_classify_non_member():
    verdict = circ16.classify(7232)
    assert verdict["member"] is False
    assert verdict["reason_kind"] == "Thm41Shape"
    assert verdict["decomposition"][0]["prime"] == "113"


def test_witness_certificate():
    cert = circ16.witness(576)
    assert cert["verified"] is True
    vec = [int(x) for x in cert["vector"]]
    assert circ16.det(vec) == 576


def test_witness_refusal():
    refusal = circ16.witness(192)
    assert refusal["refused"] is True


def test_witness_vector_round_trip():
    for value in (35, -384, 512, 2880, 0):
        vec = circ16.build_witness_vector(value)
        assert circ16.det(vec) == value


def test_convolution_multiplies_determinants():
    u = circ16.build_witness_vector(3)
    w = circ16.build_witness_vector(5)
    assert circ16.det(circ16.convolve(u, w)) == 15


def test_find_value_and_base128():
    assert circ16.det(circ16.base128()) == 128
    hit = circ16.find_value(128, n=16, lo=-1, hi=1)
    assert hit is not None
    assert circ16.det(hit) == 128


def test_spectrum_small_order():
    report = circ16.spectrum(2, -1, 1)
    assert report["vectors_visited"] == "9"
    assert set(report["values"]) == {"-1", "0", "1"}


def test_selftest_quick_passes():
    suites = circ16.selftest(vectors=500)
    assert suites, "no suites ran"
    for suite in suites:
        assert suite["passed"], suite
