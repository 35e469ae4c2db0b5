import json

import pytest

import dicksonpy as dp


def test_frame_basics():
    fr = dp.DicksonFrame.build(2, 2)
    assert fr.p == 2 and fr.n == 2
    assert list(fr.weights()) == [3, 2]
    assert fr.Q(1).str_x() == "x1^2 + x1x2 + x2^2"
    assert fr.Q(0) == fr.L().pow(1)  # p - 1 = 1
    g = fr.generator(0) * fr.generator(1) + fr.one()
    back = fr.express(fr.expand(g))
    assert back is not None and back == g


def test_parse_round_trip():
    fr = dp.DicksonFrame.build(3, 2)
    a = fr.parse("Q0^2*Q1 + 2*Q1^3 + 1")
    assert fr.parse(str(a)) == a
    with pytest.raises(dp.QParseError):
        fr.parse("Q0^3 +")
    with pytest.raises(dp.QParseError):
        fr.parse("Q7")


def test_st_delta():
    f = dp.PrimeField(3)
    fr = dp.DicksonFrame.build(3, 1)
    assert dp.st_delta(fr.Q(0), 2).str_x() == "2x1^10"
    x = dp.Poly.variable(f, 2, 0)
    y = dp.Poly.variable(f, 2, 1)
    a = x * x * y + y
    assert dp.st_delta(a.pow(3), 1).is_zero()
    da = dp.st_delta(a, 1)
    assert dp.st_delta(a * a, 1) == da * a + a * da


def test_extraction_certifies_roots():
    fr = dp.DicksonFrame.build(3, 2)
    sc = dp.SumCoefficients.extract(fr, 1)
    assert sc.A[0].is_zero()
    p = fr.p
    for s in range(fr.n):
        assert sc.Proot[s].pow(p) == sc.A[s]
    assert sc.Rroot.pow(p) == sc.B
    st2 = dp.st_iterate_closed(sc, 1, 2)
    brute = dp.st_iterate(fr.expand(fr.generator(1)), 1, 2)
    assert fr.expand(st2) == brute


def test_verification_results():
    fr = dp.DicksonFrame.build(2, 2)
    sc = dp.SumCoefficients.extract(fr, 1)
    r = dp.verify_kernel_family(sc, fr.generator(1) + fr.one(), 1)
    assert r.status == "pass" and r.passed() and r.witness is None
    r = dp.verify_invariant_ratios(sc, 1)
    assert r.status == "vacuous" and "B = 0" in r.note


def test_verify_cell_report():
    rep = dp.verify(3, 1, 1)
    assert rep["schema"] == dp.SCHEMA_VERSION
    assert rep["status"] == "pass"
    (cell,) = rep["cells"]
    names = {row["name"] for row in cell["checks"]}
    assert "kernel-family" in names and "operator-identity" in names
    assert all(row["status"] != "fail" for row in cell["checks"])
    text = dp.report_text(json.dumps(rep))
    assert "overall: pass" in text


def test_verify_restriction():
    with pytest.raises(ValueError):
        dp.verify(p=7)


def test_koszul():
    inst = dp.tuan_instance(2, 2, 1)
    hom = dp.homology_dims(inst, 6)
    assert hom.h_positive_vanishes and hom.h0_matches_expected
    assert list(hom.expected_h0) == [1, 3, 4, 4, 4, 4, 4]
    assert dp.jacobian_det(inst).is_zero()  # d(y^2) = 0 in characteristic 2
    entry = dp.koszul_tuan(2, 2, 1, 6)
    assert dp.koszul_entry_status(json.dumps(entry)) == "pass"


def test_margolis():
    fr = dp.DicksonFrame.build(2, 2)
    sc = dp.SumCoefficients.extract(fr, 1)
    mr = dp.dickson_margolis_check(sc, 4)
    assert mr.pose == "zero-coefficient"
    assert mr.substitute_jacobian == "1"
    assert mr.substitute.h_positive_vanishes
    assert any("regularity fails" in note for note in mr.notes)


def test_error_mapping():
    with pytest.raises(ValueError):
        dp.PrimeField(4)
    with pytest.raises(dp.ResourceError):
        dp.DicksonFrame.build(2, 5)
    assert issubclass(dp.QParseError, ValueError)
    assert issubclass(dp.FalsificationError, RuntimeError)
