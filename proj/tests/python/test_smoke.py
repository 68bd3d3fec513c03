import os
from pathlib import Path

import pytest

import toricdm

CORPUS = Path(os.environ.get("TORICDM_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))


def test_presentation_flags():
    P = toricdm.Presentation([[1, 1, 1], [0, 1, 2]])
    assert P.d == 2 and P.n == 3
    assert P.pointed and P.normal and P.scored
    assert P.contains([2, 1])
    assert not P.contains([1, 3])
    x = P.decompose([3, 4])
    assert x is not None and len(x) == 3


def test_numerical_semigroup():
    P = toricdm.Presentation([[2, 3]])
    assert not P.normal and P.scored
    assert [P.contains([k]) for k in range(5)] == [True, False, True, True, True]
    assert P.gr_generators_dim1() == [(0, 2), (0, 3), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)]
    assert toricdm.Presentation([[1]]).gr_generators_dim1() == [(0, 1), (1, 0), (1, 1)]


def test_not_pointed_raises():
    P = toricdm.Presentation([[1, -1]])
    assert not P.pointed
    with pytest.raises(toricdm.ToricError):
        P.normal


def test_run_reports():
    report, code = toricdm.run_file("lc", CORPUS / "two_dim.toric")
    assert code == 0
    assert report["schema"] == toricdm.REPORT_SCHEMA
    assert report["lc"]["module"]["indices"][0]["length"] == 3

    report, code = toricdm.run_file("grd", CORPUS / "twisted_quartic.toric")
    assert code == 2
    assert report["grd"]["code"] == "NotScored"


def test_parse_error():
    report, code = toricdm.run("analyze", "matrix 1 1\nx\n")
    assert code == 4
    assert "Parse" in report["error"]["code"]
