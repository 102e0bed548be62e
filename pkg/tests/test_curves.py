"""Curve container and its CSV round trip."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boundlab.curves import Curve, read_csv, write_csv
from boundlab.errors import DomainError


def _demo():
    return Curve("demo", "x", (0.0, 0.5, 1.0),
                 (("a", (1.0, 2.0, 3.0)), ("b", (0.1, math.nan, 0.3))))


def test_labels_and_column():
    c = _demo()
    assert c.labels == ("a", "b")
    assert c.column("a") == (1.0, 2.0, 3.0)
    with pytest.raises(DomainError):
        c.column("zzz")


def test_x_must_strictly_increase():
    with pytest.raises(DomainError):
        Curve("bad", "x", (0.0, 0.0, 1.0), (("a", (1.0, 2.0, 3.0)),))
    with pytest.raises(DomainError):
        Curve("bad", "x", (1.0, 0.5), (("a", (1.0, 2.0)),))


def test_series_lengths_must_match():
    with pytest.raises(DomainError):
        Curve("bad", "x", (0.0, 1.0), (("a", (1.0,)),))


def test_empty_x_rejected():
    with pytest.raises(DomainError):
        Curve("bad", "x", (), (("a", ()),))


def test_csv_roundtrip(tmp_path):
    path = tmp_path / "demo.csv"
    write_csv(_demo(), str(path), {"command": "demo cmd", "version": "1.0"})
    curve, meta = read_csv(str(path), name="demo")
    assert meta == {"command": "demo cmd", "version": "1.0"}
    assert curve.x == (0.0, 0.5, 1.0)
    assert curve.labels == ("a", "b")
    assert curve.column("a") == (1.0, 2.0, 3.0)
    b = curve.column("b")
    assert b[0] == 0.1 and math.isnan(b[1]) and b[2] == 0.3


def test_csv_nan_serializes_as_empty_cell(tmp_path):
    path = tmp_path / "demo.csv"
    write_csv(_demo(), str(path), {})
    lines = path.read_text(encoding="utf-8").splitlines()
    header = [ln for ln in lines if not ln.startswith("#")][0]
    assert header == "x,a,b"
    nan_row = [ln for ln in lines if ln.endswith(",")][0]
    assert nan_row.split(",")[2] == ""


def test_csv_deterministic_bytes(tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(_demo(), str(p1), {"command": "x"})
    write_csv(_demo(), str(p2), {"command": "x"})
    assert p1.read_bytes() == p2.read_bytes()


def test_read_csv_rejects_ragged_rows(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("x,a\n0.0,1.0\n1.0\n", encoding="utf-8")
    with pytest.raises(DomainError):
        read_csv(str(path))


def test_read_csv_rejects_headerless(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("# only metadata\n", encoding="utf-8")
    with pytest.raises(DomainError):
        read_csv(str(path))


@settings(max_examples=50, derandomize=True)
@given(st.lists(st.floats(allow_nan=False, allow_infinity=False,
                          width=64), min_size=2, max_size=20, unique=True))
def test_roundtrip_preserves_float_values(values):
    import io
    xs = tuple(sorted(values))
    ys = tuple(float(i) for i in range(len(xs)))
    curve = Curve("rt", "x", xs, (("y", ys),))
    buf = io.StringIO()
    write_csv(curve, buf, {})
    buf.seek(0)
    back, _ = read_csv(buf, name="rt")
    assert back.x == xs  # repr round trip is exact for finite floats
    assert back.column("y") == ys
