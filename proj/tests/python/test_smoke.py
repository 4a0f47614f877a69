"""Smoke tests for the python bindings: each main operation runs and returns
values consistent with hand-checkable cases. The heavy numerical validation
lives in the C++ suites."""

import math
import os
import pathlib

import pytest

import mtl

GAMMA0 = 0.5772156649015329


def data_dir() -> pathlib.Path:
    return pathlib.Path(os.environ.get("MTL_TEST_DATA", "tests/data"))


def test_sieves_and_tables():
    lam = mtl.sieve_von_mangoldt(100)
    assert lam.n_max == 100
    assert lam[1] == 0.0
    assert lam[8] == pytest.approx(math.log(2), rel=1e-14)
    assert lam[12] == 0.0

    mu = mtl.sieve_moebius(100)
    assert mu[1] == 1.0 and mu[6] == 1.0 and mu[12] == 0.0

    vals = lam.values
    assert len(vals) == 101
    assert vals[9] == pytest.approx(math.log(3), rel=1e-14)


def test_convolutions_and_oracle():
    c2 = mtl.lambda_conv_power(2, 100)
    assert c2[12] == pytest.approx(2 * math.log(2) * math.log(3), rel=1e-12)
    assert c2[30] == 0.0

    g2 = mtl.lambda_generalized(2, 100)
    assert g2[4] == pytest.approx(mtl.lambda_generalized_oracle(2, 4), rel=1e-12)
    assert g2[4] == pytest.approx(3 * math.log(2) ** 2, rel=1e-12)


def test_table_io_roundtrip(tmp_path):
    t = mtl.lambda_generalized(2, 500)
    path = str(tmp_path / "t.mtl")
    mtl.save_table(t, path)
    back = mtl.load_table(path)
    assert back.n_max == 500
    assert list(back.values) == list(t.values)


def test_laurent_and_stieltjes():
    g = mtl.stieltjes_constants(4)
    assert g[0] == pytest.approx(GAMMA0, abs=1e-12)

    alpha = mtl.alpha_laurent(2, "gen")
    assert alpha.pole_order == 2
    assert alpha.a(2) == pytest.approx(2.0, abs=1e-12)
    assert alpha.a(1) == pytest.approx(-2 * GAMMA0, abs=1e-10)


def test_twisted_sum_and_main_term():
    lam = mtl.sieve_von_mangoldt(1000)
    psi10 = mtl.twisted_sum(lam, 10.0, 0.0)
    want = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)
    assert psi10.real == pytest.approx(want, rel=1e-13)
    assert psi10.imag == 0.0

    m = mtl.main_term(2, "gen", 1000.0, 0.0)
    closed = mtl.main_term_closed_k2("gen", 1000.0, 0.0)
    assert m == pytest.approx(closed, rel=1e-12)
    assert m.real == pytest.approx(2 * 1000 * (math.log(1000) - GAMMA0 - 1), rel=1e-10)

    lhs, rhs, defect = mtl.saloni_check(1, 0.0, 3 + 0j)
    assert rhs == 1.0
    assert defect <= 1e-6


def test_scan_records():
    records, max_norm = mtl.scan(1, "conv", [100.0, 1000.0], [0.0, 1.0], n_max=1000)
    assert len(records) == 4
    assert max_norm == max(r.normalized for r in records)
    r0 = records[0]
    assert (r0.psi - r0.main) == r0.remainder


def test_special_functions():
    z = mtl.zeta_derivatives(2 + 0j, 1)
    assert z[0].real == pytest.approx(math.pi**2 / 6, rel=1e-12)
    assert mtl.digamma(1 + 0j).real == pytest.approx(-GAMMA0, abs=1e-12)
    assert mtl.polygamma(1, 1 + 0j).real == pytest.approx(math.pi**2 / 6, rel=1e-10)

    partial, closed, tail = mtl.dirichlet_identity_check(1, "conv", 3.0, 10000)
    assert abs(partial - closed) <= tail


def test_zeros_audit():
    table = mtl.load_zeros(str(data_dir() / "zeros200.txt"))
    assert table.count == 200
    s, b, tail = mtl.zero_sum_linear(table.head(100), 2 + 0j)
    assert abs(b.imag) < 1e-12
    assert abs(b.real + 0.023) < tail + 0.02  # near the known constant

    total, tail2 = mtl.zero_sum_power(table, 2, 1.5 + 0j)
    assert abs(total.imag) < 1e-12
    assert tail2 > 0


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        mtl.lambda_conv_power(0, 10)
    with pytest.raises(ValueError):
        mtl.zeta_derivatives(1.0001 + 0j, 0)
    lam = mtl.sieve_von_mangoldt(50)
    with pytest.raises(ValueError):
        mtl.twisted_sum(lam, 100.0, 0.0)
