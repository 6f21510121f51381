import json

import numpy as np

from torusphase import (
    SymplecticMap,
    basis_state,
    build_metaplectic,
    build_q_oscillator,
    build_shift_operator,
    covariance_report,
    eigensystem_by_recursion,
    index_report,
    linear_profile,
    make_dimension,
    weak_convergence_sweep,
    wigner_function,
    wigner_number_phase,
)
from torusphase.serialization import (
    action_angle_csv,
    convergence_csv,
    convergence_json,
    dumps_json,
    eigensystem_json,
    format_float,
    index_csv,
    index_json,
    matrix_csv,
    operator_json,
    spectrum_csv,
    spectrum_json,
    transform_json,
    wigner_csv,
)


def test_float_format_is_fixed_width_scientific():
    assert format_float(1.0) == "1.0000000000000000e+00"
    assert format_float(-0.5) == "-5.0000000000000000e-01"
    assert format_float(np.float64(2.0) / 3.0) == "6.6666666666666663e-01"


def test_json_scalar_encodings():
    assert dumps_json({"a": 1, "b": True, "c": None}) == '{"a": 1, "b": true, "c": null}\n'
    text = dumps_json(1 + 2j)
    assert text == "[1.0000000000000000e+00, 2.0000000000000000e+00]\n"
    assert dumps_json([0.5]) == "[5.0000000000000000e-01]\n"
    # payloads always end with exactly one newline
    assert dumps_json({}).endswith("}\n")


def test_json_is_parseable_and_deterministic():
    dim = make_dimension(3)
    u = build_shift_operator(dim)
    a = operator_json(dim, u, extra={"kind": "u"})
    b = operator_json(dim, u, extra={"kind": "u"})
    assert a == b
    doc = json.loads(a)
    assert doc["dim"] == 3
    assert doc["kind"] == "u"
    assert np.asarray(doc["rows"]).shape == (3, 3, 2)
    assert doc["rows"][1][0] == [1.0, 0.0]


def test_eigensystem_round_trip():
    dim = make_dimension(5)
    sys = eigensystem_by_recursion(dim, (1, 2))
    doc = json.loads(eigensystem_json(sys))
    assert doc["m"] == [1, 2]
    lam = np.array([complex(re, im) for re, im in doc["eigenvalues"]])
    assert np.allclose(lam, sys.eigenvalues, atol=1e-15)
    vecs = np.asarray(doc["eigenvectors"])
    assert vecs.shape == (5, 5, 2)


def test_matrix_csv_layout():
    dim = make_dimension(2)
    text = matrix_csv(dim, np.eye(2), comments=("kind=u",))
    lines = text.splitlines()
    assert lines[0] == "# kind=u"
    assert lines[1] == "i,j,re,im"
    assert len(lines) == 2 + 4
    assert lines[2].startswith("0,0,1.0000000000000000e+00,")
    assert text.endswith("\n")


def test_wigner_csv_rows():
    dim = make_dimension(3)
    grid = wigner_function(dim, basis_state(dim, "u", 0))
    text = wigner_csv(grid)
    lines = text.splitlines()
    assert lines[0] == "V1,V2,W"
    assert len(lines) == 1 + 9
    v1, v2, w = lines[1].split(",")
    assert (v1, v2) == ("0", "0")
    assert abs(float(w) - grid.values[0, 0]) < 1e-15


def test_action_angle_csv_shape():
    dim = make_dimension(3)
    grid = wigner_number_phase(dim, basis_state(dim, "u", 1))
    text = action_angle_csv(grid, comments=("state=fock:1",))
    lines = text.splitlines()
    assert lines[0] == "# state=fock:1"
    assert lines[1] == "J,theta,W"
    assert len(lines) == 2 + grid.values.shape[0] * 3


def test_spectrum_serializations_agree():
    dim = make_dimension(5)
    osc = build_q_oscillator(dim, (1, 0), (0, 1))
    doc = json.loads(spectrum_json(osc))
    assert doc["dim"] == 5
    assert doc["cross"] == 1
    assert np.allclose(doc["f"], osc.spectrum, atol=1e-15)
    assert doc["n_of_r"] == [int(x) for x in osc.n_values]

    lines = spectrum_csv(osc).splitlines()
    assert lines[0] == "n,f_n,C,q_re,q_im,m1,m2,mp1,mp2"
    assert len(lines) == 1 + 5
    first = lines[1].split(",")
    assert first[0] == "0"
    assert abs(float(first[1]) - osc.spectrum[0]) < 1e-15
    assert abs(float(first[2]) - osc.shift_constant) < 1e-15


def test_convergence_serializations():
    report = weak_convergence_sweep((3, 5))
    doc = json.loads(convergence_json(report))
    assert doc["primes"] == [3, 5]
    assert doc["observable"] == report.observable
    assert len(doc["residuals"]) == 2

    lines = convergence_csv(report).splitlines()
    assert f"# observable={report.observable}" in lines
    assert f"# family={report.family}" in lines
    assert "D,residual" in lines
    data = [l for l in lines if not l.startswith("#") and not l.startswith("D,")]
    assert data[0].split(",")[0] == "3"


def test_index_serializations():
    rep = index_report(linear_profile(make_dimension(5)))
    doc = json.loads(index_json(rep))
    assert doc["D"] == 5
    assert doc["case"] == "linear"
    assert abs(doc["I"] - rep["I"]) < 1e-15

    lines = index_csv(rep).splitlines()
    assert lines[0] == "D,case,I,f0,fD"
    assert lines[1].startswith("5,linear,")


def test_transform_json_payload():
    dim = make_dimension(5)
    op = build_metaplectic(dim, SymplecticMap.from_rows(dim, ((0, -1), (1, 0))))
    worst, records = covariance_report(op)
    doc = json.loads(transform_json(op, worst, records))
    assert doc["R"] == [[0, 4], [1, 0]]
    assert doc["gauge"] == op.gauge
    assert doc["worst_residual"] < 1e-9
    assert len(doc["per_m"]) == len(records)
    assert doc["per_m"][0]["m"] == list(records[0]["m"])


def test_byte_determinism_across_calls():
    dim = make_dimension(7)
    grid1 = wigner_function(dim, basis_state(dim, "v", 2))
    grid2 = wigner_function(dim, basis_state(dim, "v", 2))
    assert wigner_csv(grid1) == wigner_csv(grid2)
    r1 = weak_convergence_sweep((3, 5))
    r2 = weak_convergence_sweep((3, 5))
    assert convergence_json(r1) == convergence_json(r2)
