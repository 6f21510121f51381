"""Deterministic text output: JSON and CSV with fixed float formatting.

Every float is written as 17 significant digits in lowercase scientific
notation, so identical inputs serialize to identical bytes across runs and
platforms.  Complex numbers appear as two-element [re, im] arrays.
"""
from __future__ import annotations

import json

import numpy as np


def format_float(x) -> str:
    return f"{float(x):.16e}"


def _encode(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return f"[{format_float(obj.real)}, {format_float(obj.imag)}]"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return _encode(obj.tolist())
    if isinstance(obj, dict):
        inner = ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def dumps_json(obj) -> str:
    return _encode(obj) + "\n"


def complex_matrix_payload(matrix) -> list:
    m = np.asarray(matrix, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def operator_json(dim, matrix, extra: dict | None = None) -> str:
    doc = {"dim": dim.d}
    if extra:
        doc.update(extra)
    doc["rows"] = complex_matrix_payload(matrix)
    return dumps_json(doc)


def eigensystem_json(sys) -> str:
    return dumps_json({
        "dim": sys.dim.d,
        "m": list(sys.m),
        "eigenvalues": [complex(z) for z in sys.eigenvalues],
        "eigenvectors": complex_matrix_payload(sys.eigenvectors),
    })


def csv_text(header: str, rows, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(header)
    lines.extend(rows)
    return "\n".join(lines) + "\n"


def matrix_csv(dim, matrix, comments=()) -> str:
    m = np.asarray(matrix, dtype=complex)
    rows = [f"{i},{j},{format_float(m[i, j].real)},{format_float(m[i, j].imag)}"
            for i in range(m.shape[0]) for j in range(m.shape[1])]
    return csv_text("i,j,re,im", rows, comments)


def wigner_csv(grid, comments=()) -> str:
    d = grid.dim.d
    rows = [f"{a},{b},{format_float(grid.values[a, b])}"
            for a in range(d) for b in range(d)]
    return csv_text("V1,V2,W", rows, comments)


def action_angle_csv(grid, comments=()) -> str:
    dim = grid.dim
    theta = dim.gamma0 * np.arange(dim.d)
    rows = [f"{j_idx},{format_float(theta[t])},{format_float(grid.values[j_idx, t])}"
            for j_idx in range(grid.values.shape[0]) for t in range(dim.d)]
    return csv_text("J,theta,W", rows, comments)


def action_angle_decomposition_csv(even, odd, comments=()) -> str:
    dim = even.dim
    theta = dim.gamma0 * np.arange(dim.d)
    j_values = np.arange(even.values.shape[0]) / 2.0
    rows = []
    for ji in range(even.values.shape[0]):
        for t in range(dim.d):
            rows.append(f"{format_float(j_values[ji])},{format_float(theta[t])},"
                        f"{format_float(even.values[ji, t])},{format_float(odd.values[ji, t])}")
    return csv_text("J,theta,W_even,W_odd", rows, comments)


def spectrum_csv(osc, comments=()) -> str:
    rows = [
        f"{n},{format_float(osc.spectrum[n])},{format_float(osc.shift_constant)},"
        f"{format_float(osc.q.real)},{format_float(osc.q.imag)},"
        f"{osc.m[0]},{osc.m[1]},{osc.mp[0]},{osc.mp[1]}"
        for n in range(osc.dim.d)
    ]
    return csv_text("n,f_n,C,q_re,q_im,m1,m2,mp1,mp2", rows, comments)


def spectrum_json(osc) -> str:
    return dumps_json({
        "dim": osc.dim.d,
        "m": list(osc.m),
        "mp": list(osc.mp),
        "cross": osc.cross,
        "C": float(osc.shift_constant),
        "q": complex(osc.q),
        "eta": float(osc.eta),
        "f": [float(x) for x in osc.spectrum],
        "n_of_r": [int(x) for x in osc.n_values],
    })


def convergence_csv(report, comments=()) -> str:
    rows = [f"{d},{format_float(r)}" for d, r in zip(report.primes, report.residuals)]
    extra = list(comments) + [
        f"observable={report.observable}",
        f"family={report.family}",
        f"monotone={'true' if report.monotone else 'false'}",
    ]
    return csv_text("D,residual", rows, extra)


def convergence_json(report) -> str:
    return dumps_json({
        "primes": list(report.primes),
        "observable": report.observable,
        "family": report.family,
        "gamma": report.gamma,
        "residuals": [float(r) for r in report.residuals],
        "monotone": bool(report.monotone),
    })


def index_json(report: dict) -> str:
    return dumps_json({k: report[k] for k in ("D", "case", "I", "f0", "fD")})


def index_csv(report: dict, comments=()) -> str:
    row = (f"{report['D']},{report['case']},{format_float(report['I'])},"
           f"{format_float(report['f0'])},{format_float(report['fD'])}")
    return csv_text("D,case,I,f0,fD", [row], comments)


def transform_json(op, worst: float, records) -> str:
    return dumps_json({
        "R": [[int(x) for x in row] for row in op.map.matrix.tolist()],
        "gauge": op.gauge,
        "unitary_residual": float(op.unitary_residual),
        "worst_residual": float(worst),
        "per_m": [
            {"m": list(rec["m"]), "phase": complex(rec["phase"]),
             "residual": float(rec["residual"])}
            for rec in records
        ],
    })
