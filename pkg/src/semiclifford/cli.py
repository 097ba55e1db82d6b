"""Command-line surface.

Subcommands: classify, normalform, expand, pipeline,
verify-counterexample.  Reports print human-readably by default and as
schema-stable JSON with --json; every gauge in the library is
deterministic, so JSON output is bit-identical across runs.  Exit code
is 0 only if every internal assertion passed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import gf2
from .circuits import circuit_to_dense, parse_circuit
from .classify import classify
from .clifford import CliffordRep
from .dense import extract_rep
from .expansion import expand
from .normal_form import (
    commuting_set_normal_form,
    involution_normal_form,
    simultaneous_nice_form_obstruction,
)
from .pipeline import counterexample_report, run_pipeline


def bits_to_hex(arr) -> str:
    """Row-major bit packing of a GF(2) array as a hex string."""
    flat = gf2.asbits(arr).reshape(-1)
    return bytes(np.packbits(flat)).hex()


def hex_to_bits(text, size) -> np.ndarray:
    raw = np.frombuffer(bytes.fromhex(text), dtype=np.uint8)
    return np.unpackbits(raw)[:size].astype(np.uint8)


def bitstring(vec) -> str:
    return "".join(str(int(b)) for b in gf2.asbits(vec))


def rep_to_json(rep: CliffordRep) -> dict:
    return {
        "n": rep.n,
        "c_hex": bits_to_hex(rep.c),
        "h_hex": bits_to_hex(rep.h),
        "c_rows": [bitstring(row) for row in rep.c],
        "h": bitstring(rep.h),
    }


def matrix_rows(mat) -> list:
    return [bitstring(row) for row in gf2.asbits(mat)]


def phase_str(z, tol=1e-9) -> str:
    for val, name in ((1, "1"), (-1, "-1"), (1j, "i"), (-1j, "-i")):
        if abs(z - val) < tol:
            return name
    return f"{z.real:+.12f}{z.imag:+.12f}j"


def read_bit_matrices(path) -> list:
    """Read one or more matrices: 'rows cols' header then 0/1 row lines."""
    with open(path) as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    mats = []
    i = 0
    while i < len(lines):
        head = lines[i].split()
        if len(head) != 2:
            raise ValueError(f"bad matrix header {lines[i]!r}")
        rows, cols = int(head[0]), int(head[1])
        body = lines[i + 1 : i + 1 + rows]
        if len(body) != rows:
            raise ValueError("truncated matrix block")
        mat = np.array([[int(ch) for ch in ln] for ln in body], dtype=np.uint8)
        if mat.shape != (rows, cols):
            raise ValueError(f"matrix block is {mat.shape}, header says {(rows, cols)}")
        mats.append(mat)
        i += 1 + rows
    if not mats:
        raise ValueError(f"no matrices found in {path}")
    return mats


def load_circuit_dense(path):
    with open(path) as fh:
        desc = parse_circuit(fh.read())
    return desc, circuit_to_dense(desc)


def cmd_classify(args) -> dict:
    desc, u = load_circuit_dense(args.circuit)
    report = classify(u, kmax=args.kmax)
    out = {
        "command": "classify",
        "circuit": args.circuit,
        "n": report.n,
        "kmax": report.kmax,
        "hierarchy_level": report.level,
        "semi_clifford": report.semi_clifford,
        "generalized_semi_clifford": report.generalized_semi_clifford,
    }
    if report.semi_witness is not None:
        out["semi_witness"] = {
            "domain": matrix_rows(report.semi_witness.domain.basis),
            "image": matrix_rows(report.semi_witness.image.basis),
        }
    if report.gsc_witness is not None:
        out["gsc_witness"] = {
            "domain": matrix_rows(report.gsc_witness.domain.basis),
            "image": matrix_rows(report.gsc_witness.image.basis),
            "permutation": list(report.gsc_witness.permutation),
            "phases": [phase_str(z) for z in report.gsc_witness.phases],
        }
    searched = {k: v for k, v in report.searched.items() if v is not None}
    if searched:
        out["searched"] = searched
    return out


def cmd_normalform(args) -> dict:
    mats = read_bit_matrices(args.matrices)
    out = {"command": "normalform", "file": args.matrices, "count": len(mats)}
    if len(mats) == 1:
        res = involution_normal_form(mats[0])
        out["mode"] = "single"
        out["m"] = matrix_rows(res.m)
        out["normalized"] = matrix_rows(res.normalized)
        n = mats[0].shape[0] // 2
        out["e_block"] = matrix_rows(res.normalized[:n, n:])
    else:
        res = commuting_set_normal_form(mats)
        out["mode"] = "set"
        out["m"] = matrix_rows(res.m)
        out["normalized"] = [matrix_rows(c) for c in res.normalized]
        if len(mats) == 2:
            out["obstruction"] = simultaneous_nice_form_obstruction(mats[0], mats[1])
    return out


def cmd_expand(args) -> dict:
    desc, u = load_circuit_dense(args.circuit)
    rep = extract_rep(u)
    if rep is None:
        raise ValueError("circuit is not Clifford; expansion needs a (C, h) rep")
    res = expand(rep)
    return {
        "command": "expand",
        "circuit": args.circuit,
        "n": res.n,
        "s": res.s,
        "support_size": int(res.support.shape[0]),
        "magnitude": res.magnitude,
        "anchor": bitstring(res.a0),
        "rep": rep_to_json(rep),
        "coefficients": [
            {"a": bitstring(pt), "re": float(val.real), "im": float(val.imag)}
            for pt, val in zip(res.support, res.values)
        ],
    }


def certificate_to_json(cert) -> dict:
    return {
        "n": cert.n,
        "conjugator": rep_to_json(cert.conjugator),
        "kernel_basis": matrix_rows(cert.kernel_basis),
        "diagonal_spectra": [
            [phase_str(z) for z in spectrum] for spectrum in cert.spectra
        ],
        "verdicts": cert.verdicts,
    }


def cmd_pipeline(args) -> dict:
    desc, u = load_circuit_dense(args.circuit)
    rng = np.random.default_rng(args.seed)
    cert = run_pipeline(u, rng=rng)
    return {
        "command": "pipeline",
        "circuit": args.circuit,
        "certificate": certificate_to_json(cert),
    }


def cmd_verify_counterexample(args) -> dict:
    rng = np.random.default_rng(args.seed)
    rep = counterexample_report(rng=rng)
    ok = (
        rep["uv_in_level_3"]
        and not rep["vu_in_level_3"]
        and rep["certificate"].verdicts["span_full"]
    )
    return {
        "command": "verify-counterexample",
        "uv_in_level_3": rep["uv_in_level_3"],
        "vu_in_level_3": rep["vu_in_level_3"],
        "vu_witness_qubit": rep["vu_witness_qubit"],
        "vu_witness_generator": rep["vu_witness_generator"],
        "certificate": certificate_to_json(rep["certificate"]),
        "all_verdicts_pass": ok,
    }


def _print_human(out):
    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v and not _is_flat(v):
                    print(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    print(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, (dict, list)):
                    walk(item, indent)
                else:
                    print(f"{pad}{item}")

    def _is_flat(v):
        if isinstance(v, list):
            return all(not isinstance(x, (dict, list)) for x in v) and len(v) <= 8
        return False

    walk(out)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="semiclifford",
        description="Clifford representation, normal form, and hierarchy tools",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--seed", type=int, default=0, help="seed for self-check sampling")
    parser.add_argument("--kmax", type=int, default=3, help="hierarchy search depth")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="hierarchy level and span memberships")
    p.add_argument("circuit")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("normalform", help="normal forms for symplectic involutions")
    p.add_argument("matrices")
    p.set_defaults(func=cmd_normalform)

    p = sub.add_parser("expand", help="Pauli-basis expansion of a Clifford circuit")
    p.add_argument("circuit")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("pipeline", help="generalized semi-Clifford certificate")
    p.add_argument("circuit")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser(
        "verify-counterexample",
        help="check the seven-qubit controlled-swap/CCZ verdicts",
    )
    p.set_defaults(func=cmd_verify_counterexample)

    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (ValueError, AssertionError, OSError) as exc:
        err = {"command": args.command, "error": str(exc)}
        if args.json:
            print(json.dumps(err, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        _print_human(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
