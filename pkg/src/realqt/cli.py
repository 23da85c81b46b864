"""Command-line front end.

Exit codes::

    0   success (witness: inconclusive)
    1   verify: at least one property failed
    2   unreadable input, shape or dimension error
    3   input outside the representable subspace / not a state or effect
    4   combine: operand does not commute with J
    10  witness: entangled
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from realqt import io
from realqt._config import psd_tol, subspace_tol, witness_tol
from realqt.combine import MappedVector, Rule, SystemDims, dot, map_m_inv, map_m_lifted
from realqt.errors import JCommutationViolated, NotATheoryElement, OutOfSubspace, RealQTError
from realqt.matcore import eig_sym
from realqt.theory import Verdict, witness

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_SUBSPACE = 3
EXIT_J_COMMUTATION = 4
EXIT_ENTANGLED = 10


class _Exit(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must be comma-separated integers, got {text!r}")
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError(f"dims must be positive, got {text!r}")
    return dims


def _read(path) -> io.MatrixFile:
    try:
        return io.read(path)
    except RealQTError as exc:
        raise _Exit(EXIT_INPUT, f"{path}: {exc}")


def _resolve_dims(mf: io.MatrixFile, dims) -> SystemDims:
    if dims is None:
        return mf.dims
    dims = SystemDims.of(dims)
    if dims != mf.dims:
        raise _Exit(EXIT_INPUT, f"--dims {list(dims.dims)} disagrees with file dims {list(mf.dims.dims)}")
    return dims


def cmd_convert(args) -> int:
    mf = _read(args.input)
    rule = Rule(args.rule)
    dims = _resolve_dims(mf, args.dims)
    if args.to == "real":
        if mf.kind != "complex":
            raise _Exit(EXIT_INPUT, "conversion to real needs a complex input file")
        try:
            v = map_m_lifted(mf.matrix, dims, rule)
        except RealQTError as exc:
            raise _Exit(EXIT_INPUT, str(exc))
        out = io.MatrixFile("real", dims, v.mat, rule)
    else:
        if mf.kind != "real":
            raise _Exit(EXIT_INPUT, "conversion to complex needs a real input file")
        if mf.rule is not None and mf.rule is not rule:
            raise _Exit(EXIT_INPUT, f"file was produced by the {mf.rule.value} rule")
        try:
            v = MappedVector(rule, dims, mf.matrix)
            x = map_m_inv(v, subspace_tol())
        except OutOfSubspace as exc:
            raise _Exit(EXIT_SUBSPACE, str(exc))
        except RealQTError as exc:
            raise _Exit(EXIT_INPUT, str(exc))
        out = io.MatrixFile("complex", dims, x)
    io.write(args.output, out)
    return EXIT_OK


def cmd_combine(args) -> int:
    files = [_read(p) for p in args.inputs]
    if any(f.kind != "real" for f in files):
        raise _Exit(EXIT_INPUT, "combine takes real matrix files")
    rule = Rule(args.rule)
    mats = [f.matrix for f in files]
    try:
        acc = mats[0]
        for m in mats[1:]:
            acc = np.kron(acc, m) if rule is Rule.TENSOR else np.asarray(dot(acc, m), dtype=float)
    except JCommutationViolated as exc:
        raise _Exit(EXIT_J_COMMUTATION, str(exc))
    except RealQTError as exc:
        raise _Exit(EXIT_INPUT, str(exc))
    dims = SystemDims(tuple(d for f in files for d in f.dims.dims))
    try:
        out = io.MatrixFile("real", dims, acc, rule if len(files) > 1 else files[0].rule)
    except RealQTError as exc:
        raise _Exit(EXIT_INPUT, str(exc))
    io.write(args.output, out)
    return EXIT_OK


def cmd_witness(args) -> int:
    mf = _read(args.input)
    if mf.kind != "real":
        raise _Exit(EXIT_INPUT, "the witness takes a real matrix file")
    if mf.rule is Rule.DOT:
        raise _Exit(EXIT_INPUT, "the witness applies to tensor-rule matrices")
    dims = _resolve_dims(mf, args.dims)
    try:
        v = MappedVector(Rule.TENSOR, dims, mf.matrix)
    except RealQTError as exc:
        raise _Exit(EXIT_INPUT, str(exc))
    try:
        res = witness(v, witness_tol())
    except NotATheoryElement as exc:
        raise _Exit(EXIT_SUBSPACE, f"not a state or effect: {exc}")
    print(f"min_eigenvalue {res.min_eigenvalue!r} verdict {res.verdict.value}")
    return EXIT_ENTANGLED if res.verdict is Verdict.ENTANGLED else EXIT_OK


def cmd_verify(args) -> int:
    from realqt.verify import run_suite

    report = run_suite(args.seed, args.trials, args.dims, args.dot_variant, args.only)
    print(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
    if not report.passed:
        print("failing properties: " + ", ".join(report.failing()), file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _frac(x: float) -> str:
    f = Fraction(x).limit_denominator(64)
    if abs(float(f) - x) > 1e-12:
        return f"{x:.6g}"
    return str(f)


def _fmt_matrix(m: np.ndarray) -> str:
    cells = [[_frac(x) for x in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def bell_state() -> np.ndarray:
    phi = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2)
    return np.outer(phi, phi).astype(complex)


def cmd_bell_demo(args) -> int:
    rho = bell_state()
    tens = map_m_lifted(rho, (2, 2), Rule.TENSOR)
    dotv = map_m_lifted(rho, (2, 2), Rule.DOT)
    res = witness(tens, witness_tol())
    spec_t = eig_sym(tens.mat, psd_tol())
    spec_d = eig_sym(dotv.mat, psd_tol())
    print(f"Bell state |Phi+>, tensor rule (a = {_frac(tens.a)}), 16x16 image:")
    print(_fmt_matrix(tens.mat))
    print("spectrum: " + " ".join(_frac(x) for x in spec_t.values))
    print(f"trace: {_frac(np.trace(tens.mat))}")
    print(f"witness: min eigenvalue {_frac(res.min_eigenvalue)} -> {res.verdict.value}")
    print(f"dot rule (a = {_frac(dotv.a)}), 8x8 image spectrum: " + " ".join(_frac(x) for x in spec_d.values))
    print(f"dot rule image is PSD: {spec_d.min >= -spec_d.tol}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="realqt", description="Real-matrix representations of complex quantum theory.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convert", help="map a matrix between the complex and real descriptions")
    c.add_argument("--rule", choices=[r.value for r in Rule], required=True)
    c.add_argument("--to", choices=["real", "complex"], required=True)
    c.add_argument("--dims", type=_parse_dims, default=None, help="subsystem dimensions, e.g. 2,2")
    c.add_argument("input")
    c.add_argument("output")
    c.set_defaults(func=cmd_convert)

    m = sub.add_parser("combine", help="fold real matrices with the tensor or dot rule")
    m.add_argument("--rule", choices=[r.value for r in Rule], required=True)
    m.add_argument("inputs", nargs="+")
    m.add_argument("output")
    m.set_defaults(func=cmd_combine)

    w = sub.add_parser("witness", help="entanglement witness on a tensor-rule real matrix")
    w.add_argument("--dims", type=_parse_dims, default=None)
    w.add_argument("input")
    w.set_defaults(func=cmd_witness)

    v = sub.add_parser("verify", help="run the seeded property suite and print a JSON report")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--dims", type=_parse_dims, nargs="+", default=[(2, 2), (2, 3)],
                   help="bipartite dimension pairs, e.g. --dims 2,2 2,3")
    v.add_argument("--dot-variant", choices=["correct", "corrupted"], default="correct",
                   help="'corrupted' swaps in a corrupted product (negative control)")
    v.add_argument("--only", nargs="+", default=None, metavar="PROPERTY")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bell-demo", help="print the two-qubit Bell state example")
    b.set_defaults(func=cmd_bell_demo)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        # surface a malformed REALQT_TOL as an input error up front
        psd_tol()
    except ValueError as exc:
        print(f"realqt: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"realqt {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"realqt {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
