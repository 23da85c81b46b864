"""JSON matrix files.

A file holds ``{"kind": "complex" | "real", "dims": [d1, ...], "re": [...],
"im": [...]}`` with row-major flattened entries; ``im`` is present only for
complex matrices.  An optional ``"rule"`` records which combination rule
produced a real matrix.  Entries are written in exponent form with 17
significant digits, enough to round-trip any double exactly.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from realqt.combine import Rule, SystemDims
from realqt.errors import RealQTError


class MatrixFileError(RealQTError):
    """Malformed matrix file."""


@dataclass(frozen=True)
class MatrixFile:
    kind: str
    dims: SystemDims
    matrix: np.ndarray
    rule: Rule | None = None

    def __post_init__(self):
        if self.kind not in ("complex", "real"):
            raise MatrixFileError(f"unknown kind {self.kind!r}")
        m = np.asarray(self.matrix, dtype=complex if self.kind == "complex" else float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise MatrixFileError(f"matrix of shape {m.shape} is not square")
        if not np.all(np.isfinite(m)):
            raise MatrixFileError("non-finite entries")
        n = m.shape[0]
        if self.kind == "complex":
            ok = n == self.dims.total
        elif self.rule is not None:
            ok = n == self.dims.codomain_dim(self.rule)
        else:
            ok = n in {self.dims.codomain_dim(r) for r in Rule}
        if not ok:
            raise MatrixFileError(f"{n}x{n} matrix does not fit dims {list(self.dims.dims)}")
        object.__setattr__(self, "matrix", m)

    def to_dict(self) -> dict:
        m = self.matrix
        out = {"kind": self.kind, "dims": list(self.dims.dims), "re": [float(x) for x in np.ravel(m.real)]}
        if self.kind == "complex":
            out["im"] = [float(x) for x in np.ravel(m.imag)]
        if self.rule is not None:
            out["rule"] = self.rule.value
        return out

    @classmethod
    def from_dict(cls, obj) -> "MatrixFile":
        if not isinstance(obj, dict):
            raise MatrixFileError("top level must be an object")
        try:
            kind = obj["kind"]
            dims = SystemDims.of([int(d) for d in obj["dims"]])
            re = np.asarray(obj["re"], dtype=float)
            im = np.asarray(obj["im"], dtype=float) if kind == "complex" else None
            rule = Rule(obj["rule"]) if obj.get("rule") is not None else None
        except (KeyError, TypeError, ValueError) as exc:
            raise MatrixFileError(f"bad matrix file: {exc}") from exc
        if kind == "real" and "im" in obj:
            raise MatrixFileError("real matrix file carries an 'im' array")
        n = math.isqrt(re.size)
        if re.ndim != 1 or n * n != re.size or (im is not None and im.shape != re.shape):
            raise MatrixFileError("entry arrays must be flat with a square length")
        mat = re.reshape(n, n) if im is None else (re + 1j * im).reshape(n, n)
        return cls(kind, dims, mat, rule)


def _number_list(xs) -> str:
    return "[" + ", ".join(format(x, ".16e") for x in xs) + "]"


def dumps(mf: MatrixFile) -> str:
    obj = mf.to_dict()
    # json has no float-format hook, so the entry arrays are spliced in by hand
    arrays = {k: obj.pop(k) for k in ("re", "im") if k in obj}
    head = json.dumps(obj)[:-1]
    tail = "".join(f', "{k}": {_number_list(v)}' for k, v in arrays.items())
    return head + tail + "}"


def loads(text: str) -> MatrixFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"invalid JSON: {exc}") from exc
    return MatrixFile.from_dict(obj)


def write(path, mf: MatrixFile) -> None:
    Path(path).write_text(dumps(mf) + "\n")


def read(path) -> MatrixFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MatrixFileError(str(exc)) from exc
    return loads(text)
