"""JSON forms for matrix families and sequences, PM-braids and layered automorphisms."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .braid_pm import PartialBraid, PMBraid
from .linalg import RationalMatrix, Subspace
from .matrix_pm import MatrixSequenceM, MatrixSequenceTilde, PolynomialMatrixFamily
from .outer_action import Layer, LayeredAut, format_word, parse_word


class FormatError(ValueError):
    pass


def q_to_json(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def q_from_json(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise FormatError(f"rational must be an integer or a 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(str(exc)) from None


def matrix_to_json(m: RationalMatrix) -> list:
    return [[q_to_json(x) for x in r] for r in m.rows]


def matrix_from_json(rows, nrows: int, ncols: int) -> RationalMatrix:
    if not isinstance(rows, list) or len(rows) != nrows or any(not isinstance(r, list) or len(r) != ncols for r in rows):
        raise FormatError(f"expected a {nrows}x{ncols} matrix")
    return RationalMatrix.from_rows([[q_from_json(x) for x in r] for r in rows], ncols=ncols)


def _dim(obj) -> int:
    if not isinstance(obj, dict) or not isinstance(obj.get("dim"), int) or obj["dim"] < 1:
        raise FormatError("missing or invalid 'dim'")
    return obj["dim"]


def family_to_json(f: PolynomialMatrixFamily) -> dict:
    return {"dim": f.dim, "coefficients": [matrix_to_json(c) for c in f.coefficients]}


def family_from_json(obj) -> PolynomialMatrixFamily:
    n = _dim(obj)
    coeffs = obj.get("coefficients")
    if not isinstance(coeffs, list) or not coeffs:
        raise FormatError("'coefficients' must be a nonempty list")
    return PolynomialMatrixFamily(n, tuple(matrix_from_json(c, n, n) for c in coeffs))


def m_to_json(s: MatrixSequenceM) -> dict:
    return {
        "dim": s.dim,
        "form": "m",
        "domains": [[[q_to_json(x) for x in v] for v in d.basis] for d in s.domains],
        "terms": [matrix_to_json(a) for a in s.maps],
    }


def tilde_to_json(s: MatrixSequenceTilde) -> dict:
    return {"dim": s.dim, "form": "tilde", "terms": [matrix_to_json(a) for a in s.terms]}


def sequence_from_json(obj) -> MatrixSequenceM | MatrixSequenceTilde:
    n = _dim(obj)
    form = obj.get("form", "m")
    terms = obj.get("terms")
    if not isinstance(terms, list) or not terms:
        raise FormatError("'terms' must be a nonempty list")
    if form == "tilde":
        return MatrixSequenceTilde(n, tuple(matrix_from_json(t, n, n) for t in terms))
    if form != "m":
        raise FormatError(f"unknown form {form!r}")
    maps = []
    for t in terms:
        if not isinstance(t, list) or len(t) != n or not t or not isinstance(t[0], list):
            raise FormatError("each M-form term must be a list of n rows")
        maps.append(matrix_from_json(t, n, len(t[0])))
    seq = MatrixSequenceM.from_maps(n, maps)
    if "domains" in obj:
        given = [Subspace.span(n, [[q_from_json(x) for x in v] for v in d]) for d in obj["domains"]]
        if given != seq.domains:
            raise FormatError("declared domains disagree with the kernels of the terms")
    return seq


def samples_from_json(obj, t_values=None) -> dict[Fraction, MatrixSequenceM]:
    """
    Either explicit ``{"samples": [{"t": ..., "sequence": {...}}]}`` or a
    parametric M form ``{"dim": n, "terms": [[C_0, C_1, ...], ...]}`` whose
    k-th map is sum_j C_j t^j, evaluated at ``t_values``.
    """
    if isinstance(obj, dict) and "samples" in obj:
        out = {}
        for s in obj["samples"]:
            seq = sequence_from_json(s["sequence"])
            if not isinstance(seq, MatrixSequenceM):
                raise FormatError("samples must be in M form")
            out[q_from_json(s["t"])] = seq
        if t_values is not None:
            out = {t: out[t] for t in t_values if t in out}
        return dict(sorted(out.items(), reverse=True))
    n = _dim(obj)
    if obj.get("form") != "parametric-m":
        raise FormatError("expected 'samples' or form 'parametric-m'")
    if not t_values:
        raise FormatError("parametric samples need t values")
    terms = obj["terms"]
    out = {}
    for t in sorted(t_values, reverse=True):
        maps = []
        for coeffs in terms:
            cols = len(coeffs[0][0])
            acc = RationalMatrix.zeros(n, cols)
            for j, c in enumerate(coeffs):
                acc = acc + matrix_from_json(c, n, cols).scaled(t ** j)
            maps.append(acc)
        out[t] = MatrixSequenceM.from_maps(n, maps)
    return out


def braid_to_json(x: PMBraid) -> dict:
    return {"n": x.n, "layers": [{"top": list(L.top), "bottom": list(L.bottom), "word": list(L.word)}
                                 for L in x.layers]}


def braid_from_json(obj) -> PMBraid:
    try:
        n = obj["n"]
        return PMBraid(n, tuple(PartialBraid.make(n, L["top"], L["bottom"], L.get("word", ()))
                                for L in obj["layers"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed PM-braid: {exc}") from None


def aut_to_json(f: LayeredAut) -> dict:
    return {"rank": f.rank, "layers": [
        {"domain": list(L.domain), "image": list(L.image),
         "assignment": [{"i": i, "t": t, "w": format_word(w)} for i, t, w in L.assignment]}
        for L in f.layers]}


def aut_from_json(obj) -> LayeredAut:
    try:
        layers = []
        for L in obj["layers"]:
            layer = Layer.make({a["i"]: (a["t"], parse_word(a.get("w", ""))) for a in L["assignment"]})
            if list(layer.domain) != sorted(L["domain"]) or list(layer.image) != sorted(L["image"]):
                raise FormatError("declared domain/image disagree with the assignment")
            layers.append(layer)
        return LayeredAut(obj["rank"], tuple(layers))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed layered automorphism: {exc}") from None


def load_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"{path}: {exc}") from None
