"""Quadratic points on X0(37) from multiples of the generator of E37(Q)."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction

from .. import reference_data as ref
from ..arith import QQ, QuadraticExtension
from ..ellcurve import WeierstrassCurve
from ..poly import UniPoly


def e37() -> WeierstrassCurve:
    return WeierstrassCurve(*ref.E37_AINVS, QQ)


def working_model_g(g_coeffs=None) -> UniPoly:
    return UniPoly([Fraction(c) for c in (g_coeffs or ref.X37_G)], QQ)


def on_working_model(x, y, g: UniPoly | None = None) -> bool:
    g = g or working_model_g()
    return y * y - x ** 3 * y == g(x)


@dataclass
class QuadPointRecord:
    k: int
    u: Fraction
    v: Fraction
    D: int
    x: object
    y: object
    j: object = None
    curve: tuple | None = None
    tag: int | None = None  # 0 or 1728 for the special j-values
    flagged: bool = False  # j-map has a pole here


def attach_curve(rec: QuadPointRecord, jmap) -> None:
    j = jmap.evaluate(rec.x, rec.y)
    if j is None:
        rec.flagged = True
        return
    rec.j = j
    if j == 0 or j == 1728:
        rec.tag = 0 if j == 0 else 1728
        return
    t = j - 1728
    rec.curve = (-3 * j * t, -2 * j * t * t)


def generate_table(k_max: int, jmap=None) -> list[QuadPointRecord]:
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    E = e37()
    G = E.point(0, 0)
    records = []
    P = G
    for k in range(1, k_max + 1):
        if k > 1:
            P = E.add(P, G)
        u, v = P.x, P.y
        disc = 1 - 4 * (u + 1)
        if u + 1 == 0 or QQ.sqrt(disc) is not None:
            continue  # the fibre is rational
        ext = QuadraticExtension(QQ, disc)
        x = (1 + ext.sqrt_radicand()) / (2 * (u + 1))
        y = x ** 3 * (v + 1)
        rec = QuadPointRecord(k, u, v, int(ext.radicand), x, y)
        if jmap is not None:
            attach_curve(rec, jmap)
        records.append(rec)
    return records


def point_variants(x, y):
    """The orbit of (x, y) under Galois conjugation and y -> x^3 - y."""
    out = set()
    for X, Y in ((x, y), (x.conjugate(), y.conjugate())):
        out.add((X, Y))
        out.add((X, X ** 3 - Y))
    return out


def match_rows(records, rows=None):
    """Map each tabulated row index (1-based) to the k of the matching record."""
    rows = ref.TABLE1 if rows is None else rows
    found = {}
    for idx, (D, xt, yt, _) in enumerate(rows, 1):
        for rec in records:
            if rec.D != D:
                continue
            ext = rec.x.field
            if (ref.quad(ext, xt), ref.quad(ext, yt)) in point_variants(rec.x, rec.y):
                found[idx] = rec.k
                break
    return found


# -- serialisation ---------------------------------------------------------------


def fmt_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def fmt_quad(z) -> str:
    if z is None:
        return ""
    return f"({fmt_rational(z.u)}) + ({fmt_rational(z.v)})*sqrt({int(z.field.radicand)})"


def _record_row(rec: QuadPointRecord) -> dict:
    A, B = rec.curve if rec.curve else (None, None)
    return {
        "k": rec.k,
        "D": rec.D,
        "x": fmt_quad(rec.x),
        "y": fmt_quad(rec.y),
        "j": fmt_quad(rec.j),
        "A": fmt_quad(A),
        "B": fmt_quad(B),
    }


def record_dict(rec: QuadPointRecord) -> dict:
    A, B = rec.curve if rec.curve else (None, None)
    return {
        "k": rec.k,
        "u": fmt_rational(rec.u),
        "v": fmt_rational(rec.v),
        "D": rec.D,
        "x": fmt_quad(rec.x),
        "y": fmt_quad(rec.y),
        "j": fmt_quad(rec.j) or None,
        "curve": [fmt_quad(A), fmt_quad(B)] if rec.curve else None,
        "tag": rec.tag,
        "flagged": rec.flagged,
    }


CSV_HEADER = ["k", "D", "x", "y", "j", "A", "B"]


def export_table(records, fmt: str, path) -> None:
    if fmt == "csv":
        with open(path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CSV_HEADER, lineterminator="\n")
            w.writeheader()
            for rec in records:
                w.writerow(_record_row(rec))
    elif fmt == "json":
        with open(path, "w") as fh:
            json.dump([record_dict(r) for r in records], fh, indent=2)
            fh.write("\n")
    else:
        raise ValueError(f"unknown table format {fmt!r}")
