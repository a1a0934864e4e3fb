"""External j-line map on the X0(37) working model: parsing, evaluation and
validation against the tabulated curves."""

from __future__ import annotations

import re
from importlib import resources
from dataclasses import dataclass
from fractions import Fraction

from .. import reference_data as ref
from ..arith import QQ, QuadraticExtension
from ..errors import ValidationFailed
from ..poly import BiPoly


class JMapParseError(ValueError):
    pass


@dataclass(frozen=True)
class JMapData:
    numerator: BiPoly
    denominator: BiPoly
    provenance: str

    def evaluate(self, x, y):
        """j(x, y), or None when (x, y) is a pole of the map."""
        den = self.denominator(x, y)
        if den == 0:
            return None
        return self.numerator(x, y) / den


_TERM = re.compile(r"^(\d+)\s+(\d+)\s+(-?\d+(?:/\d+)?)$")


def parse_jmap(text: str) -> JMapData:
    sections = {"numerator": {}, "denominator": {}}
    current = None
    provenance = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("provenance:"):
            provenance = line.split(":", 1)[1].strip()
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current not in sections:
                raise JMapParseError(f"line {lineno}: unknown section [{current}]")
            continue
        m = _TERM.match(line)
        if m is None:
            raise JMapParseError(f"line {lineno}: expected 'i j p/q', got {raw!r}")
        if current is None:
            raise JMapParseError(f"line {lineno}: term outside a section")
        key = (int(m.group(1)), int(m.group(2)))
        terms = sections[current]
        if key in terms:
            raise JMapParseError(f"line {lineno}: duplicate monomial x^{key[0]} y^{key[1]}")
        terms[key] = Fraction(m.group(3))
    if not provenance:
        raise JMapParseError("missing 'provenance:' header")
    if not sections["denominator"]:
        raise JMapParseError("empty [denominator] section")
    return JMapData(BiPoly(sections["numerator"]), BiPoly(sections["denominator"]), provenance)


def curve_j(A, B):
    """j-invariant of y^2 = x^3 + A x + B."""
    a3 = 4 * A ** 3
    return 1728 * a3 / (a3 + 27 * B * B)


def row_point(row):
    """(ext, x, y) for a tabulated row, with a = sqrt(D) in ext."""
    D, xt, yt, _ = row
    ext = QuadraticExtension(QQ, D)
    return ext, ref.quad(ext, xt), ref.quad(ext, yt)


def row_expected_j(row):
    """Tabulated j for a row (computed from [A, B] when that is what is printed)."""
    ext = QuadraticExtension(QQ, row[0])
    entry = row[3]
    if entry[0] == "tag":
        return ext(entry[1])
    if entry[0] == "j":
        return ref.quad(ext, entry[1])
    return curve_j(ref.quad(ext, entry[1]), ref.quad(ext, entry[2]))


def validate_jmap(jm: JMapData, rows=None):
    """Raise ValidationFailed at the first row whose printed curve disagrees."""
    rows = ref.TABLE1 if rows is None else rows
    for idx, row in enumerate(rows, 1):
        ext, x, y = row_point(row)
        got = jm.evaluate(x, y)
        want = row_expected_j(row)
        if got is None or got != want:
            raise ValidationFailed(
                f"row {idx} (D = {row[0]}): j-map gives {got}, tabulated curve has j = {want}"
            )


def mismatch_note(row, j) -> str:
    """For an [A, B] row that disagrees with j: the ratio of the printed B^2 to
    the B^2 that j and the printed A imply (a rational ratio points at a
    misprinted scale factor)."""
    if j is None:
        return "pole of the map"
    if row[3][0] != "AB" or j == 0:
        return f"j = {j}"
    ext = QuadraticExtension(QQ, row[0])
    A, B = ref.quad(ext, row[3][1]), ref.quad(ext, row[3][2])
    implied = (1728 * 4 * A ** 3 / j - 4 * A ** 3) / 27
    if implied == 0:
        return f"j = {j}"
    ratio = B * B / implied
    if ratio.v == 0:
        return f"printed B^2 = {ratio.u} * (B^2 implied by j and printed A)"
    return f"j = {j}"


def bundled_jmap_path():
    """Path of the j-map data file shipped with the package."""
    return resources.files("modcurve_check") / "data" / "x0_37_jmap.txt"


def load_jmap(path, validate: bool = True) -> JMapData:
    with open(path) as fh:
        jm = parse_jmap(fh.read())
    if validate:
        validate_jmap(jm)
    return jm
