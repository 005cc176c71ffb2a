"""State files: JSON with exact coefficients.

Grammar::

    {
      "space": {"family": F, ["algebra": TAG | "m": INT | "n": INT,] "basis": B},
      "coefficients": [{"re": PART, "im": PART}, ...]
    }

``PART`` is a JSON integer, a decimal (JSON number or string, converted
exactly by shifting digits: ``"0.25"`` is 1/4), or a rational string
``"p/q"``. ``im`` may be omitted when zero. The coefficient list holds the
affine coordinates of the projective point in the order of the basis
(see :mod:`ghzw.spaces`). The canonical form written by :func:`emit` uses
integers where possible and ``"p/q"`` strings otherwise, one coefficient
per line.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .composition import AlgebraTag
from .exact import Scalar, exact
from .spaces import SpaceDescriptor, SpaceError, decode, encode

_RATIONAL = re.compile(r"[+-]?\d+/\d+")
_INTEGER = re.compile(r"[+-]?\d+")
_DECIMAL = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


class StateFileError(ValueError):
    """Malformed state file; ``where`` is a JSON path or a ``line:col`` position."""

    def __init__(self, message: str, where: str | None = None, path: str | None = None):
        self.message, self.where, self.path = message, where, path
        loc = ":".join(p for p in (path, where) if p)
        super().__init__(f"{loc}: {message}" if loc else message)


def parse_part(raw, where: str = "") -> Fraction | int:
    if isinstance(raw, bool):
        raise StateFileError("expected a number, got a boolean", where)
    if isinstance(raw, int):
        return raw
    if not isinstance(raw, str):
        raise StateFileError(f"expected a number or numeric string, got {type(raw).__name__}", where)
    s = raw.strip()
    if _INTEGER.fullmatch(s):
        return int(s)
    if _RATIONAL.fullmatch(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise StateFileError(f"zero denominator in {raw!r}", where)
        return exact(Fraction(int(num), int(den)))
    if _DECIMAL.fullmatch(s):
        return exact(Fraction(s))
    raise StateFileError(f"malformed number {raw!r}", where)


def format_part(v) -> int | str:
    v = exact(v)
    if isinstance(v, int):
        return v
    return f"{v.numerator}/{v.denominator}"


def _parts(v):
    v = exact(v)
    if isinstance(v, Scalar):
        return v.re, v.im
    return v, 0


def parse_descriptor(obj, where: str = "space") -> SpaceDescriptor:
    if not isinstance(obj, dict):
        raise StateFileError("space must be an object", where)
    allowed = {"family", "algebra", "m", "n", "basis"}
    extra = set(obj) - allowed
    if extra:
        raise StateFileError(f"unknown keys {sorted(extra)}", where)
    if "family" not in obj:
        raise StateFileError("missing 'family'", where)
    algebra = None
    if "algebra" in obj:
        try:
            algebra = AlgebraTag.parse(obj["algebra"])
        except (ValueError, AttributeError) as err:
            raise StateFileError(str(err), f"{where}.algebra") from None
    for key in ("m", "n"):
        if key in obj and (isinstance(obj[key], bool) or not isinstance(obj[key], int)):
            raise StateFileError(f"{key} must be an integer", f"{where}.{key}")
    try:
        return SpaceDescriptor(obj["family"], algebra, obj.get("m"), obj.get("n"), obj.get("basis"))
    except SpaceError as err:
        raise StateFileError(str(err), where) from None


def parse_coefficients(items, where: str = "coefficients") -> list:
    if not isinstance(items, list):
        raise StateFileError("coefficients must be a list", where)
    out = []
    for i, item in enumerate(items):
        here = f"{where}[{i}]"
        if not isinstance(item, dict) or "re" not in item:
            raise StateFileError("coefficient must be an object with 're' (and optional 'im')", here)
        if set(item) - {"re", "im"}:
            raise StateFileError(f"unknown keys {sorted(set(item) - {'re', 'im'})}", here)
        re_ = parse_part(item["re"], f"{here}.re")
        im_ = parse_part(item.get("im", 0), f"{here}.im")
        out.append(exact(Scalar(re_, im_)) if im_ != 0 else re_)
    return out


def parse(data: bytes | str, path: str | None = None):
    """``(descriptor, state)`` from the bytes of a state file."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as err:
            raise StateFileError(f"not UTF-8: {err.reason}", f"byte {err.start}", path) from None
    try:
        obj = json.loads(data, parse_float=str)
    except json.JSONDecodeError as err:
        raise StateFileError(err.msg, f"{err.lineno}:{err.colno}", path) from None
    try:
        if not isinstance(obj, dict):
            raise StateFileError("top level must be an object")
        extra = set(obj) - {"space", "coefficients"}
        if extra:
            raise StateFileError(f"unknown top-level keys {sorted(extra)}")
        if "space" not in obj or "coefficients" not in obj:
            raise StateFileError("need both 'space' and 'coefficients'")
        desc = parse_descriptor(obj["space"])
        coeffs = parse_coefficients(obj["coefficients"])
        if len(coeffs) != desc.coefficient_count:
            raise StateFileError(f"{desc.name} needs {desc.coefficient_count} coefficients, "
                                 f"got {len(coeffs)}", "coefficients")
        try:
            value = decode(desc, coeffs)
        except (SpaceError, ValueError) as err:
            raise StateFileError(str(err), "coefficients") from None
    except StateFileError as err:
        err.path = path
        raise StateFileError(err.message, err.where, path) from None
    return desc, value


def emit_coefficients(desc: SpaceDescriptor, coeffs) -> bytes:
    lines = ["{", f'  "space": {json.dumps(desc.to_json())},', '  "coefficients": [']
    body = []
    for v in coeffs:
        re_, im_ = _parts(v)
        body.append("    " + json.dumps({"re": format_part(re_), "im": format_part(im_)}))
    lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit(desc: SpaceDescriptor, state) -> bytes:
    """Canonical bytes of a state; ``parse(emit(d, s))`` gives back ``(d, s)``."""
    return emit_coefficients(desc, encode(desc, state))


def read(path: str):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as err:
        raise StateFileError(err.strerror or str(err), None, path) from None
    return parse(data, path)


def write(path: str, desc: SpaceDescriptor, state) -> None:
    with open(path, "wb") as fh:
        fh.write(emit(desc, state))
