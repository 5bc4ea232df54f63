"""Canonical text rendering of multivectors.

Output re-parses under the expression grammar: "0", "1", "E", "e1^e3",
"2.5 * e1 - i * E", "0.5i * e2^e3", ...  Complex coefficients are split into
a real piece and an imaginary piece so every piece is a plain literal.
"""

from __future__ import annotations

from .multivector import Multivector, indices_from_mask


def format_number(x: float) -> str:
    """Shortest exact decimal for a float; integers drop the trailing .0."""
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def blade_to_text(d: int, mask: int) -> str:
    if mask == 0:
        return "1"
    if mask == (1 << d) - 1:
        return "E"
    return "^".join(f"e{i}" for i in indices_from_mask(mask))


def _piece(value: float, imag: bool, blade: str) -> tuple[bool, str]:
    """One signed piece: (is_negative, body without sign)."""
    mag = abs(value)
    unit = "i" if imag else ""
    if blade == "1":
        body = "i" if (imag and mag == 1.0) else format_number(mag) + unit
    elif mag == 1.0:
        body = f"i * {blade}" if imag else blade
    else:
        body = f"{format_number(mag)}{unit} * {blade}"
    return value < 0, body


def multivector_to_text(a: Multivector) -> str:
    pieces: list[tuple[bool, str]] = []
    for mask in a.sorted_masks():
        c = a.coeff_mask(mask)
        blade = blade_to_text(a.d, mask)
        if c.real != 0.0:
            pieces.append(_piece(c.real, False, blade))
        if c.imag != 0.0:
            pieces.append(_piece(c.imag, True, blade))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def scalar_to_text(value: complex) -> str:
    """A bare complex scalar in the same piece notation."""
    pieces: list[tuple[bool, str]] = []
    if value.real != 0.0:
        pieces.append(_piece(value.real, False, "1"))
    if value.imag != 0.0:
        pieces.append(_piece(value.imag, True, "1"))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
