"""Multi-qubit states and the exterior operations pulled onto them.

A d-qubit computational basis state maps to the blade occupying exactly the
modes whose qubit reads 1, so |0...0> is the scalar 1 and |1...1> is the top
blade.  Wedge, vee and the star complement transfer through that bijection;
a zero result marks the operation as physically impossible for the states
involved.  States are not normalized: the transferred operations do not
preserve norms, and the all-basis inner product kept here is bookkeeping for
norms and tests only, separate from the exterior-calculus scalar product.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import DimensionError
from .multivector import (
    Multivector,
    check_dim,
    hodge,
    indices_from_mask as _mask_indices,
    vee,
    wedge,
)

AMP_TOL = 1e-12


def bits_to_mask(bits: Iterable[int]) -> int:
    mask = 0
    for pos, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit value {b!r} is not 0 or 1")
        if b:
            mask |= 1 << pos
    return mask


def mask_to_bits(d: int, mask: int) -> tuple[int, ...]:
    return tuple((mask >> pos) & 1 for pos in range(d))


def parse_basis_state(text: str) -> tuple[int, ...]:
    """Accepts "101", "|101>" or "|101⟩"; returns the bit tuple."""
    body = text.strip()
    if body.startswith("|"):
        body = body[1:]
    for closer in (">", "⟩"):
        if body.endswith(closer):
            body = body[: -len(closer)]
    body = body.replace(",", "")
    if not body or any(ch not in "01" for ch in body):
        raise ValueError(f"not a basis state: {text!r}")
    return tuple(int(ch) for ch in body)


def format_basis_state(bits: Iterable[int]) -> str:
    return "|" + "".join(str(b) for b in bits) + ">"


class QubitState:
    """Sparse map from d-bit basis states to complex amplitudes."""

    __slots__ = ("d", "_amps")

    def __init__(self, d: int, amps: Mapping[int, complex]):
        check_dim(d)
        clean: dict[int, complex] = {}
        for mask, c in amps.items():
            c = complex(c)
            if mask >> d:
                raise DimensionError(f"basis mask {mask:#x} outside {d} qubits")
            if abs(c) > AMP_TOL:
                clean[mask] = c
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_amps", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QubitState is immutable")

    @classmethod
    def basis(cls, bits: Iterable[int]) -> QubitState:
        bits = tuple(bits)
        return cls(len(bits), {bits_to_mask(bits): 1.0})

    @classmethod
    def zero(cls, d: int) -> QubitState:
        return cls(d, {})

    def amplitudes(self) -> dict[int, complex]:
        return dict(self._amps)

    def amplitude(self, bits: Iterable[int]) -> complex:
        return self._amps.get(bits_to_mask(bits), 0j)

    def is_zero(self) -> bool:
        return not self._amps

    def __iter__(self):
        return iter(self._amps.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, QubitState):
            return NotImplemented
        return self.d == other.d and self._amps == other._amps

    def __repr__(self) -> str:
        return f"QubitState(d={self.d}, {self.to_text()!r})"

    def to_text(self) -> str:
        from .textform import format_number

        if not self._amps:
            return "0"
        pieces = []
        for mask in sorted(self._amps, key=lambda m: (m.bit_count(), _mask_indices(m))):
            c = self._amps[mask]
            ket = format_basis_state(mask_to_bits(self.d, mask))
            for value, unit in ((c.real, ""), (c.imag, "i")):
                if value == 0.0:
                    continue
                mag = abs(value)
                if mag == 1.0:
                    body = f"{unit} {ket}".lstrip()
                else:
                    body = f"{format_number(mag)}{unit} {ket}"
                pieces.append((value < 0, body))
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "amps": [
                {
                    "bits": "".join(str(b) for b in mask_to_bits(self.d, mask)),
                    "re": self._amps[mask].real,
                    "im": self._amps[mask].imag,
                }
                for mask in sorted(self._amps)
            ],
        }

    @classmethod
    def from_json(cls, data) -> QubitState:
        d = data["d"]
        amps: dict[int, complex] = {}
        for entry in data["amps"]:
            bits = parse_basis_state(entry["bits"])
            if len(bits) != d:
                raise DimensionError(f"bit string {entry['bits']!r} is not {d} bits")
            mask = bits_to_mask(bits)
            amps[mask] = amps.get(mask, 0j) + complex(entry["re"], entry["im"])
        return cls(d, amps)


# ---- the bijection with blades -------------------------------------------------


def n_map_basis(bits: Iterable[int]) -> Multivector:
    """One basis state to its blade: qubit i reads 1 iff index i is occupied."""
    bits = tuple(bits)
    return Multivector(len(bits), {bits_to_mask(bits): 1.0})


def n_map(s: QubitState) -> Multivector:
    return Multivector(s.d, dict(s.amplitudes()))


def n_inverse(a: Multivector) -> QubitState:
    return QubitState(a.d, a.terms())


# ---- transferred operations ----------------------------------------------------


def _check_same_d(s1: QubitState, s2: QubitState) -> None:
    if s1.d != s2.d:
        raise DimensionError(f"states live on different qubit counts ({s1.d} vs {s2.d})")


def q_wedge(s1: QubitState, s2: QubitState) -> QubitState:
    _check_same_d(s1, s2)
    return n_inverse(wedge(n_map(s1), n_map(s2)))


def q_vee(s1: QubitState, s2: QubitState) -> QubitState:
    _check_same_d(s1, s2)
    return n_inverse(vee(n_map(s1), n_map(s2)))


def q_star(s: QubitState) -> QubitState:
    return n_inverse(hodge(n_map(s)))


def is_physically_impossible(s: QubitState) -> bool:
    """A zero state: the operation that produced it has no physical outcome."""
    return s.is_zero()


def qubit_inner_product(s1: QubitState, s2: QubitState) -> complex:
    """Plain all-basis inner product <s1|s2>; bookkeeping, not the exterior one."""
    _check_same_d(s1, s2)
    a1, a2 = s1.amplitudes(), s2.amplitudes()
    if len(a2) < len(a1):
        a1, a2 = a2, a1
    return sum(c.conjugate() * a2[m] for m, c in a1.items() if m in a2)
