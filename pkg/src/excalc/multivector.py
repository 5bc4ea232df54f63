"""Sparse multivectors over a d-dimensional complex vector space.

A basis blade e_{i1}^...^e_{ik} (i1 < ... < ik, indices 1..d) is encoded as a
bitmask with bit i-1 set for index i.  The empty mask is the scalar blade "1"
(the fermionic vacuum), the full mask is the top blade "E" (every state
occupied).  A multivector is a finite blade -> complex coefficient map; the
zero multivector has no terms and is distinct from the vacuum scalar 1.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import DimensionError, GradeError, IndexRangeError

MAX_DIM = 16
PRUNE_TOL = 1e-12


def check_dim(d: int) -> int:
    if not isinstance(d, int) or not 1 <= d <= MAX_DIM:
        raise DimensionError(f"dimension must be an integer in 1..{MAX_DIM}, got {d!r}")
    return d


def mask_from_indices(d: int, indices: Iterable[int]) -> int:
    """Bitmask of a set of 1-based basis indices; duplicates rejected."""
    mask = 0
    for i in indices:
        if not isinstance(i, int) or not 1 <= i <= d:
            raise IndexRangeError(f"basis index {i!r} outside 1..{d}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise IndexRangeError(f"basis index {i} repeated")
        mask |= bit
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    """Ascending 1-based indices of a blade mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def merge_sign(a: int, b: int) -> int:
    """Parity sign of merging two disjoint blades: (-1)^|{(i,j): i in a, j in b, i > j}|."""
    inv = 0
    t = b
    while t:
        low = t & -t
        inv += (a >> low.bit_length()).bit_count()
        t ^= low
    return -1 if inv & 1 else 1


def _index_sum(mask: int) -> int:
    s = 0
    pos = 1
    while mask:
        if mask & 1:
            s += pos
        mask >>= 1
        pos += 1
    return s


def hodge_blade(d: int, mask: int) -> tuple[int, int]:
    """Star complement of one blade: (sign, complement mask)."""
    k = mask.bit_count()
    exponent = _index_sum(mask) - k * (k + 1) // 2
    sign = -1 if exponent & 1 else 1
    return sign, ((1 << d) - 1) ^ mask


class Multivector:
    """Immutable sparse multivector.  Build via the classmethods or module ops."""

    __slots__ = ("d", "_terms")

    def __init__(self, d: int, terms: Mapping[int, complex]):
        check_dim(d)
        full = (1 << d) - 1
        clean: dict[int, complex] = {}
        for mask, c in terms.items():
            c = complex(c)
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise ValueError(f"non-finite coefficient {c!r} on blade mask {mask:#x}")
            if mask & ~full:
                raise IndexRangeError(f"blade mask {mask:#x} outside dimension {d}")
            if abs(c) > PRUNE_TOL:
                clean[mask] = c
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, d: int) -> Multivector:
        return cls(d, {})

    @classmethod
    def scalar(cls, d: int, value: complex) -> Multivector:
        return cls(d, {0: complex(value)})

    @classmethod
    def vacuum(cls, d: int) -> Multivector:
        """The scalar 1: no fermions, every state a hole."""
        return cls(d, {0: 1.0})

    @classmethod
    def top(cls, d: int) -> Multivector:
        """The top blade E = e_1^...^e_d: every state occupied."""
        check_dim(d)
        return cls(d, {(1 << d) - 1: 1.0})

    @classmethod
    def from_indices(cls, d: int, indices: Iterable[int], coeff: complex = 1.0) -> Multivector:
        """Single basis blade from a set of 1-based indices."""
        check_dim(d)
        return cls(d, {mask_from_indices(d, indices): complex(coeff)})

    # ---- term access ---------------------------------------------------

    def terms(self) -> dict[int, complex]:
        """Copy of the blade-mask -> coefficient map."""
        return dict(self._terms)

    def coeff(self, indices: Iterable[int]) -> complex:
        return self._terms.get(mask_from_indices(self.d, indices), 0j)

    def coeff_mask(self, mask: int) -> complex:
        return self._terms.get(mask, 0j)

    def sorted_masks(self) -> list[int]:
        """Blade masks in canonical (step, ascending index tuple) order."""
        return sorted(self._terms, key=lambda m: (m.bit_count(), indices_from_mask(m)))

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator[tuple[int, complex]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    # ---- arithmetic ------------------------------------------------------

    def __add__(self, other: Multivector) -> Multivector:
        _check_same_dim(self, other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0j) + c
        return Multivector(self.d, out)

    def __sub__(self, other: Multivector) -> Multivector:
        return self + (-other)

    def __neg__(self) -> Multivector:
        return Multivector(self.d, {m: -c for m, c in self._terms.items()})

    def __mul__(self, scalar: complex) -> Multivector:
        if isinstance(scalar, Multivector):
            return NotImplemented
        return Multivector(self.d, {m: c * scalar for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: Multivector) -> Multivector:
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.d == other.d and self._terms == other._terms

    def __repr__(self) -> str:
        return f"Multivector(d={self.d}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # ---- serialization ---------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, parseable back by the expression language."""
        from .textform import multivector_to_text

        return multivector_to_text(self)

    def to_json(self) -> dict:
        return {
            "dim": self.d,
            "terms": [
                {
                    "blade": list(indices_from_mask(m)),
                    "re": self._terms[m].real,
                    "im": self._terms[m].imag,
                }
                for m in self.sorted_masks()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Multivector:
        d = check_dim(data["dim"])
        terms: dict[int, complex] = {}
        for t in data["terms"]:
            mask = mask_from_indices(d, t["blade"])
            terms[mask] = terms.get(mask, 0j) + complex(t["re"], t["im"])
        return cls(d, terms)


def _check_same_dim(a: Multivector, b: Multivector) -> None:
    if a.d != b.d:
        raise DimensionError(f"operands live in different dimensions ({a.d} vs {b.d})")


def basis_vector(d: int, i: int) -> Multivector:
    """The one-fermion state e_i."""
    return Multivector.from_indices(d, (i,))


def all_blades(d: int) -> list[int]:
    """All 2^d blade masks in canonical (step, index tuple) order."""
    check_dim(d)
    out = []
    for k in range(d + 1):
        for combo in combinations(range(1, d + 1), k):
            out.append(mask_from_indices(d, combo))
    return out


# ---- the three exterior operations ------------------------------------------


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Progressive product: joins two fermion systems, 0 on any shared state."""
    _check_same_dim(a, b)
    out: dict[int, complex] = {}
    for s, ca in a:
        for t, cb in b:
            if s & t:
                continue
            u = s | t
            out[u] = out.get(u, 0j) + merge_sign(s, t) * ca * cb
    return Multivector(a.d, out)


def hodge(a: Multivector) -> Multivector:
    """Star complement: swaps occupied states and holes, blade by blade."""
    out: dict[int, complex] = {}
    for mask, c in a:
        sign, comp = hodge_blade(a.d, mask)
        out[comp] = out.get(comp, 0j) + sign * c
    return Multivector(a.d, out)


def hodge_inverse(a: Multivector) -> Multivector:
    """Inverse of the star complement; hodge(hodge_inverse(x)) == x."""
    parts: dict[int, complex] = {}
    d = a.d
    for mask, c in a:
        m = mask.bit_count()
        sign = -1 if (m * (d - m)) & 1 else 1
        parts[mask] = sign * c
    return hodge(Multivector(d, parts))


def vee(a: Multivector, b: Multivector) -> Multivector:
    """Regressive product via duality: joins hole systems, 0 when steps fall short of d."""
    _check_same_dim(a, b)
    return hodge_inverse(wedge(hodge(a), hodge(b)))


def conjugate(a: Multivector) -> Multivector:
    """Complex-conjugate every coefficient; blades unchanged."""
    return Multivector(a.d, {m: c.conjugate() for m, c in a})


# ---- grade structure ---------------------------------------------------------


def step_of(a: Multivector) -> int | None:
    """Common step of all stored blades, or None for mixed-grade or zero input."""
    steps = {m.bit_count() for m, _ in a}
    if len(steps) == 1:
        return steps.pop()
    return None


def grade_project(a: Multivector, k: int) -> Multivector:
    if not 0 <= k <= a.d:
        raise GradeError(f"step {k} outside 0..{a.d}")
    return Multivector(a.d, {m: c for m, c in a if m.bit_count() == k})


def parity_sector(a: Multivector) -> str:
    """'even', 'odd', or 'mixed' fermion-number parity of the stored blades."""
    parities = {m.bit_count() & 1 for m, _ in a}
    if parities == {1}:
        return "odd"
    if len(parities) == 2:
        return "mixed"
    return "even"


def covector(d: int, i: int) -> Multivector:
    """One-hole state: the star complement of e_i."""
    return hodge(basis_vector(d, i))


# ---- scalar product ----------------------------------------------------------


def scalar_product(a: Multivector, b: Multivector) -> complex:
    """Scalar product on a common step k: conjugate(a) joined with hodge(b).

    Defined only for homogeneous operands of equal step (the zero multivector
    is accepted with any partner and gives 0).
    """
    _check_same_dim(a, b)
    ka, kb = step_of(a), step_of(b)
    if not a.is_zero() and ka is None:
        raise GradeError("left operand is not homogeneous")
    if not b.is_zero() and kb is None:
        raise GradeError("right operand is not homogeneous")
    if a.is_zero() or b.is_zero():
        return 0j
    if ka != kb:
        raise GradeError(f"scalar product undefined between steps {ka} and {kb}")
    return vee(conjugate(a), hodge(b)).coeff_mask(0)


# ---- comparison -------------------------------------------------------------


def mv_equal_approx(a: Multivector, b: Multivector, tol: float = PRUNE_TOL) -> bool:
    """True when the largest coefficient difference is at most tol."""
    _check_same_dim(a, b)
    for m in set(a.terms()) | set(b.terms()):
        if abs(a.coeff_mask(m) - b.coeff_mask(m)) > tol:
            return False
    return True
