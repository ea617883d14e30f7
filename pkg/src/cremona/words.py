"""Formal words in the generators of the plane Cremona group.

A word is a sequence of letters, each either an invertible 3x3 matrix
(acting as a linear automorphism of P^2) or the standard quadratic
involution sigma = [x1*x2 : x0*x2 : x0*x1].  Letters apply right to left:
``Cr2Word((a, b, c))`` denotes the map a o b o c.

Matrix entries may be rationals or polynomials in symbolic constants;
projective inversion of such a letter is its adjugate, so no division is
ever needed.  Words form a group: concatenation, formal inverse and
integer powers are all exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .maps import (
    Matrix,
    ProjectiveMap,
    from_matrix,
    identity_map,
    mat,
    mat_adjugate,
    mat_det,
)
from .rings import Polynomial, Ring, proj_ring

P2 = proj_ring(2)


@dataclass(frozen=True)
class Letter:
    """One generator: a linear map (with formal inverse flag) or sigma."""

    matrix: Matrix | None  # None means sigma
    inverted: bool = False

    @property
    def is_sigma(self) -> bool:
        return self.matrix is None

    def inverse(self) -> "Letter":
        if self.is_sigma:
            return self
        return Letter(self.matrix, not self.inverted)

    def effective_matrix(self) -> Matrix:
        return mat_adjugate(self.matrix) if self.inverted else self.matrix


SIGMA_LETTER = Letter(None)


def _check_matrix(m: Matrix):
    if len(m) != 3 or any(len(r) != 3 for r in m):
        raise ValueError("linear letters are 3x3 matrices")
    d = mat_det(m)
    if isinstance(d, Polynomial):
        if d.is_zero:
            raise ValueError("singular matrix letter")
    elif d == 0:
        raise ValueError("singular matrix letter")


class Cr2Word:
    """Immutable word in {linear maps, sigma} with formal inverses."""

    __slots__ = ("letters",)

    def __init__(self, letters: Sequence[Letter] = ()):
        norm = []
        for l in letters:
            if l.is_sigma and l.inverted:
                l = SIGMA_LETTER
            if not l.is_sigma:
                _check_matrix(l.matrix)
            norm.append(l)
        self.letters = tuple(norm)

    def __mul__(self, other: "Cr2Word") -> "Cr2Word":
        return Cr2Word(self.letters + other.letters)

    def inverse(self) -> "Cr2Word":
        return Cr2Word(tuple(l.inverse() for l in reversed(self.letters)))

    def __pow__(self, k: int) -> "Cr2Word":
        if k < 0:
            return self.inverse() ** (-k)
        out = Cr2Word()
        for _ in range(k):
            out = out * self
        return out

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Cr2Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def to_map(self, ring: Ring | None = None) -> ProjectiveMap:
        """Evaluate the word as a reduced rational self-map of P^2."""
        ring = ring or P2
        cur = None
        for l in reversed(self.letters):
            m = sigma_map(ring) if l.is_sigma else from_matrix(l.effective_matrix(), ring)
            cur = m if cur is None else m.after(cur)
        return cur if cur is not None else identity_map(ring)

    def __repr__(self):
        parts = []
        for l in self.letters:
            if l.is_sigma:
                parts.append("sigma")
            else:
                parts.append("g" + ("^-1" if l.inverted else ""))
        return "Cr2Word(" + "*".join(parts) + ")" if parts else "Cr2Word(id)"


def sigma_map(ring: Ring | None = None) -> ProjectiveMap:
    ring = ring or P2
    x = [ring.var(i) for i in range(3)]
    return ProjectiveMap([x[1] * x[2], x[0] * x[2], x[0] * x[1]])


def word(*letters) -> Cr2Word:
    """Build a word from matrices, Letters, and the string 'sigma'."""
    out = []
    for l in letters:
        if isinstance(l, Letter):
            out.append(l)
        elif l == "sigma":
            out.append(SIGMA_LETTER)
        else:
            out.append(Letter(mat(l)))
    return Cr2Word(out)


def linear_word(m) -> Cr2Word:
    return Cr2Word((Letter(mat(m)),))


SIGMA = Cr2Word((SIGMA_LETTER,))
IDENTITY_WORD = Cr2Word()

# named linear generators used throughout the verification suites
H_MATRIX = mat([(-1, 0, 1), (0, -1, 1), (0, 0, 1)])     # [x2-x0 : x2-x1 : x2]
G0_MATRIX = mat([(-1, 1, 0), (0, 1, 0), (0, 0, 1)])     # [x1-x0 : x1 : x2]
TAU1_MATRIX = mat([(0, 0, 1), (0, 1, 0), (1, 0, 0)])    # [x2 : x1 : x0]
TAU2_MATRIX = mat([(0, 1, 0), (0, 0, 1), (1, 0, 0)])    # [x1 : x2 : x0]

H_WORD = linear_word(H_MATRIX)
G0_WORD = linear_word(G0_MATRIX)
TAU1_WORD = linear_word(TAU1_MATRIX)
TAU2_WORD = linear_word(TAU2_MATRIX)


def diag_word(a, b, c) -> Cr2Word:
    zero = 0
    return linear_word([(a, zero, zero), (zero, b, zero), (zero, zero, c)])


def f_word() -> Cr2Word:
    """Word for the quadratic map [x0*x1 : x1*x2 : x2^2]."""
    return TAU1_WORD * G0_WORD * SIGMA * G0_WORD * SIGMA * G0_WORD * TAU2_WORD


GS_MATRIX = mat([(1, 0, 0), (0, 1, 0), (0, 1, -1)])     # (X, X-Y) affinely
TAU2S_MATRIX = mat([(0, 0, 1), (1, 0, 0), (0, 1, 0)])   # (1/Y, X/Y) affinely


def s_word() -> Cr2Word:
    """Word for the de Jonquieres conjugator (X, XY) = [x0^2 : x0*x1 : x1*x2]."""
    gs = linear_word(GS_MATRIX)
    return TAU1_WORD * gs * SIGMA * gs * SIGMA * gs * linear_word(TAU2S_MATRIX)
