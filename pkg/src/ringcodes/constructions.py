"""Certified constructors for the special combining matrices.

Each constructor checks its ring-specific hypotheses up front (raising
:class:`HypothesisViolationError` naming the failed one), builds the
matrix, then *recomputes* the Gram classification and the row-code
minimum distances and compares them with the stated certificate.  A
certificate is therefore always machine-verified at construction time,
never asserted.

When no ``u`` is supplied, the square root of -1 found first in
enumeration order is used; rings without one are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .code import LinearCode, span
from .errors import CertificateError, HypothesisViolationError, InvalidParameterError
from .matrix import ANTI_DIAGONAL, DIAGONAL, GramShape, Matrix
from .mpc import row_code_min_distances
from .ring import IntegerResidueRing, Ring, RingElement, is_probable_prime, resolve_budget

HYP_TWO_NOT_ZERO_DIVISOR = "2 is not a zero divisor"
HYP_TWO_UNIT = "2 is a unit"
HYP_U_NOT_ZERO_DIVISOR = "u is not a zero divisor"
HYP_U_SQUARES_TO_MINUS_ONE = "u^2 = -1"


@dataclass(frozen=True)
class CertifiedMatrix:
    """A combining matrix bundled with its verified certificate."""

    matrix: Matrix
    gram: GramShape
    deltas: tuple[int, ...]
    hypotheses: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "ring": self.matrix.ring.description(),
            "matrix": [[str(e) for e in row] for row in self.matrix.entries],
            "gram": self.gram.to_json_dict(),
            "deltas": list(self.deltas),
            "hypotheses": list(self.hypotheses),
        }


def _resolve_u(ring: Ring, u) -> RingElement:
    if u is None:
        found = ring.find_square_root_of_minus_one()
        if found is None:
            raise HypothesisViolationError(
                HYP_U_SQUARES_TO_MINUS_ONE,
                f"-1 has no square root in {ring.description()} and no u was supplied",
            )
        return found
    return ring.element(u)


def _require_sqrt_minus_one(ring: Ring, u: RingElement) -> None:
    if u * u != -ring.one:
        raise HypothesisViolationError(
            HYP_U_SQUARES_TO_MINUS_ONE, f"({u})^2 = {u * u} != {-ring.one}"
        )


def _require_two_not_zero_divisor(ring: Ring) -> None:
    two = ring.from_int(2)
    if two.is_zero_divisor():
        raise HypothesisViolationError(
            HYP_TWO_NOT_ZERO_DIVISOR, f"2 is a zero divisor in {ring.description()}"
        )


def _require_two_unit(ring: Ring) -> None:
    if not ring.from_int(2).is_unit():
        raise HypothesisViolationError(
            HYP_TWO_UNIT, f"2 is not a unit in {ring.description()}"
        )


def _certify(
    matrix: Matrix,
    tag: str,
    lambdas: tuple[RingElement, ...],
    deltas: tuple[int, ...],
    hypotheses: tuple[str, ...],
    budget: Optional[int],
) -> CertifiedMatrix:
    gram = matrix.classify_gram()
    stated = GramShape(tag, lambdas)
    if gram != stated:
        raise CertificateError(
            f"recomputed Gram shape {gram} does not match the stated {stated}"
        )
    computed = row_code_min_distances(matrix, budget)
    if computed != deltas:
        raise CertificateError(
            f"recomputed row-code distances {computed} do not match the stated {deltas}"
        )
    return CertifiedMatrix(matrix, gram, deltas, hypotheses)


def diag1_matrix(ring: Ring, u=None, budget: Optional[int] = None) -> CertifiedMatrix:
    """[[1, u, 1], [-1, 0, 1]] with Gram diag(2 + u^2, 2) and row distances (3, 2).

    Needs 2 and u to be non-zero-divisors.
    """
    u = _resolve_u(ring, u)
    _require_two_not_zero_divisor(ring)
    if u.is_zero_divisor():
        raise HypothesisViolationError(
            HYP_U_NOT_ZERO_DIVISOR, f"u = {u} is a zero divisor in {ring.description()}"
        )
    one = ring.one
    a = Matrix(ring, [[one, u, one], [-one, ring.zero, one]])
    lambdas = (ring.from_int(2) + u * u, ring.from_int(2))
    return _certify(
        a, DIAGONAL, lambdas, (3, 2),
        (HYP_TWO_NOT_ZERO_DIVISOR, HYP_U_NOT_ZERO_DIVISOR), budget,
    )


def adiag1_matrix_a(ring: Ring, u=None, budget: Optional[int] = None) -> CertifiedMatrix:
    """[[1, 0, u], [0, 1, u]] with Gram adiag(-1, -1) and row distances (2, 2).

    Needs u^2 = -1.
    """
    u = _resolve_u(ring, u)
    _require_sqrt_minus_one(ring, u)
    one, zero = ring.one, ring.zero
    a = Matrix(ring, [[one, zero, u], [zero, one, u]])
    minus_one = -one
    return _certify(
        a, ANTI_DIAGONAL, (minus_one, minus_one), (2, 2),
        (HYP_U_SQUARES_TO_MINUS_ONE,), budget,
    )


def adiag1_matrix_b(ring: Ring, u=None, budget: Optional[int] = None) -> CertifiedMatrix:
    """[[1, u, 0, 1, u], [u, 1, u, 0, 1]] with Gram adiag(3u, 3u) and row
    distances (4, 3).

    Needs u^2 = -1 and 2 not a zero divisor.
    """
    u = _resolve_u(ring, u)
    _require_sqrt_minus_one(ring, u)
    _require_two_not_zero_divisor(ring)
    one, zero = ring.one, ring.zero
    b = Matrix(ring, [[one, u, zero, one, u], [u, one, u, zero, one]])
    three_u = ring.from_int(3) * u
    return _certify(
        b, ANTI_DIAGONAL, (three_u, three_u), (4, 3),
        (HYP_U_SQUARES_TO_MINUS_ONE, HYP_TWO_NOT_ZERO_DIVISOR), budget,
    )


def adiag3_matrix(ring: Ring, u=None, budget: Optional[int] = None) -> CertifiedMatrix:
    """[[1, u], [u, 1]] with Gram adiag(2u, 2u) and row distances (2, 1).

    Needs 2 a unit and u^2 = -1.
    """
    u = _resolve_u(ring, u)
    _require_two_unit(ring)
    _require_sqrt_minus_one(ring, u)
    one = ring.one
    a = Matrix(ring, [[one, u], [u, one]])
    two_u = ring.from_int(2) * u
    return _certify(
        a, ANTI_DIAGONAL, (two_u, two_u), (2, 1),
        (HYP_TWO_UNIT, HYP_U_SQUARES_TO_MINUS_ONE), budget,
    )


def block_adiag_matrix(
    ring: Ring, u=None, s: int = 2, budget: Optional[int] = None
) -> CertifiedMatrix:
    """The s x s matrix with 1 on the diagonal and u on the anti-diagonal
    (middle row bare for odd s).

    Gram is adiag(2u, ..., 2u) for even s and adiag(2u, ..., 2u, 1, 2u,
    ..., 2u) for odd s; the first floor(s/2) row distances are 2 for even
    s (the first (s-1)/2 for odd s) and the remaining ones are 1.  Needs
    2 a unit and u^2 = -1.
    """
    if s < 2:
        raise InvalidParameterError("block size s must be >= 2")
    u = _resolve_u(ring, u)
    _require_two_unit(ring)
    _require_sqrt_minus_one(ring, u)
    one, zero = ring.one, ring.zero
    rows = []
    for i in range(s):
        row = [zero] * s
        row[i] = one
        if s % 2 == 0 or i != s // 2:
            row[s - 1 - i] = u
        rows.append(row)
    a = Matrix(ring, rows)
    two_u = ring.from_int(2) * u
    if s % 2 == 0:
        lambdas = (two_u,) * s
        deltas = (2,) * (s // 2) + (1,) * (s // 2)
    else:
        lambdas = (two_u,) * (s // 2) + (one,) + (two_u,) * (s // 2)
        deltas = (2,) * (s // 2) + (1,) * (s - s // 2)
    return _certify(
        a, ANTI_DIAGONAL, lambdas, deltas,
        (HYP_TWO_UNIT, HYP_U_SQUARES_TO_MINUS_ONE), budget,
    )


def prime_square_codes(
    p: int, budget: Optional[int] = None
) -> tuple[Ring, LinearCode, LinearCode]:
    """Over Z/p^2 (p prime, p = 1 mod 4): the repetition code generated by
    the all-ones vector and the one generated by the all-p vector.

    Both have length p and minimum distance p, and each is contained in
    the other's dual; all three facts are verified before returning.
    """
    if not is_probable_prime(p):
        raise InvalidParameterError(f"p must be prime, got {p}")
    if p % 4 != 1:
        raise InvalidParameterError(f"p must be congruent to 1 mod 4, got {p}")
    limit = resolve_budget(budget)
    ring = IntegerResidueRing(p * p)
    ones = span(ring, p, [[1] * p], limit)
    ps = span(ring, p, [[p] * p], limit)
    if ones.min_distance() != p or ps.min_distance() != p:
        raise CertificateError("repetition codes failed their distance check")
    if not ones.is_orthogonal_to(ps):
        raise CertificateError("the two repetition codes are not mutually orthogonal")
    return ring, ones, ps
