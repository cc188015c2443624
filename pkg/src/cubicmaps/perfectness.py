"""Surjectivity of ``phi(z) = -(z^2 + 2z) / (2z + 3)`` on P^1 over R, Q_p and F_p.

A finite ``y`` has a preimage iff the fiber quadratic
``z^2 + 2(1+y) z + 3y`` has a root, i.e. iff its discriminant
``4(y^2 - y + 1) = (2y - 1)^2 + 3`` is a square; ``inf`` is always hit
(by ``-3/2`` and by ``inf``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cubicnf import PHI
from .exactfield import (
    PrimeFieldElem,
    as_fraction,
    is_square_in_Qp,
    ord_p,
    reduce_mod_p,
    require_prime,
    unit_part,
)
from .ratfunc import INFINITY, ProjPoint, evaluate


class InvariantViolation(AssertionError):
    """An internally produced certificate failed its own re-check."""


def discriminant(y):
    return 4 * (y * y - y + 1)


@dataclass(frozen=True)
class RealCertificate:
    """``Delta(y) = (2y - 1)^2 + 3 >= 3 > 0``; ``preimage`` is set for ``y = inf``."""
    y: object
    solvable: bool
    discriminant: object = None
    square_part: object = None
    preimage: object = None


def real_solvable(y) -> RealCertificate:
    P = ProjPoint.of(y)
    if P.is_inf:
        return RealCertificate(INFINITY, True, preimage=Fraction(-3, 2))
    y = P.x
    delta, sq = discriminant(y), (2 * y - 1) ** 2
    if delta != sq + 3 or not delta >= 3:
        raise InvariantViolation(f"positivity certificate fails at y = {y}")
    return RealCertificate(y, True, delta, sq)


def qp_solvable(p: int, y) -> bool:
    """Does ``phi(z) = y`` have a solution in P^1(Q_p)?  ``y`` rational or ``inf``."""
    require_prime(p)
    P = ProjPoint.of(y)
    if P.is_inf:
        return True
    return is_square_in_Qp(p, discriminant(as_fraction(P.x)))


# --------------------------------------------------------------------------
# F_p scan
# --------------------------------------------------------------------------

def projective_line(p: int) -> list:
    return [ProjPoint(PrimeFieldElem(p, a)) for a in range(p)] + [
        ProjPoint(PrimeFieldElem(p, 1), PrimeFieldElem(p, 0))]


@dataclass(frozen=True)
class FpScanResult:
    p: int
    reduced_degree: int
    image: frozenset
    surjective: bool
    missing: tuple = ()

    def missing_residues(self) -> list:
        return [P.x.residue for P in self.missing if not P.is_inf]


def fp_scan(p: int) -> FpScanResult:
    """Image of the mod-``p`` reduction of ``phi`` on all ``p + 1`` points of P^1(F_p)."""
    require_prime(p)
    red = PHI.reduce_mod_p(p)
    line = projective_line(p)
    image = frozenset(evaluate(red, P) for P in line)
    missing = tuple(P for P in line if P not in image)
    return FpScanResult(p, red.degree, image, len(image) == p + 1, missing)


# --------------------------------------------------------------------------
# verdicts
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    kind: str   # AlwaysPositive | Mod4Obstruction | OddValuationObstruction | FiniteFieldGap
    evidence: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SolvabilityVerdict:
    field: str           # "R", "Q_p" or "F_p"
    p: int | None
    perfect: bool
    witness: object
    certificate: Certificate

    def as_record(self) -> dict:
        rec = {"field": self.field if self.p is None else f"{self.field}({self.p})",
               "perfect": self.perfect,
               "witness": None if self.witness is None else str(self.witness),
               "certificate": self.certificate.kind}
        for k, v in self.certificate.evidence.items():
            rec[k] = v
        return rec


def real_perfect() -> SolvabilityVerdict:
    return SolvabilityVerdict("R", None, True, None, Certificate(
        "AlwaysPositive", {"discriminant": "(2y-1)^2 + 3", "lower_bound": 3, "pole_preimage": "-3/2"}))


def _squares_mod(p: int, k: int) -> set:
    m = p ** k
    return {r * r % m for r in range(m)}


def _square_by_enumeration(p: int, q: Fraction) -> bool:
    # square classes of units are determined mod 8 (p = 2) or mod p
    if q == 0:
        return True
    v = ord_p(p, q)
    if v % 2:
        return False
    u = unit_part(p, q)
    k = 3 if p == 2 else 1
    m = p ** k
    return u.numerator * pow(u.denominator, -1, m) % m in _squares_mod(p, k)


def _residue_gap(p: int, y: Fraction) -> bool:
    """No z in P^1(F_p) with phi~(z) = y mod p; needs p > 3 and y p-integral."""
    target = ProjPoint(reduce_mod_p(y, p))
    red = PHI.reduce_mod_p(p)
    return all(evaluate(red, P) != target for P in projective_line(p))


def _large_x_escapes(p: int) -> bool:
    # phi(x) = x * (1 + 2/x) / (-(2 + 3/x)), so |phi(x)|_p = |x|_p for |x|_p > 1
    # whenever deg num = deg den + 1 and the leading-coefficient ratio is a unit
    num_lc, den_lc = PHI.num.lc, PHI.den.lc
    ratio = num_lc / den_lc
    return (PHI.num.degree == PHI.den.degree + 1 and ord_p(p, ratio) == 0)


def verify_witness(p: int, y) -> bool:
    """Check that ``phi(z) = y`` has no solution in P^1(Q_p) along two routes.

    Route one is the exact square-class test on the discriminant.  Route two
    is independent: for ``p > 3`` and integral ``y`` the reduction has no
    preimage of ``y mod p`` and large ``x`` satisfy ``|phi(x)|_p = |x|_p``;
    otherwise the discriminant's square class is decided by enumerating
    squares modulo ``p`` (``8`` for ``p = 2``).
    """
    require_prime(p)
    y = as_fraction(y)
    route_one = not qp_solvable(p, y)
    if p > 3 and ord_p(p, y) >= 0:
        route_two = _residue_gap(p, y) and _large_x_escapes(p)
    else:
        route_two = not _square_by_enumeration(p, discriminant(y))
    return route_one and route_two


def qp_perfect(p: int) -> SolvabilityVerdict:
    """Is phi surjective on P^1(Q_p)?  Every prime fails, each with a checked witness.

    * ``p = 2``: ``y = 1/2 + t`` gives ``Delta = 4t^2 + 3 = 3 (mod 4)``.
    * ``p = 3``: for 3-integral ``y = 2 (mod 3)``, ``2y - 1 = 3k`` and
      ``Delta = 9k^2 + 3`` has valuation exactly 1.  Non-integral ``y`` are
      always hit; the failure sits in ``2 + 3 Z_3``.
    * ``p > 3``: a value missed by the reduction of phi on P^1(F_p), lifted
      to an integer, has no preimage since ``|phi(x)|_p = |x|_p`` for
      ``|x|_p > 1``.
    """
    require_prime(p)
    if p == 2:
        y = Fraction(1, 2)
        delta = discriminant(y)
        cert = Certificate("Mod4Obstruction", {
            "family": "y = 1/2 + t, t in Z_2", "discriminant": str(delta),
            "discriminant_mod_4": delta.numerator * pow(delta.denominator, -1, 4) % 4})
    elif p == 3:
        y = Fraction(2)
        delta = discriminant(y)
        cert = Certificate("OddValuationObstruction", {
            "family": "y = 2 + 3t, t in Z_3", "discriminant": str(delta),
            "discriminant_valuation": ord_p(3, delta)})
    else:
        scan = fp_scan(p)
        missing = scan.missing_residues()
        if scan.surjective or not missing:
            raise InvariantViolation(f"reduction of phi mod {p} is surjective")
        y = Fraction(missing[0])
        cert = Certificate("FiniteFieldGap", {
            "missing": " ".join(map(str, missing)), "lifted_y": str(y),
            "image_size": len(scan.image)})
    if not verify_witness(p, y):
        raise InvariantViolation(f"witness {y} for p = {p} did not verify")
    return SolvabilityVerdict("Q_p", p, False, y, cert)


def fp_perfect(p: int) -> SolvabilityVerdict:
    scan = fp_scan(p)
    if scan.surjective:
        return SolvabilityVerdict("F_p", p, True, None, Certificate(
            "FiniteFieldGap", {"missing": "", "reduced_degree": scan.reduced_degree}))
    w = scan.missing_residues()[0]
    return SolvabilityVerdict("F_p", p, False, w, Certificate(
        "FiniteFieldGap", {"missing": " ".join(map(str, scan.missing_residues())),
                           "reduced_degree": scan.reduced_degree}))


def catalan_bound(d: int) -> int:
    """Catalan bound ``C(2d-2, d-1) / d`` on classes with prescribed critical points."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    return comb(2 * d - 2, d - 1) // d
