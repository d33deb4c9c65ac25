"""Bloch-Landau radii for bounded sense-preserving harmonic maps.

A normalized harmonic map of the unit disk with |f| < M has combined
coefficient moduli bounded by c = 4M/pi, so the uniform family machinery
applies: the image of the starlikeness disk |z| < r_S contains a disk of
radius R_S = r_S - c r_S^2/(1 - r_S) (the coefficient bound summed as a
geometric series).  The table builder reproduces both these radii and
the earlier comparison bounds phi, psi evaluated at x = 8M/pi.

M >= pi/4 is forced by the normalization: h'(0) = 1 makes smaller sup
norms impossible.
"""

import math
from dataclasses import dataclass

from ._util import fmt12

__all__ = [
    "MIN_BOUND",
    "PRIOR_ESTIMATE_FACTOR",
    "BlochRow",
    "coefficient_bound",
    "bloch_radius",
    "phi",
    "psi",
    "bloch_table",
    "bloch_table_csv",
    "BLOCH_CSV_HEADER",
]

MIN_BOUND = math.pi / 4.0

# Earlier published lower bound for the univalent-disk radius of bounded
# harmonic maps, approximately 1/(11.105 M).  Exposed for comparison
# only; the table columns use phi and psi instead.
PRIOR_ESTIMATE_FACTOR = 1.0 / 11.105

BLOCH_CSV_HEADER = "M,phi,psi,r_S,R_S"


def _check_bound(M: float) -> float:
    M = float(M)
    if M < MIN_BOUND:
        raise ValueError("sup-norm bound M must be >= pi/4")
    return M


def coefficient_bound(M: float) -> float:
    """Sharp bound 4M/pi on |a_n| + |b_n| for maps with |f| < M."""
    return 4.0 * _check_bound(M) / math.pi


def bloch_radius(M: float) -> tuple[float, float]:
    """(r_S, R_S): starlikeness radius and guaranteed univalent-disk radius.

    r_S = 1 - sqrt(4M/(4M + pi)); R_S = r_S - (4M/pi) r_S^2/(1 - r_S).
    """
    M = _check_bound(M)
    c = 4.0 * M / math.pi
    # identical arithmetic to the uniform-family radius at b1=0, so the
    # two entry points agree bit for bit
    r_s = 1.0 - math.sqrt(c / (c + 1.0 - 0.0))
    big_r = r_s - c * r_s * r_s / (1.0 - r_s)
    return r_s, big_r


def phi(x: float) -> float:
    """Comparison bound x/(sqrt(2)(x^2 + x - 1)); needs x^2 + x - 1 > 0."""
    x = float(x)
    den = x * x + x - 1.0
    if den <= 0.0:
        raise ValueError("phi requires x^2 + x - 1 > 0")
    return x / (math.sqrt(2.0) * den)


def psi(x: float) -> float:
    """Comparison bound (1/sqrt(2))[1 + ((x^2-1)/x) ln((x^2-1)/(x^2+x-1))].

    Natural logarithm; needs x > 1.
    """
    x = float(x)
    if x <= 1.0:
        raise ValueError("psi requires x > 1")
    num = x * x - 1.0
    den = x * x + x - 1.0
    return (1.0 + (num / x) * math.log(num / den)) / math.sqrt(2.0)


@dataclass(frozen=True)
class BlochRow:
    """One table row: sup-norm bound M, coefficient bound c = 4M/pi, the
    two radii of this work, and the comparison values phi, psi at 8M/pi."""

    M: float
    c: float
    r_S: float
    R_S: float
    phi_val: float
    psi_val: float

    def __post_init__(self):
        if self.c < 1.0:
            raise ValueError("coefficient bound c must be >= 1")
        if not 0.0 < self.r_S < 1.0:
            raise ValueError("r_S must lie in (0, 1)")
        if not 0.0 < self.R_S < self.r_S:
            raise ValueError("R_S must lie in (0, r_S)")

    def to_dict(self) -> dict:
        return {
            "M": self.M,
            "c": self.c,
            "r_S": self.r_S,
            "R_S": self.R_S,
            "phi": self.phi_val,
            "psi": self.psi_val,
        }


def bloch_table(Ms) -> list[BlochRow]:
    """One BlochRow per bound M; the comparison columns use x = 8M/pi."""
    rows = []
    for M in Ms:
        M = _check_bound(M)
        r_s, big_r = bloch_radius(M)
        x = 8.0 * M / math.pi
        rows.append(BlochRow(M, coefficient_bound(M), r_s, big_r,
                             phi(x), psi(x)))
    return rows


def bloch_table_csv(rows) -> str:
    """CSV text for a list of BlochRows, 12 significant digits."""
    lines = [BLOCH_CSV_HEADER]
    for row in rows:
        lines.append(",".join(fmt12(v) for v in
                              (row.M, row.phi_val, row.psi_val,
                               row.r_S, row.R_S)))
    return "\n".join(lines) + "\n"
