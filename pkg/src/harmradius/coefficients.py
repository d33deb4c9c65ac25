"""Coefficient data for planar harmonic mappings and the weighted sum S(r).

A normalized harmonic mapping of the unit disk splits as f = h + conj(g)
with analytic parts

    h(z) = z + sum_{n>=2} a_n z^n,        g(z) = sum_{n>=1} b_n z^n.

Everything in this package that computes a radius does so through the
weighted coefficient sum

    S(r) = |b_1| + sum_{n>=2} n (|a_n| + |b_n|) r^(n-1),     0 <= r < 1,

because S(r) <= 1 - beta certifies that the dilated map f_r(z) = f(rz)/r
is close-to-convex (and starlike when b_1 = 0).  Two kinds of input are
supported: explicit (possibly truncated) coefficient sequences, and
closed-form bound families for which S(r) is a known rational function.
Bound families are always summed in closed form, never by truncation.
"""

import json
import math
from dataclasses import dataclass, field

__all__ = [
    "TailBound",
    "CoefficientSeq",
    "BoundFamily",
    "koebe_bounds",
    "convex_bounds",
    "power_sums",
    "weighted_sum",
    "weighted_sum_tail",
    "weighted_sum_limit",
    "sequence_from_dict",
    "sequence_to_dict",
    "load_sequence",
    "save_sequence",
]

# Series-type evaluations (stored terms plus tail majorants) are trusted only
# away from the boundary; mirrors the evaluation guard in maps.py.
TAIL_EVAL_MAX = 0.999


def _require_index(n: int, low: int, what: str) -> int:
    if not isinstance(n, (int,)) or isinstance(n, bool):
        raise TypeError(f"{what} index must be an integer, got {n!r}")
    if n < low:
        raise ValueError(f"{what} index must be >= {low}, got {n}")
    return n


@dataclass(frozen=True)
class TailBound:
    """Bound |a_n| + |b_n| <= constant * n**degree for all n past the truncation."""

    degree: float
    constant: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.degree):
            raise ValueError("tail degree must be finite")
        if not (math.isfinite(self.constant) and self.constant >= 0.0):
            raise ValueError("tail constant must be finite and nonnegative")


@dataclass(frozen=True)
class CoefficientSeq:
    """Explicit coefficients of a harmonic map, sparse by index.

    Args:
        a: mapping n -> a_n for n >= 2 (a_1 is fixed to 1 and never stored).
        b: mapping n -> b_n for n >= 1.
        truncation: highest stored index N; indices beyond N are either
            exactly zero (tail is None) or bounded by the attached TailBound.
        tail: optional polynomial tail bound for the unstored indices.

    The sequence is immutable after construction.  |b_1| < 1 is enforced
    here because every downstream class check requires it.
    """

    a: dict[int, complex] = field(default_factory=dict)
    b: dict[int, complex] = field(default_factory=dict)
    truncation: int = 1
    tail: TailBound | None = None

    def __post_init__(self) -> None:
        if self.truncation < 1:
            raise ValueError("truncation must be >= 1")
        a = {}
        for n, v in self.a.items():
            _require_index(n, 2, "a")
            if n > self.truncation:
                raise ValueError(f"a index {n} exceeds truncation {self.truncation}")
            v = complex(v)
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"a[{n}] is not finite")
            a[n] = v
        b = {}
        for n, v in self.b.items():
            _require_index(n, 1, "b")
            if n > self.truncation:
                raise ValueError(f"b index {n} exceeds truncation {self.truncation}")
            v = complex(v)
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"b[{n}] is not finite")
            b[n] = v
        if abs(b.get(1, 0j)) >= 1.0:
            raise ValueError("|b_1| must be < 1 (sense-preserving normalization)")
        object.__setattr__(self, "a", dict(sorted(a.items())))
        object.__setattr__(self, "b", dict(sorted(b.items())))

    @property
    def b1(self) -> complex:
        return self.b.get(1, 0j)

    def scaled(self, rho: float) -> "CoefficientSeq":
        """Coefficients of the dilated map f_rho(z) = f(rho z)/rho."""
        if not (0.0 < rho <= 1.0):
            raise ValueError("dilation parameter must lie in (0, 1]")
        # C n^d rho^(n-1) <= C n^d for n > N, so the old tail stays a valid
        # (conservative) majorant for the dilated sequence.
        return CoefficientSeq(
            {n: v * rho ** (n - 1) for n, v in self.a.items()},
            {n: v * rho ** (n - 1) for n, v in self.b.items()},
            self.truncation,
            self.tail,
        )


# ---------------------------------------------------------------------------
# Bound families
# ---------------------------------------------------------------------------

def koebe_bounds(n: int) -> tuple[float, float]:
    """Per-index bounds ((2n+1)(n+1)/6, (2n-1)(n-1)/6) of the harmonic Koebe family.

    Raises:
        ValueError: if n < 1.
    """
    _require_index(n, 1, "bound")
    return (2 * n + 1) * (n + 1) / 6.0, (2 * n - 1) * (n - 1) / 6.0


def convex_bounds(n: int) -> tuple[float, float]:
    """Per-index bounds ((n+1)/2, (n-1)/2) of the convex-mapping family."""
    _require_index(n, 1, "bound")
    return (n + 1) / 2.0, (n - 1) / 2.0


@dataclass(frozen=True)
class BoundFamily:
    """A family of harmonic maps defined by per-index coefficient bounds.

    kind is one of "koebe", "convex", "uniform".  The uniform family carries
    a combined bound |a_n| + |b_n| <= c for n >= 2 together with |b_1| = b1_abs;
    the other two have split per-index bounds and b_1 = 0.
    """

    kind: str
    c: float = float("nan")
    b1_abs: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in ("koebe", "convex", "uniform"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "uniform":
            if not (math.isfinite(self.c) and self.c > 0.0):
                raise ValueError("uniform family needs c > 0")
            if not (0.0 <= self.b1_abs < 1.0):
                raise ValueError("uniform family needs b1_abs in [0, 1)")

    @classmethod
    def koebe(cls) -> "BoundFamily":
        return cls("koebe")

    @classmethod
    def convex(cls) -> "BoundFamily":
        return cls("convex")

    @classmethod
    def uniform(cls, c: float, b1_abs: float = 0.0) -> "BoundFamily":
        return cls("uniform", float(c), float(b1_abs))

    @property
    def b1(self) -> float:
        return self.b1_abs if self.kind == "uniform" else 0.0

    def bounds(self, n: int) -> tuple[float, float]:
        """Split per-index bounds; undefined for the uniform (combined) kind."""
        if self.kind == "koebe":
            return koebe_bounds(n)
        if self.kind == "convex":
            return convex_bounds(n)
        raise ValueError("uniform family has only a combined bound; use combined(n)")

    def combined(self, n: int) -> float:
        """The bound on |a_n| + |b_n| at index n."""
        _require_index(n, 1, "bound")
        if self.kind == "uniform":
            return self.b1_abs if n == 1 else self.c
        an, bn = self.bounds(n)
        return an + bn


# ---------------------------------------------------------------------------
# Closed-form power sums and the weighted sum S(r)
# ---------------------------------------------------------------------------

def power_sums(r: float) -> tuple[float, float, float]:
    """Closed forms of the three power sums driving the family radii.

    Returns (sum n r^n, sum n^2 r^n, sum n^3 r^(n-1)) over n >= 1:

        r/(1-r)^2,   r(1+r)/(1-r)^3,   ((1-r)(1+2r) + 3r(1+r))/(1-r)^4.

    Raises:
        ValueError: if r is outside [0, 1).
    """
    if not (0.0 <= r < 1.0):
        raise ValueError(f"r must lie in [0, 1), got {r}")
    one = 1.0 - r
    s1 = r / one**2
    s2 = r * (1.0 + r) / one**3
    s3 = (one * (1.0 + 2.0 * r) + 3.0 * r * (1.0 + r)) / one**4
    return s1, s2, s3


def _family_sum(fam: BoundFamily, r: float) -> float:
    if fam.kind == "koebe":
        # S(r) = sum_{n>=2} n(2n^2+1)/3 r^(n-1), assembled from the closed sums.
        _, _, s3 = power_sums(r)
        t1 = 1.0 / (1.0 - r) ** 2          # sum_{n>=1} n r^(n-1)
        return (2.0 * (s3 - 1.0) + (t1 - 1.0)) / 3.0
    if fam.kind == "convex":
        # S(r) = sum_{n>=2} n^2 r^(n-1)
        return (1.0 + r) / (1.0 - r) ** 3 - 1.0
    # uniform: S(r) = |b_1| + c (1/(1-r)^2 - 1)
    return fam.b1_abs + fam.c * (1.0 / (1.0 - r) ** 2 - 1.0)


def _tail_sum(degree: float, start: int, r: float) -> float:
    """Upper bound for sum_{n>=start} n^(degree+1) r^(n-1), 0 <= r <= TAIL_EVAL_MAX.

    Sums terms directly and closes with a geometric remainder bound once the
    term ratio has dropped below 1, so the result is a true majorant.
    """
    if r == 0.0:
        return 0.0 if start > 1 else 1.0
    p = degree + 1.0
    total = 0.0
    n = start
    term = n**p * r ** (n - 1)
    # Ratio ((n+1)/n)^p * r is eventually < 1 and decreasing; with the 0.999
    # cap this loop is bounded by a few tens of thousands of iterations.
    while True:
        total += term
        n += 1
        ratio = (n / (n - 1)) ** p * r
        term *= ratio
        if ratio < 1.0 and term <= 1e-18 * total:
            total += term / (1.0 - ratio)  # geometric remainder majorant
            return total
        if n - start > 10_000_000:  # pragma: no cover - defensive cap
            raise RuntimeError("tail majorant failed to converge")


def weighted_sum_tail(seq: CoefficientSeq, r: float) -> float:
    """Rigorous majorant of the unstored part of S(r); zero when tail is None."""
    if seq.tail is None:
        return 0.0
    if not (0.0 <= r < 1.0):
        raise ValueError(f"r must lie in [0, 1), got {r}")
    if r > TAIL_EVAL_MAX:
        raise ValueError(
            f"tail majorant is evaluated only for r <= {TAIL_EVAL_MAX}"
        )
    return seq.tail.constant * _tail_sum(seq.tail.degree, seq.truncation + 1, r)


def _combined_abs(seq: CoefficientSeq) -> dict[int, float]:
    """|a_n| + |b_n| keyed by index n >= 2, ascending."""
    combined: dict[int, float] = {}
    for n, v in seq.a.items():
        combined[n] = combined.get(n, 0.0) + abs(v)
    for n, v in seq.b.items():
        if n >= 2:
            combined[n] = combined.get(n, 0.0) + abs(v)
    return dict(sorted(combined.items()))


def _stored_sum(seq: CoefficientSeq, r: float) -> float:
    terms = [abs(seq.b1)] if 1 in seq.b else []
    # ascending index, exact (Shewchuk) accumulation via fsum
    terms.extend(n * c * r ** (n - 1) for n, c in _combined_abs(seq).items())
    return math.fsum(terms)


def weighted_sum(x: CoefficientSeq | BoundFamily, r: float) -> float:
    """S(r) = |b_1| + sum_{n>=2} n(|a_n| + |b_n|) r^(n-1).

    Bound families are evaluated by their closed forms.  Explicit sequences
    are summed term by term with compensated accumulation; when a tail bound
    is attached the returned value includes its majorant and is therefore a
    rigorous upper bound (the majorant alone is weighted_sum_tail).

    Raises:
        ValueError: if r lies outside [0, 1).
    """
    if not (0.0 <= r < 1.0):
        raise ValueError(f"r must lie in [0, 1), got {r}")
    if isinstance(x, BoundFamily):
        return _family_sum(x, r)
    if isinstance(x, CoefficientSeq):
        return _stored_sum(x, r) + weighted_sum_tail(x, r)
    raise TypeError(f"expected CoefficientSeq or BoundFamily, got {type(x).__name__}")


def weighted_sum_limit(seq: CoefficientSeq) -> float:
    """The limit S(1^-) = |b_1| + sum n(|a_n| + |b_n|) for an explicit sequence.

    With a polynomial tail the limit exists only for degree < -2, in which
    case the majorant sum_{n>N} C n^(degree+1) is evaluated via the Hurwitz
    zeta function.

    Raises:
        ValueError: if a tail bound is attached whose limit diverges.
    """
    if not isinstance(seq, CoefficientSeq):
        raise TypeError(f"expected CoefficientSeq, got {type(seq).__name__}")
    terms = [abs(seq.b1)] if 1 in seq.b else []
    terms.extend(n * c for n, c in _combined_abs(seq).items())
    total = math.fsum(terms)
    if seq.tail is not None and seq.tail.constant > 0.0:
        s = -(seq.tail.degree + 1.0)
        if s <= 1.0:
            raise ValueError(
                "polynomial tail with degree >= -2 has no finite S(1^-)"
            )
        from scipy.special import zeta

        total += seq.tail.constant * float(zeta(s, seq.truncation + 1))
    return total


# ---------------------------------------------------------------------------
# JSON sequence format
# ---------------------------------------------------------------------------

def _entries_to_map(entries, low: int, what: str) -> dict[int, complex]:
    out: dict[int, complex] = {}
    last = low - 1
    for item in entries:
        if not (isinstance(item, (list, tuple)) and len(item) == 3):
            raise ValueError(f"{what} entries must be [n, re, im] triples")
        n, re, im = item
        n = _require_index(int(n), low, what)
        if n in out:
            raise ValueError(f"duplicate {what} index {n}")
        if n <= last:
            raise ValueError(f"{what} indices must be strictly increasing")
        last = n
        out[n] = complex(float(re), float(im))
    return out


def sequence_from_dict(doc: dict) -> CoefficientSeq:
    """Build a CoefficientSeq from the documented JSON structure.

    Expected shape::

        {"a": [[n, re, im], ...], "b": [[n, re, im], ...], "truncation": N}

    with strictly increasing indices in each list.  An optional "tail"
    object {"degree": d, "constant": C} attaches a polynomial tail bound.
    """
    if not isinstance(doc, dict):
        raise ValueError("sequence document must be a JSON object")
    unknown = set(doc) - {"a", "b", "truncation", "tail"}
    if unknown:
        raise ValueError(f"unknown sequence fields: {sorted(unknown)}")
    if "truncation" not in doc:
        raise ValueError("sequence document needs a truncation field")
    a = _entries_to_map(doc.get("a", []), 2, "a")
    b = _entries_to_map(doc.get("b", []), 1, "b")
    tail = None
    if doc.get("tail") is not None:
        t = doc["tail"]
        tail = TailBound(float(t["degree"]), float(t["constant"]))
    return CoefficientSeq(a, b, int(doc["truncation"]), tail)


def sequence_to_dict(seq: CoefficientSeq) -> dict:
    doc: dict = {
        "a": [[n, v.real, v.imag] for n, v in seq.a.items()],
        "b": [[n, v.real, v.imag] for n, v in seq.b.items()],
        "truncation": seq.truncation,
    }
    if seq.tail is not None:
        doc["tail"] = {"degree": seq.tail.degree, "constant": seq.tail.constant}
    return doc


def load_sequence(path) -> CoefficientSeq:
    with open(path, "r", encoding="utf-8") as fh:
        return sequence_from_dict(json.load(fh))


def save_sequence(seq: CoefficientSeq, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(sequence_to_dict(seq), fh, indent=2, sort_keys=True)
        fh.write("\n")
