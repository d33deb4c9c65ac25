"""Harmonic mappings of the unit disk, f = h + conj(g).

A HarmonicMap is backed either by an explicit coefficient sequence
(evaluated as polynomials) or by closed-form expressions for h, g and
their derivatives.  Both backings support evaluation, the two Wirtinger
derivatives f_z = h' and f_zbar = conj(g'), the Jacobian |h'|^2 - |g'|^2,
the second complex dilatation g'/h', dilation f_r(z) = f(rz)/r, and
(where coefficients are available) truncation to partial sums.

All evaluators accept scalars or numpy arrays and are pure; maps are
immutable once constructed.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly

from .coefficients import CoefficientSeq

__all__ = [
    "EPS_EVAL",
    "SERIES_EVAL_MAX",
    "EvaluationDomainError",
    "UnsupportedOperation",
    "ClosedForm",
    "HarmonicMap",
    "identity_map",
]

# Series evaluation refuses |z| > 1 - EPS_EVAL: polynomially growing
# coefficient families make truncation error controllable only away from
# the boundary.
EPS_EVAL = 1e-3
SERIES_EVAL_MAX = 1.0 - EPS_EVAL

_NORM_TOL = 1e-14


class EvaluationDomainError(ValueError):
    """Raised when an evaluation point falls outside the trusted domain."""


class UnsupportedOperation(RuntimeError):
    """Raised when an operation needs a backing the map does not have."""


@dataclass(frozen=True)
class ClosedForm:
    """Hand-coded evaluators for h, g and their derivatives.

    coeff, when present, returns the exact series coefficients (a_n, b_n)
    for n >= 1 and makes the map sectionable.
    """

    h: Callable
    g: Callable
    dh: Callable
    dg: Callable
    coeff: Callable | None = None


def _split_scalar(z):
    arr = np.asarray(z, dtype=complex)
    return arr, arr.ndim == 0


class HarmonicMap:
    """A normalized harmonic mapping f = h + conj(g) on the unit disk."""

    def __init__(self, label: str, *, series: CoefficientSeq | None = None,
                 forms: ClosedForm | None = None, scale: float = 1.0):
        if (series is None) == (forms is None):
            raise ValueError("exactly one of series/forms must be given")
        if not (0.0 < scale <= 1.0):
            raise ValueError("scale must lie in (0, 1]")
        self.label = str(label)
        self._series = series
        self._forms = forms
        self._scale = float(scale)
        if series is not None:
            n = series.truncation
            ch = np.zeros(max(n + 1, 2), dtype=complex)
            cg = np.zeros(max(n + 1, 2), dtype=complex)
            ch[1] = 1.0
            for k, v in series.a.items():
                ch[k] = v
            for k, v in series.b.items():
                cg[k] = v
            self._ch, self._cg = ch, cg
            self._dch, self._dcg = npoly.polyder(ch), npoly.polyder(cg)
        self._check_normalization()

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_series(cls, seq: CoefficientSeq, label: str = "series") -> "HarmonicMap":
        return cls(label, series=seq)

    @classmethod
    def from_closed_form(cls, label: str, h, g, dh, dg, coeff=None) -> "HarmonicMap":
        return cls(label, forms=ClosedForm(h, g, dh, dg, coeff))

    # -- internals ---------------------------------------------------------

    def _check_normalization(self) -> None:
        h0, g0 = self._parts_raw(np.asarray(0j))
        dh0, dg0 = self._derivs_raw(np.asarray(0j))
        if abs(h0) > _NORM_TOL or abs(g0) > _NORM_TOL:
            raise ValueError(f"{self.label}: normalization f(0)=0 fails")
        if abs(dh0 - 1.0) > _NORM_TOL:
            raise ValueError(f"{self.label}: normalization h'(0)=1 fails")
        if abs(dg0) >= 1.0:
            raise ValueError(f"{self.label}: |g'(0)| must be < 1")

    def _guard(self, arr: np.ndarray) -> np.ndarray:
        mod = np.abs(arr)
        if self._series is not None:
            if np.any(mod > SERIES_EVAL_MAX * (1.0 + 1e-12)):
                raise EvaluationDomainError(
                    f"series evaluation requires |z| <= {SERIES_EVAL_MAX}"
                )
        elif np.any(mod >= 1.0):
            raise EvaluationDomainError("evaluation requires |z| < 1")
        return arr * self._scale

    def _parts_raw(self, w: np.ndarray):
        if self._series is not None:
            return npoly.polyval(w, self._ch), npoly.polyval(w, self._cg)
        return self._forms.h(w), self._forms.g(w)

    def _derivs_raw(self, w: np.ndarray):
        if self._series is not None:
            return npoly.polyval(w, self._dch), npoly.polyval(w, self._dcg)
        return self._forms.dh(w), self._forms.dg(w)

    # -- evaluation --------------------------------------------------------

    def __call__(self, z):
        """f(z) = h(z) + conj(g(z)), broadcasting over array input."""
        arr, scalar = _split_scalar(z)
        h, g = self._parts_raw(self._guard(arr))
        val = (h + np.conj(g)) / self._scale
        return complex(val) if scalar else val

    def analytic_parts(self, z):
        """The pair (h(z), g(z))."""
        arr, scalar = _split_scalar(z)
        h, g = self._parts_raw(self._guard(arr))
        h, g = h / self._scale, g / self._scale
        return (complex(h), complex(g)) if scalar else (h, g)

    def wirtinger(self, z):
        """The Wirtinger derivatives (f_z, f_zbar) = (h'(z), conj(g'(z)))."""
        arr, scalar = _split_scalar(z)
        dh, dg = self._derivs_raw(self._guard(arr))
        fzbar = np.conj(dg)
        return (complex(dh), complex(fzbar)) if scalar else (dh, fzbar)

    def jacobian(self, z):
        """J_f(z) = |h'(z)|^2 - |g'(z)|^2.  Positive iff sense-preserving at z."""
        arr, scalar = _split_scalar(z)
        dh, dg = self._derivs_raw(self._guard(arr))
        val = np.abs(dh) ** 2 - np.abs(dg) ** 2
        return float(val) if scalar else val

    def dilatation(self, z):
        """Second complex dilatation g'(z)/h'(z).

        Raises:
            ZeroDivisionError: if |h'(z)| <= 1e-14 at any requested point.
        """
        arr, scalar = _split_scalar(z)
        dh, dg = self._derivs_raw(self._guard(arr))
        if np.any(np.abs(dh) <= 1e-14):
            raise ZeroDivisionError(f"{self.label}: h' vanishes at a requested point")
        val = dg / dh
        return complex(val) if scalar else val

    # -- structure ---------------------------------------------------------

    @property
    def is_series(self) -> bool:
        return self._series is not None

    @property
    def has_coefficients(self) -> bool:
        return self._series is not None or self._forms.coeff is not None

    def coefficient(self, n: int) -> tuple[complex, complex]:
        """The series coefficients (a_n, b_n); a_1 is 1 by normalization.

        Raises:
            UnsupportedOperation: closed-form backing without a coefficient rule.
        """
        if n < 1:
            raise ValueError("coefficient index must be >= 1")
        if self._series is not None:
            a = 1.0 + 0j if n == 1 else self._series.a.get(n, 0j)
            b = self._series.b.get(n, 0j)
        elif self._forms.coeff is not None:
            a, b = self._forms.coeff(n)
            a, b = complex(a), complex(b)
        else:
            raise UnsupportedOperation(
                f"{self.label}: closed-form map without stored coefficients"
            )
        s = self._scale ** (n - 1)
        return a * s, b * s

    def dilate(self, r: float) -> "HarmonicMap":
        """The dilated map f_r(z) = f(rz)/r; series coefficients pick up r^(n-1)."""
        if not (0.0 < r <= 1.0):
            raise ValueError("dilation parameter must lie in (0, 1]")
        if r == 1.0:
            return self
        out = HarmonicMap.__new__(HarmonicMap)
        out.label = f"dilate({self.label},{r:g})"
        out._series = self._series
        out._forms = self._forms
        out._scale = self._scale * r
        if self._series is not None:
            out._ch, out._cg = self._ch, self._cg
            out._dch, out._dcg = self._dch, self._dcg
        return out

    def section(self, n: int, m: int) -> "HarmonicMap":
        """Partial sums: h truncated at degree n, g at degree m.

        Args:
            n: highest retained h index, n >= 1.
            m: highest retained g index, m >= 0 (0 drops g entirely).

        Raises:
            UnsupportedOperation: no coefficient backing to truncate.
        """
        if n < 1 or m < 0:
            raise ValueError("section degrees require n >= 1, m >= 0")
        if not self.has_coefficients:
            raise UnsupportedOperation(
                f"{self.label}: closed-form map without stored coefficients"
            )
        if self._series is not None:
            hi_a = min(n, self._series.truncation)
            hi_b = min(m, self._series.truncation)
            a = {k: self.coefficient(k)[0] for k in self._series.a if k <= hi_a}
            b = {k: self.coefficient(k)[1] for k in self._series.b if k <= hi_b}
        else:
            a = {k: self.coefficient(k)[0] for k in range(2, n + 1)}
            b = {k: self.coefficient(k)[1] for k in range(1, m + 1)}
            a = {k: v for k, v in a.items() if v != 0}
            b = {k: v for k, v in b.items() if v != 0}
        seq = CoefficientSeq(a, b, max(1, n, m))
        return HarmonicMap.from_series(seq, f"section({self.label},{n},{m})")

    def as_sequence(self) -> CoefficientSeq:
        """The stored coefficient sequence (dilation folded in).

        Raises:
            UnsupportedOperation: for closed-form backings; use section to
                materialize a finite prefix instead.
        """
        if self._series is None:
            raise UnsupportedOperation(
                f"{self.label}: closed-form map has no finite coefficient sequence"
            )
        return self._series.scaled(self._scale)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        kind = "series" if self.is_series else "closed_form"
        return f"HarmonicMap({self.label!r}, {kind}, scale={self._scale:g})"


def identity_map() -> HarmonicMap:
    """f(z) = z, the trivial member of every class considered here."""
    return HarmonicMap.from_series(CoefficientSeq({}, {}, 1), "identity")
