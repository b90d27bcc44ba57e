"""Series evaluation in the unit disk and the regulated summation rule.

The complex sequence c_k of a real function defines the power series
S(z) = sum c_k z**k, convergent on the open unit disk. Writing
z = rho*exp(i*theta), the real part of S is the damped trigonometric sum

    u(rho, theta) = alpha_0/2 + sum rho**k [alpha_k cos(k theta) + beta_k sin(k theta)]

and the imaginary part is the conjugate sum with cos and sin exchanged
(cos -> sin, sin -> -cos). Taking rho -> 1 from below recovers the
function at every angle where the boundary behavior is regular, even when
the plain (rho = 1) trigonometric series diverges. ``rho_limit`` realizes
that limit along a finite radius schedule and reports convergence
empirically; it does not classify the boundary singularity at the probed
angle.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .coeffs import FourierCoefficients, TaylorCoefficients
from .errors import EvaluationError, TruncationWarning
from .quadrature import compensated_sum

TWO_PI = 2.0 * math.pi

_POLE_TOL = 1e-12


def _wrap_angle(theta: float) -> float:
    """Map an angle into [-pi, pi)."""
    t = math.remainder(float(theta), TWO_PI)
    return -math.pi if t >= math.pi else t


@dataclass(frozen=True)
class PolarPoint:
    """A point rho*exp(i*theta) given in polar form, theta in [-pi, pi)."""

    rho: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.rho) and self.rho >= 0.0):
            raise ValueError(f"rho must be finite and >= 0, got {self.rho}")
        object.__setattr__(self, "theta", _wrap_angle(self.theta))

    @property
    def z(self) -> complex:
        return self.rho * complex(math.cos(self.theta), math.sin(self.theta))


class InnerAnalytic:
    """A complex function analytic on the open unit disk.

    Instances are callables on complex points (scalars or arrays). The
    ``pole_set`` lists known poles on the closed disk so that contour
    routines can refuse circles through them. ``taylor(K)`` returns the
    coefficients c_0..c_K when the representation knows them.
    """

    label: str = "inner analytic function"
    pole_set: tuple[complex, ...] = ()

    def __call__(self, z):
        raise NotImplementedError

    def taylor(self, K: int) -> TaylorCoefficients:
        raise NotImplementedError(f"{self.label} has no coefficient generator")


class TaylorSeries(InnerAnalytic):
    """Truncated power series sum c_k z**k, evaluated by Horner's scheme."""

    def __init__(self, tc: TaylorCoefficients):
        self.tc = tc
        self.label = f"taylor series (K={tc.K})"

    def __call__(self, z):
        zz = np.asarray(z, dtype=complex)
        out = np.zeros_like(zz)
        for ck in self.tc.c[::-1]:
            out = out * zz + ck
        return complex(out) if zz.ndim == 0 else out

    def taylor(self, K: int) -> TaylorCoefficients:
        c = np.zeros(K + 1, dtype=complex)
        n = min(K, self.tc.K) + 1
        c[:n] = self.tc.c[:n]
        return TaylorCoefficients(c)


class ClosedForm(InnerAnalytic):
    """A closed-form inner analytic function with a declared pole set."""

    def __init__(self, fn, *, pole_set=(), taylor_fn=None, label="closed form"):
        self._fn = fn
        self._taylor_fn = taylor_fn
        self.pole_set = tuple(complex(p) for p in pole_set)
        self.label = label

    def __call__(self, z):
        zz = np.asarray(z, dtype=complex)
        for p in self.pole_set:
            if np.any(np.abs(zz - p) < _POLE_TOL):
                raise EvaluationError(f"{self.label} evaluated at pole {p!r}")
        out = np.asarray(self._fn(zz), dtype=complex)
        return complex(out) if zz.ndim == 0 else out

    def taylor(self, K: int) -> TaylorCoefficients:
        if self._taylor_fn is None:
            return super().taylor(K)
        return self._taylor_fn(K)


@dataclass(frozen=True)
class RhoSchedule:
    """Strictly ascending radii in (0, 1) realizing the rho -> 1 limit."""

    rhos: tuple[float, ...]
    tol: float = 1e-6

    def __post_init__(self):
        r = tuple(float(x) for x in self.rhos)
        if len(r) < 2:
            raise ValueError("schedule needs at least 2 radii")
        if any(not 0.0 < x < 1.0 for x in r):
            raise ValueError("all radii must lie in (0, 1)")
        if any(b <= a for a, b in zip(r, r[1:])):
            raise ValueError("radii must be strictly ascending")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        object.__setattr__(self, "rhos", r)

    @classmethod
    def geometric(cls, j_start: int = 1, j_stop: int = 14, tol: float = 1e-6) -> "RhoSchedule":
        """rho_j = 1 - 2**(-j) for j = j_start..j_stop."""
        if not 1 <= j_start < j_stop:
            raise ValueError("need 1 <= j_start < j_stop")
        return cls(tuple(1.0 - 2.0 ** (-j) for j in range(j_start, j_stop + 1)), tol)


@dataclass(frozen=True)
class RhoLimitResult:
    """Outcome of a radius-schedule evaluation.

    ``converged`` holds when the last two schedule values differ by less
    than the schedule tolerance; non convergence is reported, never
    raised. ``truncation_suspect`` flags radii where the K-term cutoff may
    dominate the tolerance.
    """

    value: float
    converged: bool
    history: tuple[float, ...]
    truncation_suspect: bool = False
    extrapolated: tuple[float, ...] | None = None


def eval_inner(w: InnerAnalytic, p: PolarPoint) -> complex:
    """Value of w at a point strictly inside the unit disk."""
    if p.rho >= 1.0:
        raise ValueError(f"evaluation requires rho < 1, got rho={p.rho}")
    z = p.z
    for pole in w.pole_set:
        if abs(z - pole) < _POLE_TOL:
            raise EvaluationError(f"{w.label} evaluated at pole {pole!r}")
    return complex(w(z))


def _damped_terms(fc: FourierCoefficients, theta: float, rho: float, conjugate: bool):
    k = np.arange(1, fc.K + 1)
    r = rho ** k.astype(float)
    ck, sk = np.cos(k * theta), np.sin(k * theta)
    if conjugate:
        return r * (fc.alpha * sk - fc.beta * ck)
    return r * (fc.alpha * ck + fc.beta * sk)


def regulated_sum(fc: FourierCoefficients, theta: float, rho: float) -> float:
    """alpha_0/2 + sum rho**k [alpha_k cos(k theta) + beta_k sin(k theta)], rho < 1.

    Equals the real part of the power series at (rho, theta). Terms are
    accumulated in ascending k with compensated summation.
    """
    if not 0.0 <= rho < 1.0:
        raise ValueError(f"need 0 <= rho < 1, got {rho}")
    return 0.5 * fc.alpha0 + compensated_sum(_damped_terms(fc, theta, rho, False))


def conjugate_sum(fc: FourierCoefficients, theta: float, rho: float) -> float:
    """sum rho**k [alpha_k sin(k theta) - beta_k cos(k theta)], rho < 1.

    Equals the imaginary part of the power series at (rho, theta); its
    rho -> 1 limit is the Fourier conjugate of the function behind fc.
    """
    if not 0.0 <= rho < 1.0:
        raise ValueError(f"need 0 <= rho < 1, got {rho}")
    return compensated_sum(_damped_terms(fc, theta, rho, True))


def truncation_bound(rho: float, K: int) -> float:
    """rho**(K+1) / (1 - rho), a scale for the discarded tail at radius rho."""
    return rho ** (K + 1) / (1.0 - rho)


def rho_limit(
    fc: FourierCoefficients,
    theta: float,
    sched: RhoSchedule,
    *,
    extrapolate: bool = False,
) -> RhoLimitResult:
    """Evaluate the regulated sum along a radius schedule.

    The returned value is the evaluation at the last radius; the full
    history is kept for diagnostics. With ``extrapolate`` a first order
    Richardson step (valid for schedules that halve 1 - rho) is applied
    and returned alongside, leaving the plain values untouched.
    """
    history = tuple(regulated_sum(fc, theta, r) for r in sched.rhos)
    converged = abs(history[-1] - history[-2]) < sched.tol
    suspect = truncation_bound(sched.rhos[-1], fc.K) > sched.tol
    if suspect:
        warnings.warn(
            f"K={fc.K} truncation bound {truncation_bound(sched.rhos[-1], fc.K):.3g} "
            f"exceeds schedule tol {sched.tol:.3g} at rho={sched.rhos[-1]}",
            TruncationWarning,
            stacklevel=2,
        )
    extrapolated = None
    if extrapolate:
        extrapolated = tuple(
            2.0 * b - a for a, b in zip(history, history[1:])
        )
    return RhoLimitResult(history[-1], converged, history, suspect, extrapolated)


def angular_derivative(tc: TaylorCoefficients) -> TaylorCoefficients:
    """Coefficients of i*z*w'(z): c_k -> i*k*c_k (the theta derivative).

    The result always vanishes at the origin, so it is a proper sequence.
    """
    k = np.arange(tc.K + 1)
    return TaylorCoefficients(1j * k * tc.c)


def angular_primitive(tc: TaylorCoefficients) -> TaylorCoefficients:
    """Inverse of the angular derivative on k >= 1; the k = 0 term is dropped.

    Realizes -i * integral of (w(z') - w(0))/z' from 0 to z, i.e. the
    theta antiderivative with zero mean term.
    """
    c = np.zeros(tc.K + 1, dtype=complex)
    k = np.arange(1, tc.K + 1)
    c[1:] = tc.c[1:] / (1j * k)
    return TaylorCoefficients(c)
