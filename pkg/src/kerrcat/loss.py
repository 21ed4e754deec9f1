"""Loss and thermal-noise models for the transfer-based protocol variant.

In this variant the oscillator state is swapped through a lossy electrical
circuit, kicked by the force, and swapped back. The model has three layers:

* **Transfer parameters** — the swap frequency ``nu = sqrt(g^2 - (kappa+gamma)^2/16)``,
  the swap duration ``T_swap = pi/nu``, the amplitude decay ``xi = exp(-Gamma*T_swap)``
  with ``Gamma = (kappa+gamma)/4``, and the per-Kerr-stage amplitude survival
  ``eta = exp(-kappa*tau_kerr/2)`` with ``tau_kerr = pi/(2*lambda_kerr)``.
* **Momentum-kick statistics** — the force and the thermal bath enter as a
  Gaussian kick ``delta_prime`` whose mean is a filtered integral of the force
  over one swap and whose variance is proportional to ``2*n_bar + 1``.
* **Quantum trajectories** — no-emission evolution uses the contraction
  ``W(theta) = kerr_unitary(theta) * exp(-kappa*t*n/2)``; detecting no photon
  in the transfer line is the single-mode contraction ``xi^n`` followed by the
  displacement ``+i*delta_prime``; a single emission inserts the lowering
  operator at the emission time.

Conventions fixed here and relied on everywhere else:

* The full no-emission pipeline is ``W(pi/2)``, then conditional transfer,
  then a second *forward* ``W(pi/2)`` stage. At zero kick the output mean
  quadrature is exactly ``-xi*eta^2*alpha``.
* All closed forms (``mean_X_lossy``) describe the state *conditioned on
  detecting no emitted photon*; unconditional (traced) evolution suppresses
  the interference much more strongly and is not what these formulas model.
* The transfer displacement is ``+i*delta_prime`` (it adds ``+i*delta_prime``
  to a coherent amplitude), opposite in sense to the ideal pipeline's kick.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.constants import hbar, k as k_boltzmann
from scipy.integrate import IntegrationWarning, quad

from kerrcat._coherent import lossy_pipeline, mean_x
from kerrcat.fock import (
    FockOperator,
    FockVector,
    coherent_state,
    default_truncation,
    force_kick,
    kerr_unitary,
    ladder_ops,
)

__all__ = [
    "LossParams",
    "KickStats",
    "OverdampedTransferError",
    "swap_parameters",
    "thermal_occupation",
    "momentum_kick_stats",
    "loss_channel",
    "lossy_kerr_propagator",
    "single_emission_state",
    "run_lossy_trajectory",
    "mean_X_lossy",
    "mean_X_lossy_linearized",
    "emission_probability",
    "full_signal",
    "lossy_offset",
]

#: Largest per-mode dimension for which two-mode (N^2 x N^2) operators are
#: considered desk-scale.
MAX_TWO_MODE_DIM = 32


class OverdampedTransferError(ValueError):
    """The transfer is overdamped: ``g <= (kappa+gamma)/4`` gives no swap."""


def swap_parameters(kappa: float, gamma: float, g: float) -> tuple[float, float, float, float]:
    """Derived transfer quantities ``(nu, T_swap, Gamma, xi)``.

    ``nu = sqrt(g^2 - (kappa+gamma)^2/16)`` is the swap frequency,
    ``T_swap = pi/nu`` the duration of one full swap, ``Gamma = (kappa+gamma)/4``
    the amplitude decay rate during the swap, and ``xi = exp(-Gamma*T_swap)``
    the amplitude surviving one swap.

    Raises
    ------
    OverdampedTransferError
        If ``g <= (kappa+gamma)/4`` (no oscillatory swap exists).
    """
    if kappa < 0.0 or gamma < 0.0 or g <= 0.0:
        raise ValueError("rates must satisfy kappa >= 0, gamma >= 0, g > 0")
    big_gamma = (kappa + gamma) / 4.0
    if g <= big_gamma:
        raise OverdampedTransferError(
            f"overdamped transfer: g = {g:g} rad/s does not exceed (kappa+gamma)/4 = {big_gamma:g} rad/s"
        )
    nu = math.sqrt(g * g - big_gamma * big_gamma)
    t_swap = math.pi / nu
    xi = math.exp(-big_gamma * t_swap)
    return nu, t_swap, big_gamma, xi


def thermal_occupation(omega_m: float, temp: float) -> float:
    """Bose-Einstein occupation ``1/(exp(hbar*omega/(k*T)) - 1)``.

    ``temp = 0`` returns exactly 0. Monotone increasing in ``temp``.
    """
    if omega_m <= 0.0:
        raise ValueError("omega_m must be strictly positive")
    if temp < 0.0:
        raise ValueError("temperature must be non-negative")
    if temp == 0.0:
        return 0.0
    return 1.0 / math.expm1(hbar * omega_m / (k_boltzmann * temp))


@dataclass(frozen=True)
class LossParams:
    """Rates of the lossy transfer model, with derived quantities.

    Attributes
    ----------
    kappa : float
        Combined electrical loss rate (rad/s).
    gamma : float
        Mechanical damping rate (rad/s).
    g : float
        Transfer (swap) coupling rate (rad/s).
    omega_m : float
        Mechanical angular frequency (rad/s).
    lambda_kerr : float
        Kerr rate (rad/s); one Kerr stage lasts ``tau_kerr = pi/(2*lambda_kerr)``.
    temp : float
        Ambient temperature (kelvin).

    Derived (computed once at construction)
    ---------------------------------------
    nu, T_swap, Gamma, xi : swap quantities, see ``swap_parameters``.
    tau_kerr : duration of one Kerr stage (s).
    eta : amplitude surviving one Kerr stage, ``exp(-kappa*tau_kerr/2)``.
    n_bar : thermal occupation at ``(omega_m, temp)``.
    """

    kappa: float
    gamma: float
    g: float
    omega_m: float
    lambda_kerr: float
    temp: float = 0.0
    nu: float = field(init=False)
    T_swap: float = field(init=False)
    Gamma: float = field(init=False)
    xi: float = field(init=False)
    tau_kerr: float = field(init=False)
    eta: float = field(init=False)
    n_bar: float = field(init=False)

    def __post_init__(self) -> None:
        if self.omega_m <= 0.0:
            raise ValueError("omega_m must be strictly positive")
        if self.lambda_kerr <= 0.0:
            raise ValueError("lambda_kerr must be strictly positive")
        nu, t_swap, big_gamma, xi = swap_parameters(self.kappa, self.gamma, self.g)
        tau = math.pi / (2.0 * self.lambda_kerr)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "T_swap", t_swap)
        object.__setattr__(self, "Gamma", big_gamma)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "tau_kerr", tau)
        object.__setattr__(self, "eta", math.exp(-self.kappa * tau / 2.0))
        object.__setattr__(self, "n_bar", thermal_occupation(self.omega_m, self.temp))


@dataclass(frozen=True)
class KickStats:
    """Gaussian model of the momentum kick accumulated during one swap.

    ``mean`` is the deterministic part contributed by the force; ``variance``
    is the thermal-plus-vacuum part, proportional to ``2*n_bar + 1``.
    """

    mean: float
    variance: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.mean) or not math.isfinite(self.variance):
            raise ValueError("kick statistics must be finite")
        if self.variance < 0.0:
            raise ValueError("variance must be non-negative")

    @property
    def std(self) -> float:
        """Standard deviation of the kick."""
        return math.sqrt(self.variance)


def _quad_strict(integrand: Callable[[float], float], a: float, b: float) -> float:
    """Adaptive quadrature that raises instead of silently degrading."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, _ = quad(integrand, a, b, limit=800, epsabs=1e-14, epsrel=1e-11)
        except IntegrationWarning as exc:
            raise RuntimeError(f"kick quadrature did not converge: {exc}") from exc
    return value


def momentum_kick_stats(force_fn: Callable[[float], float], lp: LossParams) -> KickStats:
    """Mean and variance of the dimensionless kick gathered during one swap.

    The force enters through the swap filter:
    ``mean = Re INT_0^{T_swap} sin(nu*s) * exp(i*omega*s) * f(s) ds``,
    where ``f`` is the scaled force ``sqrt(2)*F(t)/sqrt(hbar*omega*m)``.
    The bath enters as white noise with correlation strength ``2*n_bar + 1``
    (the ``+1`` is the vacuum port, present even at zero temperature):
    ``variance = (2*n_bar + 1) * INT_0^{T_swap} sin^2(nu*s) * cos^2(omega*s) ds``.

    Both integrals are evaluated by adaptive quadrature; a convergence
    failure raises ``RuntimeError``.
    """
    nu, omega, t_swap = lp.nu, lp.omega_m, lp.T_swap

    def mean_integrand(s: float) -> float:
        return (math.sin(nu * s) * complex(force_fn(s)) * complex(math.cos(omega * s), math.sin(omega * s))).real

    def var_integrand(s: float) -> float:
        sv = math.sin(nu * s) * math.cos(omega * s)
        return sv * sv

    mean = _quad_strict(mean_integrand, 0.0, t_swap)
    variance = (2.0 * lp.n_bar + 1.0) * _quad_strict(var_integrand, 0.0, t_swap)
    return KickStats(mean=mean, variance=variance)


def loss_channel(lp: LossParams, delta_prime: float, N: int) -> FockOperator:
    """Unitary transfer channel on system (x) auxiliary, both of dimension ``N``.

    The channel is a beam splitter with mixing angle ``arccos(xi)`` between
    the system and an auxiliary mode (which starts in vacuum and collects the
    emitted field), followed by the displacement ``+i*delta_prime`` on the
    system. With the auxiliary in vacuum the induced map on the system
    amplitude is ``a -> xi*a + i*delta_prime``, and second moments match a
    beam splitter of transmissivity ``xi^2``.

    Basis ordering: index ``i*N + j`` is system level ``i``, auxiliary level
    ``j`` (``numpy.kron`` convention with the system factor first).
    """
    if N > MAX_TWO_MODE_DIM:
        raise ValueError(
            f"two-mode operator of per-mode dimension {N} exceeds the desk-scale bound {MAX_TWO_MODE_DIM}"
        )
    a, _, _ = ladder_ops(N)
    eye = np.eye(N)
    big_a = np.kron(a.entries, eye)
    big_c = np.kron(eye, a.entries)
    generator = 1j * (big_a @ big_c.conj().T - big_a.conj().T @ big_c)
    theta_bs = math.acos(min(lp.xi, 1.0))
    evals, evecs = np.linalg.eigh(generator)
    splitter = (evecs * np.exp(-1j * theta_bs * evals)) @ evecs.conj().T
    displace = np.kron(force_kick(-delta_prime, N).entries, eye)
    return FockOperator(displace @ splitter, N * N, "unitary")


def lossy_kerr_propagator(theta: float, lp: LossParams, N: int) -> FockOperator:
    """No-emission Kerr propagator ``W(theta) = U(theta) * exp(-kappa*t*n/2)``.

    ``theta`` is the accumulated Kerr angle ``lambda_kerr * t``; the decay
    factor uses the corresponding duration ``t = theta/lambda_kerr``. The
    squared norm of ``W|psi>`` is the probability that no photon was emitted
    during the stage.
    """
    t = theta / lp.lambda_kerr
    levels = np.arange(N)
    decay = np.exp(-lp.kappa * t * levels / 2.0)
    entries = kerr_unitary(theta, N).entries * decay[np.newaxis, :]
    kind = "unitary" if lp.kappa * t == 0.0 else "contraction"
    return FockOperator(entries, N, kind)


def single_emission_state(
    t_emit: float,
    theta_total: float,
    alpha0: complex,
    lp: LossParams,
    N: int | None = None,
) -> tuple[FockVector, float]:
    """State after one photon emission at ``t_emit`` during a Kerr stage.

    Evolves ``|alpha0>`` with the no-emission propagator up to ``t_emit``,
    applies the lowering operator (the emission), then continues the
    no-emission evolution until the stage (total angle ``theta_total``,
    duration ``theta_total/lambda_kerr``) is complete. Returns the normalized
    state and its squared pre-normalization norm, which is the trajectory
    weight density in ``t_emit`` (up to the constant emission-rate factor
    ``kappa``).
    """
    if N is None:
        N = default_truncation(alpha0)
    t_total = theta_total / lp.lambda_kerr
    if not 0.0 <= t_emit <= t_total:
        raise ValueError("t_emit must lie within the stage duration")
    a, _, _ = ladder_ops(N)
    before = lossy_kerr_propagator(lp.lambda_kerr * t_emit, lp, N)
    after = lossy_kerr_propagator(theta_total - lp.lambda_kerr * t_emit, lp, N)
    psi = after @ (a @ (before @ coherent_state(alpha0, N)))
    weight = psi.norm**2
    if weight <= 0.0:
        raise ValueError("emission from this state has zero probability (vacuum input)")
    return psi.normalized(), weight


def _transfer_no_emission(lp: LossParams, delta_prime: float, N: int) -> FockOperator:
    """Single-mode no-emission transfer: ``xi^n`` then displacement ``+i*delta_prime``."""
    damp = FockOperator(np.diag(lp.xi ** np.arange(N)).astype(complex), N, "contraction")
    return force_kick(-delta_prime, N) @ damp


def run_lossy_trajectory(
    alpha0: complex,
    delta_prime: float,
    lp: LossParams,
    t_emit: float | None = None,
    N: int | None = None,
) -> FockVector:
    """Final normalized state of one trajectory of the full lossy pipeline.

    The pipeline is: first Kerr stage ``W(pi/2)`` (optionally interrupted by
    a single photon emission at ``t_emit`` within ``[0, tau_kerr]``), the
    no-emission transfer (``xi^n`` then displacement ``+i*delta_prime``),
    and a second forward Kerr stage ``W(pi/2)``. ``t_emit=None`` selects the
    emission-free trajectory. Normalization implements conditioning on the
    recorded emission pattern.
    """
    if N is None:
        N = default_truncation(alpha0)
    half_turn = math.pi / 2.0
    psi = coherent_state(alpha0, N)
    if t_emit is None:
        psi = lossy_kerr_propagator(half_turn, lp, N) @ psi
    else:
        if not 0.0 <= t_emit <= lp.tau_kerr:
            raise ValueError("t_emit must lie within the first Kerr stage")
        a, _, _ = ladder_ops(N)
        psi = lossy_kerr_propagator(lp.lambda_kerr * t_emit, lp, N) @ psi
        psi = a @ psi
        psi = lossy_kerr_propagator(half_turn - lp.lambda_kerr * t_emit, lp, N) @ psi
    psi = _transfer_no_emission(lp, delta_prime, N) @ psi
    psi = lossy_kerr_propagator(half_turn, lp, N) @ psi
    if psi.norm == 0.0:
        raise ValueError("trajectory has zero probability")
    return psi.normalized()


def mean_X_lossy(alpha: float, delta_prime: float, lp: LossParams) -> float:
    """Mean quadrature of the lossy pipeline, conditioned on no emission.

    Evaluated exactly from the coherent-branch algebra of the pipeline
    (four Gaussian overlap terms), so it tracks the brute-force two-mode
    model to numerical precision. At ``delta_prime = 0`` it equals
    ``-xi*eta^2*alpha`` exactly. Warns when ``kappa*tau_kerr > 0.3``, where
    the weak-loss reading of the model is no longer meaningful.
    """
    if lp.kappa * lp.tau_kerr > 0.3:
        warnings.warn(
            "loss per Kerr stage is large (kappa*tau_kerr > 0.3); the weak-loss model is unreliable",
            stacklevel=2,
        )
    coeffs, amps = lossy_pipeline(alpha, delta_prime, lp.eta, lp.xi)
    return mean_x(coeffs, amps)


def mean_X_lossy_linearized(alpha: float, delta_prime: float, lp: LossParams) -> float:
    """Small-kick linearization of the lossy mean at the offset working point.

    Returns ``-xi*eta^2*alpha*(4*eta^2*alpha*delta_prime) - eta*delta_prime``.
    This traditional approximate form drops the transfer factor ``xi`` from
    the interference phase, so its slope can overestimate the exact one by
    tens of percent at strong transfer loss; it is exact as loss vanishes.
    """
    eta, xi = lp.eta, lp.xi
    return -xi * eta**2 * alpha * (4.0 * eta**2 * alpha * delta_prime) - eta * delta_prime


def emission_probability(alpha: float, lp: LossParams) -> float:
    """Probability ``P = pi*kappa*alpha^2/lambda_kerr`` of an emission.

    Identical to ``2*kappa*tau_kerr*alpha^2`` (two Kerr stages of duration
    ``tau_kerr = pi/(2*lambda_kerr)`` each). Valid as a probability only while
    small; a warning is emitted above 0.5.
    """
    p = math.pi * lp.kappa * alpha * alpha / lp.lambda_kerr
    if p > 0.5:
        warnings.warn(
            "emission probability exceeds 0.5; the single-emission model is unreliable",
            stacklevel=2,
        )
    return p


def full_signal(alpha: float, delta_prime: float, lp: LossParams) -> float:
    """Closed-form end-to-end signal estimate ``S`` for a kick ``delta_prime``.

    ``S = 2*alpha_eff*[1 + eta/(xi*(2*alpha_eff)^2)]*(1 - P)*delta_prime``
    with ``alpha_eff = eta^2*alpha`` and ``P`` the emission probability.
    This is the traditional linearized budget: amplitude contraction,
    interference-phase gain, and emission dephasing. Like
    ``mean_X_lossy_linearized`` it omits ``xi`` from the phase gain, so it is
    optimistic at strong transfer loss; Monte Carlo prediction columns use
    the exact engine instead. Sign conventions follow the historical form;
    measured slopes share the magnitude.
    """
    alpha_eff = lp.eta**2 * alpha
    p = emission_probability(alpha, lp)
    gain = 1.0 + lp.eta / (lp.xi * (2.0 * alpha_eff) ** 2)
    return 2.0 * alpha_eff * gain * (1.0 - p) * delta_prime


def lossy_offset(alpha: float, lp: LossParams) -> float:
    """Kick offset that makes the zero-force coin fair in the lossy pipeline.

    The conditional pipeline's interference phase is
    ``2*xi*eta*alpha*(1 + eta^2)*delta_prime``; the offset
    ``-pi/(4*xi*eta*alpha*(1 + eta^2))`` sets it to ``-pi/2``, placing the
    working point on the steepest slope. As loss vanishes this tends to
    ``-pi/(8*alpha)``; the sign is opposite to the ideal pipeline's offset
    because the transfer displaces by ``+i*delta_prime`` while the ideal kick
    displaces by ``-i*delta``. With these choices the measured signal slope
    has the same sign in both modes.
    """
    if alpha == 0.0:
        raise ValueError("the offset is undefined at alpha = 0")
    return -math.pi / (4.0 * lp.xi * lp.eta * alpha * (1.0 + lp.eta**2))
