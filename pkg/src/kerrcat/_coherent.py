"""Exact algebra on superpositions of coherent states.

Every stage of the measurement pipeline (Kerr half-periods, impulsive kicks,
beam-splitter attenuation, no-emission amplitude decay) maps a superposition
of coherent states to another such superposition with a closed-form rule for
the coefficients and amplitudes. Tracking the (coefficient, amplitude) pairs
therefore evaluates the pipeline exactly — no truncated-space numerics — and
Gaussian-overlap integrals give means and sign probabilities in closed form.

All functions broadcast: ``coeffs``/``amps`` may carry a trailing batch axis
(shape ``(k,)`` or ``(k, M)``) so a million-shot Monte Carlo batch evaluates
in a handful of vectorized operations.

The relevant identities, with ``|g>`` a coherent state:

- half-period Kerr: ``|g> -> e^{-i pi/4}(|g> + i|-g>)/sqrt(2)``
- inverse half-period Kerr: ``|g> -> e^{+i pi/4}(|g> - i|-g>)/sqrt(2)``
- kick ``exp(-i d (a+a_dag))``: ``|g> -> e^{-i d Re g} |g - i d>``
- displacement ``exp(+i d (a+a_dag))``: ``|g> -> e^{+i d Re g} |g + i d>``
- amplitude decay to fraction ``mu`` (no-emission branch of a loss channel):
  ``|g> -> e^{|g|^2 (mu^2 - 1)/2} |mu g>`` (trace-decreasing)
- overlap: ``<g1|g2> = exp(-|g1|^2/2 - |g2|^2/2 + conj(g1) g2)``
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import erfc

_HALF_KERR_PHASE = np.exp(-1j * math.pi / 4) / math.sqrt(2.0)
_INV_HALF_KERR_PHASE = np.exp(1j * math.pi / 4) / math.sqrt(2.0)


def initial(alpha0: complex) -> tuple[np.ndarray, np.ndarray]:
    """A single coherent component of unit weight."""
    return np.asarray([1.0 + 0j]), np.asarray([complex(alpha0)])


def apply_half_kerr(coeffs: np.ndarray, amps: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Quarter-period Kerr map; doubles the component count."""
    c = coeffs * _HALF_KERR_PHASE
    return np.concatenate([c, 1j * c]), np.concatenate([amps, -amps])


def apply_inverse_half_kerr(coeffs: np.ndarray, amps: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse quarter-period Kerr map; doubles the component count."""
    c = coeffs * _INV_HALF_KERR_PHASE
    return np.concatenate([c, -1j * c]), np.concatenate([amps, -amps])


def apply_kick(coeffs: np.ndarray, amps: np.ndarray, delta) -> tuple[np.ndarray, np.ndarray]:
    """Impulsive kick ``exp(-i*delta*(a+a_dag))``."""
    return coeffs * np.exp(-1j * delta * amps.real), amps - 1j * delta


def apply_plus_displacement(coeffs: np.ndarray, amps: np.ndarray, delta) -> tuple[np.ndarray, np.ndarray]:
    """Displacement ``exp(+i*delta*(a+a_dag))`` (amplitude shift ``+i*delta``)."""
    return coeffs * np.exp(1j * delta * amps.real), amps + 1j * delta


def apply_decay(coeffs: np.ndarray, amps: np.ndarray, mu: float) -> tuple[np.ndarray, np.ndarray]:
    """No-emission amplitude decay ``|g| -> mu|g|`` with its weight factor."""
    weight = np.exp(0.5 * (mu * mu - 1.0) * (amps.real**2 + amps.imag**2))
    return coeffs * weight, mu * amps


def _pair_sums(coeffs: np.ndarray, amps: np.ndarray):
    """Pairwise ``conj(c_i) c_j <g_i|g_j>`` terms, broadcast over batch axes."""
    ci = np.conj(coeffs)[:, None, ...]
    cj = coeffs[None, :, ...]
    gi = amps[:, None, ...]
    gj = amps[None, :, ...]
    log_ov = -0.5 * (np.abs(gi) ** 2 + np.abs(gj) ** 2) + np.conj(gi) * gj
    weights = ci * cj * np.exp(log_ov)
    return weights, gi, gj


def norm_squared(coeffs: np.ndarray, amps: np.ndarray) -> np.ndarray:
    """Squared norm of the superposition (batch-shaped)."""
    weights, _, _ = _pair_sums(coeffs, amps)
    return np.sum(weights, axis=(0, 1)).real


def mean_x(coeffs: np.ndarray, amps: np.ndarray) -> np.ndarray:
    """Normalized mean of ``X = (a + a_dag)/2`` (batch-shaped)."""
    weights, _, gj = _pair_sums(coeffs, amps)
    num = np.sum(weights * gj, axis=(0, 1))
    den = np.sum(weights, axis=(0, 1)).real
    return (num / den).real


def prob_x_positive(coeffs: np.ndarray, amps: np.ndarray) -> np.ndarray:
    """Normalized probability of a positive quadrature outcome (batch-shaped).

    Uses the closed-form Gaussian half-line integral for each pair of
    coherent components,
    ``<g_i| P_{X>0} |g_j> = <g_i|g_j> * erfc(-(conj(g_i)+g_j)/sqrt(2)) / 2``,
    evaluated with the complex-argument erfc.
    """
    weights, gi, gj = _pair_sums(coeffs, amps)
    half_line = 0.5 * erfc(-(np.conj(gi) + gj) / math.sqrt(2.0))
    num = np.sum(weights * half_line, axis=(0, 1))
    den = np.sum(weights, axis=(0, 1)).real
    return (num / den).real


def ideal_pipeline(alpha0: complex, delta) -> tuple[np.ndarray, np.ndarray]:
    """Components of the lossless pipeline: Kerr, kick, inverse Kerr.

    ``delta`` may be a scalar or a batch array of effective kicks; the
    returned arrays then carry a matching trailing batch axis.
    """
    delta = np.asarray(delta, dtype=float)
    coeffs, amps = initial(alpha0)
    if delta.ndim:
        coeffs = coeffs[:, None] * np.ones_like(delta)
        amps = amps[:, None] * np.ones_like(delta, dtype=complex)
    coeffs, amps = apply_half_kerr(coeffs, amps)
    coeffs, amps = apply_kick(coeffs, amps, delta)
    coeffs, amps = apply_inverse_half_kerr(coeffs, amps)
    return coeffs, amps


def lossy_pipeline(
    alpha0: complex, delta_prime, eta: float, xi: float
) -> tuple[np.ndarray, np.ndarray]:
    """Components of the no-emission lossy pipeline.

    Stages: amplitude decay ``eta`` under the first Kerr half-period, the
    quarter-period Kerr map, beam-splitter attenuation ``xi`` from the
    round-trip transfer, displacement ``+i*delta_prime``, amplitude decay
    ``eta`` under the second Kerr half-period, and the final quarter-period
    Kerr map. ``delta_prime`` may be batched like :func:`ideal_pipeline`.

    The component weights are trace-decreasing; normalization happens inside
    the moment functions, which conditions the statistics on no emission.
    """
    delta_prime = np.asarray(delta_prime, dtype=float)
    coeffs, amps = initial(alpha0)
    if delta_prime.ndim:
        coeffs = coeffs[:, None] * np.ones_like(delta_prime)
        amps = amps[:, None] * np.ones_like(delta_prime, dtype=complex)
    coeffs, amps = apply_decay(coeffs, amps, eta)
    coeffs, amps = apply_half_kerr(coeffs, amps)
    coeffs, amps = apply_decay(coeffs, amps, xi)
    coeffs, amps = apply_plus_displacement(coeffs, amps, delta_prime)
    coeffs, amps = apply_decay(coeffs, amps, eta)
    coeffs, amps = apply_half_kerr(coeffs, amps)
    return coeffs, amps
