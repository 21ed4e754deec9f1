"""Shot-level simulation of the force measurement as a biased-coin experiment.

Each shot samples a momentum kick (deterministic force part plus Gaussian
thermal/vacuum noise), decides whether a photon emission scrambled the shot
(in which case the outcome is a fair coin), and otherwise flips a coin with
the no-emission probability ``p1 = Prob(X > 0)``. Counts aggregate into a
``SignalEstimate`` with ``S = m/M - 1/2`` and ``sigma_S = 1/sqrt(4M)``.

Randomness is counter-based and order-independent: three independent
Philox streams keyed ``(seed, purpose)`` drive kicks, emission decisions,
and outcome coins, one uniform per shot per stream. Identical
``(config, seed)`` reproduce results bit-exactly regardless of scheduling.

Two outcome engines are provided. The ``analytic`` engine evaluates
``p1`` exactly from the coherent-branch algebra (closed-form Gaussian
half-line integrals), vectorized over shots. The ``brute-force`` engine
rebuilds the final state in the truncated number basis and integrates its
quadrature density; it is the slow validation path.
"""

from __future__ import annotations

import dataclasses
import hashlib
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from kerrcat._coherent import ideal_pipeline, lossy_pipeline, prob_x_positive
from kerrcat.fock import default_truncation, quadrature_distribution
from kerrcat.loss import (
    KickStats,
    LossParams,
    emission_probability,
    lossy_offset,
    momentum_kick_stats,
    run_lossy_trajectory,
)
from kerrcat.protocol import ProtocolParams, SignalEstimate, offset_delta, run_ideal

__all__ = [
    "ForceSpec",
    "ExperimentConfig",
    "SweepRow",
    "sample_kick",
    "outcome_probability",
    "coin_bias_from_signal",
    "run_experiment",
    "sweep",
]

SWEEP_AXES = ("alpha", "delta", "kappa", "gamma", "temp", "shots", "lambda_kerr", "g")

_KICK_STREAM = 1
_EMISSION_STREAM = 2
_OUTCOME_STREAM = 3

#: Largest single-mode dimension the brute-force engine accepts.
MAX_BRUTE_FORCE_DIM = 160

_FORCE_SHAPES = ("resonant-cosine", "constant", "custom-samples")


@dataclass(frozen=True)
class ForceSpec:
    """Parametric force waveform driving the momentum kick.

    Shapes: ``resonant-cosine`` is ``amplitude*cos(omega_m*t + phase)``;
    ``constant`` is ``amplitude``; ``custom-samples`` linearly interpolates
    the given ``(time, value)`` pairs scaled by ``amplitude``. Amplitudes are
    in the scaled-force convention (``sqrt(2)*F/sqrt(hbar*omega*m)``, units
    of 1/s) that the kick integral expects.
    """

    shape: str
    amplitude: float
    phase: float = 0.0
    samples: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self) -> None:
        if self.shape not in _FORCE_SHAPES:
            raise ValueError(f"unknown force shape {self.shape!r}; expected one of {_FORCE_SHAPES}")
        if self.shape == "custom-samples":
            if not self.samples:
                raise ValueError("custom-samples force requires a non-empty samples table")
            table = tuple((float(t), float(f)) for t, f in self.samples)
            times = [t for t, _ in table]
            if any(b <= a for a, b in zip(times, times[1:])):
                raise ValueError("sample times must be strictly increasing")
            object.__setattr__(self, "samples", table)
        elif self.samples is not None:
            raise ValueError(f"samples are only meaningful for custom-samples, not {self.shape!r}")

    def as_function(self, omega_m: float):
        """Scaled-force waveform ``f(t)`` for a given mechanical frequency."""
        if self.shape == "resonant-cosine":
            return lambda t: self.amplitude * math.cos(omega_m * t + self.phase)
        if self.shape == "constant":
            return lambda t: self.amplitude
        times = np.array([t for t, _ in self.samples])
        values = np.array([f for _, f in self.samples])
        return lambda t: self.amplitude * float(np.interp(t, times, values))


@dataclass(frozen=True)
class ExperimentConfig:
    """Complete description of one simulated experiment.

    ``loss=None`` selects the ideal pipeline (no transfer, no thermal noise);
    otherwise the lossy pipeline with emission dephasing runs. ``force_spec``
    adds a deterministic force contribution to the kick mean and requires the
    loss model (the kick filter is defined by the swap stage).
    """

    protocol: ProtocolParams
    loss: LossParams | None = None
    force_spec: ForceSpec | None = None
    shots: int = 10_000
    seed: int = 0
    engine: str = "analytic"

    def __post_init__(self) -> None:
        if self.shots < 1:
            raise ValueError("shots must be at least 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.engine not in ("analytic", "brute-force"):
            raise ValueError(f"unknown engine {self.engine!r}; expected 'analytic' or 'brute-force'")
        if self.force_spec is not None and self.loss is None:
            raise ValueError("a force waveform requires the loss model")
        if self.engine == "brute-force":
            dim = self.protocol.truncation or default_truncation(self.protocol.alpha0)
            if dim > MAX_BRUTE_FORCE_DIM:
                raise ValueError(
                    f"brute-force engine needs truncation <= {MAX_BRUTE_FORCE_DIM}, got {dim}"
                )


@dataclass(frozen=True)
class SweepRow:
    """One cell of a parameter sweep."""

    axis: str
    value: float
    estimate: SignalEstimate
    S_analytic: float
    P_emission: float


def _stream(seed: int, purpose: int) -> np.random.Generator:
    """Counter-based RNG stream keyed by (master seed, purpose tag)."""
    return np.random.Generator(np.random.Philox(key=[int(seed), int(purpose)]))


def sample_kick(rng_stream: np.random.Generator, stats: KickStats, size: int | None = None):
    """Gaussian kick draw(s) with the given mean and variance.

    Consumes exactly one uniform per draw and maps it through the inverse
    normal CDF, so draw sequences are reproducible and order-independent.
    Zero variance returns the mean exactly.
    """
    u = rng_stream.random() if size is None else rng_stream.random(size)
    if stats.variance == 0.0:
        return stats.mean if size is None else np.full(size, stats.mean)
    u = np.maximum(u, np.finfo(float).tiny)
    draws = stats.mean + stats.std * ndtri(u)
    return float(draws) if size is None else draws


def _total_kick(delta_prime, config: ExperimentConfig):
    """Physical kick plus the working-point offset selected by the config."""
    p = config.protocol
    if not p.apply_offset:
        return delta_prime
    if config.loss is None:
        return delta_prime + offset_delta(p.alpha)
    return delta_prime + lossy_offset(p.alpha, config.loss)


def _p1_analytic(delta_prime, config: ExperimentConfig):
    """Exact no-emission outcome probability from the coherent-branch algebra."""
    total = np.asarray(_total_kick(np.asarray(delta_prime, dtype=float), config))
    if config.loss is None:
        coeffs, amps = ideal_pipeline(config.protocol.alpha0, total)
    else:
        lp = config.loss
        coeffs, amps = lossy_pipeline(complex(config.protocol.alpha0), total, lp.eta, lp.xi)
    return np.clip(prob_x_positive(coeffs, amps), 0.0, 1.0)


def _p1_brute_force(delta_prime: float, config: ExperimentConfig) -> float:
    """Outcome probability from the truncated number-basis pipeline."""
    p = config.protocol
    if config.loss is None:
        params = dataclasses.replace(p, delta=float(delta_prime))
        psi = run_ideal(params)
    else:
        total = float(_total_kick(float(delta_prime), config))
        psi = run_lossy_trajectory(p.alpha0, total, config.loss, N=p.truncation)
    return float(np.clip(quadrature_distribution(psi).prob_X_positive, 0.0, 1.0))


def outcome_probability(delta_prime, config: ExperimentConfig):
    """Probability ``p1 = Prob(X > 0)`` of a heads outcome for a given kick.

    ``delta_prime`` is the physical kick (force plus noise); the config's
    working-point offset is added internally. The value is conditioned on no
    photon emission — the shot engine mixes in the fair-coin emission branch
    separately. Scalar input returns a float; array input returns an array
    (vectorized in the analytic engine, looped with caching in brute force).
    """
    arr = np.asarray(delta_prime, dtype=float)
    if config.engine == "analytic":
        result = _p1_analytic(arr, config)
        return float(result) if arr.ndim == 0 else result
    if arr.ndim == 0:
        return _p1_brute_force(float(arr), config)
    cache: dict[float, float] = {}
    out = np.empty(arr.shape)
    for idx, value in np.ndenumerate(arr):
        key = float(value)
        if key not in cache:
            cache[key] = _p1_brute_force(key, config)
        out[idx] = cache[key]
    return out


def coin_bias_from_signal(signal: float, peak: float) -> float:
    """Two-peak linear map from a mean-quadrature signal to a coin bias.

    ``p1 = 1/2 + signal/(2*peak)`` where ``peak`` is the homodyne peak
    position (ideal: ``alpha``; lossy: ``xi*eta^2*alpha``). The map is only
    meaningful while the mean sits between the peaks: the result is clamped
    to ``[0, 1]``, and a clamp beyond 5% outside that range warns that the
    linear model has broken down.
    """
    if peak <= 0.0:
        raise ValueError("peak position must be strictly positive")
    raw = 0.5 + signal / (2.0 * peak)
    if raw < -0.05 or raw > 1.05:
        warnings.warn(
            f"two-peak linear map gave p1 = {raw:.3f}, clamped into [0, 1]: model breakdown",
            stacklevel=2,
        )
    return min(max(raw, 0.0), 1.0)


def _kick_stats(config: ExperimentConfig) -> KickStats:
    """Per-shot kick distribution implied by the config."""
    p = config.protocol
    if config.loss is None:
        return KickStats(mean=p.delta, variance=0.0)
    lp = config.loss
    if config.force_spec is not None:
        force_fn = config.force_spec.as_function(lp.omega_m)
    else:
        def force_fn(t: float) -> float:
            return 0.0
    filtered = momentum_kick_stats(force_fn, lp)
    return KickStats(mean=p.delta + filtered.mean, variance=filtered.variance)


def _emission_prob(config: ExperimentConfig) -> float:
    if config.loss is None:
        return 0.0
    return float(np.clip(emission_probability(config.protocol.alpha, config.loss), 0.0, 1.0))


def _digest(config: ExperimentConfig) -> str:
    blob = f"{config.protocol!r}|{config.loss!r}|{config.force_spec!r}|{config.shots}|{config.engine}"
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def run_experiment(config: ExperimentConfig) -> SignalEstimate:
    """Simulate ``config.shots`` shots and aggregate them into an estimate.

    Per shot: draw the kick, decide emission (probability ``P``), and flip
    heads with probability 1/2 (emission scrambles the phase) or with the
    no-emission ``p1(kick)``. All three decisions come from independent
    counter-based streams derived from ``config.seed``, so results are
    bit-exact for identical inputs.
    """
    m_total = config.shots
    stats = _kick_stats(config)
    kicks = sample_kick(_stream(config.seed, _KICK_STREAM), stats, size=m_total)
    p1 = np.asarray(outcome_probability(kicks, config))
    p_emit = _emission_prob(config)
    u_emit = _stream(config.seed, _EMISSION_STREAM).random(m_total)
    u_out = _stream(config.seed, _OUTCOME_STREAM).random(m_total)
    heads = np.where(u_emit < p_emit, u_out < 0.5, u_out < p1)
    return SignalEstimate(
        m_counts=int(np.count_nonzero(heads)),
        M=m_total,
        seed=config.seed,
        params_digest=_digest(config),
    )


def _predicted_signal(config: ExperimentConfig) -> tuple[float, float]:
    """Exact-engine prediction ``(S, P_emission)`` for a config.

    Averages ``p1`` over the thermal kick distribution (21-node
    Gauss-Hermite) and applies the emission mixing:
    ``S = (1 - P) * (E[p1] - 1/2)``.
    """
    stats = _kick_stats(config)
    p_emit = _emission_prob(config)
    if stats.variance > 0.0:
        nodes, weights = np.polynomial.hermite.hermgauss(21)
        deltas = stats.mean + math.sqrt(2.0 * stats.variance) * nodes
        p_mean = float(weights @ _p1_analytic(deltas, config)) / math.sqrt(math.pi)
    else:
        p_mean = float(_p1_analytic(np.float64(stats.mean), config))
    return (1.0 - p_emit) * (p_mean - 0.5), p_emit


def _apply_axis(base: ExperimentConfig, axis: str, value) -> ExperimentConfig:
    if axis == "alpha":
        protocol = dataclasses.replace(base.protocol, alpha0=complex(float(value)))
        return dataclasses.replace(base, protocol=protocol)
    if axis == "delta":
        protocol = dataclasses.replace(base.protocol, delta=float(value))
        return dataclasses.replace(base, protocol=protocol)
    if axis == "shots":
        return dataclasses.replace(base, shots=int(value))
    if base.loss is None:
        raise ValueError(f"axis {axis!r} requires the loss model")
    loss = dataclasses.replace(base.loss, **{axis: float(value)})
    return dataclasses.replace(base, loss=loss)


def sweep(axis: str, values, base: ExperimentConfig) -> list[SweepRow]:
    """Run one experiment per value of the swept parameter.

    Cell ``i`` runs with seed ``base.seed + i`` (documented, deterministic).
    Each row carries the measured estimate, the exact-engine prediction
    ``S_analytic``, and the emission probability for that cell.
    """
    if axis not in SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")
    values = list(values)
    if not values:
        raise ValueError("sweep needs at least one value")
    rows = []
    for index, value in enumerate(values):
        cell = _apply_axis(base, axis, value)
        cell = dataclasses.replace(cell, seed=base.seed + index)
        estimate = run_experiment(cell)
        s_analytic, p_emit = _predicted_signal(cell)
        rows.append(
            SweepRow(
                axis=axis,
                value=float(value),
                estimate=estimate,
                S_analytic=s_analytic,
                P_emission=p_emit,
            )
        )
    return rows
