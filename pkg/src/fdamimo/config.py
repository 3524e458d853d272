"""Radar and scene parameter containers shared by every processing stage."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

SPEED_OF_LIGHT = 299_792_458.0
"Propagation speed used everywhere, m/s."


@dataclass(frozen=True)
class RadarConfig:
    """Monostatic FDA-MIMO linear-array parameters.

    Carrier of transmit element m (1-based) is ``carrier_hz + (m-1) *
    freq_increment_hz``.  ``freq_increment_hz = 0`` degenerates to a plain
    MIMO radar and is a valid configuration.
    """

    num_tx: int
    num_rx: int
    carrier_hz: float
    freq_increment_hz: float
    tx_spacing_m: float
    rx_spacing_m: float
    bandwidth_hz: float
    pulse_s: float
    pri_s: float
    total_power: float = 1.0

    def __post_init__(self):
        if self.num_tx < 1 or self.num_rx < 1:
            raise ValueError("element counts must be >= 1")
        for name in ("carrier_hz", "tx_spacing_m", "rx_spacing_m",
                     "bandwidth_hz", "pulse_s", "pri_s", "total_power"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if not 0.0 <= self.freq_increment_hz <= self.bandwidth_hz:
            raise ValueError("freq_increment_hz must lie in [0, bandwidth_hz]")
        if not self.pulse_s < self.pri_s:
            raise ValueError("pulse_s must be shorter than pri_s")

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT / self.carrier_hz

    def with_freq_increment(self, freq_increment_hz: float) -> "RadarConfig":
        "Copy of this config at a different frequency increment."
        return replace(self, freq_increment_hz=freq_increment_hz)


@dataclass(frozen=True)
class Target:
    """Far-field point scatterer at (range_m, angle_rad) with complex
    scattering coefficient and radial velocity (m/s, positive receding)."""

    range_m: float
    angle_rad: float
    scatter_coeff: complex = 1.0 + 0.0j
    velocity_mps: float = 0.0

    def __post_init__(self):
        if self.range_m <= 0.0:
            raise ValueError("target range must be positive")
        if not 0.0 < self.angle_rad < np.pi:
            raise ValueError("target angle must lie in (0, pi)")


@dataclass(frozen=True)
class Scene:
    """Targets plus a single flat specular reflector.

    ``reflector_offset_m`` is the projection distance between the array and
    the reflector plane; ``reflection_coeff`` is the complex specular
    coefficient of the plane (passive, magnitude <= 1).  ``noise_power`` is
    the per-channel noise level at the matched-filter output (linear).
    """

    targets: tuple[Target, ...]
    reflector_offset_m: float
    reflection_coeff: complex
    noise_power: float

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        if not self.targets:
            raise ValueError("scene needs at least one target")
        if self.reflector_offset_m < 0.0:
            raise ValueError("reflector offset must be >= 0")
        if abs(self.reflection_coeff) > 1.0 + 1e-12:
            raise ValueError("|reflection_coeff| must be <= 1 (passive reflector)")
        if self.noise_power < 0.0:
            raise ValueError("noise power must be >= 0")


def noise_power_for_snr(config: RadarConfig, snr_db: float,
                        scatter_coeff: complex = 1.0 + 0.0j) -> float:
    """Noise level realizing a requested matched-filter-output SNR.

    The SNR convention is ``|eta0|^2 * M / noise_power`` where
    ``|eta0| = sqrt(total_power / M) * |scatter_coeff|`` is the equivalent
    scattering amplitude of the direct path, so a -10 dB setting reproduces
    the element-level pre-processing figure used in the reference scenarios.
    """
    eta0_sq = (config.total_power / config.num_tx) * abs(scatter_coeff) ** 2
    return eta0_sq * config.num_tx / 10.0 ** (snr_db / 10.0)
