"""Angular and range steering vectors of the FDA-MIMO virtual array.

All vectors have unit-modulus entries with the first entry exactly 1.
Element index m is 0-based in storage and corresponds to element m+1 of the
usual 1-based formulas.  All functions are pure.
"""

from __future__ import annotations

import numpy as np

from .config import SPEED_OF_LIGHT, RadarConfig


def rx_steering(config: RadarConfig, angle_rad: float) -> np.ndarray:
    "Receive angular steering vector, length num_rx."
    n = np.arange(config.num_rx)
    return np.exp(1j * 2.0 * np.pi * (config.rx_spacing_m / config.wavelength_m)
                  * n * np.cos(angle_rad))


def tx_steering(config: RadarConfig, angle_rad: float) -> np.ndarray:
    "Transmit angular steering vector, length num_tx."
    m = np.arange(config.num_tx)
    return np.exp(1j * 2.0 * np.pi * (config.tx_spacing_m / config.wavelength_m)
                  * m * np.cos(angle_rad))


def range_steering(config: RadarConfig, range_m: float) -> np.ndarray:
    """Transmit range steering vector, length num_tx.

    Element m carries exp(-j 2 pi (2 df / c) m r); periodic in r with period
    c / (2 df), and all-ones when the frequency increment is zero.
    """
    m = np.arange(config.num_tx)
    return np.exp(-1j * 2.0 * np.pi * (2.0 * config.freq_increment_hz / SPEED_OF_LIGHT)
                  * m * range_m)


def tx_range_angle_steering(config: RadarConfig, range_m: float, angle_rad: float) -> np.ndarray:
    "Range-angle-dependent transmit steering: tx_steering * range_steering."
    return tx_steering(config, angle_rad) * range_steering(config, range_m)


def virtual_steering(config: RadarConfig, range_m: float, angle_rad_tx: float,
                     angle_rad_rx: float | None = None,
                     tx_weights: np.ndarray | None = None) -> np.ndarray:
    """Full MN virtual-array steering vector a_r(theta_r) kron a_t(r, theta_t).

    Channel ordering is receive-major: index = n * num_tx + m.  Optional
    transmit weights multiply the transmit part elementwise.
    """
    if angle_rad_rx is None:
        angle_rad_rx = angle_rad_tx
    at = tx_range_angle_steering(config, range_m, angle_rad_tx)
    if tx_weights is not None:
        at = np.asarray(tx_weights, dtype=complex) * at
    return np.kron(rx_steering(config, angle_rad_rx), at)


def spatial_frequencies(config: RadarConfig, range_m: float, angle_rad: float) -> tuple[float, float]:
    """Transmit and receive spatial frequencies (f_st, f_sr) of a scatterer.

    f_st = -(2 df / c) r + (d_t / lambda0) cos(theta) couples range into the
    transmit dimension; f_sr = (d_r / lambda0) cos(theta) is range-free.
    """
    cos_t = np.cos(angle_rad)
    f_st = (-(2.0 * config.freq_increment_hz / SPEED_OF_LIGHT) * range_m
            + (config.tx_spacing_m / config.wavelength_m) * cos_t)
    f_sr = (config.rx_spacing_m / config.wavelength_m) * cos_t
    return float(f_st), float(f_sr)
