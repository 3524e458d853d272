"""Specular-reflector mirror-image geometry."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MirrorTarget:
    """Image of a target in the reflector plane.

    ``range_m``/``angle_rad`` locate the mirror scatterer; the one-bounce
    paths (one reflection, on transmit or on receive) appear at the
    equivalent one-way range ``equiv_first_order_range_m = (r + r_s) / 2``.

    For a target on the radar side of the reflector plane
    (``h_a + r cos(theta) >= 0``) the image satisfies ``r_s >= r`` and, for
    ``h_a > 0``, lies on the far side of broadside: ``theta_s in (pi/2, pi)``.
    """

    range_m: float
    angle_rad: float
    equiv_first_order_range_m: float


def mirror_geometry(range_m: float, angle_rad: float, reflector_offset_m: float) -> MirrorTarget:
    """Mirror-image range and angle for a flat reflector at offset ``h_a``.

    Parameters
    ----------
    range_m : float
        Target range r > 0 (m).
    angle_rad : float
        Target azimuth in (0, pi), measured from the array axis.
    reflector_offset_m : float
        Projection distance h_a >= 0 between array and reflector plane.

    Returns
    -------
    MirrorTarget
        r_s = sqrt((r sin t)^2 + (2 h_a + r cos t)^2),
        theta_s = pi - atan2(r sin t, 2 h_a + r cos t),
        and the first-order equivalent range (r + r_s) / 2.
    """
    if range_m <= 0.0:
        raise ValueError("range must be positive")
    if not 0.0 < angle_rad < np.pi:
        raise ValueError("angle must lie in (0, pi)")
    if reflector_offset_m < 0.0:
        raise ValueError("reflector offset must be >= 0")
    cross = range_m * np.sin(angle_rad)
    axial = 2.0 * reflector_offset_m + range_m * np.cos(angle_rad)
    range_s = float(np.hypot(cross, axial))
    angle_s = float(np.pi - np.arctan2(cross, axial))
    return MirrorTarget(
        range_m=range_s,
        angle_rad=angle_s,
        equiv_first_order_range_m=0.5 * (range_m + range_s),
    )
