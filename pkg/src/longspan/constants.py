"""Closed-form constants behind the two approximation ratios.

The ratio analyses bound the longest possible tree edge in specific regions
by explicit radicals; this module evaluates those radicals and the algebraic
identities that tie the chosen parameters to the ratios 0.524 and 0.519.
Transcribed verbatim from the derivations and unit-tested against their
decimal values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .neighborhoods import stnb_params
from .noncrossing import DELTA_NONCROSSING, ncst_params

DELTA_NEIGHBORHOOD = 0.524


def lf_length(delta: float = DELTA_NEIGHBORHOOD) -> float:
    """Largest distance from the low tip of the core lens to the region the
    input occupies when no vertex escapes the analysis ellipse (unit frame).

    For delta = 0.524 this evaluates to about 0.9464, strictly below the
    0.95 edge cap the ratio argument needs.
    """
    if not 0.5 < delta <= 0.7:
        raise ValueError("delta outside (0.5, 0.7]")
    omega = stnb_params(delta).omega
    t1 = (omega * omega - 4.0 * delta * delta) / 2.0
    inner = omega * omega - ((1.0 + omega * omega - 4.0 * delta * delta) / 2.0) ** 2
    t2 = math.sqrt(inner) + math.sqrt(delta * delta - 0.25)
    return math.sqrt(t1 * t1 + t2 * t2)


def _check_ab(ab_len: float, d: float) -> None:
    if not d - 1e-9 <= ab_len <= 1.0 + 1e-9:
        raise ValueError(f"ab_len {ab_len} outside [{d}, 1]")


def f2(ab_len: float, delta: float = DELTA_NONCROSSING) -> float:
    """Longest edge leaving the middle region from the strip-line foot on
    the axis, as a function of the guess length (diameter-scaled)."""
    params = ncst_params(min(ab_len, 1.0), delta)
    _check_ab(ab_len, params.d)
    u = (1.0 + ab_len * ab_len - (params.lam - 1.0) ** 2) / (2.0 * ab_len)
    return math.sqrt((u - params.omega * ab_len) ** 2 + 1.0 - u * u)


def _c1b(ab_len: float, delta: float) -> float:
    params = ncst_params(min(ab_len, 1.0), delta)
    g = params.gamma
    return math.sqrt(
        (1.0 - params.omega) ** 2 * ab_len * ab_len
        + ((g * g - ab_len * ab_len) / (g * g))
        * ((g / 2.0) ** 2 - (ab_len / 2.0 - params.omega * ab_len) ** 2)
    )


def f1(ab_len: float, delta: float = DELTA_NONCROSSING) -> float:
    """Cap on edges leaving the middle region from the top of the inner
    ellipse; maximized at ab_len = d, where it is about 0.913117 < 0.914."""
    params = ncst_params(min(ab_len, 1.0), delta)
    _check_ab(ab_len, params.d)
    c1b = _c1b(ab_len, delta)
    return c1b + (1.0 - ab_len) * c1b / ((1.0 - params.omega) * ab_len)


@dataclass(frozen=True)
class ConstantsReport:
    """Numeric backbone for acceptance checks: the edge-cap constants,
    samples of f1/f2 over the admissible guess range, the residuals of the
    parameter identities (all must vanish to 1e-9), and the strictly
    positive star-ratio floor margin 0.5/0.963 - 0.519."""

    lf_len: float
    f1_at: tuple[tuple[float, float], ...]
    f2_at: tuple[tuple[float, float], ...]
    identity_residuals: tuple[tuple[str, float], ...]
    ratio_floor_margin: float


def identity_suite(num_samples: int = 50) -> ConstantsReport:
    """Evaluate every closed-form identity the two analyses rest on."""
    p3 = stnb_params(DELTA_NEIGHBORHOOD)
    steiner_res = (math.sqrt(3.0) / 2.0) * (p3.omega + 1.0) - 3.0 * DELTA_NEIGHBORHOOD

    pd = ncst_params(1.0)
    alpha_beta_res = (
        2.0 - 3.0 * pd.omega + (pd.omega - 1.0) * (pd.alpha_hat + pd.beta_hat)
    ) / 2.0 - pd.delta

    d = pd.d
    abs_worst = 0.0
    f1_samples = []
    f2_samples = []
    for k in range(num_samples):
        ab = d + (1.0 - d) * k / (num_samples - 1)
        params = ncst_params(min(ab, 1.0))
        res = (ab + params.alpha_hat * (params.gamma - ab)) / (2.0 * ab) - params.delta
        if abs(res) > abs(abs_worst):
            abs_worst = res
        f1_samples.append((ab, f1(ab)))
        f2_samples.append((ab, f2(ab)))

    return ConstantsReport(
        lf_len=lf_length(),
        f1_at=tuple(f1_samples),
        f2_at=tuple(f2_samples),
        identity_residuals=(
            ("steiner_omega_identity", steiner_res),
            ("alpha_beta_identity", alpha_beta_res),
            ("alpha_identity_worst", abs_worst),
        ),
        ratio_floor_margin=0.5 / 0.963 - DELTA_NONCROSSING,
    )
