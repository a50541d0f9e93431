import numpy as np


def cardinal_bspline(p: int, t):
    """
    The cardinal B-spline φ_p, supported on [0, p + 1] and symmetric
    about (p + 1) / 2, from φ_0 = 1 on [0, 1) and

        φ_p(t) = t/p φ_{p-1}(t) + (p + 1 - t)/p φ_{p-1}(t - 1)

    The recurrence is run as a triangular table over the shifts
    φ_d(t - j), j = 0..p - d.

    Args:
        p (int): degree, p >= 0
        t (float or array_like): arguments

    Returns:
        float or np.ndarray: φ_p(t)

    >>> float(cardinal_bspline(2, 1.5))
    0.75
    """
    if int(p) != p or p < 0:
        raise ValueError(f"degree must be a non-negative integer, got {p}")
    p = int(p)
    tt = np.asarray(t, dtype=np.float64)
    s = tt[..., None] - np.arange(p + 1)
    table = ((s >= 0.0) & (s < 1.0)).astype(np.float64)
    for d in range(1, p + 1):
        shifted = s[..., : p - d + 1]
        table = (
            shifted * table[..., : p - d + 1]
            + (d + 1 - shifted) * table[..., 1 : p - d + 2]
        ) / d
    result = table[..., 0]
    if np.ndim(t) == 0:
        return float(result)
    return result
