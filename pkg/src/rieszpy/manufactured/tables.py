"""
Published reference errors and orders for the two manufactured solutions,
keyed as REFERENCE_TABLES[solution][alpha][p] -> tuple of (n, error, order)
with order None on the first row.
"""

NS = (4, 8, 16, 32, 64)
DEGREES = (2, 3, 4, 5)
ALPHAS = (1.2, 1.5, 1.8)

# one row per n: (error, order) for p = 2, 3, 4, 5
_POLY33 = {
    1.2: (
        ((1.3146e-03, None), (1.1197e-03, None), (2.6802e-04, None), (4.8556e-05, None)),
        ((1.5675e-04, 3.07), (9.8810e-05, 3.50), (1.0317e-05, 4.70), (3.4230e-06, 3.83)),
        ((2.4941e-05, 2.65), (1.5622e-05, 2.66), (4.1887e-07, 4.62), (1.3853e-07, 4.63)),
        ((3.5227e-06, 2.82), (2.4433e-06, 2.68), (1.6226e-08, 4.69), (5.1403e-09, 4.75)),
        ((5.0507e-07, 2.80), (3.6711e-07, 2.73), (5.9986e-10, 4.76), (2.1670e-10, 4.57)),
    ),
    1.5: (
        ((1.6170e-03, None), (1.8701e-03, None), (3.4358e-04, None), (8.0567e-05, None)),
        ((1.7117e-04, 3.24), (2.0365e-04, 3.20), (1.9552e-05, 4.14), (7.4745e-06, 3.43)),
        ((3.1719e-05, 2.43), (2.8530e-05, 2.84), (1.0245e-06, 4.25), (3.7577e-07, 4.31)),
        ((5.8828e-06, 2.43), (5.7869e-06, 2.30), (4.9498e-08, 4.37), (1.7183e-08, 4.45)),
        ((1.0458e-06, 2.49), (1.0661e-06, 2.44), (2.2995e-09, 4.43), (8.0703e-10, 4.41)),
    ),
    1.8: (
        ((1.9908e-03, None), (3.1774e-03, None), (4.3396e-04, None), (1.3425e-04, None)),
        ((2.5091e-04, 2.99), (4.4181e-04, 2.85), (3.6073e-05, 3.59), (1.5905e-05, 3.08)),
        ((4.2953e-05, 2.55), (6.8611e-05, 2.69), (2.4045e-06, 3.91), (9.8386e-07, 4.01)),
        ((9.3400e-06, 2.20), (1.3336e-05, 2.36), (1.4401e-07, 4.06), (5.5249e-08, 4.15)),
        ((2.0702e-06, 2.17), (3.0292e-06, 2.14), (8.2251e-09, 4.13), (3.0499e-09, 4.18)),
    ),
}

_SINPIX2 = {
    1.2: (
        ((4.0099e-02, None), (1.5948e-02, None), (6.1393e-03, None), (1.9341e-03, None)),
        ((8.4523e-03, 2.25), (4.6043e-03, 1.79), (2.5317e-04, 4.60), (1.0271e-04, 4.23)),
        ((1.1497e-03, 2.88), (7.8372e-04, 2.55), (7.9503e-06, 4.99), (2.5175e-06, 5.35)),
        ((1.6423e-04, 2.81), (1.1786e-04, 2.73), (2.5619e-07, 4.96), (7.1641e-08, 5.14)),
        ((2.3468e-05, 2.81), (1.7096e-05, 2.79), (9.5594e-09, 4.74), (1.0289e-08, 2.80)),
    ),
    1.5: (
        ((4.2457e-02, None), (2.4735e-02, None), (7.7604e-03, None), (2.6753e-03, None)),
        ((1.0378e-02, 2.03), (7.9809e-03, 1.63), (4.3612e-04, 4.15), (1.9027e-04, 3.81)),
        ((1.7932e-03, 2.53), (1.7304e-03, 2.21), (1.7374e-05, 4.65), (6.3744e-06, 4.90)),
        ((3.1466e-04, 2.51), (3.1905e-04, 2.44), (7.0999e-07, 4.61), (2.2599e-07, 4.82)),
        ((5.5887e-05, 2.49), (5.7202e-05, 2.48), (2.9859e-08, 4.57), (7.5065e-09, 4.91)),
    ),
    1.8: (
        ((4.2801e-02, None), (3.8129e-02, None), (9.6792e-03, None), (3.8393e-03, None)),
        ((1.2259e-02, 1.80), (1.4094e-02, 1.44), (7.5244e-04, 3.69), (3.6381e-04, 3.40)),
        ((2.7540e-03, 2.15), (3.8466e-03, 1.87), (3.9382e-05, 4.26), (1.6023e-05, 4.50)),
        ((6.0215e-04, 2.19), (8.8181e-04, 2.13), (2.0021e-06, 4.30), (7.1827e-07, 4.48)),
        ((1.3172e-04, 2.19), (1.9414e-04, 2.18), (1.0435e-07, 4.26), (3.2796e-08, 4.45)),
    ),
}

# cells whose order column reflects an accuracy floor rather than convergence
FLOOR_CELLS = {("sinpix2", 1.2, 5, 64)}


def _by_degree(table):
    return {
        alpha: {
            p: tuple((n, row[j][0], row[j][1]) for n, row in zip(NS, rows))
            for j, p in enumerate(DEGREES)
        }
        for alpha, rows in table.items()
    }


REFERENCE_TABLES = {
    "poly33": _by_degree(_POLY33),
    "sinpix2": _by_degree(_SINPIX2),
}


def reference_row(solution: str, alpha: float, p: int, n: int):
    """
    The published (error, order) for one cell.

    >>> reference_row("poly33", 1.2, 2, 8)
    (0.00015675, 3.07)
    """
    try:
        rows = REFERENCE_TABLES[solution][alpha][p]
    except KeyError:
        raise ValueError(f"no reference data for {solution}, alpha={alpha}, p={p}") from None
    for m, error, order in rows:
        if m == n:
            return error, order
    raise ValueError(f"no reference data for n={n}")
