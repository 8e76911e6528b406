from typing import Callable, List, Tuple

import numpy as np

from config.settings import RESIDUE_CONTOUR_RADIUS, RICHARDSON_LEVELS

ComplexFunction = Callable[[complex], complex]


def richardson_derivative(
    func: ComplexFunction,
    x0: complex,
    step: float,
    levels: int = RICHARDSON_LEVELS,
) -> Tuple[complex, float]:
    """Central difference at x0 refined by Richardson extrapolation (Neville table, factor 4).

    Returns the extrapolated derivative and the difference between the two
    highest-order entries of the last row as an error estimate.
    """
    table: List[List[complex]] = []
    for i in range(levels):
        h = step / 2 ** i
        row = [(func(x0 + h) - func(x0 - h)) / (2.0 * h)]
        for k in range(1, i + 1):
            row.append(row[k - 1] + (row[k - 1] - table[i - 1][k - 1]) / (4 ** k - 1))
        table.append(row)
    best = complex(table[-1][-1])
    if levels == 1:
        return best, abs(best)
    return best, abs(best - table[-1][-2])


def contour_residue(
    func: ComplexFunction,
    center: complex,
    nodes: int,
    radius: float = RESIDUE_CONTOUR_RADIUS,
) -> Tuple[complex, float]:
    """Residue of func at center via the trapezoidal rule on a circle.

    The error estimate compares against the rule on every second node.
    """
    angles = 2.0 * np.pi * np.arange(nodes) / nodes
    offsets = radius * np.exp(1j * angles)
    samples = np.array([func(center + offset) * offset for offset in offsets])
    full = complex(samples.mean())
    coarse = complex(samples[::2].mean())
    return full, abs(full - coarse)
