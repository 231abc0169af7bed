"""Compensated summation helpers.

All long reductions in the workbench go through these routines so that
results are deterministic and reproducible: a fixed chunk layout with
Neumaier (improved Kahan) accumulation gives bit-identical sums whether
the chunks are evaluated serially or farmed out to workers, as long as
the combine order is fixed.
"""

from __future__ import annotations

import numpy as np


def neumaier_sum(values) -> float:
    """Compensated sum of an iterable of floats, in iteration order."""
    total = 0.0
    comp = 0.0
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
    return total + comp


def neumaier_sum_complex(values) -> complex:
    """Compensated complex sum; real and imaginary parts tracked separately."""
    tr = cr = ti = ci = 0.0
    for v in values:
        x = v.real
        t = tr + x
        if abs(tr) >= abs(x):
            cr += (tr - t) + x
        else:
            cr += (x - t) + tr
        tr = t
        y = v.imag
        t = ti + y
        if abs(ti) >= abs(y):
            ci += (ti - t) + y
        else:
            ci += (y - t) + ti
        ti = t
    return complex(tr + cr, ti + ci)


def chunked_sum(array: np.ndarray, chunk: int = 1 << 16):
    """Deterministic sum of a 1-d numpy array.

    Fixed chunk boundaries, numpy pairwise summation inside each chunk,
    Neumaier accumulation across chunks in ascending order.  The result
    does not depend on how (or whether) chunk evaluation is parallelised.
    """
    n = len(array)
    if n == 0:
        return array.dtype.type(0)
    partials = [np.sum(array[lo:lo + chunk]) for lo in range(0, n, chunk)]
    if np.iscomplexobj(array):
        return neumaier_sum_complex(partials)
    return neumaier_sum(partials)
