"""Independent float oracles used by the tests."""

import math

import numpy as np


def as_float(q) -> np.ndarray:
    return np.array([float(c) for c in q.coords])


def float_mul(a, b):
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return np.array([
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    ])


def brute_force_intersection(C, F) -> set:
    """Members of F hit by the circle at any of |F|*8 equally spaced angles, in floats."""
    u = as_float(C.axis)[1:]
    n = 8 * len(F)
    targets = [(f, as_float(f.left), as_float(f.right)) for f in F.elements]
    found = set()
    for t in range(n):
        theta = 2 * math.pi * t / n
        left = np.concatenate([[math.cos(C.p * theta)], math.sin(C.p * theta) * u])
        right = np.concatenate([[math.cos(C.q * theta)], math.sin(C.q * theta) * u])
        for f, fl, fr in targets:
            if np.allclose(left, fl, atol=1e-9) and np.allclose(right, fr, atol=1e-9):
                found.add(f)
    return found
