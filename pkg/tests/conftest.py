import numpy as np
import pytest

from einverse import Tensor, frobenius_distance, frobenius_norm, random_tensor


def rt(row, col, seed, complex_entries=True) -> Tensor:
    """Seeded random tensor with the given row/column extents."""
    row, col = tuple(row), tuple(col)
    return random_tensor(row + col, len(row), seed, complex_entries)


def rdist(a: Tensor, b: Tensor) -> float:
    """Frobenius distance scaled by (1 + norm of the reference operand)."""
    return frobenius_distance(a, b) / (1.0 + frobenius_norm(b))


def rank_deficient(row, col, seed, rank) -> Tensor:
    """Random tensor of the given shape whose flattening has exact rank."""
    t = rt(row, col, seed)
    m = t.as_matrix()
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    s = s.copy()
    s[rank:] = 0.0
    return Tensor(((u * s) @ vh).reshape(t.extents), t.split)


@pytest.fixture
def seeds20():
    return range(1, 21)
