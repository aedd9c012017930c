"""Dense complex tensors with a row/column index-group split.

An even-order tensor of shape ``I_1 x ... x I_N x J_1 x ... x J_M`` is stored
as a C-ordered :class:`numpy.ndarray` together with the split position ``N``.
The first ``N`` axes form the row group, the rest the column group.  C order
coincides with the canonical linearization (last index fastest, one-based
indices shifted down by one), so flattening to a matrix and Vec never move
data.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import ShapeError

#: Default verification tolerance; checks scale it by (1 + Frobenius norm).
DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class TensorShape:
    """Ordered extents partitioned into a row group and a column group.

    Parameters
    ----------
    extents : tuple of int
        Dimension sizes, all >= 1.
    split : int
        Number of leading extents belonging to the row group; may be 0
        (no row axes) or ``len(extents)`` (no column axes).
    """

    extents: tuple[int, ...]
    split: int

    def __post_init__(self):
        extents = tuple(int(e) for e in self.extents)
        object.__setattr__(self, "extents", extents)
        if any(e < 1 for e in extents):
            raise ShapeError(f"extents must all be >= 1, got {extents}")
        if not 0 <= self.split <= len(extents):
            raise ShapeError(
                f"split {self.split} out of range for {len(extents)} extents"
            )

    @property
    def order(self) -> int:
        return len(self.extents)

    @property
    def row_extents(self) -> tuple[int, ...]:
        return self.extents[: self.split]

    @property
    def col_extents(self) -> tuple[int, ...]:
        return self.extents[self.split :]

    @property
    def row_count(self) -> int:
        return prod(self.row_extents)

    @property
    def col_count(self) -> int:
        return prod(self.col_extents)

    def swapped(self) -> TensorShape:
        """Shape with the two index groups exchanged."""
        return TensorShape(self.col_extents + self.row_extents, self.order - self.split)

    def is_square(self) -> bool:
        """True when row and column groups agree extent by extent."""
        return self.row_extents == self.col_extents


class Tensor:
    """Immutable dense complex tensor with a fixed row/column split."""

    __slots__ = ("_data", "_split")

    def __init__(self, data, split: int):
        arr = np.asarray(data)
        if not (
            arr.dtype == np.complex128
            and arr.flags["C_CONTIGUOUS"]
            and not arr.flags["WRITEABLE"]
        ):
            # own a fresh copy; already-frozen canonical arrays (views of
            # other tensors) are adopted without moving data
            arr = np.array(arr, dtype=np.complex128, order="C")
            arr.setflags(write=False)
        if arr.ndim == 0:
            arr = arr.reshape(1)
        if any(e < 1 for e in arr.shape):
            raise ShapeError(f"extents must all be >= 1, got {arr.shape}")
        if not 0 <= split <= arr.ndim:
            raise ShapeError(f"split {split} out of range for order-{arr.ndim} tensor")
        object.__setattr__(self, "_data", arr)
        object.__setattr__(self, "_split", int(split))

    def __setattr__(self, name, value):
        raise AttributeError("Tensor is immutable")

    @classmethod
    def from_flat(cls, extents, split: int, entries) -> Tensor:
        """Build a tensor from entries listed in canonical order.

        Raises :class:`ShapeError` when the entry count does not match the
        product of the extents.
        """
        extents = tuple(int(e) for e in extents)
        arr = np.asarray(entries, dtype=np.complex128).ravel()
        if arr.size != prod(extents):
            raise ShapeError(
                f"{arr.size} entries for extents {extents} "
                f"(expected {prod(extents)})"
            )
        return cls(arr.reshape(extents), split)

    @property
    def data(self) -> np.ndarray:
        """Read-only array view of the entries, shaped by the full extents."""
        return self._data

    @property
    def split(self) -> int:
        return self._split

    @property
    def shape(self) -> TensorShape:
        return TensorShape(self._data.shape, self._split)

    @property
    def extents(self) -> tuple[int, ...]:
        return self._data.shape

    @property
    def order(self) -> int:
        return self._data.ndim

    @property
    def row_extents(self) -> tuple[int, ...]:
        return self._data.shape[: self._split]

    @property
    def col_extents(self) -> tuple[int, ...]:
        return self._data.shape[self._split :]

    @property
    def row_count(self) -> int:
        return prod(self.row_extents)

    @property
    def col_count(self) -> int:
        return prod(self.col_extents)

    def as_matrix(self) -> np.ndarray:
        """Row-group-by-column-group matrix view (no copy)."""
        return self._data.reshape(self.row_count, self.col_count)

    def __add__(self, other: Tensor) -> Tensor:
        _require_same_shape(self, other)
        return Tensor(self._data + other._data, self._split)

    def __sub__(self, other: Tensor) -> Tensor:
        _require_same_shape(self, other)
        return Tensor(self._data - other._data, self._split)

    def __neg__(self) -> Tensor:
        return Tensor(-self._data, self._split)

    def __mul__(self, scalar) -> Tensor:
        return Tensor(self._data * complex(scalar), self._split)

    __rmul__ = __mul__

    def __repr__(self):
        row = "x".join(map(str, self.row_extents)) or "1"
        col = "x".join(map(str, self.col_extents)) or "1"
        return f"Tensor({row} | {col})"

    def to_json_dict(self) -> dict:
        """Serializable dict: extents, split, re and (if any nonzero) im."""
        doc = {
            "extents": list(self.extents),
            "split": self._split,
            "re": self._data.real.ravel().tolist(),
        }
        im = self._data.imag.ravel()
        if np.any(im != 0.0):
            doc["im"] = im.tolist()
        return doc

    @classmethod
    def from_json_dict(cls, doc: dict) -> Tensor:
        """Inverse of :meth:`to_json_dict`; extra keys are ignored."""
        try:
            extents = tuple(int(e) for e in doc["extents"])
            split = int(doc["split"])
            re = doc["re"]
        except (KeyError, TypeError) as exc:
            raise ShapeError(f"malformed tensor document: {exc}") from exc
        n = prod(extents)
        re = np.asarray(re, dtype=np.float64).ravel()
        if re.size != n:
            raise ShapeError(f"'re' has {re.size} values, expected {n}")
        if "im" in doc:
            im = np.asarray(doc["im"], dtype=np.float64).ravel()
            if im.size != n:
                raise ShapeError(f"'im' has {im.size} values, expected {n}")
            entries = re + 1j * im
        else:
            entries = re.astype(np.complex128)
        return cls.from_flat(extents, split, entries)


def _require_same_shape(a: Tensor, b: Tensor):
    if a.extents != b.extents or a.split != b.split:
        raise ShapeError(f"shape mismatch: {a!r} vs {b!r}")


def _require_square(a: Tensor):
    if a.row_extents != a.col_extents:
        raise ShapeError(f"square tensor required, got {a!r}")


def _swap_groups(a: Tensor, conjugate: bool) -> Tensor:
    axes = tuple(range(a.split, a.order)) + tuple(range(a.split))
    moved = np.transpose(a.data, axes)
    if conjugate:
        moved = np.conj(moved)
    return Tensor(moved, a.order - a.split)


def conj_transpose(a: Tensor) -> Tensor:
    """Conjugate transpose: index groups swapped, entries conjugated."""
    return _swap_groups(a, conjugate=True)


def transpose(a: Tensor) -> Tensor:
    """Group-swapping transpose without conjugation."""
    return _swap_groups(a, conjugate=False)


def zeros(extents, split: int) -> Tensor:
    extents = tuple(int(e) for e in extents)
    return Tensor(np.zeros(extents, dtype=np.complex128), split)


def zeros_like(a: Tensor) -> Tensor:
    return zeros(a.extents, a.split)


def unit_tensor(row_extents) -> Tensor:
    """Identity under contraction: 1 where both index groups agree, else 0.

    The result has the row group repeated as its column group.  An empty
    extent list is rejected.
    """
    row_extents = tuple(int(e) for e in row_extents)
    if not row_extents:
        raise ShapeError("unit tensor needs at least one extent")
    n = prod(row_extents)
    if any(e < 1 for e in row_extents):
        raise ShapeError(f"extents must all be >= 1, got {row_extents}")
    return Tensor(np.eye(n, dtype=np.complex128).reshape(row_extents * 2), len(row_extents))


def frobenius_norm(a: Tensor) -> float:
    return float(np.linalg.norm(a.data.ravel()))


def frobenius_distance(a: Tensor, b: Tensor) -> float:
    """Frobenius norm of ``a - b``; zero iff entrywise equal."""
    _require_same_shape(a, b)
    return float(np.linalg.norm((a.data - b.data).ravel()))


def _resolved_tol(tol, a: Tensor) -> float:
    if tol is not None:
        return float(tol)
    return DEFAULT_TOL * (1.0 + frobenius_norm(a))


def is_hermitian(a: Tensor, tol: float | None = None) -> bool:
    """Max-norm distance between ``a`` and its conjugate transpose <= tol.

    ``tol=None`` uses the default tolerance scaled by (1 + ||a||_F).
    Requires a square tensor.
    """
    _require_square(a)
    tol = _resolved_tol(tol, a)
    return float(np.abs(a.data - conj_transpose(a).data).max()) <= tol


def is_unitary(a: Tensor, tol: float | None = None) -> bool:
    """Both ``a a*`` and ``a* a`` within tol of the unit tensor (Frobenius)."""
    _require_square(a)
    tol = _resolved_tol(tol, a)
    m = a.as_matrix()
    eye = np.eye(m.shape[0])
    return (
        float(np.linalg.norm(m @ m.conj().T - eye)) <= tol
        and float(np.linalg.norm(m.conj().T @ m - eye)) <= tol
    )


def is_idempotent(a: Tensor, tol: float | None = None) -> bool:
    """``a a`` within tol of ``a`` (Frobenius)."""
    _require_square(a)
    tol = _resolved_tol(tol, a)
    m = a.as_matrix()
    return float(np.linalg.norm(m @ m - m)) <= tol
