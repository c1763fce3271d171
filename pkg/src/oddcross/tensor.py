"""Signed structure tensors and the generalized cross product.

A scheme fixes which axis each basis product lands on; the orientation
rule fixes the sign. Together they define a sparse tensor L with
e_i x e_j = L[i,j,k] e_k and L[i,j,k] in {-1, 0, +1}, the n-dimensional
analogue of the Levi-Civita symbol.

Arithmetic is polymorphic: integer vectors produce exact integer results,
float vectors go through ordinary double precision.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence, Tuple

from .errors import DimensionMismatchError, SelfPairError
from .schemes import Dimension, Pair, Scheme

Vector = Sequence


def orient_pair(pair: Pair, axis: int) -> Tuple[int, int]:
    """Order a pair so that (first, second, axis) is an even permutation.

    Even means even relative to the ascending sort of the three indices,
    so e_first x e_second = +e_axis. The ordering flips exactly when the
    axis falls strictly between the two pair members.
    """
    lo, hi = pair
    if axis == lo or axis == hi:
        raise SelfPairError(f"axis {axis} collides with pair {lo}-{hi}")
    if lo < axis < hi:
        return hi, lo
    return lo, hi


class TensorEntry(NamedTuple):
    axis: int
    sign: int


class StructureTensor:
    """Sparse signed tensor: every ordered index pair maps to one axis.

    Stored as flat n*n target/sign arrays (0-based internally, 1-based in
    the API); the (j, i) entry is always the negation of (i, j).
    """

    def __init__(self, dim: Dimension, target: Sequence[int], sign: Sequence[int]):
        self.dim = dim
        self._target = list(target)
        self._sign = list(sign)

    @classmethod
    def from_scheme(cls, scheme: Scheme) -> "StructureTensor":
        n = scheme.dim.n
        target = [-1] * (n * n)
        sign = [0] * (n * n)
        for matching in scheme.matchings:
            k = matching.axis
            for pair in matching.pairs:
                first, second = orient_pair(pair, k)
                target[(first - 1) * n + (second - 1)] = k - 1
                sign[(first - 1) * n + (second - 1)] = 1
                target[(second - 1) * n + (first - 1)] = k - 1
                sign[(second - 1) * n + (first - 1)] = -1
        return cls(scheme.dim, target, sign)

    def lookup(self, i: int, j: int) -> Optional[TensorEntry]:
        """The (axis, sign) slot of e_i x e_j, or None when i == j."""
        n = self.dim.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"indices {i},{j} out of range 1..{n}")
        if i == j:
            return None
        flat = (i - 1) * n + (j - 1)
        return TensorEntry(self._target[flat] + 1, self._sign[flat])

    def entries(self):
        """Iterate (i, j, axis, sign) over the ordered entries with i < j."""
        n = self.dim.n
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                flat = (i - 1) * n + (j - 1)
                yield i, j, self._target[flat] + 1, self._sign[flat]

    def flat_arrays(self) -> Tuple[list, list]:
        """Copies of the 0-based flat target/sign arrays (kernel input form)."""
        return list(self._target), list(self._sign)

    def cross(self, a: Vector, b: Vector) -> list:
        """A x B: component k is the sum of sign * a_i * b_j over entries
        targeting k, taken over all ordered (i, j)."""
        n = self.dim.n
        if len(a) != n or len(b) != n:
            raise DimensionMismatchError(
                f"tensor is {n}-dimensional, vectors have length {len(a)} and {len(b)}"
            )
        out = [0] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            row = i * n
            for j in range(n):
                if i == j:
                    continue
                s = self._sign[row + j]
                out[self._target[row + j]] += s * ai * b[j]
        return out

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return (
            self.dim == other.dim
            and self._target == other._target
            and self._sign == other._sign
        )

    def __repr__(self):
        return f"StructureTensor(n={self.dim.n})"


def build_tensor(scheme: Scheme) -> StructureTensor:
    """Orient every assigned pair and install the signed entries."""
    return StructureTensor.from_scheme(scheme)


def cross(tensor: StructureTensor, a: Vector, b: Vector) -> list:
    return tensor.cross(a, b)


def pair_determinant(a: Vector, b: Vector, alpha: int, beta: int):
    """The 2x2 determinant a_alpha * b_beta - a_beta * b_alpha."""
    n = len(a)
    if not (1 <= alpha <= n and 1 <= beta <= n):
        raise IndexError(f"indices {alpha},{beta} out of range 1..{n}")
    return a[alpha - 1] * b[beta - 1] - a[beta - 1] * b[alpha - 1]


def dot(a: Vector, b: Vector):
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"vectors have different lengths {len(a)} and {len(b)}"
        )
    return sum(x * y for x, y in zip(a, b))
