"""Axiom defects, the cross term X_AB by three routes, and the census.

For a product A x B built from a pairing scheme, two axiom-level
quantities are of interest:

* the orthogonality defects (AxB).A and (AxB).B, which classical cross
  products keep at zero;
* the cross term X_AB = |AxB|^2 - |A|^2 |B|^2 + (A.B)^2, the deviation
  from the Lagrange-style magnitude identity.

X_AB is computed along three independent routes (direct norms, full
four-index contraction, scheme-pair determinants) that must agree
exactly on integer input. Identity-level questions ("is this zero for
ALL vectors?") are decided by exact integer coefficient expansion, never
by sampling.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, TextIO, Tuple

from . import kernels
from .errors import DimensionMismatchError, SchemeTensorMismatchError
from .schemes import (
    Dimension,
    Scheme,
    axis_matchings,
    branch_scheme,
    feasible_dimension,
    is_closed,
    scheme_branches,
)
from .tensor import StructureTensor, Vector, build_tensor, dot, orient_pair, pair_determinant

CENSUS_CSV_HEADER = ("scheme_id", "closed", "orthogonality_zero", "xab_zero", "witness")

_WITNESS_RANGE = 2
_WITNESS_TRIES = 1000


def _check_dims(tensor: StructureTensor, a: Vector, b: Vector) -> int:
    n = tensor.dim.n
    if len(a) != n or len(b) != n:
        raise DimensionMismatchError(
            f"tensor is {n}-dimensional, vectors have length {len(a)} and {len(b)}"
        )
    return n


def orthogonality_defect(tensor: StructureTensor, a: Vector, b: Vector) -> Tuple:
    """((AxB).A, (AxB).B); both are zero for every closed, oriented scheme."""
    _check_dims(tensor, a, b)
    c = tensor.cross(a, b)
    return dot(c, a), dot(c, b)


def xab_direct(tensor: StructureTensor, a: Vector, b: Vector):
    """X_AB from its definition: |AxB|^2 - |A|^2 |B|^2 + (A.B)^2."""
    _check_dims(tensor, a, b)
    c = tensor.cross(a, b)
    return dot(c, c) - dot(a, a) * dot(b, b) + dot(a, b) ** 2


def xab_tensor(tensor: StructureTensor, a: Vector, b: Vector):
    """X_AB as the full four-index contraction of chi with a, b, a, b.

    chi[i,j,l,m] = T[i,j,l,m] + delta(i,m) delta(j,l) - delta(j,m) delta(i,l)
    where T[i,j,l,m] sums L[i,j,k] L[l,m,k] over the output axis k. The sum
    runs over all ordered index 4-tuples, which is what makes the pairwise
    route's factor 2 come out right.
    """
    n = _check_dims(tensor, a, b)
    target, sign = tensor.flat_arrays()
    total = 0
    for i in range(n):
        for j in range(n):
            off = i * n + j
            tij = target[off] if i != j else -1
            sij = sign[off]
            aibj = a[i] * b[j]
            for l in range(n):
                row = l * n
                for m in range(n):
                    chi = 0
                    if tij >= 0 and l != m and target[row + m] == tij:
                        chi = sij * sign[row + m]
                    if i == m and j == l:
                        chi += 1
                    if j == m and i == l:
                        chi -= 1
                    if chi:
                        total += aibj * a[l] * b[m] * chi
    return total


def xab_pairs(tensor: StructureTensor, a: Vector, b: Vector, scheme: Scheme):
    """X_AB from the scheme itself: twice the sum, per axis, of products of
    oriented pair determinants over distinct pair choices.

    The squared norms cancel against the per-pair squares by the Lagrange
    identity, leaving only the mixed products.
    """
    n = _check_dims(tensor, a, b)
    if scheme.dim != tensor.dim:
        raise SchemeTensorMismatchError(
            f"scheme is {scheme.dim.n}-dimensional, tensor is {n}-dimensional"
        )
    for matching in scheme.matchings:
        for pair in matching.pairs:
            entry = tensor.lookup(pair.lo, pair.hi)
            if entry is None or entry.axis != matching.axis:
                raise SchemeTensorMismatchError(
                    f"tensor sends {pair} to axis "
                    f"{entry.axis if entry else '?'}, scheme says {matching.axis}"
                )
    total = 0
    for matching in scheme.matchings:
        dets = [
            pair_determinant(a, b, *orient_pair(pair, matching.axis))
            for pair in matching.pairs
        ]
        for d1, d2 in combinations(dets, 2):
            total += d1 * d2
    return 2 * total


def classify_tensor(tensor: StructureTensor) -> Tuple[bool, bool]:
    """(orthogonality identically zero, X_AB identically zero), decided exactly."""
    target, sign = tensor.flat_arrays()
    ortho, xab = kernels.active_backend().classify_product_table(
        tensor.dim.n, target, sign
    )
    return bool(ortho), bool(xab)


def orthogonality_identically_zero(tensor: StructureTensor) -> bool:
    """Whether (AxB).A and (AxB).B vanish for every A, B.

    Equivalent to total antisymmetry of L: the built-in antisymmetry in the
    two input slots plus sign flips under swapping the output slot with
    either input slot.
    """
    return classify_tensor(tensor)[0]


def xab_identically_zero(tensor: StructureTensor) -> bool:
    """Whether the quartic X_AB(A, B) is the zero polynomial.

    Decided by accumulating exact integer coefficients of the monomials
    a_i a_l b_j b_m; sampling is never trusted here because small integer
    probes of genuinely nonzero schemes frequently evaluate to zero.
    """
    return classify_tensor(tensor)[1]


def _witness_rng(seed, scheme: Scheme) -> random.Random:
    # Keyed by the scheme's canonical text, so the same scheme gets the
    # same witness no matter how the census was partitioned or resumed.
    return random.Random(f"{seed}|n={scheme.dim.n}|{scheme}")


def find_witness(
    tensor: StructureTensor,
    scheme: Scheme,
    seed=0,
    max_tries: int = _WITNESS_TRIES,
) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Search small integer vectors for a pair with X_AB != 0.

    Entries are drawn from -2..2; the first hit is returned. Returns None
    only if the search budget is exhausted, which for a genuinely nonzero
    quartic is vanishingly unlikely.
    """
    n = tensor.dim.n
    rng = _witness_rng(seed, scheme)
    for _ in range(max_tries):
        a = tuple(rng.randint(-_WITNESS_RANGE, _WITNESS_RANGE) for _ in range(n))
        b = tuple(rng.randint(-_WITNESS_RANGE, _WITNESS_RANGE) for _ in range(n))
        if xab_direct(tensor, a, b) != 0:
            return a, b
    return None


@dataclass(frozen=True)
class DefectReport:
    """Orthogonality defects and X_AB via all three routes for one (A, B)."""

    dot_with_a: object
    dot_with_b: object
    xab_direct: object
    xab_tensor: object
    xab_pairs: object

    def consistent(self, tol=0) -> bool:
        spread = max(self.xab_direct, self.xab_tensor, self.xab_pairs) - min(
            self.xab_direct, self.xab_tensor, self.xab_pairs
        )
        return spread <= tol


def defect_report(
    scheme: Scheme, a: Vector, b: Vector, tensor: Optional[StructureTensor] = None
) -> DefectReport:
    if tensor is None:
        tensor = build_tensor(scheme)
    d_a, d_b = orthogonality_defect(tensor, a, b)
    return DefectReport(
        dot_with_a=d_a,
        dot_with_b=d_b,
        xab_direct=xab_direct(tensor, a, b),
        xab_tensor=xab_tensor(tensor, a, b),
        xab_pairs=xab_pairs(tensor, a, b, scheme),
    )


@dataclass(frozen=True)
class CensusRecord:
    """Classification of one scheme, in enumeration order (1-based ids)."""

    scheme_id: int
    closed: bool
    orthogonality_zero: bool
    xab_zero: bool
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None


def _classify_scheme(scheme: Scheme, seed, witnesses: bool):
    tensor = build_tensor(scheme)
    ortho, xab = classify_tensor(tensor)
    witness = None
    if witnesses and not xab:
        witness = find_witness(tensor, scheme, seed)
    return is_closed(scheme), ortho, xab, witness


def _census_partition(args):
    n, first_choice, seed, witnesses = args
    dim = feasible_dimension(n)
    rows = []
    for branch in scheme_branches(dim, prefix=(first_choice,)):
        rows.append(_classify_scheme(branch_scheme(dim, branch), seed, witnesses))
    return rows


def census(
    dim: Dimension,
    *,
    limit: Optional[int] = None,
    jobs: int = 1,
    seed=0,
    witnesses: bool = True,
) -> Iterator[CensusRecord]:
    """Classify every scheme of the dimension, in enumeration order.

    Workers partition on the first axis's matching choice and records are
    re-sequenced before emission, so output is identical for any ``jobs``.
    A ``limit`` forces the sequential path (partitions cannot be cut short
    cheaply); results are byte-identical either way.
    """
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    next_id = 1
    if jobs == 1 or limit is not None:
        for branch in scheme_branches(dim, limit=limit):
            scheme = branch_scheme(dim, branch)
            closed, ortho, xab, witness = _classify_scheme(scheme, seed, witnesses)
            yield CensusRecord(next_id, closed, ortho, xab, witness)
            next_id += 1
        return

    first_width = len(axis_matchings(dim, 1))
    tasks = [(dim.n, fc, seed, witnesses) for fc in range(first_width)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rows in pool.map(_census_partition, tasks):
            for closed, ortho, xab, witness in rows:
                yield CensusRecord(next_id, closed, ortho, xab, witness)
                next_id += 1


def format_witness(witness) -> str:
    if witness is None:
        return ""
    a, b = witness
    return ",".join(map(str, a)) + ";" + ",".join(map(str, b))


def write_census_csv(records, stream: TextIO) -> int:
    """Write records in the fixed CSV layout; returns the number written."""
    import csv

    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CENSUS_CSV_HEADER)
    count = 0
    for rec in records:
        writer.writerow(
            [
                rec.scheme_id,
                "true" if rec.closed else "false",
                "true" if rec.orthogonality_zero else "false",
                "true" if rec.xab_zero else "false",
                format_witness(rec.witness),
            ]
        )
        count += 1
    return count
