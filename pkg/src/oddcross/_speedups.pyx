# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exact-cover enumeration and identity classification.

Semantics match oddcross._kernels_py exactly; see that module for the
documented contract. Masks are held in 64-bit words, so this backend
covers pair counts up to 64 (n <= 11); larger dimensions fall back to
the pure backend automatically.
"""

from libc.stdlib cimport calloc, free
from libc.stdint cimport int64_t, uint64_t

BACKEND_NAME = "compiled"

MAX_PAIR_BITS = 64


def enumerate_covers(axis_masks, prefix=(), resume_after=None, limit=2**62):
    cdef int n_axes = len(axis_masks)
    cdef int p = len(prefix)
    if p > n_axes:
        raise ValueError("prefix longer than the number of axes")

    cdef int total = 0
    cdef int d, c
    for d in range(n_axes):
        total += len(axis_masks[d])

    cdef uint64_t* masks = <uint64_t*> calloc(total, sizeof(uint64_t))
    cdef int* counts = <int*> calloc(n_axes, sizeof(int))
    cdef int* offsets = <int*> calloc(n_axes, sizeof(int))
    cdef int* idx = <int*> calloc(n_axes, sizeof(int))
    cdef uint64_t* used = <uint64_t*> calloc(n_axes + 1, sizeof(uint64_t))
    if not (masks and counts and offsets and idx and used):
        free(masks); free(counts); free(offsets); free(idx); free(used)
        raise MemoryError()

    out = []
    cdef int pos = 0
    cdef int depth
    cdef int choice
    cdef uint64_t mask
    cdef int64_t cap = limit
    cdef bint moved
    try:
        for d in range(n_axes):
            offsets[d] = pos
            counts[d] = len(axis_masks[d])
            for c in range(counts[d]):
                masks[pos] = axis_masks[d][c]
                pos += 1

        for d in range(p):
            choice = prefix[d]
            if choice < 0 or choice >= counts[d]:
                raise IndexError("prefix choice out of range")
            mask = masks[offsets[d] + choice]
            if mask & used[d]:
                return out
            idx[d] = choice
            used[d + 1] = used[d] | mask

        depth = p
        if resume_after is not None:
            if len(resume_after) != n_axes:
                raise ValueError("resume point must be a full branch")
            if tuple(resume_after[:p]) != tuple(prefix):
                raise ValueError("resume point lies outside the requested prefix")
            for d in range(p, n_axes):
                choice = resume_after[d]
                if choice < 0 or choice >= counts[d]:
                    raise IndexError("resume choice out of range")
                mask = masks[offsets[d] + choice]
                if mask & used[d]:
                    raise ValueError("resume point is not a valid branch")
                idx[d] = choice
                used[d + 1] = used[d] | mask
            depth = n_axes - 1
            if depth < p:
                return out
            idx[depth] += 1

        while depth >= p:
            if depth == n_axes:
                out.append(tuple([idx[d] for d in range(n_axes)]))
                if len(out) >= cap:
                    return out
                depth -= 1
                idx[depth] += 1
                continue
            moved = False
            while idx[depth] < counts[depth]:
                mask = masks[offsets[depth] + idx[depth]]
                if not (mask & used[depth]):
                    used[depth + 1] = used[depth] | mask
                    depth += 1
                    if depth < n_axes:
                        idx[depth] = 0
                    moved = True
                    break
                idx[depth] += 1
            if not moved:
                depth -= 1
                if depth >= p:
                    idx[depth] += 1
        return out
    finally:
        free(masks); free(counts); free(offsets); free(idx); free(used)


def classify_product_table(int n, target, sign):
    cdef int nn = n * n
    cdef int npairs = n * (n + 1) // 2
    cdef int* ctarget = <int*> calloc(nn, sizeof(int))
    cdef int* csign = <int*> calloc(nn, sizeof(int))
    # Entries grouped by output axis for the |AxB|^2 expansion.
    cdef int* ent_i = <int*> calloc(nn, sizeof(int))
    cdef int* ent_j = <int*> calloc(nn, sizeof(int))
    cdef int* ent_s = <int*> calloc(nn, sizeof(int))
    cdef int* kstart = <int*> calloc(n + 1, sizeof(int))
    cdef int64_t* coeff = <int64_t*> calloc(npairs * npairs, sizeof(int64_t))
    if not (ctarget and csign and ent_i and ent_j and ent_s and kstart and coeff):
        free(ctarget); free(csign); free(ent_i); free(ent_j); free(ent_s)
        free(kstart); free(coeff)
        raise MemoryError()

    cdef bint ortho = True
    cdef bint xab_zero = True
    cdef int i, j, k, l, m, s, pos, e1, e2, pa, pb
    try:
        for i in range(nn):
            ctarget[i] = target[i]
            csign[i] = sign[i]

        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                k = ctarget[i * n + j]
                s = csign[i * n + j]
                if ctarget[k * n + j] != i or csign[k * n + j] != -s:
                    ortho = False
                    break
                if ctarget[i * n + k] != j or csign[i * n + k] != -s:
                    ortho = False
                    break
            if not ortho:
                break

        pos = 0
        for k in range(n):
            kstart[k] = pos
            for i in range(n):
                for j in range(n):
                    if i != j and ctarget[i * n + j] == k:
                        ent_i[pos] = i
                        ent_j[pos] = j
                        ent_s[pos] = csign[i * n + j]
                        pos += 1
        kstart[n] = pos

        for k in range(n):
            for e1 in range(kstart[k], kstart[k + 1]):
                for e2 in range(kstart[k], kstart[k + 1]):
                    i = ent_i[e1]; l = ent_i[e2]
                    if i > l: i, l = l, i
                    pa = i * n - i * (i - 1) // 2 + (l - i)
                    j = ent_j[e1]; m = ent_j[e2]
                    if j > m: j, m = m, j
                    pb = j * n - j * (j - 1) // 2 + (m - j)
                    coeff[pa * npairs + pb] += ent_s[e1] * ent_s[e2]

        for i in range(n):
            pa = i * n - i * (i - 1) // 2
            for j in range(n):
                coeff[pa * npairs + j * n - j * (j - 1) // 2] -= 1
        for i in range(n):
            for j in range(n):
                l = i; m = j
                if l > m: l, m = m, l
                pa = l * n - l * (l - 1) // 2 + (m - l)
                coeff[pa * npairs + pa] += 1

        for i in range(npairs * npairs):
            if coeff[i] != 0:
                xab_zero = False
                break

        return bool(ortho), bool(xab_zero)
    finally:
        free(ctarget); free(csign); free(ent_i); free(ent_j); free(ent_s)
        free(kstart); free(coeff)
