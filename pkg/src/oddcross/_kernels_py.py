"""Pure-Python kernels: exact-cover enumeration and identity classification.

This module is the reference backend. ``oddcross._speedups`` is a compiled
twin with identical semantics; ``oddcross.kernels`` picks one at import
time. Both operate on plain integers and lists so results are directly
comparable.
"""

BACKEND_NAME = "pure-python"

# Pure Python integers are unbounded, so any pair count works.
MAX_PAIR_BITS = None


def enumerate_covers(axis_masks, prefix=(), resume_after=None, limit=2**62):
    """Enumerate exact covers in depth-first lexicographic order.

    ``axis_masks[d]`` lists, for axis d, the candidate matchings encoded as
    bitmasks over unordered-pair slots. A branch picks one candidate per
    axis such that all masks are disjoint; branches are emitted as tuples
    of candidate indices.

    ``prefix`` pins the first choices (subtree restriction), ``resume_after``
    skips everything up to and including a previously emitted branch, and
    ``limit`` caps the number of branches returned, which makes the scan
    restartable in chunks.
    """
    n_axes = len(axis_masks)
    out = []
    p = len(prefix)
    if p > n_axes:
        raise ValueError("prefix longer than the number of axes")

    idx = [0] * n_axes
    used = [0] * (n_axes + 1)
    for d, choice in enumerate(prefix):
        mask = axis_masks[d][choice]
        if mask & used[d]:
            return out  # prefix already conflicts: empty subtree
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
            mask = axis_masks[d][choice]
            if mask & used[d]:
                raise ValueError("resume point is not a valid branch")
            idx[d] = choice
            used[d + 1] = used[d] | mask
        # Position the scan just after the resumed leaf.
        depth = n_axes - 1
        if depth < p:
            return out
        idx[depth] += 1

    while depth >= p:
        if depth == n_axes:
            out.append(tuple(idx))
            if len(out) >= limit:
                return out
            depth -= 1
            idx[depth] += 1
            continue
        candidates = axis_masks[depth]
        moved = False
        while idx[depth] < len(candidates):
            mask = candidates[idx[depth]]
            if not mask & used[depth]:
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


def classify_product_table(n, target, sign):
    """Decide both identity-level properties of a signed product table.

    ``target`` and ``sign`` are flattened n*n arrays over ordered index
    pairs (0-based): entry (i, j) says e_i x e_j = sign * e_target, with
    target = -1 and sign = 0 on the diagonal.

    Returns ``(orthogonality_zero, xab_zero)``:

    * ``orthogonality_zero``: the polynomials (AxB).A and (AxB).B vanish
      identically, which holds exactly when the table is antisymmetric
      under swapping the output slot with either input slot.
    * ``xab_zero``: the quartic |AxB|^2 - |A|^2|B|^2 + (A.B)^2 is the zero
      polynomial, decided by exact integer coefficient accumulation over
      monomials a_i a_l b_j b_m.
    """
    ortho = True
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            k = target[i * n + j]
            s = sign[i * n + j]
            # Swap output with first input: need L[k,j,i] == -L[i,j,k].
            if target[k * n + j] != i or sign[k * n + j] != -s:
                ortho = False
                break
            # Swap output with second input: need L[i,k,j] == -L[i,j,k].
            if target[i * n + k] != j or sign[i * n + k] != -s:
                ortho = False
                break
        if not ortho:
            break

    # Monomial index for an unordered pair with repetition, i <= l.
    npairs = n * (n + 1) // 2

    def pr(i, l):
        if i > l:
            i, l = l, i
        return i * n - i * (i - 1) // 2 + (l - i)

    coeff = [0] * (npairs * npairs)

    # |AxB|^2: square each output component's bilinear form.
    for k in range(n):
        entries = [
            (i, j, sign[i * n + j])
            for i in range(n)
            for j in range(n)
            if i != j and target[i * n + j] == k
        ]
        for i1, j1, s1 in entries:
            for i2, j2, s2 in entries:
                coeff[pr(i1, i2) * npairs + pr(j1, j2)] += s1 * s2

    # -|A|^2 |B|^2 + (A.B)^2.
    for i in range(n):
        for j in range(n):
            coeff[pr(i, i) * npairs + pr(j, j)] -= 1
            coeff[pr(i, j) * npairs + pr(i, j)] += 1

    xab_zero = not any(coeff)
    return ortho, xab_zero
