"""Compiled backtracking kernel for tribracket enumeration.

The tensor is a flat int64 array over cells ``(i*n + j)*n + k`` with -1 for
unset entries.  Three bitmask families record the values used on each line
in the three axis directions.  After every placement the compatibility
identity is propagated: as soon as the three inner entries of an instance
are known and one outer entry is known, the other two outer entries are
forced.  Lines with a single missing value are completed as well.
"""

import numba as nb
import numpy as np


@nb.njit(cache=True, nogil=True)
def _assign(T, mJK, mIK, mIJ, trail, st, n, i, j, k, v):
    idx = (i * n + j) * n + k
    cur = T[idx]
    if cur >= 0:
        return cur == v
    bit = 1 << v
    if (mJK[j * n + k] & bit) or (mIK[i * n + k] & bit) or (mIJ[i * n + j] & bit):
        return False
    T[idx] = v
    mJK[j * n + k] |= bit
    mIK[i * n + k] |= bit
    mIJ[i * n + j] |= bit
    trail[st[0]] = idx
    st[0] += 1
    return True


@nb.njit(cache=True, nogil=True)
def _propagate(T, mJK, mIK, mIJ, trail, st, n):
    full = (1 << n) - 1
    nn = n * n
    while True:
        start = st[0]
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    p = T[(a * n + b) * n + c]
                    if p < 0:
                        continue
                    for d in range(n):
                        q = T[(a * n + c) * n + d]
                        r = T[(a * n + b) * n + d]
                        if q < 0 or r < 0:
                            continue
                        v = T[(c * n + p) * n + q]
                        if v < 0:
                            v = T[(b * n + p) * n + r]
                        if v < 0:
                            v = T[(d * n + r) * n + q]
                        if v < 0:
                            continue
                        if not _assign(T, mJK, mIK, mIJ, trail, st, n, c, p, q, v):
                            return False
                        if not _assign(T, mJK, mIK, mIJ, trail, st, n, b, p, r, v):
                            return False
                        if not _assign(T, mJK, mIK, mIJ, trail, st, n, d, r, q, v):
                            return False
        for axis in range(3):
            for x in range(n):
                for y in range(n):
                    if axis == 0:
                        m = mJK[x * n + y]
                    elif axis == 1:
                        m = mIK[x * n + y]
                    else:
                        m = mIJ[x * n + y]
                    free = full & ~m
                    if free == 0 or (free & (free - 1)) != 0:
                        continue
                    v = 0
                    while (free >> v) & 1 == 0:
                        v += 1
                    for z in range(n):
                        if axis == 0:
                            idx = (z * n + x) * n + y
                        elif axis == 1:
                            idx = (x * n + z) * n + y
                        else:
                            idx = (x * n + y) * n + z
                        if T[idx] < 0:
                            if not _assign(T, mJK, mIK, mIJ, trail, st, n,
                                           idx // nn, (idx // n) % n, idx % n, v):
                                return False
                            break
        if st[0] == start:
            return True


@nb.njit(cache=True, nogil=True)
def _undo(T, mJK, mIK, mIJ, trail, st, upto, n):
    while st[0] > upto:
        st[0] -= 1
        idx = trail[st[0]]
        k = idx % n
        j = (idx // n) % n
        i = idx // (n * n)
        bit = 1 << T[idx]
        mJK[j * n + k] &= ~bit
        mIK[i * n + k] &= ~bit
        mIJ[i * n + j] &= ~bit
        T[idx] = -1


@nb.njit(cache=True, nogil=True)
def is_lexmin(T, n, inv_perms):
    """True iff no relabeling of the flat tensor T is lexicographically smaller.

    Row ``s`` of ``inv_perms`` is the inverse of a permutation ``sigma``; the
    relabeled tensor is ``Y[i,j,k] = sigma(T[s(i), s(j), s(k)])``.
    """
    N = n * n * n
    for p in range(inv_perms.shape[0]):
        s = inv_perms[p]
        for idx in range(N):
            i = idx // (n * n)
            j = (idx // n) % n
            k = idx % n
            t = T[(s[i] * n + s[j]) * n + s[k]]
            # sigma(t) is the position of t in s
            y = 0
            while s[y] != t:
                y += 1
            x = T[idx]
            if y != x:
                if y < x:
                    return False
                break
    return True


@nb.njit(cache=True, nogil=True)
def search(n, prefix, stop, out, iso_only, inv_perms):
    """Enumerate completions of ``prefix``.

    A state is recorded when the first unset cell index reaches ``stop``
    (``stop = n**3`` records complete tensors).  Returns ``(count, nodes)``;
    only the first ``out.shape[0]`` states are written.
    """
    N = n * n * n
    T = -np.ones(N, np.int64)
    mJK = np.zeros(n * n, np.int64)
    mIK = np.zeros(n * n, np.int64)
    mIJ = np.zeros(n * n, np.int64)
    trail = np.zeros(N, np.int64)
    st = np.zeros(1, np.int64)
    count = 0
    nodes = 0
    for idx in range(N):
        v = prefix[idx]
        if v >= 0:
            if not _assign(T, mJK, mIK, mIJ, trail, st, n,
                           idx // (n * n), (idx // n) % n, idx % n, v):
                return 0, 0
    if not _propagate(T, mJK, mIK, mIJ, trail, st, n):
        return 0, 0
    cell = np.zeros(N + 1, np.int64)
    val = np.zeros(N + 1, np.int64)
    mark = np.zeros(N + 1, np.int64)
    c0 = 0
    while c0 < N and T[c0] >= 0:
        c0 += 1
    cell[0] = c0
    mark[0] = st[0]
    depth = 0
    while depth >= 0:
        c = cell[depth]
        if c >= stop:
            if stop < N or not iso_only or is_lexmin(T, n, inv_perms):
                if count < out.shape[0]:
                    for idx in range(N):
                        out[count, idx] = T[idx]
                count += 1
            depth -= 1
            continue
        _undo(T, mJK, mIK, mIJ, trail, st, mark[depth], n)
        v = val[depth]
        if v >= n:
            depth -= 1
            continue
        val[depth] = v + 1
        if not _assign(T, mJK, mIK, mIJ, trail, st, n, c // (n * n), (c // n) % n, c % n, v):
            continue
        nodes += 1
        if not _propagate(T, mJK, mIK, mIJ, trail, st, n):
            continue
        nc = c + 1
        while nc < N and T[nc] >= 0:
            nc += 1
        depth += 1
        cell[depth] = nc
        val[depth] = 0
        mark[depth] = st[0]
    _undo(T, mJK, mIK, mIJ, trail, st, 0, n)
    return count, nodes


@nb.njit(cache=True, nogil=True)
def canonical_flat(T, n, inv_perms):
    """Lexicographically least relabeling of a flat tensor."""
    N = n * n * n
    best = T.copy()
    Y = np.empty(N, np.int64)
    for p in range(inv_perms.shape[0]):
        s = inv_perms[p]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    t = T[(s[i] * n + s[j]) * n + s[k]]
                    y = 0
                    while s[y] != t:
                        y += 1
                    Y[(i * n + j) * n + k] = y
        for idx in range(N):
            if Y[idx] != best[idx]:
                if Y[idx] < best[idx]:
                    best[:] = Y
                break
    return best
