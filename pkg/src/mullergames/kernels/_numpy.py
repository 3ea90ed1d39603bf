"""Pure numpy kernels: the outer loop runs over subarena keys in Python and
all proper submasks of a key are tested at once as an int64 array.

Results, including both counters, are identical to the numba kernels.
"""

import numpy as np

NAME = "numpy"


def _bit_positions(x):
    return [v for v in range(x.bit_length()) if (x >> v) & 1]


def subarena_table(n, succ):
    masks = np.arange(1 << n, dtype=np.int64)
    ok = masks != 0
    for v in range(n):
        member = ((masks >> v) & 1).astype(np.bool_)
        ok &= ~member | ((masks & int(succ[v])) != 0)
    return ok


def _submasks(pos):
    """Nonempty proper submasks of the set with vertex positions ``pos``, descending."""
    k = len(pos)
    idx = np.arange((1 << k) - 2, 0, -1, dtype=np.int64)
    sub = np.zeros_like(idx)
    for t, p in enumerate(pos):
        sub |= ((idx >> t) & 1) << p
    return sub, np.bitwise_count(idx)


def _trap_mask(sub, pos, r, owner0, sigma):
    ok = np.ones(sub.shape, dtype=np.bool_)
    for v in pos:
        member = ((sub >> v) & 1).astype(np.bool_)
        rv = r[v]
        if ((owner0 >> v) & 1) == 1 - sigma:
            ok &= ~member | ((rv & ~sub) == 0)
        else:
            ok &= ~member | ((rv & sub) != 0)
    return ok


def _attractor0(targets, pos, r, owner0):
    a = targets.copy()
    while True:
        before = a.copy()
        for v in pos:
            outside = ((a >> v) & 1) == 0
            if (owner0 >> v) & 1:
                hit = (a & r[v]) != 0
            else:
                hit = (r[v] & ~a) == 0
            a |= (outside & hit).astype(np.int64) << v
        if np.array_equal(a, before):
            return a


def _closed0(sub, pos, r, owner0, context):
    ok = np.ones(sub.shape, dtype=np.bool_)
    for v in pos:
        outside = ((sub >> v) & 1) == 0
        rv = r[v]
        if (owner0 >> v) & 1:
            ok &= ~outside | ((rv & sub) == 0)
        else:
            ok &= ~outside | ((rv & (context & ~sub)) != 0)
    return ok


def partition(n, owner0, succ, accept, alg, verify):
    succ = [int(s) for s in succ]
    owner0 = int(owner0)
    P = np.zeros(1 << n, dtype=np.bool_)
    Q = np.zeros(1 << n, dtype=np.bool_)
    pairs = 0
    attr_calls = 0
    keys = np.flatnonzero(subarena_table(n, succ))
    for i in keys.tolist():
        pos = _bit_positions(i)
        k = len(pos)
        r = [0] * n
        for v in pos:
            r[v] = succ[v] & i
        if k == 1:
            sub = np.zeros(0, dtype=np.int64)
            sizes = sub
        else:
            sub, sizes = _submasks(pos)
        pairs += sub.size
        if accept[i]:
            hits = Q[sub]
            if hits.any():
                hits[hits] = _trap_mask(sub[hits], pos, r, owner0, 0)
            win = not hits.any()
        else:
            cand = np.flatnonzero(P[sub])
            if cand.size:
                cand = cand[_trap_mask(sub[cand], pos, r, owner0, 1)]
            ys = sub[cand]
            if alg == 1:
                a = _attractor0(ys, pos, r, owner0)
                witness = (a == i) | P[i & ~a]
                hit = np.flatnonzero(witness)
                attr_calls += int(hit[0]) + 1 if hit.size else ys.size
            else:
                closed = _closed0(ys, pos, r, owner0, i)
                if verify and ys.size:
                    a = _attractor0(ys, pos, r, owner0)
                    if not np.array_equal(closed, a == ys):
                        raise AssertionError("local closure test disagrees with attractor")
                witness = (sizes[cand] == k - 1) | (closed & P[i & ~ys])
            win = bool(witness.any())
        if win:
            P[i] = True
        else:
            Q[i] = True
    return P, Q, pairs, attr_calls


def max_one_trap(n, owner0, succ, P):
    keys = np.flatnonzero(P).astype(np.int64)
    if keys.size == 0:
        return 0
    owner0 = int(owner0)
    ok = np.ones(keys.shape, dtype=np.bool_)
    for v in range(n):
        member = ((keys >> v) & 1).astype(np.bool_)
        s = int(succ[v])
        if (owner0 >> v) & 1:
            ok &= ~member | ((keys & s) != 0)
        else:
            ok &= ~member | ((s & ~keys) == 0)
    hits = keys[ok]
    return int(hits.max()) if hits.size else 0
