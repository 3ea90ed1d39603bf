"""Scalar bitmask kernels compiled with numba.

Every function works on int64 masks and a per-vertex successor array. The
partition loop visits each (key, proper submask) pair exactly once.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _is_subarena(n, succ, x):
    for v in range(n):
        if (x >> v) & 1 and (succ[v] & x) == 0:
            return False
    return True


@njit(cache=True)
def _is_trap(n, r, owner0, y, sigma):
    # r holds successors already restricted to the context
    for v in range(n):
        if (y >> v) & 1:
            mine = ((owner0 >> v) & 1) == (1 - sigma)
            if mine:
                if r[v] & ~y:
                    return False
            elif (r[v] & y) == 0:
                return False
    return True


@njit(cache=True)
def _attractor0(n, r, owner0, context, target):
    a = target
    changed = True
    while changed:
        changed = False
        for v in range(n):
            bit = np.int64(1) << v
            if (context & bit) and not (a & bit):
                if (owner0 >> v) & 1:
                    hit = (r[v] & a) != 0
                else:
                    hit = (r[v] & ~a) == 0
                if hit:
                    a |= bit
                    changed = True
    return a


@njit(cache=True)
def _closed0(n, r, owner0, context, y):
    # Attr_0(y) == y inside context, by local edge inspection
    rest = context & ~y
    for v in range(n):
        if (rest >> v) & 1:
            if (owner0 >> v) & 1:
                if r[v] & y:
                    return False
            elif (r[v] & rest) == 0:
                return False
    return True


@njit(cache=True)
def partition(n, owner0, succ, accept, alg, verify):
    size = np.int64(1) << n
    P = np.zeros(size, dtype=np.bool_)
    Q = np.zeros(size, dtype=np.bool_)
    r = np.empty(n, dtype=np.int64)
    pairs = np.int64(0)
    attr_calls = np.int64(0)
    for i in range(1, size):
        if not _is_subarena(n, succ, i):
            continue
        for v in range(n):
            r[v] = succ[v] & i
        k = _popcount(i)
        accepted = accept[i]
        win = accepted
        decided = False
        j = (i - 1) & i
        while j:
            pairs += 1
            if not decided:
                if accepted:
                    if Q[j] and _is_trap(n, r, owner0, j, 0):
                        win = False
                        decided = True
                elif P[j] and _is_trap(n, r, owner0, j, 1):
                    if alg == 1:
                        a = _attractor0(n, r, owner0, i, j)
                        attr_calls += 1
                        if a == i or P[i & ~a]:
                            win = True
                            decided = True
                    else:
                        closed = _closed0(n, r, owner0, i, j)
                        if verify:
                            if closed != (_attractor0(n, r, owner0, i, j) == j):
                                raise AssertionError("local closure test disagrees with attractor")
                        if _popcount(j) == k - 1 or (closed and P[i & ~j]):
                            win = True
                            decided = True
            j = (j - 1) & i
        if win:
            P[i] = True
        else:
            Q[i] = True
    return P, Q, pairs, attr_calls


@njit(cache=True)
def max_one_trap(n, owner0, succ, P):
    full = (np.int64(1) << n) - 1
    for i in range(full, 0, -1):
        if P[i] and _is_trap(n, succ, owner0, i, 1):
            return i
    return 0


def subarena_table(n, succ):
    return _subarena_table(n, np.asarray(succ, dtype=np.int64))


@njit(cache=True)
def _subarena_table(n, succ):
    size = np.int64(1) << n
    out = np.zeros(size, dtype=np.bool_)
    for i in range(1, size):
        out[i] = _is_subarena(n, succ, i)
    return out
