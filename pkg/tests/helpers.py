"""Independent checks shared by the unit and acceptance suites."""
from __future__ import annotations

import itertools

import numpy as np

from semivar.engine import Congruence, FiniteSemigroup


def word_values(S: FiniteSemigroup, words, m: int) -> dict[tuple, np.ndarray]:
    """Value of every word under every assignment of ``m`` letters, by prefix recursion."""
    k = S.order
    grid = np.array(list(itertools.product(range(k), repeat=m)), dtype=np.int64).reshape(-1, m)
    vals: dict[tuple, np.ndarray] = {}
    for w in sorted(words, key=len):
        if len(w) == 1:
            vals[w] = grid[:, w[0]]
        else:
            vals[w] = S.table[vals[w[:-1]], grid[:, w[-1]]]
    return vals


def soundness_violations(cong: Congruence, S: FiniteSemigroup) -> list:
    """Merges of ``cong`` that fail in the model ``S`` (which must satisfy the system)."""
    vals = word_values(S, cong.words, cong.m)
    t = S.table
    bad = []
    by_root: dict[int, tuple] = {}
    z = cong.zero_root
    for w in cong.words:
        r = cong.find(w)
        v = vals[w]
        if r == z:
            # w = 0: s.w = w.s = w for every element s
            if not (np.all(t[:, v] == v[None, :]) and np.all(t[v, :] == v[:, None])):
                bad.append((w, "0"))
            continue
        if r in by_root:
            rep = by_root[r]
            if not np.array_equal(vals[rep], v):
                bad.append((w, rep))
        else:
            by_root[r] = w
    return bad
