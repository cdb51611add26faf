"""Pure-Python enumeration kernels.

Reference implementation of the hot loops: backtracking over the
currently-minimal elements in ascending index order (so the emission
order is lexicographic on element indices), with descent counters
maintained incrementally per labeling.  The compiled kernel in
``_ckernel`` mirrors this module exactly.
"""

from __future__ import annotations


def _prepare(n, covers):
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in covers:
        succ[a].append(b)
        indeg[b] += 1
    for lst in succ:
        lst.sort()
    return succ, indeg


def _apply_prefix(n, succ, indeg, prefix):
    used = [False] * n
    for v in prefix:
        if used[v] or indeg[v] != 0:
            raise ValueError(f"prefix {prefix} is not a valid extension prefix")
        used[v] = True
        for w in succ[v]:
            indeg[w] -= 1
    return used


def count_extensions(n, covers, prefix=()):
    """Number of linear extensions starting with the given prefix."""
    succ, indeg = _prepare(n, covers)
    used = _apply_prefix(n, succ, indeg, prefix)
    rem = n - len(prefix)
    if rem <= 0:
        return 1
    total = 0

    def walk(depth):
        nonlocal total
        for v in range(n):
            if used[v] or indeg[v]:
                continue
            if depth == rem - 1:
                total += 1
                continue
            used[v] = True
            for w in succ[v]:
                indeg[w] -= 1
            walk(depth + 1)
            for w in succ[v]:
                indeg[w] += 1
            used[v] = False

    walk(0)
    return total


def descent_histograms(n, covers, labelings, prefix=()):
    """Per-labeling histograms of descent counts over all linear extensions.

    ``labelings`` is a sequence of value vectors (element -> label).  The
    result has one row per labeling; entry ``d`` counts the extensions
    whose label word has exactly ``d`` descents.
    """
    labs = [list(lab) for lab in labelings]
    nl = len(labs)
    hist = [[0] * max(n, 1) for _ in range(nl)]
    succ, indeg = _prepare(n, covers)
    used = _apply_prefix(n, succ, indeg, prefix)
    des = [0] * nl
    for a, b in zip(prefix, prefix[1:]):
        for i in range(nl):
            if labs[i][b] < labs[i][a]:
                des[i] += 1
    rem = n - len(prefix)
    if rem <= 0:
        for i in range(nl):
            hist[i][des[i]] += 1
        return hist
    last0 = prefix[-1] if prefix else -1

    def walk(depth, last):
        for v in range(n):
            if used[v] or indeg[v]:
                continue
            if last >= 0:
                for i in range(nl):
                    if labs[i][v] < labs[i][last]:
                        des[i] += 1
            if depth == rem - 1:
                for i in range(nl):
                    hist[i][des[i]] += 1
            else:
                used[v] = True
                for w in succ[v]:
                    indeg[w] -= 1
                walk(depth + 1, v)
                for w in succ[v]:
                    indeg[w] += 1
                used[v] = False
            if last >= 0:
                for i in range(nl):
                    if labs[i][v] < labs[i][last]:
                        des[i] -= 1

    walk(0, last0)
    return hist
