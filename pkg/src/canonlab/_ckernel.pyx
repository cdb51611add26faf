# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled enumeration kernels.

Same contract as ``_pykernel``: lexicographic backtracking over the
currently-minimal elements with incrementally maintained descent
counters.  Counters use 64-bit unsigned integers, which is safe for any
input small enough to be enumerated at all.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset


cdef struct Ctx:
    int n
    int rem
    int nl
    int *indeg
    unsigned char *used
    int *succ_off
    int *succ_val
    int *labs            # nl x n, flattened
    int *des
    unsigned long long *hist   # nl x n, flattened
    unsigned long long count


cdef void _walk_count(Ctx *ctx, int depth) noexcept:
    cdef int v, j
    for v in range(ctx.n):
        if ctx.used[v] or ctx.indeg[v] != 0:
            continue
        if depth == ctx.rem - 1:
            ctx.count += 1
            continue
        ctx.used[v] = 1
        for j in range(ctx.succ_off[v], ctx.succ_off[v + 1]):
            ctx.indeg[ctx.succ_val[j]] -= 1
        _walk_count(ctx, depth + 1)
        for j in range(ctx.succ_off[v], ctx.succ_off[v + 1]):
            ctx.indeg[ctx.succ_val[j]] += 1
        ctx.used[v] = 0


cdef void _walk_hist(Ctx *ctx, int depth, int last) noexcept:
    cdef int v, i, j
    for v in range(ctx.n):
        if ctx.used[v] or ctx.indeg[v] != 0:
            continue
        if last >= 0:
            for i in range(ctx.nl):
                if ctx.labs[i * ctx.n + v] < ctx.labs[i * ctx.n + last]:
                    ctx.des[i] += 1
        if depth == ctx.rem - 1:
            for i in range(ctx.nl):
                ctx.hist[i * ctx.n + ctx.des[i]] += 1
        else:
            ctx.used[v] = 1
            for j in range(ctx.succ_off[v], ctx.succ_off[v + 1]):
                ctx.indeg[ctx.succ_val[j]] -= 1
            _walk_hist(ctx, depth + 1, v)
            for j in range(ctx.succ_off[v], ctx.succ_off[v + 1]):
                ctx.indeg[ctx.succ_val[j]] += 1
            ctx.used[v] = 0
        if last >= 0:
            for i in range(ctx.nl):
                if ctx.labs[i * ctx.n + v] < ctx.labs[i * ctx.n + last]:
                    ctx.des[i] -= 1


cdef int _setup_poset(Ctx *ctx, int n, covers, prefix) except -1:
    """Fill adjacency arrays and apply the prefix; returns 0 on success."""
    cdef int a, b, v, j, k
    counts = [0] * n
    for a, b in covers:
        counts[a] += 1
    ctx.succ_off = <int *> malloc((n + 1) * sizeof(int))
    ctx.succ_val = <int *> malloc(max(len(covers), 1) * sizeof(int))
    ctx.indeg = <int *> calloc(max(n, 1), sizeof(int))
    ctx.used = <unsigned char *> calloc(max(n, 1), 1)
    if not (ctx.succ_off and ctx.succ_val and ctx.indeg and ctx.used):
        raise MemoryError()
    ctx.succ_off[0] = 0
    for v in range(n):
        ctx.succ_off[v + 1] = ctx.succ_off[v] + counts[v]
    per_source = sorted(covers)
    fill = [0] * n
    for a, b in per_source:
        ctx.succ_val[ctx.succ_off[a] + fill[a]] = b
        fill[a] += 1
        ctx.indeg[b] += 1
    for v in prefix:
        if ctx.used[v] or ctx.indeg[v] != 0:
            raise ValueError(f"prefix {tuple(prefix)} is not a valid extension prefix")
        ctx.used[v] = 1
        for j in range(ctx.succ_off[v], ctx.succ_off[v + 1]):
            ctx.indeg[ctx.succ_val[j]] -= 1
    return 0


cdef void _free_ctx(Ctx *ctx) noexcept:
    if ctx.succ_off != NULL:
        free(ctx.succ_off)
    if ctx.succ_val != NULL:
        free(ctx.succ_val)
    if ctx.indeg != NULL:
        free(ctx.indeg)
    if ctx.used != NULL:
        free(ctx.used)
    if ctx.labs != NULL:
        free(ctx.labs)
    if ctx.des != NULL:
        free(ctx.des)
    if ctx.hist != NULL:
        free(ctx.hist)


def count_extensions(int n, covers, prefix=()):
    """Number of linear extensions starting with the given prefix."""
    cdef Ctx ctx
    memset(&ctx, 0, sizeof(Ctx))
    ctx.n = n
    ctx.rem = n - len(prefix)
    if ctx.rem <= 0:
        return 1
    try:
        _setup_poset(&ctx, n, covers, prefix)
        ctx.count = 0
        _walk_count(&ctx, 0)
        return int(ctx.count)
    finally:
        _free_ctx(&ctx)


def descent_histograms(int n, covers, labelings, prefix=()):
    """Per-labeling histograms of descent counts over all linear extensions."""
    cdef Ctx ctx
    cdef int i, v, a, b, last0
    memset(&ctx, 0, sizeof(Ctx))
    labs = [list(lab) for lab in labelings]
    ctx.n = n
    ctx.nl = len(labs)
    ctx.rem = n - len(prefix)
    width = max(n, 1)
    try:
        _setup_poset(&ctx, n, covers, prefix)
        ctx.labs = <int *> malloc(max(ctx.nl * n, 1) * sizeof(int))
        ctx.des = <int *> calloc(max(ctx.nl, 1), sizeof(int))
        ctx.hist = <unsigned long long *> calloc(max(ctx.nl * width, 1),
                                                 sizeof(unsigned long long))
        if not (ctx.labs and ctx.des and ctx.hist):
            raise MemoryError()
        for i in range(ctx.nl):
            row = labs[i]
            for v in range(n):
                ctx.labs[i * n + v] = row[v]
        for a, b in zip(prefix, prefix[1:]):
            for i in range(ctx.nl):
                if ctx.labs[i * n + b] < ctx.labs[i * n + a]:
                    ctx.des[i] += 1
        if ctx.rem <= 0:
            return [
                [1 if d == ctx.des[i] else 0 for d in range(width)]
                for i in range(ctx.nl)
            ]
        # wraparound is disabled module-wide, so index the tail explicitly
        last0 = prefix[len(prefix) - 1] if len(prefix) else -1
        _walk_hist(&ctx, 0, last0)
        return [
            [int(ctx.hist[i * width + d]) for d in range(width)]
            for i in range(ctx.nl)
        ]
    finally:
        _free_ctx(&ctx)
