"""Compiled inner loops.

Everything here is a plain-array transcription of an algorithm that also
exists in pure Python elsewhere in the package; the Python versions stay the
reference implementations and the test suite cross-checks the two on seeded
inputs.  When numba is unavailable the same code runs uncompiled.
"""
from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


# Status codes shared by the insertion kernel.
OK = 0
OVERFLOW = 1
DUPLICATE = 2


@njit(cache=True)
def insertion_record(xs: np.ndarray, cap: int):
    """Row-insert xs[0], xs[1], ... and record where each new box lands.

    Returns (status, bi, bj, row_buf, row_lens): bi/bj give the 1-based
    (column, row) of the box created by each insertion.  status is OVERFLOW
    if more than ``cap`` rows or columns are needed (caller retries bigger or
    falls back) and DUPLICATE if an input value is already present.
    """
    n = xs.shape[0]
    rows = np.empty((cap, cap), dtype=np.float64)
    lens = np.zeros(cap, dtype=np.int64)
    bi = np.zeros(n, dtype=np.int64)
    bj = np.zeros(n, dtype=np.int64)
    for m in range(n):
        x = xs[m]
        r = 0
        while True:
            if r >= cap:
                return OVERFLOW, bi, bj, rows, lens
            length = lens[r]
            lo = 0
            hi = length
            while lo < hi:
                mid = (lo + hi) // 2
                if rows[r, mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo < length and rows[r, lo] == x:
                return DUPLICATE, bi, bj, rows, lens
            if lo == length:
                if length >= cap:
                    return OVERFLOW, bi, bj, rows, lens
                rows[r, length] = x
                lens[r] = length + 1
                bi[m] = length + 1
                bj[m] = r + 1
                break
            y = rows[r, lo]
            rows[r, lo] = x
            x = y
            r += 1
    return OK, bi, bj, rows, lens


@njit(cache=True)
def lazy_walk(bi: np.ndarray, bj: np.ndarray):
    """Track the walker that only moves when a box appears beside it.

    The walker starts on the first box and steps onto a new box exactly when
    that box is its east or north neighbor.  Returns the walker's (column,
    row) after each step of the input sequence.
    """
    n = bi.shape[0]
    qi = np.zeros(n, dtype=np.int64)
    qj = np.zeros(n, dtype=np.int64)
    ci, cj = bi[0], bj[0]
    qi[0] = ci
    qj[0] = cj
    for m in range(1, n):
        if (bi[m] == ci + 1 and bj[m] == cj) or (bi[m] == ci and bj[m] == cj + 1):
            ci, cj = bi[m], bj[m]
        qi[m] = ci
        qj[m] = cj
    return qi, qj


@njit(cache=True)
def enhanced_replay(us: np.ndarray, lo: int, width: int):
    """Replay a growth trace as particle jumps and follow the starred pair.

    us[m] = i - j of the m-th box.  Site s (an integer) stands for the point
    s + 1/2 on the line; initially sites < 0 are occupied.  The box with
    u = i - j makes the particle on site u - 1 hop to site u.  The starred
    hole/particle pair starts at sites (-1, 0) after the first box; a hop BY
    the starred particle carries the pair right, a hop ONTO the starred hole
    carries it left, and any other hop leaves it alone.

    Returns (status, x, v): x[m] is the pair's midpoint displacement and
    v[m] its jump count after m + 1 boxes.  status != 0 flags an illegal
    jump (source empty or target full), which indicates a corrupt trace.
    """
    n = us.shape[0]
    occ = np.zeros(width, dtype=np.uint8)
    for k in range(width):
        if lo + k < 0:
            occ[k] = 1
    x = np.zeros(n, dtype=np.int64)
    v = np.zeros(n, dtype=np.int64)
    if n == 0:
        return 0, x, v
    if us[0] != 0:
        return 1, x, v
    occ[-lo - 1] = 0
    occ[-lo] = 1
    s = -1  # starred hole site; starred particle sits at s + 1
    jumps = 0
    x[0] = s + 1
    v[0] = 0
    for m in range(1, n):
        a = us[m] - 1  # particle hops from site a to a + 1
        ka = a - lo
        if ka < 0 or ka + 1 >= width:
            return 1, x, v
        if occ[ka] == 0 or occ[ka + 1] == 1:
            return 1, x, v
        occ[ka] = 0
        occ[ka + 1] = 1
        if a == s + 1:
            s += 1
            jumps += 1
        elif a + 1 == s:
            s -= 1
            jumps += 1
        x[m] = s + 1
        v[m] = jumps
    return 0, x, v


@njit(cache=True)
def lpp_grid(w: np.ndarray) -> np.ndarray:
    """Last-passage times over the quarter-plane grid of weights ``w``.

    g[a, b] = w[a, b] + max(g[a-1, b], g[a, b-1]) with missing terms 0;
    indices are 0-based (box (i, j) lives at [i-1, j-1]).
    """
    m, k = w.shape
    g = np.empty((m, k), dtype=np.float64)
    for a in range(m):
        for b in range(k):
            best = 0.0
            if a > 0 and g[a - 1, b] > best:
                best = g[a - 1, b]
            if b > 0 and g[a, b - 1] > best:
                best = g[a, b - 1]
            g[a, b] = w[a, b] + best
    return g


@njit(cache=True)
def color_grid(g: np.ndarray) -> np.ndarray:
    """Two-source infection colors from last-passage times.

    Axis 0 indexes the column coordinate i, axis 1 the row coordinate j.
    Box (1,1) is uncolored (0); the rest of the first column (i = 1) is
    green (1), the rest of the first row (j = 1) is red (2); every other box
    inherits the color of whichever in-neighbor was infected later, i.e.
    has the larger passage time.
    """
    m, k = g.shape
    c = np.zeros((m, k), dtype=np.int8)
    for a in range(m):
        for b in range(k):
            if a == 0 and b == 0:
                c[a, b] = 0
            elif a == 0:
                c[a, b] = 1
            elif b == 0:
                c[a, b] = 2
            else:
                c[a, b] = c[a - 1, b] if g[a - 1, b] > g[a, b - 1] else c[a, b - 1]
    return c


@njit(cache=True)
def g_interface_walk(g: np.ndarray):
    """The sliding path read directly off last-passage times.

    Start at box (1,1) and repeatedly step to whichever of the east/north
    neighbors has the smaller passage time (equivalently, was infected
    first), stopping at the grid's far corner.  Returns 1-based (i, j)
    arrays.
    """
    m, k = g.shape
    cap = m + k - 1
    pi = np.zeros(cap, dtype=np.int64)
    pj = np.zeros(cap, dtype=np.int64)
    a = 0
    b = 0
    idx = 0
    pi[idx] = 1
    pj[idx] = 1
    while a + 1 < m or b + 1 < k:
        if a + 1 >= m:
            b += 1
        elif b + 1 >= k:
            a += 1
        elif g[a + 1, b] < g[a, b + 1]:
            a += 1
        else:
            b += 1
        idx += 1
        pi[idx] = a + 1
        pj[idx] = b + 1
    return pi[: idx + 1], pj[: idx + 1]
