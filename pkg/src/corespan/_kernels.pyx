# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``: same functions, same results."""

from libc.stdlib cimport malloc, calloc, free

from corespan._kernels_py import KernelError, arrival_words, divisible_arm_legs, walk_back


cdef inline long pmod(long a, long m) nogil:
    cdef long q = a % m
    return q + m if q < 0 else q


def cell_counts(parts, long r, long s, long c):
    cdef Py_ssize_t n = len(parts)
    if n == 0:
        return 0, 0, 0
    cdef long first = parts[0]
    cdef long *row = <long *> malloc(n * sizeof(long))
    cdef long *conj = <long *> calloc(first, sizeof(long))
    cdef long mid = 0, plus = 0, minus = 0
    cdef long a, leg, t, p
    cdef Py_ssize_t x, y
    try:
        for y in range(n):
            p = parts[y]
            row[y] = p
            for x in range(p):
                conj[x] += 1
        for y in range(n):
            p = row[y]
            for x in range(p):
                a = p - x - 1
                leg = conj[x] - y - 1
                if (a + leg + 1) % c:
                    continue
                t = s * a - r * leg
                if t == r:
                    plus += 1
                elif t == -s:
                    minus += 1
                elif -s < t < r:
                    mid += 1
    finally:
        free(row)
        free(conj)
    return mid, plus, minus


def involute_parts(parts, long r, long s, long c, long k):
    cdef long k1 = k // (r * s)
    cdef long X = k1 * r, Y = k1 * s
    cdef long N = X + Y
    cdef long nv = (k + 1) * c
    cdef long root = k * c
    cdef Py_ssize_t n = len(parts)
    cdef long *prt = <long *> malloc((n + 1) * sizeof(long))
    cdef char *letters = <char *> malloc(N + 1)
    cdef long *target = <long *> malloc((N + 1) * sizeof(long))
    cdef long *cnt = <long *> calloc(nv, sizeof(long))
    cdef long *start = <long *> malloc((nv + 1) * sizeof(long))
    cdef long *fill = <long *> malloc(nv * sizeof(long))
    cdef char *buf = <char *> malloc(N + 1)
    cdef long *depth = <long *> malloc(nv * sizeof(long))
    cdef long *stack = <long *> malloc((nv + 1) * sizeof(long))
    cdef char *flip = <char *> calloc(nv, 1)
    cdef long i, j, y, x, v, vid, cur, ip, top, d, a, b, lo, hi, left
    cdef char tmp
    cdef list rows = []
    try:
        for i in range(n):
            if s * parts[i] + r * (i + 1) > k:
                raise KernelError("partition does not fit the window")
        for i in range(n):
            prt[i] = parts[i]
        prt[n] = 0
        # boundary letters inside the window, then their target vertices
        j = 0
        for i in range(Y - n):
            letters[j] = 83  # S
            j += 1
        for y in range(n - 1, -1, -1):
            for i in range(prt[y] - prt[y + 1]):
                letters[j] = 69  # E
                j += 1
            letters[j] = 83
            j += 1
        while j < N:
            letters[j] = 69
            j += 1
        if j != N:
            raise KernelError("partition does not fit the window")

        cnt[root] = 1
        x = 0
        y = Y
        for j in range(N):
            if letters[j] == 69:
                x += 1
            else:
                y -= 1
            vid = (s * x + r * y) * c + pmod(x - y, c)
            target[j] = vid
            cnt[vid] += 1
        start[0] = 0
        for i in range(nv):
            start[i + 1] = start[i] + cnt[i]
            fill[i] = start[i]
        buf[fill[root]] = 83
        fill[root] += 1
        for j in range(N):
            buf[fill[target[j]]] = letters[j]
            fill[target[j]] += 1

        # depths in the first-arrival tree
        for i in range(nv):
            depth[i] = -1
        depth[root] = 0
        for i in range(nv):
            if cnt[i] == 0 or depth[i] >= 0:
                continue
            top = 0
            cur = i
            while depth[cur] < 0:
                if top > nv:
                    raise KernelError("first arrivals contain a cycle")
                stack[top] = cur
                top += 1
                v = cur // c
                ip = pmod(cur - v * c - 1, c)
                if buf[start[cur]] == 69:
                    v -= s
                else:
                    v += r
                if v < 0 or v > k:
                    raise KernelError("first arrival leaves the window")
                cur = v * c + ip
                if cnt[cur] == 0:
                    raise KernelError("first arrival leaves the window")
            d = depth[cur]
            while top > 0:
                top -= 1
                d += 1
                depth[stack[top]] = d

        for i in range(nv):
            if cnt[i] == 0 or i == root:
                continue
            v = i // c
            ip = pmod(i - v * c - 1, c)
            if v + r <= k and v - s >= 0:
                a = (v + r) * c + ip
                b = (v - s) * c + ip
                if cnt[a] and cnt[b] and depth[a] == depth[b]:
                    flip[i] = 1
        for i in range(nv):
            if cnt[i] < 2:
                continue
            lo = start[i] if flip[i] else start[i] + 1
            hi = start[i + 1] - 1
            while lo < hi:
                tmp = buf[lo]
                buf[lo] = buf[hi]
                buf[hi] = tmp
                lo += 1
                hi -= 1

        # walk back from (X, 0), consuming the last unread letter at each vertex
        for i in range(nv):
            fill[i] = start[i + 1]
        x = X
        y = 0
        for j in range(N):
            v = s * x + r * y
            if x < 0 or v > k:
                raise KernelError("walk left the window")
            vid = v * c + pmod(x - y, c)
            left = fill[vid] - start[vid]
            if left <= (1 if vid == root else 0):
                raise KernelError("vertex ran out of letters")
            fill[vid] -= 1
            if buf[fill[vid]] == 69:
                x -= 1
            else:
                if x > 0:
                    rows.append(x)
                y += 1
        if x != 0 or y != Y:
            raise KernelError("arrival words are not realised by a lattice path")
    finally:
        free(prt)
        free(letters)
        free(target)
        free(cnt)
        free(start)
        free(fill)
        free(buf)
        free(depth)
        free(stack)
        free(flip)
    return tuple(rows)



def arrival_counts(parts, long r, long s, long c, long k):
    cdef long k1 = k // (r * s)
    cdef long X = k1 * r, Y = k1 * s
    cdef long nv = (k + 1) * c
    cdef Py_ssize_t n = len(parts)
    cdef long x, y, p, above, i, step
    for i in range(n):
        if s * parts[i] + r * (i + 1) > k:
            raise KernelError("partition does not fit the window")
    cdef long *out = <long *> calloc(2 * nv, sizeof(long))
    try:
        out[2 * k * c + 1] = 1
        x = 0
        y = Y
        # south run down the y axis, then the profile, then east along the x axis
        while y > n:
            y -= 1
            out[2 * ((s * x + r * y) * c + pmod(x - y, c)) + 1] += 1
        for i in range(n - 1, -1, -1):
            p = parts[i]
            above = parts[i + 1] if i + 1 < n else 0
            for step in range(p - above):
                x += 1
                out[2 * ((s * x + r * y) * c + pmod(x - y, c))] += 1
            y -= 1
            out[2 * ((s * x + r * y) * c + pmod(x - y, c)) + 1] += 1
        while x < X:
            x += 1
            out[2 * ((s * x + r * y) * c + pmod(x - y, c))] += 1
        return tuple([out[i] for i in range(2 * nv)])
    finally:
        free(out)
