"""Pure-Python kernels; ``_kernels.pyx`` mirrors these function for function.

Everything here works on plain tuples of ints so the compiled twin can share
the exact same signatures.  Vertices of the quotient multigraph are flattened
to ``v * c + i`` where ``v = s*x + r*y`` and ``i = (x - y) mod c``.
"""


class KernelError(ValueError):
    """Raised when an arrival family cannot be walked back to a partition."""


def cell_counts(parts, r, s, c):
    """Return ``(mid, crit_plus, crit_minus)`` over cells whose hook is divisible by ``c``.

    Works for every slope ``r/s`` including ``0/1`` and ``1/0``.
    """
    mid = plus = minus = 0
    n = len(parts)
    if not n:
        return 0, 0, 0
    conj = [0] * parts[0]
    for p in parts:
        for x in range(p):
            conj[x] += 1
    for y in range(n):
        p = parts[y]
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
    return mid, plus, minus


def divisible_arm_legs(parts, c):
    """``(arm, leg)`` for every cell whose hook length is divisible by ``c``."""
    out = []
    if not parts:
        return out
    conj = [0] * parts[0]
    for p in parts:
        for x in range(p):
            conj[x] += 1
    for y, p in enumerate(parts):
        for x in range(p):
            a = p - x - 1
            leg = conj[x] - y - 1
            if (a + leg + 1) % c == 0:
                out.append((a, leg))
    return out


def _window_letters(parts, X, Y):
    # letters of the edges arriving at successive points after (0, Y), ending at (X, 0)
    n = len(parts)
    out = ["S"] * (Y - n)
    for y in range(n - 1, -1, -1):
        above = parts[y + 1] if y + 1 < n else 0
        out.extend("E" * (parts[y] - above))
        out.append("S")
    out.extend("E" * (X - (parts[0] if n else 0)))
    return out


def fits_window(parts, r, s, k):
    """Every box has its top-right corner on or below ``s*x + r*y = k``."""
    return all(s * p + r * (y + 1) <= k for y, p in enumerate(parts))


def arrival_words(parts, r, s, c, k):
    """Per-vertex arrival words (lists of letters) of the window ``v <= k``, as a dict."""
    if not fits_window(parts, r, s, k):
        raise KernelError("partition does not fit the window")
    k1 = k // (r * s)
    X, Y = k1 * r, k1 * s
    root = k * c
    words = {root: ["S"]}
    x, y = 0, Y
    for d in _window_letters(parts, X, Y):
        if d == "E":
            x += 1
        else:
            y -= 1
        words.setdefault((s * x + r * y) * c + (x - y) % c, []).append(d)
    return words


def involute_parts(parts, r, s, c, k):
    """The involution at slope ``r/s`` on a partition inside the window ``k``."""
    k1 = k // (r * s)
    X, Y = k1 * r, k1 * s
    root = k * c
    words = arrival_words(parts, r, s, c, k)

    depth = {root: 0}
    for vid in words:
        chain = []
        cur = vid
        while cur not in depth:
            chain.append(cur)
            if len(chain) > len(words):
                raise KernelError("first arrivals contain a cycle")
            v, i = divmod(cur, c)
            ip = (i - 1) % c
            cur = ((v - s) if words[cur][0] == "E" else (v + r)) * c + ip
            if cur not in words:
                raise KernelError("first arrival leaves the window")
        d = depth[cur]
        for node in reversed(chain):
            d += 1
            depth[node] = d

    new_words = {}
    for vid, w in words.items():
        v, i = divmod(vid, c)
        ip = (i - 1) % c
        south = (v + r) * c + ip
        east = (v - s) * c + ip
        if (vid != root and v + r <= k and v - s >= 0 and south in words
                and east in words and depth[south] == depth[east]):
            new_words[vid] = w[::-1]
        else:
            new_words[vid] = w[:1] + w[:0:-1]
    return walk_back(new_words, r, s, c, k)


def walk_back(words, r, s, c, k):
    """Rebuild a partition from window arrival words by consuming last letters."""
    k1 = k // (r * s)
    X, Y = k1 * r, k1 * s
    root = k * c
    remaining = {vid: len(w) for vid, w in words.items()}
    if remaining.get(root, 0) < 1 or words[root][0] != "S":
        raise KernelError("root word must start with S")
    remaining[root] -= 1
    rows = []
    x, y = X, 0
    for _ in range(X + Y):
        v = s * x + r * y
        if x < 0 or v > k:
            raise KernelError("walk left the window")
        vid = v * c + (x - y) % c
        left = remaining.get(vid, 0)
        if left == 0:
            raise KernelError(f"vertex {divmod(vid, c)} ran out of letters")
        remaining[vid] = left - 1
        if words[vid][left - 1 + (vid == root)] == "E":
            x -= 1
        else:
            rows.append(x)
            y += 1
    if (x, y) != (0, Y) or any(remaining.values()):
        raise KernelError("arrival words are not realised by a lattice path")
    return tuple(p for p in rows if p > 0)


def arrival_counts(parts, r, s, c, k):
    """Flat tuple of ``(E_in, S_in)`` for every vertex id ``0 .. (k+1)*c - 1``.

    Out-degrees are forced by in-degrees (an east edge into ``(v+s,[i+1])``
    always leaves ``(v,[i])``), so this tuple determines the whole multigraph.
    """
    out = [0] * (2 * (k + 1) * c)
    for vid, w in arrival_words(parts, r, s, c, k).items():
        e = w.count("E")
        out[2 * vid] = e
        out[2 * vid + 1] = len(w) - e
    return tuple(out)
