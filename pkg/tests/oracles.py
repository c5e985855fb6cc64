"""Independent brute-force reference implementations used by the tests.

Nothing here imports the statistics from macfill; each definition is written
out directly from the combinatorial description, using different data
structures (dicts of cells, explicit augmented diagrams, list deletion).
"""

from itertools import product
from math import inf


def diagram(shape):
    return {(i, j) for i, p in enumerate(shape, 1) for j in range(1, p + 1)}


def conjugate_oracle(shape):
    cells = diagram(shape)
    cols = sorted({j for _, j in cells})
    return tuple(sum(1 for (i, jj) in cells if jj == j) for j in cols)


def leg_oracle(shape, u):
    cells = diagram(shape)
    return sum(1 for (i, j) in cells if j == u[1] and i > u[0])


def as_dict(rows):
    return {(i, j): a for i, r in enumerate(rows, 1) for j, a in enumerate(r, 1)}


def maj_oracle(rows):
    """Column by column: for each descent below, add (cells below it) + 1."""
    shape = [len(r) for r in rows]
    total = 0
    for j in range(1, (shape[0] if shape else 0) + 1):
        column = [r[j - 1] for r in rows if len(r) >= j]
        h = len(column)
        for k in range(1, h):
            if column[k] > column[k - 1]:
                total += (h - 1 - k) + 1
    return total


def in_pattern_set(x, y, z):
    return (y < z < x) or (x < y < z) or (z < x < y) or (x == y and y != z)


def inv_oracle(rows):
    """Materialise the 0-augmented diagram and count every qualifying (u, v, w)."""
    sigma = as_dict(rows)
    aug = dict(sigma)
    for j in range(1, len(rows[0]) + 1 if rows else 1):
        aug[(0, j)] = 0
    count = 0
    for u, w in product(sigma, sigma):
        if u[0] == w[0] and w[1] > u[1]:
            v = (u[0] - 1, u[1])
            if in_pattern_set(aug[u], aug[v], aug[w]):
                count += 1
    return count


def quinv_oracle(rows):
    """Materialise the infinity-augmented diagram and count every qualifying (u', v', w')."""
    sigma = as_dict(rows)
    aug = dict(sigma)
    for (i, j) in sigma:
        if (i + 1, j) not in sigma:
            aug[(i + 1, j)] = inf
    count = 0
    for v, w in product(sigma, sigma):
        if v[0] == w[0] and w[1] > v[1]:
            u = (v[0] + 1, v[1])
            if in_pattern_set(aug[u], aug[v], aug[w]):
                count += 1
    return count


def charge_index_oracle(w):
    """Charge of a standard word by index labelling: 1 gets index 0, and i+1 gets
    index(i) + 1 when it lies to the right of i, else index(i). Charge = sum of indices."""
    pos = {a: p for p, a in enumerate(w)}
    idx, total = 0, 0
    for i in range(2, len(w) + 1):
        if pos[i] > pos[i - 1]:
            idx += 1
        total += idx
    return total


def _extract(items, letters, from_right):
    """items: list of (position, letter). Scan cyclically starting from one end."""
    seq = items[::-1] if from_right else list(items)
    n = len(seq)
    chosen = []
    start = 0
    for letter in letters:
        for step in range(n):
            k = (start + step) % n
            if seq[k][1] == letter:
                chosen.append(seq[k])
                start = k + 1
                break
        else:
            raise AssertionError("letter missing")
    return chosen


def decompose_oracle(w, method):
    items = list(enumerate(w))
    out = []
    while items:
        m = max(a for _, a in items)
        if method == "classical":
            picked = _extract(items, range(1, m + 1), from_right=True)
        else:
            picked = _extract(items, range(m, 0, -1), from_right=False)
        for it in picked:
            items.remove(it)
        out.append(tuple(a for _, a in sorted(picked)))
    return out


def charge_oracle(w, method="classical"):
    return sum(charge_index_oracle(v) for v in decompose_oracle(w, method))


def all_fillings(shape, n):
    size = sum(shape)
    for flat in product(range(1, n + 1), repeat=size):
        rows, k = [], 0
        for p in shape:
            rows.append(tuple(flat[k:k + p]))
            k += p
        yield tuple(rows)


def generating_terms(shape, n, stat):
    """Dict (x-exponents, q, t) -> count, from the oracle statistics."""
    f = inv_oracle if stat == "inv" else quinv_oracle
    out = {}
    for rows in all_fillings(shape, n):
        x = tuple(sum(r.count(a) for r in rows) for a in range(1, n + 1))
        key = (x, f(rows), maj_oracle(rows))
        out[key] = out.get(key, 0) + 1
    return out
