"""Independent brute-force oracle used to pin expected values.

Deliberately formulated differently from the package under test:
- plain recursion with lru_cache instead of volume layering
- a cyclic max over ALL bites instead of an explicit top-ordinal exclusion
  (a bite onto the top ordinal pays the same as biting to the empty board,
  so the maximum is unchanged)
- its own successor generator and an independent partition counter.
"""

from functools import lru_cache


def oracle_successors(p):
    out = set()
    k = len(p)
    for x in range(k):
        for c in range(1, p[x] + 1):
            q = list(p[:x]) + [min(a, c - 1) for a in p[x:]]
            out.add(tuple(a for a in q if a > 0))
    return out


def make_oracle(scores):
    """Returns rec(position) -> 1-based index of the score the mover gets."""
    n = len(scores)

    @lru_cache(maxsize=None)
    def rec(q):
        if not q:
            return 0
        best_i, best = None, None
        for r in sorted(oracle_successors(q)):
            j = rec(r)
            i = j % n + 1  # the mover's payout seat if the game goes via r
            s = scores[i - 1]
            if best is None or s > best:
                best, best_i = s, i
        return best_i

    return rec


def oracle_solutions(scores, p):
    n = len(scores)
    rec = make_oracle(scores)
    vals = {}
    for r in oracle_successors(p):
        j = rec(r)
        vals[r] = scores[(j % n + 1) - 1]
    best = max(vals.values())
    if best == scores[0]:  # ending the game at once attains the max: forced
        return {()}
    return {r for r, v in vals.items() if v == best}


def partition_count(n):
    """Number of partitions of n via the coin-style DP."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]
