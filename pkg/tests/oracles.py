"""Independent oracles for the test suite.

Everything here recomputes expected values by a route different from the
package under test: subset enumeration instead of DFS, fraction-free
Gaussian elimination instead of Smith reduction, determinantal divisors
instead of diagonalization. Keep it that way.
"""

from itertools import combinations
from math import gcd

from gridhomology import Graph, Raw, edge_label


def brute_independent_faces(g: Graph):
    """All independent sets of g, by checking every vertex subset."""
    vs = g.vertices
    faces = []
    for r in range(len(vs) + 1):
        for comb in combinations(vs, r):
            if all(not g.has_edge(a, b) for a, b in combinations(comb, 2)):
                faces.append(comb)
    return faces


def brute_matchings(g: Graph):
    """All matchings of g as sorted edge-label tuples, by subset check."""
    edges = g.edges()
    out = []
    for r in range(len(edges) + 1):
        for comb in combinations(edges, r):
            used = set()
            ok = True
            for u, v in comb:
                if u in used or v in used:
                    ok = False
                    break
                used.add(u)
                used.add(v)
            if ok:
                out.append(tuple(sorted(edge_label(u, v) for u, v in comb)))
    return out


def exact_rank(rows):
    """Rank of an integer matrix via fraction-free elimination."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot_row = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            col += 1
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            q = rows[i][col]
            if q:
                row = [rows[i][j] * p - q * rows[rank][j] for j in range(ncols)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                rows[i] = [x // g for x in row] if g > 1 else row
        rank += 1
        col += 1
    return rank


def brute_betti(faces):
    """Reduced Betti numbers from an explicit face list (augmented complex).

    ``faces`` must be downward closed and contain the empty tuple when
    nonempty. Ranks come from exact_rank on dense boundary matrices.
    """
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(f))
    for fs in by_dim.values():
        fs.sort()
    if not by_dim:
        return {}
    top = max(by_dim)

    def boundary_rank(d):
        hi = by_dim.get(d, [])
        if not hi:
            return 0
        if d == 0:
            return 1
        lo = by_dim.get(d - 1, [])
        index = {f: i for i, f in enumerate(lo)}
        rows = [[0] * len(hi) for _ in lo]
        for j, face in enumerate(hi):
            sign = 1
            for p in range(len(face)):
                rows[index[face[:p] + face[p + 1 :]]][j] = sign
                sign = -sign
        return exact_rank(rows)

    ranks = {d: boundary_rank(d) for d in range(0, top + 2)}
    betti = {}
    for d in range(-1, top + 1):
        b = len(by_dim.get(d, [])) - (ranks[d] if d >= 0 else 0) - ranks[d + 1]
        if b:
            betti[d] = b
    return betti


def brute_betti_independence(g: Graph):
    return brute_betti(brute_independent_faces(g))


def bareiss_det(a):
    """Exact determinant by fraction-free elimination."""
    a = [row[:] for row in a]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def dd_invariant_factors(a):
    """Invariant factors via determinantal divisors.

    d_k = (gcd of all k x k minors) / (gcd of all (k-1) x (k-1) minors);
    stops at the first k whose minors all vanish.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rsub in combinations(range(m), k):
            for csub in combinations(range(n), k):
                sub = [[a[i][j] for j in csub] for i in rsub]
                g = gcd(g, abs(bareiss_det(sub)))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def random_graph(rng, n, p):
    """Erdos-Renyi style graph on Raw-labelled vertices."""
    vs = [Raw(f"v{i:02d}") for i in range(n)]
    edges = [(a, b) for a, b in combinations(vs, 2) if rng.random() < p]
    return Graph(vs, edges)
