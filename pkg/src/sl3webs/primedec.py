"""Connected-sum decomposition into 3-connected primes.

A connected simple web is either 3-connected (prime) or has a 2-edge-cut.
Splitting at a cut gives two smaller webs, each closed up by one new edge
along the separating circle; multi-edges produced this way are removed by
the bigon relation, whose uses are counted in l.  The decomposition is
unique up to reflections and satisfies the exact identity

    [3]^(k-1) * P(G) = (-[2])^l * prod_i P(G_i).

A side that collapses entirely becomes a single circle; its [3] cancels one
normalization factor, so collapsed parts are simply excluded from the
primes (circles are not prime by convention).
"""

from __future__ import annotations

from .planarmap import CombMap, MapError, validate
from .qlaurent import qint
from .reducer import apply_bigon, invariant


class Decomposition:
    """Prime factors of a connected web plus the relation-(2) use count."""

    __slots__ = ("primes", "l", "collapsed_circles")

    def __init__(self, primes, l, collapsed_circles=0):
        self.primes = list(primes)
        self.l = l
        self.collapsed_circles = collapsed_circles

    @property
    def k(self):
        return len(self.primes)

    def __repr__(self):
        sizes = [w.n_vertices for w in self.primes]
        return f"Decomposition(k={self.k}, l={self.l}, sizes={sizes})"


def _dart_components_without(cmap, banned_edges):
    """Dart components when theta may not be crossed on the banned edges."""
    banned = set()
    for e in banned_edges:
        banned.add(e)
        banned.add(cmap.theta[e])
    comp = [-1] * cmap.n_darts
    n = 0
    for start in range(cmap.n_darts):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = n
        while stack:
            d = stack.pop()
            nxt = [cmap.sigma[d]]
            if d not in banned:
                nxt.append(cmap.theta[d])
            for nb in nxt:
                if comp[nb] < 0:
                    comp[nb] = n
                    stack.append(nb)
        n += 1
    return comp, n


def _tarjan_bridges(cmap, skip_edge):
    """Bridges of the web minus one edge, as least-dart edge ids.

    Iterative lowlink DFS on the multigraph; the edge used to enter a
    vertex is ignored as a back edge exactly once, so parallel copies
    still count.
    """
    nv = cmap.n_vertices
    adj = [[] for _ in range(nv)]
    for d, t in cmap.edges():
        if d == skip_edge:
            continue
        u, v = cmap.vertex_of(d), cmap.vertex_of(t)
        adj[u].append((v, d))
        adj[v].append((u, d))
    disc = [-1] * nv
    low = [0] * nv
    bridges = []
    timer = 0
    for root in range(nv):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frame: [vertex, entering edge id, entering edge skipped?, iterator]
        stack = [[root, -1, True, iter(adj[root])]]
        while stack:
            frame = stack[-1]
            v = frame[0]
            moved = False
            for u, eid in frame[3]:
                if eid == frame[1] and not frame[2]:
                    frame[2] = True
                    continue
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append([u, eid, False, iter(adj[u])])
                    moved = True
                    break
                if disc[u] < low[v]:
                    low[v] = disc[u]
            if moved:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] > disc[pv]:
                    bridges.append(frame[1])
    return bridges


def find_2_edge_cuts(web):
    """All unordered edge pairs whose removal disconnects the web.

    Edges are named by their smaller dart; empty iff the web is
    3-connected.  For each edge e the bridges of (web - e) are exactly its
    cut partners, so the scan is O(E * (V + E)).
    """
    if len(web.map.components()) != 1:
        raise MapError("cut search needs a connected web")
    cmap = web.map
    edge_ids = [d for d, _ in cmap.edges()]
    cuts = set()
    for e1 in edge_ids:
        _, n = _dart_components_without(cmap, (e1,))
        if n > 1:
            # e1 is itself a bridge; any second edge completes a cut
            for e2 in edge_ids:
                if e2 != e1:
                    cuts.add((min(e1, e2), max(e1, e2)))
            continue
        for e2 in _tarjan_bridges(cmap, e1):
            cuts.add((min(e1, e2), max(e1, e2)))
    return sorted(cuts)


def split(web, cut):
    """Cut at a disconnecting edge pair; each side is closed by a new edge.

    The new edge reuses the cut darts in their rotation slots (the slot
    vacated by the deleted edge), which keeps genus 0.  Returns the side
    containing dart 0 first.
    """
    if web.circles:
        raise MapError("split acts on webs without circles")
    cmap = web.map
    e1, e2 = cut
    comp, n = _dart_components_without(cmap, (e1, e2))
    if n != 2:
        raise MapError("cut does not disconnect into two sides")
    a1, b1 = e1, cmap.theta[e1]
    a2, b2 = e2, cmap.theta[e2]
    if comp[a1] == comp[b1] or comp[a2] == comp[b2]:
        raise MapError("cut edge has both endpoints on one side")
    if comp[a2] != comp[a1]:
        a2, b2 = b2, a2
    theta = list(cmap.theta)
    theta[a1], theta[a2] = a2, a1
    theta[b1], theta[b2] = b2, b1
    rewired = CombMap(cmap.sigma, theta)
    sides = []
    for cid in (comp[a1], comp[b1]):
        darts = [d for d in range(cmap.n_darts) if comp[d] == cid]
        sub, _ = rewired.restrict(darts)
        sides.append(validate(sub))
    return sides[0], sides[1]


def simplify(web):
    """Contract bigon faces until none remain; returns (web, uses).

    Every doubled edge of a cubic bipartite genus-0 web bounds a bigon face
    on one side, so the result is simple unless the web collapsed to
    circles (vertexless output).
    """
    l = 0
    while True:
        bigon = None
        for face in web.map.faces():
            if len(face) == 2:
                bigon = face[0]
                break
        if bigon is None:
            return web, l
        web, _ = apply_bigon(web, bigon)
        l += 1


def decompose(web, rng=None):
    """Full prime decomposition of a connected simple circle-free web.

    Cuts are chosen lexicographically least (or randomly when `rng` is
    given; the outcome is order-independent up to isomorphism).
    """
    if web.circles:
        raise MapError("decompose acts on webs without circles")
    if not web.is_simple():
        raise MapError("decompose needs a simple web")
    if len(web.map.components()) != 1:
        raise MapError("decompose needs a connected web")
    primes = []
    total_l = 0
    collapsed = 0
    stack = [web]
    while stack:
        w = stack.pop()
        cuts = find_2_edge_cuts(w)
        if not cuts:
            primes.append(w)
            continue
        cut = cuts[rng.randrange(len(cuts))] if rng is not None else min(cuts)
        for side in split(w, cut):
            side, l = simplify(side)
            total_l += l
            if side.n_vertices == 0:
                # a collapsed side is exactly one circle
                collapsed += side.circles
            else:
                if side.circles:
                    raise MapError("unexpected circles on an uncollapsed side")
                stack.append(side)
    return Decomposition(primes, total_l, collapsed)


def product_identity_sides(web, dec):
    """Evaluate both sides of [3]^(k-1) P(G) = (-[2])^l prod P(G_i)."""
    lhs = qint(3) ** (dec.k - 1) * invariant(web)
    rhs = (-qint(2)) ** dec.l
    for p in dec.primes:
        rhs = rhs * invariant(p)
    return lhs, rhs


def connected_sum(a, ea, b, eb):
    """Join two webs by deleting an edge in each and cross-connecting.

    `ea`, `eb` are darts naming the edges.  The two new edges take the
    rotation slots of the deleted ones; of the two possible end matchings
    exactly one embeds on the sphere, and it is selected by validation.
    """
    if a.circles or b.circles:
        raise MapError("connected sum acts on webs without circles")
    na = a.map.n_darts
    sigma = list(a.map.sigma) + [d + na for d in b.map.sigma]
    base_theta = list(a.map.theta) + [d + na for d in b.map.theta]
    p, q = ea, a.map.theta[ea]
    r, s = eb + na, b.map.theta[eb] + na
    last_error = None
    for r1, s1 in ((r, s), (s, r)):
        theta = list(base_theta)
        theta[p], theta[r1] = r1, p
        theta[q], theta[s1] = s1, q
        try:
            return validate(CombMap(sigma, theta))
        except MapError as exc:
            last_error = exc
    raise MapError(
        "no planar bipartite matching of the cut ends; "
        f"orientation constraint violated ({last_error})"
    )
