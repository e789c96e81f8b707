"""The skein-reduction engine.

Evaluates the quantum sl(3) invariant of a closed web by applying the three
local relations until nothing is left: a vertexless circle contributes [3],
a bigon face contracts with factor -[2], and a square face splits into its
two planar smoothings with unit coefficients.  Every nonempty web admits a
move (all faces are even, so Euler's formula forces a face of degree <= 4)
and every move strictly shrinks (vertices, circles), so reduction
terminates.  Values are memoized on reflection-inclusive canonical keys,
which is sound because the invariant is mirror-invariant.
"""

from __future__ import annotations

from .planarmap import CombMap, MapError, canonical_key, validate
from .qlaurent import HalfLaurent, qint

CIRCLE_FACTOR = qint(3)
BIGON_FACTOR = -qint(2)


class Reducible:
    """A reduction site: a circle, or a dart on a bigon/square face."""

    __slots__ = ("kind", "site")

    def __init__(self, kind, site=None):
        if kind not in ("circle", "bigon", "square"):
            raise ValueError(f"unknown relation kind {kind!r}")
        self.kind = kind
        self.site = site

    def __repr__(self):
        return f"Reducible({self.kind}, site={self.site})"

    def __eq__(self, other):
        return (
            isinstance(other, Reducible)
            and self.kind == other.kind
            and self.site == other.site
        )


def find_reducible(web):
    """Highest-priority site: circle, else bigon, else square (least dart).

    Returns None exactly when the web is empty.
    """
    if web.circles > 0:
        return Reducible("circle")
    if web.map.n_darts == 0:
        return None
    bigon = None
    square = None
    for face in web.map.faces():
        if len(face) == 2 and bigon is None:
            bigon = face[0]
        elif len(face) == 4 and square is None:
            square = face[0]
    if bigon is not None:
        return Reducible("bigon", bigon)
    if square is not None:
        return Reducible("square", square)
    raise MapError("no reducible face; input was not a valid closed web")


def find_all_reducibles(web):
    """Every applicable site, for randomized-order evaluation."""
    out = []
    if web.circles > 0:
        out.append(Reducible("circle"))
    for face in web.map.faces():
        if len(face) == 2:
            out.append(Reducible("bigon", face[0]))
        elif len(face) == 4:
            out.append(Reducible("square", face[0]))
    return out


def _drop_and_rewire(web, drop_vertices, new_pairs, extra_circles):
    """Remove whole vertex orbits, re-pair the named surviving darts.

    `new_pairs` lists (d, d') theta pairs for surviving darts whose former
    partners are dropped.  Dart labels are compacted preserving order.
    """
    cmap = web.map
    dropped = set()
    for v in drop_vertices:
        dropped.update(cmap.vertices()[v])
    survivors = [d for d in range(cmap.n_darts) if d not in dropped]
    old2new = {d: i for i, d in enumerate(survivors)}
    repaired = {}
    for a, b in new_pairs:
        repaired[a] = b
        repaired[b] = a
    sigma = [old2new[cmap.sigma[d]] for d in survivors]
    theta = []
    for d in survivors:
        t = repaired.get(d, cmap.theta[d])
        if t in dropped:
            raise MapError(f"dart {d} left dangling by surgery")
        theta.append(old2new[t])
    return validate(CombMap(sigma, theta), web.circles + extra_circles)


def apply_circle(web, site=None):
    """Remove one vertexless circle; factor [3]."""
    if web.circles < 1:
        raise MapError("no circle to remove")
    return web.with_circles(web.circles - 1), CIRCLE_FACTOR


def _face_from(web, site):
    faces = web.map.faces()
    return faces[web.map.face_of(site)]


def apply_bigon(web, site):
    """Contract a degree-2 face; factor -[2].

    The two bigon vertices disappear and their outside edges splice into
    one; if those outside edges coincide (theta graph), a circle appears.
    """
    face = _face_from(web, site)
    if len(face) != 2:
        raise MapError(f"dart {site} does not lie on a bigon face")
    cmap = web.map
    d1, d2 = face
    u = cmap.vertex_of(d1)
    v = cmap.vertex_of(d2)
    if u == v:
        raise MapError("bigon face with a single vertex; not a valid web")
    u_darts = set(cmap.vertices()[u])
    v_darts = set(cmap.vertices()[v])
    x = (u_darts - {d1, cmap.theta[d2]}).pop()
    y = (v_darts - {d2, cmap.theta[d1]}).pop()
    if cmap.theta[x] == y:
        # third parallel edge: the whole component closes into a circle
        new = _drop_and_rewire(web, (u, v), (), 1)
    else:
        new = _drop_and_rewire(web, (u, v), ((cmap.theta[x], cmap.theta[y]),), 0)
    return new, BIGON_FACTOR


def _smooth(web, verts, legs, arcs):
    """Remove the square vertices, joining legs along the given arcs.

    Strand chains alternate arc hops and edge hops through legs; chains
    with free ends become new edges, closed chains become circles.
    """
    theta = web.map.theta
    arc = {}
    for a, b in arcs:
        arc[a] = b
        arc[b] = a
    legset = set(legs)
    visited = set()
    new_pairs = []
    circles = 0
    for l in legs:
        t = theta[l]
        if t in legset or l in visited:
            continue
        end1 = t
        cur = l
        while True:
            visited.add(cur)
            cur2 = arc[cur]
            visited.add(cur2)
            nxt = theta[cur2]
            if nxt in legset:
                cur = nxt
            else:
                new_pairs.append((end1, nxt))
                break
    remaining = legset - visited
    while remaining:
        start = remaining.pop()
        circles += 1
        cur = start
        while True:
            cur2 = arc[cur]
            remaining.discard(cur2)
            nxt = theta[cur2]
            if nxt == start:
                break
            remaining.discard(nxt)
            cur = nxt
    return _drop_and_rewire(web, verts, new_pairs, circles)


def apply_square(web, site):
    """Split a degree-4 face into its two planar smoothings.

    Walking the face cycle d0..d3, vertex k carries the outside leg
    sigma(d_k); one smoothing joins legs (0,1) and (2,3), the other (1,2)
    and (3,0).  Both children lose exactly the four square vertices.
    """
    face = _face_from(web, site)
    if len(face) != 4:
        raise MapError(f"dart {site} does not lie on a square face")
    cmap = web.map
    verts = tuple(cmap.vertex_of(d) for d in face)
    if len(set(verts)) != 4:
        raise MapError("square face with repeated vertices; not a cubic web")
    legs = tuple(cmap.sigma[d] for d in face)
    child_a = _smooth(web, verts, legs, ((legs[0], legs[1]), (legs[2], legs[3])))
    child_b = _smooth(web, verts, legs, ((legs[1], legs[2]), (legs[3], legs[0])))
    return child_a, child_b


class LinearCombination:
    """The engine's working state: weighted webs plus a scalar accumulator.

    Represents sum(coeff * P(web)) + accumulator; every step rewrites one
    term by a relation and preserves the represented element, so reducing
    to an empty term list leaves P of the starting web in the accumulator.
    """

    __slots__ = ("terms", "accumulator")

    def __init__(self, terms=(), accumulator=None):
        self.terms = list(terms)
        self.accumulator = HalfLaurent.zero() if accumulator is None else accumulator

    @classmethod
    def start(cls, web):
        return cls([(web, HalfLaurent.one())])

    def is_done(self):
        return not self.terms

    def value(self):
        if self.terms:
            raise MapError("reduction is not finished")
        return self.accumulator

    def step(self, index=0, site=None):
        """Rewrite one term (default: the first, at its priority site)."""
        web, coeff = self.terms.pop(index)
        red = find_reducible(web) if site is None else site
        if red is None:
            self.accumulator = self.accumulator + coeff
            return
        if red.kind == "circle":
            child, factor = apply_circle(web)
            self.terms.append((child, coeff * factor))
        elif red.kind == "bigon":
            child, factor = apply_bigon(web, red.site)
            self.terms.append((child, coeff * factor))
        else:
            child_a, child_b = apply_square(web, red.site)
            self.terms.append((child_a, coeff))
            self.terms.append((child_b, coeff))

    def reduce_fully(self):
        while self.terms:
            self.step()
        return self.accumulator

    def represented_value(self):
        """Evaluate the current state with the memoized engine (testing
        hook for the conservation invariant)."""
        total = self.accumulator
        for web, coeff in self.terms:
            total = total + coeff * invariant(web)
        return total


_MEMO = {}
_MEMO_CAP = None


def clear_memo():
    _MEMO.clear()


def set_memo_cap(cap):
    """Entry cap for the shared memo table (None = unbounded); on overflow
    the engine silently recomputes instead of storing."""
    global _MEMO_CAP
    _MEMO_CAP = cap


def invariant(web):
    """The quantum sl(3) invariant P of a closed web.

    Handles circles, multi-edges and disconnected webs; deterministic and
    memoized across calls.
    """
    result = HalfLaurent.one()
    if web.circles:
        result = CIRCLE_FACTOR**web.circles
        web = web.with_circles(0)
    comps = web.map.components()
    if len(comps) == 0:
        return result
    if len(comps) > 1:
        for comp in comps:
            sub, _ = web.map.restrict(comp)
            result = result * invariant(validate(sub))
        return result
    key = canonical_key(web, include_reflections=True)
    cached = _MEMO.get(key)
    if cached is not None:
        return result * cached
    red = find_reducible(web)
    if red is None:
        value = HalfLaurent.one()
    elif red.kind == "bigon":
        child, factor = apply_bigon(web, red.site)
        value = factor * invariant(child)
    else:
        child_a, child_b = apply_square(web, red.site)
        value = invariant(child_a) + invariant(child_b)
    if _MEMO_CAP is None or len(_MEMO) < _MEMO_CAP:
        _MEMO[key] = value
    return result * value


def invariant_random_order(web, rng):
    """Evaluate with uniformly random site choices; no memo, no component
    splitting.  An independent evaluation path for confluence checks."""
    sites = find_all_reducibles(web)
    if not sites:
        if not web.is_empty():
            raise MapError("stuck on a nonempty web")
        return HalfLaurent.one()
    red = sites[rng.randrange(len(sites))]
    if red.kind == "circle":
        child, factor = apply_circle(web)
        return factor * invariant_random_order(child, rng)
    if red.kind == "bigon":
        child, factor = apply_bigon(web, red.site)
        return factor * invariant_random_order(child, rng)
    child_a, child_b = apply_square(web, red.site)
    return invariant_random_order(child_a, rng) + invariant_random_order(child_b, rng)


def invariant_trace(web):
    """Evaluate with the priority rule and return (value, reduction tree).

    The tree records each applied relation, its site, and its factor; no
    memoization, so use on desk-size webs only.
    """
    red = find_reducible(web)
    if red is None:
        return HalfLaurent.one(), {"relation": "empty", "value": "1"}
    if red.kind == "circle":
        child, factor = apply_circle(web)
        val, sub = invariant_trace(child)
        total = factor * val
        node = {
            "relation": "circle",
            "site": None,
            "factor": factor.to_json_obj(),
            "children": [sub],
        }
    elif red.kind == "bigon":
        child, factor = apply_bigon(web, red.site)
        val, sub = invariant_trace(child)
        total = factor * val
        node = {
            "relation": "bigon",
            "site": red.site,
            "factor": factor.to_json_obj(),
            "children": [sub],
        }
    else:
        child_a, child_b = apply_square(web, red.site)
        va, sa = invariant_trace(child_a)
        vb, sb = invariant_trace(child_b)
        total = va + vb
        node = {
            "relation": "square",
            "site": red.site,
            "factor": HalfLaurent.one().to_json_obj(),
            "children": [sa, sb],
        }
    node["value"] = total.pretty()
    return total, node
