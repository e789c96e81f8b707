"""Combinatorial maps (rotation systems) on the sphere.

A map is a pair of permutations on darts 0..2E-1: an edge involution
pairing each dart with its opposite, and the counterclockwise successor
around each vertex.  Faces are the orbits of dart -> sigma[theta[dart]];
this convention is fixed globally (both conventions work, mixing them does
not).  Embeddings are input, never computed: genus 0 is checked through
Euler's formula per component.

A Web is a validated cubic bipartite genus-0 map plus a count of vertexless
circles.  Multi-edges are allowed (they arise mid-reduction); loops never
pass validation since they are odd cycles.
"""

from __future__ import annotations

import array
import itertools
from collections import deque


class MapError(ValueError):
    pass


class FormatError(MapError):
    """Malformed SIMPLE/DART text; carries the 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotCubic(MapError):
    def __init__(self, dart, degree):
        super().__init__(f"vertex of dart {dart} has degree {degree}, expected 3")
        self.dart = dart


class NotBipartite(MapError):
    def __init__(self, cycle):
        super().__init__(f"odd cycle through vertices {list(cycle)}")
        self.cycle = tuple(cycle)


class NonPlanarEmbedding(MapError):
    def __init__(self, genus, dart):
        super().__init__(f"component of dart {dart} has genus {genus}")
        self.genus = genus
        self.dart = dart


def _orbits(perm, darts=None):
    """Cycles of a permutation, each started at its least element."""
    n = len(perm)
    seen = [False] * n
    pool = range(n) if darts is None else sorted(darts)
    out = []
    for start in pool:
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return tuple(out)


class CombMap:
    """A dart-based rotation system; immutable after construction."""

    __slots__ = ("sigma", "theta", "_vertices", "_vertex_of", "_faces", "_face_of")

    def __init__(self, sigma, theta):
        sigma = tuple(sigma)
        theta = tuple(theta)
        n = len(sigma)
        if len(theta) != n:
            raise MapError("sigma and theta must act on the same darts")
        if n % 2:
            raise MapError("odd number of darts")
        if sorted(sigma) != list(range(n)):
            raise MapError("sigma is not a permutation of the darts")
        for d in range(n):
            t = theta[d]
            if not 0 <= t < n or t == d or theta[t] != d:
                raise MapError(f"theta is not a fixed-point-free involution at dart {d}")
        self.sigma = sigma
        self.theta = theta
        self._vertices = None
        self._vertex_of = None
        self._faces = None
        self._face_of = None

    @property
    def n_darts(self):
        return len(self.sigma)

    @property
    def n_edges(self):
        return len(self.sigma) // 2

    def vertices(self):
        if self._vertices is None:
            self._vertices = _orbits(self.sigma)
        return self._vertices

    @property
    def n_vertices(self):
        return len(self.vertices())

    def vertex_of(self, dart):
        if self._vertex_of is None:
            vof = [0] * self.n_darts
            for i, orbit in enumerate(self.vertices()):
                for d in orbit:
                    vof[d] = i
            self._vertex_of = vof
        return self._vertex_of[dart]

    def faces(self):
        """Face cycles: orbits of dart -> sigma[theta[dart]]."""
        if self._faces is None:
            sigma, theta = self.sigma, self.theta
            phi = [sigma[theta[d]] for d in range(self.n_darts)]
            self._faces = _orbits(phi)
        return self._faces

    def face_of(self, dart):
        if self._face_of is None:
            fof = [0] * self.n_darts
            for i, orbit in enumerate(self.faces()):
                for d in orbit:
                    fof[d] = i
            self._face_of = fof
        return self._face_of[dart]

    def edges(self):
        """Edges as (d, theta[d]) with d < theta[d], sorted."""
        return [(d, self.theta[d]) for d in range(self.n_darts) if d < self.theta[d]]

    def components(self):
        """Connected components as sorted dart tuples."""
        n = self.n_darts
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            comp = []
            stack = [start]
            seen[start] = True
            while stack:
                d = stack.pop()
                comp.append(d)
                for nb in (self.sigma[d], self.theta[d]):
                    if not seen[nb]:
                        seen[nb] = True
                        stack.append(nb)
            comps.append(tuple(sorted(comp)))
        return comps

    def genus_by_component(self):
        """(genus, witness dart) per component via V - E + F = 2 - 2g."""
        out = []
        for comp in self.components():
            v = len({self.vertex_of(d) for d in comp})
            f = len({self.face_of(d) for d in comp})
            e = len(comp) // 2
            euler = v - e + f
            if euler % 2:
                raise MapError("non-integral genus; corrupt map")
            out.append(((2 - euler) // 2, comp[0]))
        return out

    def relabel(self, newlab):
        """Apply a dart relabeling d -> newlab[d]."""
        n = self.n_darts
        sigma = [0] * n
        theta = [0] * n
        for d in range(n):
            sigma[newlab[d]] = newlab[self.sigma[d]]
            theta[newlab[d]] = newlab[self.theta[d]]
        return CombMap(sigma, theta)

    def restrict(self, darts):
        """Submap on a dart subset closed under sigma and theta.

        Returns (map, old_to_new dict); relabeling preserves dart order.
        """
        darts = sorted(darts)
        old_to_new = {d: i for i, d in enumerate(darts)}
        sigma = [old_to_new[self.sigma[d]] for d in darts]
        theta = [old_to_new[self.theta[d]] for d in darts]
        return CombMap(sigma, theta), old_to_new

    def __eq__(self, other):
        return (
            isinstance(other, CombMap)
            and self.sigma == other.sigma
            and self.theta == other.theta
        )

    def __hash__(self):
        return hash((self.sigma, self.theta))

    def __repr__(self):
        return f"CombMap(V={self.n_vertices}, E={self.n_edges})"


def from_rotations(neighbors):
    """Build a CombMap of a simple graph from 0-based ccw neighbor lists."""
    slot = {}
    dart = 0
    for v, nbs in enumerate(neighbors):
        if len(set(nbs)) != len(nbs):
            raise MapError(f"vertex {v}: duplicate neighbor (multi-edges need DART form)")
        for u in nbs:
            if u == v:
                raise MapError(f"vertex {v}: loop")
            slot[(v, u)] = dart
            dart += 1
    sigma = [0] * dart
    theta = [0] * dart
    d = 0
    for v, nbs in enumerate(neighbors):
        base = d
        for j, u in enumerate(nbs):
            sigma[base + j] = base + (j + 1) % len(nbs)
            partner = slot.get((u, v))
            if partner is None:
                raise MapError(f"edge {v}-{u} has no reciprocal entry at vertex {u}")
            theta[base + j] = partner
        d += len(nbs)
    return CombMap(sigma, theta)


class Web:
    """A validated cubic bipartite genus-0 map with a circle counter.

    Construct through :func:`validate`; `parts` holds the 2-coloring
    (per-vertex, 0/1, color 0 on each component's least-dart vertex).
    """

    __slots__ = ("map", "circles", "parts", "_key_plain", "_key_refl")

    def __init__(self, cmap, circles, parts, _checked=False):
        if not _checked:
            raise MapError("Webs must be built by validate()")
        self.map = cmap
        self.circles = circles
        self.parts = parts
        self._key_plain = None
        self._key_refl = None

    @property
    def n_vertices(self):
        return self.map.n_vertices

    @property
    def n_edges(self):
        return self.map.n_edges

    def is_empty(self):
        return self.map.n_darts == 0 and self.circles == 0

    def is_simple(self):
        seen = set()
        for d, t in self.map.edges():
            pair = (self.map.vertex_of(d), self.map.vertex_of(t))
            pair = (min(pair), max(pair))
            if pair[0] == pair[1] or pair in seen:
                return False
            seen.add(pair)
        return True

    def with_circles(self, circles):
        if circles < 0:
            raise MapError("negative circle count")
        return Web(self.map, circles, self.parts, _checked=True)

    def __repr__(self):
        return f"Web(V={self.n_vertices}, E={self.n_edges}, circles={self.circles})"


def _two_color(cmap):
    """BFS 2-coloring of vertices; returns colors or raises NotBipartite."""
    nv = cmap.n_vertices
    colors = [-1] * nv
    vertices = cmap.vertices()
    parent = [-1] * nv
    for start in range(nv):
        if colors[start] != -1:
            continue
        colors[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for d in vertices[v]:
                u = cmap.vertex_of(cmap.theta[d])
                if colors[u] == -1:
                    colors[u] = 1 - colors[v]
                    parent[u] = v
                    queue.append(u)
                elif colors[u] == colors[v]:
                    # walk both parent chains for an odd-cycle witness
                    pa, pb = v, u
                    seen_a = []
                    while pa != -1:
                        seen_a.append(pa)
                        pa = parent[pa]
                    chain = []
                    while pb not in seen_a:
                        chain.append(pb)
                        pb = parent[pb]
                    cyc = seen_a[: seen_a.index(pb) + 1] + list(reversed(chain))
                    raise NotBipartite(cyc)
    return tuple(colors)


def validate(cmap, circles=0):
    """Check cubic, genus 0 per component, bipartite; return the Web."""
    if circles < 0:
        raise MapError("negative circle count")
    for orbit in cmap.vertices():
        if len(orbit) != 3:
            raise NotCubic(orbit[0], len(orbit))
    for genus, dart in cmap.genus_by_component():
        if genus != 0:
            raise NonPlanarEmbedding(genus, dart)
    parts = _two_color(cmap)
    return Web(cmap, circles, parts, _checked=True)


def mirror(web):
    """Reverse every vertex rotation; an involution up to isomorphism."""
    n = web.map.n_darts
    sigma_inv = [0] * n
    for d in range(n):
        sigma_inv[web.map.sigma[d]] = d
    return validate(CombMap(sigma_inv, web.map.theta), web.circles)


# -- canonical form ----------------------------------------------------------


def _component_canonical(sigma, theta, comp, rotations):
    """Least BFS-labeling sequence over all roots and given rotations.

    For each root dart and rotation (sigma, or its inverse when reflections
    are included), darts are labeled in discovery order; the emitted word is
    (label[rot[d]], label[theta[d]]) for darts in label order.  The minimum
    word is a complete isomorphism invariant of the rooted component, so its
    minimum over roots is one for the component.
    """
    n_total = len(theta)
    best = None
    best_hits = 0
    lab = [-1] * n_total
    for rot in rotations:
        for root in comp:
            for d in comp:
                lab[d] = -1
            lab[root] = 0
            order = [root]
            seq = []
            state = 1 if best is None else 0  # 0 undecided, 1 strictly better
            pos = 0
            i = 0
            abandoned = False
            while i < len(order):
                d = order[i]
                for nb in (rot[d], theta[d]):
                    l = lab[nb]
                    if l < 0:
                        l = len(order)
                        lab[nb] = l
                        order.append(nb)
                    if state == 0:
                        b = best[pos]
                        if l > b:
                            abandoned = True
                            break
                        if l < b:
                            state = 1
                    seq.append(l)
                    pos += 1
                if abandoned:
                    break
                i += 1
            if abandoned:
                continue
            if state == 1:
                best = seq
                best_hits = 1
            else:
                best_hits += 1
    return best, best_hits


def _canonical_data(web, include_reflections):
    cmap = web.map
    sigma = cmap.sigma
    theta = cmap.theta
    n = len(sigma)
    sigma_inv = [0] * n
    for d in range(n):
        sigma_inv[sigma[d]] = d
    rotations = [sigma, sigma_inv] if include_reflections else [sigma]
    out = []
    for comp in cmap.components():
        word, hits = _component_canonical(sigma, theta, comp, rotations)
        out.append((bytes_of_word(word), hits, comp))
    return out


def bytes_of_word(word):
    return array.array("i", word).tobytes()


def canonical_key(web, include_reflections=True):
    """Byte key equal for two webs iff they are isomorphic maps on the
    sphere (up to reflection when include_reflections is set), with equal
    circle counts."""
    cached = web._key_refl if include_reflections else web._key_plain
    if cached is not None:
        return cached
    parts = sorted(k for k, _, _ in _canonical_data(web, include_reflections))
    blob = b"".join(len(p).to_bytes(4, "big") + p for p in parts)
    key = web.circles.to_bytes(4, "big") + len(parts).to_bytes(4, "big") + blob
    if include_reflections:
        web._key_refl = key
    else:
        web._key_plain = key
    return key


def isomorphic(w1, w2, include_reflections=True):
    return canonical_key(w1, include_reflections) == canonical_key(w2, include_reflections)


def automorphism_count(web, include_reflections=True):
    """Order of the dart-automorphism group of a connected web.

    Counts the (root, chirality) pairs attaining the canonical minimum;
    the group acts freely on rooted darts, so this is the group order.
    """
    comps = web.map.components()
    if len(comps) != 1:
        raise MapError("automorphism_count needs a connected web")
    _, hits, _ = _canonical_data(web, include_reflections)[0]
    return hits


def canonical_form(web, include_reflections=True):
    """Relabel to the canonical representative (components key-sorted)."""
    cmap = web.map
    sigma, theta = cmap.sigma, cmap.theta
    n = len(sigma)
    sigma_inv = [0] * n
    for d in range(n):
        sigma_inv[sigma[d]] = d
    rotations = [sigma, sigma_inv] if include_reflections else [sigma]
    relabeled = []
    for comp in cmap.components():
        best = None
        for rot in rotations:
            for root in comp:
                lab = {root: 0}
                order = [root]
                seq = []
                i = 0
                while i < len(order):
                    d = order[i]
                    for nb in (rot[d], theta[d]):
                        if nb not in lab:
                            lab[nb] = len(order)
                            order.append(nb)
                        seq.append(lab[nb])
                    i += 1
                cand = (seq, rot is not sigma, lab)
                if best is None or cand[0] < best[0]:
                    best = cand
        seq, mirrored, lab = best
        rot = sigma_inv if mirrored else sigma
        m = len(comp)
        csigma = [0] * m
        ctheta = [0] * m
        for d in comp:
            csigma[lab[d]] = lab[rot[d]]
            ctheta[lab[d]] = lab[theta[d]]
        relabeled.append((bytes_of_word(seq), csigma, ctheta))
    relabeled.sort(key=lambda t: t[0])
    sigma_out = []
    theta_out = []
    for _, cs, ct in relabeled:
        off = len(sigma_out)
        sigma_out.extend(d + off for d in cs)
        theta_out.extend(d + off for d in ct)
    return validate(CombMap(sigma_out, theta_out), web.circles)


def disjoint_union(w1, w2):
    """Place two webs side by side (darts of the second are offset)."""
    off = w1.map.n_darts
    sigma = list(w1.map.sigma) + [d + off for d in w2.map.sigma]
    theta = list(w1.map.theta) + [d + off for d in w2.map.theta]
    return validate(CombMap(sigma, theta), w1.circles + w2.circles)


# -- connectivity ------------------------------------------------------------


def _connected_without(cmap, banned_edges):
    """Is the map connected after removing the given edges (by min dart)?"""
    n = cmap.n_darts
    if n == 0:
        return True
    banned = set()
    for e in banned_edges:
        banned.add(e)
        banned.add(cmap.theta[e])
    start = 0
    seen = {start}
    stack = [start]
    while stack:
        d = stack.pop()
        nxt = [cmap.sigma[d]]
        if d not in banned:
            nxt.append(cmap.theta[d])
        for nb in nxt:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == n


def connectivity(web):
    """min(3, vertex connectivity) of a connected simple web.

    Edge and vertex connectivity agree for simple cubic graphs, so this is
    a bridge scan followed by a 2-edge-cut scan.
    """
    if len(web.map.components()) != 1:
        raise MapError("connectivity needs a connected web")
    if not web.is_simple():
        raise MapError("connectivity is defined on simple webs only")
    cmap = web.map
    edge_ids = [d for d, _ in cmap.edges()]
    for e in edge_ids:
        if not _connected_without(cmap, (e,)):
            return 1
    for e1, e2 in itertools.combinations(edge_ids, 2):
        if not _connected_without(cmap, (e1, e2)):
            return 2
    return 3


# -- polygonal decompositions ------------------------------------------------


class PolygonalDecomposition:
    """One of the three two-color polygon systems of a 3-edge-coloring.

    `coloring` maps edge id (least dart) -> color 0/1/2; the polygons are
    the faces whose boundary uses the two colors in `pair`, and
    `connector_color` is the remaining color.
    """

    __slots__ = ("pair", "connector_color", "coloring", "polygon_faces", "polygons")

    def __init__(self, pair, connector_color, coloring, polygon_faces, polygons):
        self.pair = pair
        self.connector_color = connector_color
        self.coloring = coloring
        self.polygon_faces = polygon_faces
        self.polygons = polygons

    def sizes(self):
        """Polygon size multiset, ascending."""
        return tuple(sorted(len(p) for p in self.polygons))

    def __repr__(self):
        return f"PolygonalDecomposition(pair={self.pair}, sizes={self.sizes()})"


def _face_coloring(web):
    """3-color the faces (dual Eulerian triangulation), deterministically.

    The three faces around a vertex must get distinct colors.  Seed the
    vertex of dart 0 with colors 0,1,2 in rotation order and BFS over the
    vertex graph: two adjacent vertices share the two faces flanking the
    connecting edge, so every vertex reached has at least two of its faces
    colored and the third is forced.  Unique up to permutation.
    """
    cmap = web.map
    color = [-1] * len(cmap.faces())
    vertices = cmap.vertices()

    def faces_at(v):
        return [cmap.face_of(d) for d in vertices[v]]

    v0 = cmap.vertex_of(0)
    first = faces_at(v0)
    if len(set(first)) != 3:
        raise MapError("a vertex meets a face twice; need a 3-connected web")
    for c, f in enumerate(first):
        color[f] = c
    seen = {v0}
    queue = deque([v0])
    while queue:
        v = queue.popleft()
        fs = faces_at(v)
        if len(set(fs)) != 3:
            raise MapError("a vertex meets a face twice; need a 3-connected web")
        cols = [color[f] for f in fs]
        known = [c for c in cols if c != -1]
        if len(set(known)) != len(known):
            raise MapError("face coloring conflict; need a 3-connected web")
        missing = [i for i, c in enumerate(cols) if c == -1]
        if len(missing) > 1:
            raise MapError("face coloring did not propagate; is the web connected?")
        if missing:
            color[fs[missing[0]]] = 3 - sum(known)
        for d in vertices[v]:
            u = cmap.vertex_of(cmap.theta[d])
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if any(c == -1 for c in color):
        raise MapError("face coloring incomplete")
    return color


def edge_3_coloring(web):
    """The three polygonal decompositions of a simple 3-connected web.

    Each edge takes the color missing from its two incident faces; for each
    color pair the polygons are exactly the faces of the third color.
    """
    if connectivity(web) != 3:
        raise MapError("polygonal decompositions need a 3-connected web")
    cmap = web.map
    face_color = _face_coloring(web)
    coloring = {}
    for d, t in cmap.edges():
        c1 = face_color[cmap.face_of(d)]
        c2 = face_color[cmap.face_of(t)]
        if c1 == c2:
            raise MapError("adjacent faces share a color; need a 3-connected web")
        coloring[d] = 3 - c1 - c2
    faces = cmap.faces()
    out = []
    for connector in (2, 1, 0):
        pair = tuple(sorted({0, 1, 2} - {connector}))
        polygon_faces = tuple(
            i for i, f in enumerate(faces) if face_color[i] == connector
        )
        polygons = tuple(
            tuple(cmap.vertex_of(d) for d in faces[i]) for i in polygon_faces
        )
        out.append(
            PolygonalDecomposition(pair, connector, dict(coloring), polygon_faces, polygons)
        )
    return out


def polygon_levels(web, dec, exterior_face):
    """Dual-graph distance from each polygon of `dec` to the exterior face."""
    if exterior_face in dec.polygon_faces:
        raise MapError("exterior face must not be a polygon of the decomposition")
    cmap = web.map
    faces = cmap.faces()
    adj = [set() for _ in faces]
    for d, t in cmap.edges():
        f1, f2 = cmap.face_of(d), cmap.face_of(t)
        if f1 != f2:
            adj[f1].add(f2)
            adj[f2].add(f1)
    dist = {exterior_face: 0}
    queue = deque([exterior_face])
    while queue:
        f = queue.popleft()
        for g in adj[f]:
            if g not in dist:
                dist[g] = dist[f] + 1
                queue.append(g)
    return {p: dist[p] for p in dec.polygon_faces}


def circular_witness(web):
    """(decomposition, exterior face) making every polygon level 1, or None."""
    decs = edge_3_coloring(web)
    cmap = web.map
    n_faces = len(cmap.faces())
    for dec in decs:
        polyset = set(dec.polygon_faces)
        for f in range(n_faces):
            if f in polyset:
                continue
            levels = polygon_levels(web, dec, f)
            if all(v == 1 for v in levels.values()):
                return dec, f
    return None


def is_circular(web):
    return circular_witness(web) is not None


# -- file formats ------------------------------------------------------------


def parse_map(text):
    """Parse SIMPLE or DART format; returns (CombMap, circles)."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty map file")
    if lines[0][1].startswith("darts:"):
        return _parse_dart(lines)
    return _parse_simple(lines)


def _parse_int_list(body, lineno):
    try:
        return [int(tok) for tok in body.split()]
    except ValueError:
        raise FormatError("expected integers", lineno) from None


def _parse_simple(lines):
    rot = {}
    circles = 0
    for no, ln in lines:
        if ln.startswith("circles:"):
            circles = int(ln.split(":", 1)[1])
            continue
        if ":" not in ln:
            raise FormatError("expected 'vertex: neighbors'", no)
        head, body = ln.split(":", 1)
        try:
            v = int(head)
        except ValueError:
            raise FormatError(f"bad vertex id {head!r}", no) from None
        if v in rot:
            raise FormatError(f"vertex {v} listed twice", no)
        rot[v] = (_parse_int_list(body, no), no)
    ids = sorted(rot)
    if ids != list(range(1, len(ids) + 1)):
        raise FormatError(f"vertex ids must be 1..{len(ids)}, got {ids}")
    neighbors = []
    for v in ids:
        nbs, no = rot[v]
        for u in nbs:
            if u not in rot:
                raise FormatError(f"vertex {v} names unknown neighbor {u}", no)
        neighbors.append([u - 1 for u in nbs])
    try:
        cmap = from_rotations(neighbors)
    except MapError as exc:
        raise FormatError(str(exc)) from None
    return cmap, circles


def _parse_dart(lines):
    n_darts = None
    rotations = []
    pairs = []
    circles = 0
    for no, ln in lines:
        if ln.startswith("darts:"):
            n_darts = int(ln.split(":", 1)[1])
            continue
        if ln.startswith("circles:"):
            circles = int(ln.split(":", 1)[1])
            continue
        if ln.startswith("v"):
            head, body = ln.split(":", 1)
            rotations.append((_parse_int_list(body, no), no))
            continue
        if ln.startswith("e:"):
            ds = _parse_int_list(ln.split(":", 1)[1], no)
            if len(ds) != 2:
                raise FormatError("edge line needs exactly two darts", no)
            pairs.append((ds, no))
            continue
        raise FormatError(f"unrecognized line {ln!r}", no)
    if n_darts is None:
        raise FormatError("missing 'darts:' header")
    sigma = [None] * n_darts
    theta = [None] * n_darts
    for ds, no in rotations:
        for j, d in enumerate(ds):
            if not 0 <= d < n_darts:
                raise FormatError(f"dart {d} out of range", no)
            if sigma[d] is not None:
                raise FormatError(f"dart {d} appears in two rotations", no)
            sigma[d] = ds[(j + 1) % len(ds)]
    for (d1, d2), no in pairs:
        for d in (d1, d2):
            if not 0 <= d < n_darts:
                raise FormatError(f"dart {d} out of range", no)
            if theta[d] is not None:
                raise FormatError(f"dart {d} appears in two edges", no)
        theta[d1] = d2
        theta[d2] = d1
    for d in range(n_darts):
        if sigma[d] is None:
            raise FormatError(f"dart {d} missing from all rotations")
        if theta[d] is None:
            raise FormatError(f"dart {d} missing from all edges")
    try:
        cmap = CombMap(sigma, theta)
    except MapError as exc:
        raise FormatError(str(exc)) from None
    return cmap, circles


def serialize_map(cmap, circles=0, fmt="dart"):
    """Canonical text form; vertex order and rotation phases normalized."""
    verts = cmap.vertices()
    if fmt == "simple":
        vof = {d: i for i, orbit in enumerate(verts) for d in orbit}
        lines = []
        for i, orbit in enumerate(verts):
            nbs = {d: vof[cmap.theta[d]] + 1 for d in orbit}
            if len(set(nbs.values())) != len(orbit) or any(
                v == i + 1 for v in nbs.values()
            ):
                raise MapError("SIMPLE format cannot express multigraphs or loops")
            start = min(orbit, key=lambda d: nbs[d])
            cyc = []
            d = start
            for _ in orbit:
                cyc.append(str(nbs[d]))
                d = cmap.sigma[d]
            lines.append(f"{i + 1}: {' '.join(cyc)}")
        if circles:
            lines.append(f"circles: {circles}")
        return "\n".join(lines) + "\n"
    if fmt == "dart":
        lines = [f"darts: {cmap.n_darts}"]
        for i, orbit in enumerate(verts):
            cyc = []
            d = orbit[0]
            for _ in orbit:
                cyc.append(str(d))
                d = cmap.sigma[d]
            lines.append(f"v {i + 1}: {' '.join(cyc)}")
        for d, t in cmap.edges():
            lines.append(f"e: {d} {t}")
        if circles:
            lines.append(f"circles: {circles}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_web(text):
    cmap, circles = parse_map(text)
    return validate(cmap, circles)


def serialize_web(web, fmt="dart"):
    return serialize_map(web.map, web.circles, fmt)
