"""The natural p-tetrahedron triangulation of the (p, q)-lens space.

The lens space is a suspension of a p-gon with poles v_+ and v_- and rim
vertices v_1 .. v_p, cut into p tetrahedra along the axis.  Tetrahedron
tau_i has vertex slots, in fixed order,

    slot 0: v_+        slot 1: v_-        slot 2: v_i        slot 3: v_{i+1}

Faces are labelled by the opposite vertex slot.  Two families of gluings
close the complex up:

  * internal: face (v_+, v_-, v_{i+1}) of tau_i meets the matching face of
    tau_{i+1}, identity on vertices;
  * twisted: the upper trigon (v_+, v_i, v_{i+1}) of tau_i is glued to the
    lower trigon (v_-, v_{i+q}, v_{i+q+1}) of tau_{i+q} via
    v_+ -> v_-, v_i -> v_{i+q}, v_{i+1} -> v_{i+q+1}.

Edge and vertex classes are computed by union-find over the gluing table
and then matched against the expected names: the axis E_v, the rim E_h,
and the slanted edges e_1 .. e_p (e_i joins v_+ to v_i, and v_- to
v_{i+q}).  A mismatch raises InternalConsistencyError, which makes the
naming step a standing test of the builder itself.
"""

from dataclasses import dataclass
from math import gcd

from .errors import InternalConsistencyError, NonCoprime, OutOfRange, UnknownEdge
from .unionfind import UnionFind

# The six edges of a tetrahedron as sorted slot pairs.
EDGE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

VERTICAL_EDGE = "E_v"
HORIZONTAL_EDGE = "E_h"
POLE_VERTEX = "poles"
RIM_VERTEX = "rim"


def slant_edge_name(i):
    return "e_%d" % i


@dataclass(frozen=True)
class LensParams:
    """The coprime pair (p, q), canonicalized to 1 <= q < p."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2:
            raise OutOfRange("p must be at least 2, got %d" % self.p)
        if not 1 <= self.q < self.p:
            raise OutOfRange("q must satisfy 1 <= q < p, got q=%d p=%d" % (self.q, self.p))
        if gcd(self.p, self.q) != 1:
            raise NonCoprime("gcd(%d, %d) != 1" % (self.p, self.q))

    @classmethod
    def of(cls, p, q):
        """Validate (p, q), reducing q modulo p first."""
        if p < 2:
            raise OutOfRange("p must be at least 2, got %d" % p)
        q = q % p
        if q == 0:
            raise OutOfRange("q is divisible by p")
        return cls(p, q)

    def norm(self, i):
        """Reduce a 1-based tetrahedron index modulo p into 1..p."""
        return (i - 1) % self.p + 1


@dataclass(frozen=True)
class Gluing:
    """One identified face pair with its vertex-slot correspondence."""

    face: tuple  # (tet, opposite slot)
    other: tuple
    vertex_map: dict  # slot of `face`'s tetrahedron -> slot of `other`'s

    def face_slots(self):
        return tuple(s for s in range(4) if s != self.face[1])


class Triangulation:
    """Immutable cell structure of T(p, q).

    Attributes:
        params: the LensParams.
        gluings: list of 2p Gluing records, one per identified face pair,
            internal gluings first then twisted ones.
        gluing_of: dict (tet, opp_slot) -> (Gluing, side) for both sides.
        edge_classes: dict name -> tuple of (tet, slot_pair) incidences.
        vertex_classes: dict name -> tuple of (tet, slot) incidences.
        edge_name_of: dict (tet, slot_pair) -> class name.
    """

    def __init__(self, params, gluings, edge_classes, vertex_classes):
        self.params = params
        self.gluings = tuple(gluings)
        self.edge_classes = {k: tuple(v) for k, v in edge_classes.items()}
        self.vertex_classes = {k: tuple(v) for k, v in vertex_classes.items()}
        self.gluing_of = {}
        for g in self.gluings:
            self.gluing_of[g.face] = (g, 0)
            self.gluing_of[g.other] = (g, 1)
        self.edge_name_of = {}
        for name, incidences in self.edge_classes.items():
            for inc in incidences:
                self.edge_name_of[inc] = name

    @property
    def p(self):
        return self.params.p

    @property
    def q(self):
        return self.params.q

    def edge_degree(self, name):
        if name not in self.edge_classes:
            raise UnknownEdge("no edge class named %r" % name)
        return len(self.edge_classes[name])

    def vertex_labels(self, i):
        """The four vertex labels of tau_i in slot order."""
        pm = self.params
        return ("v+", "v-", "v%d" % pm.norm(i), "v%d" % pm.norm(i + 1))

    def to_json_dict(self):
        """JSON-ready dict; schema documented in docs/formats.md."""
        return {
            "p": self.p,
            "q": self.q,
            "tetrahedra": [
                {"index": i, "vertices": list(self.vertex_labels(i))}
                for i in range(1, self.p + 1)
            ],
            "gluings": [
                {
                    "face": list(g.face),
                    "to": list(g.other),
                    "vertex_map": {str(k): v for k, v in sorted(g.vertex_map.items())},
                }
                for g in self.gluings
            ],
            "edges": [
                {
                    "name": name,
                    "degree": len(incs),
                    "incidences": [[t, list(pair)] for t, pair in incs],
                }
                for name, incs in sorted(self.edge_classes.items())
            ],
            "vertices": [
                {"name": name, "slots": [list(s) for s in incs]}
                for name, incs in sorted(self.vertex_classes.items())
            ],
        }


def build_triangulation(params):
    """Construct T(p, q) and classify its edges and vertices.

    Accepts a LensParams or a raw (p, q) pair.  Edge and vertex classes are
    computed by union-find over the gluing table and then named by matching
    against the generating edges; the expected class counts (p + 2 edges,
    2 vertices) are enforced.
    """
    if not isinstance(params, LensParams):
        params = LensParams.of(*params)
    p, q = params.p, params.q
    norm = params.norm

    gluings = []
    # Internal walls: face opposite slot 2 of tau_i == face opposite slot 3
    # of tau_{i+1}; slots (0, 1, 3) of tau_i map to (0, 1, 2) of tau_{i+1}.
    for i in range(1, p + 1):
        gluings.append(Gluing((i, 2), (norm(i + 1), 3), {0: 0, 1: 1, 3: 2}))
    # Twisted boundary gluing: upper trigon of tau_i (slots 0, 2, 3) onto
    # the lower trigon of tau_{i+q} (slots 1, 2, 3).
    for i in range(1, p + 1):
        gluings.append(Gluing((i, 1), (norm(i + q), 0), {0: 1, 2: 2, 3: 3}))

    # Every face glued exactly once, no self-identified face.
    seen = set()
    for g in gluings:
        if g.face == g.other:
            raise InternalConsistencyError("face glued to itself: %r" % (g.face,))
        for f in (g.face, g.other):
            if f in seen:
                raise InternalConsistencyError("face glued twice: %r" % (f,))
            seen.add(f)
    if len(seen) != 4 * p:
        raise InternalConsistencyError("gluing table does not cover all faces")

    edge_uf = UnionFind()
    vertex_uf = UnionFind()
    for i in range(1, p + 1):
        for pair in EDGE_PAIRS:
            edge_uf.add((i, pair))
        for s in range(4):
            vertex_uf.add((i, s))
    for g in gluings:
        (t1, _), (t2, _) = g.face, g.other
        slots = g.face_slots()
        for a in slots:
            vertex_uf.union((t1, a), (t2, g.vertex_map[a]))
        for ai in range(3):
            for bi in range(ai + 1, 3):
                a, b = slots[ai], slots[bi]
                img = tuple(sorted((g.vertex_map[a], g.vertex_map[b])))
                edge_uf.union((t1, (a, b)), (t2, img))

    # Name the edge classes from their generating edges.
    generators = {VERTICAL_EDGE: (1, (0, 1)), HORIZONTAL_EDGE: (1, (2, 3))}
    for j in range(1, p + 1):
        generators[slant_edge_name(j)] = (j, (0, 2))  # e_j joins v_+ and v_j
    root_to_name = {}
    for name, gen in generators.items():
        root = edge_uf.find(gen)
        if root in root_to_name and root_to_name[root] != name:
            raise InternalConsistencyError(
                "edge generators %s and %s were identified" % (root_to_name[root], name)
            )
        root_to_name[root] = name
    groups = edge_uf.groups()
    if len(groups) != p + 2:
        raise InternalConsistencyError(
            "expected %d edge classes, union-find produced %d" % (p + 2, len(groups))
        )
    edge_classes = {}
    for root, members in groups.items():
        if root not in root_to_name:
            raise InternalConsistencyError("edge class without a generating edge: %r" % members)
        edge_classes[root_to_name[root]] = members

    # Cross-check the predicted class of every edge incidence.
    for i in range(1, p + 1):
        predicted = {
            (0, 1): VERTICAL_EDGE,
            (2, 3): HORIZONTAL_EDGE,
            (0, 2): slant_edge_name(norm(i)),
            (0, 3): slant_edge_name(norm(i + 1)),
            (1, 2): slant_edge_name(norm(i - q)),
            (1, 3): slant_edge_name(norm(i - q + 1)),
        }
        for pair, name in predicted.items():
            if edge_uf.find((i, pair)) != edge_uf.find(generators[name]):
                raise InternalConsistencyError(
                    "edge (%d, %r) not in expected class %s" % (i, pair, name)
                )

    vgroups = vertex_uf.groups()
    if len(vgroups) != 2:
        raise InternalConsistencyError(
            "expected 2 vertex classes, union-find produced %d" % len(vgroups)
        )
    pole_root = vertex_uf.find((1, 0))
    vertex_classes = {}
    for root, members in vgroups.items():
        vertex_classes[POLE_VERTEX if root == pole_root else RIM_VERTEX] = members
    if len(vertex_classes) != 2:
        raise InternalConsistencyError("pole and rim vertex classes coincide")

    return Triangulation(params, gluings, edge_classes, vertex_classes)


def edge_degree(triangulation, name):
    """Incidence count, with multiplicity, of the named edge class."""
    return triangulation.edge_degree(name)


def local_edge_names(params, i):
    """Edge-class name of each slot pair of tau_i, from the slot order."""
    norm, q = params.norm, params.q
    return {
        (0, 1): VERTICAL_EDGE,
        (2, 3): HORIZONTAL_EDGE,
        (0, 2): slant_edge_name(norm(i)),
        (0, 3): slant_edge_name(norm(i + 1)),
        (1, 2): slant_edge_name(norm(i - q)),
        (1, 3): slant_edge_name(norm(i - q + 1)),
    }
