"""Haken coordinates and surface analysis on T(p, q).

A surface vector has 7 entries per tetrahedron, in the fixed order

    (T at v_+, T at v_-, T at v_i, T at v_{i+1}, Q1, Q2, Q3)

where the triangle kinds coincide with the vertex slot they cut off, and
the quad kinds are indexed by the opposite edge pair they separate:

    Q1 separates (v_+ v_-) from (v_i v_{i+1})     -- E_v from E_h
    Q2 separates (v_+ v_{i+1}) from (v_- v_i)     -- e_{i+1} from e_{i-q}
    Q3 separates (v_+ v_i) from (v_- v_{i+1})     -- e_i from e_{i-q+1}

All incidence data (which disks touch which edges, which arcs appear in
which faces) is derived from this slot order, never tabulated per (p, q).
"""

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    InternalConsistencyError,
    NonIntegralWeight,
    NotConnected,
    NotNormal,
    UnknownEdge,
)
from .triangulation import HORIZONTAL_EDGE
from .unionfind import ParityUnionFind, UnionFind

KINDS_PER_TET = 7
TRIANGLE_KINDS = (0, 1, 2, 3)
QUAD_KINDS = (4, 5, 6)
KIND_NAMES = ("T_vplus", "T_vminus", "T_vlow", "T_vhigh", "Q1", "Q2", "Q3")

# Separated opposite edge pairs per quad kind.
QUAD_SEPARATIONS = {
    4: ((0, 1), (2, 3)),
    5: ((0, 3), (1, 2)),
    6: ((0, 2), (1, 3)),
}
# Inverse map: an edge pair determines the quad kind separating it.
PAIR_TO_QUAD = {pair: kind for kind, pairs in QUAD_SEPARATIONS.items() for pair in pairs}


@dataclass(frozen=True)
class HakenVector:
    """Length-7p disk-count vector in the per-tetrahedron layout."""

    p: int
    q: int
    counts: tuple

    def __post_init__(self):
        if len(self.counts) != KINDS_PER_TET * self.p:
            raise DimensionMismatch(
                "expected %d counts, got %d" % (KINDS_PER_TET * self.p, len(self.counts))
            )

    @classmethod
    def of(cls, p, q, counts):
        return cls(p, q, tuple(int(c) for c in counts))

    def count(self, tet, kind):
        return self.counts[KINDS_PER_TET * (tet - 1) + kind]

    def is_nonnegative(self):
        return all(c >= 0 for c in self.counts)

    def triangle_total(self):
        return sum(self.count(i, k) for i in range(1, self.p + 1) for k in TRIANGLE_KINDS)

    def quad_total(self):
        return sum(self.count(i, k) for i in range(1, self.p + 1) for k in QUAD_KINDS)

    def quad_part(self):
        """Quad counts as a length-3p tuple in block layout."""
        out = []
        for i in range(1, self.p + 1):
            out.extend(self.count(i, k) for k in QUAD_KINDS)
        return tuple(out)

    def __add__(self, other):
        if (self.p, self.q) != (other.p, other.q):
            raise DimensionMismatch("cannot add vectors on different triangulations")
        return HakenVector(self.p, self.q, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def to_json_dict(self):
        return {
            "p": self.p,
            "q": self.q,
            "layout": "per-tet[Tv+,Tv-,Tvlow,Tvhigh,Q1,Q2,Q3]",
            "counts": list(self.counts),
        }

    def to_csv(self):
        lines = ["tet," + ",".join(KIND_NAMES)]
        for i in range(1, self.p + 1):
            lines.append(
                "%d,%s" % (i, ",".join(str(self.count(i, k)) for k in range(KINDS_PER_TET)))
            )
        return "\n".join(lines) + "\n"


def zero_vector(p, q):
    return HakenVector(p, q, (0,) * (KINDS_PER_TET * p))


def vertex_link_vector(triangulation, vertex_class_name):
    """One triangle at every slot of the given vertex class, no quads."""
    counts = [0] * (KINDS_PER_TET * triangulation.p)
    for tet, slot in triangulation.vertex_classes[vertex_class_name]:
        counts[KINDS_PER_TET * (tet - 1) + slot] += 1
    return HakenVector(triangulation.p, triangulation.q, tuple(counts))


def column(tet, kind):
    return KINDS_PER_TET * (tet - 1) + kind


def _arc_disk_kinds(opp_slot, cutoff):
    """Disk kinds in a tetrahedron carrying the arc that cuts off vertex
    `cutoff` in the face opposite `opp_slot`: the triangle at that vertex
    and the quad separating the face edge avoiding it from its opposite."""
    face_edge = tuple(sorted(s for s in range(4) if s not in (opp_slot, cutoff)))
    return cutoff, PAIR_TO_QUAD[face_edge]


class MatchingSystem:
    """The homogeneous integer system of matching equations, row-sparse.

    One row per (glued face, arc type): 3 arc types on each of 2p glued
    faces gives 6p rows over 7p columns.  Each row is a dict column ->
    coefficient in {+1, -1}; coefficients that cancel (both arcs in one
    tetrahedron hitting the same disk kind) are dropped from the dict but
    the row is still present.
    """

    def __init__(self, triangulation):
        p = triangulation.p
        self.shape = (6 * p, KINDS_PER_TET * p)
        self.rows = []
        self.row_labels = []  # (gluing index, cut-off slot on side 1)
        for gi, g in enumerate(triangulation.gluings):
            (t1, f1), (t2, _) = g.face, g.other
            for v in g.face_slots():
                tri1, quad1 = _arc_disk_kinds(f1, v)
                tri2, quad2 = _arc_disk_kinds(g.other[1], g.vertex_map[v])
                row = {}
                for col, coeff in (
                    (column(t1, tri1), 1),
                    (column(t1, quad1), 1),
                    (column(t2, tri2), -1),
                    (column(t2, quad2), -1),
                ):
                    row[col] = row.get(col, 0) + coeff
                    if row[col] == 0:
                        del row[col]
                self.rows.append(row)
                self.row_labels.append((gi, v))

    def dense(self):
        nrows, ncols = self.shape
        out = [[0] * ncols for _ in range(nrows)]
        for r, row in enumerate(self.rows):
            for c, coeff in row.items():
                out[r][c] = coeff
        return out

    def evaluate(self, counts):
        return [sum(coeff * counts[c] for c, coeff in row.items()) for row in self.rows]


def matching_equations(triangulation):
    return MatchingSystem(triangulation)


def satisfies_matching(triangulation, vector, system=None):
    if len(vector.counts) != KINDS_PER_TET * triangulation.p:
        raise DimensionMismatch(
            "vector length %d does not fit p=%d" % (len(vector.counts), triangulation.p)
        )
    if system is None:
        system = matching_equations(triangulation)
    return all(
        sum(coeff * vector.counts[c] for c, coeff in row.items()) == 0 for row in system.rows
    )


def square_condition(vector):
    """At most one of the three quad counts nonzero in every tetrahedron."""
    for i in range(1, vector.p + 1):
        if sum(1 for k in QUAD_KINDS if vector.count(i, k) != 0) > 1:
            return False
    return True


def is_normal(triangulation, vector, system=None):
    return (
        vector.is_nonnegative()
        and satisfies_matching(triangulation, vector, system)
        and square_condition(vector)
    )


def _kinds_meeting_pair(pair):
    kinds = [s for s in pair]  # triangles at either endpoint
    for kind in QUAD_KINDS:
        if pair not in QUAD_SEPARATIONS[kind]:
            kinds.append(kind)
    return kinds


def edge_weight(triangulation, vector, name):
    """Intersection number of the surface with the named edge class.

    Each intersection point is seen once as a disk corner in every
    incidence of the class, so the total corner count divides exactly by
    the degree; a remainder signals a non-normal vector.
    """
    incidences = triangulation.edge_classes.get(name)
    if incidences is None:
        raise UnknownEdge("no edge class named %r" % name)
    corners = 0
    for tet, pair in incidences:
        for kind in _kinds_meeting_pair(pair):
            corners += vector.count(tet, kind)
    weight, rem = divmod(corners, len(incidences))
    if rem:
        raise NonIntegralWeight(
            "corner count %d at %s not divisible by degree %d" % (corners, name, len(incidences))
        )
    return weight


def all_edge_weights(triangulation, vector):
    return {name: edge_weight(triangulation, vector, name) for name in triangulation.edge_classes}


def euler_characteristic(triangulation, vector, system=None):
    """Cell-count Euler characteristic of the normal surface.

    Vertices of the surface are its edge intersections, edges are disk
    sides glued in pairs, faces are the disks themselves.
    """
    if not is_normal(triangulation, vector, system):
        raise NotNormal("vector is not a normal surface")
    v = sum(all_edge_weights(triangulation, vector).values())
    t, qd = vector.triangle_total(), vector.quad_total()
    sides, rem = divmod(3 * t + 4 * qd, 2)
    if rem:
        raise NotNormal("odd total of disk sides")
    return v - sides + (t + qd)


def _quad_orientation_data(opp_slot, cutoff, quad_kind):
    """(near_is_last, side_sign) for the copies of a quad type in a face.

    Quad copies are indexed 0..b-1 starting from the separated edge pair
    that contains slot 0.  The pair containing the cut-off vertex is the
    one not lying in the face; copies stacked toward it have their arcs
    nearest the cut-off vertex.  side_sign is +1 when the quad's canonical
    positive side (toward the pair avoiding slot 0) induces the near side
    of the arc.
    """
    pair_a, pair_b = QUAD_SEPARATIONS[quad_kind]
    from_pair = pair_a if 0 in pair_a else pair_b
    cut_pair = pair_a if cutoff in pair_a else pair_b
    near_is_last = cut_pair != from_pair
    side_sign = 1 if cut_pair != from_pair else -1
    return near_is_last, side_sign


def _materialize(triangulation, vector, system=None):
    """Individual disks and their glued arc pairs.

    Returns (disk_count, arc_pairs) where each arc pair is
    ((disk_id_1, sign_1), (disk_id_2, sign_2)): the two disk sides glued
    along one normal arc, with the side of the arc induced by each disk's
    canonical transverse orientation (+1 = toward the cut-off vertex).
    """
    if not is_normal(triangulation, vector, system):
        raise NotNormal("vector is not a normal surface")
    p = triangulation.p
    base = {}
    disk_count = 0
    for i in range(1, p + 1):
        for kind in range(KINDS_PER_TET):
            base[(i, kind)] = disk_count
            disk_count += vector.count(i, kind)

    def arcs_from_vertex(tet, opp_slot, cutoff):
        """Disk sides along one arc type, ordered from the cut-off vertex
        outward, as (disk_id, side_sign)."""
        tri_kind, quad_kind = _arc_disk_kinds(opp_slot, cutoff)
        out = []
        # Triangle copies nest toward the vertex; copy 0 is innermost.
        for c in range(vector.count(tet, tri_kind)):
            out.append((base[(tet, tri_kind)] + c, 1))
        b = vector.count(tet, quad_kind)
        near_is_last, sign = _quad_orientation_data(opp_slot, cutoff, quad_kind)
        copies = range(b - 1, -1, -1) if near_is_last else range(b)
        for c in copies:
            out.append((base[(tet, quad_kind)] + c, sign))
        return out

    arc_pairs = []
    for g in triangulation.gluings:
        (t1, f1), (t2, f2) = g.face, g.other
        for v in g.face_slots():
            side1 = arcs_from_vertex(t1, f1, v)
            side2 = arcs_from_vertex(t2, f2, g.vertex_map[v])
            if len(side1) != len(side2):
                raise NotNormal("unmatched arcs on glued face %r" % (g.face,))
            arc_pairs.extend(zip(side1, side2))
    return disk_count, arc_pairs


def component_count(triangulation, vector, system=None):
    """Connected components of the disk-gluing graph (0 for the empty
    vector)."""
    disk_count, arc_pairs = _materialize(triangulation, vector, system)
    if disk_count == 0:
        return 0
    uf = UnionFind()
    for d in range(disk_count):
        uf.add(d)
    for (d1, _), (d2, _) in arc_pairs:
        uf.union(d1, d2)
    return len(uf.groups())


def orientation_propagation(triangulation, vector, system=None):
    """Two-sidedness by propagating transverse orientations across disk
    gluings; True iff every component is orientable."""
    disk_count, arc_pairs = _materialize(triangulation, vector, system)
    uf = ParityUnionFind()
    for d in range(disk_count):
        uf.add(d)
    for (d1, s1), (d2, s2) in arc_pairs:
        # o(d1) * s1 == o(d2) * s2 must hold for a consistent co-orientation
        uf.union(d1, d2, s1 * s2)
    return uf.consistent


def is_orientable(triangulation, vector, system=None):
    """Orientability of a connected normal surface.

    Uses the core-circle parity criterion (the surface is non-orientable
    iff it meets the rim core E_h an odd number of times) and the
    independent orientation-propagation check; the two must agree.
    """
    if system is None:
        system = matching_equations(triangulation)
    if component_count(triangulation, vector, system) != 1:
        raise NotConnected("parity criterion applies to connected surfaces only")
    parity = edge_weight(triangulation, vector, HORIZONTAL_EDGE) % 2 == 0
    propagated = orientation_propagation(triangulation, vector, system)
    if parity != propagated:
        raise InternalConsistencyError(
            "parity criterion (%r) and orientation propagation (%r) disagree"
            % (parity, propagated)
        )
    return propagated
