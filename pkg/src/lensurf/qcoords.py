"""Quad-only coordinates: block layout, solution basis, reconstruction.

A quad vector has 3 entries per tetrahedron (one block per quad kind, in
the Q1, Q2, Q3 order of the Haken layout).  The solution space of the
quad matching conditions on T(p, q), for p >= 5 and 2 <= q < p/2, has the
explicit basis {s_1..s_p, t_1..t_p}:

    s_i: block i = (1, 1, 1), zero elsewhere;
    t_i: blocks i and i+q+1 = (0, 1, 0), blocks i+1 and i+q = (0, 0, 1).

Admissibility is decided operationally: a quad vector is admissible when
a non-negative triangle completion with no vertex-linking component
exists, found by propagating the matching equations around each vertex
class.  (The embeddability square condition is checked separately by the
surface-analysis operations; basis elements such as s_i are admissible
solutions without representing embedded surfaces.)
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, HypothesisViolated, Inadmissible, IndexOutOfRange
from .haken import KINDS_PER_TET, QUAD_KINDS, HakenVector, _arc_disk_kinds


@dataclass(frozen=True)
class QVector:
    """Length-3p quad-count vector in p blocks of 3."""

    p: int
    q: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != 3 * self.p:
            raise DimensionMismatch(
                "expected %d entries, got %d" % (3 * self.p, len(self.entries))
            )

    @classmethod
    def of(cls, p, q, entries):
        return cls(p, q, tuple(int(e) for e in entries))

    @classmethod
    def from_blocks(cls, p, q, blocks):
        entries = []
        for block in blocks:
            entries.extend(block)
        return cls.of(p, q, entries)

    def block(self, i):
        if not 1 <= i <= self.p:
            raise IndexOutOfRange("block index %d outside 1..%d" % (i, self.p))
        return self.entries[3 * (i - 1):3 * i]

    def blocks(self):
        return [self.block(i) for i in range(1, self.p + 1)]

    def is_nonnegative(self):
        return all(e >= 0 for e in self.entries)

    def square_condition(self):
        return all(sum(1 for e in self.block(i) if e) <= 1 for i in range(1, self.p + 1))

    def __add__(self, other):
        self._check_same(other)
        return QVector(self.p, self.q, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_same(other)
        return QVector(self.p, self.q, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def _check_same(self, other):
        if (self.p, self.q) != (other.p, other.q):
            raise DimensionMismatch("mismatched (p, q)")

    def to_json_dict(self):
        return {"p": self.p, "q": self.q, "blocks": [list(b) for b in self.blocks()]}

    def pretty(self):
        return "(" + " | ".join(" ".join(str(e) for e in b) for b in self.blocks()) + ")"


def zero_qvector(params):
    return QVector(params.p, params.q, (0,) * (3 * params.p))


def check_basis_hypotheses(params):
    if not (params.p >= 5 and 2 <= params.q and 2 * params.q < params.p):
        raise HypothesisViolated(
            "basis requires p >= 5 and 2 <= q < p/2, got (%d, %d)" % (params.p, params.q)
        )


def s_vector(params, i):
    """Basis element with one full (1, 1, 1) block."""
    i = params.norm(i)
    entries = [0] * (3 * params.p)
    entries[3 * (i - 1):3 * i] = (1, 1, 1)
    return QVector(params.p, params.q, tuple(entries))


def t_vector(params, i):
    """Basis element supported on blocks i, i+1, i+q, i+q+1."""
    p, q = params.p, params.q
    entries = [0] * (3 * p)
    for j, block in (
        (params.norm(i), (0, 1, 0)),
        (params.norm(i + q + 1), (0, 1, 0)),
        (params.norm(i + 1), (0, 0, 1)),
        (params.norm(i + q), (0, 0, 1)),
    ):
        entries[3 * (j - 1):3 * j] = [a + b for a, b in zip(entries[3 * (j - 1):3 * j], block)]
    return QVector(p, q, tuple(entries))


def q_basis(params):
    """All 2p basis vectors (s_1..s_p, t_1..t_p) of the solution space."""
    check_basis_hypotheses(params)
    s = [s_vector(params, i) for i in range(1, params.p + 1)]
    t = [t_vector(params, i) for i in range(1, params.p + 1)]
    return s, t


def quad_count(qvector, tet, quad_kind):
    """Quad count by Haken kind index (4, 5, 6)."""
    return qvector.entries[3 * (tet - 1) + (quad_kind - 4)]


def reconstruct_tdisks(triangulation, qvector):
    """The unique triangle completion with no vertex-linking component.

    Triangle counts are propagated around each vertex class from the
    matching equations (each glued arc fixes the difference of the two
    triangle counts it relates), then shifted so that each vertex class
    has minimum triangle count zero.  Raises Inadmissible, naming the
    first inconsistent face and arc, when no completion exists.
    """
    if (qvector.p, qvector.q) != (triangulation.p, triangulation.q):
        raise DimensionMismatch("quad vector does not fit the triangulation")
    if not qvector.is_nonnegative():
        raise Inadmissible("negative quad count")

    # Relative triangle count per corner (tet, slot), per vertex class.
    adjacency = {}  # corner -> list of (corner, delta, gluing, arc slot)
    for g in triangulation.gluings:
        (t1, f1), (t2, f2) = g.face, g.other
        for v in g.face_slots():
            w = g.vertex_map[v]
            _, quad1 = _arc_disk_kinds(f1, v)
            _, quad2 = _arc_disk_kinds(f2, w)
            delta = quad_count(qvector, t1, quad1) - quad_count(qvector, t2, quad2)
            # t(t2, w) = t(t1, v) + delta
            adjacency.setdefault((t1, v), []).append(((t2, w), delta, g, v))
            adjacency.setdefault((t2, w), []).append(((t1, v), -delta, g, v))

    offsets = {}
    for class_name, corners in triangulation.vertex_classes.items():
        root = corners[0]
        offsets[root] = 0
        stack = [root]
        while stack:
            corner = stack.pop()
            for other, delta, g, v in adjacency.get(corner, ()):
                value = offsets[corner] + delta
                if other in offsets:
                    if offsets[other] != value:
                        raise Inadmissible(
                            "inconsistent matching at face %r, arc at slot %d" % (g.face, v)
                        )
                else:
                    offsets[other] = value
                    stack.append(other)
        low = min(offsets[c] for c in corners)
        for c in corners:
            offsets[c] -= low

    counts = [0] * (KINDS_PER_TET * triangulation.p)
    for (tet, slot), value in offsets.items():
        counts[KINDS_PER_TET * (tet - 1) + slot] = value
    for tet in range(1, triangulation.p + 1):
        for kind in QUAD_KINDS:
            counts[KINDS_PER_TET * (tet - 1) + kind] = quad_count(qvector, tet, kind)
    return HakenVector(triangulation.p, triangulation.q, tuple(counts))


def is_admissible(triangulation, qvector):
    """True when the quad vector extends to a normal-surface solution:
    non-negative and a consistent triangle completion exists."""
    try:
        reconstruct_tdisks(triangulation, qvector)
    except Inadmissible:
        return False
    return True


# ---------------------------------------------------------------------------
# Exact linear algebra over the rationals.


def solve_exact(columns, target):
    """Solve sum_j c_j * columns[j] = target exactly.

    columns: list of equal-length integer sequences; target likewise.
    Returns the coefficient list as Fractions, or None when unsolvable.
    When the system is underdetermined, free coefficients are set to 0.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[Fraction(col[r]) for col in columns] + [Fraction(target[r])] for r in range(nrows)]
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    coeffs = [Fraction(0)] * ncols
    for row, c in enumerate(pivot_cols):
        coeffs[c] = aug[row][ncols]
    return coeffs


def rank_exact(columns):
    """Rank of the matrix whose columns are the given integer sequences."""
    if not columns:
        return 0
    nrows = len(columns[0])
    mat = [[Fraction(col[r]) for col in columns] for r in range(nrows)]
    rank = 0
    for c in range(len(columns)):
        pivot = next((i for i in range(rank, nrows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][c]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def solve_in_basis(params, qvector):
    """Coefficients (a, b) with qvector = sum a_i s_i + sum b_i t_i, or
    None when the vector lies outside the solution space."""
    check_basis_hypotheses(params)
    if (qvector.p, qvector.q) != (params.p, params.q):
        raise DimensionMismatch("quad vector does not fit (p, q)")
    s, t = q_basis(params)
    columns = [v.entries for v in s + t]
    coeffs = solve_exact(columns, qvector.entries)
    if coeffs is None:
        return None
    return coeffs[:params.p], coeffs[params.p:]


def in_solution_space(params, qvector):
    return solve_in_basis(params, qvector) is not None
