"""Fundamentality checks for normal surface vectors.

Two routes are provided and kept independent:

  * a cheap sufficient criterion: a normal surface meeting each core
    circle exactly once and containing a core-meeting quad (Q2 or Q3)
    cannot decompose;
  * brute-force box searches that look for an integral solution strictly
    between zero and the candidate, in Haken coordinates (solution cone
    of the matching equations, no square condition imposed) and in quad
    coordinates (membership in the quad solution space).
"""

from dataclasses import dataclass

from . import haken, qcoords
from .errors import NotNormal
from .triangulation import HORIZONTAL_EDGE, VERTICAL_EDGE

DEFAULT_BUDGET = 10**8

FUNDAMENTAL = "fundamental"
DECOMPOSABLE = "decomposable"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MinimalityVerdict:
    status: str
    witness: object  # HakenVector / QVector for DECOMPOSABLE, else None
    nodes_explored: int

    def to_json_dict(self):
        out = {"status": self.status, "nodes_explored": self.nodes_explored}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


def haken_fund_criterion(triangulation, vector, system=None):
    """Sufficient condition for fundamentality: weight one on both core
    circles and at least one Q2 or Q3 disk.  False means the criterion
    does not apply, not that the surface decomposes."""
    if not haken.is_normal(triangulation, vector, system):
        raise NotNormal("criterion requires a normal surface vector")
    if haken.edge_weight(triangulation, vector, VERTICAL_EDGE) != 1:
        return False
    if haken.edge_weight(triangulation, vector, HORIZONTAL_EDGE) != 1:
        return False
    return any(
        vector.count(i, k) > 0 for i in range(1, triangulation.p + 1) for k in (5, 6)
    )


def _search_order(p):
    """Column order for the box search: by tetrahedron, quads first (they
    carry the small bounds, so they prune earliest)."""
    order = []
    for tet in range(1, p + 1):
        for kind in (4, 5, 6, 0, 1, 2, 3):
            order.append(haken.column(tet, kind))
    return order


def verify_haken_witness(triangulation, vector, witness):
    """Independent recheck of a decomposition witness."""
    ok = witness.is_nonnegative()
    ok = ok and any(c > 0 for c in witness.counts)
    ok = ok and all(w <= v for w, v in zip(witness.counts, vector.counts))
    ok = ok and witness.counts != vector.counts
    ok = ok and haken.satisfies_matching(triangulation, witness)
    return ok


def minimality_oracle(triangulation, vector, budget=DEFAULT_BUDGET):
    """Exhaustive search for an integral matching-equation solution v'
    with 0 < v' < v.  The square condition is not imposed on v': the
    definition lives in the solution cone.

    Depth-first over the box 0 <= v' <= v in a fixed column order; every
    matching row prunes as soon as its attainable range excludes zero.
    Deterministic: identical inputs and budget give identical verdicts
    and node counts.
    """
    if not haken.is_normal(triangulation, vector):
        raise NotNormal("oracle requires a normal surface vector")
    system = haken.matching_equations(triangulation)
    order = _search_order(triangulation.p)
    bounds = [vector.counts[c] for c in order]
    ncols = len(order)

    rows = []  # (coeff list aligned with order positions touching the row)
    touching = [[] for _ in range(ncols)]  # position -> list of (row idx, coeff)
    pos_of = {c: i for i, c in enumerate(order)}
    row_pos = []  # max "pos" capacity bookkeeping
    for r, row in enumerate(system.rows):
        items = [(pos_of[c], coeff) for c, coeff in row.items()]
        rows.append(items)
        for pos, coeff in items:
            touching[pos].append((r, coeff))
        row_pos.append(None)

    # Attainable range per row over still-unassigned columns.
    max_pos = [0] * len(rows)
    max_neg = [0] * len(rows)
    for r, items in enumerate(rows):
        for pos, coeff in items:
            if coeff > 0:
                max_pos[r] += coeff * bounds[pos]
            else:
                max_neg[r] += coeff * bounds[pos]
    partial = [0] * len(rows)

    assignment = [0] * ncols
    nodes = 0
    witness = None
    exhausted = False

    def feasible(r):
        return partial[r] + max_neg[r] <= 0 <= partial[r] + max_pos[r]

    def dfs(pos):
        nonlocal nodes, witness, exhausted
        if witness is not None or exhausted:
            return
        if pos == ncols:
            if any(assignment) and any(
                a < b for a, b in zip(assignment, bounds)
            ):
                counts = [0] * len(vector.counts)
                for idx, c in enumerate(order):
                    counts[c] = assignment[idx]
                witness = haken.HakenVector(vector.p, vector.q, tuple(counts))
            return
        for value in range(bounds[pos], -1, -1):
            nodes += 1
            if nodes > budget:
                exhausted = True
                return
            assignment[pos] = value
            ok = True
            for r, coeff in touching[pos]:
                partial[r] += coeff * value
                if coeff > 0:
                    max_pos[r] -= coeff * bounds[pos]
                else:
                    max_neg[r] -= coeff * bounds[pos]
                if not feasible(r):
                    ok = False
            if ok:
                dfs(pos + 1)
            for r, coeff in touching[pos]:
                partial[r] -= coeff * value
                if coeff > 0:
                    max_pos[r] += coeff * bounds[pos]
                else:
                    max_neg[r] += coeff * bounds[pos]
            if witness is not None or exhausted:
                break
        assignment[pos] = 0

    dfs(0)

    if witness is not None:
        if not verify_haken_witness(triangulation, vector, witness):
            raise RuntimeError("search produced an invalid witness; oracle bug")
        return MinimalityVerdict(DECOMPOSABLE, witness, nodes)
    if exhausted:
        return MinimalityVerdict(INCONCLUSIVE, None, nodes)
    return MinimalityVerdict(FUNDAMENTAL, None, nodes)


def verify_q_witness(triangulation, qvector, witness):
    """Independent recheck of a quad-coordinate witness: strict bounds and
    a consistent triangle completion satisfying the matching equations."""
    ok = witness.is_nonnegative()
    ok = ok and any(e > 0 for e in witness.entries)
    ok = ok and all(w <= v for w, v in zip(witness.entries, qvector.entries))
    ok = ok and witness.entries != qvector.entries
    if not ok:
        return False
    try:
        completed = qcoords.reconstruct_tdisks(triangulation, witness)
    except Exception:
        return False
    return haken.satisfies_matching(triangulation, completed)


def q_minimality_oracle(params, qvector, budget=DEFAULT_BUDGET, triangulation=None):
    """Search for an integral quad solution q' with 0 < q' < qv.

    Candidates are enumerated over the box in descending lexicographic
    order and tested for membership in the quad solution space; the first
    hit is the witness.
    """
    from .triangulation import build_triangulation

    if triangulation is None:
        triangulation = build_triangulation(params)
    support = [i for i, e in enumerate(qvector.entries) if e > 0]
    bounds = [qvector.entries[i] for i in support]
    nodes = 0
    witness = None
    exhausted = False
    candidate = list(bounds)

    def next_candidate():
        # Descending lexicographic successor within the box.
        for idx in range(len(candidate) - 1, -1, -1):
            if candidate[idx] > 0:
                candidate[idx] -= 1
                for j in range(idx + 1, len(candidate)):
                    candidate[j] = bounds[j]
                return True
        return False

    while True:
        nodes += 1
        if nodes > budget:
            exhausted = True
            break
        is_full = candidate == bounds
        if not is_full and any(candidate):
            entries = [0] * len(qvector.entries)
            for idx, i in enumerate(support):
                entries[i] = candidate[idx]
            trial = qcoords.QVector(qvector.p, qvector.q, tuple(entries))
            if qcoords.in_solution_space(params, trial):
                witness = trial
                break
        if not next_candidate():
            break

    if witness is not None:
        if not verify_q_witness(triangulation, qvector, witness):
            raise RuntimeError("search produced an invalid witness; oracle bug")
        return MinimalityVerdict(DECOMPOSABLE, witness, nodes)
    if exhausted:
        return MinimalityVerdict(INCONCLUSIVE, None, nodes)
    return MinimalityVerdict(FUNDAMENTAL, None, nodes)
