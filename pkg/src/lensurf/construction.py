"""The recursive compression construction of the non-orientable surface.

Starting from the half-sum surface (alternating (0,1,0) / (0,0,1) blocks)
in the lens space of the kappa = 2 family, n - 1 rounds of compressions
are applied.  Round k acts along (q_{n-(k-1)} - 1) / 2 compressing disks;
the i-th disk of round k is a chain of q_k + 1 pairs of disk patches at
tetrahedron indices

    base(k, i) + (j - 1) * q_n   (mod p_n),   j = 1 .. q_k + 1,
    base(k, i) = 2(q_n + q_{n-1} + ... + q_{n-(k-2)}) + 2i - 1,

the first and last pairs trigonal, the middle ones quadrilateral.  In
quad coordinates the surgery along one disk subtracts the t-basis vector
at each of the first q_k positions and adds back the s-basis pair at
positions 2 .. q_k.

The schedule generator and the coordinate updater are independent code
paths; tests cross-validate that each subtraction matches a scheduled
patch pair.
"""

from dataclasses import dataclass, field

from . import haken, qcoords
from .arithmetic import bredon_wood_crosscap, lens_sequence
from .errors import (
    HypothesisViolated,
    NegativeCoordinate,
    OddP,
    OutOfRange,
    VerificationFailure,
)
from .qcoords import QVector, check_basis_hypotheses, s_vector, t_vector
from .triangulation import (
    HORIZONTAL_EDGE as EDGE_H,
    VERTICAL_EDGE as EDGE_V,
    LensParams,
    build_triangulation,
)

FIRST_REGION = "first"
SECOND_REGION = "second"
LAST_REGION = "last"


def h0(params):
    """The alternating-block starting surface (p even, q >= 3)."""
    if params.p % 2 != 0:
        raise OddP("starting surface requires even p, got %d" % params.p)
    if params.q < 3:
        raise HypothesisViolated("starting surface requires q >= 3")
    check_basis_hypotheses(params)
    blocks = [(0, 1, 0) if i % 2 == 1 else (0, 0, 1) for i in range(1, params.p + 1)]
    return QVector.from_blocks(params.p, params.q, blocks)


@dataclass(frozen=True)
class PatchPlacement:
    step: int            # compression round k
    disk: int            # compressing disk index i within the round
    pair: int            # pair index j, 1-based; 1 and q_k + 1 are trigonal
    role: str            # "leading" or "following"
    tet: int             # tetrahedron index in 1..p_n
    kind: str            # "trigonal" or "quadrilateral"
    region: str          # first / second / last

    def key(self):
        return (self.step, self.disk, self.pair, self.role)


@dataclass(frozen=True)
class CompressionSchedule:
    n: int
    params: LensParams
    placements: tuple

    def of_step(self, k):
        return [pl for pl in self.placements if pl.step == k]

    def to_json_dict(self):
        return {
            "n": self.n,
            "p": self.params.p,
            "q": self.params.q,
            "placements": [
                {
                    "step": pl.step,
                    "disk": pl.disk,
                    "pair": pl.pair,
                    "role": pl.role,
                    "tet": pl.tet,
                    "kind": pl.kind,
                    "region": pl.region,
                }
                for pl in self.placements
            ],
        }

    def to_csv(self):
        lines = ["step,disk,pair,role,tet,kind,region"]
        for pl in self.placements:
            lines.append(
                "%d,%d,%d,%s,%d,%s,%s"
                % (pl.step, pl.disk, pl.pair, pl.role, pl.tet, pl.kind, pl.region)
            )
        return "\n".join(lines) + "\n"


def family_params(n):
    """(sequence, LensParams) for index n of the kappa = 2 family."""
    if n < 2:
        raise OutOfRange("the construction starts at n = 2")
    seq = lens_sequence(2, n)
    return seq, LensParams(seq.p(n), seq.q(n))


def region_of(params, tet):
    qn = params.q
    if tet <= qn:
        return FIRST_REGION
    if tet <= 2 * qn:
        return SECOND_REGION
    return LAST_REGION


def _pair_base(seq, n, k, i):
    """Leading tetrahedron index of the first pair of disk i in round k,
    before reduction mod p_n."""
    return 2 * sum(seq.q(n - u) for u in range(0, k - 1)) + 2 * i - 1


def disk_count_of_step(seq, n, k):
    return (seq.q(n - (k - 1)) - 1) // 2


def compression_schedule(n):
    """Every disk-patch placement of rounds 1 .. n-1."""
    seq, params = family_params(n)
    qn = seq.q(n)
    placements = []
    for k in range(1, n):
        pairs = seq.q(k) + 1
        for i in range(1, disk_count_of_step(seq, n, k) + 1):
            base = _pair_base(seq, n, k, i)
            for j in range(1, pairs + 1):
                lead = params.norm(base + (j - 1) * qn)
                kind = "trigonal" if j in (1, pairs) else "quadrilateral"
                for role, tet in (("leading", lead), ("following", params.norm(lead + 1))):
                    placements.append(
                        PatchPlacement(k, i, j, role, tet, kind, region_of(params, tet))
                    )
    return CompressionSchedule(n, params, tuple(placements))


def step_subtraction(seq, n, k):
    """The quad-coordinate delta removed by round k: per disk i, the
    t-vectors at pairs 1..q_k minus the s-vector pairs at 2..q_k."""
    _, params = family_params(n)
    qn = seq.q(n)
    delta = qcoords.zero_qvector(params)
    for i in range(1, disk_count_of_step(seq, n, k) + 1):
        base = _pair_base(seq, n, k, i)
        for j in range(1, seq.q(k) + 1):
            idx = base + (j - 1) * qn
            delta = delta + t_vector(params, idx)
            if j >= 2:
                delta = delta - s_vector(params, idx) - s_vector(params, idx + 1)
    return delta


def apply_step(h_prev, n, k):
    """Quad coordinate after compression round k (1 <= k <= n-1)."""
    seq, params = family_params(n)
    if not 1 <= k <= n - 1:
        raise OutOfRange("round %d outside 1..%d" % (k, n - 1))
    if (h_prev.p, h_prev.q) != (params.p, params.q):
        raise OutOfRange("input vector does not fit (p_%d, q_%d)" % (n, n))
    result = h_prev - step_subtraction(seq, n, k)
    if not result.is_nonnegative():
        raise NegativeCoordinate("round %d drove a quad count negative" % k)
    return result


def compressed_vectors(n):
    """All intermediate quad coordinates h_0 .. h_{n-1}."""
    _, params = family_params(n)
    vectors = [h0(params)]
    for k in range(1, n):
        vectors.append(apply_step(vectors[-1], n, k))
    return vectors


def sheet_count(h, m):
    """Count of quads separating both core circles in block m (the first
    entry of the block)."""
    return h.block(m)[0]


def sheet_positions(seq, n):
    """The four block indices where the final surface stacks n - 2 parallel
    core-avoiding quads."""
    s1 = sum(seq.q(u) for u in range(1, n))
    s2 = s1 + seq.q(n)
    return (s1, s1 + 1, s2, s2 + 1)


@dataclass
class SurfaceReport:
    n: int
    p: int
    q: int
    qvector: QVector
    haken: haken.HakenVector
    euler: int
    orientable: bool
    connected: bool
    weights: dict
    fundamental_criterion: bool
    square_condition: bool
    matching: bool
    sheets: dict = field(default_factory=dict)  # block index -> quad-1 count

    def to_json_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "qvector": self.qvector.to_json_dict(),
            "haken": self.haken.to_json_dict(),
            "euler": self.euler,
            "orientable": self.orientable,
            "connected": self.connected,
            "weights": dict(sorted(self.weights.items())),
            "fundamental_criterion": self.fundamental_criterion,
            "square_condition": self.square_condition,
            "matching": self.matching,
            "sheets": {str(m): c for m, c in sorted(self.sheets.items())},
        }


def analyze(triangulation, hv, n=0):
    """Full surface report for a Haken vector."""
    from .fundamentality import haken_fund_criterion

    system = haken.matching_equations(triangulation)
    matching = haken.satisfies_matching(triangulation, hv, system)
    square = haken.square_condition(hv)
    weights = haken.all_edge_weights(triangulation, hv)
    components = haken.component_count(triangulation, hv, system)
    if components == 1:
        orientable = haken.is_orientable(triangulation, hv, system)
    else:
        orientable = haken.orientation_propagation(triangulation, hv, system)
    return SurfaceReport(
        n=n,
        p=triangulation.p,
        q=triangulation.q,
        qvector=QVector.of(triangulation.p, triangulation.q, hv.quad_part()),
        haken=hv,
        euler=haken.euler_characteristic(triangulation, hv, system),
        orientable=orientable,
        connected=components == 1,
        weights=weights,
        fundamental_criterion=haken_fund_criterion(triangulation, hv, system),
        square_condition=square,
        matching=matching,
    )


def theorem_checks(report, n):
    """The per-claim verdicts of the end-to-end theorem verification."""
    seq = lens_sequence(2, n)
    m = sheet_positions(seq, n)[0]
    return {
        "euler_is_2_minus_n": report.euler == 2 - n,
        "weight_one_on_axis_core": report.weights.get(EDGE_V) == 1,
        "weight_one_on_rim_core": report.weights.get(EDGE_H) == 1,
        "non_orientable": report.orientable is False,
        "connected": report.connected is True,
        "square_condition": report.square_condition is True,
        "matching_equations": report.matching is True,
        "fundamental_criterion": report.fundamental_criterion is True,
        "sheets_n_minus_2": report.sheets.get(m) == n - 2,
    }


def construct_surface(n, strict=True):
    """Build the compressed surface in the n-th lens space of the family
    and verify every checkable claim about it.

    With strict=True (the default) a failed claim raises
    VerificationFailure; otherwise the report is returned regardless.
    """
    seq, params = family_params(n)
    triangulation = build_triangulation(params)
    hq = compressed_vectors(n)[-1]
    hv = qcoords.reconstruct_tdisks(triangulation, hq)
    report = analyze(triangulation, hv, n=n)
    report.sheets = {m: sheet_count(hq, m) for m in sheet_positions(seq, n)}
    if strict:
        checks = theorem_checks(report, n)
        failed = sorted(name for name, ok in checks.items() if not ok)
        if failed:
            raise VerificationFailure("claims failed for n=%d: %s" % (n, ", ".join(failed)))
    return report


def expected_euler_after_step(seq, n, k):
    """Bookkeeping value of the Euler characteristic after round k: each
    compression raises it by two."""
    return 2 - seq.p(n) // 2 + sum(seq.q(n - r + 1) - 1 for r in range(1, k + 1))


@dataclass
class PlacementReport:
    n: int
    violations: dict  # check id "a".."f" -> list of message strings

    @property
    def ok(self):
        return not any(self.violations.values())

    def to_json_dict(self):
        return {
            "n": self.n,
            "ok": self.ok,
            "violations": {k: list(v) for k, v in sorted(self.violations.items())},
        }


def verify_placements(n):
    """Check the structural placement claims on the computed schedule.

    (a) the ending tetrahedra of the three regions host no patch;
    (b) first and last pairs of rounds k >= 2 lie in the last region;
    (c) within one round no tetrahedron hosts two patches;
    (d) middle pairs land in tetrahedra touched by earlier rounds,
        first/last pairs in untouched ones;
    (e) round-k placements in the last region, shifted down by 2 q_n,
        reproduce round-(k-1) placements for the previous family member;
    (f) for each (round, pair index, role) all disks land in one region.
    """
    seq, params = family_params(n)
    schedule = compression_schedule(n)
    violations = {key: [] for key in "abcdef"}

    ending = {params.q, 2 * params.q, params.p}
    for pl in schedule.placements:
        if pl.tet in ending:
            violations["a"].append("patch %r in ending tetrahedron %d" % (pl.key(), pl.tet))
        if pl.step >= 2 and pl.pair in (1, seq.q(pl.step) + 1) and pl.region != LAST_REGION:
            violations["b"].append(
                "trigonal pair %r outside the last region (tet %d)" % (pl.key(), pl.tet)
            )

    touched = set()
    for k in range(1, n):
        step_tets = {}
        for pl in schedule.of_step(k):
            if pl.tet in step_tets:
                violations["c"].append(
                    "round %d places two patches in tetrahedron %d (%r, %r)"
                    % (k, pl.tet, step_tets[pl.tet], pl.key())
                )
            step_tets[pl.tet] = pl.key()
            middle = 2 <= pl.pair <= seq.q(k)
            if middle and pl.tet not in touched:
                violations["d"].append(
                    "middle pair %r in untouched tetrahedron %d" % (pl.key(), pl.tet)
                )
            if not middle and pl.tet in touched:
                violations["d"].append(
                    "trigonal pair %r in already-touched tetrahedron %d" % (pl.key(), pl.tet)
                )
        touched.update(step_tets)

    if n >= 3:
        # Round k restricted to the last region, shifted down by 2 q_n,
        # replays round k-1 of the previous family member: the surviving
        # pairs, taken in order, match its pairs one for one.
        previous = compression_schedule(n - 1)
        shift = 2 * params.q
        for k in range(2, n):
            for i in range(1, disk_count_of_step(seq, n, k) + 1):
                mine = sorted(
                    (pl for pl in schedule.of_step(k)
                     if pl.disk == i and pl.region == LAST_REGION),
                    key=lambda pl: (pl.pair, pl.role),
                )
                theirs = sorted(
                    (pl for pl in previous.of_step(k - 1) if pl.disk == i),
                    key=lambda pl: (pl.pair, pl.role),
                )
                if len(mine) != len(theirs):
                    violations["e"].append(
                        "round %d disk %d: %d last-region patches vs %d previous-round patches"
                        % (k, i, len(mine), len(theirs))
                    )
                    continue
                for a, b in zip(mine, theirs):
                    if (a.role, a.kind, a.tet - shift) != (b.role, b.kind, b.tet):
                        violations["e"].append(
                            "round %d disk %d: shifted patch %r does not match %r"
                            % (k, i, a, b)
                        )

    for k in range(1, n):
        by_pair = {}
        for pl in schedule.of_step(k):
            by_pair.setdefault((pl.pair, pl.role), set()).add(pl.region)
        for (j, role), regions in sorted(by_pair.items()):
            if len(regions) > 1:
                violations["f"].append(
                    "round %d pair %d (%s) spans regions %s" % (k, j, role, sorted(regions))
                )

    return PlacementReport(n, violations)
