"""Union-find over hashable keys, with an optional parity bit per edge.

The plain version partitions glued cells (edges, vertices, disks).  The
parity version additionally tracks a sign along each union, which is how
transverse orientations are propagated across disk gluings: a contradiction
(an odd cycle) means the surface is one-sided.
"""


class UnionFind:
    def __init__(self):
        self._parent = {}
        self._rank = {}

    def add(self, x):
        if x not in self._parent:
            self._parent[x] = x
            self._rank[x] = 0

    def find(self, x):
        self.add(x)
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self._rank[rx] < self._rank[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        if self._rank[rx] == self._rank[ry]:
            self._rank[rx] += 1

    def groups(self):
        """Partition into classes, as a dict root -> sorted member list."""
        out = {}
        for x in self._parent:
            out.setdefault(self.find(x), []).append(x)
        for members in out.values():
            members.sort()
        return out


class ParityUnionFind:
    """Union-find where each element carries a sign relative to its root.

    ``union(x, y, sign)`` records the constraint o(x) = sign * o(y) with
    sign in {+1, -1}.  ``consistent`` turns False as soon as some cycle
    forces o(x) = -o(x).
    """

    def __init__(self):
        self._parent = {}
        self._sign = {}  # sign of element relative to its parent
        self._rank = {}
        self.consistent = True

    def add(self, x):
        if x not in self._parent:
            self._parent[x] = x
            self._sign[x] = 1
            self._rank[x] = 0

    def find(self, x):
        self.add(x)
        path = []
        root = x
        while self._parent[root] != root:
            path.append(root)
            root = self._parent[root]
        sign = 1
        for node in reversed(path):
            sign *= self._sign[node]
            self._parent[node] = root
            self._sign[node] = sign
        total = self._sign[x] if path else 1
        return root, (total if path else 1)

    def union(self, x, y, sign):
        rx, sx = self.find(x)
        ry, sy = self.find(y)
        if rx == ry:
            if sx != sign * sy:
                self.consistent = False
            return
        if self._rank[rx] < self._rank[ry]:
            rx, ry = ry, rx
            sx, sy = sy, sx
            # o(x) = sign * o(y) is symmetric, sign unchanged
        self._parent[ry] = rx
        # o(y) = sign * o(x): sign of ry relative to rx
        self._sign[ry] = sx * sign * sy
        if self._rank[rx] == self._rank[ry]:
            self._rank[rx] += 1
