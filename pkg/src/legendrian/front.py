"""Front diagrams of Legendrian knots as event words.

A front is stored as the left-to-right sequence of its singularities:
left cusps, right cusps, crossings, and (for marked fronts) vertical
handleslide marks.  Strand positions are counted bottom-to-top and are
0-based internally; the text format is 1-based ("L1 L3 X2 X2 X2 R1 R1"
is the standard Legendrian trefoil).
"""

from typing import NamedTuple


class Ev(NamedTuple):
    kind: str          # "L", "R", "X", "H"
    a: int             # position (cusps/crossings) or upper strand (marks)
    b: int = -1        # lower strand for marks

    def token(self):
        if self.kind == "H":
            return "H%d,%d" % (self.a + 1, self.b + 1)
        return "%s%d" % (self.kind, self.a + 1)

    def __repr__(self):
        return self.token()


def L(pos):
    return Ev("L", pos)


def R(pos):
    return Ev("R", pos)


def X(pos):
    return Ev("X", pos)


def H(upper, lower):
    return Ev("H", upper, lower)


class FrontError(ValueError):
    pass


class NoMaslovPotential(FrontError):
    """The cusp constraints are inconsistent over Z (rotation number != 0)."""


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        root = self.parent.setdefault(x, x)
        while root != self.parent[root]:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def _strand_counts(events):
    """Strand count in each gap; gap g sits just left of events[g]."""
    counts = [0]
    n = 0
    for idx, ev in enumerate(events):
        if ev.kind == "L":
            if not 0 <= ev.a <= n:
                raise FrontError("event %d (%s): left cusp position out of range"
                                 % (idx, ev.token()))
            n += 2
        elif ev.kind == "R":
            if not 0 <= ev.a <= n - 2:
                raise FrontError("event %d (%s): right cusp position out of range"
                                 % (idx, ev.token()))
            n -= 2
        elif ev.kind == "X":
            if not 0 <= ev.a <= n - 2:
                raise FrontError("event %d (%s): crossing position out of range"
                                 % (idx, ev.token()))
        elif ev.kind == "H":
            if not 0 <= ev.b < ev.a <= n - 1:
                raise FrontError("event %d (%s): mark strands out of range"
                                 % (idx, ev.token()))
        else:
            raise FrontError("unknown event kind %r" % (ev.kind,))
        counts.append(n)
    if n != 0:
        raise FrontError("strands do not close up (final count %d)" % n)
    return tuple(counts)


def _trace_segments(events, counts):
    """Union segments (gap, pos) along smooth strands; marks transparent.

    Cusp pairs are NOT unioned (their potentials differ); instead the
    relations (upper_segment, lower_segment) are returned so callers can
    add +1 edges (Maslov) or equality edges (component count).
    """
    uf = _UnionFind()
    cusp_rel = []
    for g, ev in enumerate(events):
        nl = counts[g]
        if ev.kind == "L":
            i = ev.a
            cusp_rel.append(((g + 1, i + 1), (g + 1, i)))
            uf.find((g + 1, i))
            uf.find((g + 1, i + 1))
            for p in range(nl):
                q = p + 2 if p >= i else p
                uf.union((g, p), (g + 1, q))
        elif ev.kind == "R":
            i = ev.a
            cusp_rel.append(((g, i + 1), (g, i)))
            uf.find((g, i))
            uf.find((g, i + 1))
            for p in range(nl):
                if p in (i, i + 1):
                    continue
                q = p - 2 if p > i + 1 else p
                uf.union((g, p), (g + 1, q))
        elif ev.kind == "X":
            i = ev.a
            for p in range(nl):
                if p == i:
                    q = i + 1
                elif p == i + 1:
                    q = i
                else:
                    q = p
                uf.union((g, p), (g + 1, q))
        else:
            for p in range(nl):
                uf.union((g, p), (g + 1, p))
    return uf, cusp_rel


class FrontDiagram:
    """A validated front with no handleslide marks."""

    def __init__(self, events):
        events = tuple(events)
        for ev in events:
            if ev.kind == "H":
                raise FrontError("FrontDiagram cannot contain marks")
        self.events = events
        self.counts = _strand_counts(events)
        self._check_knot()

    def _check_knot(self):
        if not self.events:
            raise FrontError("empty front is not a knot")
        uf, cusp_rel = _trace_segments(self.events, self.counts)
        for upper, lower in cusp_rel:
            uf.union(upper, lower)
        roots = set(uf.find(seg) for seg in list(uf.parent))
        if len(roots) != 1:
            raise FrontError("front has %d components; knots only" % len(roots))

    def n_events(self):
        return len(self.events)

    def crossings(self):
        return [i for i, ev in enumerate(self.events) if ev.kind == "X"]

    def left_cusps(self):
        return [i for i, ev in enumerate(self.events) if ev.kind == "L"]

    def right_cusps(self):
        return [i for i, ev in enumerate(self.events) if ev.kind == "R"]

    def is_two_bridge(self):
        return len(self.left_cusps()) == 2

    def reversed(self):
        """Left-right mirror: reverse the word and swap cusp kinds."""
        out = []
        for ev in reversed(self.events):
            if ev.kind == "L":
                out.append(R(ev.a))
            elif ev.kind == "R":
                out.append(L(ev.a))
            else:
                out.append(ev)
        return FrontDiagram(out)

    def serialize(self):
        return " ".join(ev.token() for ev in self.events)

    def __eq__(self, other):
        return isinstance(other, FrontDiagram) and self.events == other.events

    def __hash__(self):
        return hash(self.events)

    def __repr__(self):
        return "FrontDiagram(%r)" % (self.serialize(),)


class MaslovPotential:
    """Integer potential per strand segment, normalized so min is 0.

    values[g][p] is the potential of the strand at position p in gap g.
    """

    def __init__(self, front, values):
        self.front = front
        self.values = values

    def at(self, gap, pos):
        return self.values[gap][pos]

    def crossing_grading(self, event_index):
        """mu(upper-left strand) - mu(lower-left strand) at a crossing."""
        ev = self.front.events[event_index]
        if ev.kind != "X":
            raise ValueError("event %d is not a crossing" % event_index)
        return self.at(event_index, ev.a + 1) - self.at(event_index, ev.a)


def maslov_potential(front):
    """Solve the cusp constraints; NoMaslovPotential if inconsistent."""
    uf, cusp_rel = _trace_segments(front.events, front.counts)
    # BFS over union-find classes with +1 edges at cusps
    value = {}
    adj = {}
    for upper, lower in cusp_rel:
        u, l = uf.find(upper), uf.find(lower)
        adj.setdefault(u, []).append((l, -1))
        adj.setdefault(l, []).append((u, +1))
    roots = set()
    for g in range(len(front.events) + 1):
        for p in range(front.counts[g]):
            roots.add(uf.find((g, p)))
    for start in sorted(roots):
        if start in value:
            continue
        value[start] = 0
        queue = [start]
        while queue:
            cur = queue.pop()
            for nxt, delta in adj.get(cur, ()):
                want = value[cur] + delta
                if nxt in value:
                    if value[nxt] != want:
                        raise NoMaslovPotential(
                            "cusp constraints inconsistent; rotation number is nonzero")
                else:
                    value[nxt] = want
                    queue.append(nxt)
    low = min(value.values())
    values = tuple(
        tuple(value[uf.find((g, p))] - low for p in range(front.counts[g]))
        for g in range(len(front.events) + 1))
    return MaslovPotential(front, values)


class MarkedFront:
    """A front diagram together with handleslide marks.

    Every mark must join two strands of equal Maslov potential; this is
    checked at construction (and requires the potential to exist).
    """

    def __init__(self, events):
        self.events = tuple(events)
        self.front = FrontDiagram([ev for ev in self.events if ev.kind != "H"])
        _strand_counts(self.events)  # positions valid including marks
        if any(ev.kind == "H" for ev in self.events):
            self._check_marks()

    def _check_marks(self):
        mu = maslov_potential(self.front)
        gap = 0
        for idx, ev in enumerate(self.events):
            if ev.kind == "H":
                if mu.at(gap, ev.a) != mu.at(gap, ev.b):
                    raise FrontError(
                        "event %d (%s): mark joins strands of different Maslov potential"
                        % (idx, ev.token()))
            else:
                gap += 1

    def marks(self):
        return [i for i, ev in enumerate(self.events) if ev.kind == "H"]

    def serialize(self):
        return " ".join(ev.token() for ev in self.events)

    def __eq__(self, other):
        return isinstance(other, MarkedFront) and self.events == other.events

    def __hash__(self):
        return hash(self.events)

    def __repr__(self):
        return "MarkedFront(%r)" % (self.serialize(),)


def parse_front(text):
    """Parse a whitespace-separated front word into a MarkedFront.

    Tokens are L<i>, R<i>, X<i>, H<k>,<l> with 1-based positions; a '#'
    starts a comment running to the end of its line.
    """
    events = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        body = line.split("#", 1)[0]
        for tok in body.split():
            kind = tok[0].upper()
            rest = tok[1:]
            try:
                if kind == "H":
                    k_s, l_s = rest.split(",")
                    k, l = int(k_s), int(l_s)
                    if k <= l or l < 1:
                        raise ValueError
                    events.append(H(k - 1, l - 1))
                elif kind in ("L", "R", "X"):
                    pos = int(rest)
                    if pos < 1:
                        raise ValueError
                    events.append(Ev(kind, pos - 1))
                else:
                    raise ValueError
            except ValueError:
                raise FrontError("line %d: bad token %r" % (lineno, tok))
    return MarkedFront(events)
