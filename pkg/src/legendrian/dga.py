"""The Chekanov-Eliashberg DGA of the resolved front, over Z2.

Generators are the resolved crossings of the front plus one loop
crossing per right cusp.  The differential counts convex immersed
polygons with a single positive corner; on a resolution all negative
corners sit strictly left of the positive one, so each disk is found by
sweeping two boundary paths westward from the positive corner until
they close at a smoothed left cusp.

Words are read counter-clockwise from the positive corner: lower
boundary right-to-left, then upper boundary left-to-right (this matches
the q3 q2 q1 disk of the standard trefoil).
"""

from typing import NamedTuple

from .front import FrontDiagram, maslov_potential


class DgaError(Exception):
    pass


class Generator(NamedTuple):
    id: int            # 1-based, in left-to-right order
    kind: str          # "crossing" or "cusp"
    pos: int           # strand position (0-based) at its event
    grading: int
    event_index: int

    @property
    def name(self):
        return "q%d" % self.id


class Skeleton:
    """Generators with gradings, before the differential is computed."""

    def __init__(self, front, potential, generators):
        self.front = front
        self.potential = potential
        self.generators = tuple(generators)
        self.by_event = {g.event_index: g for g in self.generators}

    def generator(self, gid):
        return self.generators[gid - 1]


def resolve(front):
    """Build the generator skeleton of the Ng resolution."""
    if not isinstance(front, FrontDiagram):
        front = front.front
    mu = maslov_potential(front)
    gens = []
    for idx, ev in enumerate(front.events):
        if ev.kind == "X":
            grading = mu.at(idx, ev.a + 1) - mu.at(idx, ev.a)
            gens.append(Generator(len(gens) + 1, "crossing", ev.a, grading, idx))
        elif ev.kind == "R":
            gens.append(Generator(len(gens) + 1, "cusp", ev.a, 1, idx))
    return Skeleton(front, mu, gens)


def enumerate_disks(skeleton, gen):
    """Mod-2 surviving monomials of the differential of one generator.

    Returns a frozenset of words (tuples of generator ids); the empty
    tuple is the unit disk inside a right-cusp loop.
    """
    front = skeleton.front
    events = front.events
    parity = {}

    def emit(word):
        parity[word] = parity.get(word, 0) ^ 1

    if gen.kind == "cusp":
        emit(())  # the constant disk inside the loop

    # state: (gap, upper pos, lower pos, lower corners, upper corners)
    stack = [(gen.event_index, gen.pos + 1, gen.pos, (), ())]
    while stack:
        g, u, l, low_w, up_w = stack.pop()
        if g == 0:
            raise DgaError("disk sweep escaped the diagram")
        ev = events[g - 1]
        if ev.kind == "X":
            i = ev.a
            q = skeleton.by_event[g - 1]
            if u == i + 1 and l == i:
                continue  # boundary paths would cross: pinched, not a disk
            # upper path: at i it may corner (disk pokes into the south
            # quadrant) or pass; at i+1 it must pass.
            if u == i:
                ups = [(i, up_w + (q.id,)), (i + 1, up_w)]
            elif u == i + 1:
                ups = [(i, up_w)]
            else:
                ups = [(u, up_w)]
            # lower path: mirror image (north quadrant corners at i+1)
            if l == i + 1:
                lows = [(i + 1, low_w + (q.id,)), (i, low_w)]
            elif l == i:
                lows = [(i + 1, low_w)]
            else:
                lows = [(l, low_w)]
            for u2, uw in ups:
                for l2, lw in lows:
                    if u2 > l2:
                        stack.append((g - 1, u2, l2, lw, uw))
        elif ev.kind == "L":
            i = ev.a
            if l == i and u == i + 1:
                emit(low_w + tuple(reversed(up_w)))
                continue
            if l in (i, i + 1) or u in (i, i + 1):
                continue  # one path runs into the cusp arc: dead end
            u2 = u - 2 if u > i + 1 else u
            l2 = l - 2 if l > i + 1 else l
            stack.append((g - 1, u2, l2, low_w, up_w))
        elif ev.kind == "R":
            i = ev.a
            u2 = u + 2 if u >= i else u
            l2 = l + 2 if l >= i else l
            stack.append((g - 1, u2, l2, low_w, up_w))
        else:
            raise DgaError("marks are not part of a resolved diagram")
    return frozenset(w for w, p in parity.items() if p)


class ResolvedDGA:
    """Generators in x-order plus the full differential."""

    def __init__(self, skeleton, diff):
        self.front = skeleton.front
        self.potential = skeleton.potential
        self.generators = skeleton.generators
        self.diff = diff  # id -> frozenset of words (tuples of ids)
        self._validate()

    def _validate(self):
        for gen in self.generators:
            for word in self.diff[gen.id]:
                if any(j >= gen.id for j in word):
                    raise DgaError("%s: differential word %r is not strictly "
                                   "to the left" % (gen.name, word))
                deg = sum(self.generator(j).grading for j in word)
                if deg != gen.grading - 1:
                    raise DgaError("%s: word %r has degree %d, want %d"
                                   % (gen.name, word, deg, gen.grading - 1))
        if not check_d_squared(self):
            raise DgaError("differential does not square to zero")

    def generator(self, gid):
        return self.generators[gid - 1]

    def d_word(self, word):
        """Differential of a monomial, by the Leibniz rule over Z2."""
        parity = {}
        for i, letter in enumerate(word):
            for piece in self.diff[letter]:
                new = word[:i] + piece + word[i + 1:]
                parity[new] = parity.get(new, 0) ^ 1
        return frozenset(w for w, p in parity.items() if p)

    def d_element(self, words):
        parity = {}
        for word in words:
            for new in self.d_word(word):
                parity[new] = parity.get(new, 0) ^ 1
        return frozenset(w for w, p in parity.items() if p)

    def grading_zero(self):
        return [g for g in self.generators if g.grading == 0]

    def grading_minus_one(self):
        return [g for g in self.generators if g.grading == -1]

    def to_json(self):
        return {
            "generators": [
                {"id": g.id, "name": g.name, "kind": g.kind, "grading": g.grading}
                for g in self.generators],
            "differential": {
                g.name: [list(w) for w in sorted(self.diff[g.id])]
                for g in self.generators},
        }


def differential(skeleton, jobs=None):
    """Compute the full differential; raises DgaError if d*d != 0."""
    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            disks = list(pool.map(lambda g: enumerate_disks(skeleton, g),
                                  skeleton.generators))
        diff = {g.id: d for g, d in zip(skeleton.generators, disks)}
    else:
        diff = {g.id: enumerate_disks(skeleton, g) for g in skeleton.generators}
    return ResolvedDGA(skeleton, diff)


def check_d_squared(dga):
    return all(not dga.d_element(dga.diff[g.id]) for g in dga.generators)
