"""Framework representation, argument-set algebra, and the cogency preorder.

Sets of arguments are bitsets (Python ints) internally; the public ArgSet
wrapper ties a mask to its framework and offers ordinary set algebra.
"""

from __future__ import annotations


def _bits(mask):
    """Iterate set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count("1")


class Framework:
    """Finite directed attack graph over named arguments.

    Immutable after construction. Attacks are stored both forward
    (attacks_of) and reversed (attackers_of) as bitmasks per argument,
    because attacker iteration is the hot loop of legality checks.
    """

    __slots__ = ("names", "index", "n", "attacks_of", "attackers_of",
                 "full_mask", "self_attackers", "_cache")

    def __init__(self, names, attacks=()):
        names = list(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate argument labels")
        if any(not isinstance(x, str) or not x for x in names):
            raise ValueError("labels must be non-empty strings")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}
        self.n = len(names)
        self.attacks_of = [0] * self.n
        self.attackers_of = [0] * self.n
        for i, j in attacks:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"attack endpoint out of range: ({i}, {j})")
            self.attacks_of[i] |= 1 << j
            self.attackers_of[j] |= 1 << i
        self.full_mask = (1 << self.n) - 1
        self.self_attackers = 0
        for i in range(self.n):
            if self.attacks_of[i] >> i & 1:
                self.self_attackers |= 1 << i
        self._cache = {}

    @classmethod
    def of(cls, names, *attack_pairs):
        """Build from label pairs: Framework.of("a b c", ("b", "a"), ...)."""
        if isinstance(names, str):
            names = names.split()
        idx = {name: i for i, name in enumerate(names)}
        return cls(names, [(idx[x], idx[y]) for x, y in attack_pairs])

    def resolve(self, arg):
        """Label or index -> index."""
        if isinstance(arg, str):
            if arg not in self.index:
                raise KeyError(f"unknown argument label: {arg!r}")
            return self.index[arg]
        if not 0 <= arg < self.n:
            raise IndexError(f"argument index out of range: {arg}")
        return arg

    def attack_pairs(self):
        """All attacks as (i, j) index pairs, sorted."""
        return [(i, j) for i in range(self.n) for j in _bits(self.attacks_of[i])]

    def set_of(self, *args):
        mask = 0
        for a in args:
            mask |= 1 << self.resolve(a)
        return ArgSet(self, mask)

    def empty_set(self):
        return ArgSet(self, 0)

    def full_set(self):
        return ArgSet(self, self.full_mask)

    def mask_of(self, labels):
        mask = 0
        for a in labels:
            mask |= 1 << self.resolve(a)
        return mask

    def labels_of(self, mask):
        return [self.names[i] for i in _bits(mask)]

    # Mask-level primitives (solver hot path).

    def plus_mask(self, mask):
        cache = self._cache.setdefault("plus", {})
        r = cache.get(mask)
        if r is None:
            r = 0
            for i in _bits(mask):
                r |= self.attacks_of[i]
            cache[mask] = r
        return r

    def attackers_mask(self, mask):
        cache = self._cache.setdefault("attackers", {})
        r = cache.get(mask)
        if r is None:
            r = 0
            for i in _bits(mask):
                r |= self.attackers_of[i]
            cache[mask] = r
        return r

    def cf_mask(self, mask):
        return self.plus_mask(mask) & mask == 0

    def succeq_mask(self, e, d):
        """e is as cogent as d (Def.: e conflict-free, attacking members of d countered)."""
        if not self.cf_mask(e):
            return False
        return d & self.attackers_mask(e) & ~self.plus_mask(e) == 0

    def succ_mask(self, e, d):
        """e is strictly more cogent than d."""
        return self.succeq_mask(e, d) and not self.succeq_mask(d, e)

    def compatible_mask(self, i):
        """Arguments that can share a conflict-free set with i (no edge either way, no self-attack)."""
        cache = self._cache.setdefault("compat", {})
        r = cache.get(i)
        if r is None:
            r = self.full_mask & ~self.attacks_of[i] & ~self.attackers_of[i]
            r &= ~self.self_attackers & ~(1 << i)
            cache[i] = r
        return r

    def cf_masks(self, universe=None):
        """All conflict-free subsets of universe (default: whole framework), ascending mask order."""
        if universe is None:
            universe = self.full_mask
        out = [0]
        candidates = [i for i in _bits(universe & ~self.self_attackers)]

        def rec(start, cur, allowed):
            for pos in range(start, len(candidates)):
                i = candidates[pos]
                bit = 1 << i
                if not allowed & bit:
                    continue
                out.append(cur | bit)
                rec(pos + 1, cur | bit, allowed & self.compatible_mask(i))

        rec(0, 0, universe & ~self.self_attackers)
        out.sort()
        return out

    def maximal_cf_masks(self, universe=None):
        """Inclusion-maximal conflict-free subsets of universe."""
        sets = self.cf_masks(universe)
        sets.sort(key=popcount, reverse=True)
        maximal = []
        for m in sets:
            if not any(m & big == m for big in maximal):
                maximal.append(m)
        return maximal

    def __eq__(self, other):
        return (isinstance(other, Framework) and self.names == other.names
                and self.attacks_of == other.attacks_of)

    def __hash__(self):
        return hash((tuple(self.names), tuple(self.attacks_of)))

    def __repr__(self):
        return f"Framework({self.names!r}, {self.attack_pairs()!r})"


class ArgSet:
    """Immutable subset of one framework's arguments."""

    __slots__ = ("fw", "mask")

    def __init__(self, fw, mask):
        if mask & ~fw.full_mask:
            raise ValueError("mask outside framework")
        self.fw = fw
        self.mask = mask

    def _check(self, other):
        if self.fw is not other.fw:
            raise ValueError("ArgSets belong to different frameworks")
        return other

    def __or__(self, other):
        return ArgSet(self.fw, self.mask | self._check(other).mask)

    def __and__(self, other):
        return ArgSet(self.fw, self.mask & self._check(other).mask)

    def __sub__(self, other):
        return ArgSet(self.fw, self.mask & ~self._check(other).mask)

    def __le__(self, other):
        return self.mask & ~self._check(other).mask == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __eq__(self, other):
        return isinstance(other, ArgSet) and self.fw is other.fw and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.fw), self.mask))

    def __contains__(self, arg):
        return self.mask >> self.fw.resolve(arg) & 1 == 1

    def __iter__(self):
        return iter(self.labels())

    def __len__(self):
        return popcount(self.mask)

    def __bool__(self):
        return self.mask != 0

    def labels(self):
        return self.fw.labels_of(self.mask)

    def indices(self):
        return list(_bits(self.mask))

    def __repr__(self):
        return "{" + ", ".join(self.labels()) + "}"


# Public operations.

def attacks_set(fw, a, B):
    """True iff argument a attacks some member of B."""
    return fw.attacks_of[fw.resolve(a)] & B.mask != 0


def plus(A):
    """The set of arguments attacked by A (A-plus)."""
    return ArgSet(A.fw, A.fw.plus_mask(A.mask))


def attackers(A):
    """The set of arguments attacking some member of A."""
    return ArgSet(A.fw, A.fw.attackers_mask(A.mask))


def is_conflict_free(A):
    return A.fw.cf_mask(A.mask)


def as_cogent(A, B):
    """A is as cogent as B: A conflict-free and every b in B attacking A is in plus(A)."""
    A._check(B)
    return A.fw.succeq_mask(A.mask, B.mask)


def more_cogent(B, A):
    """B is more cogent than A: as_cogent(B, A) and not as_cogent(A, B)."""
    B._check(A)
    return B.fw.succ_mask(B.mask, A.mask)


def restriction(fw, S):
    """Induced subframework on S; labels preserved."""
    keep = S.indices() if isinstance(S, ArgSet) else sorted(_bits(S))
    names = [fw.names[i] for i in keep]
    pos = {i: p for p, i in enumerate(keep)}
    attacks = [(pos[i], pos[j]) for i, j in fw.attack_pairs() if i in pos and j in pos]
    return Framework(names, attacks)


def reduct(fw, A):
    """Restriction of fw to everything outside A and plus(A).

    Returns (subframework, back_map) where back_map[new_index] = old_index.
    """
    dead = A.mask | fw.plus_mask(A.mask)
    keep = [i for i in range(fw.n) if not dead >> i & 1]
    sub = restriction(fw, ArgSet(fw, sum(1 << i for i in keep)))
    return sub, keep


def ancestor_closure(fw, A):
    """All arguments with a directed attack path into A, plus A itself."""
    seen = A.mask
    frontier = A.mask
    while frontier:
        new = fw.attackers_mask(frontier) & ~seen
        seen |= new
        frontier = new
    return ArgSet(fw, seen)
