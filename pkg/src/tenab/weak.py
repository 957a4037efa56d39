"""Comparison weak semantics: cogent, cyclically cogent, weakly admissible,
weakly complete. Each has a definition-literal oracle; cogency also has the
fast characterization, cyclic cogency a reachability-based decision.
"""

from __future__ import annotations

from .core import ArgSet, _bits, popcount

IN = "in"
OUT = "out"
UNDEC = "undec"

WEAKLY_COMPLETE_SIZE_CAP = 20


class SizeLimitError(ValueError):
    """Input exceeds the desk-scale cap of an enumerative procedure."""


# Cogency.

def is_cogent(fw, E):
    """Characterization: conflict-free and every non-self-attacking attacker counterattacked."""
    m = E.mask
    if not fw.cf_mask(m):
        return False
    return fw.attackers_mask(m) & ~fw.self_attackers & ~fw.plus_mask(m) == 0


def is_cogent_by_definition(fw, E):
    """Definition-literal oracle: no D is strictly more cogent than E."""
    e = E.mask
    for d in range(fw.full_mask + 1):
        if fw.succeq_mask(d, e) and not fw.succeq_mask(e, d):
            return False
    return True


# Cyclic cogency.

class _CogencyTable:
    """Cogency preorder restricted to conflict-free subsets, as index bitsets."""

    def __init__(self, fw):
        self.fw = fw
        self.cfs = fw.cf_masks()
        self.pos = {m: i for i, m in enumerate(self.cfs)}
        c = len(self.cfs)
        self.row = [0] * c   # row[i] bit j: cfs[i] as cogent as cfs[j]
        self.col = [0] * c   # col[j] bit i: cfs[i] as cogent as cfs[j]
        for i, e in enumerate(self.cfs):
            att = fw.attackers_mask(e)
            pl = fw.plus_mask(e)
            danger = att & ~pl
            r = 0
            for j, d in enumerate(self.cfs):
                if d & danger == 0:
                    r |= 1 << j
                    self.col[j] |= 1 << i
            self.row[i] = r
        # strict_down[i] bit j: cfs[i] more cogent than cfs[j]
        self.strict_down = [self.row[i] & ~self.col[i] for i in range(c)]

    def reach_to(self, e_idx):
        """Bitset of cf indices with a strict-cogency chain ending at e_idx."""
        reach = 1 << e_idx
        frontier = reach
        while frontier:
            new = 0
            for i in _bits(frontier):
                new |= self.strict_down[i]
            new &= ~reach
            reach |= new
            frontier = new
        return reach


def _cog_table(fw):
    tab = fw._cache.get("cogtable")
    if tab is None:
        tab = fw._cache["cogtable"] = _CogencyTable(fw)
    return tab


def is_cyclically_cogent(fw, E):
    """Every dominator of E is dominated back or chained to E by strict cogency steps."""
    e = E.mask
    if not fw.cf_mask(e):
        # A conflicted E is never as cogent as anything and cannot end a
        # chain, while the empty set always dominates it.
        return False
    tab = _cog_table(fw)
    i = tab.pos[e]
    reach = tab.reach_to(i)
    violating = tab.col[i] & ~tab.row[i] & ~reach
    return violating == 0


def is_cyclically_cogent_by_definition(fw, E):
    """Oracle: chain search by DFS over subsets, no precomputed table."""
    e = E.mask

    def chain_exists(d):
        if d == e:
            return True
        seen = {d}
        stack = [d]
        while stack:
            x = stack.pop()
            for y in range(fw.full_mask + 1):
                if y in seen:
                    continue
                if fw.succeq_mask(y, x) and not fw.succeq_mask(x, y):
                    if y == e:
                        return True
                    seen.add(y)
                    stack.append(y)
        return False

    for d in range(fw.full_mask + 1):
        if not fw.succeq_mask(d, e):
            continue
        if fw.succeq_mask(e, d):
            continue
        if not chain_exists(d):
            return False
    return True


# Weak admissibility.

def _cred_wad_mask(fw, alive):
    """Arguments of the surviving set belonging to some weakly admissible set
    of the induced subframework. Memoized on the surviving bitset."""
    memo = fw._cache.setdefault("wad_cred", {})
    acc = memo.get(alive)
    if acc is not None:
        return acc
    acc = 0
    for s in fw.cf_masks(alive):
        if s and acc & s != s and _wad_mask(fw, alive, s):
            acc |= s
    memo[alive] = acc
    return acc


def _wad_mask(fw, alive, s):
    if not fw.cf_mask(s):
        return False
    atk = fw.attackers_mask(s) & alive
    if atk == 0:
        return True
    surviving = alive & ~(s | fw.plus_mask(s))
    return atk & _cred_wad_mask(fw, surviving) == 0


def is_weakly_admissible(fw, A):
    """Conflict-free with no attacker inside any weakly admissible set of the reduct."""
    return _wad_mask(fw, fw.full_mask, A.mask)


# Weakly complete labelings.

class Labeling:
    """Total in/out/undec assignment over a framework's arguments."""

    __slots__ = ("fw", "labels")

    def __init__(self, fw, assignment):
        if isinstance(assignment, dict):
            labels = [None] * fw.n
            for k, v in assignment.items():
                labels[fw.resolve(k)] = v
        else:
            labels = list(assignment)
        if len(labels) != fw.n or any(v not in (IN, OUT, UNDEC) for v in labels):
            raise ValueError("labeling must assign in/out/undec to every argument")
        self.fw = fw
        self.labels = tuple(labels)

    def in_set(self):
        mask = 0
        for i, v in enumerate(self.labels):
            if v == IN:
                mask |= 1 << i
        return ArgSet(self.fw, mask)

    def as_dict(self):
        return {self.fw.names[i]: v for i, v in enumerate(self.labels)}

    def __eq__(self, other):
        return isinstance(other, Labeling) and self.fw is other.fw and self.labels == other.labels

    def __hash__(self):
        return hash((id(self.fw), self.labels))


def is_weakly_complete_labeling(fw, L):
    """Pointwise check of the three clauses: an in argument has no in attacker,
    an out argument has an in attacker, an undec argument has no in attacker
    and at least one undec attacker."""
    if not isinstance(L, Labeling):
        L = Labeling(fw, L)
    labels = L.labels
    in_mask = 0
    undec_mask = 0
    for i, v in enumerate(labels):
        if v == IN:
            in_mask |= 1 << i
        elif v == UNDEC:
            undec_mask |= 1 << i
    for i, v in enumerate(labels):
        att = fw.attackers_of[i]
        if v == IN:
            if att & in_mask:
                return False
        elif v == OUT:
            if not att & in_mask:
                return False
        else:
            if att & in_mask:
                return False
            if not att & undec_mask:
                return False
    return True


def _iter_weakly_complete(fw, forced_in=0):
    """Backtracking enumeration of weakly complete labelings; arguments are
    assigned in index order with pairwise pruning, existential clauses checked
    on completion."""
    if fw.n > WEAKLY_COMPLETE_SIZE_CAP:
        raise SizeLimitError(
            f"weakly complete enumeration capped at {WEAKLY_COMPLETE_SIZE_CAP} arguments, got {fw.n}")
    n = fw.n
    labels = [None] * n

    def ok_sofar(i, v):
        att = fw.attackers_of[i]
        if v == IN or v == UNDEC:
            # no in-labeled attacker (self-attack included)
            for j in _bits(att & ((1 << i) - 1)):
                if labels[j] == IN:
                    return False
            if v == IN and att >> i & 1:
                return False
        if v == IN:
            # assigned targets must not be in or undec-with-in-attacker rules
            for j in _bits(fw.attacks_of[i] & ((1 << i) - 1)):
                if labels[j] in (IN, UNDEC):
                    return False
            if fw.attacks_of[i] >> i & 1:
                return False
        return True

    def rec(i):
        if i == n:
            lab = Labeling(fw, labels)
            if is_weakly_complete_labeling(fw, lab):
                yield lab
            return
        choices = (IN,) if forced_in >> i & 1 else (IN, OUT, UNDEC)
        for v in choices:
            if not ok_sofar(i, v):
                continue
            labels[i] = v
            yield from rec(i + 1)
            labels[i] = None

    yield from rec(0)


def weakly_complete_labelings(fw):
    return list(_iter_weakly_complete(fw))


def weakly_complete_extensions(fw):
    """All distinct in-sets of weakly complete labelings, sorted."""
    seen = {lab.in_set().mask for lab in _iter_weakly_complete(fw)}
    return [ArgSet(fw, m) for m in sorted(seen)]


def contained_in_weakly_complete(fw, A):
    """Some weakly complete extension is a superset of A."""
    for _lab in _iter_weakly_complete(fw, forced_in=A.mask):
        return True
    return False


def is_weakly_complete_extension(fw, A):
    """A equals the in-set of some weakly complete labeling."""
    for lab in _iter_weakly_complete(fw, forced_in=A.mask):
        if lab.in_set().mask == A.mask:
            return True
    return False
