"""Tenability deciders: the static quantifier form and the two dispute games.

Both games are monotone commitment games: each side only ever adds arguments
to its own conflict-free commitment. Legality of a move depends only on the
current pair of commitments, which is why (pro, opp, turn) keys the memo.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import ArgSet, _bits, ancestor_closure

PRO = "pro"
OPP = "opp"

TENABILITY = "ten"
STRONG_TENABILITY = "strong"

DEFAULT_STATE_BUDGET = 50_000_000


class ResourceBudgetError(RuntimeError):
    """The solver visited more states than its configured budget."""

    def __init__(self, budget):
        super().__init__(f"state budget exceeded: {budget} states visited")
        self.budget = budget


@dataclass(frozen=True)
class DisputeKind:
    variant: str                       # TENABILITY or STRONG_TENABILITY
    move_bound: Optional[int] = None   # max new arguments per move, None = unbounded

    def __post_init__(self):
        if self.variant not in (TENABILITY, STRONG_TENABILITY):
            raise ValueError(f"unknown dispute variant: {self.variant!r}")
        if self.move_bound is not None and self.move_bound < 1:
            raise ValueError("move_bound must be >= 1 when present")


@dataclass(frozen=True)
class DisputeState:
    pro_commit: ArgSet
    opp_commit: ArgSet
    turn: str
    move_index: int = 0


@dataclass
class SolveResult:
    winner: str
    best_move: Optional[ArgSet]
    states_visited: int
    memo_hits: int


def _growth_deltas(fw, base, bound):
    """Conflict-free nonempty extensions of base, as delta masks, ascending
    delta size then lexicographic by bitset."""
    cand = [i for i in _bits(fw.full_mask & ~base & ~fw.self_attackers)
            if fw.attacks_of[i] & base == 0 and fw.attackers_of[i] & base == 0]
    limit = len(cand) if bound is None else min(bound, len(cand))

    def rec(start, cur, allowed, k):
        if k == 0:
            yield cur
            return
        for p in range(start, len(cand) - k + 1):
            i = cand[p]
            if not allowed >> i & 1:
                continue
            yield from rec(p + 1, cur | 1 << i, allowed & fw.compatible_mask(i), k - 1)

    all_cand = 0
    for i in cand:
        all_cand |= 1 << i
    for k in range(1, limit + 1):
        yield from rec(0, 0, all_cand, k)


def _opp_move_masks(fw, pro, opp, variant, bound):
    """Full next Opp positions. Both variants require an unanswered attacker of
    Pro's position; the tenability variant additionally requires the move to be
    as cogent as Pro's position (together: strictly more cogent)."""
    danger = fw.attackers_mask(pro) & ~fw.plus_mask(pro)
    if danger == 0:
        return
    for delta in _growth_deltas(fw, opp, bound):
        y = opp | delta
        if y & danger == 0:
            continue
        if variant == TENABILITY and not fw.succeq_mask(y, pro):
            continue
        yield y


def _pro_move_masks(fw, pro, opp, bound, prune=False):
    """Full next Pro positions: conflict-free supersets as cogent as Opp's
    position. With prune=True, any move whose delta strictly contains an
    earlier legal delta is skipped (padding is a liability; cross-checked
    against unpruned runs)."""
    accepted = []
    for delta in _growth_deltas(fw, pro, bound):
        if prune and any(delta & small == small for small in accepted):
            continue
        z = pro | delta
        if fw.succeq_mask(z, opp):
            if prune:
                accepted.append(delta)
            yield z


def legal_opp_moves(fw, s, k):
    """Stream of legal full Opp positions from state s."""
    if s.turn != OPP:
        raise ValueError("not Opp's turn")
    for y in _opp_move_masks(fw, s.pro_commit.mask, s.opp_commit.mask,
                             k.variant, k.move_bound):
        yield ArgSet(fw, y)


def legal_pro_moves(fw, s, k):
    """Stream of legal full Pro positions from state s."""
    if s.turn != PRO:
        raise ValueError("not Pro's turn")
    for z in _pro_move_masks(fw, s.pro_commit.mask, s.opp_commit.mask, k.move_bound):
        yield ArgSet(fw, z)


def diagnose_move(fw, s, k, add_mask):
    """Explains legality of extending the mover's commitment by add_mask.
    Returns (ok, condition, reason) where condition is the number of the first
    violated move rule: (1) conflict-freeness, (3) strict bounded growth,
    (4) Pro must stay as cogent as Opp, (5) Opp must raise an unanswered
    attack (and, in the tenability variant, be as cogent as Pro). Rule (2),
    monotone growth, cannot be violated through an adds-only interface."""
    mover_commit = s.pro_commit.mask if s.turn == PRO else s.opp_commit.mask
    add_mask &= ~mover_commit
    if add_mask == 0:
        return False, 3, "a move must add at least one new argument"
    if k.move_bound is not None and bin(add_mask).count("1") > k.move_bound:
        return False, 3, f"at most {k.move_bound} new argument(s) per move"
    new = mover_commit | add_mask
    if not fw.cf_mask(new):
        return False, 1, "the resulting position is not conflict-free"
    if s.turn == PRO:
        if not fw.succeq_mask(new, s.opp_commit.mask):
            return False, 4, "the move is not as cogent as the opposing position"
        return True, None, None
    pro = s.pro_commit.mask
    danger = fw.attackers_mask(pro) & ~fw.plus_mask(pro)
    if new & danger == 0:
        return False, 5, "the move raises no unanswered attack on the opposing position"
    if k.variant == TENABILITY and not fw.succeq_mask(new, pro):
        return False, 5, "the move is not more cogent than the opposing position"
    return True, None, None


class DisputeSolver:
    """Memoized minimax over dispute states. One instance may decide several
    initial positions on the same framework, sharing its memo table."""

    def __init__(self, fw, kind, budget=DEFAULT_STATE_BUDGET, prune_pro=True):
        self.fw = fw
        self.kind = kind
        self.budget = budget
        # Dominance pruning of padded Pro moves is only applied in the
        # unbounded game; bounded games may need padding to spend the bound.
        self.prune_pro = prune_pro and kind.move_bound is None
        self.memo = {}
        self.depth_memo = {}
        self.states_visited = 0
        self.memo_hits = 0

    def _tick(self):
        self.states_visited += 1
        if self.states_visited > self.budget:
            raise ResourceBudgetError(self.budget)

    def _moves(self, pro, opp, turn):
        if turn == OPP:
            return _opp_move_masks(self.fw, pro, opp, self.kind.variant,
                                   self.kind.move_bound)
        return _pro_move_masks(self.fw, pro, opp, self.kind.move_bound,
                               prune=self.prune_pro)

    def mover_wins(self, pro, opp, turn):
        # opp == 0 iff Opp has not moved yet: the empty set is never a legal
        # Opp move, so the first-move flag is derivable; kept explicit in the key.
        key = (pro, opp, turn, opp != 0)
        hit = self.memo.get(key)
        if hit is not None:
            self.memo_hits += 1
            return hit
        self._tick()
        res = False
        for m in self._moves(pro, opp, turn):
            if turn == OPP:
                assert m != opp and m & opp == opp  # strict monotone growth
                if not self.mover_wins(pro, m, PRO):
                    res = True
                    break
            else:
                assert m != pro and m & pro == pro
                if not self.mover_wins(m, opp, OPP):
                    res = True
                    break
        self.memo[key] = res
        return res

    def remaining_depth(self, pro, opp, turn):
        """Plies until the game ends when the winner plays fastest and the
        loser stalls longest. Used for the stalling heuristic only."""
        key = (pro, opp, turn, opp != 0)
        hit = self.depth_memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        moves = list(self._moves(pro, opp, turn))
        if not moves:
            d = 0
        else:
            child_depths = []
            winning_depths = []
            for m in moves:
                cp, co = (pro, m) if turn == OPP else (m, opp)
                nxt = PRO if turn == OPP else OPP
                d_child = self.remaining_depth(cp, co, nxt)
                child_depths.append(d_child)
                if not self.mover_wins(cp, co, nxt):
                    winning_depths.append(d_child)
            if winning_depths:
                d = 1 + min(winning_depths)
            else:
                d = 1 + max(child_depths)
        self.depth_memo[key] = d
        return d

    def best_move_mask(self, pro, opp, turn):
        """First winning move in enumeration order, else the legal move
        maximizing the remaining depth, else None."""
        moves = list(self._moves(pro, opp, turn))
        if not moves:
            return None
        for m in moves:
            cp, co = (pro, m) if turn == OPP else (m, opp)
            nxt = PRO if turn == OPP else OPP
            if not self.mover_wins(cp, co, nxt):
                return m
        best, best_d = None, -1
        for m in moves:
            cp, co = (pro, m) if turn == OPP else (m, opp)
            nxt = PRO if turn == OPP else OPP
            d = self.remaining_depth(cp, co, nxt)
            if d > best_d:
                best, best_d = m, d
        return best

    def solve(self, A):
        """Game value with X_0 = A; Opp moves first. A conflicted initial
        position is not a dispute at all: Opp wins immediately."""
        a = A.mask
        if not self.fw.cf_mask(a):
            return SolveResult(OPP, None, self.states_visited, self.memo_hits)
        opp_wins = self.mover_wins(a, 0, OPP)
        best = self.best_move_mask(a, 0, OPP) if opp_wins else None
        winner = OPP if opp_wins else PRO
        best_set = ArgSet(self.fw, best) if best is not None else None
        return SolveResult(winner, best_set, self.states_visited, self.memo_hits)


def solve_dispute(fw, A, k, budget=DEFAULT_STATE_BUDGET, prune_pro=True):
    return DisputeSolver(fw, k, budget=budget, prune_pro=prune_pro).solve(A)


def best_move(fw, s, k, budget=DEFAULT_STATE_BUDGET):
    """Winning move for the side to move if one exists, else a stalling legal
    move, else None. Deterministic: ascending delta size, then lexicographic."""
    solver = DisputeSolver(fw, k, budget=budget)
    m = solver.best_move_mask(s.pro_commit.mask, s.opp_commit.mask, s.turn)
    return ArgSet(fw, m) if m is not None else None


def is_tenable(fw, A, budget=DEFAULT_STATE_BUDGET):
    return solve_dispute(fw, A, DisputeKind(TENABILITY), budget=budget).winner == PRO


def is_strongly_tenable(fw, A, budget=DEFAULT_STATE_BUDGET):
    return solve_dispute(fw, A, DisputeKind(STRONG_TENABILITY), budget=budget).winner == PRO


def is_statically_tenable(fw, A):
    """For every conflict-free B there is a conflict-free C containing A that
    is as cogent as B.

    Search is restricted to the ancestor closure of A: attackers of any set
    inside the closure lie in the closure themselves, so trimming B to the
    closure loses no attack line, members of C outside the closure can never
    counterattack such a B, and only inclusion-maximal B need checking since
    as-cogent-as is antitone in its second argument. The exhaustive oracle
    below guards this reasoning in the test suite.
    """
    a = A.mask
    if not fw.cf_mask(a):
        return False
    clo = ancestor_closure(fw, A).mask
    dangers = [fw.attackers_mask(c) & ~fw.plus_mask(c)
               for c in fw.cf_masks(clo) if c & a == a]
    for b in fw.maximal_cf_masks(clo):
        if not any(b & d == 0 for d in dangers):
            return False
    return True


def is_statically_tenable_exhaustive(fw, A):
    """Definition-literal oracle quantifying over all subsets."""
    a = A.mask
    if not fw.cf_mask(a):
        return False
    cs = [c for c in range(fw.full_mask + 1)
          if c & a == a and fw.cf_mask(c)]
    for b in range(fw.full_mask + 1):
        if not fw.cf_mask(b):
            continue
        if not any(fw.succeq_mask(c, b) for c in cs):
            return False
    return True


SEMANTICS_TAGS = ("grounded", "admissible", "cogent", "cycog", "wadm", "wcomp",
                  "stat-ten", "ten", "strong-ten")


def credulous(fw, a, sem, budget=DEFAULT_STATE_BUDGET):
    """Credulous acceptance of a single argument. Tenability-family tags decide
    the singleton (equivalent by subset closure); the rest scan extensions."""
    from . import classic, weak

    i = fw.resolve(a)
    single = ArgSet(fw, 1 << i)
    if sem == "stat-ten":
        return is_statically_tenable(fw, single)
    if sem == "ten":
        return is_tenable(fw, single, budget=budget)
    if sem == "strong-ten":
        return is_strongly_tenable(fw, single, budget=budget)
    if sem == "grounded":
        return i in classic.grounded(fw).fixpoint.indices()
    if sem == "wcomp":
        return any(1 << i & e.mask for e in weak.weakly_complete_extensions(fw))
    if sem == "admissible":
        pred = classic.is_admissible
    elif sem == "cogent":
        pred = weak.is_cogent
    elif sem == "cycog":
        pred = weak.is_cyclically_cogent
    elif sem == "wadm":
        pred = weak.is_weakly_admissible
    else:
        raise ValueError(f"unknown semantics tag: {sem!r}")
    return any(pred(fw, ArgSet(fw, m))
               for m in fw.cf_masks() if m >> i & 1)
