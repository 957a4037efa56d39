"""Random instance generation and the implication-lattice checker."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .core import ArgSet, Framework
from .games import (DisputeKind, DisputeSolver, PRO, STRONG_TENABILITY,
                    TENABILITY, is_statically_tenable)
from . import weak

ZOO_SIZE_CAP = 8
ZOO_SIZE_CAP_NO_CYCOG = 10


@dataclass(frozen=True)
class GenConfig:
    n: int
    p_attack: float = 0.2
    p_selfattack: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        for p in (self.p_attack, self.p_selfattack):
            if not 0.0 <= p <= 1.0:
                raise ValueError("probabilities must lie in [0, 1]")


def random_framework(cfg):
    """Deterministic given the seed: each ordered pair (i != j) becomes an
    attack with p_attack, each self-loop with p_selfattack."""
    rng = random.Random(cfg.seed)
    attacks = []
    for i in range(cfg.n):
        for j in range(cfg.n):
            p = cfg.p_selfattack if i == j else cfg.p_attack
            if rng.random() < p:
                attacks.append((i, j))
    return Framework([f"a{i}" for i in range(cfg.n)], attacks)


# Solid arrows: membership implications between semantics.
SOLID_ARROWS = (
    ("cogent", "cycog"),
    ("cogent", "strong-ten"),
    ("cogent", "wadm"),
    ("strong-ten", "ten"),
    ("ten", "stat-ten"),
)
# Dashed arrows: every lhs-extension is contained in some wcomp extension.
DASHED_ARROWS = (
    ("stat-ten", "wcomp"),
    ("wadm", "wcomp"),
)


@dataclass
class ZooReport:
    framework: Framework
    subsets_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def zoo_check(fw, skip_cycog=False):
    """For every subset E computes membership under all seven semantics and
    checks the implication lattice; returns all violations as
    (subset labels, arrow, lhs value, rhs value) tuples."""
    cap = ZOO_SIZE_CAP_NO_CYCOG if skip_cycog else ZOO_SIZE_CAP
    if fw.n > cap:
        raise weak.SizeLimitError(
            f"zoo_check capped at {cap} arguments"
            f"{' (pass skip_cycog=True up to %d)' % ZOO_SIZE_CAP_NO_CYCOG if not skip_cycog else ''}, got {fw.n}")
    report = ZooReport(framework=fw)
    wc_exts = weak.weakly_complete_extensions(fw)
    wc_masks = {e.mask for e in wc_exts}
    strong_solver = DisputeSolver(fw, DisputeKind(STRONG_TENABILITY))
    ten_solver = DisputeSolver(fw, DisputeKind(TENABILITY))
    for m in range(fw.full_mask + 1):
        E = ArgSet(fw, m)
        cf = fw.cf_mask(m)
        vals = {
            "cogent": weak.is_cogent(fw, E),
            "cycog": (not skip_cycog) and weak.is_cyclically_cogent(fw, E),
            "wadm": weak.is_weakly_admissible(fw, E),
            "wcomp": m in wc_masks,
            "strong-ten": cf and strong_solver.solve(E).winner == PRO,
            "ten": cf and ten_solver.solve(E).winner == PRO,
            "stat-ten": is_statically_tenable(fw, E),
        }
        report.subsets_checked += 1
        for lhs, rhs in SOLID_ARROWS:
            if skip_cycog and rhs == "cycog":
                continue
            if vals[lhs] and not vals[rhs]:
                report.violations.append((E.labels(), f"{lhs}->{rhs}", vals[lhs], vals[rhs]))
        for lhs, rhs in DASHED_ARROWS:
            if vals[lhs] and not any(m & ~w == 0 for w in wc_masks):
                report.violations.append((E.labels(), f"{lhs}~>{rhs}", vals[lhs], False))
    return report
