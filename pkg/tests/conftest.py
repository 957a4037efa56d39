import random

import pytest

from tenab.qbf import EXISTS, FORALL, QbfFormula
from tenab.testkit import GenConfig, random_framework


def random_qbf(rng, max_blocks=3, max_vars=6, max_clauses=4, max_clause_len=3):
    """Random prenex CNF within the given caps; deterministic given rng."""
    n = rng.randint(1, max_vars)
    blocks = rng.randint(1, min(max_blocks, n))
    cuts = sorted(rng.sample(range(1, n), blocks - 1)) if blocks > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    q = rng.choice([EXISTS, FORALL])
    prefix = []
    v = 1
    for s in sizes:
        for _ in range(s):
            prefix.append((q, v))
            v += 1
        q = EXISTS if q == FORALL else FORALL
    matrix = []
    for _ in range(rng.randint(1, max_clauses)):
        k = min(rng.randint(1, max_clause_len), n)
        vs = rng.sample(range(1, n + 1), k)
        matrix.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return QbfFormula.of(prefix, matrix)


def corpus(count, max_n, seed_base=1, p_choices=(0.15, 0.3)):
    """Deterministic list of random frameworks, sizes cycling 0..max_n."""
    out = []
    for k in range(count):
        cfg = GenConfig(n=(seed_base + k) % (max_n + 1),
                        p_attack=p_choices[k % len(p_choices)],
                        seed=seed_base + k)
        out.append(random_framework(cfg))
    return out


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome, tag in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" in nodeid and getattr(rep, "when", "call") == "call":
                rows.append((nodeid.split("::")[-1], tag))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, tag in sorted(rows):
            terminalreporter.write_line(f"{name}: {tag}")
