"""Prenex QBF: QDIMACS-subset parsing, brute-force evaluation, and the
reduction to argumentation frameworks whose designated argument is
(strongly/plainly) tenable iff the formula is true.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import ArgSet, Framework
from .games import is_strongly_tenable, is_tenable, is_statically_tenable, DEFAULT_STATE_BUDGET

EXISTS = "e"
FORALL = "a"

EVAL_VAR_CAP = 16


class SizeLimitError(ValueError):
    pass


class QbfParseError(ValueError):
    pass


@dataclass(frozen=True)
class QbfFormula:
    """Prenex CNF: prefix of (quantifier, variable), matrix of clauses of
    signed variable ids."""
    prefix: tuple          # ((EXISTS|FORALL, var), ...)
    matrix: tuple          # ((lit, ...), ...), lit = +-var

    def __post_init__(self):
        seen = set()
        for q, v in self.prefix:
            if q not in (EXISTS, FORALL):
                raise ValueError(f"bad quantifier {q!r}")
            if v in seen:
                raise ValueError(f"variable {v} quantified twice")
            seen.add(v)
        for clause in self.matrix:
            if not clause:
                raise ValueError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) not in seen:
                    raise ValueError(f"literal {lit} not bound by the prefix")

    @classmethod
    def of(cls, prefix, matrix):
        return cls(tuple(tuple(p) for p in prefix),
                   tuple(tuple(c) for c in matrix))

    @property
    def n_vars(self):
        return len(self.prefix)

    def blocks(self):
        """Quantifier blocks as (quantifier, [vars...]) in prefix order."""
        out = []
        for q, v in self.prefix:
            if out and out[-1][0] == q:
                out[-1][1].append(v)
            else:
                out.append((q, [v]))
        return out

    def is_forall_exists_shape(self):
        """A (possibly empty) all-universal block followed by a (possibly
        empty) all-existential block."""
        kinds = [q for q, _ in self.blocks()]
        return kinds in ([], [FORALL], [EXISTS], [FORALL, EXISTS])


def parse_qdimacs(text):
    """QDIMACS subset: 'p cnf <vars> <clauses>', then 'e ... 0' / 'a ... 0'
    prefix lines, then clause lines ending in 0. Comments start with 'c'."""
    prefix = []
    matrix = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[:2] != ["p", "cnf"]:
                raise QbfParseError(f"line {lineno}: malformed header {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise QbfParseError(f"line {lineno}: clause before header")
        if line[0] in "ea":
            toks = line.split()
            if toks[-1] != "0":
                raise QbfParseError(f"line {lineno}: quantifier line must end with 0")
            for tok in toks[1:-1]:
                prefix.append((line[0], int(tok)))
            continue
        try:
            lits = [int(t) for t in line.split()]
        except ValueError:
            raise QbfParseError(f"line {lineno}: bad token in clause {line!r}")
        if not lits or lits[-1] != 0:
            raise QbfParseError(f"line {lineno}: clause must end with 0")
        matrix.append(tuple(lits[:-1]))
    if header is None:
        raise QbfParseError("missing 'p cnf' header")
    nv, nc = header
    mentioned = {abs(l) for c in matrix for l in c}
    bound = {v for _, v in prefix}
    # free variables are implicitly existential, innermost by convention here
    for v in sorted(mentioned - bound):
        prefix.append((EXISTS, v))
    if len(matrix) != nc:
        raise QbfParseError(f"header declares {nc} clauses, found {len(matrix)}")
    if any(v > nv for v in mentioned | bound):
        raise QbfParseError(f"variable above the declared count {nv}")
    return QbfFormula.of(prefix, matrix)


def eval_qbf(f):
    """Truth by exhaustive recursion over the prefix."""
    if f.n_vars > EVAL_VAR_CAP:
        raise SizeLimitError(f"eval capped at {EVAL_VAR_CAP} variables, got {f.n_vars}")
    prefix = f.prefix
    matrix = f.matrix

    def rec(i, assign):
        if i == len(prefix):
            return all(any((lit > 0) == assign[abs(lit)] for lit in clause)
                       for clause in matrix)
        q, v = prefix[i]
        results = (rec(i + 1, {**assign, v: val}) for val in (True, False))
        return any(results) if q == EXISTS else all(results)

    return rec(0, {})


@dataclass
class ReductionOutput:
    framework: Framework
    designated: int                 # index of the argument labeled "a"
    name_map: dict = field(default_factory=dict)

    def designated_set(self):
        return ArgSet(self.framework, 1 << self.designated)


def expected_argument_count(f):
    """1 (seed) + 2n (literal pairs) + one switch node per same-quantifier
    adjacency (Q_0 = exists included) + terminal nodes (2 if the last
    quantifier is existential, else 1) + one node per clause."""
    n = f.n_vars
    quants = [EXISTS] + [q for q, _ in f.prefix]
    same = sum(1 for k in range(n) if quants[k] == quants[k + 1])
    terminal = 2 if quants[n] == EXISTS else 1
    return 1 + 2 * n + same + terminal + len(f.matrix)


def qbf_to_af(f):
    """Inductive construction: the seed a doubles as the pair x_0/notx_0 under
    an existential dummy quantifier Q_0; each further variable adds its literal
    pair (mutually attacking), joined to the previous pair directly when the
    quantifier alternates or through a switch node b_k when it repeats; the
    terminal stage adds phi (with a last switch node if Q_n is existential);
    each clause adds a node -u_i attacking phi, attacked by its literals."""
    if f.n_vars < 1:
        raise ValueError("reduction needs at least one quantified variable")
    names = ["a"]
    attacks = []
    index = {"a": 0}
    name_map = {"a": "a", "x0": "a", "-x0": "a"}

    def add(label):
        index[label] = len(names)
        names.append(label)
        return label

    def att(x, y):
        attacks.append((index[x], index[y]))

    # prefix order maps variable ids to subscripts 1..n
    order = {v: k + 1 for k, (_, v) in enumerate(f.prefix)}
    quants = [EXISTS] + [q for q, _ in f.prefix]
    pair = ("a", "a")
    for k in range(f.n_vars):
        xk1, nxk1 = f"x{k + 1}", f"-x{k + 1}"
        if quants[k] == quants[k + 1]:
            bk1 = add(f"b{k + 1}")
            add(xk1)
            add(nxk1)
            att(xk1, bk1)
            att(nxk1, bk1)
            att(bk1, pair[0])
            if pair[1] != pair[0]:
                att(bk1, pair[1])
        else:
            add(xk1)
            add(nxk1)
            for tgt in dict.fromkeys(pair):
                att(xk1, tgt)
                att(nxk1, tgt)
        # the new literal pair conflicts; the seed never self-attacks
        att(xk1, nxk1)
        att(nxk1, xk1)
        name_map[xk1] = xk1
        name_map[nxk1] = nxk1
        pair = (xk1, nxk1)
    n = f.n_vars
    add("phi")
    name_map["phi"] = "phi"
    if quants[n] == EXISTS:
        bt = add(f"b{n + 1}")
        att("phi", bt)
        att(bt, pair[0])
        att(bt, pair[1])
    else:
        att("phi", pair[0])
        att("phi", pair[1])
    for i, clause in enumerate(f.matrix, start=1):
        ui = add(f"-u{i}")
        att(ui, "phi")
        for lit in dict.fromkeys(clause):
            label = f"x{order[abs(lit)]}" if lit > 0 else f"-x{order[abs(lit)]}"
            att(label, ui)
        name_map[ui] = ui
    fw = Framework(names, attacks)
    assert fw.n == expected_argument_count(f)
    return ReductionOutput(framework=fw, designated=0, name_map=name_map)


def check_reduction(f, budget=DEFAULT_STATE_BUDGET):
    """Asserts the hardness-construction equivalences on one formula:
    truth = strong tenability of {a} = tenability of {a}, and for the
    universal-then-existential prefix shape also = static tenability."""
    out = qbf_to_af(f)
    fw = out.framework
    a = out.designated_set()
    report = {
        "qbf_value": eval_qbf(f),
        "strong": is_strongly_tenable(fw, a, budget=budget),
        "ten": is_tenable(fw, a, budget=budget),
        "arguments": fw.n,
    }
    ok = report["qbf_value"] == report["strong"] == report["ten"]
    if f.is_forall_exists_shape():
        report["static"] = is_statically_tenable(fw, a)
        ok = ok and report["static"] == report["qbf_value"]
    report["ok"] = ok
    return report
