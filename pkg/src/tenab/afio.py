"""Framework interchange (ICCMA and APX formats, DOT output) and the built-in
fixture library with expected credulous-acceptance values for the designated
argument a."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import ArgSet, Framework


class ParseError(ValueError):
    pass


def parse_iccma(text):
    """'p af <n>' header, '<i> <j>' attack lines with 1-based ids, '#' comments."""
    fw_n = None
    attacks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("p"):
            parts = line.split()
            if fw_n is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(parts) != 3 or parts[:2] != ["p", "af"] or not parts[2].isdigit():
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            fw_n = int(parts[2])
            continue
        if fw_n is None:
            raise ParseError(f"line {lineno}: attack before header")
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: malformed attack line {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if not (1 <= i <= fw_n and 1 <= j <= fw_n):
            raise ParseError(f"line {lineno}: id out of range in {line!r}")
        attacks.append((i - 1, j - 1))
    if fw_n is None:
        raise ParseError("missing 'p af' header")
    return Framework([str(i + 1) for i in range(fw_n)], attacks)


def write_iccma(fw):
    lines = [f"p af {fw.n}"]
    for i, j in fw.attack_pairs():
        lines.append(f"{i + 1} {j + 1}")
    return "\n".join(lines) + "\n"


_APX_ARG = re.compile(r"arg\(\s*([A-Za-z0-9_~-]+)\s*\)\.")
_APX_ATT = re.compile(r"att\(\s*([A-Za-z0-9_~-]+)\s*,\s*([A-Za-z0-9_~-]+)\s*\)\.")


def parse_apx(text):
    """'arg(name).' and 'att(x,y).' facts; attack endpoints must be declared first."""
    names = []
    seen = set()
    attacks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        pos = 0
        while pos < len(line):
            chunk = line[pos:].lstrip()
            if not chunk:
                break
            offset = len(line) - len(chunk) - pos
            m = _APX_ARG.match(chunk)
            if m:
                name = m.group(1)
                if name in seen:
                    raise ParseError(f"line {lineno}: duplicate arg {name!r}")
                seen.add(name)
                names.append(name)
                pos += offset + m.end()
                continue
            m = _APX_ATT.match(chunk)
            if m:
                x, y = m.group(1), m.group(2)
                for end in (x, y):
                    if end not in seen:
                        raise ParseError(f"line {lineno}: undeclared argument {end!r}")
                attacks.append((x, y))
                pos += offset + m.end()
                continue
            raise ParseError(f"line {lineno}: cannot parse {chunk!r}")
    idx = {name: i for i, name in enumerate(names)}
    return Framework(names, [(idx[x], idx[y]) for x, y in attacks])


def write_apx(fw):
    lines = [f"arg({name})." for name in fw.names]
    lines += [f"att({fw.names[i]},{fw.names[j]})." for i, j in fw.attack_pairs()]
    return "\n".join(lines) + "\n"


def sniff_format(text):
    stripped = text.lstrip()
    if stripped.startswith("p af") or stripped.startswith("#"):
        return "iccma"
    return "apx"


def parse_framework(text, fmt="auto"):
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "iccma":
        return parse_iccma(text)
    if fmt == "apx":
        return parse_apx(text)
    raise ParseError(f"unknown format {fmt!r}")


def write_dot(fw, highlights=()):
    """Deterministic DOT digraph; highlights is a list of (ArgSet, color)."""
    lines = ["digraph af {"]
    colors = {}
    for arg_set, color in highlights:
        for i in arg_set.indices():
            colors[i] = color
    for i in range(fw.n):
        attrs = [f'label="{fw.names[i]}"']
        if i in colors:
            attrs.append('style=filled')
            attrs.append(f'fillcolor="{colors[i]}"')
        lines.append(f'  n{i} [{", ".join(attrs)}];')
    for i, j in fw.attack_pairs():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class Fixture:
    name: str
    framework: Framework
    designated: int
    expected: dict = field(default_factory=dict)

    def designated_set(self):
        return ArgSet(self.framework, 1 << self.designated)

    @property
    def designated_label(self):
        return self.framework.names[self.designated]


def _fx(name, names, pairs, expected):
    fw = Framework.of(names, *pairs)
    return Fixture(name=name, framework=fw, designated=fw.index["a"], expected=expected)


def _mut(x, y):
    return [(x, y), (y, x)]


def _row(cog, cycog, wadm, wcomp, strong, ten, stat):
    return {"cogent": cog, "cycog": cycog, "wadm": wadm, "wcomp": wcomp,
            "strong-ten": strong, "ten": ten, "stat-ten": stat}


TABLE_FIXTURE_NAMES = ("F_1", "F_2", "F_3", "F_4", "F_5", "F_6", "F_7", "F_8")
TABLE_SEMANTICS = ("cogent", "cycog", "wadm", "wcomp", "strong-ten", "ten", "stat-ten")

ALIASES = {"E": "F_7", "D8": "F_8"}


def fixtures():
    """The full benchmark library. F_1..F_8 carry the complete seven-semantics
    expected rows; S, F, U, SIM and H_example carry the tenability-family
    values discussed alongside their figures."""
    out = [
        _fx("S", "a b", [("b", "a"), ("b", "b")],
            {"stat-ten": True, "ten": True, "strong-ten": True}),
        _fx("F", "a b1 b2",
            [("b1", "a"), ("b2", "a"), *_mut("b1", "b2")],
            {"stat-ten": False, "ten": False, "strong-ten": False}),
        _fx("U", "a b1 b2 c1 c2",
            [("b1", "a"), ("b2", "a"), *_mut("b1", "b2"),
             ("c1", "b1"), ("c2", "b2"), *_mut("c1", "c2")],
            {"stat-ten": True, "ten": True, "strong-ten": True}),
        _fx("SIM", "a b1 b2 c1 c2",
            [("b1", "a"), ("b2", "a"),
             ("c1", "b1"), ("c2", "b2"), *_mut("c1", "c2")],
            {"ten": False}),
        _fx("F_1", "a b", [("b", "a"), ("b", "b")],
            _row(True, True, True, True, True, True, True)),
        _fx("F_2", "a b1 b2",
            [("b1", "a"), ("b2", "a"), *_mut("b1", "b2")],
            _row(False, False, False, True, False, False, False)),
        _fx("F_3", "a b1 b2",
            [("b1", "a"), ("a", "b2"), ("b2", "b1")],
            _row(False, True, False, False, False, False, False)),
        # F_4: a's only cogent defense line (c counterattacking b) conflicts
        # with a itself, so the whole tenability family rejects a while weak
        # admissibility still accepts it (b, c, d form an odd cycle).
        _fx("F_4", "a b c d",
            [("b", "a"), ("c", "a"), ("c", "b"), ("d", "c"), ("b", "d")],
            _row(False, True, True, True, False, False, False)),
        _fx("F_5", "a b c d",
            [("b", "a"), ("c", "b"), ("d", "c"), ("b", "d"),
             ("c", "a"), ("d", "a")],
            _row(False, False, True, True, False, False, False)),
        _fx("F_6", "a b c d e",
            [("b", "a"), ("c", "a"), *_mut("b", "c"),
             ("d", "b"), ("e", "c"), *_mut("d", "e")],
            _row(False, False, False, True, True, True, True)),
        _fx("F_7", "a b1 b2 b3 c1 c2 c3 c4",
            [("b1", "a"), ("b2", "a"), ("b3", "a"), *_mut("b2", "b3"),
             ("c1", "b1"), ("c2", "b1"), ("c3", "b2"), ("c4", "b3"),
             *_mut("c1", "c4"), *_mut("c2", "c3")],
            _row(False, False, False, True, False, True, True)),
        _fx("F_8", "a b1 b2 b3 c1 c2 c3 c4 d",
            [("b1", "a"), ("b2", "a"), ("b3", "a"), *_mut("b2", "b3"),
             ("c1", "b1"), ("c2", "b1"), ("c3", "b2"), ("c4", "b3"),
             *_mut("c1", "c4"), *_mut("c2", "c3"),
             *_mut("d", "c1"), *_mut("d", "c2"), *_mut("d", "c3"), *_mut("d", "c4")],
            _row(False, False, False, True, False, False, True)),
        _h_example(),
    ]
    return out


def _h_example():
    from .qbf import QbfFormula, qbf_to_af, FORALL, EXISTS

    f = QbfFormula.of(
        [(FORALL, 1), (FORALL, 2), (EXISTS, 3)],
        [(1, -3), (-2, 3), (2,)])
    red = qbf_to_af(f)
    # the encoded formula is false (clause x2 fails at x2 = false), so the
    # whole tenability family rejects a
    return Fixture(name="H_example", framework=red.framework,
                   designated=red.designated,
                   expected={"stat-ten": False, "ten": False, "strong-ten": False})


def get_fixture(name):
    name = ALIASES.get(name, name)
    for fx in fixtures():
        if fx.name == name:
            return fx
    raise KeyError(f"unknown fixture: {name!r}")


def fixture_names():
    return [fx.name for fx in fixtures()] + sorted(ALIASES)
