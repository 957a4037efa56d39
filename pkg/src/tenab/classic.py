"""Classical Dung notions: defense, admissibility, layered grounded extension."""

from __future__ import annotations

from dataclasses import dataclass

from .core import ArgSet, _bits


class ConflictError(ValueError):
    """Raised when a defense closure stops being conflict-free."""


@dataclass
class GroundedLayers:
    """G_0 = empty set, G_{n+1} = arguments defended by G_n, up to the fixpoint.

    entry_index maps each fixpoint member to the first layer containing it.
    """
    layers: list
    fixpoint: ArgSet
    entry_index: dict


def defends(fw, A, x):
    """True iff every attacker of x is attacked by A."""
    i = fw.resolve(x)
    return fw.attackers_of[i] & ~fw.plus_mask(A.mask) == 0


def _defended_mask(fw, mask):
    plus = fw.plus_mask(mask)
    out = 0
    for i in range(fw.n):
        if fw.attackers_of[i] & ~plus == 0:
            out |= 1 << i
    return out


def is_admissible(fw, A):
    """Conflict-free and defending each of its members."""
    if not fw.cf_mask(A.mask):
        return False
    return A.mask & ~_defended_mask(fw, A.mask) == 0


def grounded(fw):
    """Layered least fixpoint of the defense operator."""
    layers = [ArgSet(fw, 0)]
    entry = {}
    cur = 0
    while True:
        nxt = _defended_mask(fw, cur)
        if nxt == cur:
            break
        for i in _bits(nxt & ~cur):
            entry[i] = len(layers)
        layers.append(ArgSet(fw, nxt))
        cur = nxt
    return GroundedLayers(layers=layers, fixpoint=ArgSet(fw, cur), entry_index=entry)


def defense_closure(fw, A):
    """Least fixpoint of repeatedly adding everything the current set defends.

    Raises ConflictError if the closure ever stops being conflict-free
    (which signals the seed was not weakly admissible).
    """
    cur = A.mask
    if not fw.cf_mask(cur):
        raise ConflictError("seed set is not conflict-free")
    while True:
        nxt = cur | _defended_mask(fw, cur)
        if not fw.cf_mask(nxt):
            raise ConflictError("defense closure became conflicted")
        if nxt == cur:
            return ArgSet(fw, cur)
        cur = nxt
