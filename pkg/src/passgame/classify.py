"""Exhaustive certification of one-move and SG-decreasing positions."""
from __future__ import annotations

from dataclasses import dataclass

from .chocolate import Choco2
from .core import PositionKey, Ruleset, SGCache, all_followers, sg
from .games import Nim

ONE_MOVE = "one_move"
SG_DECREASING = "sg_decreasing"

_certs: dict[tuple[str, PositionKey], "Certificate"] = {}


@dataclass(frozen=True)
class Certificate:
    kind: str
    position: PositionKey
    verdict: bool
    witness: tuple[PositionKey, ...] | None = None

    def __post_init__(self) -> None:
        if not self.verdict and not self.witness:
            raise ValueError("a negative certificate needs a witness")


def is_one_move(r: Ruleset, g: PositionKey, cache: SGCache | None = None) -> Certificate:
    """Every follower with SG value 0 must be terminal."""
    hit = _certs.get((ONE_MOVE, g))
    if hit is not None:
        return hit
    cache = SGCache() if cache is None else cache
    cert = Certificate(ONE_MOVE, g, True)
    for f in all_followers(r, g):
        if sg(r, f, cache) == 0 and not r.is_terminal(f):
            cert = Certificate(ONE_MOVE, g, False, (f,))
            break
    _certs[(ONE_MOVE, g)] = cert
    return cert


def is_sg_decreasing(r: Ruleset, g: PositionKey, cache: SGCache | None = None) -> Certificate:
    """Every follower must have a larger SG value than each of its options.

    Followers are scanned breadth-first and options in descending payload
    order, so the reported witness is deterministic.
    """
    hit = _certs.get((SG_DECREASING, g))
    if hit is not None:
        return hit
    cache = SGCache() if cache is None else cache
    cert = Certificate(SG_DECREASING, g, True)
    for f in all_followers(r, g):
        v = sg(r, f, cache)
        bad = [o for o in r.options(f) if sg(r, o, cache) >= v]
        if bad:
            cert = Certificate(SG_DECREASING, g, False, (f, max(bad, key=lambda k: k.payload)))
            break
    _certs[(SG_DECREASING, g)] = cert
    return cert


def recheck(cert: Certificate, r: Ruleset, cache: SGCache | None = None) -> bool:
    """True if a negative certificate's witness really violates its definition."""
    if cert.verdict:
        return False
    cache = SGCache() if cache is None else cache
    if cert.kind == ONE_MOVE:
        (f,) = cert.witness
        return sg(r, f, cache) == 0 and not r.is_terminal(f)
    f, o = cert.witness
    return o in r.options(f) and sg(r, f, cache) <= sg(r, o, cache)


def known_one_move(r: Ruleset) -> bool:
    """Analytic certificate: nim piles and CB2 with a proven NS shape are one-move."""
    return isinstance(r, Nim) or (isinstance(r, Choco2) and r.h.kind in ("floor-div", "log-step"))


def clear_certificates() -> None:
    _certs.clear()
