"""Global forcing number, anti-forcing numbers and compatible alternating sets.

Everything reduces to two exact searches over bit masks: a minimum hitting set
(gf hits every conformal cycle, af hits every M-alternating cycle outside M)
and a maximum clique in the compatibility relation between M-alternating cycles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .cycles import Cycle, alternating_cycle_masks, conformal_cycle_masks, cycle_masks
from .graph import Graph, bits
from .matching import (
    DEFAULT_MATCHING_CAP,
    NotMatchableError,
    is_matchable,
    perfect_matching_masks,
    require_perfect,
)


class InfeasibleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# minimum hitting set on bit masks

def _packing_bound(targets: list[int]) -> int:
    used = 0
    count = 0
    for t in sorted(targets, key=int.bit_count):
        if not t & used:
            used |= t
            count += 1
    return count


def _reduce(targets: list[int]) -> list[int]:
    """Drop duplicate targets and supersets of other targets."""
    uniq = sorted(set(targets), key=int.bit_count)
    kept: list[int] = []
    for t in uniq:
        if not any(k & t == k for k in kept):
            kept.append(t)
    return kept


def _search(targets: list[int], limit: int) -> int | None:
    """Size and mask of a minimum hitting set of size <= limit, else None."""
    best = [limit + 1, None]

    def rec(ts: list[int], depth: int, chosen: int) -> None:
        if not ts:
            if depth < best[0]:
                best[0], best[1] = depth, chosen
            return
        if depth + _packing_bound(ts) >= best[0]:
            return
        pivot = min(ts, key=int.bit_count)
        excluded = 0
        for e in bits(pivot):
            eb = 1 << e
            nxt = []
            dead = False
            for t in ts:
                if t & eb:
                    continue
                t &= ~excluded
                if not t:
                    dead = True
                    break
                nxt.append(t)
            if not dead:
                rec(_reduce(nxt) if len(nxt) > 8 else nxt, depth + 1, chosen | eb)
                if best[0] <= depth + 1:
                    return
            excluded |= eb

    rec(_reduce(targets), 0, 0)
    return best[1] if best[1] is not None else None


def min_hitting_mask(targets: Sequence[int], allowed: int | None = None) -> int:
    """Lexicographically least minimum hitting set of ``targets`` (bit-index order).

    ``allowed`` restricts the usable elements.  Raises InfeasibleError when
    some target has no usable element.
    """
    ts = list(targets)
    if allowed is not None:
        ts = [t & allowed for t in ts]
    if any(t == 0 for t in ts):
        raise InfeasibleError("a target set is empty")
    if not ts:
        return 0
    universe = 0
    for t in ts:
        universe |= t
    found = _search(ts, universe.bit_count())
    k = found.bit_count()
    # rebuild the lexicographically least optimum element by element
    chosen = 0
    remaining = ts
    last = -1
    for slot in range(k):
        for e in bits(universe & ~((1 << (last + 1)) - 1)):
            eb = 1 << e
            later = universe & ~((1 << (e + 1)) - 1)
            rest = [t & later for t in remaining if not t & eb]
            if any(t == 0 for t in rest):
                continue
            need = k - slot - 1
            if not rest:
                ok = True
            elif need == 0:
                ok = False
            else:
                ok = _search(rest, need) is not None
            if ok:
                chosen |= eb
                remaining = [t for t in remaining if not t & eb]
                last = e
                break
    return chosen


def min_hitting_size(targets: Sequence[int]) -> int:
    ts = list(targets)
    if any(t == 0 for t in ts):
        raise InfeasibleError("a target set is empty")
    if not ts:
        return 0
    universe = 0
    for t in ts:
        universe |= t
    return _search(ts, universe.bit_count()).bit_count()


def min_hitting_set(universe: Iterable[Hashable], targets: Iterable[Iterable[Hashable]]) -> frozenset:
    """Minimum-cardinality subset of ``universe`` meeting every target.

    Ties are broken towards the lexicographically least sorted selection.
    """
    elems = sorted(set(universe))
    pos = {x: i for i, x in enumerate(elems)}
    masks = []
    for t in targets:
        t = set(t)
        if not t:
            raise InfeasibleError("empty target cannot be hit")
        if not t <= pos.keys():
            raise ValueError("target contains elements outside the universe")
        m = 0
        for x in t:
            m |= 1 << pos[x]
        masks.append(m)
    chosen = min_hitting_mask(masks)
    return frozenset(elems[i] for i in bits(chosen))


# ---------------------------------------------------------------------------
# global forcing

def _require_matchable(G: Graph) -> None:
    if not is_matchable(G):
        raise NotMatchableError("graph has no perfect matching")


def is_global_forcing_set(G: Graph, S) -> bool:
    _require_matchable(G)
    smask = G.edge_mask(S)
    return all(em & smask for _, em, _ in conformal_cycle_masks(G))


def global_forcing_number(G: Graph) -> tuple[int, frozenset]:
    """gf(G) with the lexicographically least minimum global forcing set."""
    _require_matchable(G)
    targets = [em for _, em, _ in conformal_cycle_masks(G)]
    w = min_hitting_mask(targets)
    return w.bit_count(), G.edges_of(w)


def gf_value(G: Graph) -> int:
    _require_matchable(G)
    return min_hitting_size([em for _, em, _ in conformal_cycle_masks(G)])


# ---------------------------------------------------------------------------
# anti-forcing

def is_anti_forcing_set(G: Graph, M, S) -> bool:
    M = require_perfect(G, M)
    smask = G.edge_mask(S)
    mmask = G.edge_mask(M)
    if smask & mmask:
        raise ValueError("an anti-forcing set must avoid the matching")
    return all(em & smask for _, em, _ in alternating_cycle_masks(G, mmask))


def _af_targets(G: Graph, mmask: int, cycles=None) -> list[int]:
    if cycles is None:
        return [em & ~mmask for _, em, _ in alternating_cycle_masks(G, mmask)]
    from .cycles import _alternating_masks

    return [em & ~mmask for _, em, _ in _alternating_masks(G, mmask, cycles)]


def anti_forcing_number(G: Graph, M) -> tuple[int, frozenset]:
    """af(G, M) with its lexicographically least minimum anti-forcing set."""
    M = require_perfect(G, M)
    w = min_hitting_mask(_af_targets(G, G.edge_mask(M)))
    return w.bit_count(), G.edges_of(w)


def max_anti_forcing_number(G: Graph, cap: int = DEFAULT_MATCHING_CAP) -> tuple[int, frozenset, frozenset]:
    """Af(G), the first attaining perfect matching in enumeration order, and its witness."""
    _require_matchable(G)
    cycles = cycle_masks(G)
    best = -1
    best_m = 0
    for mmask in perfect_matching_masks(G, cap=cap):
        v = min_hitting_size(_af_targets(G, mmask, cycles))
        if v > best:
            best, best_m = v, mmask
    w = min_hitting_mask(_af_targets(G, best_m, cycles))
    return best, G.edges_of(best_m), G.edges_of(w)


def af_values(G: Graph, cap: int = DEFAULT_MATCHING_CAP) -> list[tuple[int, int]]:
    """``(matching mask, af)`` for every perfect matching, in enumeration order."""
    _require_matchable(G)
    cycles = cycle_masks(G)
    return [(m, min_hitting_size(_af_targets(G, m, cycles))) for m in perfect_matching_masks(G, cap=cap)]


def Af_value(G: Graph, cap: int = DEFAULT_MATCHING_CAP) -> int:
    return max(v for _, v in af_values(G, cap))


# ---------------------------------------------------------------------------
# compatible M-alternating sets

def _max_clique(n: int, nbr: list[int]) -> int:
    """Maximum clique (as a bit mask over 0..n-1) by branch and bound with colouring bounds."""
    best = [0]

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour) in increasing colour
        order = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~nbr[v] & ~low
                rest &= ~low
                order.append((v, colour))
        return order

    def expand(clique: int, size: int, cand: int) -> None:
        order = colour_bound(cand)
        for v, c in reversed(order):
            if size + c <= best[0].bit_count():
                return
            nc = clique | 1 << v
            sub = cand & nbr[v]
            if sub:
                expand(nc, size + 1, sub)
            elif size + 1 > best[0].bit_count():
                best[0] = nc
            cand &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    return best[0]


def compatible_alternating_number(G: Graph, M) -> tuple[int, list[Cycle]]:
    """c'(G, M): the largest set of M-alternating cycles pairwise sharing only M-edges."""
    M = require_perfect(G, M)
    mmask = G.edge_mask(M)
    cyc = alternating_cycle_masks(G, mmask)
    k = len(cyc)
    if k == 0:
        return 0, []
    nonm = [em & ~mmask for _, em, _ in cyc]
    nbr = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if not nonm[i] & nonm[j]:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    clique = _max_clique(k, nbr)
    chosen = [Cycle(cyc[i][2]) for i in bits(clique)]
    return len(chosen), sorted(chosen)


def is_compatible_set(G: Graph, M, cycles: Iterable[Cycle]) -> bool:
    M = require_perfect(G, M)
    cycles = list(cycles)
    for c in cycles:
        if not (len(c) % 2 == 0 and len(c.edges & M) * 2 == len(c) and c.edges <= G.edges):
            return False
    for i, a in enumerate(cycles):
        for b in cycles[i + 1:]:
            if (a.edges & b.edges) - M:
                return False
    return True


# ---------------------------------------------------------------------------

@dataclass
class ForcingReport:
    gf: int
    gf_witness: frozenset
    af_per_matching: dict = field(default_factory=dict)
    Af: int = 0
    Af_matching: frozenset = frozenset()
    Af_witness: frozenset = frozenset()
    c_prime: dict | None = None

    @property
    def pm_count(self) -> int:
        return len(self.af_per_matching)


def forcing_report(G: Graph, with_c_prime: bool = False, cap: int = DEFAULT_MATCHING_CAP) -> ForcingReport:
    gf, gw = global_forcing_number(G)
    cycles = cycle_masks(G)
    per = {}
    best = (-1, None, None)
    for mmask in perfect_matching_masks(G, cap=cap):
        w = min_hitting_mask(_af_targets(G, mmask, cycles))
        M = G.edges_of(mmask)
        per[M] = (w.bit_count(), G.edges_of(w))
        if w.bit_count() > best[0]:
            best = (w.bit_count(), M, G.edges_of(w))
    rep = ForcingReport(gf, gw, per, best[0], best[1], best[2])
    if with_c_prime:
        rep.c_prime = {M: compatible_alternating_number(G, M)[0] for M in per}
    return rep
