"""Seeded random 2-vertex strongly biconnected benchmark instances.

Randomness comes from splitmix64 with pinned constants, so a given
(n, seed) pair yields the same graph, byte for byte, on any platform.
Construction draws distinct non-loop edges until min(3n, n(n-1)) exist,
then keeps adding one edge at a time until the graph satisfies the full
definition-level feasibility predicate.
"""

from dataclasses import dataclass

from .connectivity import _two_vsb_violation
from .graph import DiGraph, Edge, build

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


@dataclass(frozen=True, slots=True)
class RngState:
    """splitmix64 state; the output sequence is a pure function of it."""

    state: int


@dataclass(frozen=True, slots=True)
class GenConfig:
    n: int
    seed: int


def rng_next(s: RngState) -> tuple[RngState, int]:
    """One splitmix64 step: new state plus a 64-bit output."""
    state = (s.state + _GAMMA) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return RngState(state), z ^ (z >> 31)


def rng_below(s: RngState, k: int) -> tuple[RngState, int]:
    """Next value reduced modulo k (the slight modulo bias is accepted)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    s, value = rng_next(s)
    return s, value % k


def generate(cfg: GenConfig) -> DiGraph:
    """Random 2-vertex strongly biconnected graph for (cfg.n, cfg.seed).

    Requires n >= 4; the target property is unsatisfiable below that.
    Terminates because the complete bidirected graph qualifies.
    """
    n = cfg.n
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    rng = RngState(cfg.seed & _MASK)
    seen: set[Edge] = set()
    edges: list[Edge] = []

    def draw_new(rng: RngState) -> tuple[RngState, Edge]:
        while True:
            rng, u = rng_below(rng, n)
            rng, v = rng_below(rng, n)
            if u != v and (u, v) not in seen:
                return rng, (u, v)

    target = min(3 * n, n * (n - 1))
    while len(edges) < target:
        rng, e = draw_new(rng)
        seen.add(e)
        edges.append(e)
    g = build(n, edges)
    hint = 0
    while True:
        violation = _two_vsb_violation(g, hint)
        if violation is None:
            return g
        hint = violation if violation >= 0 else 0
        rng, e = draw_new(rng)
        seen.add(e)
        edges.append(e)
        g = build(n, edges)
