"""W-light constant-weight codes: constructions, verification, exact maxima.

A code C in S(n,w) is W-light when the subgraph of J(n,w) induced by C can
be oriented with every code vertex at outdegree <= W.  Edges leaving the
code never count against it, so only induced edges matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .johnson import (
    InducedSubgraph,
    JohnsonGraph,
    Orientation,
    ResourceLimitError,
    build_induced,
    eulerian_orientation,
    orientation_feasible,
)
from .words import Word, enumerate_words, rank

EXACT_SEARCH_LIMIT = 24


@dataclass(frozen=True, slots=True)
class LightCode:
    n: int
    w: int
    W: int
    words: tuple[Word, ...]
    witness: Orientation | None = None

    def __post_init__(self) -> None:
        if self.W < 0:
            raise ValueError("lightness parameter W must be nonnegative")
        seen = set()
        for word in self.words:
            if (word.n, word.w) != (self.n, self.w):
                raise ValueError(
                    f"word {word} has parameters ({word.n},{word.w}), "
                    f"expected ({self.n},{self.w})"
                )
            if word in seen:
                raise ValueError(f"duplicate code word {word}")
            seen.add(word)
        if self.witness is not None and self.witness.max_outdegree() > self.W:
            raise ValueError("witness orientation exceeds the lightness parameter")

    @property
    def size(self) -> int:
        return len(self.words)

    def induced_subgraph(self) -> InducedSubgraph:
        return build_induced(JohnsonGraph(self.n, self.w), self.words)


def verify_light(code: LightCode) -> tuple[bool, Orientation | None]:
    """Check W-lightness of the code's induced subgraph, via max-flow."""
    return orientation_feasible(code.induced_subgraph(), code.W)


def _with_euler_witness(n: int, w: int, W: int, words: list[Word]) -> LightCode:
    g = build_induced(JohnsonGraph(n, w), words)
    witness = eulerian_orientation(g)
    if witness.max_outdegree() > W:
        raise AssertionError(
            f"construction for (n={n}, w={w}, W={W}) produced outdegree "
            f"{witness.max_outdegree()}"
        )
    return LightCode(n, w, W, tuple(words), witness)


def construct_tournament(n: int, W: int) -> LightCode:
    """Weight-1 code of size min(2W+1, n); the induced graph is complete.

    A complete graph on at most 2W+1 vertices has max degree <= 2W, so its
    Eulerian orientation keeps every vertex at outdegree <= W.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    size = min(2 * W + 1, n)
    words = [Word.from_support(n, (i,)) for i in range(size)]
    return _with_euler_witness(n, 1, W, words)


def _shift_orbit(n: int, d: int) -> list[Word]:
    """Cyclic-shift orbit of the weight-2 word with support {0, d}."""
    size = n // 2 if 2 * d == n else n
    return [Word.from_support(n, (t, (t + d) % n)) for t in range(size)]


def construct_orbit(n: int, W: int) -> LightCode:
    """Weight-2 code of size min(floor((W+1)n/2), C(n,2)) from shift orbits.

    Full orbits add two ones per column of the codeword matrix and the
    half orbit (even n, distance n/2) adds one; columns are filled to W+1
    ones so the induced degree stays <= 2W.  When (W+1)n is odd no exact
    fill exists: floor(n/2) pairwise-disjoint words of the distance-1
    orbit top the stack instead, keeping every column at or below W+1.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    total = comb(n, 2)
    target = min((W + 1) * n // 2, total)
    if target == total:
        words = enumerate_words(n, 2)
    elif (W + 1) % 2 == 0:
        words = [wd for d in range(1, (W + 1) // 2 + 1) for wd in _shift_orbit(n, d)]
    elif n % 2 == 0:
        words = [wd for d in range(1, W // 2 + 1) for wd in _shift_orbit(n, d)]
        words += _shift_orbit(n, n // 2)
    else:
        words = [wd for d in range(2, W // 2 + 2) for wd in _shift_orbit(n, d)]
        matching = [Word.from_support(n, (2 * t, 2 * t + 1)) for t in range(n // 2)]
        words += matching[: target - len(words)]
    assert len(words) == target
    return _with_euler_witness(n, 2, W, words)


def tau(word: Word, W: int) -> int:
    """Position-weighted sum sum_i i*B_i (1-based) mod (n - 2W)."""
    modulus = word.n - 2 * W
    if modulus < 1:
        raise ValueError(f"modulus n - 2W = {modulus} must be positive")
    return sum(i + 1 for i in word.support()) % modulus


def tau_classes(n: int, w: int, W: int) -> list[list[Word]]:
    """Partition of S(n,w) by the tau residue; index = residue class."""
    modulus = n - 2 * W
    if modulus < 1:
        raise ValueError(f"modulus n - 2W = {modulus} must be positive")
    classes: list[list[Word]] = [[] for _ in range(modulus)]
    for word in enumerate_words(n, w):
        classes[tau(word, W)].append(word)
    return classes


def construct_graham_sloane(n: int, w: int, W: int) -> LightCode:
    """Largest tau residue class, oriented Eulerian-wise.

    Requires n >= 4W: inside one class, the only distance-2 moves are the
    2W disjoint transpositions with equal residue, so components are
    hypercubes of dimension <= 2W and the Eulerian orientation caps every
    outdegree at W.  Ties between classes go to the smallest residue.
    """
    if n < 4 * W:
        raise ValueError(f"Graham-Sloane construction needs n >= 4W, got n={n}, W={W}")
    if not 0 < w < n:
        raise ValueError(f"need 0 < w < n, got n={n}, w={w}")
    classes = tau_classes(n, w, W)
    best = max(range(len(classes)), key=lambda i: len(classes[i]))
    return _with_euler_witness(n, w, W, classes[best])


def best_construction(n: int, w: int, W: int) -> LightCode:
    """Largest code among the applicable constructions (at least a single word)."""
    candidates: list[LightCode] = []
    if w == 1:
        candidates.append(construct_tournament(n, W))
    if w == 2 and n >= 3:
        candidates.append(construct_orbit(n, W))
    if w in (n - 1, n - 2) and n - w in (1, 2):
        base = (
            construct_tournament(n, W) if n - w == 1 else construct_orbit(n, W)
        )
        flipped = tuple(word.complement() for word in base.words)
        g = build_induced(JohnsonGraph(n, w), flipped)
        witness = eulerian_orientation(g)
        candidates.append(LightCode(n, w, W, flipped, witness))
    if n >= 4 * W and comb(n, w) <= 10**5:
        candidates.append(construct_graham_sloane(n, w, W))
    if not candidates:
        candidates.append(LightCode(n, w, W, (enumerate_words(n, w)[0],), None))
    return max(candidates, key=lambda c: c.size)


def exact_L(n: int, w: int, W: int, return_code: bool = False):
    """Exact maximum size of a W-light (n,w) code, by branch and bound.

    Vertices are tried in decreasing residual-degree order; a branch dies
    when its chosen set fails the max-flow feasibility check, which
    subsumes the density condition |E(H)| <= W|H| on every subset.  The
    incumbent starts from the best closed-form construction.
    """
    if not 0 < w < n:
        raise ValueError(f"need 0 < w < n, got n={n}, w={w}")
    total = comb(n, w)
    if total > EXACT_SEARCH_LIMIT:
        raise ResourceLimitError(
            f"C({n},{w}) = {total} exceeds the exhaustive search limit "
            f"{EXACT_SEARCH_LIMIT}"
        )
    graph = JohnsonGraph(n, w)
    if W >= graph.degree:
        code = LightCode(n, w, W, tuple(enumerate_words(n, w)),
                         eulerian_orientation(graph.full_subgraph()))
        return (total, code) if return_code else total

    incumbent = best_construction(n, w, W)
    best_size = incumbent.size
    best_ranks = sorted(rank(word) for word in incumbent.words)

    adj = {r: set(graph.neighbor_ranks(r)) for r in range(total)}
    # Static order: repeatedly peel the max-degree vertex of the residual graph.
    order = []
    residual = {r: set(s) for r, s in adj.items()}
    while residual:
        v = max(residual, key=lambda r: (len(residual[r]), -r))
        order.append(v)
        for u in residual[v]:
            residual[u].discard(v)
        del residual[v]

    chosen: list[int] = []

    def feasible(ranks: list[int]) -> bool:
        rset = frozenset(ranks)
        edges = sorted(
            (a, b) for a in rset for b in adj[a] if b in rset and a < b
        )
        sub = InducedSubgraph(graph, rset, tuple(edges))
        return orientation_feasible(sub, W)[0]

    def extend(idx: int) -> None:
        nonlocal best_size, best_ranks
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_ranks = sorted(chosen)
        if idx == len(order) or len(chosen) + (len(order) - idx) <= best_size:
            return
        v = order[idx]
        chosen.append(v)
        if feasible(chosen):
            extend(idx + 1)
        chosen.pop()
        extend(idx + 1)

    extend(0)
    if not return_code:
        return best_size
    words = tuple(graph.word(r) for r in best_ranks)
    ok, witness = orientation_feasible(build_induced(graph, best_ranks), W)
    assert ok
    return best_size, LightCode(n, w, W, words, witness)
