"""Minimal circuits of the move graph G(n, k) and the circuit triangulation.

Nodes of G(n, k) are 0/1 vectors with k ones; an edge labelled i moves the
1 in position i to the empty position i+1 (cyclically).  A minimal circuit
has length n, its labels form a permutation, and its vertices span a
unimodular (n-1)-simplex.  Circuits are stored rotated so the last label is
n, together with their vertex cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .facets import UnsupportedParameters, window
from .stable import LatticePoint, ParameterError, vector_is_r_stable


def move(v: Sequence[int], i: int) -> LatticePoint | None:
    """Move the 1 at position i (1-based) one step right, or None if the move is illegal."""
    n = len(v)
    j = i % n  # 0-based index of position i+1
    if v[i - 1] != 1 or v[j] != 0:
        return None
    w = list(v)
    w[i - 1], w[j] = 0, 1
    return tuple(w)


@dataclass(frozen=True)
class CircuitGraph:
    n: int
    k: int
    nodes: tuple[LatticePoint, ...]
    edges: dict  # node -> tuple of (label, target)

    def out_degree(self, node: LatticePoint) -> int:
        return len(self.edges[node])


def all_k_vectors(n: int, k: int) -> list[LatticePoint]:
    out = []
    for combo in combinations(range(n), k):
        v = [0] * n
        for c in combo:
            v[c] = 1
        out.append(tuple(v))
    return sorted(out, reverse=True)


def build_circuit_graph(n: int, k: int) -> CircuitGraph:
    if not 0 < k < n:
        raise ParameterError(f"need 0 < k < n, got n={n}, k={k}")
    nodes = tuple(all_k_vectors(n, k))
    edges = {}
    for v in nodes:
        out = []
        for i in range(1, n + 1):
            w = move(v, i)
            if w is not None:
                out.append((i, w))
        edges[v] = tuple(out)
    return CircuitGraph(n, k, nodes, edges)


@dataclass(frozen=True, order=True)
class MinimalCircuit:
    """A minimal circuit: ``vertices[i]`` goes to ``vertices[i+1]`` by moving label ``word[i]``."""

    word: tuple[int, ...]
    vertices: tuple[LatticePoint, ...]

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def k(self) -> int:
        return sum(self.vertices[0])

    def vertex_set(self) -> frozenset[LatticePoint]:
        return frozenset(self.vertices)

    def is_r_stable(self, r: int) -> bool:
        return all(vector_is_r_stable(v, r) for v in self.vertices)

    def to_dict(self) -> dict:
        return {"word": list(self.word), "vertices": [list(v) for v in self.vertices]}


def canonical_circuit(start: LatticePoint, labels: Sequence[int]) -> MinimalCircuit:
    """Walk ``labels`` from ``start``, check the walk closes up, and rotate so the last label is n."""
    n = len(start)
    if sorted(labels) != list(range(1, n + 1)):
        raise ValueError(f"labels {list(labels)} are not a permutation of 1..{n}")
    verts = [tuple(start)]
    for lab in labels:
        nxt = move(verts[-1], lab)
        if nxt is None:
            raise ValueError(f"illegal move {lab} from {verts[-1]}")
        verts.append(nxt)
    if verts[-1] != verts[0]:
        raise ValueError("walk does not close into a circuit")
    verts.pop()
    j = list(labels).index(n)
    rot = (j + 1) % n
    return MinimalCircuit(tuple(labels[rot:]) + tuple(labels[:rot]), tuple(verts[rot:] + verts[:rot]))


def enumerate_minimal_circuits(n: int, k: int) -> list[MinimalCircuit]:
    """All minimal circuits of G(n, k), sorted by word.

    Every circuit uses label n exactly once, so it is found exactly once by a
    depth-first search started at the vertex just after that move (those
    with x_1 = 1, x_n = 0) using labels 1..n-1 without repetition.
    """
    if not 0 < k < n:
        raise ParameterError(f"need 0 < k < n, got n={n}, k={k}")
    out: list[MinimalCircuit] = []
    for start in all_k_vectors(n, k):
        if start[0] != 1 or start[-1] != 0:
            continue
        path_v = [start]
        path_l: list[int] = []
        used = [False] * (n + 1)

        def dfs() -> None:
            v = path_v[-1]
            if len(path_l) == n - 1:
                if move(v, n) == start:
                    out.append(MinimalCircuit(tuple(path_l) + (n,), tuple(path_v)))
                return
            for i in range(1, n):
                if used[i]:
                    continue
                w = move(v, i)
                if w is None:
                    continue
                used[i] = True
                path_v.append(w)
                path_l.append(i)
                dfs()
                path_l.pop()
                path_v.pop()
                used[i] = False

        dfs()
    return sorted(out)


def restrict_to_stable(circuits: Iterable[MinimalCircuit], r: int) -> list[MinimalCircuit]:
    """Circuits whose vertices are all r-stable: the maximal cells of the restricted triangulation."""
    return [c for c in circuits if c.is_r_stable(r)]


def is_minimal_circuit(c: MinimalCircuit) -> bool:
    try:
        return canonical_circuit(c.vertices[0], c.word) == c
    except ValueError:
        return False


# --- explicit constructions -------------------------------------------------


def _run_pattern(n: int, ones: dict[int, int], pattern: Sequence[int]) -> MinimalCircuit:
    """Move the labelled ones (``ones[s]`` is the 1-based position of 1_s) in the given order."""
    v = [0] * n
    for pos in ones.values():
        v[pos - 1] = 1
    start = tuple(v)
    pos = dict(ones)
    labels = []
    for s in pattern:
        labels.append(pos[s])
        pos[s] = pos[s] % n + 1
    return canonical_circuit(start, labels)


def _mod1(x: int, n: int) -> int:
    return (x - 1) % n + 1


def construct_circuit_hl(n: int, k: int, ell: int) -> MinimalCircuit:
    """Circuit whose simplex has a facet on ``x_ell = 0``, for r = floor(n/k) - 1.

    Starts from the ones at ``(ell-1) - (s-1)*r``; moves 1_1 once, then r
    sweeps of 1_1, ..., 1_k, then 1_1 alone until the circuit closes.
    """
    if not 1 < k < n - 1 or n // k < 2:
        raise UnsupportedParameters(f"need 1 < k < n-1 and floor(n/k) >= 2, got n={n}, k={k}")
    if not 1 <= ell <= n:
        raise ParameterError(f"ell must lie in [1, {n}], got {ell}")
    r = n // k - 1
    ones = {s: _mod1(ell - 1 - (s - 1) * r, n) for s in range(1, k + 1)}
    pattern = [1] + list(range(1, k + 1)) * r + [1] * (n - 1 - r * k)
    return _run_pattern(n, ones, pattern)


def construct_circuit_window(n: int, k: int, r: int, ell: int) -> MinimalCircuit:
    """r-stable circuit whose simplex has a facet on the window ``x_ell + ... + x_{ell+r-1} = 1``.

    Starts from the ones at ``(ell-1) + (s-1)*r``; r sweeps of 1_k, ..., 1_1,
    then 1_k alone until the circuit closes.
    """
    if r <= 1 or not (r < n // k or n == k * r + 1):
        raise UnsupportedParameters(f"need 1 < r < floor(n/k) or n = k*r + 1, got n={n}, k={k}, r={r}")
    if not 1 <= ell <= n:
        raise ParameterError(f"ell must lie in [1, {n}], got {ell}")
    ones = {s: _mod1(ell - 1 + (s - 1) * r, n) for s in range(1, k + 1)}
    pattern = list(range(k, 0, -1)) * r + [k] * (n - k * r)
    return _run_pattern(n, ones, pattern)


def window_sum(v: Sequence[int], ell: int, width: int) -> int:
    return sum(v[i - 1] for i in window(len(v), ell, width))


# --- pairs of ones and r-supporting pairs ------------------------------------

R_STABLE = "r-stable"
ALMOST_STABLE = "(r-1)-stable, not r-stable"
NEITHER = "neither"


@dataclass(frozen=True)
class OnesPair:
    """Cyclically consecutive ones at positions i then j with ``separation`` zeros between."""

    i: int
    j: int
    separation: int
    stability: str


def classify_pairs(v: Sequence[int], r: int) -> list[OnesPair]:
    n = len(v)
    ones = [i + 1 for i, x in enumerate(v) if x]
    if len(ones) < 2:
        return []
    out = []
    for a, b in zip(ones, ones[1:] + ones[:1]):
        sep = (b - a - 1) % n
        if sep >= r - 1:
            cls = R_STABLE
        elif sep == r - 2:
            cls = ALMOST_STABLE
        else:
            cls = NEITHER
        out.append(OnesPair(a, b, sep, cls))
    return out


@dataclass(frozen=True)
class SupportingPair:
    u: MinimalCircuit
    omega: MinimalCircuit
    key_vertex: LatticePoint
    ell: int
    flat_is_window: bool


def find_r_supporting_pairs(n: int, k: int, r: int, circuits: list[MinimalCircuit] | None = None) -> list[SupportingPair]:
    """All r-supporting pairs (u, omega), with the window start read off the key vertex.

    ``u`` is r-stable, ``omega`` is (r-1)-stable with exactly one vertex (the
    key vertex) that is not r-stable, and the two differ only in that vertex.
    """
    if not 1 < r <= n // k:
        raise ParameterError(f"need 1 < r <= floor(n/k), got n={n}, k={k}, r={r}")
    if circuits is None:
        circuits = enumerate_minimal_circuits(n, k)
    upper = restrict_to_stable(circuits, r - 1)
    stable_r = [c for c in upper if c.is_r_stable(r)]
    by_facet: dict[frozenset, list[MinimalCircuit]] = {}
    for u in stable_r:
        vs = u.vertex_set()
        for x in vs:
            by_facet.setdefault(vs - {x}, []).append(u)

    out = []
    for omega in upper:
        bad = [v for v in omega.vertices if not vector_is_r_stable(v, r)]
        if len(bad) != 1:
            continue
        key = bad[0]
        shared = omega.vertex_set() - {key}
        for u in by_facet.get(shared, []):
            almost = [p for p in classify_pairs(key, r) if p.stability == ALMOST_STABLE]
            ell = almost[0].i if len(almost) == 1 else 0
            on_window = ell > 0 and all(window_sum(v, ell, r) == 1 for v in shared)
            out.append(SupportingPair(u, omega, key, ell, on_window))
    out.sort(key=lambda p: (p.u.word, p.omega.word))
    return out


# --- unimodularity and barycentric membership ---------------------------------


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(size - 1):
        if m[c][c] == 0:
            swap = next((i for i in range(c + 1, size) if m[i][c]), None)
            if swap is None:
                return 0
            m[c], m[swap] = m[swap], m[c]
            sign = -sign
        for i in range(c + 1, size):
            for j in range(c + 1, size):
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) // prev
        prev = m[c][c]
    return sign * m[-1][-1]


def simplex_determinant(c: MinimalCircuit) -> int:
    """Determinant of the vertex differences after dropping the last coordinate."""
    base = c.vertices[0]
    rows = [tuple(a - b for a, b in zip(v, base))[:-1] for v in c.vertices[1:]]
    return integer_determinant(rows)


def barycentric(c: MinimalCircuit, x: Sequence[int]) -> list[Fraction] | None:
    """Barycentric coordinates of x in the simplex of c (x must lie in sum = k*t for a dilate)."""
    n = c.n
    # solve sum_j lam_j v_j = x over the first n-1 coordinates plus sum lam_j = scale
    scale = Fraction(sum(x), c.k)
    rows = [[Fraction(v[i]) for v in c.vertices] + [Fraction(x[i])] for i in range(n - 1)]
    rows.append([Fraction(1)] * n + [scale])
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [a / p for a in rows[col]]
        for i in range(n):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return [rows[i][n] for i in range(n)]
