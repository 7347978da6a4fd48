"""DAG representation, random DAG generators, and structural queries.

Two generator families are provided: Erdos-Renyi DAGs (independent edge
inclusion over a random total order) and scale-free DAGs (preferential
attachment, edges oriented from old to new vertices so acyclicity holds by
construction).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import ConfigurationError, StructuralError


class GraphType(Enum):
    ERDOS_RENYI = "erdos-renyi"
    SCALE_FREE = "scale-free"


class Dag:
    """A directed acyclic graph over vertices 0..num_vertices-1.

    Validated on construction: vertex indices in range, no self-loops, and
    no directed cycles. Instances are immutable and hashable.
    """

    __slots__ = ("num_vertices", "edges", "_parents", "_children")

    def __init__(self, num_vertices: int, edges: Iterable[tuple[int, int]] = ()):
        if num_vertices < 1:
            raise ConfigurationError(f"num_vertices must be positive, got {num_vertices}")
        edge_set = frozenset((int(u), int(v)) for u, v in edges)
        parents: list[list[int]] = [[] for _ in range(num_vertices)]
        children: list[list[int]] = [[] for _ in range(num_vertices)]
        for u, v in edge_set:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise StructuralError(f"edge ({u},{v}) out of range for {num_vertices} vertices")
            if u == v:
                raise StructuralError(f"self-loop at vertex {u}")
            parents[v].append(u)
            children[u].append(v)
        self.num_vertices = num_vertices
        self.edges = edge_set
        self._parents = tuple(tuple(sorted(p)) for p in parents)
        self._children = tuple(tuple(sorted(c)) for c in children)
        topological_order(self)  # raises StructuralError on a cycle

    def parents(self, v: int) -> tuple[int, ...]:
        return self._parents[v]

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.num_vertices, self.edges))

    def __repr__(self) -> str:
        return f"Dag(num_vertices={self.num_vertices}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class GraphSpec:
    """Parameters of a random-DAG family."""

    graph_type: GraphType
    num_vertices: int
    avg_degree: float

    def __post_init__(self):
        if self.num_vertices < 1:
            raise ConfigurationError(f"num_vertices must be positive, got {self.num_vertices}")
        if self.avg_degree < 0:
            raise ConfigurationError(f"avg_degree must be nonnegative, got {self.avg_degree}")
        # The bound keeps the Erdos-Renyi inclusion probability below 1; the
        # preferential-attachment generator only needs num_vertices > m and
        # legitimately runs at avg_degree = num_vertices - 1 (tiny graphs).
        if (
            self.graph_type is GraphType.ERDOS_RENYI
            and self.num_vertices > 1
            and self.avg_degree >= self.num_vertices - 1
        ):
            raise ConfigurationError(
                f"avg_degree {self.avg_degree} too large for {self.num_vertices} vertices"
            )


def topological_order(dag: Dag) -> list[int]:
    """Kahn's algorithm with lowest-index-first tie-breaking.

    Raises StructuralError if the edge set contains a directed cycle.
    """
    import heapq

    indegree = [len(dag._parents[v]) for v in range(dag.num_vertices)]
    ready = [v for v in range(dag.num_vertices) if indegree[v] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for c in dag._children[v]:
            indegree[c] -= 1
            if indegree[c] == 0:
                heapq.heappush(ready, c)
    if len(order) != dag.num_vertices:
        raise StructuralError("directed cycle detected")
    return order


def adjacency_pairs(dag: Dag) -> set[frozenset[int]]:
    """Unordered vertex pairs connected by an edge in either direction."""
    return {frozenset((u, v)) for u, v in dag.edges}


def all_pairs(num_vertices: int) -> list[tuple[int, int]]:
    """All C(v,2) unordered pairs as sorted tuples, in lexicographic order."""
    return [(u, v) for u in range(num_vertices) for v in range(u + 1, num_vertices)]


def generate_er_dag(spec: GraphSpec, rng: np.random.Generator) -> Dag:
    """Erdos-Renyi DAG: draw a uniform vertex order, then include each of the
    C(v,2) pairs independently with p = avg_degree/(v-1), oriented from the
    earlier to the later vertex in the order.
    """
    if spec.graph_type is not GraphType.ERDOS_RENYI:
        raise ConfigurationError(f"expected an Erdos-Renyi spec, got {spec.graph_type}")
    v = spec.num_vertices
    if v == 1:
        return Dag(1)
    p = spec.avg_degree / (v - 1)
    order = rng.permutation(v)
    edges = []
    # One Bernoulli draw per pair, pairs enumerated in a fixed order so the
    # output is a pure function of (spec, rng state).
    draws = rng.random(v * (v - 1) // 2)
    k = 0
    for i in range(v):
        for j in range(i + 1, v):
            if draws[k] < p:
                edges.append((int(order[i]), int(order[j])))
            k += 1
    return Dag(v, edges)


def generate_sf_dag(spec: GraphSpec, rng: np.random.Generator) -> Dag:
    """Scale-free DAG via preferential attachment.

    The first m = round(avg_degree/2) vertices form an edgeless seed. Each
    later vertex attaches to m distinct existing vertices drawn with
    probability proportional to (undirected degree + 1); edges point from
    the existing vertex to the new one, so the graph is acyclic by
    construction and has exactly (v - m) * m edges.
    """
    if spec.graph_type is not GraphType.SCALE_FREE:
        raise ConfigurationError(f"expected a scale-free spec, got {spec.graph_type}")
    v = spec.num_vertices
    m = int(round(spec.avg_degree / 2.0))
    if m < 1:
        raise ConfigurationError(f"avg_degree {spec.avg_degree} rounds to zero attachments")
    if v <= m:
        raise ConfigurationError(f"need more than {m} vertices, got {v}")
    degree = np.zeros(v, dtype=np.int64)
    edges: list[tuple[int, int]] = []
    for new in range(m, v):
        weights = (degree[:new] + 1).astype(np.float64)
        targets: list[int] = []
        for _ in range(m):
            w = weights / weights.sum()
            t = int(rng.choice(new, p=w))
            targets.append(t)
            weights[t] = 0.0  # distinctness; weights otherwise frozen for this vertex
        for t in targets:
            edges.append((t, new))
            degree[t] += 1
            degree[new] += 1
    return Dag(v, edges)


def generate_dag(spec: GraphSpec, rng: np.random.Generator) -> Dag:
    if spec.graph_type is GraphType.ERDOS_RENYI:
        return generate_er_dag(spec, rng)
    return generate_sf_dag(spec, rng)


def write_edge_list(dag: Dag, path: str | Path) -> None:
    """Plain-text format: header line ``vertices <v>`` then one
    ``parent child`` pair per line (sorted, for stable output)."""
    lines = [f"vertices {dag.num_vertices}"]
    lines.extend(f"{u} {v}" for u, v in sorted(dag.edges))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_edge_list(path: str | Path) -> Dag:
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("vertices "):
        raise ConfigurationError(f"{path}: expected a 'vertices <v>' header line")
    num_vertices = int(lines[0].split()[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ConfigurationError(f"{path}: malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Dag(num_vertices, edges)
