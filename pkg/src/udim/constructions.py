"""Constructive certificates for the upper bounds on dim and pd.

Every construction assembles a concrete resolving set or ordered partition
from the structural decomposition of a unicyclic graph, then verifies it
through the independent distance checkers.  A failed verification is
reported in the certificate (with a twin pair), never silently accepted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graphs import (
    DistanceMatrix,
    SpanningTree,
    UnicyclicGraph,
    all_pairs_distances,
)
from .invariants import (
    kappa_tau,
    pendant_vertices,
    rho,
    support_leaf_groups,
    terminal_profiles,
    xi_theta,
    epsilon,
)
from .resolve import (
    OrderedPartition,
    check_resolving_partition,
    check_resolving_set,
    partition_dimension_exact,
)


@dataclass(frozen=True)
class CertifiedConstruction:
    """A constructed resolving object together with its verification outcome.

    ``verified`` is True only when the checker accepted the object and its
    size does not exceed the claimed bound.  ``witness`` carries the twin
    pair on checker failure.
    """

    name: str
    payload: OrderedPartition | frozenset[int]
    claimed_bound: int
    verified: bool
    witness: tuple[int, int] | None = None

    @property
    def kind(self) -> str:
        return "partition" if isinstance(self.payload, OrderedPartition) else "set"

    @property
    def size(self) -> int:
        if isinstance(self.payload, OrderedPartition):
            return self.payload.t
        return len(self.payload)

    def to_json(self) -> dict:
        if isinstance(self.payload, OrderedPartition):
            obj = self.payload.to_lists()
        else:
            obj = sorted(self.payload)
        return {
            "name": self.name,
            "kind": self.kind,
            "object": obj,
            "size": self.size,
            "claimed_bound": self.claimed_bound,
            "verified": self.verified,
            "witness": list(self.witness) if self.witness else None,
        }


def _certify_set(
    name: str, dm: DistanceMatrix, vertices: frozenset[int], bound: int
) -> CertifiedConstruction:
    w = check_resolving_set(dm, vertices)
    return CertifiedConstruction(
        name=name,
        payload=vertices,
        claimed_bound=bound,
        verified=w.resolving and len(vertices) <= bound,
        witness=w.twins,
    )


def _certify_partition(
    name: str, dm: DistanceMatrix, parts: list[set[int]], bound: int
) -> CertifiedConstruction:
    partition = OrderedPartition(parts=tuple(frozenset(p) for p in parts if p))
    w = check_resolving_partition(dm, partition)
    return CertifiedConstruction(
        name=name,
        payload=partition,
        claimed_bound=bound,
        verified=w.resolving and partition.t <= bound,
        witness=w.twins,
    )


def pendant_resolving_set(u: UnicyclicGraph) -> CertifiedConstruction:
    """Resolving set of size n1 - rho when every cycle vertex has degree >= 3.

    The set keeps all pendants except, for each support with several
    pendants, the largest-labeled one.
    """
    g = u.graph
    for c in u.cycle:
        if g.degree(c) < 3:
            raise PreconditionError(
                f"cycle vertex {c} has degree {g.degree(c)}; "
                "every cycle vertex must have degree greater than two"
            )
    pendants = pendant_vertices(g)
    dropped: set[int] = set()
    for v in range(g.n):
        mine = sorted(w for w in g.adjacency[v] if w in pendants)
        if len(mine) >= 2:
            dropped.add(mine[-1])
    chosen = frozenset(pendants - dropped)
    bound = len(pendants) - rho(g)
    return _certify_set("pendant-set", all_pairs_distances(g), chosen, bound)


def cycle_partition(u: UnicyclicGraph) -> CertifiedConstruction:
    """A 3-part resolving partition of a cycle graph.

    Uses {c0}, the arc c1..c(n//2), and the remaining arc; if the checker
    ever rejected it, the exact solver's optimum would be returned instead.
    """
    if not u.is_cycle_graph():
        raise PreconditionError("graph is not a cycle")
    cyc = u.cycle
    n = len(cyc)
    parts = [
        {cyc[0]},
        set(cyc[1 : n // 2 + 1]),
        set(cyc[n // 2 + 1 :]),
    ]
    dm = all_pairs_distances(u.graph)
    cert = _certify_partition("cycle-partition", dm, parts, 3)
    if cert.verified:
        return cert
    _, witness = partition_dimension_exact(dm)
    return _certify_partition("cycle-partition", dm, [set(p) for p in witness.parts], 3)


def _branch_sets(g, cycle_order: list[int]) -> list[set[int]]:
    """Per cycle position, the vertex together with its pendant-path branch.

    Only valid when every exterior major vertex lies on the cycle with degree
    three and terminal degree one; raises PreconditionError otherwise.
    """
    profiles = {p.major: p for p in terminal_profiles(g)}
    exterior = [p for p in profiles.values() if p.terminal_degree >= 1]
    if not exterior:
        raise PreconditionError("graph has no exterior major vertex")
    cycle_set = set(cycle_order)
    for p in profiles.values():
        if p.terminal_degree != 1:
            raise PreconditionError(
                f"major vertex {p.major} has terminal degree {p.terminal_degree}; "
                "every exterior major vertex must have terminal degree one"
            )
        if p.major not in cycle_set or g.degree(p.major) != 3:
            raise PreconditionError(
                f"major vertex {p.major} must lie on the cycle with degree three"
            )
    sets = []
    for c in cycle_order:
        if c in profiles:
            sets.append({c} | set(profiles[c].paths[0]))
        else:
            sets.append({c})
    covered = set().union(*sets)
    if covered != set(range(g.n)):
        raise PreconditionError("branch decomposition does not cover the graph")
    return sets


def unit_terminal_partition(u: UnicyclicGraph) -> CertifiedConstruction:
    """A 3-part resolving partition when every exterior major has one terminal.

    The cycle is re-anchored at the smallest-labeled exterior major, oriented
    toward its smaller cycle neighbour; the branch sets W_i (a cycle vertex
    plus its pendant path) are then grouped according to the parity of the
    cycle length.
    """
    g = u.graph
    profiles = [p for p in terminal_profiles(g) if p.terminal_degree >= 1]
    if not profiles:
        raise PreconditionError("graph has no exterior major vertex")
    anchor = min(p.major for p in profiles)
    cyc = list(u.cycle)
    i = cyc.index(anchor)
    cyc = cyc[i:] + cyc[:i]
    if cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    w = _branch_sets(g, cyc)
    k = len(cyc)
    if k % 2 == 0:
        half = k // 2
        parts = [w[0], w[half] | w[half + 1], set()]
        parts[2] = set(range(g.n)) - parts[0] - parts[1]
    elif k == 3:
        parts = [w[0], w[1], w[2]]
    else:
        b1 = w[0] | w[1]
        b2 = w[k // 2] | w[k // 2 + 1]
        parts = [b1, b2, set(range(g.n)) - b1 - b2]
    return _certify_partition(
        "unit-terminal", all_pairs_distances(g), parts, 3
    )


def kappa_tau_partition(u: UnicyclicGraph) -> CertifiedConstruction:
    """A resolving partition of at most kappa + tau + 1 parts.

    Requires at least one exterior major vertex of terminal degree greater
    than one.  The parts are: a single cycle vertex v next to the cycle
    vertex nearest the smallest such major; the rest of the cycle; the first
    branch of each such major; the j-th branches pooled for j = 2..tau-1;
    and the remainder.
    """
    g = u.graph
    profiles = [p for p in terminal_profiles(g) if p.terminal_degree >= 2]
    if not profiles:
        raise PreconditionError(
            "graph has no exterior major vertex of terminal degree greater than one"
        )
    kappa, tau = kappa_tau(g)
    dm = all_pairs_distances(g)
    s_l = profiles[0].major
    near = min(u.cycle, key=lambda c: (dm[c][s_l], c))
    v = min(c for c in g.adjacency[near] if c in set(u.cycle))
    part_a = {v}
    part_b = set(u.cycle) - {v}
    firsts = [set(p.paths[0]) for p in profiles]
    pooled = []
    for j in range(2, tau):
        pool = set()
        for p in profiles:
            if p.terminal_degree >= j:
                pool.update(p.paths[j - 1])
        pooled.append(pool)
    assigned = part_a | part_b
    for s in firsts + pooled:
        assigned |= s
    remainder = set(range(g.n)) - assigned
    parts = [part_a, part_b, *firsts, *pooled, remainder]
    return _certify_partition("kappa-tau", dm, parts, kappa + tau + 1)


def xi_theta_partition(u: UnicyclicGraph) -> CertifiedConstruction:
    """A resolving partition of at most xi(T) + theta(T) parts, T the epsilon tree.

    Supports of T are enumerated by label and their adjacent leaves by label;
    the first leaf of each support becomes its own part, the j-th leaves are
    pooled for j = 2..theta, and everything else forms one part.  The result
    is verified against distances in the unicyclic graph, not the tree.
    """
    if u.is_cycle_graph():
        raise PreconditionError("graph is a cycle; the bound needs a branch vertex")
    g = u.graph
    _, tree = epsilon(u)
    a, b = tree.deleted_edge
    if g.degree(a) < 3 and g.degree(b) < 3:
        raise PreconditionError(
            "both endpoints of the deleted edge have degree two in the graph"
        )
    groups = support_leaf_groups(tree.graph)
    supports = sorted(groups)
    xi, theta = xi_theta(tree.graph)
    firsts = [{groups[s][0]} for s in supports]
    pooled = []
    for j in range(2, theta + 1):
        pool = {groups[s][j - 1] for s in supports if len(groups[s]) >= j}
        pooled.append(pool)
    assigned: set[int] = set()
    for s in firsts + pooled:
        assigned |= s
    rest = set(range(g.n)) - assigned
    parts = [rest, *firsts, *pooled]
    return _certify_partition("xi-theta", all_pairs_distances(g), parts, xi + theta)


def lift_tree_partition(
    u: UnicyclicGraph, pi_t: OrderedPartition, tree: SpanningTree
) -> CertifiedConstruction:
    """Lift a resolving partition of a spanning tree back to the unicyclic graph.

    With the deleted edge relabeled c0c1 and D = {c0, c1, c(k//2)}, the lifted
    partition keeps every nonempty part minus D and adds the members of D as
    singletons; its size is at most |pi_t| + 3 (possibly less).
    """
    if tree.parent != u:
        raise PreconditionError("spanning tree does not belong to this graph")
    if tree.deleted_edge not in u.cycle_edge_set:
        raise PreconditionError(
            f"deleted edge {tree.deleted_edge} is not a cycle edge"
        )
    tree_check = check_resolving_partition(all_pairs_distances(tree.graph), pi_t)
    if not tree_check.resolving:
        raise PreconditionError(
            f"partition does not resolve the spanning tree; twins {tree_check.twins}"
        )
    a, b = tree.deleted_edge
    cyc = list(u.cycle)
    i = cyc.index(a)
    cyc = cyc[i:] + cyc[:i]
    if cyc[1] != b:
        cyc = [cyc[0]] + cyc[:0:-1]
    k = len(cyc)
    anchors: list[int] = []
    for c in (cyc[0], cyc[1], cyc[k // 2]):
        if c not in anchors:
            anchors.append(c)
    anchor_set = set(anchors)
    parts = [set(p) - anchor_set for p in pi_t.parts]
    parts = [p for p in parts if p]
    parts.extend({c} for c in anchors)
    return _certify_partition(
        "lift", all_pairs_distances(u.graph), parts, pi_t.t + 3
    )
