"""Silent-transition closure of automata.

The closure of a node is the least set containing it and closed under
following silent edges to nodes of the automaton.  Closing an automaton
replaces every node by its closure, keeps only non-silent edges, and draws
X -a-> Y whenever some member of X has a non-silent a-edge whose
destination has closure Y.  Membership of a node in a closed node is then
a weak simulation witness between the automaton and its closure, checked
by check_tau_simulation.

Three routes to the closure sets coexist on purpose: tau_closure iterates
the monotone closure_step until it reaches its fixpoint, closure_bfs is an
independent breadth-first oracle, and the bulk pass behind closed_nodes and
closed_edges runs a worklist on integer-indexed nodes.  Tests pin their
agreement.
"""

from dataclasses import dataclass

from .ast import cached_hash, value_literal
from .automaton import SILENT, Automaton, Edge, Silent
from .zipper import Cursor, render_cursor, render_path


def node_key(n):
    """Canonical sort key: ints numerically, cursors by (path, flag)."""
    if isinstance(n, Cursor):
        return (render_path(n.loc.path), n.entering)
    if isinstance(n, NodeSet):
        return n.sort_key()
    return n


@cached_hash
@dataclass(frozen=True)
class NodeSet:
    """Duplicate-free, canonically ordered set of base nodes.

    The node type of closed automata.  Equality and hashing follow the
    member tuple, which is unique per set because of the canonical order.
    """
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "_set", frozenset(self.members))

    @classmethod
    def from_iter(cls, it) -> "NodeSet":
        return cls(tuple(sorted(set(it), key=node_key)))

    def __contains__(self, n):
        return n in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def sort_key(self):
        return tuple(node_key(m) for m in self.members)

    def render(self) -> str:
        parts = [render_cursor(m) if isinstance(m, Cursor) else str(m)
                 for m in self.members]
        return "{" + ", ".join(parts) + "}"


def action_key(a):
    if isinstance(a, Silent):
        return (0, "", "")
    return (1, a.name, value_literal(a.value))


def closure_step(aut: Automaton, seed, x) -> frozenset:
    """One expansion round: the seed, everything in x, and every automaton
    node reached from x by one silent edge.

    Monotone and extensive in x.  The seed is included even when it is not
    a node of the automaton; silently reached nodes must be.
    """
    nodes = set(aut.nodes)
    reached = {e.dest for e in aut.edges
               if e.action == SILENT and e.source in x and e.dest in nodes}
    return frozenset({seed} | set(x) | reached)


def tau_closure(aut: Automaton, seed) -> NodeSet:
    """Least fixpoint of closure_step, reached by iteration from the
    empty set."""
    x = frozenset()
    while True:
        y = closure_step(aut, seed, x)
        if y == x:
            return NodeSet.from_iter(x)
        x = y


def closure_bfs(aut: Automaton, seed) -> NodeSet:
    """Independent oracle for tau_closure: plain breadth-first reach over
    silent edges, restricted to automaton nodes."""
    nodes = set(aut.nodes)
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for cur in frontier:
            for e in aut.edges:
                if (e.source == cur and e.action == SILENT
                        and e.dest in nodes and e.dest not in seen):
                    seen.add(e.dest)
                    nxt.append(e.dest)
        frontier = nxt
    return NodeSet.from_iter(seen)


def _closure_table(aut: Automaton):
    """Silent reachability for every distinct node, on integer indices.

    Returns (index of first occurrence per node, distinct nodes in index
    order, closure of each distinct node as a frozenset of indices).
    """
    index = {}
    for n in aut.nodes:
        if n not in index:
            index[n] = len(index)
    distinct = list(index)
    succ = [[] for _ in distinct]
    for e in aut.edges:
        if e.action == SILENT:
            si = index.get(e.source)
            di = index.get(e.dest)
            if si is not None and di is not None:
                succ[si].append(di)
    closures = []
    for i in range(len(distinct)):
        seen = {i}
        stack = [i]
        while stack:
            j = stack.pop()
            for k in succ[j]:
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        closures.append(frozenset(seen))
    return index, distinct, closures


def closed_nodes(aut: Automaton) -> list:
    """Closure of every node, in node-list order."""
    index, distinct, closures = _closure_table(aut)
    cache = {}
    out = []
    for n in aut.nodes:
        ci = index[n]
        ns = cache.get(ci)
        if ns is None:
            ns = NodeSet.from_iter(distinct[j] for j in closures[ci])
            cache[ci] = ns
        out.append(ns)
    return out


def closed_init(aut: Automaton) -> NodeSet:
    """Closure of the initial node (which may sit outside the node list)."""
    index, distinct, closures = _closure_table(aut)
    ci = index.get(aut.init)
    if ci is None:
        return tau_closure(aut, aut.init)
    return NodeSet.from_iter(distinct[j] for j in closures[ci])


def edge_actions(aut: Automaton) -> list:
    """Actions in edge-list order, duplicates preserved."""
    return [e.action for e in aut.edges]


def closed_edges(aut: Automaton) -> list:
    """Non-silent edges of the closed automaton, deduplicated, in canonical
    order.

    X -a-> Y is kept iff some non-silent edge (s, a, d) of the automaton
    has s in X and closure(d) = Y.  Enumerating actual edges instead of the
    full (node, action, node) candidate product yields the same set: a
    candidate survives the definition's filter exactly when such a witness
    edge exists, and distinct nodes with equal closures collapse into one
    deduplicated edge.  Edges with an endpoint outside the node list are
    skipped, they cannot be witnessed (sources because closures only hold
    nodes, destinations because their closure contains a non-node).
    """
    index, distinct, closures = _closure_table(aut)
    ns_out = [[] for _ in distinct]
    for e in aut.edges:
        if e.action == SILENT:
            continue
        si = index.get(e.source)
        di = index.get(e.dest)
        if si is None or di is None:
            continue
        ns_out[si].append((e.action, di))
    found = set()
    for ci in range(len(distinct)):
        src = closures[ci]
        for m in src:
            for a, di in ns_out[m]:
                found.add((src, a, closures[di]))
    cache = {}

    def to_node_set(fs):
        ns = cache.get(fs)
        if ns is None:
            ns = NodeSet.from_iter(distinct[j] for j in fs)
            cache[fs] = ns
        return ns

    edges = [Edge(to_node_set(src), a, to_node_set(dst)) for src, a, dst in found]
    edges.sort(key=lambda e: (e.source.sort_key(), action_key(e.action),
                              e.dest.sort_key()))
    return edges


def close_automaton(aut: Automaton) -> Automaton:
    """The silent-free automaton over closures."""
    return Automaton(tuple(closed_nodes(aut)), tuple(closed_edges(aut)),
                     closed_init(aut))


@dataclass
class TauSimReport:
    """Outcome of the weak simulation witness check."""
    checked_pairs: int
    ok: bool
    violation: tuple | None = None  # (node, node set, Edge or None, reason)


def check_tau_simulation(m: Automaton, mc: Automaton) -> TauSimReport:
    """Check that membership witnesses a weak simulation of m by mc.

    mc must be close_automaton(m), verified structurally first.  The
    relation relates s to S iff s is a node of m, S a node of mc, and s is
    a member of S.  It must relate the initial nodes, and for every related
    pair and every m-edge from s: a silent edge's destination must stay
    related to S itself, a non-silent edge must be matched by an mc-edge
    from S with the same action whose destination relates to the
    destination node.
    """
    expected = close_automaton(m)
    if not (mc.nodes == expected.nodes and mc.edges == expected.edges
            and mc.init == expected.init):
        return TauSimReport(0, False, (None, None, None,
                                       "second automaton is not the closure of the first"))
    m_nodes = set(m.nodes)
    mc_nodes = set(mc.nodes)
    if not (m.init in m_nodes and mc.init in mc_nodes and m.init in mc.init):
        return TauSimReport(0, False, (m.init, mc.init, None,
                                       "initial nodes are not related"))
    m_out = {}
    for e in m.edges:
        m_out.setdefault(e.source, []).append(e)
    mc_out = {}
    for e in mc.edges:
        mc_out.setdefault(e.source, []).append(e)
    checked = 0
    for s2 in dict.fromkeys(mc.nodes):
        for s1 in s2:
            if s1 not in m_nodes:
                continue
            checked += 1
            for e in m_out.get(s1, []):
                if (e.action == SILENT and e.dest in m_nodes
                        and e.dest in s2):
                    continue
                if any(e2.action == e.action and e.dest in e2.dest
                       and e.dest in m_nodes
                       for e2 in mc_out.get(s2, [])):
                    continue
                return TauSimReport(checked, False, (s1, s2, e, "unmatched edge"))
    return TauSimReport(checked, True)
