"""Serialization: automata and traces to JSON and DOT, and back for the
generic integer-noded automaton shape.

JSON node ids are positions in the node list, so exports are deterministic
and re-import as the position-renamed automaton.
"""

import json
from dataclasses import dataclass

from .ast import parse_value_literal, print_program, value_literal
from .automaton import (SILENT, AssignAction, Automaton, Edge, Silent,
                        render_action)
from .semantics import Trace
from .tauclose import NodeSet
from .zipper import Cursor, render_cursor, render_path


def to_json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def action_to_json(a) -> dict:
    if isinstance(a, Silent):
        return {"kind": "none"}
    if isinstance(a, AssignAction):
        return {"kind": "assign", "var": a.name, "val": value_literal(a.value)}
    raise TypeError(f"not an action: {a!r}")


def action_from_json(obj):
    kind = obj.get("kind") if isinstance(obj, dict) else None
    if kind == "none":
        return SILENT
    if kind == "assign":
        return AssignAction(obj["var"], parse_value_literal(obj["val"]))
    raise ValueError(f"bad action: {obj!r}")


def render_node(n) -> str:
    if isinstance(n, Cursor):
        return render_cursor(n)
    if isinstance(n, NodeSet):
        return n.render()
    return str(n)


def _node_ids(aut: Automaton) -> dict:
    ids = {}
    for n in aut.nodes:
        if n not in ids:
            ids[n] = len(ids)
    return ids


def program_automaton_json(aut: Automaton) -> dict:
    """JSON shape for a cursor-noded automaton."""
    ids = _node_ids(aut)
    nodes = [{"id": i, "path": render_path(n.loc.path), "flag": n.entering,
              "focus": print_program(n.loc.focus)}
             for n, i in ids.items()]
    edges = [{"source": ids[e.source], "action": action_to_json(e.action),
              "dest": ids[e.dest]}
             for e in aut.edges]
    return {"nodes": nodes, "edges": edges, "init": ids[aut.init]}


def closed_automaton_json(base: Automaton, closed: Automaton) -> dict:
    """JSON shape for a closed automaton; members are base node ids."""
    base_ids = _node_ids(base)
    ids = _node_ids(closed)
    nodes = [{"id": i, "members": sorted(base_ids[m] for m in n.members)}
             for n, i in ids.items()]
    edges = [{"source": ids[e.source], "action": action_to_json(e.action),
              "dest": ids[e.dest]}
             for e in closed.edges]
    return {"nodes": nodes, "edges": edges, "init": ids[closed.init]}


def generic_automaton_json(aut: Automaton) -> dict:
    """JSON shape for an automaton over plain (typically int) nodes."""
    ids = _node_ids(aut)
    nodes = [{"id": i, "label": render_node(n)} for n, i in ids.items()]
    edges = [{"source": ids[e.source], "action": action_to_json(e.action),
              "dest": ids[e.dest]}
             for e in aut.edges]
    return {"nodes": nodes, "edges": edges, "init": ids[aut.init]}


def load_automaton(data: dict) -> Automaton:
    """Automaton from the generic JSON shape.

    Nodes may be bare values or objects with an "id"; edges reference
    those ids.  Raises ValueError on anything malformed.
    """
    if not isinstance(data, dict):
        raise ValueError("automaton JSON must be an object")
    raw_nodes = data.get("nodes")
    raw_edges = data.get("edges")
    if not isinstance(raw_nodes, list) or not isinstance(raw_edges, list):
        raise ValueError("automaton JSON needs node and edge lists")
    if "init" not in data:
        raise ValueError("automaton JSON needs an init node")
    nodes = []
    for item in raw_nodes:
        if isinstance(item, dict):
            if "id" not in item:
                raise ValueError(f"node object without id: {item!r}")
            nodes.append(item["id"])
        else:
            nodes.append(item)
    edges = []
    for item in raw_edges:
        try:
            edges.append(Edge(item["source"], action_from_json(item["action"]),
                              item["dest"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad edge: {item!r}") from exc
    return Automaton(tuple(nodes), tuple(edges), data["init"])


@dataclass
class NumberedAutomaton:
    """An automaton renamed to integer ids plus a legend of the originals."""
    automaton: Automaton
    legend: dict


def rename_nodes(aut: Automaton) -> NumberedAutomaton:
    """Rename nodes to their positions in the node list."""
    ids = _node_ids(aut)
    edges = tuple(Edge(ids[e.source], e.action, ids[e.dest]) for e in aut.edges)
    renamed = Automaton(tuple(ids.values()), edges, ids[aut.init])
    legend = {i: render_node(n) for n, i in ids.items()}
    return NumberedAutomaton(renamed, legend)


def numbered_automaton_json(numbered: NumberedAutomaton) -> dict:
    """JSON shape for a renamed automaton, labels from the legend."""
    aut = numbered.automaton
    nodes = [{"id": i, "label": numbered.legend[i]} for i in aut.nodes]
    edges = [{"source": e.source, "action": action_to_json(e.action),
              "dest": e.dest}
             for e in aut.edges]
    return {"nodes": nodes, "edges": edges, "init": aut.init}


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def automaton_dot(aut: Automaton, labels: dict | None = None) -> str:
    """DOT digraph; node names are positional, labels default to the node
    rendering.  The initial node is marked by a point-shaped source."""
    ids = _node_ids(aut)
    lines = ["digraph automaton {", "  rankdir=LR;", "  __init [shape=point];"]
    for n, i in ids.items():
        label = labels[n] if labels is not None else render_node(n)
        lines.append(f"  n{i} [label={_quote(label)}];")
    lines.append(f"  __init -> n{ids[aut.init]};")
    for e in aut.edges:
        lines.append(f"  n{ids[e.source]} -> n{ids[e.dest]}"
                     f" [label={_quote(render_action(e.action))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def closed_labels(base: Automaton, closed: Automaton) -> dict:
    """DOT labels for closed nodes: member sets of base node ids."""
    base_ids = _node_ids(base)
    return {n: "{" + ",".join(str(j) for j in sorted(base_ids[m] for m in n.members)) + "}"
            for n in dict.fromkeys(closed.nodes)}


def state_json(s: dict) -> dict:
    return {k: value_literal(s[k]) for k in sorted(s)}


def render_state(s: dict) -> str:
    return "{" + ", ".join(f"{k}={value_literal(s[k])}" for k in sorted(s)) + "}"


def _trace_rows(trace: Trace):
    yield 0, "init", trace.start
    for i, (cfg, rule) in enumerate(trace.steps, start=1):
        yield i, rule, cfg


def trace_json(trace: Trace) -> list:
    return [{"step": i, "rule": rule,
             "path": render_path(cfg.cursor.loc.path),
             "flag": cfg.cursor.entering,
             "state": state_json(cfg.state)}
            for i, rule, cfg in _trace_rows(trace)]


def trace_text(trace: Trace) -> str:
    lines = []
    for i, rule, cfg in _trace_rows(trace):
        arrow = "↓" if cfg.cursor.entering else "↑"
        lines.append(f"{i}: {rule} | {arrow}{print_program(cfg.cursor.loc.focus)}"
                     f" @ {render_path(cfg.cursor.loc.path)}"
                     f" | {render_state(cfg.state)}")
    return "\n".join(lines) + "\n"
