"""Graph serialization: edge list, DIMACS, DOT and JSON.

Writers are byte-exact: edges go out as ``u < v`` pairs in lexicographic
order with a trailing newline.  Readers accept what the writers produce plus
comments and blank lines where the format allows them.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .construction import LayeredWheel, VertexClass
from .graph import Graph

FORMATS = ("edgelist", "dimacs", "dot", "json")


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class Label:
    layer: int
    index: int
    cls: VertexClass


@dataclass(frozen=True)
class LoadedGraph:
    """A parsed graph; ``labels`` is only present for labelled JSON input."""

    graph: Graph
    labels: tuple[Label, ...] | None = None

    @property
    def classes(self) -> tuple[VertexClass, ...] | None:
        return None if self.labels is None else tuple(lab.cls for lab in self.labels)


def _sorted_edges(G: Graph) -> list[tuple[int, int]]:
    return sorted(G.edges())


def labels_of(lw: LayeredWheel) -> tuple[Label, ...]:
    return tuple(Label(lv.layer, lv.index, c) for lv, c in zip(lw.labels, lw.classes))


# -- writers ------------------------------------------------------------------


def to_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in _sorted_edges(G)]
    return "\n".join(lines) + "\n"


def to_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.m}"] + [f"e {u + 1} {v + 1}" for u, v in _sorted_edges(G)]
    return "\n".join(lines) + "\n"


def to_dot(G: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(G.n)]
    lines += [f"  {u} -- {v};" for u, v in _sorted_edges(G)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(G: Graph, labels=None) -> str:
    out = {"n": G.n, "edges": [[u, v] for u, v in _sorted_edges(G)]}
    if labels is not None:
        if len(labels) != G.n:
            raise FormatError(f"{len(labels)} labels for {G.n} vertices")
        out["labels"] = {
            str(v): {"layer": lab.layer, "index": lab.index, "class": lab.cls.value} for v, lab in enumerate(labels)
        }
    return json.dumps(out) + "\n"


def dump(G: Graph, fmt: str, labels=None) -> str:
    if fmt == "edgelist":
        return to_edgelist(G)
    if fmt == "dimacs":
        return to_dimacs(G)
    if fmt == "dot":
        return to_dot(G)
    if fmt == "json":
        return to_json(G, labels)
    raise FormatError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


# -- readers ------------------------------------------------------------------


def _int(tok: str, what: str, lineno: int) -> int:
    if not tok.isdigit():
        raise FormatError(f"line {lineno}: bad {what} {tok!r}")
    return int(tok)


def _build(n: int, edges: list[tuple[int, int]], m: int | None) -> Graph:
    seen = set()
    for u, v in edges:
        if u == v:
            raise FormatError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {u} {v} out of range for n={n}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise FormatError(f"duplicate edge {e[0]} {e[1]}")
        seen.add(e)
    if m is not None and m != len(edges):
        raise FormatError(f"header says {m} edges, found {len(edges)}")
    return Graph(n, edges)


def _content_lines(text: str, comment: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith(comment):
            yield lineno, line.split()


def parse_edgelist(text: str) -> Graph:
    lines = list(_content_lines(text, "#"))
    if not lines or len(lines[0][1]) != 2:
        raise FormatError("edge list must start with '<n> <m>'")
    lineno, (a, b) = lines[0]
    n, m = _int(a, "vertex count", lineno), _int(b, "edge count", lineno)
    edges = []
    for lineno, toks in lines[1:]:
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        edges.append((_int(toks[0], "vertex", lineno), _int(toks[1], "vertex", lineno)))
    return _build(n, edges, m)


def parse_dimacs(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, toks in _content_lines(text, "c"):
        if toks[0] == "p":
            if n is not None or len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: bad problem line")
            n, m = _int(toks[2], "vertex count", lineno), _int(toks[3], "edge count", lineno)
        elif toks[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(toks) != 3:
                raise FormatError(f"line {lineno}: expected 'e <i> <j>'")
            i, j = _int(toks[1], "vertex", lineno), _int(toks[2], "vertex", lineno)
            if i == 0 or j == 0:
                raise FormatError(f"line {lineno}: DIMACS ids are 1-based")
            edges.append((i - 1, j - 1))
        else:
            raise FormatError(f"line {lineno}: unknown record {toks[0]!r}")
    if n is None:
        raise FormatError("missing 'p edge' line")
    return _build(n, edges, m)


_DOT_HEAD = re.compile(r"^\s*(strict\s+)?graph\b[^{]*\{", re.S)
_DOT_EDGE = re.compile(r"^(\d+)\s*--\s*(\d+)$")
_DOT_NODE = re.compile(r"^(\d+)(\s*\[[^\]]*\])?$")


def parse_dot(text: str) -> Graph:
    head = _DOT_HEAD.match(text)
    if not head:
        raise FormatError("DOT input must be an undirected 'graph { ... }'")
    body = text[head.end() :]
    close = body.rfind("}")
    if close < 0 or body[close + 1 :].strip():
        raise FormatError("DOT graph is not closed by '}'")
    nodes, edges = set(), []
    for stmt in re.split(r"[;\n]", body[:close]):
        stmt = stmt.strip()
        if not stmt or stmt.startswith("//"):
            continue
        if e := _DOT_EDGE.match(stmt):
            u, v = int(e.group(1)), int(e.group(2))
            nodes.update((u, v))
            edges.append((u, v))
        elif node := _DOT_NODE.match(stmt):
            nodes.add(int(node.group(1)))
        else:
            raise FormatError(f"unsupported DOT statement {stmt!r}")
    n = max(nodes) + 1 if nodes else 0
    if nodes != set(range(n)):
        raise FormatError("DOT node ids must be exactly 0..n-1")
    return _build(n, edges, None)


def parse_json(text: str) -> LoadedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad JSON: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("n"), int) or not isinstance(data.get("edges"), list):
        raise FormatError("JSON graph needs integer 'n' and list 'edges'")
    n = data["n"]
    edges = []
    for e in data["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise FormatError(f"bad edge {e!r}")
        edges.append((e[0], e[1]))
    G = _build(n, edges, None)
    raw = data.get("labels")
    if raw is None:
        return LoadedGraph(G)
    if not isinstance(raw, dict) or set(raw) != {str(v) for v in range(n)}:
        raise FormatError("labels must cover every vertex id exactly once")
    labels = []
    for v in range(n):
        lab = raw[str(v)]
        try:
            labels.append(Label(int(lab["layer"]), int(lab["index"]), VertexClass(lab["class"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad label for vertex {v}: {exc}") from None
    return LoadedGraph(G, tuple(labels))


def sniff(text: str) -> str:
    head = text.lstrip()
    if head.startswith("{"):
        return "json"
    if _DOT_HEAD.match(text):
        return "dot"
    for line in head.splitlines():
        toks = line.split()
        if not toks or toks[0] == "c":
            continue
        return "dimacs" if toks[0] == "p" else "edgelist"
    return "edgelist"


def load(text: str, fmt: str | None = None) -> LoadedGraph:
    fmt = fmt or sniff(text)
    if fmt == "json":
        return parse_json(text)
    if fmt == "edgelist":
        return LoadedGraph(parse_edgelist(text))
    if fmt == "dimacs":
        return LoadedGraph(parse_dimacs(text))
    if fmt == "dot":
        return LoadedGraph(parse_dot(text))
    raise FormatError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
