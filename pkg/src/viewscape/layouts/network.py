"""Network view layouts: adjacency matrices, arc diagrams, node-link diagrams."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..core import Viewport
from ..data import Network

DEFAULT_MATRIX_GUTTER = 100.0  # px reserved for row/column labels
DEFAULT_ARC_GUTTER = 60.0  # px reserved for node labels
_NODE_RADIUS = 5.0


@dataclass(frozen=True)
class MatrixLayout:
    cell_size: float  # px, equals the label size
    order: tuple[str, ...]  # node ids, row/column order
    filled: tuple  # (row index, col index, weight)
    gutter: float


@dataclass(frozen=True)
class ArcLayout:
    pitch: float  # px between adjacent nodes, equals the label size
    nodes: tuple  # (id, x px)
    arcs: tuple  # (source index, target index, weight)
    gutter: float


@dataclass(frozen=True)
class NodeLinkLayout:
    nodes: tuple  # (id, x px, y px)
    links: tuple  # (source index, target index, weight)
    seed: int


def matrix_cell_size(n: Network, v: Viewport, label_gutter: float = DEFAULT_MATRIX_GUTTER) -> float:
    return (min(v.width, v.height) - label_gutter) / n.node_count


def matrix_layout(n: Network, v: Viewport, label_gutter: float = DEFAULT_MATRIX_GUTTER) -> MatrixLayout:
    """Square matrix using the smaller viewport dimension minus a label gutter."""
    if n.node_count < 1:
        raise ValueError("network has no nodes")
    cell = matrix_cell_size(n, v, label_gutter)
    order = tuple(nid for nid, _ in n.nodes)
    index = {nid: i for i, nid in enumerate(order)}
    filled = []
    for a, b, w in n.links:
        i, j = index[a], index[b]
        filled.append((i, j, w))
        filled.append((j, i, w))
    return MatrixLayout(cell_size=cell, order=order, filled=tuple(filled), gutter=label_gutter)


def arc_node_pitch(n: Network, v: Viewport, label_gutter: float = DEFAULT_ARC_GUTTER) -> float:
    return (v.width - label_gutter) / n.node_count


def arc_layout(n: Network, v: Viewport, label_gutter: float = DEFAULT_ARC_GUTTER) -> ArcLayout:
    """Nodes evenly spaced on a horizontal line; pitch is independent of height."""
    if n.node_count < 1:
        raise ValueError("network has no nodes")
    pitch = arc_node_pitch(n, v, label_gutter)
    index = {nid: i for i, (nid, _) in enumerate(n.nodes)}
    nodes = tuple((nid, label_gutter / 2.0 + (i + 0.5) * pitch)
                  for i, (nid, _) in enumerate(n.nodes))
    arcs = tuple((index[a], index[b], w) for a, b, w in n.links)
    return ArcLayout(pitch=pitch, nodes=nodes, arcs=arcs, gutter=label_gutter)


def node_link_layout(n: Network, v: Viewport, seed: int = 0,
                     iterations: int = 50) -> NodeLinkLayout:
    """Seeded force-directed layout scaled into the viewport and clamped."""
    if n.node_count < 1:
        raise ValueError("network has no nodes")
    g = nx.Graph()
    g.add_nodes_from(nid for nid, _ in n.nodes)
    g.add_weighted_edges_from(n.links)
    if g.number_of_nodes() == 1:
        pos = {next(iter(g.nodes)): (0.0, 0.0)}
    else:
        pos = nx.spring_layout(g, seed=seed, iterations=iterations)
    index = {nid: i for i, (nid, _) in enumerate(n.nodes)}
    margin = min(_NODE_RADIUS, v.width / 2.0, v.height / 2.0)
    half_w = v.width / 2.0 - margin
    half_h = v.height / 2.0 - margin
    nodes = []
    for nid, _ in n.nodes:
        x, y = pos[nid]
        # spring_layout output is centered in [-1, 1]
        px = v.width / 2.0 + x * half_w
        py = v.height / 2.0 + y * half_h
        px = min(max(px, margin), v.width - margin)
        py = min(max(py, margin), v.height - margin)
        nodes.append((nid, px, py))
    links = tuple((index[a], index[b], w) for a, b, w in n.links)
    return NodeLinkLayout(nodes=tuple(nodes), links=links, seed=seed)
