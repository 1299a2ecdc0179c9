#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
交换图 Γ_G

顶点为 G \\ Z(G)，两顶点相邻当且仅当对应元素可交换。邻接矩阵按行位压缩存储。
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from .group_kernel import GroupTable, center, is_abelian
from .errors import AbelianGroupError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CommutingGraph:
    """交换图（不可变）"""
    parent: GroupTable = field(repr=False)
    vertices: np.ndarray      # 非中心元素下标，升序
    packed: np.ndarray        # np.packbits 压缩的邻接行
    edge_count: int

    @property
    def vertex_count(self) -> int:
        return int(self.vertices.size)

    def adjacency(self) -> np.ndarray:
        """解压为 V×V 布尔矩阵"""
        return np.unpackbits(self.packed, axis=1, count=self.vertex_count).astype(bool)

    def has_edge(self, u: int, v: int) -> bool:
        """u, v 为顶点位置（不是元素下标）"""
        return bool((self.packed[u, v >> 3] >> (7 - (v & 7))) & 1)

    def degrees(self) -> np.ndarray:
        return self.adjacency().sum(axis=1)

    def degree(self, v: int) -> int:
        return int(np.unpackbits(self.packed[v], count=self.vertex_count).sum())

    def element_of(self, v: int) -> int:
        return int(self.vertices[v])

    def vertex_label(self, v: int) -> str:
        x = self.element_of(v)
        return f"{x}:{self.parent.labels[x]}"


@dataclass(frozen=True)
class CliqueDecomposition:
    """图分解为互不相交的完全图"""
    clique_sizes: Tuple[int, ...]
    clique_assignment: Tuple[int, ...]   # 顶点位置 → 团编号

    @property
    def clique_count(self) -> int:
        return len(self.clique_sizes)

    def clique_members(self, clique_id: int) -> List[int]:
        return [v for v, c in enumerate(self.clique_assignment) if c == clique_id]

    def size_multiset(self) -> Tuple[int, ...]:
        return tuple(sorted(self.clique_sizes, reverse=True))


def build_commuting_graph(g: GroupTable) -> CommutingGraph:
    """
    构造 Γ_G

    Raises:
        AbelianGroupError: 交换群的顶点集为空，Γ_G 无定义
    """
    if is_abelian(g):
        raise AbelianGroupError(f"{g.name} 是交换群，交换图没有定义")
    vertices = np.flatnonzero(~center(g).flags)
    adj = g.commutes[np.ix_(vertices, vertices)].copy()
    np.fill_diagonal(adj, False)
    packed = np.packbits(adj, axis=1)
    vertices.setflags(write=False)
    packed.setflags(write=False)
    edge_count = int(np.count_nonzero(adj)) // 2
    logger.debug(f"Γ({g.name})：{vertices.size} 个顶点，{edge_count} 条边")
    return CommutingGraph(parent=g, vertices=vertices, packed=packed, edge_count=edge_count)


def clique_decomposition(cg: CommutingGraph) -> Optional[CliqueDecomposition]:
    """
    若每个连通分支都是完全图则返回分解，否则返回 None

    团编号按分支中最小顶点位置排序。
    """
    adj = cg.adjacency()
    graph = nx.from_numpy_array(adj)
    components = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])
    assignment = [0] * cg.vertex_count
    sizes = []
    for clique_id, comp in enumerate(components):
        s = len(comp)
        if np.count_nonzero(adj[np.ix_(comp, comp)]) != s * (s - 1):
            logger.debug(f"Γ({cg.parent.name}) 的分支（起点 {comp[0]}）不是完全图")
            return None
        for v in comp:
            assignment[v] = clique_id
        sizes.append(s)
    return CliqueDecomposition(clique_sizes=tuple(sizes), clique_assignment=tuple(assignment))


def assignment_adjacency(d: CliqueDecomposition) -> np.ndarray:
    """由团分配重建邻接矩阵"""
    a = np.asarray(d.clique_assignment)
    adj = a[:, None] == a[None, :]
    np.fill_diagonal(adj, False)
    return adj


def complement_edge_count(cg: CommutingGraph) -> int:
    v = cg.vertex_count
    return v * (v - 1) // 2 - cg.edge_count


def _edge_positions(cg: CommutingGraph) -> np.ndarray:
    return np.argwhere(np.triu(cg.adjacency(), 1))


def export_dot(cg: CommutingGraph, decomposition: Optional[CliqueDecomposition] = None) -> str:
    """
    导出确定性的 DOT 文本；存在团分解时每个团渲染为一个 cluster 子图
    """
    if decomposition is None:
        decomposition = clique_decomposition(cg)
    lines = [f'graph "{cg.parent.name}" {{', '  node [shape=circle];']
    if decomposition is not None:
        for clique_id, size in enumerate(decomposition.clique_sizes):
            members = ' '.join(f"v{cg.element_of(v)};" for v in decomposition.clique_members(clique_id))
            lines.append(f'  subgraph cluster_{clique_id} {{ label="K{size}"; {members} }}')
    for v in range(cg.vertex_count):
        lines.append(f'  v{cg.element_of(v)} [label="{cg.vertex_label(v)}"];')
    for u, v in _edge_positions(cg):
        lines.append(f"  v{cg.element_of(u)} -- v{cg.element_of(v)};")
    lines.append('}')
    return '\n'.join(lines) + '\n'


def graph_to_json(cg: CommutingGraph) -> Dict[str, Any]:
    """{vertices: [元素下标], edges: [[u, v], …]}，边按元素下标小者在前"""
    return {
        'vertices': [int(x) for x in cg.vertices],
        'edges': [[cg.element_of(u), cg.element_of(v)] for u, v in _edge_positions(cg)],
    }
