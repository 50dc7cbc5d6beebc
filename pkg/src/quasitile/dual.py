#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tilings dual to 2D Ammann patterns.

Every open cell of the plane arrangement becomes a tile vertex and every
arrangement vertex becomes a tile: the zonogon spanned by the star vectors
of the lines through it. Prototiles are then told apart by their shape, by
the refined Ammann segments they carry and by the refined tiling laid over
them.
"""
__all__ = [
    "cell_graph",
    "dualize",
    "shape_key",
    "decorate",
    "decoration_segments",
    "inflation_segments",
    "inflation_rules",
    "check_wall_to_wall",
    "halve_pattern",
    "vertex_position",
]

import logging
import math
from bisect import bisect_left
from collections import defaultdict
from dataclasses import replace
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

import networkx as nx

from .ammann import angle_key, intersections, planes_in_window, point_in_window, refine_pattern
from .exactfield import QuadNum, quad, vadd, vscale, vsub
from .models.pattern import AmmannPattern, GridPlane, Window
from .models.tiling import CellRecord, Face, Nu, PrototileClass, PrototileSet, Tiling, WallToWallReport

HALF = Fraction(1, 2)
# display units of slack around float bounding boxes
_SLACK = 1

Point = tuple[QuadNum, ...]


def _upper(v: Sequence[QuadNum]) -> bool:
    return v[1] > 0 or (v[1] == 0 and v[0] > 0)


def _cross(u: Sequence[QuadNum], v: Sequence[QuadNum]) -> QuadNum:
    return u[0] * v[1] - u[1] * v[0]


def _plane_table(pattern: AmmannPattern, planes: list[GridPlane]) -> dict[int, tuple[list[QuadNum], list[Fraction]]]:
    table: dict[int, tuple[list[QuadNum], list[Fraction]]] = {j: ([], []) for j in range(pattern.J)}
    for p in sorted(planes, key=lambda p: (p.j, p.n)):
        table[p.j][0].append(p.offset)
        table[p.j][1].append(p.n)
    return table


def _locate(pattern: AmmannPattern, table, j: int, y: Point) -> Optional[Fraction]:
    """nu_j of the cell holding y, or None on a plane or outside the table."""
    offsets, ns = table[j]
    t = pattern.offset(j, y)
    k = bisect_left(offsets, t)
    if k < len(offsets) and offsets[k] == t:
        return None
    if k == 0 or k == len(offsets):
        return None
    return ns[k - 1] + HALF


def vertex_position(pattern: AmmannPattern, nu: Nu) -> Point:
    """x' = -q0+ + (<m+>/Gamma) sum_j nu_j a_j+."""
    c = pattern.mean_step / pattern.gamma_total
    acc = tuple(-x for x in pattern.q0_plus)
    for nj, a in zip(nu, pattern.star.directions):
        acc = vadd(acc, vscale(c * nj, a))
    return acc


def _ring(pattern: AmmannPattern) -> dict[tuple[int, int], int]:
    """Index of +-a_j on the 2J-gon, counter-clockwise from the x axis."""
    vecs = [(a, j, 1) for j, a in enumerate(pattern.star.directions)]
    vecs += [(tuple(-x for x in a), j, -1) for j, a in enumerate(pattern.star.directions)]
    vecs.sort(key=cmp_to_key(lambda u, v: angle_key(u[0], v[0])))
    return {(j, s): i for i, (_, j, s) in enumerate(vecs)}


def _padding(pattern: AmmannPattern) -> Fraction:
    s = pattern.per_direction[0]
    return Fraction(math.ceil(3 * float(s.long / pattern.mean_step))) + 1


def _arrangement(pattern: AmmannPattern, window: Window) -> tuple[list[Face], dict[Nu, CellRecord], dict]:
    """Faces dual to the arrangement vertices of the padded window, the
    cells they touch and the sorted plane offsets per direction."""
    if pattern.star.dim != 2:
        raise ValueError("tilings are built from 2D Ammann patterns only")
    if pattern.halved:
        raise ValueError("halved patterns have no dual tiling")
    outer = window.padded(_padding(pattern))
    planes = planes_in_window(pattern, outer)
    table = _plane_table(pattern, planes)
    ring = _ring(pattern)
    dirs = pattern.star.directions
    faces: list[Face] = []
    cells: dict[Nu, CellRecord] = {}
    for point, lines in intersections(pattern, planes, outer).items():
        through = dict(lines)
        base = []
        for j in range(pattern.J):
            if j in through:
                base.append(through[j] - HALF)
                continue
            nu = _locate(pattern, table, j, point)
            if nu is None:
                break
            base.append(nu)
        else:
            edges = [(a, l, 1) for l, a in ((l, dirs[l]) for l in through)]
            edges += [(tuple(-x for x in dirs[l]), l, -1) for l in through]
            edges.sort(key=cmp_to_key(lambda u, v: angle_key(u[0], v[0])))
            current = list(base)
            for l in through:
                if not _upper(dirs[l]):
                    current[l] += 1
            corners = []
            for _, l, sign in edges:
                corners.append(tuple(current))
                current[l] += sign
            assert tuple(current) == corners[0], "zonogon walk does not close"
            faces.append(Face(tuple(corners), point, tuple(ring[(l, s)] for _, l, s in edges)))
            for nu in corners:
                rec = cells.setdefault(nu, CellRecord(nu, point))
                rec.corners.append(point)
    for rec in cells.values():
        if rec.interior_witness:
            n = len(rec.corners)
            acc = rec.corners[0]
            for c in rec.corners[1:]:
                acc = vadd(acc, c)
            rec.witness = tuple(x / n for x in acc)
    return faces, cells, table


def cell_graph(pattern: AmmannPattern, window: Window) -> tuple[nx.Graph, dict[Nu, CellRecord]]:
    """Cells of the arrangement reachable from the cell of the origin.

    Two cells are adjacent when they differ by one step in one coordinate,
    i.e. they share a wall. Node attribute "witness" holds a point of the cell.
    """
    return _reachable(pattern, *_arrangement(pattern, window))


def _reachable(pattern: AmmannPattern, faces, cells, table) -> tuple[nx.Graph, dict[Nu, CellRecord]]:
    graph = nx.Graph()
    for f in faces:
        nx.add_cycle(graph, f.cells)
    if graph.number_of_nodes() == 0:
        return graph, {}
    origin = tuple(quad(0, pattern.D) for _ in range(2))
    seed = tuple(_locate(pattern, table, j, origin) for j in range(pattern.J))
    if None in seed or seed not in graph:
        seed = min(graph.nodes)
    reachable = set(nx.bfs_tree(graph, seed))
    graph = graph.subgraph(reachable).copy()
    nx.set_node_attributes(graph, {nu: cells[nu].witness for nu in reachable}, "witness")
    logging.debug(f"cell graph: {graph.number_of_nodes()} cells, {graph.number_of_edges()} walls")
    return graph, {nu: cells[nu] for nu in reachable}


def dualize(pattern: AmmannPattern, window: Window) -> Tiling:
    """The tiling dual to the pattern; only tiles lying inside the window
    are returned."""
    faces, cells, table = _arrangement(pattern, window)
    _, cells = _reachable(pattern, faces, cells, table)
    vertices: dict[Nu, Point] = {}
    kept = []
    for f in faces:
        if not all(nu in cells for nu in f.cells):
            continue
        for nu in f.cells:
            if nu not in vertices:
                vertices[nu] = vertex_position(pattern, nu)
        if all(point_in_window(pattern, window, vertices[nu]) for nu in f.cells):
            kept.append(f)
    used = {nu for f in kept for nu in f.cells}
    c = pattern.mean_step / pattern.gamma_total
    spec = pattern.spec
    tiling = Tiling(
        vertices={nu: p for nu, p in vertices.items() if nu in used},
        faces=kept,
        gamma=pattern.gamma,
        mean_step=pattern.mean_step,
        edge_length_sq=c * c * pattern.star.norm_sq,
        meta={
            "symmetry": spec.symmetry or spec.pair.theta_par,
            "row": spec.qclass.row_id,
            "q0": [str(x) for x in spec.q0],
            "window": str(window),
            "D": pattern.D,
        },
    )
    logging.info(f"dual tiling: {len(kept)} tiles, {len(tiling.vertices)} vertices")
    return tiling


def _interior_angles(face: Face, J: int) -> list[int]:
    # angle at corner i, between edge i-1 and edge i, in units of pi/J
    d = face.edge_dirs
    return [J - ((d[i] - d[i - 1]) % (2 * J)) for i in range(len(d))]


def _anchors(face: Face, J: int, chiral: bool) -> tuple[tuple[int, ...], list[tuple[int, int]]]:
    angles = _interior_angles(face, J)
    n = len(angles)
    orients = (1,) if chiral else (1, -1)
    seqs = {(s, o): tuple(angles[(s + o * k) % n] for k in range(n)) for s in range(n) for o in orients}
    key = min(seqs.values())
    return key, [a for a, seq in seqs.items() if seq == key]


def shape_key(face: Face, J: int, chiral: bool = False) -> tuple[int, ...]:
    """Interior angles in units of pi/J from the least starting corner; the
    reversed cycle is considered too unless `chiral`."""
    return _anchors(face, J, chiral)[0]


def _frame(polygon: list[Point], anchor: tuple[int, int]):
    s, o = anchor
    n = len(polygon)
    origin = polygon[s]
    u = vsub(polygon[(s + o) % n], origin)
    v = vsub(polygon[(s - o) % n], origin)
    det = _cross(u, v)

    def local(p: Point) -> tuple[QuadNum, QuadNum]:
        w = vsub(p, origin)
        return (_cross(w, v) / det, _cross(u, w) / det)

    return local


def _clip(pattern: AmmannPattern, table, polygon: list[Point]) -> list[tuple[Point, Point]]:
    """Segments of the planes in `table` inside a convex polygon."""
    segments = []
    n = len(polygon)
    for j in range(pattern.J):
        tv = [pattern.offset(j, p) for p in polygon]
        offsets, _ = table[j]
        lo, hi = min(tv), max(tv)
        for s in offsets[bisect_left(offsets, lo) :]:
            if s > hi:
                break
            pts: list[Point] = []
            for i in range(n):
                ta, tb = tv[i], tv[(i + 1) % n]
                if ta == s:
                    pts.append(polygon[i])
                elif (ta - s) * (tb - s) < 0:
                    pts.append(vadd(polygon[i], vscale((s - ta) / (tb - ta), vsub(polygon[(i + 1) % n], polygon[i]))))
            pts = list(dict.fromkeys(pts))
            if len(pts) == 2:
                segments.append((pts[0], pts[1]))
    return segments


def _classes(keys: list[tuple], faces: list[Face]) -> dict[tuple, int]:
    ids = {k: i for i, k in enumerate(sorted(set(keys)))}
    for f, k in zip(faces, keys):
        f.class_id = ids[k]
    return ids


def decoration_segments(pattern: AmmannPattern, tiling: Tiling, window: Window) -> list[list[tuple[Point, Point]]]:
    """Planes of the refined pattern clipped to each tile, face by face."""
    refined = refine_pattern(pattern)
    table = _plane_table(refined, planes_in_window(refined, window.padded(_padding(pattern))))
    return [_clip(refined, table, tiling.polygon(f)) for f in tiling.faces]


def _signature(polygon: list[Point], face: Face, J: int, chiral: bool, segments) -> tuple:
    """(shape, segments in local coordinates), least over the symmetric
    starting corners."""
    shape, anchors = _anchors(face, J, chiral)
    best = None
    for anchor in anchors:
        local = _frame(polygon, anchor)
        sig = tuple(sorted(tuple(sorted((local(p), local(q)))) for p, q in segments))
        best = sig if best is None or sig < best else best
    return shape, best


def _decoration_keys(pattern: AmmannPattern, tiling: Tiling, window: Window, chiral: bool) -> list[tuple]:
    return [
        _signature(tiling.polygon(f), f, pattern.J, chiral, segments)
        for f, segments in zip(tiling.faces, decoration_segments(pattern, tiling, window))
    ]


def decorate(pattern: AmmannPattern, tiling: Tiling, window: Window, chiral: bool = False) -> PrototileSet:
    """Classify tiles by shape and by the refined Ammann segments they carry.

    Each face gets the `class_id` of its class. Segments are written in the
    affine frame of the first two edges at the least starting corner.
    """
    keys = _decoration_keys(pattern, tiling, window, chiral)
    ids = _classes(keys, tiling.faces)
    counts = defaultdict(int)
    for k in keys:
        counts[k] += 1
    classes = [PrototileClass(i, k[0], decoration=k[1], count=counts[k]) for k, i in ids.items()]
    classes.sort(key=lambda c: c.id)
    logging.info(f"{len(classes)} decorated prototiles")
    return PrototileSet(classes)


def _orientation(polygon: list[Point]) -> int:
    n = len(polygon)
    area = sum((_cross(polygon[i], polygon[(i + 1) % n]) for i in range(1, n)), _cross(polygon[0], polygon[1]))
    return 1 if area > 0 else -1


def _clip_segment(polygon: list[Point], sense: int, p: Point, q: Point, D: int) -> Optional[tuple[Point, Point, bool]]:
    """The part of pq inside a closed convex polygon and whether pq was cut
    short; None when the overlap has no length."""
    lo, hi = quad(0, D), quad(1, D)
    d = vsub(q, p)
    n = len(polygon)
    for i in range(n):
        edge = vsub(polygon[(i + 1) % n], polygon[i])
        # inside where f0 + t * df >= 0
        f0 = sense * _cross(edge, vsub(p, polygon[i]))
        df = sense * _cross(edge, d)
        if df == 0:
            if f0 < 0:
                return None
            continue
        t = -f0 / df
        if df > 0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
        if lo >= hi:
            return None
    return vadd(p, vscale(lo, d)), vadd(p, vscale(hi, d)), lo != 0 or hi != 1


def _cells_of(xs: Sequence[float], ys: Sequence[float]):
    for bx in range(math.floor(min(xs) - _SLACK), math.floor(max(xs) + _SLACK) + 1):
        for by in range(math.floor(min(ys) - _SLACK), math.floor(max(ys) + _SLACK) + 1):
            yield bx, by


def inflation_segments(
    pattern: AmmannPattern, tiling: Tiling, window: Window
) -> list[tuple[list[tuple[Point, Point]], bool]]:
    """Edges of the refined tiling clipped to each tile, face by face, and
    whether any of them crosses the tile boundary."""
    children = dualize(refine_pattern(pattern), window.padded(3))
    # float buckets only preselect candidates, the clipping is exact
    buckets: dict[tuple[int, int], list[tuple[Point, Point]]] = defaultdict(list)
    for a, b in sorted(children.edges):
        p, q = children.vertices[a], children.vertices[b]
        (x0, y0), (x1, y1) = pattern.display(p), pattern.display(q)
        for cell in _cells_of((x0, x1), (y0, y1)):
            buckets[cell].append((p, q))
    out = []
    for f in tiling.faces:
        polygon = tiling.polygon(f)
        sense = _orientation(polygon)
        shown = [pattern.display(p) for p in polygon]
        candidates: dict[tuple[Point, Point], None] = {}
        for cell in _cells_of([s[0] for s in shown], [s[1] for s in shown]):
            candidates.update(dict.fromkeys(buckets.get(cell, ())))
        segments, straddles = [], False
        for p, q in candidates:
            clipped = _clip_segment(polygon, sense, p, q, pattern.D)
            if clipped is not None:
                segments.append(clipped[:2])
                straddles = straddles or clipped[2]
        out.append((segments, straddles))
    return out


def inflation_rules(
    pattern: AmmannPattern,
    window: Window,
    tiling: Optional[Tiling] = None,
    chiral: bool = False,
) -> PrototileSet:
    """Classify tiles by the refined tiling laid over them and check that
    these classes match the decoration classes one to one.

    The patch of a tile is every edge of the refined tiling clipped to the
    tile, written in the frame its Ammann decoration uses. A class
    straddles when refined edges cross the boundary of its tiles.
    """
    tiling = tiling or dualize(pattern, window)
    dec_keys = _decoration_keys(pattern, tiling, window, chiral)
    keys, straddles = [], []
    for f, (segments, cut) in zip(tiling.faces, inflation_segments(pattern, tiling, window)):
        keys.append(_signature(tiling.polygon(f), f, pattern.J, chiral, segments))
        straddles.append(cut)
    dec_of: dict[tuple, set] = defaultdict(set)
    inf_of: dict[tuple, set] = defaultdict(set)
    for d, k in zip(dec_keys, keys):
        dec_of[k].add(d)
        inf_of[d].add(k)
    bijection = all(len(v) == 1 for v in dec_of.values()) and all(len(v) == 1 for v in inf_of.values())
    ids = _classes(keys, tiling.faces)
    classes = []
    for k, i in ids.items():
        members = [n for n, key in enumerate(keys) if key == k]
        classes.append(
            PrototileClass(
                i,
                k[0],
                decoration=dec_keys[members[0]][1],
                inflation_patch=k[1],
                count=len(members),
                straddles=any(straddles[n] for n in members),
            )
        )
    classes.sort(key=lambda c: c.id)
    logging.info(f"{len(classes)} inflation classes, bijection with decorations: {bijection}")
    return PrototileSet(classes, bijection)


def check_wall_to_wall(pattern: AmmannPattern, window: Window) -> WallToWallReport:
    """True when every plane of the pattern inside the window is also a plane
    of the pattern one inflation level denser."""
    refined = refine_pattern(pattern)
    dense = {(p.j, p.offset) for p in planes_in_window(refined, window.padded(1))}
    violations = [(p.j, p.n, p.offset) for p in planes_in_window(pattern, window) if (p.j, p.offset) not in dense]
    if violations:
        logging.debug(f"{len(violations)} planes not kept by refinement")
    return WallToWallReport(not violations, violations)


def halve_pattern(pattern: AmmannPattern) -> AmmannPattern:
    """Add a plane halfway between every pair of neighbouring planes."""
    return replace(pattern, halved=True)
