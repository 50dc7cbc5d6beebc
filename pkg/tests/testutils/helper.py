from typing import Iterable, Sequence

from src.quasitile.exactfield import QuadNum


def negated(points: Iterable[Sequence[QuadNum]]) -> set[tuple[QuadNum, ...]]:
    return {tuple(-x for x in p) for p in points}


def offsets_by_direction(planes) -> dict[int, set[QuadNum]]:
    out: dict[int, set[QuadNum]] = {}
    for p in planes:
        out.setdefault(p.j, set()).add(p.offset)
    return out


def star_edge_violations(pattern, tiling) -> list[tuple]:
    """Tile edges that are not c * (+-a_j) for the one j in which the cells
    of their ends differ, plus tiles that are not strictly convex."""
    c = pattern.mean_step / pattern.gamma_total
    bad = []
    for f in tiling.faces:
        ring = list(zip(f.cells, f.cells[1:] + f.cells[:1]))
        edges = []
        for a, b in ring:
            steps = [(j, y - x) for j, (x, y) in enumerate(zip(a, b)) if x != y]
            d = tuple(q - p for p, q in zip(tiling.vertices[a], tiling.vertices[b]))
            edges.append(d)
            if len(steps) != 1 or abs(steps[0][1]) != 1:
                bad.append((a, b))
                continue
            j, s = steps[0]
            if d != tuple(c * s * x for x in pattern.star.directions[j]):
                bad.append((a, b))
        turns = {(u[0] * v[1] - u[1] * v[0]).sign() for u, v in zip(edges, edges[1:] + edges[:1])}
        if turns not in ({1}, {-1}):
            bad.append(f.cells)
    return bad
