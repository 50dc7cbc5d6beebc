__all__ = ["_MixinRoots"]

import logging
import math
from collections import defaultdict
from typing import Optional

import numpy as np
from prettytable import PrettyTable

from ..exactfield import vdot
from ..models import DEFAULT_STYLES, CoxeterPairTable, LayerStyle, RootSystem
from ..rootsystems import (
    build_root_system,
    copy_ratios,
    coxeter_number,
    coxeter_projection,
    enumerate_coxeter_pairs,
    mirror_multiplets,
    projected_root_rings,
    projected_roots,
    quadratic_pair,
)
from ..svg import ring_layers, serialize_svg
from ..utils.validation import ValidationError
from . import BaseClass


class _MixinRoots(BaseClass):
    def coxeter_pairs(self, n_max: int = 30) -> CoxeterPairTable:
        """Every non-crystallographic I2(n) up to n_max with its partner, then H3 and H4.

        Parameters:
          n_max: largest n to examine (>= 5).
        """
        pairs = enumerate_coxeter_pairs(n_max)
        logging.info(f"{sum(1 for p in pairs if p.theta)} Coxeter pairs up to I2({n_max})")
        return CoxeterPairTable(pairs)

    def root_system(self, name: str) -> RootSystem:
        return build_root_system(name)

    def root_report(self, theta_par: str) -> str:
        """Rings of projected theta roots, the copies of the theta_par roots
        and the mirror multiplets of a quadratic pair, as a table."""
        pair = quadratic_pair(theta_par)
        proj = coxeter_projection(pair)
        theta = build_root_system(pair.theta)
        name = f"{theta_par}/{pair.theta}"
        t = PrettyTable()
        t.field_names = ["pair", "h", "|y|^2", "roots"]
        t.align = "l"
        for radius_sq, count in sorted(projected_root_rings(proj).items(), key=lambda kv: kv[0]):
            t.add_row([name, coxeter_number(theta), str(radius_sq), count])
        ratios = copy_ratios(proj)
        t.add_row([name, "", "copies", len(ratios)])
        for k, ratio in enumerate(ratios[1:], start=1):
            t.add_row([name, "", f"copy {k} / copy 0", ",".join(sorted(map(str, ratio)))])
        sizes = sorted({len(m) for m in mirror_multiplets(proj)})
        t.add_row([name, "", "mirror multiplets", ",".join(map(str, sizes))])
        return t.get_string()

    def root_svg(self, theta_par: str, styles: Optional[dict[str, LayerStyle]] = None) -> str:
        """SVG of the projected theta roots with one closed layer per ring,
        scaled so that the innermost ring has radius 1.

        Raises:
            ValidationError: the parallel space is not a plane.
        """
        proj = coxeter_projection(quadratic_pair(theta_par))
        if proj.d_par != 2:
            raise ValidationError(f"svg output needs a 2D parallel space, {theta_par} has {proj.d_par}")
        styles = styles or DEFAULT_STYLES
        rings: dict = defaultdict(list)
        for y in projected_roots(proj):
            rings[vdot(y, y, proj.metric)].append([float(yi) * math.sqrt(float(g)) for yi, g in zip(y, proj.metric)])
        inner = math.sqrt(float(min(rings)))
        points = [np.array(rings[r]) / inner for r in sorted(rings)]
        return serialize_svg(ring_layers(points, styles["roots"]))
