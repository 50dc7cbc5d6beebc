__all__ = ["_MixinSpaceGroup"]

from typing import Optional, Sequence

from ..models import Relation, SpaceGroupClassification
from ..spacegroup import classify
from ..utils.parser import parse_group
from . import BaseClass


class _MixinSpaceGroup(BaseClass):
    def space_groups(
        self, group: str, trace: bool = False, relations: Optional[Sequence[Relation]] = None
    ) -> SpaceGroupClassification:
        """Classify the space groups of a reflection point group.

        Parameters:
          group: "h4", "h3" or "i2:n".
          trace: keep the congruences contributed by each relation.
          relations: a subset of the Coxeter relations (default: all).
        """
        group = self.v(group=parse_group(group))
        return classify(group, trace=trace, relations=relations)
