"""Northwest ribbon decomposition of skew diagrams.

The ribbon index of a box is the length of the maximal diagonal run of
boxes reaching it from the northwest.  On a connected diagram this
reproduces the layers of the border traversal that starts in the lowest
leftmost box; on a disconnected one it is the union of the components'
layers.  Layer sizes are weakly decreasing; a violation is an internal
error, not an input error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition
from .skew import Box, SkewDiagram, skew_from_boxes


@dataclass(frozen=True)
class RibbonProfile:
    """Shape data of one northwest ribbon layer."""

    index: int
    size: int
    k: int
    arm: int
    leg: int


@dataclass(eq=False)
class RibbonLabeling:
    """Per-box northwest ribbon indices with derived layer data."""

    diagram: SkewDiagram
    labels: dict[Box, int]
    pi_nw: Partition
    profiles: tuple[RibbonProfile, ...]


def _component_count(boxes: set[tuple[int, int]]) -> int:
    remaining = set(boxes)
    count = 0
    while remaining:
        count += 1
        frontier = [remaining.pop()]
        while frontier:
            r, c = frontier.pop()
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    frontier.append(nb)
    return count


def nw_labeling(a: SkewDiagram) -> RibbonLabeling:
    """Label every box with its northwest ribbon index."""
    labels: dict[Box, int] = {}
    for box in a.boxes():
        labels[box] = labels.get(Box(box.row - 1, box.col - 1), 0) + 1
    nlevels = max(labels.values(), default=0)
    sizes = [0] * nlevels
    for v in labels.values():
        sizes[v - 1] += 1
    if any(sizes[i] < sizes[i + 1] for i in range(nlevels - 1)):
        raise AssertionError(f"northwest ribbon sizes are not weakly decreasing: {sizes}")
    profiles = []
    for level in range(1, nlevels + 1):
        level_boxes = {b for b, v in labels.items() if v == level}
        k = _component_count(level_boxes)
        ncols = len({c for _, c in level_boxes})
        nrows = len({r for r, _ in level_boxes})
        profile = RibbonProfile(
            index=level, size=len(level_boxes), k=k, arm=ncols - k, leg=nrows - k
        )
        if profile.size != profile.arm + profile.leg + profile.k:
            raise AssertionError(f"inconsistent ribbon layer {profile}")
        profiles.append(profile)
    return RibbonLabeling(a, labels, Partition(sizes), tuple(profiles))


def pi_nw(a: SkewDiagram) -> Partition:
    """Northwest ribbon length partition: the i-th part is the size of layer i."""
    return nw_labeling(a).pi_nw


def ribbon_profile(a: SkewDiagram, i: int) -> RibbonProfile:
    """Profile of the i-th layer (1-based)."""
    profiles = nw_labeling(a).profiles
    if not 1 <= i <= len(profiles):
        raise ValueError(f"ribbon index {i} out of range 1..{len(profiles)}")
    return profiles[i - 1]


def strip_nw_ribbons(a: SkewDiagram, t: int) -> SkewDiagram:
    """Remove the first t northwest ribbons and normalize what remains."""
    labeling = nw_labeling(a)
    if not 0 <= t <= len(labeling.profiles):
        raise ValueError(f"cannot strip {t} ribbons from {len(labeling.profiles)} layers")
    return skew_from_boxes(b for b, v in labeling.labels.items() if v > t)
