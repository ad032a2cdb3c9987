"""Exact efficient sets for small instances by exhaustive partition enumeration."""

from __future__ import annotations

from fractions import Fraction

from .model import Bin, Instance, ObjectiveVector, Solution, dominates

DEFAULT_MAX_ITEMS = 10


def exact_pareto(
    instance: Instance, max_items: int = DEFAULT_MAX_ITEMS
) -> list[tuple[ObjectiveVector, Solution]]:
    """Every efficient objective vector, each with one witness packing.

    Enumerates set partitions of the items in restricted-growth order (each
    item joins an existing block or opens the next one, so bin symmetry never
    produces duplicates), pruning any block that would exceed capacity. Meant
    as ground truth for tests; cost grows like the Bell numbers, hence the
    item cap. Results are sorted by ascending bin count.
    """
    n = instance.n
    if n > max_items:
        raise ValueError(
            f"instance has {n} items; exact enumeration is capped at {max_items}"
        )
    weights = [item.weight for item in instance.items]
    attributes = [item.attribute for item in instance.items]
    capacity = instance.capacity

    front: list[tuple[ObjectiveVector, list[list[int]]]] = []
    blocks: list[list[int]] = []
    loads: list[int] = []

    def consider() -> None:
        used = len(blocks)
        mixing = sum(len({attributes[i] for i in block}) for block in blocks)
        vector = ObjectiveVector(used, Fraction(mixing, used))
        for incumbent, _ in front:
            if incumbent == vector or dominates(incumbent, vector):
                return
        front[:] = [(v, b) for v, b in front if not dominates(vector, v)]
        front.append((vector, [list(block) for block in blocks]))

    def extend(j: int) -> None:
        if j == n:
            consider()
            return
        weight = weights[j]
        for b in range(len(blocks)):
            if loads[b] + weight <= capacity:
                blocks[b].append(j)
                loads[b] += weight
                extend(j + 1)
                blocks[b].pop()
                loads[b] -= weight
        blocks.append([j])
        loads.append(weight)
        extend(j + 1)
        blocks.pop()
        loads.pop()

    extend(0)
    front.sort(key=lambda entry: entry[0].z1)
    results: list[tuple[ObjectiveVector, Solution]] = []
    for vector, saved_blocks in front:
        bins = tuple(
            Bin.from_items(instance.items[i] for i in block) for block in saved_blocks
        )
        results.append((vector, Solution(bins=bins, instance=instance)))
    return results
