"""Reference implementations the tests check the package against.

Everything here is deliberately independent of the package's internals:
plain full-scan loops and brute-force filters, no shared data structures.
"""

from __future__ import annotations

import random
from fractions import Fraction

from bibinpack.model import Instance, Item, Solution


def random_instance(
    rng: random.Random,
    n: int,
    capacity: int = 100,
    weight_range: tuple[int, int] = (10, 60),
    attribute_pool: str = "ABC",
) -> Instance:
    items = tuple(
        Item(id=i, weight=rng.randint(*weight_range), attribute=rng.choice(attribute_pool))
        for i in range(n)
    )
    return Instance(capacity=capacity, items=items)


def classic_best_fit(instance: Instance, item_order: list[int]) -> list[list[int]]:
    """Textbook attribute-blind best fit: fullest feasible bin, lowest index on ties."""
    bins: list[list[int]] = []
    loads: list[int] = []
    for item_id in item_order:
        weight = instance.items[item_id].weight
        best = None
        best_load = -1
        for index, load in enumerate(loads):
            if load + weight <= instance.capacity and load > best_load:
                best = index
                best_load = load
        if best is None:
            bins.append([item_id])
            loads.append(weight)
        else:
            bins[best].append(item_id)
            loads[best] += weight
    return bins


def recount_objectives(solution: Solution) -> tuple[int, Fraction]:
    """Recompute both objectives straight from member ids and raw items."""
    instance = solution.instance
    used = len(solution.bins)
    mixing = 0
    for used_bin in solution.bins:
        mixing += len({instance.items[i].attribute for i in used_bin.member_ids})
    return used, Fraction(mixing, used)


def brute_force_front(vectors: list) -> set:
    """Non-dominated subset by pairwise comparison, coded inline."""
    front = set()
    for v in vectors:
        beaten = any(
            w.z1 <= v.z1 and w.z2 <= v.z2 and (w.z1 < v.z1 or w.z2 < v.z2)
            for w in vectors
        )
        if not beaten:
            front.add(v)
    return front
