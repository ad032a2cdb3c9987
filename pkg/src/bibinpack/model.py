"""Core types and objective evaluation for attribute-aware bin packing."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True)
class Item:
    """A unit to pack: integer weight plus a nominal attribute label."""

    id: int
    weight: int
    attribute: str

    def __post_init__(self) -> None:
        if self.weight < 1:
            raise ValueError(f"item {self.id}: weight must be >= 1, got {self.weight}")


@dataclass(frozen=True)
class Instance:
    """A packing problem: bin capacity plus the items to distribute.

    Construction validates everything downstream code relies on, so an
    Instance that exists is feasible: ids match positions and every item
    fits an empty bin.
    """

    capacity: int
    items: tuple[Item, ...]
    attribute_universe: frozenset[str] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        if self.capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {self.capacity}")
        if not self.items:
            raise ValueError("instance needs at least one item")
        for position, item in enumerate(self.items):
            if item.id != position:
                raise ValueError(
                    f"item ids must equal list position: position {position} holds id {item.id}"
                )
            if item.weight > self.capacity:
                raise ValueError(
                    f"item {item.id}: weight {item.weight} exceeds capacity "
                    f"{self.capacity}, no feasible packing exists"
                )
        universe = frozenset(item.attribute for item in self.items)
        object.__setattr__(self, "attribute_universe", universe)

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def total_weight(self) -> int:
        return sum(item.weight for item in self.items)

    @property
    def lower_bound(self) -> int:
        """Fewest bins any packing can use: ceil(total weight / capacity)."""
        return -(-self.total_weight // self.capacity)


@dataclass(frozen=True)
class Bin:
    """One used bin: its members, their total weight, their attribute spread."""

    member_ids: frozenset[int]
    load: int
    distinct_attributes: frozenset[str]

    @classmethod
    def from_items(cls, items: Iterable[Item]) -> "Bin":
        members = tuple(items)
        return cls(
            member_ids=frozenset(item.id for item in members),
            load=sum(item.weight for item in members),
            distinct_attributes=frozenset(item.attribute for item in members),
        )

    @property
    def heterogeneousness(self) -> int:
        return len(self.distinct_attributes)


@dataclass(frozen=True)
class Solution:
    """A complete packing: every item of the instance sits in exactly one bin."""

    bins: tuple[Bin, ...]
    instance: Instance


@dataclass(frozen=True)
class ObjectiveVector:
    """The two minimization objectives: bin count and mean bin heterogeneousness.

    z2 is kept as an exact rational so comparisons never suffer float rounding;
    use format_z2 for the three-decimal report form.
    """

    z1: int
    z2: Fraction

    def __str__(self) -> str:
        return f"({self.z1}, {format_z2(self.z2)})"


def format_z2(value: Fraction, places: int = 3) -> str:
    """Render an exact heterogeneousness value with fixed decimals, rounding half-up."""
    scale = 10**places
    quotient, remainder = divmod(value.numerator * scale, value.denominator)
    if 2 * remainder >= value.denominator:
        quotient += 1
    whole, fractional = divmod(quotient, scale)
    return f"{whole}.{fractional:0{places}d}"


def bin_count(solution: Solution) -> int:
    """First objective: number of bins the solution uses."""
    return len(solution.bins)


def average_heterogeneousness(solution: Solution) -> Fraction:
    """Second objective: mean count of distinct attributes over used bins, exact."""
    total = sum(b.heterogeneousness for b in solution.bins)
    return Fraction(total, len(solution.bins))


def evaluate(solution: Solution) -> ObjectiveVector:
    return ObjectiveVector(bin_count(solution), average_heterogeneousness(solution))


def dominates(a: ObjectiveVector, b: ObjectiveVector) -> bool:
    """True when a is at least as good in both objectives and strictly better in one."""
    return a.z1 <= b.z1 and a.z2 <= b.z2 and (a.z1 < b.z1 or a.z2 < b.z2)


def validate_solution(solution: Solution) -> None:
    """Check all packing invariants, raising ValueError on the first violation."""
    instance = solution.instance
    seen: set[int] = set()
    for index, used_bin in enumerate(solution.bins):
        if not used_bin.member_ids:
            raise ValueError(f"bin {index} is empty")
        load = 0
        attributes: set[str] = set()
        for item_id in used_bin.member_ids:
            if not 0 <= item_id < instance.n:
                raise ValueError(f"bin {index}: unknown item id {item_id}")
            if item_id in seen:
                raise ValueError(f"item {item_id} assigned to more than one bin")
            seen.add(item_id)
            item = instance.items[item_id]
            load += item.weight
            attributes.add(item.attribute)
        if load != used_bin.load:
            raise ValueError(f"bin {index}: stored load {used_bin.load} != recomputed {load}")
        if load > instance.capacity:
            raise ValueError(
                f"bin {index}: load {load} exceeds capacity {instance.capacity}"
            )
        if attributes != set(used_bin.distinct_attributes):
            raise ValueError(f"bin {index}: stored attribute set is inconsistent with members")
    if len(seen) != instance.n:
        missing = sorted(set(range(instance.n)) - seen)
        raise ValueError(f"items never assigned: {missing}")
