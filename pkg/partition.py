"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

from collections import Counter
from dataclasses import dataclass

from sympy.utilities.iterables import partitions

from errors import ContractViolationError, GuardExceededError

PARTITION_GUARD = 60

@dataclass(frozen=True,order=True)
class Partition:
    """
    Non-increasing tuple of positive integers; trailing zeros are never stored.
    The empty partition () is the partition of 0.
    """
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ContractViolationError(f"partition {parts} has non-positive parts")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ContractViolationError(f"partition {parts} is not non-increasing")
        object.__setattr__(self,"parts",parts)

    @classmethod
    def of(cls,*parts):
        """
        Builds a partition from parts in any order; zeros are dropped.
        """
        return cls(tuple(sorted((p for p in parts if p),reverse=True)))

    @property
    def size(self):
        return sum(self.parts)

    @property
    def largest(self):
        return self.parts[0] if self.parts else 0

    def isEmpty(self):
        return not self.parts

    def isSinglePart(self):
        return len(self.parts) == 1

    def conjugate(self):
        """
        Returns:
            Partition: lambda' with lambda'_j = #{i : lambda_i >= j}.
        """
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1,self.largest + 1)))

    @classmethod
    def fromConjugate(cls,conjugateParts):
        """
        Rebuilds a partition from its conjugate parts.
        """
        return cls(tuple(conjugateParts)).conjugate()

    def multiplicities(self):
        """
        Returns:
            dict: part -> number of times it occurs.
        """
        return dict(Counter(self.parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

def partitionsOf(n,guard=PARTITION_GUARD):
    """
    All partitions of n in lexicographic order of their part tuples.

    Args:
        n (int): Non-negative integer.
        guard (int): Largest accepted n.

    Returns:
        list: Partition objects; [Partition(())] for n = 0.
    """
    if not isinstance(n,int) or n < 0:
        raise ContractViolationError(f"cannot partition {n!r}")
    if n > guard:
        raise GuardExceededError(f"partitions of {n}",n,guard)
    if n == 0:
        return [Partition(())]
    found = []
    for counts in partitions(n):
        found.append(tuple(sorted((part for part,mult in counts.items() for _ in range(mult)),reverse=True)))
    return [Partition(parts) for parts in sorted(found)]
