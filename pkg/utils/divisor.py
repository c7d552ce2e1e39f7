# Copyright (c) 2025-2026.
#
# This file is part of Chipfire Gonality.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from utils.errors import DimensionMismatch


def _same_length(a: "IntVector", b: "IntVector") -> None:
    if len(a.values) != len(b.values):
        raise DimensionMismatch(
            "vectors live on different vertex sets",
            {"left": len(a.values), "right": len(b.values)},
        )


@dataclass(frozen=True)
class IntVector:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)

    @classmethod
    def zero(cls, n: int):
        return cls((0,) * n)

    @classmethod
    def indicator(cls, n: int, vertices: Iterable[int]):
        chosen = set(vertices)

        return cls(tuple(1 if v in chosen else 0 for v in range(n)))


@dataclass(frozen=True)
class Divisor(IntVector):
    """
    Chips per vertex.
    """

    @classmethod
    def point(cls, n: int, v: int, chips: int = 1) -> "Divisor":
        values = [0] * n
        values[v] = chips

        return cls(tuple(values))

    @property
    def degree(self) -> int:
        return sum(self.values)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.values) if c)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.values)

    def __add__(self, other: "Divisor") -> "Divisor":
        _same_length(self, other)
        return Divisor(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Divisor") -> "Divisor":
        _same_length(self, other)
        return Divisor(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Divisor":
        return Divisor(tuple(-c for c in self.values))

    def scaled(self, factor: int) -> "Divisor":
        return Divisor(tuple(factor * c for c in self.values))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.values)


@dataclass(frozen=True)
class FiringScript(IntVector):
    """
    Integer script x encoding D' = D - Qx. Defined up to a constant.
    """

    def normalized(self) -> "FiringScript":
        if not self.values:
            return self

        low = min(self.values)

        return FiringScript(tuple(x - low for x in self.values))

    @property
    def is_constant(self) -> bool:
        return len(set(self.values)) <= 1

    def __add__(self, other: "FiringScript") -> "FiringScript":
        _same_length(self, other)
        return FiringScript(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "FiringScript") -> "FiringScript":
        _same_length(self, other)
        return FiringScript(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "FiringScript":
        return FiringScript(tuple(-x for x in self.values))


@dataclass(frozen=True)
class LevelChain:
    """
    Nested firing sets U_1 ⊆ ... ⊆ U_k; firing them in order applies the
    script sum of their indicators.
    """

    sets: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def script(self, n: int) -> FiringScript:
        counts = [0] * n

        for chosen in self.sets:
            for v in chosen:
                counts[v] += 1

        return FiringScript(tuple(counts))

    def as_lists(self) -> list[list[int]]:
        return [sorted(chosen) for chosen in self.sets]


@dataclass(frozen=True)
class StrongSeparator:
    vertices: frozenset[int]


def effective_divisors(n: int, degree: int) -> Iterator[Divisor]:
    """
    All effective divisors of the given degree on n vertices, in ascending
    lexicographic order of their chip vectors.
    """

    def compositions(slots: int, total: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (total,)
            return

        for first in range(total + 1):
            for rest in compositions(slots - 1, total - first):
                yield (first,) + rest

    if n == 0 or degree < 0:
        return

    for values in compositions(n, degree):
        yield Divisor(values)
