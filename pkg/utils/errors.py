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

from typing import Any, Optional


class ChipfireError(Exception):
    """
    Base class for every error raised by the toolkit.

    The class name doubles as the machine-readable error code written to
    the diagnostic stream by the CLI.
    """

    def __init__(self, message: str = "", detail: Optional[dict[str, Any]] = None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.detail = detail or {}

    @property
    def code(self) -> str:
        return self.__class__.__name__

    def to_dict(self) -> dict[str, Any]:
        return {"error": self.code, "message": self.message, "detail": self.detail}


class FormatError(ChipfireError):
    pass


class DimensionMismatch(ChipfireError):
    pass


class InvalidParameters(ChipfireError):
    pass


class TooLarge(ChipfireError):
    pass


class CertificateInconsistent(ChipfireError):
    """
    A cross-check guaranteed by a theorem failed. Always a bug.
    """


# graph-core


class LoopEdge(ChipfireError):
    pass


class VertexOutOfRange(ChipfireError):
    pass


class Disconnected(ChipfireError):
    pass


class NonPositiveCount(ChipfireError):
    pass


# chipfire


class IllegalMove(ChipfireError):
    pass


class EmptyOrFullSet(ChipfireError):
    pass


class NotEquivalent(ChipfireError):
    pass


class EqualDivisors(ChipfireError):
    pass


class NotEffective(ChipfireError):
    pass


class NoEffectiveRepresentative(ChipfireError):
    pass


class EmptySet(ChipfireError):
    pass


class NotAStrongSeparator(ChipfireError):
    pass


# gonality-search


class CapExceeded(ChipfireError):
    pass


# bramble-tw


class EmptyMember(ChipfireError):
    pass


class NotABramble(ChipfireError):
    pass


class HypothesisUnmet(ChipfireError):
    pass


# harmonic


class NotAMorphism(ChipfireError):
    pass


class NotHarmonic(ChipfireError):
    pass


class Degenerate(ChipfireError):
    pass


class NotHomomorphism(ChipfireError):
    pass


class NonPositiveIndex(ChipfireError):
    pass


class TargetDivisorNotPositiveRank(ChipfireError):
    pass


class InvalidWitness(ChipfireError):
    pass


# metric


class SlopeNotIntegral(ChipfireError):
    pass


class Discontinuous(ChipfireError):
    pass


class DuplicatePoint(ChipfireError):
    pass


class OffsetOutOfRange(ChipfireError):
    pass


class IrrationalLength(ChipfireError):
    pass


class NonIntegerLength(ChipfireError):
    pass


class WitnessInvalid(ChipfireError):
    pass


class NotCovering(ChipfireError):
    pass
