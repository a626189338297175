#!/usr/bin/env python3
"""
Modelos de Dados - Core
QK Cominúsculo

Dataclasses e enums compartilhados entre os módulos do core.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple


class Family(str, Enum):
    """Família do sistema de raízes"""
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E6 = "E6"
    E7 = "E7"


class SpaceKind(str, Enum):
    """Espaços cominúsculos suportados"""
    GR = "Gr"
    LG = "LG"
    OG = "OG"
    QUAD_ODD = "QuadOdd"
    QUAD_EVEN = "QuadEven"
    E6P6 = "E6P6"
    E7P7 = "E7P7"


class BasisTag(str, Enum):
    """Base em que uma expressão de Schubert está escrita"""
    OPPOSITE = "Opposite"
    IDEAL = "Ideal"
    QIDEAL = "QIdeal"


class SkewKind(str, Enum):
    """Classe mais fina de um skew shape w/u"""
    NOT_CONTAINED = "NotContained"
    SKEW_SHAPE = "SkewShape"
    SHORT_SKEW_SHAPE = "ShortSkewShape"
    ROOK_STRIP = "RookStrip"
    SHORT_ROOK_STRIP = "ShortRookStrip"
    EMPTY = "Empty"


@dataclass(frozen=True)
class Shape:
    """Ideal de ordem de P_X como bitset sobre a extensão linear do poset"""
    bits: int = 0

    @property
    def length(self) -> int:
        return bin(self.bits).count("1")

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (self.length, self.bits)

    def boxes(self) -> List[int]:
        """Índices das caixas presentes, em ordem crescente"""
        result = []
        bits = self.bits
        index = 0
        while bits:
            if bits & 1:
                result.append(index)
            bits >>= 1
            index += 1
        return result

    def issubset(self, other: "Shape") -> bool:
        """Ordem de Bruhat em W^P: contenção dos bitsets"""
        return self.bits & ~other.bits == 0

    def __contains__(self, box: int) -> bool:
        return bool(self.bits >> box & 1)

    def __or__(self, other: "Shape") -> "Shape":
        return Shape(self.bits | other.bits)

    def __and__(self, other: "Shape") -> "Shape":
        return Shape(self.bits & other.bits)

    def __sub__(self, other: "Shape") -> "Shape":
        return Shape(self.bits & ~other.bits)


@dataclass(frozen=True)
class Box:
    """Uma raiz de P_X com sua posição na grade"""
    index: int
    root_index: int
    root: Tuple[int, ...]
    grid_pos: Tuple[int, int]
    is_short: bool
    delta: int


@dataclass(frozen=True)
class SkewClass:
    """Classificação de w/u mais as caixas de I(w)\\I(u)"""
    kind: SkewKind
    boxes: Shape

    @property
    def is_contained(self) -> bool:
        return self.kind != SkewKind.NOT_CONTAINED

    @property
    def is_rook_strip(self) -> bool:
        return self.kind in (SkewKind.ROOK_STRIP, SkewKind.SHORT_ROOK_STRIP, SkewKind.EMPTY)

    @property
    def is_short(self) -> bool:
        """Skew shape curto (inclui o vazio)"""
        return self.kind in (SkewKind.SHORT_SKEW_SHAPE, SkewKind.SHORT_ROOK_STRIP, SkewKind.EMPTY)

    @property
    def is_short_rook_strip(self) -> bool:
        return self.kind in (SkewKind.SHORT_ROOK_STRIP, SkewKind.EMPTY)

    @property
    def size(self) -> int:
        return self.boxes.length
