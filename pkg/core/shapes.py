#!/usr/bin/env python3
"""
Shapes - Core
QK Cominúsculo

Ideais de ordem de P_X como elementos de W^P: enumeração, ordem de Bruhat,
classificação de skew shapes, mutação de caixas, correspondência com W e o
dual lambda^vee.
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from .errors import DomainError, InvariantError
from .models import Shape, SkewClass, SkewKind
from .poset import CominusculePoset
from .rootcore import WeylElement, inversions

logger = logging.getLogger(__name__)


def is_ideal(poset: CominusculePoset, bits: int) -> bool:
    """Fechado para baixo"""
    for b in range(poset.dim):
        if bits >> b & 1 and poset.below[b] & ~bits:
            return False
    return True


def make_shape(poset: CominusculePoset, bits: int) -> Shape:
    if bits >> poset.dim:
        raise DomainError(f"Caixa fora de P_X em {poset.space.label}")
    if not is_ideal(poset, bits):
        raise DomainError(f"Conjunto de caixas não é ideal de ordem em {poset.space.label}")
    return Shape(bits)


def addable_boxes(poset: CominusculePoset, s: Shape) -> List[int]:
    return [b for b in range(poset.dim)
            if not s.bits >> b & 1 and poset.below[b] & ~s.bits == 0]


def removable_boxes(poset: CominusculePoset, s: Shape) -> List[int]:
    return [b for b in range(poset.dim)
            if s.bits >> b & 1 and poset.above[b] & s.bits == 0]


@lru_cache(maxsize=None)
def _enumerate(poset: CominusculePoset) -> Tuple[Shape, ...]:
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for bits in frontier:
            for b in addable_boxes(poset, Shape(bits)):
                grown = bits | 1 << b
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    shapes = tuple(sorted((Shape(bits) for bits in seen), key=lambda s: s.sort_key))
    logger.debug(f"{poset.space.label}: {len(shapes)} shapes")
    return shapes


def enumerate_shapes(poset: CominusculePoset) -> List[Shape]:
    """Todos os ideais, ordenados por (comprimento, bitset)"""
    return list(_enumerate(poset))


def classify_skew(poset: CominusculePoset, w: Shape, u: Shape) -> SkewClass:
    """
    Classe mais fina de w/u.

    Args:
        poset: Poset cominúsculo
        w: Shape maior
        u: Shape menor

    Returns:
        SkewClass com o tipo e as caixas de I(w)\\I(u)
    """
    if not u.issubset(w):
        return SkewClass(SkewKind.NOT_CONTAINED, u - w)

    diff = w - u
    if diff.bits == 0:
        return SkewClass(SkewKind.EMPTY, diff)

    boxes = diff.boxes()
    rook = all(poset.below[b] & diff.bits == 0 for b in boxes)
    short = all(poset.boxes[b].is_short for b in boxes)

    if rook and short:
        kind = SkewKind.SHORT_ROOK_STRIP
    elif rook:
        kind = SkewKind.ROOK_STRIP
    elif short:
        kind = SkewKind.SHORT_SKEW_SHAPE
    else:
        kind = SkewKind.SKEW_SHAPE
    return SkewClass(kind, diff)


def rook_strips(poset: CominusculePoset, mu: Shape, short_only: bool = False) -> Iterator[Tuple[Shape, int]]:
    """
    Pares (nu, l(nu/mu)) com nu/mu rook strip (incluindo o vazio).

    Os rook strips sobre mu são exatamente os subconjuntos das caixas adicionáveis.
    """
    addable = addable_boxes(poset, mu)
    if short_only:
        addable = [b for b in addable if poset.boxes[b].is_short]
    for size in range(len(addable) + 1):
        for subset in combinations(addable, size):
            bits = mu.bits
            for b in subset:
                bits |= 1 << b
            yield Shape(bits), size


def add_box(poset: CominusculePoset, s: Shape, box: int) -> Shape:
    if s.bits >> box & 1:
        raise DomainError(f"Caixa {poset.boxes[box].grid_pos} já pertence ao shape")
    if poset.below[box] & ~s.bits:
        raise DomainError(f"Caixa {poset.boxes[box].grid_pos} não é adicionável")
    return Shape(s.bits | 1 << box)


def remove_box(poset: CominusculePoset, s: Shape, box: int) -> Shape:
    if not s.bits >> box & 1:
        raise DomainError(f"Caixa {poset.boxes[box].grid_pos} não pertence ao shape")
    if poset.above[box] & s.bits:
        raise DomainError(f"Caixa {poset.boxes[box].grid_pos} não é removível")
    return Shape(s.bits & ~(1 << box))


# ==================== CORRESPONDÊNCIA COM W^P ====================

def to_weyl(poset: CominusculePoset, s: Shape) -> WeylElement:
    """w_lambda = s_{alpha_1} ... s_{alpha_m} na extensão linear"""
    rs = poset.root_system
    w = rs.identity()
    for b in s.boxes():
        w = w * rs.reflection(poset.boxes[b].root_index)
    return w


def from_weyl(poset: CominusculePoset, w: WeylElement) -> Shape:
    """
    Shape de w em W^P (seu conjunto de inversões).

    Raises:
        DomainError: se w não for representante minimal de W/W_P
    """
    rs = poset.root_system
    gamma = poset.space.gamma_index
    for j in range(rs.rank):
        if j != gamma and rs.act_on_root(w, j)[1] < 0:
            raise DomainError("Elemento de Weyl fora de W^P")

    bits = 0
    for root in inversions(rs, w):
        if root not in poset.root_to_box:
            raise DomainError("Inversão fora de P_X")
        bits |= 1 << poset.root_to_box[root]
    if not is_ideal(poset, bits):
        raise InvariantError("Conjunto de inversões não é ideal")
    return Shape(bits)


@lru_cache(maxsize=None)
def dual(poset: CominusculePoset, s: Shape) -> Shape:
    """lambda^vee = w_0 w_lambda w_P"""
    return from_weyl(poset, poset.w0 * to_weyl(poset, s) * poset.wP)


# ==================== NOTAÇÃO DE PARTIÇÃO ====================

def to_partition(poset: CominusculePoset, s: Shape) -> List[int]:
    """Contagem de caixas por linha da grade, sem zeros finais"""
    counts = [0] * poset.rows
    for b in s.boxes():
        counts[poset.boxes[b].grid_pos[0]] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def from_partition(poset: CominusculePoset, parts: Sequence[int]) -> Shape:
    """
    Shape a partir de contagens por linha (prefixos de cada linha da grade).

    Raises:
        DomainError: linha inexistente, linha estourada ou resultado não-ideal
    """
    rows: dict = {}
    for box in poset.boxes:
        rows.setdefault(box.grid_pos[0], []).append(box.index)

    bits = 0
    for r, count in enumerate(parts):
        if count < 0:
            raise DomainError(f"Linha {r + 1} com contagem negativa")
        if count == 0:
            continue
        cells = rows.get(r, [])
        if count > len(cells):
            raise DomainError(f"Linha {r + 1} comporta {len(cells)} caixas, recebeu {count}")
        for b in cells[:count]:
            bits |= 1 << b
    return make_shape(poset, bits)


def from_cells(poset: CominusculePoset, cells: Sequence[Tuple[int, int]]) -> Shape:
    """Shape a partir de coordenadas (linha, coluna) base 0"""
    bits = 0
    for cell in cells:
        index = poset.box_at(tuple(cell))
        if index is None:
            raise DomainError(f"Célula {tuple(cell)} não pertence a {poset.space.label}")
        bits |= 1 << index
    return make_shape(poset, bits)
