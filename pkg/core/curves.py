#!/usr/bin/env python3
"""
Vizinhanças de Curvas - Core
QK Cominúsculo

Mapa psi (u -> u(-1)), vizinhanças iteradas u(-d) e a distância d(u, v).
"""

import logging
from functools import lru_cache
from typing import Dict, Tuple

from .errors import DomainError, InvariantError
from .models import Shape
from .poset import CominusculePoset
from .shapes import enumerate_shapes, is_ideal

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def psi_shape(poset: CominusculePoset, u: Shape) -> Shape:
    """
    Primeira vizinhança de curvas: remove as caixas de z1 e translada o resto
    pelo deslocamento NW da família.

    Raises:
        InvariantError: imagem fora da grade ou não-ideal (tabela nw_shift errada)
    """
    dr, dc = poset.nw_shift
    bits = 0
    for b in (u - poset.z1).boxes():
        r, c = poset.boxes[b].grid_pos
        target = poset.box_at((r - dr, c - dc))
        if target is None:
            raise InvariantError(
                f"psi leva a caixa {(r, c)} para fora da grade de {poset.space.label}"
            )
        bits |= 1 << target
    if not is_ideal(poset, bits):
        raise InvariantError(f"psi produziu um não-ideal em {poset.space.label}")
    return Shape(bits)


def curve_nbhd(poset: CominusculePoset, u: Shape, d: int) -> Shape:
    """u(-d): d iterações de psi"""
    if d < 0:
        raise DomainError(f"Grau negativo: {d}")
    for _ in range(d):
        if u.bits == 0:
            break
        u = psi_shape(poset, u)
    return u


def distance(poset: CominusculePoset, u: Shape, v: Shape) -> int:
    """d(u, v) = min{d >= 0 : u(-d) <= v}"""
    return distance_table(poset)[(u, v)]


def _distance_by_steps(poset: CominusculePoset, u: Shape, v: Shape) -> int:
    d = 0
    current = u
    while not current.issubset(v):
        current = psi_shape(poset, current)
        d += 1
        if d > poset.dim:
            raise InvariantError("Vizinhança de curvas não chega ao vazio")
    return d


@lru_cache(maxsize=None)
def distance_table(poset: CominusculePoset) -> Dict[Tuple[Shape, Shape], int]:
    """Tabela completa de distâncias, construída uma vez por poset"""
    shapes = enumerate_shapes(poset)
    table = {}
    for u in shapes:
        for v in shapes:
            table[(u, v)] = _distance_by_steps(poset, u, v)
    logger.debug(f"Tabela de distâncias de {poset.space.label}: {len(table)} pares")
    return table
