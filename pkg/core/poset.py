#!/usr/bin/env python3
"""
Poset Cominúsculo - Core
QK Cominúsculo

Constrói P_X = {alpha > 0 : coeficiente de gamma é 1} para os sete espaços
cominúsculos, com grade, rótulos delta, caixas curtas, z1 e deslocamento NW.

A grade vem de tabelas por família; o casamento grade/raiz é feito por
backtracking e a ordem das raízes é a autoridade.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from .errors import ConfigurationError, InvariantError
from .models import Box, Family, Shape, SpaceKind
from .rootcore import RootSystem, WeylElement, build_root_system, longest_element

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Space:
    """Espaço cominúsculo X = G/P"""
    kind: SpaceKind
    params: Tuple[int, ...]
    family: Family
    rank: int
    gamma_index: int

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.family, self.rank)

    @property
    def dim(self) -> int:
        """Número de caixas, calculado só pela grade"""
        return len(_grid_cells(self))

    @property
    def is_minuscule(self) -> bool:
        return self.kind not in (SpaceKind.LG, SpaceKind.QUAD_ODD)

    @property
    def label(self) -> str:
        if self.kind == SpaceKind.GR:
            return f"Gr({self.params[0]},{self.params[1]})"
        if self.kind in (SpaceKind.LG, SpaceKind.OG):
            return f"{self.kind.value}({self.params[0]})"
        if self.kind in (SpaceKind.QUAD_ODD, SpaceKind.QUAD_EVEN):
            return f"Q({self.params[0]})"
        return "E6" if self.kind == SpaceKind.E6P6 else "E7"


def build_space(kind: SpaceKind, *params: int) -> Space:
    """
    Valida parâmetros e devolve o Space correspondente.

    Raises:
        ConfigurationError: parâmetros fora do domínio
    """
    kind = SpaceKind(kind)

    if kind == SpaceKind.GR:
        if len(params) != 2:
            raise ConfigurationError("Gr(k,n) exige dois parâmetros")
        k, n = params
        if not 1 <= k < n:
            raise ConfigurationError(f"Gr({k},{n}) inválido: exige 1 <= k < n")
        return Space(kind, (k, n), Family.A, n - 1, k - 1)

    if kind == SpaceKind.LG:
        (n,) = params
        if n < 2:
            raise ConfigurationError(f"LG({n}) inválido: exige n >= 2")
        return Space(kind, (n,), Family.C, n, n - 1)

    if kind == SpaceKind.OG:
        (n,) = params
        if n < 3:
            raise ConfigurationError(f"OG({n}) inválido: exige n >= 3")
        return Space(kind, (n,), Family.D, n, n - 1)

    if kind == SpaceKind.QUAD_ODD:
        (n,) = params
        if n < 3 or n % 2 == 0:
            raise ConfigurationError(f"Quádrica ímpar Q({n}) inválida: exige n ímpar >= 3")
        return Space(kind, (n,), Family.B, (n + 1) // 2, 0)

    if kind == SpaceKind.QUAD_EVEN:
        (n,) = params
        if n < 4 or n % 2 == 1:
            raise ConfigurationError(f"Quádrica par Q({n}) inválida: exige n par >= 4")
        return Space(kind, (n,), Family.D, n // 2 + 1, 0)

    if kind == SpaceKind.E6P6:
        return Space(kind, (), Family.E6, 6, 5)

    return Space(SpaceKind.E7P7, (), Family.E7, 7, 6)


def quadric(n: int) -> Space:
    """Q^n, escolhendo a forma par ou ímpar"""
    return build_space(SpaceKind.QUAD_ODD if n % 2 else SpaceKind.QUAD_EVEN, n)


# ==================== TABELAS POR FAMÍLIA ====================

def _grid_cells(space: Space) -> List[Cell]:
    kind = space.kind
    if kind == SpaceKind.GR:
        k, n = space.params
        return [(i, j) for i in range(k) for j in range(n - k)]
    if kind == SpaceKind.LG:
        n = space.params[0]
        return [(r, c) for r in range(n) for c in range(r, n)]
    if kind == SpaceKind.OG:
        n = space.params[0]
        return [(r, c) for r in range(n - 1) for c in range(r, n - 1)]
    if kind == SpaceKind.QUAD_ODD:
        n = space.params[0]
        return [(0, c) for c in range(n)]
    if kind == SpaceKind.QUAD_EVEN:
        n = space.params[0]
        m = n // 2
        return [(0, c) for c in range(m)] + [(1, c) for c in range(m - 2, n - 2)]
    if kind == SpaceKind.E6P6:
        rows = [(0, 0, 4), (1, 2, 4), (2, 3, 5), (3, 3, 7)]
    else:
        rows = [(0, 0, 5), (1, 3, 5), (2, 4, 6), (3, 4, 8), (4, 4, 8),
                (5, 7, 8), (6, 8, 8), (7, 8, 8), (8, 8, 8)]
    return [(r, c) for r, first, last in rows for c in range(first, last + 1)]


def _z1_cells(space: Space, cells: List[Cell]) -> Set[Cell]:
    kind = space.kind
    if kind == SpaceKind.GR:
        return {cell for cell in cells if cell[0] == 0 or cell[1] == 0}
    if kind == SpaceKind.LG:
        return {cell for cell in cells if cell[0] == 0}
    if kind == SpaceKind.OG:
        return {cell for cell in cells if cell[0] <= 1}
    if kind in (SpaceKind.QUAD_ODD, SpaceKind.QUAD_EVEN):
        maximo = max(cells)
        return {cell for cell in cells if cell != maximo}
    if kind == SpaceKind.E6P6:
        return {cell for cell in cells if cell[0] <= 2}
    return {cell for cell in cells if cell[0] <= 3}


def _short_cells(space: Space, cells: List[Cell]) -> Set[Cell]:
    """Células de raízes curtas: fora da diagonal em LG, o meio da cadeia na quádrica ímpar"""
    if space.kind == SpaceKind.LG:
        return {cell for cell in cells if cell[0] != cell[1]}
    if space.kind == SpaceKind.QUAD_ODD:
        return {(0, space.rank - 1)}
    return set()


def _nw_shift(space: Space) -> Cell:
    kind = space.kind
    if kind == SpaceKind.OG:
        return (2, 2)
    if kind == SpaceKind.QUAD_ODD:
        return (0, space.params[0] - 1)
    if kind == SpaceKind.QUAD_EVEN:
        return (1, space.params[0] - 3)
    if kind == SpaceKind.E6P6:
        return (3, 3)
    if kind == SpaceKind.E7P7:
        return (4, 4)
    return (1, 1)


# ==================== POSET ====================

@dataclass(eq=False)
class CominusculePoset:
    """P_X com caixas na extensão linear (linha, coluna)"""
    space: Space
    boxes: List[Box]
    leq: np.ndarray
    below: List[int]
    above: List[int]
    z1: Shape
    nw_shift: Cell
    cell_index: Dict[Cell, int]
    w0: WeylElement
    wP: WeylElement
    root_to_box: Dict[int, int] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.boxes)

    @property
    def full(self) -> Shape:
        return Shape((1 << self.dim) - 1)

    @property
    def root_system(self) -> RootSystem:
        return self.space.root_system

    @property
    def is_minuscule(self) -> bool:
        return self.space.is_minuscule

    @property
    def rows(self) -> int:
        return max(box.grid_pos[0] for box in self.boxes) + 1

    def box_at(self, cell: Cell) -> Optional[int]:
        return self.cell_index.get(cell)

    def shape_of(self, boxes) -> Shape:
        bits = 0
        for b in boxes:
            bits |= 1 << b
        return Shape(bits)


def _root_leq(a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
    return all(y - x >= 0 for x, y in zip(a, b))


def _grid_leq(a: Cell, b: Cell) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _match_grid(rs: RootSystem, gamma: int, cells: List[Cell],
                short_cells: Set[Cell]) -> List[int]:
    """Atribui uma raiz a cada célula preservando a ordem NW nos dois sentidos e o comprimento"""
    candidates = [i for i, r in enumerate(rs.positive_roots) if r[gamma] >= 1]
    if len(candidates) != len(cells):
        raise InvariantError(
            f"Grade com {len(cells)} células para {len(candidates)} raízes em {rs.label}"
        )

    by_rank: Dict[int, List[int]] = {}
    for i in candidates:
        by_rank.setdefault(sum(rs.positive_roots[i]) - 1, []).append(i)
    for rank in by_rank:
        by_rank[rank].sort(reverse=True)

    roots = rs.positive_roots
    assignment: List[int] = []
    used: Set[int] = set()

    def backtrack(pos: int) -> bool:
        if pos == len(cells):
            return True
        cell = cells[pos]
        for cand in by_rank.get(cell[0] + cell[1], []):
            if cand in used or rs.is_short(cand) != (cell in short_cells):
                continue
            ok = all(
                _grid_leq(cells[p], cell) == _root_leq(roots[assignment[p]], roots[cand])
                and _grid_leq(cell, cells[p]) == _root_leq(roots[cand], roots[assignment[p]])
                for p in range(pos)
            )
            if not ok:
                continue
            assignment.append(cand)
            used.add(cand)
            if backtrack(pos + 1):
                return True
            assignment.pop()
            used.discard(cand)
        return False

    if not backtrack(0):
        raise InvariantError(f"Grade não casa com a ordem das raízes em {rs.label}")
    return assignment


@lru_cache(maxsize=None)
def build_poset(space: Space) -> CominusculePoset:
    """
    Constrói o poset cominúsculo do espaço.

    Args:
        space: Espaço validado por build_space

    Returns:
        CominusculePoset com caixas ordenadas por (linha, coluna)

    Raises:
        InvariantError: se alguma tabela de grade ou z1 estiver inconsistente
    """
    rs = space.root_system
    gamma = space.gamma_index

    if max(r[gamma] for r in rs.positive_roots) != 1:
        raise ConfigurationError(f"alpha_{gamma + 1} não é cominúscula em {rs.label}")

    cells = sorted(_grid_cells(space))
    roots = _match_grid(rs, gamma, cells, _short_cells(space, cells))
    dim = len(cells)

    leq = np.zeros((dim, dim), dtype=bool)
    for a in range(dim):
        for b in range(dim):
            leq[a][b] = _root_leq(rs.positive_roots[roots[a]], rs.positive_roots[roots[b]])

    below = [sum(1 << a for a in range(dim) if leq[a][b] and a != b) for b in range(dim)]
    above = [sum(1 << b for b in range(dim) if leq[a][b] and a != b) for a in range(dim)]

    boxes: List[Box] = []
    for b in range(dim):
        # w_lambda para lambda = caixas estritamente abaixo de b
        w = rs.identity()
        for a in range(b):
            if below[b] >> a & 1:
                w = w * rs.reflection(roots[a])
        delta, sign = rs.act_on_root(w, roots[b])
        if sign < 0 or delta >= rs.rank:
            raise InvariantError(f"delta da caixa {cells[b]} não é raiz simples")
        boxes.append(Box(index=b, root_index=roots[b], root=rs.positive_roots[roots[b]],
                         grid_pos=cells[b], is_short=rs.is_short(roots[b]), delta=delta))

    cell_index = {cell: i for i, cell in enumerate(cells)}
    z1_bits = sum(1 << cell_index[cell] for cell in _z1_cells(space, cells))
    for b in range(dim):
        if z1_bits >> b & 1 and below[b] & ~z1_bits:
            raise InvariantError(f"z1 tabelado não é ideal em {space.label}")

    w0 = longest_element(rs, range(rs.rank))
    wP = longest_element(rs, [j for j in range(rs.rank) if j != gamma])

    poset = CominusculePoset(
        space=space, boxes=boxes, leq=leq, below=below, above=above,
        z1=Shape(z1_bits), nw_shift=_nw_shift(space), cell_index=cell_index,
        w0=w0, wP=wP, root_to_box={r: i for i, r in enumerate(roots)},
    )
    logger.info(f"Poset {space.label}: {dim} caixas, |z1| = {poset.z1.length}")
    return poset


def delta_label(poset: CominusculePoset, box: int) -> int:
    """Índice da raiz simples delta(alpha) da caixa"""
    return poset.boxes[box].delta
