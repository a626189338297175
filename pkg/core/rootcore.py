#!/usr/bin/env python3
"""
Sistemas de Raízes - Core
QK Cominúsculo

Aritmética de raízes e do grupo de Weyl para os tipos A, B, C, D, E6 e E7.

Convenções:
    - cartan[i][j] = <alpha_i^vee, alpha_j>
    - pesos em coordenadas de pesos fundamentais (sempre inteiros)
    - raízes em coordenadas de raízes simples; o peso de uma raiz r é cartan @ r
    - normas normalizadas: raiz longa = 2, raiz curta = 1
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import ConfigurationError, InvariantError
from .models import Family

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]

# Diagramas de Dynkin de E6/E7 na numeração de Bourbaki (base 0)
_E6_EDGES = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
_E7_EDGES = _E6_EDGES + [(5, 6)]


def _check_family(family: Family, rank: int) -> None:
    minimos = {Family.A: 1, Family.B: 2, Family.C: 2, Family.D: 3}
    if family == Family.E6 and rank == 6:
        return
    if family == Family.E7 and rank == 7:
        return
    if family in minimos and rank >= minimos[family]:
        return
    raise ConfigurationError(f"Sistema de raízes não suportado: {family.value}{rank}")


def _cartan_matrix(family: Family, rank: int) -> np.ndarray:
    cartan = 2 * np.eye(rank, dtype=np.int64)

    if family in (Family.E6, Family.E7):
        edges = _E6_EDGES if family == Family.E6 else _E7_EDGES
    elif family == Family.D:
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    else:
        edges = [(i, i + 1) for i in range(rank - 1)]

    for i, j in edges:
        cartan[i][j] = -1
        cartan[j][i] = -1

    # Ligação dupla no fim da cadeia
    if family == Family.B:
        cartan[rank - 1][rank - 2] = -2
    elif family == Family.C:
        cartan[rank - 2][rank - 1] = -2

    return cartan


def _symmetrizer(family: Family, rank: int) -> Tuple[int, ...]:
    if family == Family.B:
        return tuple([2] * (rank - 1) + [1])
    if family == Family.C:
        return tuple([1] * (rank - 1) + [2])
    return tuple([1] * rank)


def _enumerate_positive_roots(cartan: np.ndarray) -> List[Tuple[int, ...]]:
    """Fecho por reflexões simples a partir das raízes simples (BFS)"""
    rank = cartan.shape[0]
    simples = [tuple(int(x) for x in row) for row in np.eye(rank, dtype=np.int64)]
    seen = set(simples)
    queue = deque(simples)

    while queue:
        root = queue.popleft()
        pairing = cartan @ np.array(root, dtype=np.int64)
        for i in range(rank):
            if root == simples[i]:
                continue
            image = list(root)
            image[i] -= int(pairing[i])
            if min(image) < 0:
                continue
            image = tuple(image)
            if image not in seen:
                seen.add(image)
                queue.append(image)

    # altura, depois lexicográfica reversa: positive_roots[i] = alpha_i para i < rank
    return sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r)))


@dataclass(eq=False)
class WeylElement:
    """Elemento de W: palavra em índices de raízes positivas e matriz sobre os pesos"""
    word: Tuple[int, ...]
    matrix: np.ndarray

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word, self.matrix @ other.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.matrix.tobytes())

    def apply(self, weight: Sequence[int]) -> Weight:
        image = self.matrix @ np.asarray(weight, dtype=np.int64)
        return tuple(int(x) for x in image)

    def is_identity(self) -> bool:
        return np.array_equal(self.matrix, np.eye(self.matrix.shape[0], dtype=np.int64))


@dataclass(eq=False)
class RootSystem:
    """Sistema de raízes com raízes positivas, normas e tabela de busca por peso"""
    family: Family
    rank: int
    cartan: np.ndarray
    sym: Tuple[int, ...]
    positive_roots: List[Tuple[int, ...]]
    root_norms: List[int]
    _root_weights: List[np.ndarray] = field(default_factory=list, repr=False)
    _lookup: Dict[Weight, Tuple[int, int]] = field(default_factory=dict, repr=False)
    _reflections: Dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def label(self) -> str:
        if self.family in (Family.E6, Family.E7):
            return self.family.value
        return f"{self.family.value}{self.rank}"

    @property
    def simple_roots(self) -> List[Tuple[int, ...]]:
        return self.positive_roots[:self.rank]

    @property
    def is_simply_laced(self) -> bool:
        return len(set(self.sym)) == 1

    def root_weight(self, index: int) -> np.ndarray:
        return self._root_weights[index]

    def is_short(self, index: int) -> bool:
        return self.root_norms[index] < 2

    def form(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Forma simétrica inteira sobre coordenadas de raízes simples"""
        sym_cartan = np.diag(self.sym) @ self.cartan
        return int(np.asarray(a, dtype=np.int64) @ sym_cartan @ np.asarray(b, dtype=np.int64))

    def coroot_pairing(self, index: int) -> np.ndarray:
        """Vetor c com <lambda, alpha^vee> = c . lambda"""
        root = np.array(self.positive_roots[index], dtype=np.int64)
        norm = self.form(root, root)
        numer = 2 * root * np.array(self.sym, dtype=np.int64)
        if np.any(numer % norm):
            raise InvariantError(f"Co-raiz não inteira para a raiz {self.positive_roots[index]}")
        return numer // norm

    def reflection_matrix(self, index: int) -> np.ndarray:
        if index not in self._reflections:
            eye = np.eye(self.rank, dtype=np.int64)
            self._reflections[index] = eye - np.outer(self.root_weight(index), self.coroot_pairing(index))
        return self._reflections[index]

    def locate(self, weight: Sequence[int]) -> Tuple[int, int]:
        """(índice, sinal) da raiz com o peso dado"""
        key = tuple(int(x) for x in weight)
        if key not in self._lookup:
            raise InvariantError(f"Peso {key} não é raiz de {self.label}")
        return self._lookup[key]

    def identity(self) -> WeylElement:
        return WeylElement((), np.eye(self.rank, dtype=np.int64))

    def reflection(self, index: int) -> WeylElement:
        return WeylElement((index,), self.reflection_matrix(index))

    def fundamental_weight(self, index: int) -> Weight:
        return tuple(1 if i == index else 0 for i in range(self.rank))

    def simple_root_weight(self, index: int) -> Weight:
        return tuple(int(x) for x in self.cartan[:, index])

    def act_on_root(self, w: WeylElement, index: int) -> Tuple[int, int]:
        return self.locate(w.matrix @ self.root_weight(index))


@lru_cache(maxsize=None)
def build_root_system(family: Family, rank: int) -> RootSystem:
    """
    Constrói o sistema de raízes completo.

    Args:
        family: Família (A, B, C, D, E6, E7)
        rank: Posto

    Returns:
        RootSystem com raízes positivas em ordem determinística
    """
    family = Family(family)
    _check_family(family, rank)

    cartan = _cartan_matrix(family, rank)
    sym = _symmetrizer(family, rank)
    roots = _enumerate_positive_roots(cartan)

    sym_cartan = np.diag(sym) @ cartan
    forms = [int(np.array(r) @ sym_cartan @ np.array(r)) for r in roots]
    longest = max(forms)
    norms = [2 * f // longest for f in forms]

    rs = RootSystem(family=family, rank=rank, cartan=cartan, sym=sym,
                    positive_roots=roots, root_norms=norms)
    for index, root in enumerate(roots):
        weight = cartan @ np.array(root, dtype=np.int64)
        rs._root_weights.append(weight)
        rs._lookup[tuple(int(x) for x in weight)] = (index, 1)
        rs._lookup[tuple(-int(x) for x in weight)] = (index, -1)

    logger.debug(f"Sistema {rs.label}: {len(roots)} raízes positivas")
    return rs


def reflect(rs: RootSystem, root_index: int, weight: Sequence[int]) -> Weight:
    """s_alpha(v) = v - <v, alpha^vee> alpha"""
    if not 0 <= root_index < len(rs.positive_roots):
        raise IndexError(f"Raiz {root_index} fora do intervalo")
    image = rs.reflection_matrix(root_index) @ np.asarray(weight, dtype=np.int64)
    return tuple(int(x) for x in image)


def apply_weyl(rs: RootSystem, w: WeylElement, weight: Sequence[int]) -> Weight:
    return w.apply(weight)


def inversions(rs: RootSystem, w: WeylElement) -> FrozenSet[int]:
    """I(w) = {alpha > 0 : w.alpha < 0}"""
    result = set()
    for index in range(len(rs.positive_roots)):
        _, sign = rs.act_on_root(w, index)
        if sign < 0:
            result.add(index)
    return frozenset(result)


def length(rs: RootSystem, w: WeylElement) -> int:
    return len(inversions(rs, w))


def longest_element(rs: RootSystem, simple_subset: Iterable[int]) -> WeylElement:
    """Elemento mais longo do subgrupo parabólico gerado por simple_subset"""
    subset = sorted(set(simple_subset))
    if any(not 0 <= j < rs.rank for j in subset):
        raise ConfigurationError(f"Subconjunto {subset} não é de raízes simples")

    w = rs.identity()
    changed = True
    while changed:
        changed = False
        for j in subset:
            _, sign = rs.act_on_root(w, j)
            if sign > 0:
                w = w * rs.reflection(j)
                changed = True
    return w
