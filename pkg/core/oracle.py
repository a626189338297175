#!/usr/bin/env python3
"""
Oráculo - Core
QK Cominúsculo

Cohomologia quântica de Gr(k,n) por força bruta: Littlewood-Richardson clássico
seguido da regra dos rim hooks. Trabalha só com partições e não compartilha
código com o módulo de vizinhanças de curvas.
"""

import logging
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import InvariantError

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]
QHExpr = Dict[Tuple[Partition, int], int]


def _clean(parts: Sequence[int]) -> Partition:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def _horizontal_strips(shape: Partition, size: int,
                       max_rows: Optional[int]) -> Iterator[Partition]:
    """kappa' contendo kappa com kappa'/kappa faixa horizontal de tamanho size"""
    if max_rows is not None and len(shape) > max_rows:
        return
    rows = list(shape) + [0]
    if max_rows is not None:
        rows = rows[:max_rows]

    def grow(i: int, remaining: int, built: List[int]) -> Iterator[Partition]:
        if i == len(rows):
            if remaining == 0:
                yield _clean(built)
            return
        # kappa'_i <= kappa_{i-1}
        upper = remaining if i == 0 else min(remaining, rows[i - 1] - rows[i])
        for extra in range(upper, -1, -1):
            yield from grow(i + 1, remaining - extra, built + [rows[i] + extra])

    yield from grow(0, size, [])


def _lattice_ok(filling: Dict[Tuple[int, int], int], shape: Partition) -> bool:
    """Palavra de leitura (linhas de cima para baixo, cada uma da direita para a esquerda)"""
    counts: Dict[int, int] = {}
    for r in range(len(shape)):
        for c in range(shape[r] - 1, -1, -1):
            label = filling.get((r, c))
            if label is None:
                continue
            counts[label] = counts.get(label, 0) + 1
            if label > 1 and counts[label] > counts.get(label - 1, 0):
                return False
    return True


def lr_product(lam: Sequence[int], mu: Sequence[int],
               max_rows: Optional[int] = None) -> Dict[Partition, int]:
    """
    Expansão de Littlewood-Richardson s_lam · s_mu por contagem de tableaux LR.

    Args:
        lam, mu: partições
        max_rows: descarta partições com mais linhas (Gr(k,n) usa k)

    Returns:
        Mapa partição -> multiplicidade
    """
    lam = _clean(lam)
    mu = _clean(mu)
    # estados: (forma atual, preenchimento das células novas)
    states = [(lam, {})]
    for label, size in enumerate(mu, start=1):
        nxt = []
        for shape, filling in states:
            for grown in _horizontal_strips(shape, size, max_rows):
                new_fill = dict(filling)
                for r, length in enumerate(grown):
                    start = shape[r] if r < len(shape) else 0
                    for c in range(start, length):
                        new_fill[(r, c)] = label
                nxt.append((grown, new_fill))
        states = nxt

    result: Dict[Partition, int] = {}
    for shape, filling in states:
        if _lattice_ok(filling, shape):
            result[shape] = result.get(shape, 0) + 1
    return result


def _pieri_h(lam: Partition, m: int, max_rows: Optional[int]) -> Dict[Partition, int]:
    if m < 0:
        return {}
    return {nu: 1 for nu in _horizontal_strips(lam, m, max_rows)}


def pieri_product(lam: Sequence[int], mu: Sequence[int],
                  max_rows: Optional[int] = None) -> Dict[Partition, int]:
    """
    s_lam · s_mu via Jacobi-Trudi s_mu = det(h_{mu_i - i + j}) e regras de Pieri.
    Caminho independente usado para conferir lr_product.
    """
    mu = _clean(mu)
    ell = len(mu)
    total: Dict[Partition, int] = {}
    for perm in permutations(range(ell)):
        sign = 1
        for i in range(ell):
            for j in range(i + 1, ell):
                if perm[i] > perm[j]:
                    sign = -sign
        degrees = [mu[i] - i + perm[i] for i in range(ell)]
        if any(d < 0 for d in degrees):
            continue
        current = {_clean(lam): 1}
        for d in degrees:
            nxt: Dict[Partition, int] = {}
            for shape, coeff in current.items():
                for grown in _pieri_h(shape, d, max_rows):
                    nxt[grown] = nxt.get(grown, 0) + coeff
            current = nxt
        for shape, coeff in current.items():
            total[shape] = total.get(shape, 0) + sign * coeff
    return {shape: c for shape, c in total.items() if c}


def rim_hook_reduce(partition: Sequence[int], k: int, n: int) -> Optional[Tuple[int, int, Partition]]:
    """
    Remove n-rim hooks até a partição caber em k x (n-k).

    Returns:
        (sinal, grau em q, partição reduzida), ou None quando a remoção é mal formada
    """
    parts = _clean(partition)
    if len(parts) > k:
        return None
    padded = list(parts) + [0] * (k - len(parts))
    beta = sorted((padded[i] + k - 1 - i for i in range(k)), reverse=True)

    sign = 1
    q_degree = 0
    while beta[0] >= n:
        top = beta[0]
        new = top - n
        if new in beta:
            return None
        height = 1 + sum(1 for b in beta if new < b < top)
        if (k - height) % 2:
            sign = -sign
        q_degree += 1
        beta = sorted([new] + beta[1:], reverse=True)

    return sign, q_degree, _clean(beta[i] - (k - 1 - i) for i in range(k))


def qh_product(k: int, n: int, lam: Sequence[int], mu: Sequence[int]) -> QHExpr:
    """X^lam ⋆ X^mu em QH(Gr(k,n))"""
    result: QHExpr = {}
    for nu, mult in lr_product(lam, mu, max_rows=k).items():
        reduced = rim_hook_reduce(nu, k, n)
        if reduced is None:
            continue
        sign, degree, shape = reduced
        key = (shape, degree)
        result[key] = result.get(key, 0) + sign * mult
    return {key: c for key, c in result.items() if c}


def negative_terms(expr: QHExpr) -> List[Tuple[Partition, int]]:
    return [key for key, c in expr.items() if c < 0]


def complement(k: int, n: int, lam: Sequence[int]) -> Partition:
    """lambda^vee_i = (n-k) - lambda_{k+1-i}"""
    padded = list(lam) + [0] * (k - len(lam))
    return _clean((n - k) - padded[k - 1 - i] for i in range(k))


def distance_oracle(k: int, n: int, mu: Sequence[int], lam: Sequence[int]) -> int:
    """
    Menor grau de q com coeficiente não-nulo em X^mu ⋆ X_lambda = X^mu ⋆ X^{lambda^vee}.

    Raises:
        InvariantError: produto nulo ou com coeficientes negativos
    """
    product = qh_product(k, n, mu, complement(k, n, lam))
    if not product:
        raise InvariantError(f"Produto nulo em QH(Gr({k},{n})) para {list(mu)}, {list(lam)}")
    if negative_terms(product):
        raise InvariantError(f"Coeficientes negativos em QH(Gr({k},{n})): {negative_terms(product)}")
    return min(degree for (_, degree) in product)


def partitions_in_box(k: int, n: int) -> List[Partition]:
    """Todas as partições em k x (n-k), ordenadas por tamanho"""
    result = []

    def build(i: int, cap: int, built: List[int]) -> None:
        if i == k:
            result.append(_clean(built))
            return
        for part in range(cap, -1, -1):
            build(i + 1, part, built + [part])

    build(0, n - k, [])
    return sorted(result, key=lambda p: (sum(p), p))
