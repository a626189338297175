#!/usr/bin/env python3
"""
Grassmannianas - Core
QK Cominúsculo

Aplicação a X = Gr(k,n): permutações Grassmannianas, caracteres T_i do toro de
GL(n) e o produto fechado det Q ⋆ O^mu.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .curves import distance
from .errors import DomainError
from .gammaring import WeightPoly
from .models import BasisTag, Shape, SpaceKind
from .poset import CominusculePoset, build_poset, build_space
from .qkcore import QPoly, SchubertExpr, quantized_ideal_sheaf
from .rootcore import WeylElement
from .shapes import enumerate_shapes, from_partition, to_partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrassPermutation:
    """Permutação com única descida na posição k"""
    one_line: Tuple[int, ...]
    k: int

    @property
    def I(self) -> Tuple[int, ...]:
        return tuple(sorted(self.one_line[:self.k]))

    @property
    def J(self) -> Tuple[int, ...]:
        return tuple(sorted(self.one_line[self.k:]))

    def __str__(self) -> str:
        sep = "" if len(self.one_line) < 10 else " "
        return sep.join(str(x) for x in self.one_line)


def _check_partition(k: int, n: int, lam: Sequence[int]) -> List[int]:
    parts = [int(x) for x in lam]
    while parts and parts[-1] == 0:
        parts.pop()
    if len(parts) > k or any(x > n - k or x < 0 for x in parts):
        raise DomainError(f"Partição {parts} não cabe em {k}x{n - k}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise DomainError(f"{parts} não é partição")
    return parts + [0] * (k - len(parts))


def grass_perm(k: int, n: int, lam: Sequence[int]) -> GrassPermutation:
    """w_lambda(i) = i + lambda_{k-i+1} para 1 <= i <= k"""
    parts = _check_partition(k, n, lam)
    first = [i + parts[k - i] for i in range(1, k + 1)]
    rest = [j for j in range(1, n + 1) if j not in first]
    return GrassPermutation(tuple(first + rest), k)


def gl_monomial(n: int, indices: Sequence[int]) -> WeightPoly:
    """Produto dos T_j (índices base 1) como monômio de Z^n"""
    exps = [0] * n
    for j in indices:
        exps[j - 1] += 1
    return WeightPoly.monomial(exps)


def lambda_character(k: int, n: int, lam: Sequence[int]) -> WeightPoly:
    """[C_{-lambda.omega_gamma}]·det(C^n) = produto de T_j sobre J_lambda"""
    return gl_monomial(n, grass_perm(k, n, lam).J)


def det_character(n: int) -> WeightPoly:
    return gl_monomial(n, range(1, n + 1))


def grassmannian_poset(k: int, n: int) -> CominusculePoset:
    return build_poset(build_space(SpaceKind.GR, k, n))


def detq_product(k: int, n: int, mu: Sequence[int]) -> SchubertExpr:
    """
    det Q ⋆ O^mu = soma_lambda [C_{-lambda.omega}] det(C^n) q^{d(mu,lambda)} O^lambda.

    Args:
        k, n: Gr(k,n)
        mu: partição em k x (n-k)

    Returns:
        SchubertExpr na base O^lambda com coeficientes no reticulado GL(n)
    """
    _check_partition(k, n, mu)
    poset = grassmannian_poset(k, n)
    mu_shape = from_partition(poset, mu)
    terms = {}
    for lam in enumerate_shapes(poset):
        char = lambda_character(k, n, to_partition(poset, lam))
        terms[lam] = QPoly.constant(char, distance(poset, mu_shape, lam))
    return SchubertExpr(poset, BasisTag.OPPOSITE, terms)


def detq_sign_failures(k: int, n: int) -> List[dict]:
    """Coeficientes de det Q ⋆ O^mu devem ser monômios positivos únicos"""
    poset = grassmannian_poset(k, n)
    failures = []
    for mu in enumerate_shapes(poset):
        parts = to_partition(poset, mu)
        for lam, coeff in detq_product(k, n, parts).terms.items():
            ok = len(coeff.coeffs) == 1 and all(
                len(p.terms) == 1 and all(c == 1 for c in p.terms.values())
                for p in coeff.coeffs.values()
            )
            if not ok:
                failures.append({
                    "caso": f"Gr({k},{n}) mu={parts} lambda={to_partition(poset, lam)}",
                    "verificacao": "detq",
                    "descricao": "coeficiente de det Q ⋆ O^mu não é monômio positivo",
                    "observacao": repr(coeff),
                })
    return failures


def dets_detq_check(k: int, n: int) -> bool:
    """
    det S ⋆ det Q = (1-q) det(C^n) O^emptyset, usando det S = [C_omega](1 - O^{s_gamma})
    e a forma de Chevalley quântica em feixes ideais quantizados.
    """
    poset = grassmannian_poset(k, n)
    total = SchubertExpr(poset, BasisTag.OPPOSITE)
    for lam in enumerate_shapes(poset):
        perm = grass_perm(k, n, to_partition(poset, lam))
        # [C_omega]·J_lambda = [C_{lambda.omega}] = produto de T_i sobre I_lambda
        coeff = lambda_character(k, n, to_partition(poset, lam)) * gl_monomial(n, perm.I)
        total = total + quantized_ideal_sheaf(poset, lam) * coeff
    det = det_character(n)
    expected = SchubertExpr(poset, BasisTag.OPPOSITE,
                            {Shape(0): QPoly({0: det, 1: -det})})
    return total == expected


# ==================== RETICULADOS SL / GL ====================

def gl_to_sl(x: Sequence[int]) -> Tuple[int, ...]:
    """c_i = x_i - x_{i+1}: Z^n -> pesos fundamentais de SL(n)"""
    return tuple(int(x[i] - x[i + 1]) for i in range(len(x) - 1))


def sl_to_gl(c: Sequence[int]) -> Tuple[int, ...]:
    """Representante com última coordenada 0"""
    x = [0] * (len(c) + 1)
    for i in range(len(c) - 1, -1, -1):
        x[i] = x[i + 1] + int(c[i])
    return tuple(x)


def gl_lift_J(k: int, n: int, lam: Sequence[int]) -> Tuple[int, ...]:
    """Peso de J_lambda em Z^n: e_{I_lambda} - (e_1 + ... + e_k)"""
    perm = grass_perm(k, n, lam)
    x = [0] * n
    for i in perm.I:
        x[i - 1] += 1
    for i in range(k):
        x[i] -= 1
    return tuple(x)


def weyl_to_permutation(w: WeylElement) -> Tuple[int, ...]:
    """Notação de uma linha de w em S_n, a partir da ação sobre rho"""
    rank = w.matrix.shape[0]
    n = rank + 1
    image = sl_to_gl(w.apply([1] * rank))
    low = min(image)
    y = [v - low for v in image]
    position = {value: j + 1 for j, value in enumerate(y)}
    return tuple(position[n - i] for i in range(1, n + 1))
