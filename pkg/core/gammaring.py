#!/usr/bin/env python3
"""
Anel Gamma - Core
QK Cominúsculo

Aritmética exata em Gamma = K^T(ponto): combinações inteiras de caracteres
[C_w], com [C_a]·[C_b] = [C_{a+b}]. Também calcula os pesos J_u e sqrt(J_v J_w).

Dois reticulados convivem: o de pesos fundamentais (tipo SL) e Z^n do toro de
GL(n), usado pelo módulo grassq e renderizado como T1*T2*...
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import DomainError
from .models import Shape
from .poset import CominusculePoset
from .shapes import to_weyl

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


def _add(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        # constantes inteiras se combinam com qualquer reticulado
        if not any(a):
            return b
        if not any(b):
            return a
        raise DomainError(f"Pesos de reticulados diferentes: {a} e {b}")
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


@dataclass(frozen=True)
class WeightMonomial:
    """Caractere invertível sign·[C_weight]"""
    weight: Weight
    sign: int = 1

    def __mul__(self, other: "WeightMonomial") -> "WeightMonomial":
        return WeightMonomial(_add(self.weight, other.weight), self.sign * other.sign)

    def __truediv__(self, other: "WeightMonomial") -> "WeightMonomial":
        return self * other.inverse()

    def inverse(self) -> "WeightMonomial":
        return WeightMonomial(_neg(self.weight), self.sign)

    def to_poly(self) -> "WeightPoly":
        return WeightPoly({self.weight: self.sign})


class WeightPoly:
    """Elemento de Gamma: mapa peso -> coeficiente inteiro não-nulo"""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Sequence[int], int]] = None):
        clean: Dict[Weight, int] = {}
        for w, c in (terms or {}).items():
            c = int(c)
            if c:
                key = tuple(int(x) for x in w)
                clean[key] = clean.get(key, 0) + c
                if clean[key] == 0:
                    del clean[key]
        self.terms = clean

    @classmethod
    def zero(cls) -> "WeightPoly":
        return cls()

    @classmethod
    def one(cls, rank: int) -> "WeightPoly":
        return cls({(0,) * rank: 1})

    @classmethod
    def constant(cls, value: int, rank: int) -> "WeightPoly":
        return cls({(0,) * rank: value})

    @classmethod
    def monomial(cls, weight: Sequence[int], coeff: int = 1) -> "WeightPoly":
        return cls({tuple(weight): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def as_monomial(self) -> WeightMonomial:
        if len(self.terms) != 1:
            raise DomainError("Elemento de Gamma não é monômio")
        (w, c), = self.terms.items()
        if c not in (1, -1):
            raise DomainError(f"Coeficiente {c} não é invertível")
        return WeightMonomial(w, c)

    def inverse(self) -> "WeightPoly":
        return self.as_monomial().inverse().to_poly()

    def __add__(self, other: "WeightPoly") -> "WeightPoly":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return WeightPoly(terms)

    def __neg__(self) -> "WeightPoly":
        return WeightPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "WeightPoly") -> "WeightPoly":
        return self + (-other)

    def __mul__(self, other: Union["WeightPoly", WeightMonomial, int]) -> "WeightPoly":
        if isinstance(other, int):
            return WeightPoly({w: c * other for w, c in self.terms.items()})
        if isinstance(other, WeightMonomial):
            other = other.to_poly()
        terms: Dict[Weight, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = _add(w1, w2)
                terms[w] = terms.get(w, 0) + c1 * c2
        return WeightPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["WeightPoly", WeightMonomial]) -> "WeightPoly":
        """Divisão só por monômios"""
        if isinstance(other, WeightPoly):
            other = other.as_monomial()
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"WeightPoly({self.terms})"

    def sorted_terms(self) -> List[Tuple[Weight, int]]:
        return sorted(self.terms.items())

    def to_json(self) -> List[dict]:
        return [{"w": list(w), "c": c} for w, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "WeightPoly":
        return cls({tuple(item["w"]): item["c"] for item in data})

    def format(self, gl: bool = False) -> str:
        """Texto legível: caracteres SL como C(w), GL como T1*T2"""
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = format_gl_monomial(w) if gl else format_sl_monomial(w)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def format_sl_monomial(weight: Sequence[int]) -> str:
    if not any(weight):
        return "1"
    return "C(" + ",".join(str(x) for x in weight) + ")"


def format_gl_monomial(weight: Sequence[int]) -> str:
    """Monômio do toro de GL(n): T1*T3, T2^-1, ..."""
    if not any(weight):
        return "1"
    factors = []
    for i, e in enumerate(weight, start=1):
        if e == 1:
            factors.append(f"T{i}")
        elif e:
            factors.append(f"T{i}^{e}")
    return "*".join(factors)


def restrict_nonequivariant(p: WeightPoly) -> int:
    """Todo caractere vai para 1: soma dos coeficientes"""
    return sum(p.terms.values())


# ==================== PESOS J ====================

def omega_gamma(poset: CominusculePoset) -> Weight:
    rs = poset.root_system
    return rs.fundamental_weight(poset.space.gamma_index)


@lru_cache(maxsize=None)
def J_weight(poset: CominusculePoset, u: Shape) -> Weight:
    """u.omega_gamma - omega_gamma"""
    omega = omega_gamma(poset)
    image = to_weyl(poset, u).apply(omega)
    return tuple(a - b for a, b in zip(image, omega))


def J(poset: CominusculePoset, u: Shape) -> WeightMonomial:
    return WeightMonomial(J_weight(poset, u))


def delta_weight(poset: CominusculePoset, boxes: Shape) -> Weight:
    """delta(w/v): soma dos pesos das raízes simples delta das caixas"""
    rs = poset.root_system
    total = np.zeros(rs.rank, dtype=np.int64)
    for b in boxes.boxes():
        total += rs.cartan[:, poset.boxes[b].delta]
    return tuple(int(x) for x in total)


def sqrtJ(poset: CominusculePoset, v: Shape, w: Shape) -> WeightMonomial:
    """
    sqrt(J_v J_w) = [C_{v.omega - omega - delta(w/v)}].

    Raises:
        DomainError: se v não estiver contido em w
    """
    if not v.issubset(w):
        raise DomainError("sqrtJ exige v <= w")
    base = J_weight(poset, v)
    delta = delta_weight(poset, w - v)
    return WeightMonomial(tuple(a - b for a, b in zip(base, delta)))
