#!/usr/bin/env python3
"""
K-Teoria Quântica - Core
QK Cominúsculo

Expressões de Schubert, feixes ideais, alpha^mu, feixes ideais quantizados,
produtos de Chevalley clássico e quântico, a métrica K quântica e os
verificadores de dualidade.

Todas as expressões vivem em uma base explícita (BasisTag); aritmética entre
bases diferentes é rejeitada.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .curves import distance, psi_shape
from .errors import DomainError, InvariantError
from .gammaring import J, WeightMonomial, WeightPoly, restrict_nonequivariant, sqrtJ
from .models import BasisTag, Shape
from .poset import CominusculePoset
from .shapes import addable_boxes, classify_skew, dual, enumerate_shapes, rook_strips, to_partition

logger = logging.getLogger(__name__)

Scalar = Union["QPoly", WeightPoly, WeightMonomial, int]


# ==================== POLINÔMIOS EM q ====================

class QPoly:
    """Polinômio em q com coeficientes em Gamma"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, WeightPoly]] = None):
        self.coeffs: Dict[int, WeightPoly] = {}
        for d, p in (coeffs or {}).items():
            if d < 0:
                raise DomainError(f"Grau negativo em q: {d}")
            if not p.is_zero():
                self.coeffs[d] = p

    @classmethod
    def constant(cls, p: WeightPoly, degree: int = 0) -> "QPoly":
        return cls({degree: p})

    @classmethod
    def integer(cls, value: int, rank: int, degree: int = 0) -> "QPoly":
        return cls({degree: WeightPoly.constant(value, rank)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, degree: int) -> WeightPoly:
        return self.coeffs.get(degree, WeightPoly())

    @property
    def max_degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    @property
    def min_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else -1

    def shift(self, d: int) -> "QPoly":
        """q^d · self"""
        return QPoly({k + d: p for k, p in self.coeffs.items()})

    def at_one(self) -> WeightPoly:
        total = WeightPoly()
        for p in self.coeffs.values():
            total = total + p
        return total

    def times_one_minus_q(self) -> "QPoly":
        return self - self.shift(1)

    def nonequivariant(self) -> Dict[int, int]:
        result = {d: restrict_nonequivariant(p) for d, p in self.coeffs.items()}
        return {d: c for d, c in result.items() if c}

    def __add__(self, other: "QPoly") -> "QPoly":
        coeffs = dict(self.coeffs)
        for d, p in other.coeffs.items():
            coeffs[d] = coeffs[d] + p if d in coeffs else p
        return QPoly(coeffs)

    def __neg__(self) -> "QPoly":
        return QPoly({d: -p for d, p in self.coeffs.items()})

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: Scalar) -> "QPoly":
        if isinstance(other, QPoly):
            coeffs: Dict[int, WeightPoly] = {}
            for d1, p1 in self.coeffs.items():
                for d2, p2 in other.coeffs.items():
                    prod = p1 * p2
                    coeffs[d1 + d2] = coeffs[d1 + d2] + prod if d1 + d2 in coeffs else prod
            return QPoly(coeffs)
        return QPoly({d: p * other for d, p in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"QPoly({self.coeffs})"


@dataclass
class QRational:
    """numerador / (1-q)^denom_pow, com denom_pow em {0, 1}"""
    numerator: QPoly
    denom_pow: int = 1

    def normalized(self) -> "QRational":
        """Cancela (1-q) quando N(1) = 0: Q_k = soma_{j<=k} N_j"""
        if self.numerator.is_zero():
            return QRational(QPoly(), 0)
        if self.denom_pow == 0 or not self.numerator.at_one().is_zero():
            return self
        quotient: Dict[int, WeightPoly] = {}
        running = WeightPoly()
        for d in range(self.numerator.max_degree + 1):
            running = running + self.numerator.coefficient(d)
            quotient[d] = running
        return QRational(QPoly(quotient), 0)

    @property
    def is_polynomial(self) -> bool:
        return self.normalized().denom_pow == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QRational):
            return NotImplemented
        left = self.numerator
        right = other.numerator
        for _ in range(other.denom_pow):
            left = left.times_one_minus_q()
        for _ in range(self.denom_pow):
            right = right.times_one_minus_q()
        return left == right


# ==================== EXPRESSÕES DE SCHUBERT ====================

@dataclass(eq=False)
class SchubertExpr:
    """Combinação finita Shape -> QPoly numa base fixa"""
    poset: CominusculePoset
    basis: BasisTag
    terms: Dict[Shape, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {s: c for s, c in self.terms.items() if not c.is_zero()}

    def _check(self, other: "SchubertExpr") -> None:
        if other.poset is not self.poset:
            raise DomainError("Expressões de espaços diferentes")
        if other.basis != self.basis:
            raise DomainError(f"Bases incompatíveis: {self.basis.value} e {other.basis.value}")

    def __add__(self, other: "SchubertExpr") -> "SchubertExpr":
        self._check(other)
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms[s] + c if s in terms else c
        return SchubertExpr(self.poset, self.basis, terms)

    def __neg__(self) -> "SchubertExpr":
        return SchubertExpr(self.poset, self.basis, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "SchubertExpr") -> "SchubertExpr":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "SchubertExpr":
        return SchubertExpr(self.poset, self.basis, {s: c * scalar for s, c in self.terms.items()})

    __rmul__ = __mul__

    def times_q(self, d: int = 1) -> "SchubertExpr":
        return SchubertExpr(self.poset, self.basis, {s: c.shift(d) for s, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertExpr):
            return NotImplemented
        return (other.poset is self.poset and other.basis == self.basis
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, s: Shape) -> QPoly:
        return self.terms.get(s, QPoly())

    def sorted_terms(self) -> List[Tuple[Shape, QPoly]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key)

    @property
    def max_q_degree(self) -> int:
        return max((c.max_degree for c in self.terms.values()), default=-1)

    def nonequivariant(self) -> Dict[Tuple[Shape, int], int]:
        result = {}
        for s, c in self.terms.items():
            for d, value in c.nonequivariant().items():
                result[(s, d)] = value
        return result


def _constant(poset: CominusculePoset, value: int) -> QPoly:
    return QPoly.integer(value, poset.root_system.rank)


def _mono(m: WeightMonomial) -> QPoly:
    return QPoly.constant(m.to_poly())


def schubert_class(poset: CominusculePoset, s: Shape, basis: BasisTag = BasisTag.OPPOSITE) -> SchubertExpr:
    return SchubertExpr(poset, basis, {s: _constant(poset, 1)})


# ==================== FEIXES IDEAIS ====================

def ideal_sheaf(poset: CominusculePoset, mu: Shape) -> SchubertExpr:
    """I^mu = soma sobre rook strips nu/mu de (-1)^{l(nu/mu)} O^nu"""
    terms = {nu: _constant(poset, (-1) ** size) for nu, size in rook_strips(poset, mu)}
    return SchubertExpr(poset, BasisTag.OPPOSITE, terms)


def alpha(poset: CominusculePoset, mu: Shape) -> SchubertExpr:
    """alpha^mu: soma sobre epsilon/mu curto de sqrt(J_mu J_eps)/(J_mu J_eps) O^eps"""
    j_mu = J(poset, mu)
    terms = {}
    for eps in enumerate_shapes(poset):
        if not classify_skew(poset, eps, mu).is_short:
            continue
        coeff = sqrtJ(poset, mu, eps) / (j_mu * J(poset, eps))
        terms[eps] = _mono(coeff)
    return SchubertExpr(poset, BasisTag.OPPOSITE, terms)


def expand_to_opposite(expr: SchubertExpr, debug: bool = False) -> SchubertExpr:
    """Reescreve uma expressão nas bases I ou I_q na base O^lambda"""
    if expr.basis == BasisTag.OPPOSITE:
        return expr
    result = SchubertExpr(expr.poset, BasisTag.OPPOSITE)
    for nu, coeff in expr.terms.items():
        if expr.basis == BasisTag.IDEAL:
            element = ideal_sheaf(expr.poset, nu)
        else:
            element = quantized_ideal_sheaf(expr.poset, nu, debug=debug)
        result = result + element * coeff
    return result


@dataclass(eq=False)
class ChevalleyProduct:
    """O^mu · (1 - O^{s_gamma}) em duas formas"""
    mu: Shape
    ideal_form: SchubertExpr
    opposite: SchubertExpr


def _short_strip_form(poset: CominusculePoset, mu: Shape, basis: BasisTag) -> SchubertExpr:
    terms = {}
    for nu, size in rook_strips(poset, mu, short_only=True):
        root = sqrtJ(poset, mu, nu)
        terms[nu] = _mono(root) * ((-1) ** size)
    return SchubertExpr(poset, basis, terms)


def chevalley_classical(poset: CominusculePoset, mu: Shape) -> ChevalleyProduct:
    """
    Fórmula de Chevalley clássica na base dos feixes ideais:
    O^mu · (1 - O^{s_gamma}) = soma sobre rook strips curtos nu/mu de
    (-1)^l sqrt(J_mu J_nu) I^nu.
    """
    ideal_form = _short_strip_form(poset, mu, BasisTag.IDEAL)
    return ChevalleyProduct(mu, ideal_form, expand_to_opposite(ideal_form))


def alpha_identity_check(poset: CominusculePoset, mu: Shape) -> bool:
    """alpha^mu · (1 - O^{s_gamma}) == I^mu, exato e equivariante"""
    lhs = SchubertExpr(poset, BasisTag.OPPOSITE)
    for eps, coeff in alpha(poset, mu).terms.items():
        lhs = lhs + chevalley_classical(poset, eps).opposite * coeff
    return lhs == ideal_sheaf(poset, mu)


def psi_expr(expr: SchubertExpr) -> SchubertExpr:
    """Linearização de psi: O^nu -> O^{nu(-1)}"""
    if expr.basis != BasisTag.OPPOSITE:
        raise DomainError("psi só se aplica na base O^lambda")
    result = SchubertExpr(expr.poset, BasisTag.OPPOSITE)
    for nu, coeff in expr.terms.items():
        result = result + SchubertExpr(expr.poset, BasisTag.OPPOSITE,
                                       {psi_shape(expr.poset, nu): coeff})
    return result


def lifted_addable(poset: CominusculePoset, mu: Shape) -> List[int]:
    """Caixas adicionáveis de mu transladadas pelo deslocamento NW (exige z1 <= mu)"""
    dr, dc = poset.nw_shift
    lifted = []
    for b in addable_boxes(poset, mu):
        r, c = poset.boxes[b].grid_pos
        target = poset.box_at((r - dr, c - dc))
        if target is None:
            raise InvariantError(f"Caixa adicionável {(r, c)} sai da grade após psi")
        lifted.append(target)
    return sorted(lifted)


def psi_ideal_sheaf(poset: CominusculePoset, mu: Shape) -> SchubertExpr:
    """
    psi(I^mu) sem aplicar psi termo a termo.

    Zero se z1 não está em mu. Caso contrário é a soma alternada sobre os
    subconjuntos das caixas adicionáveis de mu transladadas, colocadas sobre
    mu(-1); quando essas caixas esgotam as adicionáveis de mu(-1) o resultado é
    I^{mu(-1)}. Na borda da grade (ex.: mu cheio em Gr(2,4)) sobram caixas
    adicionáveis de mu(-1) sem pré-imagem e a soma é truncada.
    """
    if not poset.z1.issubset(mu):
        return SchubertExpr(poset, BasisTag.OPPOSITE)

    base = psi_shape(poset, mu)
    lifted = lifted_addable(poset, mu)
    if lifted == addable_boxes(poset, base):
        return ideal_sheaf(poset, base)

    logger.debug(f"psi(I^{to_label(poset, mu)}) truncado: {len(lifted)} caixas transladadas")
    terms = {}
    for size in range(len(lifted) + 1):
        for subset in combinations(lifted, size):
            bits = base.bits
            for b in subset:
                bits |= 1 << b
            terms[Shape(bits)] = _constant(poset, (-1) ** size)
    return SchubertExpr(poset, BasisTag.OPPOSITE, terms)


def quantized_ideal_sheaf(poset: CominusculePoset, mu: Shape, debug: bool = False) -> SchubertExpr:
    """
    I_q^mu = I^mu - q psi(I^mu).

    Caminho rápido via psi_ideal_sheaf: zero se z1 não está em mu, I^{mu(-1)}
    (ou sua versão truncada na borda) caso contrário.

    Args:
        poset: Poset cominúsculo
        mu: Shape
        debug: se True, calcula também o caminho direto e compara

    Raises:
        InvariantError: caminho rápido e direto divergem (modo debug)
    """
    ideal = ideal_sheaf(poset, mu)
    fast = ideal - psi_ideal_sheaf(poset, mu).times_q(1)

    if debug:
        direct = ideal - psi_expr(ideal).times_q(1)
        if direct != fast:
            raise InvariantError(f"I_q diverge do caminho direto para {to_label(poset, mu)}")
    return fast


@dataclass(eq=False)
class QuantumChevalley:
    """O^mu ⋆ (1 - O^{s_gamma}) na base O e na base I_q"""
    mu: Shape
    opposite: SchubertExpr
    qideal_form: SchubertExpr


def chevalley_quantum(poset: CominusculePoset, mu: Shape, debug: bool = False) -> QuantumChevalley:
    """
    Produto de Chevalley quântico: clássico - q psi(clássico), conferido contra a
    forma em feixes ideais quantizados sobre rook strips curtos.

    Raises:
        InvariantError: as duas formas não coincidem após expansão
    """
    classical = chevalley_classical(poset, mu).opposite
    quantum = classical - psi_expr(classical).times_q(1)
    qideal_form = _short_strip_form(poset, mu, BasisTag.QIDEAL)
    if expand_to_opposite(qideal_form, debug=debug) != quantum:
        raise InvariantError(f"Chevalley quântico inconsistente para {to_label(poset, mu)}")
    return QuantumChevalley(mu, quantum, qideal_form)


# ==================== MÉTRICA K QUÂNTICA ====================

def _require_opposite(expr: SchubertExpr) -> None:
    if expr.basis != BasisTag.OPPOSITE:
        raise DomainError("Pareamento exige expressão na base O^lambda")


def qk_pairing(poset: CominusculePoset, a: SchubertExpr, lam: Shape) -> QRational:
    """((a, O_lambda)) = soma_nu a_nu q^{d(nu, lambda)} / (1-q)"""
    _require_opposite(a)
    numerator = QPoly()
    for nu, coeff in a.terms.items():
        numerator = numerator + coeff.shift(distance(poset, nu, lam))
    return QRational(numerator, 1).normalized()


def classical_pairing(poset: CominusculePoset, a: SchubertExpr, lam: Shape) -> WeightPoly:
    """
    chi_X(a · O_lambda): restrição q -> 0 da métrica quântica.

    Raises:
        DomainError: se a tiver termos de grau positivo em q
    """
    _require_opposite(a)
    if a.max_q_degree > 0:
        raise DomainError("Pareamento clássico exige grau 0 em q")
    total = WeightPoly()
    for nu, coeff in a.terms.items():
        if nu.issubset(lam):
            total = total + coeff.coefficient(0)
    return total


def duality_row(poset: CominusculePoset, mu: Shape, lambdas: Iterable[Shape],
                debug: bool = False) -> Tuple[int, List[dict]]:
    """
    Confere soma_nu eps_nu q^{e_nu + d(nu,lambda)} = delta(1-q) para um mu fixo.

    Returns:
        (pares conferidos, lista de falhas)
    """
    qideal = quantized_ideal_sheaf(poset, mu, debug=debug)
    rank = poset.root_system.rank
    one = WeightPoly.constant(1, rank)
    checked = 0
    failures = []
    for lam in lambdas:
        checked += 1
        numerator = QPoly()
        for nu, coeff in qideal.terms.items():
            numerator = numerator + coeff.shift(distance(poset, nu, lam))
        expected = QPoly({0: one, 1: -one}) if lam == mu else QPoly()
        if numerator != expected:
            failures.append({
                "caso": f"lambda={to_label(poset, lam)} mu={to_label(poset, mu)}",
                "verificacao": "duality",
                "descricao": "((O_lambda, I_q^mu)) != delta",
                "observacao": str(numerator.nonequivariant()),
            })
    return checked, failures


@dataclass
class DualityReport:
    """Resultado de uma verificação de dualidade"""
    space: str
    pairs: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_duality(poset: CominusculePoset, debug: bool = False) -> DualityReport:
    """((O_lambda, I_q^mu)) = delta_{lambda mu} para todos os pares"""
    shapes = enumerate_shapes(poset)
    report = DualityReport(poset.space.label)
    for mu in shapes:
        checked, failures = duality_row(poset, mu, shapes, debug=debug)
        report.pairs += checked
        report.failures.extend(failures)
    return report


def classical_duality_row(poset: CominusculePoset, mu: Shape,
                          lambdas: Iterable[Shape]) -> Tuple[int, List[dict]]:
    """(I^mu, O_lambda) = delta_{lambda mu} para um mu fixo"""
    ideal = ideal_sheaf(poset, mu)
    checked = 0
    failures = []
    for lam in lambdas:
        checked += 1
        value = restrict_nonequivariant(classical_pairing(poset, ideal, lam))
        expected = 1 if lam == mu else 0
        if value != expected:
            failures.append({
                "caso": f"lambda={to_label(poset, lam)} mu={to_label(poset, mu)}",
                "verificacao": "classical",
                "descricao": "(I^mu, O_lambda) != delta",
                "observacao": f"obtido {value}, esperado {expected}",
            })
    return checked, failures


def verify_classical_duality(poset: CominusculePoset) -> DualityReport:
    shapes = enumerate_shapes(poset)
    report = DualityReport(poset.space.label)
    for mu in shapes:
        checked, failures = classical_duality_row(poset, mu, shapes)
        report.pairs += checked
        report.failures.extend(failures)
    return report


# ==================== CONSTANTES DE ESTRUTURA ====================

def structure_constants(poset: CominusculePoset, a: SchubertExpr) -> SchubertExpr:
    """
    Coeficientes de a na base O^w via ((a, I^q_w)), sem recursão.

    I^q_w é o feixe ideal quantizado inferior, obtido no nível de shapes por
    I^q_w = soma_tau eps_tau q^{e_tau} O_{tau^vee} com I_q^{w^vee} = soma eps_tau q^{e_tau} O^tau.

    Raises:
        InvariantError: se algum coeficiente não for polinomial em q
    """
    _require_opposite(a)
    result = {}
    for w in enumerate_shapes(poset):
        lower = quantized_ideal_sheaf(poset, dual(poset, w))
        numerator = QPoly()
        for nu, a_nu in a.terms.items():
            for tau, eps in lower.terms.items():
                numerator = numerator + (a_nu * eps).shift(distance(poset, nu, dual(poset, tau)))
        value = QRational(numerator, 1).normalized()
        if value.denom_pow != 0:
            raise InvariantError(f"Constante de estrutura não polinomial em {to_label(poset, w)}")
        result[w] = value.numerator
    return SchubertExpr(poset, BasisTag.OPPOSITE, result)


def to_label(poset: CominusculePoset, s: Shape) -> str:
    return "[" + ",".join(str(x) for x in to_partition(poset, s)) + "]"
