"""
Schemas Pydantic - Documentos JSON da linha de comando
"""
from typing import List, Optional

from pydantic import BaseModel, Field

from core.errors import DomainError
from core.gammaring import WeightPoly
from core.models import BasisTag
from core.poset import CominusculePoset
from core.qkcore import QPoly, SchubertExpr
from core.shapes import from_partition, to_partition


# ==================== EXPRESSÕES ====================

class WeightTerm(BaseModel):
    """Termo c·[C_w] de um coeficiente em Gamma"""
    w: List[int] = Field(..., description="Peso em coordenadas de pesos fundamentais (ou Z^n em GL)")
    c: int = Field(..., description="Coeficiente inteiro")


class ExprTerm(BaseModel):
    """Termo coeff · q^q · B^shape"""
    shape: List[int] = Field(..., description="Shape em forma de partição")
    q: int = Field(0, ge=0, description="Grau em q")
    coeff: List[WeightTerm]


class ExprDocument(BaseModel):
    """Expressão de Schubert serializada"""
    space: str
    basis: BasisTag
    terms: List[ExprTerm] = Field(default_factory=list)


class QTerm(BaseModel):
    """Termo coeff · q^q de um polinômio em q"""
    q: int = Field(0, ge=0)
    coeff: List[WeightTerm]


class PairingResult(BaseModel):
    """((a, O_lambda)) = numerador / (1-q)^denom_pow"""
    space: str
    shape: List[int]
    numerator: List[QTerm]
    denom_pow: int = Field(..., ge=0)


# ==================== POSETS E SHAPES ====================

class ShapeInfo(BaseModel):
    shape: List[int]
    length: int
    dual: List[int]


class BoxInfo(BaseModel):
    pos: List[int] = Field(..., description="(linha, coluna) base 1")
    root: List[int]
    short: bool
    delta: int = Field(..., description="Índice base 1 da raiz simples delta")
    z1: bool


class PosetInfo(BaseModel):
    space: str
    dim: int
    shapes: int
    z1: List[int]
    nw_shift: List[int]
    boxes: List[BoxInfo] = Field(default_factory=list)
    diagram: List[str] = Field(default_factory=list)


# ==================== VERIFICAÇÃO ====================

class VerificationFailure(BaseModel):
    caso: str
    verificacao: str
    descricao: str
    observacao: str = ""


class VerificationReport(BaseModel):
    space: str
    suite: str
    checked: int
    failures: int
    message: Optional[str] = None


# ==================== CONVERSÃO ====================

def expr_to_document(expr: SchubertExpr) -> ExprDocument:
    """Ordena por grau em q e depois por shape, como no texto"""
    terms = []
    for shape, coeff in expr.sorted_terms():
        for degree in sorted(coeff.coeffs):
            terms.append(ExprTerm(
                shape=to_partition(expr.poset, shape),
                q=degree,
                coeff=[WeightTerm(**t) for t in coeff.coeffs[degree].to_json()],
            ))
    terms.sort(key=lambda t: t.q)
    return ExprDocument(space=expr.poset.space.label, basis=expr.basis, terms=terms)


def expr_from_document(poset: CominusculePoset, doc: ExprDocument) -> SchubertExpr:
    """
    Reconstrói a expressão sobre o poset dado.

    Raises:
        DomainError: espaço do documento diferente do poset ou shape inválido
    """
    if doc.space != poset.space.label:
        raise DomainError(f"Documento é de {doc.space}, esperado {poset.space.label}")
    expr = SchubertExpr(poset, doc.basis)
    for term in doc.terms:
        shape = from_partition(poset, term.shape)
        coeff = WeightPoly.from_json(t.model_dump() for t in term.coeff)
        expr = expr + SchubertExpr(poset, doc.basis, {shape: QPoly.constant(coeff, term.q)})
    return expr
