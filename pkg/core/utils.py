#!/usr/bin/env python3
"""
Utilitários - Core
QK Cominúsculo

Leitura de espaços e shapes em texto, formatação de expressões e desenho
ASCII dos posets.
"""

import json
import re
from typing import List, Optional, Tuple

from .errors import ConfigurationError, DomainError
from .models import BasisTag, Shape, SpaceKind
from .poset import CominusculePoset, Space, build_space, quadric
from .qkcore import QPoly, SchubertExpr, to_label
from .shapes import from_cells, from_partition

_SPACE_PATTERNS = [
    (re.compile(r"^gr\((\d+),(\d+)\)$"), SpaceKind.GR),
    (re.compile(r"^lg\((\d+)\)$"), SpaceKind.LG),
    (re.compile(r"^og\((\d+)\)$"), SpaceKind.OG),
]

BASIS_SYMBOL = {
    BasisTag.OPPOSITE: "O",
    BasisTag.IDEAL: "I",
    BasisTag.QIDEAL: "Iq",
}

LEGENDA = [
    "o  caixa branca (fora de z1)",
    ".  caixa branca longa",
    "#  caixa cinza (em z1)",
    "*  caixa cinza longa",
    "@  caixa do shape",
    "+  caixa destacada",
]


# ==================== LEITURA ====================

def parse_space(text: str) -> Space:
    """
    Lê Gr(k,n), LG(n), OG(n), Q(n), E6 ou E7.

    Raises:
        ConfigurationError: texto não reconhecido ou parâmetros inválidos
    """
    compact = re.sub(r"\s+", "", text or "").lower()
    for pattern, kind in _SPACE_PATTERNS:
        m = pattern.match(compact)
        if m:
            return build_space(kind, *(int(g) for g in m.groups()))
    m = re.match(r"^q\((\d+)\)$", compact)
    if m:
        return quadric(int(m.group(1)))
    if compact == "e6":
        return build_space(SpaceKind.E6P6)
    if compact == "e7":
        return build_space(SpaceKind.E7P7)
    raise ConfigurationError(f"Espaço não reconhecido: {text!r}")


def parse_shape(poset: CominusculePoset, text: str) -> Shape:
    """
    Lê um shape: partição [3,2,1], [] ou {boxes:[[r,c],...]} com coordenadas base 1.

    Raises:
        DomainError: sintaxe inválida, célula inexistente ou não-ideal
    """
    raw = (text or "").strip()
    if raw.startswith("{"):
        m = re.match(r'^\{\s*"?boxes"?\s*:\s*(\[.*\])\s*\}$', raw, re.DOTALL)
        if not m:
            raise DomainError(f"Shape inválido: {text!r}")
        cells = _load_json(m.group(1), text)
        try:
            coords = [(int(r) - 1, int(c) - 1) for r, c in cells]
        except (TypeError, ValueError):
            raise DomainError(f"Células devem ser pares [linha, coluna]: {text!r}")
        return from_cells(poset, coords)

    parts = _load_json(raw, text)
    if not isinstance(parts, list) or not all(isinstance(x, int) for x in parts):
        raise DomainError(f"Partição deve ser lista de inteiros: {text!r}")
    return from_partition(poset, parts)


def _load_json(raw: str, original: str):
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        raise DomainError(f"Shape inválido: {original!r}")


# ==================== FORMATAÇÃO ====================

def format_shape(poset: CominusculePoset, s: Shape) -> str:
    return to_label(poset, s)


def _q_factor(degree: int) -> str:
    if degree == 0:
        return ""
    return "q" if degree == 1 else f"q^{degree}"


def _format_term(poset: CominusculePoset, symbol: str, s: Shape, degree: int,
                 coeff, gl: bool) -> Tuple[bool, str]:
    """(negativo, texto sem sinal) de um termo coeff · q^degree · symbol^s"""
    factors: List[str] = []
    negative = False
    if len(coeff.terms) == 1:
        (c,) = coeff.terms.values()
        negative = c < 0
        mono = coeff.format(gl) if c > 0 else (-coeff).format(gl)
        if mono != "1":
            factors.append(mono)
    else:
        factors.append(f"({coeff.format(gl)})")
    q = _q_factor(degree)
    if q:
        factors.append(q)
    factors.append(f"{symbol}^{to_label(poset, s)}")
    return negative, "*".join(factors)


def format_expr(expr: SchubertExpr, gl: bool = False) -> str:
    """
    Texto de uma expressão, ordenada por grau em q e depois por shape.

    Exemplo: O^[2,1] - O^[2,2] - q*O^[] + q*O^[1]
    """
    symbol = BASIS_SYMBOL[expr.basis]
    flat = []
    for s, coeff in expr.terms.items():
        for degree, p in coeff.coeffs.items():
            flat.append((degree, s.sort_key, s, p))
    flat.sort(key=lambda item: (item[0], item[1]))
    if not flat:
        return "0"

    pieces = []
    for i, (degree, _, s, p) in enumerate(flat):
        negative, body = _format_term(expr.poset, symbol, s, degree, p, gl)
        if i == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"{'-' if negative else '+'} {body}")
    return " ".join(pieces)


def format_qpoly(p: QPoly, gl: bool = False) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for degree in sorted(p.coeffs):
        coeff = p.coeffs[degree].format(gl)
        q = _q_factor(degree)
        if not q:
            parts.append(f"({coeff})" if len(p.coeffs[degree].terms) > 1 else coeff)
        elif coeff == "1":
            parts.append(q)
        elif coeff == "-1":
            parts.append(f"-{q}")
        else:
            parts.append(f"({coeff})*{q}")
    return " + ".join(parts).replace("+ -", "- ")


# ==================== DESENHO ====================

def render_diagram(poset: CominusculePoset, shape: Optional[Shape] = None,
                   highlight: Optional[Shape] = None) -> List[str]:
    """
    Grade do poset em ASCII, linha 0 no topo.

    Caixas longas só são marcadas em posets não-minúsculos.
    """
    width = max(b.grid_pos[1] for b in poset.boxes) + 1 if poset.boxes else 0
    grid = [[" "] * width for _ in range(poset.rows)]
    for box in poset.boxes:
        r, c = box.grid_pos
        if shape is not None and box.index in shape:
            char = "@"
        elif highlight is not None and box.index in highlight:
            char = "+"
        else:
            long_box = not poset.is_minuscule and not box.is_short
            if box.index in poset.z1:
                char = "*" if long_box else "#"
            else:
                char = "." if long_box else "o"
        grid[r][c] = char
    return [" ".join(row).rstrip() for row in grid]
