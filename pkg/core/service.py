#!/usr/bin/env python3
"""
Camada de Serviço - Core
QK Cominúsculo

Classe de serviço que expõe a API pública do core.
Esta é a única interface que deve ser usada por aplicações externas (CLI, testes).
"""

import logging
from typing import Any, Dict

from .curves import distance, psi_shape
from .errors import QKCError
from .grassq import detq_product, grassmannian_poset
from .models import Shape
from .oracle import qh_product
from .poset import CominusculePoset
from .processors import ProcessadorVerificacao, resumo_falhas
from .qkcore import (
    SchubertExpr, alpha, chevalley_classical, chevalley_quantum, expand_to_opposite,
    ideal_sheaf, qk_pairing, quantized_ideal_sheaf,
)
from .shapes import dual, enumerate_shapes, from_partition, to_partition
from .validators import VerificadorTeoremas, check_distances

logger = logging.getLogger(__name__)


def _erro(e: QKCError, **extra: Any) -> Dict[str, Any]:
    logger.error(f"{type(e).__name__}: {e}")
    resultado = {"sucesso": False, "erro": type(e).__name__, "mensagem": f"Erro: {e}"}
    resultado.update(extra)
    return resultado


class CalculationService:
    """
    Serviço principal de cálculo em K-teoria quântica cominúscula.

    Cada método devolve um dicionário com 'sucesso' e 'mensagem'; erros do
    core (QKCError) viram sucesso=False com o nome da classe em 'erro'.
    """

    @staticmethod
    def descrever_poset(poset: CominusculePoset) -> Dict[str, Any]:
        """
        Informações do poset: dimensão, z1, deslocamento de psi e caixas.

        Returns:
            Dicionário com espaco, dim, shapes, z1, nw_shift e caixas
        """
        caixas = [
            {
                "pos": [b.grid_pos[0] + 1, b.grid_pos[1] + 1],
                "raiz": list(b.root),
                "curta": b.is_short,
                "delta": b.delta + 1,
                "z1": b.index in poset.z1,
            }
            for b in poset.boxes
        ]
        return {
            "sucesso": True,
            "espaco": poset.space.label,
            "dim": poset.dim,
            "shapes": len(enumerate_shapes(poset)),
            "z1": to_partition(poset, poset.z1),
            "nw_shift": list(poset.nw_shift),
            "caixas": caixas,
            "mensagem": f"{poset.space.label}: {poset.dim} caixas",
        }

    @staticmethod
    def listar_shapes(poset: CominusculePoset) -> Dict[str, Any]:
        shapes = [
            {"shape": s, "comprimento": s.length, "dual": dual(poset, s)}
            for s in enumerate_shapes(poset)
        ]
        return {"sucesso": True, "espaco": poset.space.label, "shapes": shapes,
                "mensagem": f"{len(shapes)} shapes"}

    @staticmethod
    def calcular_psi(poset: CominusculePoset, mu: Shape) -> Dict[str, Any]:
        try:
            return {"sucesso": True, "shape": psi_shape(poset, mu), "mensagem": "OK"}
        except QKCError as e:
            return _erro(e)

    @staticmethod
    def calcular_distancia(poset: CominusculePoset, u: Shape, v: Shape) -> Dict[str, Any]:
        try:
            return {"sucesso": True, "distancia": distance(poset, u, v), "mensagem": "OK"}
        except QKCError as e:
            return _erro(e)

    @staticmethod
    def calcular_feixe(poset: CominusculePoset, tipo: str, mu: Shape,
                       debug: bool = False) -> Dict[str, Any]:
        """
        I^mu, I_q^mu ou alpha^mu na base O^lambda.

        Args:
            tipo: 'ideal', 'qideal' ou 'alpha'
        """
        try:
            if tipo == "ideal":
                expr = ideal_sheaf(poset, mu)
            elif tipo == "qideal":
                expr = quantized_ideal_sheaf(poset, mu, debug=debug)
            else:
                expr = alpha(poset, mu)
            return {"sucesso": True, "expressao": expr, "mensagem": "OK"}
        except QKCError as e:
            return _erro(e)

    @staticmethod
    def calcular_chevalley(poset: CominusculePoset, mu: Shape, quantum: bool = False,
                           debug: bool = False) -> Dict[str, Any]:
        """
        O^mu · (1 - O^{s_gamma}) clássico ou quântico.

        Returns:
            Dicionário com 'expressao' (base O) e 'forma_ideal' (base I ou I_q)
        """
        try:
            if quantum:
                prod = chevalley_quantum(poset, mu, debug=debug)
                return {"sucesso": True, "expressao": prod.opposite,
                        "forma_ideal": prod.qideal_form, "mensagem": "OK"}
            prod = chevalley_classical(poset, mu)
            return {"sucesso": True, "expressao": prod.opposite,
                    "forma_ideal": prod.ideal_form, "mensagem": "OK"}
        except QKCError as e:
            return _erro(e)

    @staticmethod
    def parear(expr: SchubertExpr, lam: Shape, debug: bool = False) -> Dict[str, Any]:
        """((expr, O_lambda)) como numerador / (1-q)^k"""
        try:
            opposite = expand_to_opposite(expr, debug=debug)
            valor = qk_pairing(expr.poset, opposite, lam)
            return {"sucesso": True, "numerador": valor.numerator,
                    "potencia_denominador": valor.denom_pow, "mensagem": "OK"}
        except QKCError as e:
            return _erro(e)

    @staticmethod
    def calcular_detq(k: int, n: int, mu: list) -> Dict[str, Any]:
        try:
            return {"sucesso": True, "expressao": detq_product(k, n, mu), "mensagem": "OK"}
        except QKCError as e:
            return _erro(e)

    @staticmethod
    def produto_quantico(k: int, n: int, lam: list, mu: list) -> Dict[str, Any]:
        """X^lam ⋆ X^mu em QH(Gr(k,n)) pelo oráculo"""
        try:
            poset = grassmannian_poset(k, n)
            from_partition(poset, lam)
            from_partition(poset, mu)
            termos = sorted(qh_product(k, n, lam, mu).items(),
                            key=lambda item: (item[0][1], sum(item[0][0]), item[0][0]))
            return {"sucesso": True, "termos": termos, "mensagem": "OK"}
        except QKCError as e:
            return _erro(e)

    @staticmethod
    def conferir_distancias(k: int, n: int) -> Dict[str, Any]:
        try:
            total, falhas = check_distances(k, n)
        except QKCError as e:
            return _erro(e, falhas=[], total=0)
        return {
            "sucesso": not falhas,
            "suite": "oracle",
            "espaco": f"Gr({k},{n})",
            "total": total,
            "falhas": falhas,
            "unidade": "pairs",
            "mensagem": f"{total} pairs checked, {len(falhas)} failures",
        }

    @staticmethod
    def verificar(
        poset: CominusculePoset,
        suite: str,
        max_workers: int = 1,
        debug: bool = False,
        sample_size: int = 1000,
        exhaustive_limit: int = 200000,
        seed: int = 0,
    ) -> Dict[str, Any]:
        """
        Executa uma suíte de verificação.

        Args:
            poset: Poset do espaço
            suite: Nome da suíte (ver VerificadorTeoremas.SUITES)
            max_workers: Número de threads
            debug: Confere também o caminho direto de I_q
            sample_size: Cadeias sorteadas em espaços grandes
            exhaustive_limit: Limite para verificação exaustiva de cadeias
            seed: Semente do sorteio

        Returns:
            Dicionário com:
                - sucesso (bool): nenhuma falha
                - total (int): casos conferidos
                - falhas (list): registros de falha
                - resumo (DataFrame): falhas agrupadas por tipo
                - mensagem (str): "N <unidade> checked, M failures"
        """
        try:
            verificador = VerificadorTeoremas(
                poset, debug=debug, sample_size=sample_size,
                exhaustive_limit=exhaustive_limit, seed=seed,
            )
            resultado = ProcessadorVerificacao(verificador).processar_suite(suite, max_workers)
        except QKCError as e:
            return _erro(e, suite=suite, espaco=poset.space.label, total=0, falhas=[])

        resultado["sucesso"] = not resultado["falhas"]
        resultado["resumo"] = resumo_falhas(resultado["falhas"])
        resultado["mensagem"] = (
            f"{resultado['total']} {resultado['unidade']} checked, "
            f"{len(resultado['falhas'])} failures"
        )
        return resultado

