#!/usr/bin/env python3
"""
Validadores - Core
QK Cominúsculo

Verificador de teoremas: cada suíte devolve uma lista de tarefas independentes,
e cada tarefa devolve (casos conferidos, falhas). Falhas nunca levantam
exceção; viram registros com caso, verificação, descrição e observação.
"""

import logging
from math import comb
from typing import Callable, Dict, List, Tuple

import numpy as np

from .curves import distance, psi_shape
from .errors import DomainError, InvariantError
from .gammaring import J_weight, WeightMonomial, delta_weight, sqrtJ
from .grassq import (
    dets_detq_check, detq_sign_failures, gl_lift_J, gl_to_sl, grass_perm, grassmannian_poset,
    weyl_to_permutation,
)
from .models import Shape, SpaceKind
from .oracle import distance_oracle, partitions_in_box
from .poset import CominusculePoset
from .qkcore import (
    alpha_identity_check, classical_duality_row, duality_row, ideal_sheaf,
    lifted_addable, psi_expr, psi_ideal_sheaf, to_label,
)
from .shapes import (
    addable_boxes, add_box, dual, enumerate_shapes, from_partition, to_partition, to_weyl,
)

logger = logging.getLogger(__name__)

Resultado = Tuple[int, List[Dict]]
Tarefa = Tuple[str, Callable[[], Resultado]]

# tamanho dos blocos de cadeias por tarefa
BLOCO_CADEIAS = 2000


def falha(caso: str, verificacao: str, descricao: str, observacao: str = "") -> Dict:
    return {
        "caso": caso,
        "verificacao": verificacao,
        "descricao": descricao,
        "observacao": observacao,
    }


def contagem_esperada(poset: CominusculePoset) -> int:
    """Número de shapes por família"""
    space = poset.space
    if space.kind == SpaceKind.GR:
        k, n = space.params
        return comb(n, k)
    if space.kind == SpaceKind.LG:
        return 2 ** space.params[0]
    if space.kind == SpaceKind.OG:
        return 2 ** (space.params[0] - 1)
    if space.kind == SpaceKind.QUAD_ODD:
        return space.params[0] + 1
    if space.kind == SpaceKind.QUAD_EVEN:
        return space.params[0] + 2
    return 27 if space.kind == SpaceKind.E6P6 else 56


def check_distances(k: int, n: int) -> Resultado:
    """Compara curves.distance com o oráculo de rim hooks em todos os pares de Gr(k,n)"""
    poset = grassmannian_poset(k, n)
    partitions = partitions_in_box(k, n)
    checked = 0
    failures = []
    for mu in partitions:
        mu_shape = from_partition(poset, mu)
        for lam in partitions:
            checked += 1
            caso = f"Gr({k},{n}) mu={list(mu)} lambda={list(lam)}"
            esperado = distance(poset, mu_shape, from_partition(poset, lam))
            try:
                obtido = distance_oracle(k, n, mu, lam)
            except InvariantError as e:
                failures.append(falha(caso, "oracle", "oráculo inconsistente", str(e)))
                continue
            if obtido != esperado:
                failures.append(falha(caso, "oracle", "d(mu,lambda) diverge do oráculo",
                                      f"curvas {esperado}, oráculo {obtido}"))
    return checked, failures


class VerificadorTeoremas:
    """Suítes de verificação de um espaço cominúsculo"""

    SUITES = ("duality", "classical", "alpha", "lemma-weight", "branch",
              "structure", "detq", "oracle")

    # unidade usada na mensagem "N <unidade> checked"
    UNIDADES = {
        "duality": "pairs",
        "classical": "pairs",
        "alpha": "shapes",
        "lemma-weight": "chains",
        "branch": "shapes",
        "structure": "checks",
        "detq": "products",
        "oracle": "pairs",
    }

    def __init__(self, poset: CominusculePoset, debug: bool = False,
                 sample_size: int = 1000, exhaustive_limit: int = 200000,
                 seed: int = 0):
        """
        Inicializa o verificador

        Args:
            poset: Poset cominúsculo já construído
            debug: confere o caminho direto de I_q na suíte de dualidade
            sample_size: cadeias sorteadas quando a contagem passa do limite
            exhaustive_limit: limite de cadeias para verificação exaustiva
            seed: semente do sorteio de cadeias
        """
        self.poset = poset
        self.debug = debug
        self.sample_size = sample_size
        self.exhaustive_limit = exhaustive_limit
        self.seed = seed
        self.shapes = enumerate_shapes(poset)

    @property
    def label(self) -> str:
        return self.poset.space.label

    def tarefas(self, suite: str) -> List[Tarefa]:
        """
        Lista de tarefas independentes da suíte, em ordem determinística.

        Raises:
            DomainError: suíte desconhecida ou restrita ao tipo A
        """
        if suite not in self.SUITES:
            raise DomainError(f"Suíte desconhecida: {suite}")
        p = self.poset

        if suite == "duality":
            return [(to_label(p, mu), lambda mu=mu: duality_row(p, mu, self.shapes, debug=self.debug))
                    for mu in self.shapes]
        if suite == "classical":
            return [(to_label(p, mu), lambda mu=mu: classical_duality_row(p, mu, self.shapes))
                    for mu in self.shapes]
        if suite == "alpha":
            return [(to_label(p, mu), lambda mu=mu: self.verificar_alpha(mu)) for mu in self.shapes]
        if suite == "branch":
            return [(to_label(p, mu), lambda mu=mu: self.verificar_ramo(mu)) for mu in self.shapes]
        if suite == "lemma-weight":
            return self._tarefas_lema()
        if suite == "structure":
            return [
                ("contagem", self.verificar_contagem),
                ("z1", self.verificar_z1),
                ("grade", self.verificar_grade),
                ("dual", self.verificar_dual),
                ("psi", self.verificar_psi),
                ("simetria", self.verificar_simetria_distancia),
                ("delta", self.verificar_delta),
            ]

        k, n = self._grassmanniana(suite)
        if suite == "detq":
            return [("sinais", lambda: self.verificar_sinais_detq(k, n)),
                    ("detS", lambda: self.verificar_dets_detq(k, n)),
                    ("ponte", lambda: self.verificar_ponte_gl(k, n))]
        return [(self.label, lambda: check_distances(k, n))]

    def _grassmanniana(self, suite: str) -> Tuple[int, int]:
        if self.poset.space.kind != SpaceKind.GR:
            raise DomainError(f"Suíte {suite} só existe para Gr(k,n)")
        return self.poset.space.params

    # ==================== FEIXES IDEAIS ====================

    def verificar_alpha(self, mu: Shape) -> Resultado:
        """alpha^mu · (1 - O^{s_gamma}) = I^mu"""
        if alpha_identity_check(self.poset, mu):
            return 1, []
        return 1, [falha(f"{self.label} mu={to_label(self.poset, mu)}", "alpha",
                         "alpha^mu · (1 - O^{s_gamma}) != I^mu")]

    def verificar_ramo(self, mu: Shape) -> Resultado:
        """
        psi(I^mu) = 0 se z1 não está em mu; caso contrário coincide com a soma
        sobre as caixas adicionáveis transladadas (I^{mu(-1)} fora da borda).
        """
        p = self.poset
        image = psi_expr(ideal_sheaf(p, mu))
        if p.z1.issubset(mu):
            base = psi_shape(p, mu)
            ok = image == psi_ideal_sheaf(p, mu)
            if lifted_addable(p, mu) == addable_boxes(p, base):
                ok = ok and image == ideal_sheaf(p, base)
                detalhe = f"esperado I^{to_label(p, base)}"
            else:
                detalhe = f"esperado I^{to_label(p, base)} truncado"
        else:
            ok = image.is_zero()
            detalhe = "esperado 0"
        if ok:
            return 1, []
        return 1, [falha(f"{self.label} mu={to_label(p, mu)}", "branch",
                         "psi(I^mu) fora da lei de ramos", detalhe)]

    # ==================== LEMA DOS PESOS ====================

    def contar_cadeias(self) -> int:
        """Número de cadeias u <= v <= w"""
        total = 0
        for v in self.shapes:
            lower = sum(1 for u in self.shapes if u.issubset(v))
            upper = sum(1 for w in self.shapes if v.issubset(w))
            total += lower * upper
        return total

    def cadeias(self) -> List[Tuple[Shape, Shape, Shape]]:
        """Todas as cadeias, ou uma amostra com semente fixa se passar do limite"""
        total = self.contar_cadeias()
        if total <= self.exhaustive_limit:
            logger.info(f"{self.label}: {total} cadeias, verificação exaustiva")
            return [(u, v, w) for v in self.shapes
                    for u in self.shapes if u.issubset(v)
                    for w in self.shapes if v.issubset(w)]

        logger.info(f"{self.label}: {total} cadeias, amostra de {self.sample_size}")
        rng = np.random.default_rng(self.seed)
        chains = []
        for _ in range(self.sample_size):
            v = self.shapes[int(rng.integers(len(self.shapes)))]
            lower = [u for u in self.shapes if u.issubset(v)]
            upper = [w for w in self.shapes if v.issubset(w)]
            chains.append((lower[int(rng.integers(len(lower)))], v,
                           upper[int(rng.integers(len(upper)))]))
        return chains

    def _tarefas_lema(self) -> List[Tarefa]:
        chains = self.cadeias()
        tarefas: List[Tarefa] = []
        for start in range(0, len(chains), BLOCO_CADEIAS):
            bloco = chains[start:start + BLOCO_CADEIAS]
            tarefas.append((f"cadeias {start}+", lambda bloco=bloco: self.verificar_cadeias(bloco)))
        tarefas.append(("incrementos", self.verificar_incrementos))
        return tarefas

    def verificar_cadeias(self, chains: List[Tuple[Shape, Shape, Shape]]) -> Resultado:
        """sqrt(J_u J_v) · sqrt(J_v J_w) / J_v = sqrt(J_u J_w)"""
        p = self.poset
        failures = []
        for u, v, w in chains:
            lhs = sqrtJ(p, u, v) * sqrtJ(p, v, w) / WeightMonomial(J_weight(p, v))
            rhs = sqrtJ(p, u, w)
            if lhs != rhs:
                failures.append(falha(
                    f"{self.label} u={to_label(p, u)} v={to_label(p, v)} w={to_label(p, w)}",
                    "lemma-weight", "identidade de sqrtJ em cadeia falhou",
                    f"{lhs.weight} != {rhs.weight}",
                ))
        return len(chains), failures

    def verificar_incrementos(self) -> Resultado:
        """
        Para cada caixa adicionável: J_{v+b} - J_v = -c·delta(b), com c = 1 em caixa
        longa e 2 em caixa curta. Em rook strips curtos isso dá sqrtJ^2 = J_v J_w.
        """
        p = self.poset
        checked = 0
        failures = []
        for v in self.shapes:
            for b in addable_boxes(p, v):
                checked += 1
                w = add_box(p, v, b)
                c = 2 if p.boxes[b].is_short else 1
                delta = delta_weight(p, w - v)
                expected = tuple(a - c * d for a, d in zip(J_weight(p, v), delta))
                if J_weight(p, w) != expected:
                    failures.append(falha(
                        f"{self.label} v={to_label(p, v)} caixa={p.boxes[b].grid_pos}",
                        "lemma-weight", "incremento de J incompatível com delta",
                        f"{J_weight(p, w)} != {expected}",
                    ))
        return checked, failures

    # ==================== ESTRUTURA ====================

    def verificar_contagem(self) -> Resultado:
        esperado = contagem_esperada(self.poset)
        if len(self.shapes) == esperado:
            return 1, []
        return 1, [falha(self.label, "structure", "número de shapes",
                         f"obtido {len(self.shapes)}, esperado {esperado}")]

    def verificar_z1(self) -> Resultado:
        """(z1 w_P)^2 = 1 e z1(-1) = vazio"""
        p = self.poset
        failures = []
        z = to_weyl(p, p.z1) * p.wP
        if not (z * z).is_identity():
            failures.append(falha(self.label, "structure", "(z1 w_P)^2 != 1"))
        if psi_shape(p, p.z1).bits != 0:
            failures.append(falha(self.label, "structure", "z1(-1) não é vazio"))
        return 2, failures

    def verificar_grade(self) -> Resultado:
        """Ordem da grade NW coincide com a ordem das raízes"""
        p = self.poset
        cells = np.array([b.grid_pos for b in p.boxes])
        grid_leq = ((cells[:, None, 0] <= cells[None, :, 0])
                    & (cells[:, None, 1] <= cells[None, :, 1]))
        if np.array_equal(grid_leq, p.leq):
            return 1, []
        return 1, [falha(self.label, "structure", "ordem da grade diverge da ordem das raízes")]

    def verificar_dual(self) -> Resultado:
        """Dualidade é involução e complementa o comprimento"""
        p = self.poset
        failures = []
        for s in self.shapes:
            d = dual(p, s)
            if dual(p, d) != s or s.length + d.length != p.dim:
                failures.append(falha(f"{self.label} {to_label(p, s)}", "structure",
                                      "dual não é involução de comprimento complementar",
                                      f"dual = {to_label(p, d)}"))
        if p.space.is_minuscule and any(b.is_short for b in p.boxes):
            failures.append(falha(self.label, "structure", "caixa curta em espaço minúsculo"))
        return len(self.shapes) + 1, failures

    def verificar_psi(self) -> Resultado:
        """psi é monótona"""
        p = self.poset
        checked = 0
        failures = []
        for u in self.shapes:
            for v in self.shapes:
                if not u.issubset(v):
                    continue
                checked += 1
                if not psi_shape(p, u).issubset(psi_shape(p, v)):
                    failures.append(falha(f"{self.label} u={to_label(p, u)} v={to_label(p, v)}",
                                          "structure", "psi não é monótona"))
        return checked, failures

    def verificar_simetria_distancia(self) -> Resultado:
        """d(nu, tau^vee) = d(tau, nu^vee)"""
        p = self.poset
        checked = 0
        failures = []
        for nu in self.shapes:
            for tau in self.shapes:
                checked += 1
                a = distance(p, nu, dual(p, tau))
                b = distance(p, tau, dual(p, nu))
                if a != b:
                    failures.append(falha(f"{self.label} nu={to_label(p, nu)} tau={to_label(p, tau)}",
                                          "structure", "distância não simétrica", f"{a} != {b}"))
        return checked, failures

    def verificar_delta(self) -> Resultado:
        """w_v.alpha = delta(alpha) para todo shape v onde alpha é adicionável"""
        p = self.poset
        rs = p.root_system
        checked = 0
        failures = []
        for v in self.shapes:
            w = to_weyl(p, v)
            for b in addable_boxes(p, v):
                checked += 1
                box = p.boxes[b]
                image = rs.act_on_root(w, box.root_index)
                if image != (box.delta, 1):
                    failures.append(falha(f"{self.label} v={to_label(p, v)} caixa={box.grid_pos}",
                                          "structure", "delta depende do shape",
                                          f"{image} != {(box.delta, 1)}"))
                if rs.is_short(box.delta) != box.is_short:
                    failures.append(falha(f"{self.label} caixa={box.grid_pos}", "structure",
                                          "delta não preserva o comprimento"))
        return checked, failures

    # ==================== GRASSMANNIANAS ====================

    def verificar_sinais_detq(self, k: int, n: int) -> Resultado:
        return len(self.shapes), detq_sign_failures(k, n)

    def verificar_dets_detq(self, k: int, n: int) -> Resultado:
        if dets_detq_check(k, n):
            return 1, []
        return 1, [falha(self.label, "detq", "det S ⋆ det Q != (1-q) det(C^n) O^vazio")]

    def verificar_ponte_gl(self, k: int, n: int) -> Resultado:
        """Levantamento GL de J_lambda e permutação de w_lambda contra a permutação Grassmanniana"""
        failures = []
        for s in self.shapes:
            lam = to_partition(self.poset, s)
            if gl_to_sl(gl_lift_J(k, n, lam)) != J_weight(self.poset, s):
                failures.append(falha(to_label(self.poset, s), "detq", "levantamento GL de J difere"))
            perm = grass_perm(k, n, lam)
            if weyl_to_permutation(to_weyl(self.poset, s)) != perm.one_line:
                failures.append(falha(to_label(self.poset, s), "detq", "w_lambda difere da permutação",
                                      str(perm)))
        return len(self.shapes), failures

    def executar(self, suite: str) -> Resultado:
        """Executa a suíte em série"""
        checked = 0
        failures: List[Dict] = []
        for _, tarefa in self.tarefas(suite):
            n, f = tarefa()
            checked += n
            failures.extend(f)
        return checked, failures
