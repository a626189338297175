#!/usr/bin/env python3
"""
Processadores - Core
QK Cominúsculo

Execução das suítes de verificação em paralelo e resumo tabular das falhas.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, List, Optional

import pandas as pd

from .validators import VerificadorTeoremas

logger = logging.getLogger(__name__)

COLUNAS = ['caso', 'verificacao', 'descricao', 'observacao']


class ProcessadorVerificacao:
    """Executa uma suíte de um verificador dividindo o trabalho em tarefas"""

    def __init__(self, verificador: VerificadorTeoremas):
        """
        Inicializa o processador

        Args:
            verificador: Verificador já construído para um espaço
        """
        self.verificador = verificador
        self.resultados: Dict[str, Dict] = {}

    def processar_suite(self, suite: str, max_workers: int = 1) -> Dict:
        """
        Processa uma suíte (com paralelismo opcional)

        A ordem das falhas segue a ordem das tarefas, qualquer que seja o
        número de threads.

        Args:
            suite: Nome da suíte
            max_workers: Número de threads

        Returns:
            Dicionário com suite, espaco, total, falhas e unidade
        """
        tarefas = self.verificador.tarefas(suite)
        total_tarefas = len(tarefas)
        label = self.verificador.label
        logger.info(f"Verificando {suite} em {label}: {total_tarefas} tarefas")

        parciais: List[Optional[tuple]] = [None] * total_tarefas
        if max_workers <= 1:
            for i, (_, tarefa) in enumerate(tarefas):
                parciais[i] = tarefa()
                self._progresso(i + 1, total_tarefas)
        else:
            concluidas = 0
            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                futures = {executor.submit(tarefa): i for i, (_, tarefa) in enumerate(tarefas)}
                for future in as_completed(futures):
                    parciais[futures[future]] = future.result()
                    concluidas += 1
                    self._progresso(concluidas, total_tarefas)

        total = 0
        falhas: List[Dict] = []
        for checked, failures in parciais:
            total += checked
            falhas.extend(failures)

        for f in falhas:
            logger.error(f"  ✗ {f['caso']}: {f['descricao']} {f['observacao']}".rstrip())
        logger.info(f"Concluído: {total} casos, {len(falhas)} falhas")

        resultado = {
            "suite": suite,
            "espaco": label,
            "total": total,
            "falhas": falhas,
            "unidade": self.verificador.UNIDADES[suite],
        }
        self.resultados[suite] = resultado
        return resultado

    @staticmethod
    def _progresso(feitas: int, total: int) -> None:
        passo = max(1, total // 10)
        if feitas % passo == 0 or feitas == total:
            logger.info(f"  Progresso: {feitas}/{total} ({100 * feitas // total}%)")


def tabela_falhas(falhas: List[Dict]) -> pd.DataFrame:
    """Falhas em DataFrame, ordenadas por verificação e caso"""
    df = pd.DataFrame(falhas, columns=COLUNAS)
    if df.empty:
        return df
    return df.sort_values(['verificacao', 'caso'], kind='stable').reset_index(drop=True)


def resumo_falhas(falhas: List[Dict]) -> pd.DataFrame:
    """Resumo por tipo de falha, como no relatório de pendências"""
    df = tabela_falhas(falhas)
    if df.empty:
        return pd.DataFrame(columns=['verificacao', 'descricao', 'quantidade'])
    por_tipo = df.groupby(['verificacao', 'descricao']).size().reset_index(name='quantidade')
    return por_tipo.sort_values('quantidade', ascending=False, kind='stable').reset_index(drop=True)
