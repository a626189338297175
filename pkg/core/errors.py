#!/usr/bin/env python3
"""
Exceções - Core
QK Cominúsculo

Hierarquia de erros do core. A camada de aplicação converte cada classe
em um código de saída.
"""


class QKCError(Exception):
    """Erro base do core"""


class ConfigurationError(QKCError):
    """Família/posto não suportado, espaço fora dos limites ou configuração inválida"""


class DomainError(QKCError):
    """Entrada matematicamente inválida (shape, mutação, base, divisão)"""


class InvariantError(QKCError):
    """Falha de consistência interna; indica bug de tabela ou de implementação"""
