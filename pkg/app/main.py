"""
QK Cominúsculo
==============

Linha de comando para K-teoria quântica de variedades cominúsculas:
posets, feixes ideais quantizados, produtos de Chevalley, a métrica K quântica
e as suítes de verificação.

Uso: python -m app.main <comando> ...
"""
import argparse
import logging
import sys
from typing import List, Optional, TextIO

from core.errors import InvariantError, QKCError

from .commands import COMMAND_GROUPS
from .commands.output import EXIT_FAILURE, EXIT_USAGE
from .config import get_settings

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="qkc",
        description=f"{settings.app_name} v{settings.app_version}",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log em nível INFO")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for group in COMMAND_GROUPS:
        group.register(subparsers)
    return parser


def setup_logging(verbose: bool = False) -> None:
    settings = get_settings()
    level = logging.INFO if verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    """
    Executa um comando e devolve o código de saída.

    Args:
        argv: Argumentos (sem o nome do programa)
        out: Saída padrão dos resultados
        err: Saída de erros e de uso

    Returns:
        0 sucesso, 1 falha de verificação ou InvariantError, 2 erro de uso
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    setup_logging(args.verbose)
    try:
        return args.handler(args, out)
    except InvariantError as e:
        logger.error(f"Inconsistência interna: {e}")
        print(f"Erro interno: {e}", file=err)
        return EXIT_FAILURE
    except QKCError as e:
        print(f"Erro: {e}", file=err)
        print(parser.format_usage().rstrip(), file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
