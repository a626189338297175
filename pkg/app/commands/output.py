"""
Saída comum dos comandos: texto, JSON e códigos de saída
"""
import json
import sys
from typing import Any, Dict, Iterable, TextIO

from pydantic import BaseModel

from core.qkcore import SchubertExpr
from core.utils import LEGENDA, format_expr

from ..models.schemas import expr_to_document

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

FORMATS = ("text", "json", "diagram")


def exit_code_for(resultado: Dict[str, Any]) -> int:
    """InvariantError e verificações com falha dão 1; o resto dos erros, 2"""
    if resultado.get("sucesso"):
        return EXIT_OK
    if resultado.get("erro") in (None, "InvariantError"):
        return EXIT_FAILURE
    return EXIT_USAGE


def report_error(resultado: Dict[str, Any], err: TextIO = sys.stderr) -> int:
    print(resultado.get("mensagem", "Erro"), file=err)
    return exit_code_for(resultado)


def write_lines(lines: Iterable[str], out: TextIO) -> None:
    for line in lines:
        print(line, file=out)


def write_json(payload: Any, out: TextIO) -> None:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    print(json.dumps(payload, ensure_ascii=False, sort_keys=False), file=out)


def write_expr(expr: SchubertExpr, fmt: str, out: TextIO, gl: bool = False) -> None:
    if fmt == "json":
        write_json(expr_to_document(expr), out)
    else:
        print(format_expr(expr, gl=gl), file=out)


def write_legend(out: TextIO) -> None:
    print("", file=out)
    write_lines(LEGENDA, out)
