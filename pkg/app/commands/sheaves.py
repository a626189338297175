"""
Comandos de feixes: ideal, qideal, alpha, chev, pair
"""
import json
from pathlib import Path
from typing import TextIO

from pydantic import ValidationError

from core.errors import DomainError
from core.service import CalculationService
from core.shapes import to_partition
from core.utils import format_expr, format_qpoly, render_diagram

from ..config import get_settings
from ..models.schemas import ExprDocument, PairingResult, QTerm, WeightTerm, expr_from_document, expr_to_document
from ..services.space_service import get_space_service
from .output import EXIT_OK, FORMATS, report_error, write_expr, write_json, write_lines


def register(subparsers) -> None:
    for name, helptext in (
        ("ideal", "Feixe ideal I^mu na base O^lambda"),
        ("qideal", "Feixe ideal quantizado I_q^mu na base O^lambda"),
        ("alpha", "Elemento alpha^mu na base O^lambda"),
    ):
        p = subparsers.add_parser(name, help=helptext)
        p.add_argument("space")
        p.add_argument("mu")
        p.add_argument("--format", choices=FORMATS, default="text")
        p.set_defaults(handler=cmd_sheaf, tipo=name)

    p = subparsers.add_parser("chev", help="Produto de Chevalley O^mu · (1 - O^{s_gamma})")
    p.add_argument("space")
    p.add_argument("mu")
    p.add_argument("--quantum", action="store_true", help="Produto quântico")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(handler=cmd_chev)

    p = subparsers.add_parser("pair", help="Métrica K quântica ((a, O_lambda))")
    p.add_argument("space")
    p.add_argument("exprfile", help="Arquivo JSON com a expressão")
    p.add_argument("lam")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(handler=cmd_pair)


def cmd_sheaf(args, out: TextIO) -> int:
    service = get_space_service()
    poset = service.get_poset(args.space)
    mu = service.get_shape(poset, args.mu)
    resultado = CalculationService.calcular_feixe(poset, args.tipo, mu, debug=get_settings().debug)
    if not resultado["sucesso"]:
        return report_error(resultado)

    if args.format == "diagram":
        write_lines(render_diagram(poset, shape=mu), out)
        print("", file=out)
    write_expr(resultado["expressao"], args.format, out)
    return EXIT_OK


def cmd_chev(args, out: TextIO) -> int:
    service = get_space_service()
    poset = service.get_poset(args.space)
    mu = service.get_shape(poset, args.mu)
    resultado = CalculationService.calcular_chevalley(poset, mu, quantum=args.quantum,
                                                      debug=get_settings().debug)
    if not resultado["sucesso"]:
        return report_error(resultado)

    if args.format == "json":
        write_json({
            "opposite": expr_to_document(resultado["expressao"]).model_dump(mode="json"),
            "ideal_form": expr_to_document(resultado["forma_ideal"]).model_dump(mode="json"),
        }, out)
        return EXIT_OK

    if args.format == "diagram":
        write_lines(render_diagram(poset, shape=mu), out)
        print("", file=out)
    print(format_expr(resultado["expressao"]), file=out)
    print(f"= {format_expr(resultado['forma_ideal'])}", file=out)
    return EXIT_OK


def _load_document(path: str) -> ExprDocument:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return ExprDocument.model_validate(data)
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise DomainError(f"Não foi possível ler a expressão de {path}: {e}")


def cmd_pair(args, out: TextIO) -> int:
    service = get_space_service()
    poset = service.get_poset(args.space)
    expr = expr_from_document(poset, _load_document(args.exprfile))
    lam = service.get_shape(poset, args.lam)
    resultado = CalculationService.parear(expr, lam, debug=get_settings().debug)
    if not resultado["sucesso"]:
        return report_error(resultado)

    numerador = resultado["numerador"]
    potencia = resultado["potencia_denominador"]
    if args.format == "json":
        write_json(PairingResult(
            space=poset.space.label,
            shape=to_partition(poset, lam),
            numerator=[
                QTerm(q=d, coeff=[WeightTerm(**t) for t in numerador.coeffs[d].to_json()])
                for d in sorted(numerador.coeffs)
            ],
            denom_pow=potencia,
        ), out)
        return EXIT_OK

    texto = format_qpoly(numerador)
    if potencia == 0:
        print(texto, file=out)
    elif potencia == 1:
        print(f"({texto})/(1-q)", file=out)
    else:
        print(f"({texto})/(1-q)^{potencia}", file=out)
    return EXIT_OK
