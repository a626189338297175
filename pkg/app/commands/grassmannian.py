"""
Comandos de Grassmannianas: detq e oracle
"""
import json
from typing import List, TextIO

from core.errors import DomainError
from core.gammaring import WeightPoly, restrict_nonequivariant
from core.qkcore import QPoly, SchubertExpr
from core.service import CalculationService

from .output import EXIT_OK, FORMATS, report_error, write_expr, write_json
from .verify import write_report


def register(subparsers) -> None:
    p = subparsers.add_parser("detq", help="det Q ⋆ O^mu em Gr(k,n)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("mu")
    p.add_argument("--nonequivariant", action="store_true", help="Todos os T_i = 1")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(handler=cmd_detq)

    p = subparsers.add_parser("oracle", help="Cohomologia quântica de Gr(k,n) por rim hooks")
    oracle_sub = p.add_subparsers(dest="oracle_command", required=True)

    qh = oracle_sub.add_parser("qh", help="X^lambda ⋆ X^mu")
    qh.add_argument("k", type=int)
    qh.add_argument("n", type=int)
    qh.add_argument("lam")
    qh.add_argument("mu")
    qh.add_argument("--format", choices=FORMATS, default="text")
    qh.set_defaults(handler=cmd_qh)

    check = oracle_sub.add_parser("check-dist", help="Compara d(mu,lambda) com o oráculo")
    check.add_argument("k", type=int)
    check.add_argument("n", type=int)
    check.add_argument("--format", choices=FORMATS, default="text")
    check.set_defaults(handler=cmd_check_dist)


def parse_partition(text: str) -> List[int]:
    """
    Partição no formato [3,2,1].

    Raises:
        DomainError: texto que não é lista de inteiros
    """
    try:
        parts = json.loads(text)
    except json.JSONDecodeError:
        raise DomainError(f"Partição inválida: {text!r}")
    if not isinstance(parts, list) or not all(isinstance(x, int) for x in parts):
        raise DomainError(f"Partição deve ser lista de inteiros: {text!r}")
    return parts


def _nonequivariant(expr: SchubertExpr, n: int) -> SchubertExpr:
    """Coeficientes restritos a inteiros (todo T_i vai para 1)"""
    terms = {
        shape: QPoly({d: WeightPoly.constant(restrict_nonequivariant(p), n)
                      for d, p in coeff.coeffs.items()})
        for shape, coeff in expr.terms.items()
    }
    return SchubertExpr(expr.poset, expr.basis, terms)


def cmd_detq(args, out: TextIO) -> int:
    mu = parse_partition(args.mu)
    resultado = CalculationService.calcular_detq(args.k, args.n, mu)
    if not resultado["sucesso"]:
        return report_error(resultado)

    expr = resultado["expressao"]
    if args.nonequivariant:
        expr = _nonequivariant(expr, args.n)
    write_expr(expr, args.format, out, gl=True)
    return EXIT_OK


def _format_qh_term(partition, degree: int, coeff: int) -> str:
    factors = [] if abs(coeff) == 1 else [str(abs(coeff))]
    if degree:
        factors.append("q" if degree == 1 else f"q^{degree}")
    factors.append("X^[" + ",".join(str(x) for x in partition) + "]")
    return "*".join(factors)


def cmd_qh(args, out: TextIO) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    resultado = CalculationService.produto_quantico(args.k, args.n, lam, mu)
    if not resultado["sucesso"]:
        return report_error(resultado)

    termos = resultado["termos"]
    if args.format == "json":
        write_json({
            "space": f"Gr({args.k},{args.n})",
            "terms": [{"shape": list(shape), "q": degree, "c": c}
                      for (shape, degree), c in termos],
        }, out)
        return EXIT_OK

    if not termos:
        print("0", file=out)
        return EXIT_OK
    pieces = []
    for i, ((shape, degree), c) in enumerate(termos):
        body = _format_qh_term(shape, degree, c)
        if i == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"{'-' if c < 0 else '+'} {body}")
    print(" ".join(pieces), file=out)
    return EXIT_OK


def cmd_check_dist(args, out: TextIO) -> int:
    resultado = CalculationService.conferir_distancias(args.k, args.n)
    if "erro" in resultado:
        return report_error(resultado)
    return write_report(resultado, args.format, out)
