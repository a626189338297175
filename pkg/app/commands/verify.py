"""
Comando verify: suítes de verificação com relatório em texto ou NDJSON
"""
from typing import Any, Dict, TextIO

from core.processors import resumo_falhas, tabela_falhas
from core.service import CalculationService
from core.validators import VerificadorTeoremas

from ..config import get_settings
from ..models.schemas import VerificationFailure, VerificationReport
from ..services.space_service import get_space_service
from .output import EXIT_FAILURE, EXIT_OK, FORMATS, report_error, write_json


def register(subparsers) -> None:
    p = subparsers.add_parser("verify", help="Executa uma suíte de verificação")
    p.add_argument("space")
    p.add_argument("suite", choices=VerificadorTeoremas.SUITES)
    p.add_argument("--jobs", type=int, default=None, help="Número de threads (padrão: QKC_JOBS)")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(handler=cmd_verify)


def write_report(resultado: Dict[str, Any], fmt: str, out: TextIO) -> int:
    """Mensagem de resumo, tabela de falhas e código de saída"""
    falhas = resultado["falhas"]
    if fmt == "json":
        for f in falhas:
            write_json(VerificationFailure(**f), out)
        write_json(VerificationReport(
            space=resultado["espaco"], suite=resultado["suite"], checked=resultado["total"],
            failures=len(falhas), message=resultado["mensagem"],
        ), out)
    else:
        print(resultado["mensagem"], file=out)
        if falhas:
            print("", file=out)
            print(tabela_falhas(falhas).to_string(index=False), file=out)
            print("", file=out)
            print(resumo_falhas(falhas).to_string(index=False), file=out)
    return EXIT_OK if not falhas else EXIT_FAILURE


def cmd_verify(args, out: TextIO) -> int:
    settings = get_settings()
    poset = get_space_service().get_poset(args.space)
    resultado = CalculationService.verificar(
        poset,
        args.suite,
        max_workers=args.jobs or settings.jobs,
        debug=settings.debug,
        sample_size=settings.lemma_sample_size,
        exhaustive_limit=settings.exhaustive_chain_limit,
        seed=settings.random_seed,
    )
    if "erro" in resultado:
        return report_error(resultado)
    return write_report(resultado, args.format, out)
