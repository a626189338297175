"""
Comandos de estrutura: poset, shapes, psi, dist
"""
from typing import TextIO

from core.service import CalculationService
from core.shapes import to_partition
from core.utils import format_shape, render_diagram

from ..models.schemas import BoxInfo, PosetInfo, ShapeInfo
from ..services.space_service import get_space_service
from .output import EXIT_OK, FORMATS, report_error, write_json, write_legend, write_lines


def register(subparsers) -> None:
    p = subparsers.add_parser("poset", help="Desenha o poset cominúsculo do espaço")
    p.add_argument("space")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(handler=cmd_poset)

    p = subparsers.add_parser("shapes", help="Lista todos os shapes do espaço")
    p.add_argument("space")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(handler=cmd_shapes)

    p = subparsers.add_parser("psi", help="Vizinhança de curvas u(-1)")
    p.add_argument("space")
    p.add_argument("u")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(handler=cmd_psi)

    p = subparsers.add_parser("dist", help="Distância d(u, v)")
    p.add_argument("space")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(handler=cmd_dist)


def cmd_poset(args, out: TextIO) -> int:
    poset = get_space_service().get_poset(args.space)
    info = CalculationService.descrever_poset(poset)
    diagram = render_diagram(poset)

    if args.format == "json":
        write_json(PosetInfo(
            space=info["espaco"], dim=info["dim"], shapes=info["shapes"],
            z1=info["z1"], nw_shift=info["nw_shift"], diagram=diagram,
            boxes=[BoxInfo(pos=b["pos"], root=b["raiz"], short=b["curta"],
                           delta=b["delta"], z1=b["z1"]) for b in info["caixas"]],
        ), out)
        return EXIT_OK

    if args.format == "text":
        write_lines([
            f"space: {info['espaco']}",
            f"dim: {info['dim']}",
            f"shapes: {info['shapes']}",
            f"z1: {format_shape(poset, poset.z1)}",
            "",
        ], out)
    write_lines(diagram, out)
    write_legend(out)
    return EXIT_OK


def cmd_shapes(args, out: TextIO) -> int:
    poset = get_space_service().get_poset(args.space)
    shapes = CalculationService.listar_shapes(poset)["shapes"]

    if args.format == "json":
        write_json([
            ShapeInfo(shape=to_partition(poset, s["shape"]), length=s["comprimento"],
                      dual=to_partition(poset, s["dual"])).model_dump()
            for s in shapes
        ], out)
        return EXIT_OK

    for s in shapes:
        print(f"{format_shape(poset, s['shape'])}  length={s['comprimento']}  "
              f"dual={format_shape(poset, s['dual'])}", file=out)
        if args.format == "diagram":
            write_lines(render_diagram(poset, shape=s["shape"]), out)
            print("", file=out)
    return EXIT_OK


def cmd_psi(args, out: TextIO) -> int:
    service = get_space_service()
    poset = service.get_poset(args.space)
    u = service.get_shape(poset, args.u)
    resultado = CalculationService.calcular_psi(poset, u)
    if not resultado["sucesso"]:
        return report_error(resultado)

    image = resultado["shape"]
    if args.format == "json":
        write_json({"space": poset.space.label, "u": to_partition(poset, u),
                    "psi": to_partition(poset, image)}, out)
    elif args.format == "diagram":
        # caixas de u que saem marcadas com +
        write_lines(render_diagram(poset, shape=image, highlight=u - image), out)
        write_legend(out)
    else:
        print(format_shape(poset, image), file=out)
    return EXIT_OK


def cmd_dist(args, out: TextIO) -> int:
    service = get_space_service()
    poset = service.get_poset(args.space)
    u = service.get_shape(poset, args.u)
    v = service.get_shape(poset, args.v)
    resultado = CalculationService.calcular_distancia(poset, u, v)
    if not resultado["sucesso"]:
        return report_error(resultado)

    if args.format == "json":
        write_json({"space": poset.space.label, "u": to_partition(poset, u),
                    "v": to_partition(poset, v), "distance": resultado["distancia"]}, out)
    else:
        print(resultado["distancia"], file=out)
    return EXIT_OK
