"""
Aplicación de línea de comandos que integra todos los componentes.

Este módulo contiene la clase OrbifoldApp.
"""

import argparse
import sys
from pathlib import Path

from errors import CosetOverflow, PaperCheckFailed, UndefinedForm, UnsupportedLocalType, ValidationFailed
from numerics import parse_weight

from config.settings import OUTPUT_FORMATS, OrbifoldSettings
from configuration import (
    boundary_points,
    build_apollonius,
    build_cuspidal,
    build_preset,
    build_qm,
    normalize,
    parse_config,
    render_config,
    validate,
)
from invariants import canonical_slope, chern_pair, classify, enumerate_cuspidal, search_parabolic
from coverings import KummerCover, lift_config, theorem1_iterate
from groups import (
    STRATEGIES,
    abelianize,
    build_a2,
    build_apollonius_pi1,
    build_coordinate_triangle,
    build_local_triple,
    build_modular,
    enumerate_cosets,
    parse_presentation,
    verify_orders,
)
from ui.feedback import ConsoleFeedback
from ui.renderer import OutputRecord, TableRenderer
from .verification import VerificationSuite, check_cuspidal_rows, check_parabolic_sets, load_golden


# ============================================================================
# TIPOS DE ARGUMENTO
# ============================================================================
def weight_arg(text):
    try:
        return parse_weight(text)
    except (ValueError, UndefinedForm) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def shard_arg(text):
    """'i/n' con 0 ≤ i < n."""
    try:
        index, count = (int(part) for part in text.split("/"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"shard inválido: {text} (se espera i/n)") from exc
    if count < 1 or not 0 <= index < count:
        raise argparse.ArgumentTypeError(f"shard inválido: {text}")
    return index, count


def _add_group_source(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--modular", nargs=4, type=weight_arg, metavar=("A", "B1", "B2", "B3"))
    source.add_argument("--a2", nargs=2, type=weight_arg, metavar=("A", "B"))
    source.add_argument("--pi1", type=int, metavar="N")
    source.add_argument("--coordinate-triangle", type=int, metavar="M")
    source.add_argument("--triple", nargs=3, type=weight_arg, metavar=("B1", "B2", "B3"))
    source.add_argument("--file", metavar="PATH", help="documento de presentación ('-' = stdin)")


def _add_enumeration_options(parser):
    parser.add_argument("--max-cosets", type=int, default=None)
    parser.add_argument("--strategy", choices=STRATEGIES, default=None, help="motor de enumeración")
    parser.add_argument("--strict", action="store_true", default=None)


def build_parser():
    """Analizador de argumentos con los subcomandos de la herramienta."""
    parser = argparse.ArgumentParser(
        prog="orbifolds",
        description="Invariantes orbifold exactos de configuraciones de curvas en el plano proyectivo.",
    )
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="formato de salida")
    parser.add_argument("--verbose", action="store_true", default=None, help="mensajes de progreso")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="e, c1² y clasificación de un documento")
    inv.add_argument("path", help="documento de configuración ('-' = stdin)")
    inv.add_argument("--tangency-orders", action="store_true", help="órdenes de haces con contacto ≥ 3")

    tables = sub.add_parser("tables", help="enumeraciones exhaustivas")
    tables.add_argument("which", choices=("cuspidal", "parabolic"))
    tables.add_argument("--dmax", type=int, default=None)
    tables.add_argument("--weights", nargs="+", type=int, default=None)
    tables.add_argument("--cap", type=int, default=None)
    tables.add_argument("--max-n", type=int, default=None)
    tables.add_argument("--shard", type=shard_arg, default=(0, 1), metavar="I/N")
    tables.add_argument("--check-paper", action="store_true")

    lift = sub.add_parser("lift", help="levantamiento por un cubrimiento de Kummer")
    lift.add_argument("path", nargs="?", help="documento de configuración ('-' = stdin)")
    lift.add_argument("--k", type=int, default=2)
    lift.add_argument("--branch", nargs=3, metavar=("X", "Y", "Z"))
    lift.add_argument("--iterate", type=int, metavar="STEPS", help="serie O₁ → O₂ → …")
    lift.add_argument("--tangency-orders", action="store_true", help="admite haces con contacto ≥ 3 en la base")

    groups = sub.add_parser("groups", help="órdenes y abelianizaciones")
    groups_sub = groups.add_subparsers(dest="action", required=True)
    for action in ("order", "abelianize"):
        cmd = groups_sub.add_parser(action)
        _add_group_source(cmd)
        _add_enumeration_options(cmd)
    gverify = groups_sub.add_parser("verify")
    gverify.add_argument("--max-weight", type=int, default=None)
    _add_enumeration_options(gverify)

    verify = sub.add_parser("verify", help="todos los criterios de aceptación")
    verify.add_argument("--json", action="store_true", help="equivale a --format json")

    build = sub.add_parser("build", help="escribe el documento de una familia o preset")
    build_sub = build.add_subparsers(dest="family", required=True)
    apol = build_sub.add_parser("apollonius")
    apol.add_argument("a", type=weight_arg)
    apol.add_argument("bs", nargs="*", type=weight_arg)
    cusp = build_sub.add_parser("cuspidal")
    for name in ("d", "kappa", "nu"):
        cusp.add_argument(name, type=int)
    cusp.add_argument("b", type=weight_arg)
    qm = build_sub.add_parser("qm")
    qm.add_argument("m", type=int)
    qm.add_argument("--weight", type=weight_arg, default=2)
    preset = build_sub.add_parser("preset")
    preset.add_argument("name")
    preset.add_argument("weights", nargs="+", type=weight_arg)
    return parser


# ============================================================================
# CLASE: OrbifoldApp
# Propósito: Coordinar la línea de comandos
# Responsabilidades:
#   - Interpretar argumentos y aplicar los ajustes
#   - Llamar a la operación de cada subcomando
#   - Escribir el resultado en stdout y los diagnósticos en stderr
# ============================================================================
class OrbifoldApp:
    """
    Arquitectura:
        - OrbifoldSettings: límites y preferencias de salida
        - TableRenderer: formato plain/csv/json
        - ConsoleFeedback: avisos en stderr
        - OrbifoldApp: despacho de subcomandos y códigos de salida
    """

    def __init__(self, settings=None, stdout=None, stderr=None):
        self.settings = settings if settings else OrbifoldSettings()
        self.stdout = stdout if stdout is not None else sys.stdout
        self.feedback = ConsoleFeedback(self.settings, stderr)
        self.parser = build_parser()

    def run(self, argv=None):
        """
        Ejecuta un subcomando.

        Args:
            argv (list[str]): Argumentos (sin el nombre del programa)

        Returns:
            int: Código de salida

        Raises:
            OrbifoldError: Errores de dominio; main.py los traduce a su código
        """
        args = self.parser.parse_args(argv)
        self.settings.update(output_format=args.format, verbose=args.verbose)
        if args.command == "verify" and args.json:
            self.settings.output_format = "json"
        self.renderer = TableRenderer(self.settings.get_output_format())
        handler = {
            "invariants": self.cmd_invariants,
            "tables": self.cmd_tables,
            "lift": self.cmd_lift,
            "groups": self.cmd_groups,
            "verify": self.cmd_verify_all,
            "build": self.cmd_build,
        }[args.command]
        return handler(args)

    def emit(self, record):
        self.stdout.write(self.renderer.render(record))

    # ------------------------------------------------------------------
    def _read_text(self, path):
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")

    def _load_config(self, path, tangency_orders=False):
        """
        Lee, normaliza y valida un documento.

        Raises:
            UnsupportedLocalType: Haz con contacto ≥ 3 sin tangency_orders
            ValidationFailed: Cualquier otra violación
        """
        config = normalize(parse_config(self._read_text(path)))
        violations = validate(config, tangency_orders)
        if violations:
            for violation in violations:
                self.feedback.error(str(violation))
            unsupported = [v for v in violations if v.kind == "unsupported"]
            if unsupported:
                raise UnsupportedLocalType(unsupported[0].message, unsupported[0].point_id)
            raise ValidationFailed(violations)
        return config

    # ------------------------------------------------------------------
    def cmd_invariants(self, args):
        config = self._load_config(args.path, args.tangency_orders)
        pair = chern_pair(config, args.tangency_orders)
        tag = classify(config, args.tangency_orders)
        record = OutputRecord(f"invariants {args.path}")
        if config.label:
            record.add_summary("label", config.label)
        record.add_summary("c1sq", pair.c1sq)
        record.add_summary("e", pair.euler)
        record.add_summary("2e-c1sq", pair.diff2)
        record.add_summary("3e-c1sq", pair.diff3)
        record.add_summary("K", canonical_slope(config))
        record.add_summary("class", tag.name)
        record.add_summary("boundary", boundary_points(config, args.tangency_orders))
        self.emit(record)
        self.feedback.progress(f"{tag.name}: {tag.note}")
        return 0

    def cmd_tables(self, args):
        if args.which == "cuspidal":
            return self._tables_cuspidal(args)
        return self._tables_parabolic(args)

    def _tables_cuspidal(self, args):
        d_max = args.dmax if args.dmax is not None else self.settings.cuspidal_d_max
        weights = tuple(args.weights) if args.weights else self.settings.cuspidal_weights
        rows = enumerate_cuspidal(d_max, weights, args.shard)
        record = OutputRecord(f"tables cuspidal --dmax {d_max}", ["d", "kappa", "nu", "b", "g"])
        for row in rows:
            record.add_row(*row.as_tuple())
        record.add_summary("rows", len(rows))
        failure = None
        if args.check_paper:
            ok, detail = check_cuspidal_rows(rows, load_golden(self.settings, "cuspidal_table.json"))
            record.add_summary("check_paper", "pass" if ok else "fail")
            record.add_summary("detail", detail)
            failure = None if ok else detail
        self.emit(record)
        if failure:
            raise PaperCheckFailed(failure)
        return 0

    def _tables_parabolic(self, args):
        cap = args.cap if args.cap is not None else self.settings.parabolic_cap
        max_n = args.max_n if args.max_n is not None else self.settings.parabolic_max_n
        result = search_parabolic(cap, max_n)
        record = OutputRecord(f"tables parabolic --cap {cap}", ["clause", "case"])
        for clause in result.clauses:
            for case in result.rendered(clause):
                record.add_row(clause, case)
        record.add_summary("families", result.families)
        record.add_summary("family_members", result.family_members)
        record.add_summary("bound", result.note)
        failure = None
        if args.check_paper:
            ok, detail = check_parabolic_sets(result, load_golden(self.settings, "parabolic_sets.json"))
            record.add_summary("check_paper", "pass" if ok else "fail")
            failure = None if ok else detail
        self.emit(record)
        if failure:
            raise PaperCheckFailed(failure)
        return 0

    def cmd_lift(self, args):
        if args.iterate:
            return self._lift_iterate(args.iterate)
        if not args.path or not args.branch:
            self.parser.error("lift necesita un documento y --branch X Y Z (o --iterate N)")
        config = self._load_config(args.path, args.tangency_orders)
        report = lift_config(config, KummerCover(args.k, tuple(args.branch)))
        record = OutputRecord(f"lift --k {args.k} --branch {' '.join(args.branch)}")
        record.add_summary("degree", report.degree)
        record.add_summary("euler_base", report.base_pair.euler)
        record.add_summary("euler_lifted", report.lifted_pair.euler)
        record.add_summary("c1sq_base", report.base_pair.c1sq)
        record.add_summary("c1sq_lifted", report.lifted_pair.c1sq)
        record.add_summary("multiplicative", report.multiplicative)
        record.add_summary("orders_ok", report.orders_ok)
        record.add_summary("class_base", report.base_class.name)
        record.add_summary("class_lifted", report.lifted_class.name)
        record.document = render_config(report.lifted, report.check_lines())
        self.emit(record)
        if report.multiplicative:
            self.feedback.success(f"e y c1² escalan por {report.degree}")
        else:
            self.feedback.warning("el levantamiento no es multiplicativo")
        return 0

    def _lift_iterate(self, steps):
        reports = theorem1_iterate(steps)
        record = OutputRecord(
            f"lift --iterate {steps}",
            ["step", "branch", "locus_degree", "euler", "c1sq", "multiplicative", "class"],
        )
        for step, report in enumerate(reports, start=1):
            record.add_row(
                step,
                list(report.cover.branch),
                report.lifted.locus_degree(),
                report.lifted_pair.euler,
                report.lifted_pair.c1sq,
                report.multiplicative,
                report.lifted_class.name,
            )
        self.emit(record)
        return 0

    # ------------------------------------------------------------------
    def _presentation(self, args):
        if args.modular:
            return build_modular(*args.modular)
        if args.a2:
            return build_a2(*args.a2)
        if args.pi1 is not None:
            return build_apollonius_pi1(args.pi1)
        if args.coordinate_triangle is not None:
            return build_coordinate_triangle(args.coordinate_triangle)
        if args.triple:
            return build_local_triple(*args.triple)
        return parse_presentation(self._read_text(args.file))

    def cmd_groups(self, args):
        self.settings.update(max_cosets=args.max_cosets, coset_strategy=args.strategy, strict=args.strict)
        if args.action == "verify":
            return self._groups_verify(args)
        presentation = self._presentation(args)
        record = OutputRecord(f"groups {args.action} {presentation.label}")
        record.add_summary("presentation", presentation.label)
        record.add_summary("generators", len(presentation.generators))
        record.add_summary("relators", len(presentation.relators))
        if args.action == "abelianize":
            invariants = abelianize(presentation)
            record.add_summary("abelianization", invariants.render())
            record.add_summary("free_rank", invariants.free_rank)
            record.add_summary("torsion", list(invariants.torsion))
            self.emit(record)
            return 0
        table = enumerate_cosets(presentation, self.settings.max_cosets, self.settings.coset_strategy)
        record.add_summary("status", table.status)
        record.add_summary("order", table.order)
        self.emit(record)
        if not table.complete:
            return self._overflow(CosetOverflow(self.settings.max_cosets, presentation.label))
        return 0

    def _overflow(self, error):
        """Desbordamiento: aviso y código 0, o excepción con --strict."""
        if self.settings.strict:
            raise error
        self.feedback.warning(str(error))
        return 0

    def _groups_verify(self, args):
        max_weight = args.max_weight if args.max_weight is not None else self.settings.verify_max_weight
        report = verify_orders(max_weight, self.settings.max_cosets, self.settings.coset_strategy)
        record = OutputRecord(
            f"groups verify --max-weight {max_weight}",
            ["family", "presentation", "expected", "found", "status"],
        )
        for check in report.checks:
            record.add_row(check.family, check.label, check.expected, check.found, check.status)
        for status, count in report.counts().items():
            record.add_summary(status, count)
        self.emit(record)
        if report.failures:
            self.feedback.error(f"{len(report.failures)} órdenes no coinciden")
            return 1
        if report.overflows:
            first = report.overflows[0]
            return self._overflow(CosetOverflow(self.settings.max_cosets, first.label))
        self.feedback.success(f"{len(report.checks)} órdenes coinciden con su fórmula")
        return 0

    # ------------------------------------------------------------------
    def cmd_verify_all(self, args):
        results = VerificationSuite(self.settings, self.feedback).run()
        record = OutputRecord("verify", ["criterion", "status", "detail"])
        for result in results:
            record.add_row(result.name, "pass" if result.ok else "fail", result.detail)
        passed = sum(1 for r in results if r.ok)
        record.add_summary("passed", passed)
        record.add_summary("total", len(results))
        self.emit(record)
        if passed != len(results):
            self.feedback.error(f"{len(results) - passed} criterios fallan")
            return 1
        self.feedback.success("todos los criterios pasan")
        return 0

    def cmd_build(self, args):
        if args.family == "apollonius":
            config = build_apollonius(args.a, args.bs)
        elif args.family == "cuspidal":
            config = build_cuspidal(args.d, args.kappa, args.nu, args.b)
        elif args.family == "qm":
            config = build_qm(args.m, args.weight)
        else:
            config = build_preset(args.name, args.weights)
        record = OutputRecord(f"build {args.family}", document=render_config(config))
        self.emit(record)
        return 0
