# src/main.py
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, TextIO

from pydantic import BaseModel

from src import abhyankar, canon, enumalg, numsg, render, reports
from src.bipoly import BiPoly, is_infinite, positive_leading, resultant_y, resultant_y_sylvester, x_order
from src.config import Settings, load_settings
from src.errors import (
    EquisingError,
    InternalConsistencyError,
    PolyError,
    PolyParseError,
    ReducibleError,
    SemigroupError,
    UsageError,
)
from src.polyparse import parse_poly

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class CliParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


@dataclass
class CommandConfig:
    command: str
    args: list[str]
    json: bool = False
    verbose: bool = False
    xdeg_bound: Optional[int] = None
    seed: int = 0
    terms: Optional[int] = None
    coeff_bound: Optional[int] = None
    with_canonical: bool = False
    html: Optional[str] = None
    expanded: bool = False
    check: bool = False

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "CommandConfig":
        raw = getattr(ns, "gens", None) or getattr(ns, "polys", None) or []
        if getattr(ns, "milnor", None) is not None:
            raw = [str(ns.milnor)]
        return cls(
            command=ns.command,
            args=list(raw),
            json=ns.json,
            verbose=ns.verbose,
            xdeg_bound=getattr(ns, "xdeg_bound", None),
            seed=getattr(ns, "seed", 0),
            terms=getattr(ns, "terms", None),
            coeff_bound=getattr(ns, "coeff_bound", None),
            with_canonical=getattr(ns, "with_canonical", False),
            html=getattr(ns, "html", None),
            expanded=getattr(ns, "expanded", False),
            check=getattr(ns, "check", False),
        )


@dataclass
class Outcome:
    code: int
    model: BaseModel
    text: str


def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on standard output")
    common.add_argument("-v", "--verbose", action="store_true", help="more detail and INFO logging")

    parser = CliParser(prog="equising", description="Equisingularity data of plane branches.")
    sub = parser.add_subparsers(dest="command", required=True)

    def gens_command(name: str, help_text: str) -> CliParser:
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("gens", nargs="+", help="generators r_0 ... r_h (spaces or commas)")
        return cmd

    gens_command("validate", "check a candidate semigroup")
    canonical = gens_command("canonical", "canonical equation of the class")
    canonical.add_argument("--expanded", action="store_true", help="print the expanded polynomial")
    generic = gens_command("generic", "generic form of the class")
    generic.add_argument("--xdeg-bound", type=int, default=None, help="cap on theta_0 when listing E-sets")
    sample = gens_command("sample", "random member of the class")
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--terms", type=int, default=None, help="number of extra monomials")
    sample.add_argument("--coeff-bound", type=int, default=None)
    gens_command("puiseux", "Newton-Puiseux pairs")

    enum = sub.add_parser("enumerate", parents=[common], help="all classes with a Milnor number")
    enum.add_argument("milnor", type=int)
    enum.add_argument("--with-canonical", action="store_true")
    enum.add_argument("--html", default=None, metavar="PATH", help="also write an HTML table")

    for name, help_text in (
        ("irreducible", "run the irreducibility criterion"),
        ("semigroup-of", "semigroup of an irreducible polynomial"),
        ("milnor", "Milnor number of an irreducible polynomial"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("polys", nargs=1, metavar="POLY", help="expression, .poly file or - for stdin")
    inter = sub.add_parser("intersect", parents=[common], help="intersection multiplicity of two polynomials")
    inter.add_argument("polys", nargs=2, metavar="POLY")
    inter.add_argument("--check", action="store_true", help="cross-check against the Sylvester determinant")
    return parser


def read_poly(source: str, settings: Settings, stdin: TextIO) -> BiPoly:
    if source == "-":
        text = stdin.read()
    elif source.endswith(".poly"):
        path = Path(source)
        if not path.exists():
            raise UsageError(f"no such file: {source}")
        text = path.read_text(encoding="utf-8")
    else:
        text = source
    return parse_poly(text.strip(), max_degree=settings.max_degree)


def _gens(cfg: CommandConfig) -> tuple[int, ...]:
    return numsg.parse_generators(" ".join(cfg.args))


def _valid_semigroup(cfg: CommandConfig) -> tuple[Optional[numsg.SemigroupData], Optional[Outcome]]:
    gens = _gens(cfg)
    report = numsg.validate(gens)
    if not report.valid:
        out = reports.validation_out(report, None)
        return None, Outcome(EXIT_NEGATIVE, out, render.render_validation(out))
    return numsg.derive_char(gens), None


def cmd_validate(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    gens = _gens(cfg)
    report = numsg.validate(gens)
    s = numsg.derive_char(gens) if report.valid else None
    out = reports.validation_out(report, s)
    return Outcome(EXIT_OK if report.valid else EXIT_NEGATIVE, out, render.render_validation(out))


def cmd_canonical(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    s, negative = _valid_semigroup(cfg)
    if negative:
        return negative
    out = reports.canonical_out(canon.canonical_element(s))
    return Outcome(EXIT_OK, out, render.render_canonical(out, expanded=cfg.expanded, verbose=cfg.verbose))


def cmd_generic(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    s, negative = _valid_semigroup(cfg)
    if negative:
        return negative
    bound = settings.xdeg_bound if cfg.xdeg_bound is None else cfg.xdeg_bound
    if bound < 0:
        raise UsageError("--xdeg-bound must be nonnegative")
    form = canon.generic_form(s)
    members = {level.k: canon.enumerate_E(s, level.k, level.e, bound) for level in form.levels}
    out = reports.generic_out(form, bound, members)
    return Outcome(EXIT_OK, out, render.render_generic(out))


def cmd_sample(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    s, negative = _valid_semigroup(cfg)
    if negative:
        return negative
    terms = settings.extra_terms if cfg.terms is None else cfg.terms
    bound = settings.coeff_bound if cfg.coeff_bound is None else cfg.coeff_bound
    if terms < 0 or bound < 1:
        raise UsageError("--terms must be >= 0 and --coeff-bound >= 1")
    member = canon.sample_member(s, seed=cfg.seed, extra_terms=terms, coeff_bound=bound)
    out = reports.SampleOut(generators=list(s.r), seed=cfg.seed, terms=terms, member=str(member), poly=reports.poly_out(member))
    return Outcome(EXIT_OK, out, render.render_sample(out))


def cmd_puiseux(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    s, negative = _valid_semigroup(cfg)
    if negative:
        return negative
    out = reports.semigroup_out(s)
    return Outcome(EXIT_OK, out, render.render_puiseux(out))


def cmd_enumerate(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    m = int(cfg.args[0])
    classes = []
    for s in enumalg.enumerate_semigroups(m):
        nested = canon.canonical_element(s).nested() if cfg.with_canonical else None
        classes.append(reports.class_out(s, nested))
    out = reports.EnumerationOut(milnor=m, classes=classes)
    if cfg.html:
        path = Path(cfg.html)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(render.render_enumeration_html(out), encoding="utf-8")
        log.info("Wrote %s", path)
    return Outcome(EXIT_OK, out, render.render_enumeration(out))


def cmd_irreducible(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    trace = abhyankar.is_irreducible(read_poly(cfg.args[0], settings, stdin))
    out = reports.trace_out(trace)
    code = EXIT_OK if trace.irreducible else EXIT_NEGATIVE
    return Outcome(code, out, render.render_trace(out, verbose=cfg.verbose))


def _reducible_outcome(exc: ReducibleError, cfg: CommandConfig) -> Outcome:
    out = reports.trace_out(exc.trace)
    return Outcome(EXIT_NEGATIVE, out, render.render_trace(out, verbose=cfg.verbose))


def cmd_semigroup_of(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    try:
        s = abhyankar.semigroup_of(read_poly(cfg.args[0], settings, stdin))
    except ReducibleError as exc:
        return _reducible_outcome(exc, cfg)
    out = reports.semigroup_out(s)
    return Outcome(EXIT_OK, out, render.render_semigroup(out, verbose=cfg.verbose))


def cmd_milnor(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    try:
        mu, s = abhyankar.milnor_with_semigroup(read_poly(cfg.args[0], settings, stdin))
    except ReducibleError as exc:
        return _reducible_outcome(exc, cfg)
    out = reports.MilnorOut(milnor=mu, generators=list(s.r))
    return Outcome(EXIT_OK, out, render.render_milnor(out))


def cmd_intersect(cfg: CommandConfig, settings: Settings, stdin: TextIO) -> Outcome:
    if cfg.args.count("-") > 1:
        raise UsageError("standard input can feed only one polynomial")
    a = read_poly(cfg.args[0], settings, stdin)
    b = read_poly(cfg.args[1], settings, stdin)
    res = resultant_y(a, b)
    if cfg.check and max(a.degree_y, b.degree_y) <= settings.sylvester_max_degree:
        det = resultant_y_sylvester(a, b, settings.sylvester_max_degree)
        if positive_leading(det) != positive_leading(res):
            raise InternalConsistencyError(f"Sylvester determinant {det} differs from subresultant {res}")
        log.info("Sylvester determinant agrees")
    order = x_order(res)
    out = reports.IntersectOut(multiplicity="inf" if is_infinite(order) else order, resultant=str(positive_leading(res)))
    return Outcome(EXIT_OK, out, render.render_intersect(out, verbose=cfg.verbose))


COMMANDS = {
    "validate": cmd_validate,
    "canonical": cmd_canonical,
    "generic": cmd_generic,
    "sample": cmd_sample,
    "puiseux": cmd_puiseux,
    "enumerate": cmd_enumerate,
    "irreducible": cmd_irreducible,
    "semigroup-of": cmd_semigroup_of,
    "milnor": cmd_milnor,
    "intersect": cmd_intersect,
}


def _configure_logging(verbose: bool) -> None:
    level_name = (os.getenv("EQUISING_LOG_LEVEL") or "WARNING").strip().upper()
    level = logging.INFO if verbose else getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def _error_outcome(exc: Exception, code: int) -> Outcome:
    position = exc.position if isinstance(exc, PolyParseError) else None
    out = reports.ErrorOut(error=str(exc), kind=type(exc).__name__, position=position, exit_code=code)
    return Outcome(code, out, f"error: {exc}")


def _exit_code(exc: EquisingError) -> int:
    if isinstance(exc, InternalConsistencyError):
        return EXIT_INTERNAL
    if isinstance(exc, ReducibleError):
        return EXIT_NEGATIVE
    if isinstance(exc, (UsageError, PolyError, SemigroupError)):
        return EXIT_USAGE
    return EXIT_INTERNAL


def run(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    wants_json = "--json" in argv

    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        outcome = _error_outcome(exc, EXIT_USAGE)
        _emit(outcome, wants_json, stdout)
        return outcome.code
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)

    cfg = CommandConfig.from_namespace(ns)
    _configure_logging(cfg.verbose)
    settings = load_settings()
    log.info("Running %s %s", cfg.command, " ".join(cfg.args))

    try:
        outcome = COMMANDS[cfg.command](cfg, settings, stdin)
    except EquisingError as exc:
        code = _exit_code(exc)
        if code == EXIT_INTERNAL:
            log.error("Internal consistency failure: %s", exc)
        outcome = _error_outcome(exc, code)
    _emit(outcome, cfg.json, stdout)
    return outcome.code


def _emit(outcome: Outcome, as_json: bool, stdout: TextIO) -> None:
    if as_json:
        print(json.dumps(outcome.model.model_dump(by_alias=True)), file=stdout)
    elif outcome.code in (EXIT_USAGE, EXIT_INTERNAL):
        print(outcome.text, file=sys.stderr)
    else:
        print(outcome.text, file=stdout)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
