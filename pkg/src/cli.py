"""
Command-line interface for bsroots.
Computes nu-invariants and Bernstein-Sato roots of monomial ideals and prints
one JSON object (or a table) on stdout; diagnostics go to stderr.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Literal, Optional, TextIO, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, ValidationError, model_validator

from bs_pipeline import RootStatus, bs_roots
from char_zero import char0_roots, compare_char_p
from config import Char0Config, PipelineConfig, default_cache_path, default_jobs, default_log_level
from errors import ConsistencyError, DimensionError, PreconditionError, ResourceBudgetError
from frobenius_cartier import PrimePower, bracket_power, cartier_image, nu_set_chain
from monomial_core import MonomialIdeal
from nu_engine import compute_nu, default_grid, nu_set_grid
from utils.cache_utils import ResultCache, make_key
from utils.number_utils import require_prime
from utils.parsing_utils import parse_ideals, render_ideal, split_vars
from utils.render_utils import (
    dumps,
    ideal_json,
    ideal_text,
    rational_json,
    rationals_json,
    render_table,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_CONSISTENCY = 4

EXIT_CODES = {
    PreconditionError: EXIT_PRECONDITION,
    DimensionError: EXIT_PRECONDITION,
    ResourceBudgetError: EXIT_BUDGET,
    ConsistencyError: EXIT_CONSISTENCY,
}

Command = Literal["nu", "nu-set", "bs-roots", "char0-roots", "compare", "cartier", "bracket"]

REQUIRED_FLAGS = {
    "nu": ("ideal", "J", "q"),
    "nu-set": ("ideal", "p", "e"),
    "bs-roots": ("ideal", "p"),
    "char0-roots": ("ideal",),
    "compare": ("ideal", "primes"),
    "cartier": ("ideal", "p", "e"),
    "bracket": ("ideal", "q"),
}

# Fields that never change a result and stay out of cache keys.
PRESENTATION_FIELDS = {"command", "ideal", "J", "vars", "format", "cache", "jobs", "progress", "log_level"}


class CommandConfig(BaseModel):
    """A validated command line."""

    model_config = ConfigDict(frozen=True)

    command: Command
    ideal: Optional[str] = None
    J: Optional[str] = None
    vars: Optional[str] = None
    p: Optional[PositiveInt] = None
    e: Optional[PositiveInt] = None
    q: Optional[PositiveInt] = None
    levels: Optional[PositiveInt] = None
    m_max: Optional[PositiveInt] = None
    grid_scale: Optional[PositiveInt] = None
    samples: Optional[PositiveInt] = None
    primes: Optional[List[PositiveInt]] = None
    method: Literal["grid", "chain", "both"] = "grid"
    certify: bool = True
    format: Literal["json", "table"] = "json"
    cache: Optional[str] = None
    jobs: PositiveInt = 1
    progress: bool = False
    log_level: str = "WARNING"

    @model_validator(mode="after")
    def _check_command_flags(self):
        missing = [name for name in REQUIRED_FLAGS[self.command] if getattr(self, name) is None]
        if missing:
            flags = ", ".join(f"--{name.replace('_', '-')}" for name in missing)
            raise ValueError(f"{self.command} requires {flags}")
        if self.p is not None:
            require_prime(self.p)
        for p in self.primes or []:
            require_prime(p)
        return self


def _options(config: CommandConfig, *names: str) -> Dict[str, Any]:
    return {name: getattr(config, name) for name in names if getattr(config, name) is not None}


def _read_ideals(config: CommandConfig, stdin: TextIO) -> Tuple[MonomialIdeal, Optional[MonomialIdeal]]:
    """a and, when given, J, parsed in one ring."""
    specs = [config.ideal] if config.J is None else [config.ideal, config.J]
    texts = [stdin.read() if spec == "-" else spec for spec in specs]
    ideals = parse_ideals(texts, split_vars(config.vars))
    return ideals[0], ideals[1] if len(ideals) > 1 else None


def _nu_document(config: CommandConfig, a: MonomialIdeal, J: MonomialIdeal) -> Dict[str, Any]:
    return {"nu": compute_nu(a, J, config.q)}


def _nu_set_document(config: CommandConfig, a: MonomialIdeal) -> Dict[str, Any]:
    pp = PrimePower(config.p, config.e)
    if config.method == "chain":
        values = nu_set_chain(a, pp)
    else:
        grid = default_grid(a).scaled(config.grid_scale or 1)
        values = nu_set_grid(a, pp, grid, jobs=config.jobs, progress=config.progress)
        if config.method == "both":
            chain = nu_set_chain(a, pp)
            if chain != values:
                raise ConsistencyError(
                    f"grid only {sorted(values - chain)}, chain only {sorted(chain - values)}"
                )
    return {"level": config.e, "set": sorted(values), "method": config.method}


def _pipeline_config(config: CommandConfig) -> PipelineConfig:
    return PipelineConfig(
        certify=config.certify,
        method=config.method,
        jobs=config.jobs,
        progress=config.progress,
        **_options(config, "levels", "samples", "grid_scale"),
    )


def _char0_config(config: CommandConfig) -> Char0Config:
    options = _options(config, "m_max", "grid_scale")
    if config.samples is not None:
        options["samples"] = max(5, config.samples)
    return Char0Config(jobs=config.jobs, progress=config.progress, **options)


def _bs_roots_document(config: CommandConfig, a: MonomialIdeal) -> Dict[str, Any]:
    report = bs_roots(a, config.p, _pipeline_config(config))
    roots = []
    for entry in report.entries:
        if entry.status == RootStatus.UNRESOLVED:
            continue
        certificate = None
        if entry.certificate is not None:
            cert = entry.certificate
            certificate = {
                "J": ideal_json(cert.J),
                "d": cert.d,
                "beta": rational_json(cert.beta),
                "exponents": list(cert.exponents),
                "decomposition": {"m": str(cert.residue), "gamma": rational_json(cert.tail), "t": cert.t},
            }
        roots.append({
            "value": rational_json(entry.value),
            "status": entry.status.value,
            "certificate": certificate,
        })
    return {
        "p": report.p,
        "roots": roots,
        "unresolved": [list(digits) for digits in report.unresolved],
        "level_reached": report.level_reached,
    }


def _char0_document(config: CommandConfig, a: MonomialIdeal) -> Dict[str, Any]:
    result = char0_roots(a, _char0_config(config))
    roots = []
    for eta in sorted(result.witnesses):
        law = result.witnesses[eta]
        roots.append({
            "value": rational_json(eta),
            "witness": {
                "J": ideal_json(law.J),
                "M": law.M,
                "slope": rational_json(law.slope),
                "validated_samples": law.validated_samples,
            },
        })
    return {"roots": roots, "grid_limited": result.grid_limited}


def _compare_document(config: CommandConfig, a: MonomialIdeal) -> Dict[str, Any]:
    report = compare_char_p(a, config.primes, _pipeline_config(config), _char0_config(config))
    return {
        "char0": rationals_json(report.char_zero.roots),
        "grid_limited": report.char_zero.grid_limited,
        "primes": [
            {
                "p": item.p,
                "char_p": rationals_json(item.char_p),
                "missing_in_char_p": rationals_json(item.missing_in_char_p),
                "extra_in_char_p": rationals_json(item.extra_in_char_p),
                "equal": item.equal,
                "zp_restriction_holds": item.zp_restriction_holds,
            }
            for item in report.primes
        ],
    }


def _ideal_document(ideal: MonomialIdeal) -> Dict[str, Any]:
    return {"ideal": ideal_json(ideal), "text": render_ideal(ideal)}


def compute_document(config: CommandConfig, a: MonomialIdeal,
                     J: Optional[MonomialIdeal] = None) -> Dict[str, Any]:
    """Dispatch a validated command to the library."""
    command = config.command
    if command == "nu":
        return _nu_document(config, a, J)
    if command == "nu-set":
        return _nu_set_document(config, a)
    if command == "bs-roots":
        return _bs_roots_document(config, a)
    if command == "char0-roots":
        return _char0_document(config, a)
    if command == "compare":
        return _compare_document(config, a)
    if command == "cartier":
        return _ideal_document(cartier_image(a, PrimePower(config.p, config.e)))
    return _ideal_document(bracket_power(a, config.q))


def _rational_cell(data: Dict[str, str]) -> str:
    num, den = data["num"], data["den"]
    return num if den == "1" else f"{num}/{den}"


def render_document(command: str, document: Dict[str, Any], fmt: str) -> str:
    """JSON (canonical) or a human-oriented table."""
    if fmt == "json":
        return dumps(document)
    if command == "nu":
        return render_table("nu-invariant", ["nu"], [[document["nu"]]])
    if command == "nu-set":
        values = ", ".join(str(v) for v in document["set"])
        return render_table("nu-invariants", ["level", "method", "set"],
                            [[document["level"], document["method"], values]])
    if command == "bs-roots":
        rows = []
        for root in document["roots"]:
            cert = root["certificate"]
            detail = "" if cert is None else (
                f"J={ideal_text(cert['J'])} d={cert['d']} beta={_rational_cell(cert['beta'])}"
            )
            rows.append([_rational_cell(root["value"]), root["status"], detail])
        for digits in document["unresolved"]:
            rows.append(["?", "unresolved", "digits " + "".join(str(d) for d in digits)])
        return render_table(f"Bernstein-Sato roots, p={document['p']}, levels={document['level_reached']}",
                            ["root", "status", "certificate"], rows)
    if command == "char0-roots":
        rows = [
            [_rational_cell(root["value"]), ideal_text(root["witness"]["J"]),
             root["witness"]["M"], _rational_cell(root["witness"]["slope"])]
            for root in document["roots"]
        ]
        title = "Bernstein-Sato roots, characteristic 0"
        if document["grid_limited"]:
            title += " (grid-limited)"
        return render_table(title, ["root", "J", "M", "slope"], rows)
    if command == "compare":
        rows = [
            [item["p"], " ".join(_rational_cell(x) for x in item["char_p"]),
             " ".join(_rational_cell(x) for x in item["missing_in_char_p"]),
             "yes" if item["zp_restriction_holds"] else "no"]
            for item in document["primes"]
        ]
        title = "char 0: " + " ".join(_rational_cell(x) for x in document["char0"])
        return render_table(title, ["p", "char p roots", "missing", "= char 0 in Z_(p)"], rows)
    return render_table("ideal", ["generators"], [[document["text"]]])


def run(config: CommandConfig, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Execute one command.

    Args:
        config: Validated command line
        stdin: Source for "--ideal -"
        stdout: Receives the rendered result
        stderr: Receives error messages

    Returns:
        Exit code (0, 2, 3 or 4)
    """
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        a, J = _read_ideals(config, stdin)
        cache = ResultCache(config.cache) if config.cache else None
        key = None
        document = None
        if cache is not None:
            fields = config.model_dump(exclude=PRESENTATION_FIELDS)
            fields["ideal"] = ideal_json(a)
            if J is not None:
                fields["J"] = ideal_json(J)
            key = make_key(config.command, **fields)
            document = cache.lookup(key)
            if document is not None:
                logger.info("cache hit for %s", config.command)
        if document is None:
            if config.command in ("char0-roots", "compare"):
                logger.warning("char-0 completeness is heuristic: roots are searched on a bounded grid")
            document = compute_document(config, a, J)
            if document.get("grid_limited"):
                logger.warning("result is grid-limited; rerun with a larger --grid-scale")
            if cache is not None:
                cache.store(key, document)
        print(render_document(config.command, document, config.format), file=stdout)
        return EXIT_OK
    except ValidationError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_PRECONDITION
    except tuple(EXIT_CODES) as e:
        code = next(code for cls, code in EXIT_CODES.items() if isinstance(e, cls))
        print(f"error: {e}", file=stderr)
        return code


def _primes(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of primes, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ideal", help='Ideal a, e.g. "(x1^2, x2^3)", JSON, or - for stdin')
    common.add_argument("--vars", help="Comma-separated variable names (default x1..xn)")
    common.add_argument("--format", choices=["json", "table"], default="json", help="Output format")
    common.add_argument("--cache", default=default_cache_path(), help="Result cache file (env BSROOTS_CACHE)")
    common.add_argument("--jobs", type=int, default=default_jobs(), help="Worker processes for sweeps")
    common.add_argument("--progress", action="store_true", help="Show progress bars on stderr")
    common.add_argument("--log-level", default=default_log_level(), help="Logging level (env BSROOTS_LOG_LEVEL)")

    parser = argparse.ArgumentParser(prog="bsroots", description="Bernstein-Sato roots of monomial ideals")
    commands = parser.add_subparsers(dest="command", required=True)

    nu = commands.add_parser("nu", parents=[common], help="nu^J_a(q)")
    nu.add_argument("--J", dest="J", help="Ideal J containing a in its radical")
    nu.add_argument("--q", type=int)

    nu_set = commands.add_parser("nu-set", parents=[common], help="Level-e nu-invariants below r p^e")
    nu_set.add_argument("--p", type=int)
    nu_set.add_argument("--e", type=int)
    nu_set.add_argument("--method", choices=["grid", "chain", "both"], default="grid")
    nu_set.add_argument("--grid-scale", type=int)

    for name, help_text in (("bs-roots", "Roots in characteristic p"),
                            ("compare", "Compare char-0 and char-p roots")):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if name == "bs-roots":
            sub.add_argument("--p", type=int)
        else:
            sub.add_argument("--primes", type=_primes, help="Comma-separated primes, e.g. 2,3,5,7")
            sub.add_argument("--m-max", type=int)
        sub.add_argument("--levels", type=int, help="Depth E (default: p^E >= 10^6, at least 16)")
        sub.add_argument("--certify", action=argparse.BooleanOptionalAction, default=True)
        sub.add_argument("--samples", type=int)
        sub.add_argument("--grid-scale", type=int)
        sub.add_argument("--method", choices=["grid", "chain", "both"], default="grid")

    char0 = commands.add_parser("char0-roots", parents=[common], help="Roots in characteristic 0")
    char0.add_argument("--grid-scale", type=int)
    char0.add_argument("--m-max", type=int)
    char0.add_argument("--samples", type=int)

    cartier = commands.add_parser("cartier", parents=[common], help="Cartier image C^e a")
    cartier.add_argument("--p", type=int)
    cartier.add_argument("--e", type=int)

    bracket = commands.add_parser("bracket", parents=[common], help="Bracket power a^[q]")
    bracket.add_argument("--q", type=int)
    return parser


def main(argv: Optional[List[str]] = None, stdin: Optional[TextIO] = None,
         stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Main function for the command line."""
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PRECONDITION if e.code else EXIT_OK

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=stderr,
        force=True,
    )
    try:
        config = CommandConfig(**{k: v for k, v in vars(args).items() if v is not None})
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        print(f"usage error: {messages}", file=stderr)
        print(parser.format_usage(), file=stderr, end="")
        return EXIT_PRECONDITION
    return run(config, stdin=stdin, stdout=stdout, stderr=stderr)


if __name__ == "__main__":
    sys.exit(main())
