"""
Command line entry point.

Exit status: 0 when the property holds or the construction is valid, 1 when it
fails, 2 for malformed input or a violated precondition.
"""
import argparse
import os
from dataclasses import dataclass
from typing import Optional, Tuple

from recfan.codec import (
    cells_to_dict,
    complex_from_dict,
    complex_to_dict,
    mw_report_to_dict,
    polyhedron_to_dict,
    read_json,
    subdivision_to_dict,
    theorem14_report_to_dict,
    toric_datum_to_dict,
    verdict_to_dict,
)
from recfan.complex import (
    PolyhedralComplex,
    check_minkowski_weyl,
    complex_verdict,
    completeness_notion,
    connected_components,
    is_complete,
    require_valid,
    support,
)
from recfan.errors import InputError, RecfanError, ToricDatumRefused
from recfan.fanops import (
    Theorem14CheckList,
    aff,
    cone_complex,
    extendable_subdivision,
    recession_complex,
    roundtrip_check,
    toric_datum,
)
from recfan.fixtures import fixture_documents
from recfan.logs import LOGGER, logger_factory
from recfan.store import STORE, store_factory

# guard against accidental blowup; --max-dim overrides it
MAX_DIM = int(os.environ.get("RECFAN_MAX_DIM", "6"))

COMMANDS = (
    "validate",
    "recession",
    "cone",
    "aff",
    "check-mw",
    "check-connected",
    "check-complete",
    "theorem14",
    "subdivide",
    "roundtrip",
    "toric-datum",
    "fixtures",
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[str] = None
    output: Optional[str] = None
    witnesses: bool = False
    max_dim: int = MAX_DIM
    quiet: bool = False


def _load(config: RunConfig) -> PolyhedralComplex:
    data = read_json(config.input)
    dim = data.get("dim") if isinstance(data, dict) else None
    if isinstance(dim, int) and dim > config.max_dim:
        raise InputError("dimension {} exceeds the guard --max-dim {}".format(dim, config.max_dim))
    complex_, _ = complex_from_dict(data)
    return complex_


def _validate(config, complex_, logger) -> Tuple[int, dict]:
    verdict = complex_verdict(complex_)
    logger.write("validate", verdict.status.value)
    return (0 if verdict.is_valid else 1), {"verdict": verdict_to_dict(verdict, config.witnesses)}


def _recession(config, complex_, logger):
    cells, verdict = recession_complex(complex_)
    logger.write("recession_complex", verdict.status.value)
    document = cells_to_dict(complex_.dim, cells)
    document["verdict"] = verdict_to_dict(verdict, config.witnesses)
    return (0 if verdict.is_valid else 1), document


def _cone(config, complex_, logger):
    cells, verdict = cone_complex(complex_)
    logger.write("cone_complex", verdict.status.value)
    document = cells_to_dict(complex_.dim + 1, cells)
    document["verdict"] = verdict_to_dict(verdict, config.witnesses)
    return (0 if verdict.is_valid else 1), document


def _aff(config, complex_, logger):
    require_valid(complex_)
    sliced = aff(complex_)
    logger.write("aff", "{} cells".format(len(sliced.cells)))
    document = complex_to_dict(sliced)
    document["empty"] = sliced.is_empty
    return 0, document


def _check_mw(config, complex_, logger):
    report = check_minkowski_weyl(complex_)
    logger.write("minkowski_weyl", report.holds)
    return (0 if report.holds else 1), {"mw": mw_report_to_dict(report, config.witnesses)}


def _check_connected(config, complex_, logger):
    require_valid(complex_)
    components = connected_components(support(complex_))
    connected = len(components) <= 1
    logger.write("connected", connected)
    document = {"connected": connected}
    if config.witnesses:
        document["components"] = [[polyhedron_to_dict(_) for _ in c] for c in components]
    return (0 if connected else 1), document


def _check_complete(config, complex_, logger):
    require_valid(complex_)
    complete = is_complete(complex_)
    notion = completeness_notion(complex_)
    logger.write("complete ({})".format(notion), complete)
    return (0 if complete else 1), {"complete": complete, "completeness": notion}


def _theorem14(config, complex_, logger_label):
    checks = Theorem14CheckList(complex_, logger=logger_label)
    checks()
    if logger_label == LOGGER.LOCAL:
        checks.display()
    report = checks.report()
    document = {"report": theorem14_report_to_dict(report, config.witnesses)}
    return (0 if report.conclusions_hold else 1), document


def _subdivide(config, complex_, logger):
    result = extendable_subdivision(complex_)
    logger.write("subdivide", "{} cells".format(len(result.refined.cells)))
    return 0, subdivision_to_dict(result)


def _roundtrip(config, complex_, logger):
    holds = roundtrip_check(complex_)
    logger.write("roundtrip", holds)
    return (0 if holds else 1), {"roundtrip": holds}


def _toric_datum(config, complex_, logger):
    datum = toric_datum(complex_)
    logger.write("toric_datum", "{} cones".format(len(datum.cones)))
    return 0, {"datum": toric_datum_to_dict(datum)}


HANDLERS = {
    "validate": _validate,
    "recession": _recession,
    "cone": _cone,
    "aff": _aff,
    "check-mw": _check_mw,
    "check-connected": _check_connected,
    "check-complete": _check_complete,
    "subdivide": _subdivide,
    "roundtrip": _roundtrip,
    "toric-datum": _toric_datum,
}


def _fixtures(config: RunConfig) -> Tuple[int, dict]:
    folder = config.output or "."
    store = store_factory(STORE.LOCAL)()
    written = []
    for name, document in fixture_documents().items():
        path = os.path.join(folder, name)
        store.write_file(path, document, is_json=True)
        written.append(path)
    return 0, {"command": "fixtures", "files": written}


def run(config: RunConfig) -> Tuple[int, dict]:
    """
    Execute one command and return ``(exit status, report document)``.

    Reports echo the canonicalized input complex under ``"input"``.
    """
    if config.command == "fixtures":
        return _fixtures(config)
    logger_label = LOGGER.SILENT if config.quiet else LOGGER.LOCAL
    logger = logger_factory(logger_label)()
    try:
        if config.input is None:
            raise RecfanError("command '{}' needs an input file".format(config.command))
        complex_ = _load(config)
        if config.command == "theorem14":
            status, document = _theorem14(config, complex_, logger_label)
        else:
            status, document = HANDLERS[config.command](config, complex_, logger)
    except ToricDatumRefused as e:
        logger.write("refused", e.predicate)
        return 2, {"command": config.command, "error": str(e), "predicate": e.predicate}
    except RecfanError as e:
        logger.write("error", e)
        return 2, {"command": config.command, "error": str(e)}
    report = {"command": config.command, "status": status}
    report.update(document)
    report["input"] = complex_to_dict(complex_)

    return status, report


def _parse_args(argv=None) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="recfan",
        description="Check polyhedral complexes and build their recession and cone complexes.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input_path", nargs="?", help="complex JSON file")
    parser.add_argument("--input", dest="input_flag", help="complex JSON file")
    parser.add_argument("--output", help="report file (a folder for 'fixtures'); stdout by default")
    parser.add_argument("--witnesses", action="store_true", help="include witnesses in the report")
    parser.add_argument("--max-dim", type=int, default=MAX_DIM)
    parser.add_argument("--quiet", action="store_true", help="no summary on stderr")
    args = parser.parse_args(argv)
    if args.input_path and args.input_flag and args.input_path != args.input_flag:
        parser.error("give the input either as a positional argument or with --input")

    return RunConfig(
        command=args.command,
        input=args.input_flag or args.input_path,
        output=args.output,
        witnesses=args.witnesses,
        max_dim=args.max_dim,
        quiet=args.quiet,
    )


def main(argv=None) -> int:
    config = _parse_args(argv)
    status, report = run(config)
    if config.command == "fixtures" or config.output is None:
        store_factory(STORE.STDOUT)().write_file(None, report, is_json=True)
    else:
        store_factory(STORE.LOCAL)().write_file(config.output, report, is_json=True)

    return status


if __name__ == "__main__":
    raise SystemExit(main())
