# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""
`biffobear_hyperboloid.cli`
================================================================================

Command-line front end, installed as ``hyperboloid-trig``.

Commands read JSON from their positional argument, from ``--input FILE`` or,
with ``-``, from stdin. The polygon and transversal commands generate seeded
random instances when given no input. Reports go to stdout as JSON or CSV
with floats written to 17 significant digits; diagnostics go to stderr.

Exit codes: 0 success, 1 verification failure, 2 malformed input, 3 a
geometric precondition was violated.
"""

import argparse
import csv
import datetime
import json
import logging
import math
import sys
from collections import namedtuple

import numpy as np

from biffobear_hyperboloid import (
    __version__,
    errors,
    lorentz,
    objects,
    oracle,
    pairings,
    polygons,
    tetra,
    verify,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_GEOMETRY = 3

RunConfig = namedtuple(
    "RunConfig",
    ["seed", "tolerances", "output_format", "count", "timestamp", "workers"],
)

_TOL_PREFIX = "--tol."


def _encode(value):
    """JSON text with every float at 17 significant digits."""
    if isinstance(value, dict):
        items = ("%s: %s" % (json.dumps(str(k)), _encode(v)) for k, v in value.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_encode(v) for v in value) + "]"
    if isinstance(value, (bool, np.bool_)):
        return json.dumps(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return format(value, ".17g") if math.isfinite(value) else json.dumps(value)
    return json.dumps(value)


def _cell(value):
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (dict, list, tuple, np.ndarray)):
        return _encode(value)
    return "" if value is None else str(value)


def _emit(report, config, rows=None, stream=None):
    """Write a report as JSON, or its rows as CSV."""
    stream = sys.stdout if stream is None else stream
    if config.output_format == "csv":
        rows = rows if rows is not None else [report]
        if not rows:
            return
        # Union of every row's keys, in first-seen order
        fieldnames = list(dict.fromkeys(key for row in rows for key in row))
        writer = csv.DictWriter(
            stream, fieldnames=fieldnames, restval="", lineterminator="\n"
        )
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        return
    if config.timestamp:
        report = dict(
            report,
            timestamp=datetime.datetime.now(datetime.timezone.utc).isoformat(),
        )
    stream.write(_encode(report) + "\n")


def _read_json(args):
    if args.data is not None and args.data != "-":
        text = args.data
    elif args.input is not None:
        with open(args.input, encoding="utf-8") as source:
            text = source.read()
    elif args.data == "-":
        text = sys.stdin.read()
    else:
        return None
    return json.loads(text)


def _coords(value):
    return [float(c) for c in value]


def cmd_classify(args, config):
    """Report the causal class of a vector."""
    vector = _read_json(args)
    if vector is None:
        raise ValueError("classify needs a vector")
    found = lorentz.classify(vector, tol=config.tolerances["class"])
    text = found.kind.value
    if found.positive is not None:
        text += ", positive" if found.positive else ", negative"
    _emit(
        {
            "class": text,
            "kind": found.kind.value,
            "positive": found.positive,
            "norm_squared": lorentz.norm_squared(vector),
        },
        config,
    )
    return EXIT_OK


def _distance_report(first, second, config):
    pair = (first.kind, second.kind)
    if pair == ("point", "point"):
        distance = pairings.dist_point_point(first, second)
        return {"lemma": "point-point", "distance": distance}
    if pair == ("halfspace", "halfspace"):
        relation = pairings.plane_pair_relation(
            first, second, tol=config.tolerances["parallel"]
        )
        report = {"lemma": "plane-plane", "relation": relation.variant.value}
        if relation.variant is pairings.PlaneRelation.INTERSECTING:
            report["angle"] = relation.eta
        elif relation.variant is pairings.PlaneRelation.ULTRAPARALLEL:
            report["distance"] = relation.eta
            report["opposed"] = relation.opposed
            report["feet"] = [
                _coords(foot.v)
                for foot in pairings.perp_foot_plane_plane(
                    first, second, tol=config.tolerances["parallel"]
                )
            ]
        return report
    if pair == ("point", "halfspace") or pair == ("halfspace", "point"):
        point, h = (first, second) if first.kind == "point" else (second, first)
        found = pairings.sdist_point_plane(point, h)
        return {"lemma": found.convention, "distance": found.value}
    if pair == ("horoball", "horoball"):
        found = pairings.sdist_horosphere_horosphere(first, second)
        return {
            "lemma": found.distance.convention,
            "distance": found.distance.value,
            "feet": [_coords(foot.v) for foot in found.feet],
            "witness": objects.to_json(found.witness),
        }
    if "horoball" in pair and "point" in pair:
        point, b = (first, second) if first.kind == "point" else (second, first)
        found = pairings.sdist_point_horosphere(point, b)
    elif "horoball" in pair and "halfspace" in pair:
        h, b = (first, second) if first.kind == "halfspace" else (second, first)
        found = pairings.sdist_plane_horosphere(h, b, tol=config.tolerances["obj"])
    else:
        raise ValueError("No distance between a %s and a %s" % pair)
    return {
        "lemma": found.distance.convention,
        "distance": found.distance.value,
        "foot": _coords(found.foot.v),
        "witness": objects.to_json(found.witness),
    }


def cmd_dist(args, config):
    """Report the distance between two objects given as JSON."""
    tol = config.tolerances["obj"]
    first = objects.from_json(json.loads(args.first), tol=tol)
    second = objects.from_json(json.loads(args.second), tol=tol)
    _emit(_distance_report(first, second, config), config)
    return EXIT_OK


def _instances(args, config, key, random_instance):
    """Yield ``(seed, data)`` from the input or from seeded random draws."""
    data = _read_json(args)
    if data is not None:
        if key not in data:
            raise KeyError("Input must be an object with a %r entry" % key)
        yield None, data[key]
        return
    for seed in oracle.instance_seeds(config.seed, config.count):
        yield seed, random_instance(np.random.default_rng(seed))


def _random_quad(rng):
    x0, x1, y = oracle.random_quad_instance(rng)
    return {"x0": x0.x, "x1": x1.x, "y": y.y}


def _quad_objects(entry, tol):
    if "x0" in entry:
        return (
            objects.Horoball(entry["x0"], tol=tol),
            objects.Horoball(entry["x1"], tol=tol),
            objects.HalfSpace(entry["y"], tol=tol),
        )
    return polygons.quad_from_scalars(
        float(entry["a0"]), float(entry["a1"]), float(entry["d"])
    )


def quad_report(data):
    """dict: Measured values, law predictions and residuals of a quadrilateral."""
    theta0, theta1 = polygons.quad_arcs(data.ell, data.d, data.a0, data.a1)
    return {
        "x0": _coords(data.x0.x),
        "x1": _coords(data.x1.x),
        "y": _coords(data.y.y),
        "measured": {
            "ell": data.ell,
            "a0": data.a0,
            "a1": data.a1,
            "d": data.d,
            "theta0": data.theta0,
            "theta1": data.theta1,
        },
        "law": {
            "ell": polygons.quad_side(data.d, data.a0, data.a1),
            "theta0": theta0,
            "theta1": theta1,
        },
        "residuals": polygons.quad_residuals(data),
    }


def cmd_quad(args, config):
    """Measure quadrilaterals and compare them with their laws."""
    tol = config.tolerances["obj"]
    reports = []
    for seed, entry in _instances(args, config, "quad", _random_quad):
        data = polygons.quad_build(*_quad_objects(entry, tol), tol=tol)
        reports.append(dict(seed=seed, **quad_report(data)))
    _emit({"quad": reports}, config, rows=[_flatten(r) for r in reports])
    return EXIT_OK


def _random_pent(rng):
    x, y0, y1 = oracle.random_pent_instance(rng)
    return {"x": x.x, "y0": y0.y, "y1": y1.y}


def _pent_objects(entry, tol):
    if "x" in entry:
        return (
            objects.Horoball(entry["x"], tol=tol),
            objects.HalfSpace(entry["y0"], tol=tol),
            objects.HalfSpace(entry["y1"], tol=tol),
        )
    return polygons.pent_from_scalars(
        float(entry["d"]), float(entry["a0"]), float(entry["a1"])
    )


def pent_report(data):
    """dict: Measured values, law predictions and residuals of a pentagon."""
    ell0, ell1 = polygons.pent_sides(data.d, data.a0, data.a1)
    return {
        "x": _coords(data.x.x),
        "y0": _coords(data.y0.y),
        "y1": _coords(data.y1.y),
        "measured": {
            "d": data.d,
            "ell0": data.ell0,
            "ell1": data.ell1,
            "cosh_ell0": np.cosh(data.ell0),
            "cosh_ell1": np.cosh(data.ell1),
            "a0": data.a0,
            "a1": data.a1,
            "theta": data.theta,
        },
        "law": {
            "ell0": ell0,
            "ell1": ell1,
            "theta": polygons.pent_arc(data.d, data.a0, data.a1, data.ell0, data.ell1),
        },
        "residuals": polygons.pent_residuals(data),
    }


def cmd_pent(args, config):
    """Measure pentagons and compare them with their laws."""
    tol = config.tolerances["obj"]
    reports = []
    for seed, entry in _instances(args, config, "pent", _random_pent):
        data = polygons.pent_build(
            *_pent_objects(entry, tol),
            tol=tol,
            tol_parallel=config.tolerances["parallel"],
        )
        reports.append(dict(seed=seed, **pent_report(data)))
    _emit({"pent": reports}, config, rows=[_flatten(r) for r in reports])
    return EXIT_OK


def _flatten(report):
    """One CSV row: nested dicts become ``outer.inner`` columns."""
    row = {}
    for key, value in report.items():
        if isinstance(value, dict):
            for inner, item in value.items():
                row["%s.%s" % (key, inner)] = item
        else:
            row[key] = value
    return row


def _build_tetra(matrix, config):
    tol = config.tolerances
    return tetra.tetra_from_edge_lengths(
        matrix, tol=tol["parallel"], tol_realize=tol["realize"]
    )


def cmd_tetra_realize(args, config):
    """Realize a truncated tetrahedron from its L matrix."""
    data = _read_json(args)
    if data is None or "L" not in data:
        raise KeyError("Input must be an object with an 'L' entry")
    solid = _build_tetra(data["L"], config)
    tol_deg = config.tolerances["deg"]
    hats = [tetra.hat_plane(solid, i, tol=tol_deg) for i in range(4)]
    _emit(
        {
            "L": solid.L,
            "normals": [h.y for h in solid.normals],
            "hat_planes": [
                {"normal": z.y, "orthogonal": orthogonal} for z, orthogonal in hats
            ],
            "degenerate": any(orthogonal for _, orthogonal in hats),
        },
        config,
    )
    return EXIT_OK


def _parse_pair(text):
    try:
        first, second = text.split(":")
        pair = tuple(
            tuple(int(c) for c in part.split(",")) for part in (first, second)
        )
    except ValueError as error:
        raise argparse.ArgumentTypeError(
            "Edge pair must look like 0,1:2,3, got %r" % text
        ) from error
    return pair


def cmd_tetra_transversal(args, config):
    """Transversals of one L matrix, or of a seeded batch of random ones."""
    data = _read_json(args)
    if data is not None:
        if "L" not in data:
            raise KeyError("Input must be an object with an 'L' entry")
        batch = [(None, np.asarray(data["L"], dtype=float))]
    else:
        batch = [
            (seed, oracle.random_edge_lengths(np.random.default_rng(seed)))
            for seed in oracle.instance_seeds(config.seed, config.count)
        ]
    pairs = [args.pair] if args.pair else list(tetra.TRANSVERSAL_PAIRS)
    reports, rows = [], []
    for seed, matrix in batch:
        solid = _build_tetra(matrix, config)
        found = []
        for pair, other in pairs:
            item = tetra.transversal(
                solid,
                pair,
                other,
                tol_deg=config.tolerances["deg"],
                tol_quad=config.tolerances["quad"],
            )
            entry = {
                "pair": [list(pair), list(other)],
                "s0": item.s0,
                "t0": item.t0,
                "coshT": item.cosh_T,
                "T": item.T,
                "degenerate": item.degenerate,
                "within_edges": item.within_edges,
            }
            found.append(entry)
            row = {"seed": seed}
            for i, j in zip(*np.triu_indices(4, 1)):
                row["L%s%s" % (i, j)] = solid.L[i, j]
            for key in ("s0", "t0", "coshT", "T", "degenerate"):
                row[key] = entry[key]
            row["pair"] = "%s%s:%s%s" % (pair + other)
            rows.append(row)
        reports.append({"seed": seed, "L": solid.L, "transversals": found})
    _emit(
        {"tetra": reports, "degeneracy_tolerance": config.tolerances["deg"]},
        config,
        rows=rows,
    )
    return EXIT_OK


def cmd_tetra_bound(args, config):
    """Lower bound for cosh T, and cosh T itself when a, b, c, d are given."""
    if len(args.cross) not in (1, 4):
        raise ValueError("Give either L or the four values a b c d")
    report = {
        "x": args.x,
        "y": args.y,
        "bound": tetra.transversal_bound(args.x, args.y, min(args.cross)),
    }
    if len(args.cross) == 4:
        report["coshT"] = tetra.transversal_length(
            args.x,
            args.y,
            *args.cross,
            tol_deg=config.tolerances["deg"],
            tol_quad=config.tolerances["quad"],
        )
    _emit(report, config)
    return EXIT_OK


def cmd_verify(args, config):
    """Run verification suites; exit 1 if any fails."""
    options = dict(
        count=args.count,
        seed=config.seed,
        workers=config.workers,
        tolerances=config.tolerances,
    )
    if args.suite == "all":
        results = verify.run_all(**options)
    else:
        results = [verify.run_suite(args.suite, **options)]
    suites = [result._asdict() for result in results]
    rows = [
        dict(
            suite=r.name,
            passed=r.passed,
            count=r.count,
            seed=r.seed,
            failed=len(r.failed_instances),
            **{"worst.%s" % k: v for k, v in sorted(r.worst.items())}
        )
        for r in results
    ]
    passed = all(r.passed for r in results)
    _emit({"passed": passed, "suites": suites}, config, rows=rows)
    return EXIT_OK if passed else EXIT_FAILED


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="run seed (default 0)")
    common.add_argument(
        "--count", type=int, default=None, help="number of random instances"
    )
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument(
        "--no-timestamp", action="store_true", help="omit the report timestamp"
    )
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--input", help="read JSON input from this file")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug"
    )
    return common


def build_parser():
    """argparse.ArgumentParser: The full command-line grammar.

    ``--tol.<name> VALUE`` options are not part of the grammar; :func:`main`
    strips them first.
    """
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="hyperboloid-trig",
        description="Hyperbolic trigonometry in the hyperboloid model.",
        epilog="Tolerances: --tol.<name> VALUE with name one of %s."
        % ", ".join(sorted(verify.TOLERANCES)),
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("classify", parents=[common], help="causal class")
    sub.add_argument("data", nargs="?", help="vector as JSON, or - for stdin")
    sub.set_defaults(func=cmd_classify)

    sub = commands.add_parser("dist", parents=[common], help="distance of two objects")
    sub.add_argument("first", help='object as JSON, e.g. {"kind": "point", ...}')
    sub.add_argument("second", help="object as JSON")
    sub.set_defaults(func=cmd_dist)

    for name, func in (("quad", cmd_quad), ("pent", cmd_pent)):
        sub = commands.add_parser(name, parents=[common], help="%s laws" % name)
        sub.add_argument("data", nargs="?", help="input JSON, or - for stdin")
        sub.set_defaults(func=func)

    tetra_parser = commands.add_parser("tetra", help="truncated tetrahedra")
    tetra_commands = tetra_parser.add_subparsers(dest="tetra_command", required=True)
    sub = tetra_commands.add_parser("realize", parents=[common])
    sub.add_argument("data", nargs="?", help='{"L": [[...]]}, or - for stdin')
    sub.set_defaults(func=cmd_tetra_realize)
    sub = tetra_commands.add_parser("transversal", parents=[common])
    sub.add_argument("data", nargs="?", help='{"L": [[...]]}, or - for stdin')
    sub.add_argument(
        "--pair", type=_parse_pair, default=None, help="edge pair such as 0,1:2,3"
    )
    sub.set_defaults(func=cmd_tetra_transversal)
    sub = tetra_commands.add_parser("bound", parents=[common])
    sub.add_argument("x", type=float)
    sub.add_argument("y", type=float)
    sub.add_argument("cross", type=float, nargs="+", help="L, or a b c d")
    sub.set_defaults(func=cmd_tetra_bound)

    sub = commands.add_parser("verify", parents=[common], help="verification suites")
    sub.add_argument("suite", choices=["all"] + sorted(verify.SUITES))
    sub.set_defaults(func=cmd_verify)
    return parser


def _split_tolerances(argv):
    """Separate ``--tol.<name> VALUE`` pairs from the other arguments."""
    tolerances, rest = {}, []
    items = iter(argv)
    for item in items:
        if not item.startswith(_TOL_PREFIX):
            rest.append(item)
            continue
        name, _, value = item[len(_TOL_PREFIX) :].partition("=")
        if not value:
            value = next(items, None)
        if name not in verify.TOLERANCES:
            raise ValueError(
                "Select a tolerance from %s" % ", ".join(sorted(verify.TOLERANCES))
            )
        try:
            tolerances[name] = float(value)
        except (TypeError, ValueError) as error:
            raise ValueError("Tolerance %s needs a number" % name) from error
    return tolerances, rest


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv=None):
    """Run the command line and return the exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        overrides, rest = _split_tolerances(argv)
    except ValueError as error:
        parser.print_usage(sys.stderr)
        print("error: %s" % error, file=sys.stderr)
        return EXIT_PARSE
    args = parser.parse_args(rest)
    _configure_logging(args.verbose)
    config = RunConfig(
        seed=args.seed,
        tolerances=dict(verify.TOLERANCES, **overrides),
        output_format=args.format,
        count=1 if args.count is None else args.count,
        timestamp=not args.no_timestamp,
        workers=args.workers,
    )
    try:
        return args.func(args, config)
    except (errors.GeometryError, errors.BudgetExceeded) as error:
        logger.debug("geometry failure", exc_info=True)
        print("%s: %s" % (type(error).__name__, error), file=sys.stderr)
        return EXIT_GEOMETRY
    except (ValueError, KeyError, TypeError, OSError) as error:
        # json.JSONDecodeError is a ValueError
        logger.debug("input failure", exc_info=True)
        print("error: %s" % error, file=sys.stderr)
        return EXIT_PARSE
