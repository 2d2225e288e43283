"""Command line interface.

Subcommands expose the library's main computations: root system data,
Weyl group summaries, ideal enumeration, nilpotent orbit contexts,
ideal-fiber pavings, quintuple classifications, regular Hessenberg
pavings, and the graded dot action.  Every command renders to text,
JSON, or CSV, writes to stdout or a file, and reads defaults from a
flat key=value configuration file with flags taking precedence.

Exit codes: 0 on success, 2 for configuration errors (including
argument parsing), 3 for computation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import (
    ComputationError,
    ConfigError,
    InvalidIdealError,
    InvalidTypeError,
    UnsupportedLeviError,
)
from .hessfibers import (
    classify_quintuples,
    enumerate_ideals,
    fiber_paving,
    ideal_by_slug,
    render_zero_set,
)
from .orbitctx import orbit_context, orbit_slugs, orbits_for_type
from .reptheory import (
    dot_action_remainder,
    dot_action_table,
    format_class_function,
    g2_characters,
    regular_hessenberg_paving,
)
from .rootcore import root_system
from .weylgrp import weyl_group

__all__ = ["main", "build_parser", "run"]

_FORMATS = ("text", "json", "csv")
_CONFIG_KEYS = ("type", "orbit", "ideal", "levi", "format", "out", "quintuples")
_QUINTUPLE_ORBITS = {"F4": "F4a2", "E6": "E6a3"}


# -- option handling -----------------------------------------------------------------------


def load_config(path: str) -> dict[str, str]:
    """Read a flat key=value file; '#' starts a comment line."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(
                f"{path}:{lineno}: unknown key {key!r} (known: {', '.join(_CONFIG_KEYS)})"
            )
        values[key] = value
    return values


def _merge_options(args: argparse.Namespace) -> dict:
    config = load_config(args.config) if args.config else {}
    merged = {
        "type": args.type if getattr(args, "type", None) else config.get("type"),
        "orbit": args.orbit if getattr(args, "orbit", None) else config.get("orbit"),
        "ideal": args.ideal if getattr(args, "ideal", None) else config.get("ideal"),
        "levi": args.levi if getattr(args, "levi", None) else config.get("levi"),
        "format": args.format if args.format else config.get("format", "text"),
        "out": args.out if args.out else config.get("out"),
    }
    quintuples = getattr(args, "quintuples", False)
    if not quintuples and config.get("quintuples"):
        flag = config["quintuples"].lower()
        if flag not in ("true", "false"):
            raise ConfigError(f"config key quintuples must be true or false, got {flag!r}")
        quintuples = flag == "true"
    merged["quintuples"] = quintuples
    if merged["format"] not in _FORMATS:
        raise ConfigError(
            f"unknown format {merged['format']!r} (choose from {', '.join(_FORMATS)})"
        )
    return merged


def _require(options: dict, key: str, hint: str) -> str:
    value = options.get(key)
    if not value:
        raise ConfigError(f"missing --{key}: {hint}")
    return value


def _parse_levi(rs, spec: str | None) -> tuple[int, ...]:
    if spec is None or spec == "none":
        return ()
    if spec == "all":
        return tuple(range(rs.rank))
    indices = []
    for piece in spec.split(","):
        name = piece.strip()
        if name not in rs.simple_names:
            raise UnsupportedLeviError(
                f"unknown simple root {name!r} (choose from "
                f"{', '.join(rs.simple_names)}, or 'none'/'all')"
            )
        indices.append(rs.simple_names.index(name))
    if len(set(indices)) != len(indices):
        raise UnsupportedLeviError(f"repeated simple root in {spec!r}")
    return tuple(sorted(indices))


def _csv_rows(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# -- subcommands ---------------------------------------------------------------------------


def cmd_roots(options: dict) -> str:
    rs = root_system(_require(options, "type", "a Cartan type G2, F4, or E6"))
    data = rs.to_dict()
    if options["format"] == "json":
        return _json_text(data)
    rows = [
        [r["name"], " ".join(str(c) for c in r["coords"]), r["height"], r["length"]]
        for r in data["positive_roots"]
    ]
    if options["format"] == "csv":
        return _csv_rows(["name", "coords", "height", "length"], rows)
    lines = [
        f"type {rs.cartan_type}: rank {rs.rank}, "
        f"{len(rs.positive_roots)} positive roots, "
        f"highest root {rs.root_name(rs.highest_root)}",
        "",
        f"{'name':<22} {'coords':<14} {'height':>6}  length",
    ]
    for name, coords, height, length in rows:
        lines.append(f"{name:<22} {coords:<14} {height:>6}  {length}")
    return "\n".join(lines) + "\n"


def cmd_weyl(options: dict) -> str:
    rs = root_system(_require(options, "type", "a Cartan type G2, F4, or E6"))
    W = weyl_group(rs.cartan_type)
    histogram = W.length_histogram()
    data = {
        "cartan_type": rs.cartan_type,
        "order": W.order,
        "longest_word": W.word_name(W.longest_element()),
        "longest_length": W.length(W.longest_element()),
        "length_histogram": {str(k): v for k, v in histogram.items()},
    }
    if options["format"] == "json":
        return _json_text(data)
    if options["format"] == "csv":
        rows = [[k, v] for k, v in histogram.items()]
        return _csv_rows(["length", "count"], rows)
    lines = [
        f"Weyl group of type {rs.cartan_type}",
        f"order: {W.order}",
        f"longest element: {data['longest_word']} (length {data['longest_length']})",
        "length histogram:",
    ]
    for k, v in histogram.items():
        lines.append(f"  {k:>2}: {v}")
    return "\n".join(lines) + "\n"


def cmd_ideals(options: dict) -> str:
    cartan_type = _require(options, "type", "a Cartan type G2, F4, or E6")
    ideals = enumerate_ideals(cartan_type)
    if options.get("ideal"):
        ideal = ideal_by_slug(cartan_type, options["ideal"])
        data = {"cartan_type": cartan_type, "ideals": [ideal.to_dict()]}
    else:
        data = {
            "cartan_type": cartan_type,
            "count": len(ideals),
            "ideals": [i.to_dict() for i in ideals],
        }
    if options["format"] == "json":
        return _json_text(data)
    rows = [
        [entry["slug"], entry["size"], ";".join(entry["minimal_roots"])]
        for entry in data["ideals"]
    ]
    if options["format"] == "csv":
        return _csv_rows(["slug", "size", "minimal_roots"], rows)
    lines = [f"type {cartan_type}: {len(data['ideals'])} ideal(s)", ""]
    for entry in data["ideals"]:
        minimals = ", ".join(entry["minimal_roots"]) or "-"
        lines.append(f"{entry['slug']:<40} size {entry['size']:>2}  minimal: {minimals}")
        if options.get("ideal"):
            lines.append(f"  roots: {', '.join(entry['roots']) or '-'}")
    return "\n".join(lines) + "\n"


def cmd_orbits(options: dict) -> str:
    if options.get("orbit"):
        slugs = [options["orbit"]]
        cartan_type = orbit_context(options["orbit"]).cartan_type
    else:
        cartan_type = _require(options, "type", "a Cartan type, or use --orbit")
        root_system(cartan_type)
        slugs = list(orbits_for_type(cartan_type))
    data = {
        "cartan_type": cartan_type,
        "orbits": [orbit_context(s).to_dict() for s in slugs],
    }
    if options["format"] == "json":
        return _json_text(data)
    rows = [
        [
            o["slug"],
            o["dimension"],
            " ".join(str(w) for w in o["weighted_diagram"]),
            o["pseudo_levi"] or "-",
            o["component_group"] or "-",
        ]
        for o in data["orbits"]
    ]
    if options["format"] == "csv":
        return _csv_rows(
            ["slug", "dimension", "weighted_diagram", "pseudo_levi", "component_group"],
            rows,
        )
    lines = [f"nilpotent orbit contexts ({cartan_type})", ""]
    for o in data["orbits"]:
        lines.append(
            f"{o['slug']:<6} dim {o['dimension']:>2}  diagram "
            f"{' '.join(str(w) for w in o['weighted_diagram'])}"
        )
        lines.append(f"  generators: {', '.join(o['generators']) or '-'}")
        lines.append(f"  pseudo-Levi: {o['pseudo_levi'] or '-'}")
        lines.append(
            f"  component group: {o['component_group'] or 'trivial'}"
            f"  Levi simples: {', '.join(o['levi_simples']) or '-'}"
        )
    return "\n".join(lines) + "\n"


def cmd_fibers(options: dict) -> str:
    if options.get("type") and options["type"] in _QUINTUPLE_ORBITS:
        if not options["quintuples"]:
            raise ConfigError(
                f"type {options['type']} fibers are classified by Levi-orbit "
                "quintuples; pass --quintuples or use the quintuples command"
            )
        options = dict(options)
        options["orbit"] = _QUINTUPLE_ORBITS[options["type"]]
        return cmd_quintuples(options)
    orbit_slug = _require(options, "orbit", "an orbit slug such as A1t")
    if orbit_slug in ("F4a2", "E6a3"):
        raise ConfigError(
            f"orbit {orbit_slug} is classified by Levi-orbit quintuples; "
            "use the quintuples command"
        )
    ideal_slug = _require(options, "ideal", "an ideal slug such as I_alpha")
    orbit = orbit_context(orbit_slug)
    paving = fiber_paving(orbit, ideal_by_slug(orbit.cartan_type, ideal_slug))
    data = paving.to_dict()
    if options["format"] == "json":
        return _json_text(data)
    rows = [[c["v"], c["cell"], c["dim"]] for c in data["cells"]]
    if options["format"] == "csv":
        return _csv_rows(["coset_rep", "cell", "dim"], rows)
    lines = [f"fiber of orbit {orbit_slug} over {ideal_slug} ({orbit.cartan_type})"]
    if paving.is_empty:
        lines.append("empty fiber")
        return "\n".join(lines) + "\n"
    lines.append("")
    lines.append(f"{'coset rep':<10} {'cell':<8} dim")
    for v_name, cell, dim in rows:
        lines.append(f"{v_name:<10} {cell:<8} {dim}")
    lines.append("")
    lines.append("betti: " + ",".join(str(b) for b in paving.betti()))
    lines.append(f"components: {paving.components()}")
    lines.append(f"dimension: {paving.dimension()}")
    return "\n".join(lines) + "\n"


def cmd_quintuples(options: dict) -> str:
    orbit_slug = options.get("orbit")
    if not orbit_slug:
        cartan_type = _require(options, "type", "F4 or E6, or use --orbit")
        if cartan_type not in _QUINTUPLE_ORBITS:
            raise ConfigError(
                f"no quintuple classification for type {cartan_type}; "
                f"supported: {', '.join(sorted(_QUINTUPLE_ORBITS))}"
            )
        orbit_slug = _QUINTUPLE_ORBITS[cartan_type]
    quintuples = classify_quintuples(orbit_slug)
    data = {
        "orbit": orbit_slug,
        "cartan_type": orbit_context(orbit_slug).cartan_type,
        "count": len(quintuples),
        "groups": len({q.group for q in quintuples}),
        "quintuples": [q.to_dict() for q in quintuples],
    }
    if options["format"] == "json":
        return _json_text(data)
    if options["format"] == "csv":
        rows = []
        for q in quintuples:
            for c in q.cells:
                rows.append(
                    [
                        ";".join(q.removed_names),
                        q.codim,
                        q.group,
                        q.conclusion,
                        c.pattern,
                        render_zero_set(c.zero_set),
                    ]
                )
        return _csv_rows(
            ["removed", "codim", "group", "conclusion", "pattern", "locus"], rows
        )
    lines = [
        f"Levi-orbit quintuples for {orbit_slug} "
        f"({data['count']} subspaces in {data['groups']} groups)",
    ]
    for q in quintuples:
        lines.append("")
        lines.append(
            f"group {q.group}: remove {{{', '.join(q.removed_names)}}}"
            f" (codim {q.codim}) -> {q.conclusion}"
        )
        for c in q.cells:
            constraints = "; ".join(f"{n}: {p}" for n, p in c.constraints) or "-"
            lines.append(
                f"  {c.pattern:<4} {render_zero_set(c.zero_set):<14} {constraints}"
            )
    return "\n".join(lines) + "\n"


def cmd_betti(options: dict) -> str:
    ideal_slug = _require(options, "ideal", "an ideal slug such as I_alphabeta")
    cartan_type = options.get("type") or "G2"
    if cartan_type != "G2":
        raise ConfigError("regular Hessenberg pavings are exposed for type G2")
    rs = root_system(cartan_type)
    levi = _parse_levi(rs, options.get("levi"))
    paving = regular_hessenberg_paving(ideal_by_slug(cartan_type, ideal_slug), levi)
    data = paving.to_dict()
    data["levi_names"] = [rs.simple_names[j] for j in levi]
    if options["format"] == "json":
        return _json_text(data)
    rows = [[c["w"], "" if c["dim"] is None else c["dim"]] for c in data["cells"]]
    if options["format"] == "csv":
        return _csv_rows(["w", "dim"], rows)
    levi_label = ", ".join(data["levi_names"]) or "-"
    lines = [
        f"regular Hessenberg paving: ideal {ideal_slug}, Levi {{{levi_label}}}",
        "",
        f"{'w':<8} dim",
    ]
    for w_name, dim in rows:
        lines.append(f"{w_name:<8} {dim if dim != '' else '-'}")
    lines.append("")
    lines.append("betti: " + ",".join(str(b) for b in paving.betti()))
    lines.append(f"cells: {paving.cell_count()}")
    return "\n".join(lines) + "\n"


def _dot_action_entry(slug: str) -> dict:
    table = dot_action_table(slug)
    entry = table.to_dict()
    n = table.top_degree
    if n in (1, 2):
        entry["remainder"] = {
            k: v for k, v in sorted(dot_action_remainder(slug).items())
        }
    else:
        entry["remainder"] = None
    return entry


def cmd_dot_action(options: dict) -> str:
    cartan_type = options.get("type") or "G2"
    if cartan_type != "G2":
        raise ConfigError("the graded dot action is exposed for type G2")
    if options.get("ideal"):
        slugs = [ideal_by_slug(cartan_type, options["ideal"]).slug]
    else:
        slugs = [i.slug for i in enumerate_ideals(cartan_type)]
    tables = [_dot_action_entry(s) for s in slugs]
    data = {"cartan_type": cartan_type, "tables": tables}
    if options["format"] == "json":
        return _json_text(data)
    char_table = g2_characters()
    if options["format"] == "csv":
        rows = []
        for entry in tables:
            for degree in entry["degrees"]:
                rows.append(
                    [
                        entry["ideal"],
                        entry["dominant_orbit"],
                        degree["q_power"],
                        format_class_function(
                            char_table,
                            char_table.from_multiplicities(degree["character"]),
                        ),
                        degree["dimension"],
                    ]
                )
        return _csv_rows(
            ["ideal", "dominant_orbit", "q_power", "character", "dimension"], rows
        )
    lines = []
    for entry in tables:
        table = dot_action_table(entry["ideal"])
        lines.append(
            f"{entry['ideal']} (dominant orbit {entry['dominant_orbit']}, "
            f"total dim {entry['total_dimension']})"
        )
        for degree in entry["degrees"]:
            rendered = format_class_function(
                char_table, char_table.from_multiplicities(degree["character"])
            )
            lines.append(
                f"  q^{degree['q_power']}: {rendered}  (dim {degree['dimension']})"
            )
        if entry["remainder"] is not None:
            rendered = format_class_function(
                char_table, char_table.from_multiplicities(entry["remainder"])
            )
            lines.append(f"  remainder: {rendered}")
        lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


# -- driver ----------------------------------------------------------------------------------


_COMMANDS = {
    "roots": cmd_roots,
    "weyl": cmd_weyl,
    "ideals": cmd_ideals,
    "orbits": cmd_orbits,
    "fibers": cmd_fibers,
    "quintuples": cmd_quintuples,
    "betti": cmd_betti,
    "dot-action": cmd_dot_action,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesspave",
        description="Exact computations with ideal fibers of nilpotent orbits",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    specs = {
        "roots": "positive roots of a root system",
        "weyl": "Weyl group summary",
        "ideals": "upper-closed ideals of positive roots",
        "orbits": "nilpotent orbit contexts",
        "fibers": "affine paving of an ideal fiber",
        "quintuples": "Levi-orbit quintuple classification",
        "betti": "affine paving of a regular Hessenberg variety",
        "dot-action": "graded Weyl action on regular Hessenberg cohomology",
    }
    for name, help_text in specs.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--type", help="Cartan type: G2, F4, or E6")
        sub.add_argument("--orbit", help="orbit slug, e.g. A1t or F4a2")
        sub.add_argument("--ideal", help="ideal slug, e.g. I_alpha")
        sub.add_argument(
            "--levi", help="comma-separated simple root names, or 'none'/'all'"
        )
        sub.add_argument("--format", choices=_FORMATS, help="output format")
        sub.add_argument("--out", help="write output to this file instead of stdout")
        sub.add_argument("--config", help="flat key=value configuration file")
        if name == "fibers":
            sub.add_argument(
                "--quintuples",
                action="store_true",
                help="classify quintuples for types F4 and E6",
            )
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        options = _merge_options(args)
        rendered = _COMMANDS[args.command](options)
        if options["out"]:
            with open(options["out"], "w", encoding="utf-8") as handle:
                handle.write(rendered)
        else:
            sys.stdout.write(rendered)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
