"""Command-line front end.

Every engine operation is exposed as a subcommand with canonical, byte-stable
output; results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 user error, 2 cap/guard refusal.  ``--output json`` emits one JSON document
per invocation, validating against schema/output.json.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from . import ext as ext_mod
from . import grothendieck as gr
from . import ospcat, plethysm, poset, symalg, symfunc
from .config import resolve_config
from .diagrams import Partition, gl_dimension, parse_partition, partitions
from .errors import DegreeCapExceeded, GuardExceeded, ParseError, TensorcatError
from .grothendieck import SimpleIndex
from .poset import QuadIndex, parse_quad

LR_CACHE_FILENAME = "lr.records"


def parse_simple_index(text: str) -> SimpleIndex:
    """Parse four partitions like ``[1],[],[],[1]`` (top-level commas split)."""
    pieces = []
    depth = 0
    start = 0
    for pos, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError(text, pos, "unbalanced ']'")
        elif ch == "," and depth == 0:
            pieces.append(text[start:pos])
            start = pos + 1
    pieces.append(text[start:])
    if depth != 0:
        raise ParseError(text, len(text) - 1, "unbalanced '['")
    if len(pieces) != 4:
        raise ParseError(text, 0, f"expected four partitions, got {len(pieces)}")
    return SimpleIndex(*(parse_partition(piece) for piece in pieces))


# ---------------------------------------------------------------------------
# rendering


def partition_json(p: Partition) -> list[int]:
    return list(p)


def index_json(s: SimpleIndex) -> list[list[int]]:
    return [list(p) for p in s]


def decomposition_lines(dec: gr.Decomposition) -> list[str]:
    lines = [f"{mult} {idx}" for idx, mult in dec.items()]
    return lines or ["0"]

def decomposition_json(dec: gr.Decomposition) -> list[dict]:
    return [{"index": index_json(idx), "mult": mult} for idx, mult in dec.items()]


def partition_terms_lines(terms: dict[Partition, int]) -> list[str]:
    items = sorted(terms.items(), key=lambda kv: kv[0].key)
    return [f"{mult} {p}" for p, mult in items] or ["0"]


def partition_terms_json(terms: dict[Partition, int]) -> list[dict]:
    items = sorted(terms.items(), key=lambda kv: kv[0].key)
    return [{"partition": partition_json(p), "mult": mult} for p, mult in items]


def pair_terms_lines(terms) -> list[str]:
    items = sorted(terms.items(), key=lambda kv: (kv[0][0].key, kv[0][1].key))
    return [f"{mult} {a},{b}" for (a, b), mult in items] or ["0"]


def pair_terms_json(terms) -> list[dict]:
    items = sorted(terms.items(), key=lambda kv: (kv[0][0].key, kv[0][1].key))
    return [{"pair": [partition_json(a), partition_json(b)], "mult": mult} for (a, b), mult in items]


def symfunc_lines(f: symfunc.SymFunc) -> list[str]:
    return [f"{coeff} {p}" for p, coeff in f.items()] or ["0"]


def symfunc_json(f: symfunc.SymFunc) -> list[dict]:
    return [{"partition": partition_json(p), "mult": coeff} for p, coeff in f.items()]


# ---------------------------------------------------------------------------
# verify mode: small oracle cross-checks of every engine family


def run_verify() -> tuple[list[tuple[str, bool]], bool]:
    from . import oracle

    checks: list[tuple[str, bool]] = []

    def check(name: str, ok: bool) -> None:
        checks.append((name, bool(ok)))

    product = symfunc.schur_product(symfunc.SymFunc.schur([2, 1]), symfunc.SymFunc.schur([1, 1]))
    brute = oracle.decompose_into_schur(
        oracle.expand_schur(Partition([2, 1]), 5) * oracle.expand_schur(Partition([1, 1]), 5)
    )
    check("schur product vs monomial expansion", product == brute)

    agree = True
    families = (
        ("sym", "sym2", plethysm.power_of_sym2, plethysm.SYMMETRIC),
        ("ext", "sym2", plethysm.power_of_sym2, plethysm.EXTERIOR),
        ("sym", "ext2", plethysm.power_of_ext2, plethysm.SYMMETRIC),
        ("ext", "ext2", plethysm.power_of_ext2, plethysm.EXTERIOR),
    )
    for outer, inner, fn, kind in families:
        for k in range(4):
            engine = {p: m for p, m in fn(k, kind).items() if len(p) <= 4}
            agree &= engine == oracle.brute_force_plethysm(outer, k, inner, 4).terms
    check("square powers vs brute-force plethysm", agree)

    agree = True
    for k in range(4):
        engine_pairs = {
            key: m for key, m in plethysm.cauchy_ext(k).items() if len(key[0]) <= 3 and len(key[1]) <= 3
        }
        agree &= engine_pairs == oracle.brute_force_cauchy("ext", k, 3, 3)
    check("cauchy pairs vs brute-force powers", agree)

    agree = True
    for total in range(4):
        for l in range(total + 1):
            for m in range(total - l + 1):
                for n in range(total - l - m + 1):
                    p = total - l - m - n
                    q = QuadIndex(l, m, n, p)
                    engine = dict(gr.decompose_j(q).terms)
                    agree &= engine == oracle.reconstruct_tensor_word(l, m, n, p)
    check("tensor words vs character reconstruction", agree)

    agree = True
    box = [QuadIndex(*t) for t in itertools.product(range(3), repeat=4)]
    for a in box:
        for b in box:
            d = poset.defect(a, b)
            chains = poset.chains(a, b)
            if d is None:
                agree &= not chains
            else:
                agree &= bool(chains) and {len(c) - 1 for c in chains} == {d}
    check("defect vs exhaustive chains", agree)

    agree = True
    for n in range(5):
        for lam in partitions(n):
            c = symalg.young_symmetrizer(lam)
            agree &= c * c == c.scale(symalg.young_scalar(lam))
    check("young symmetrizer scalars", agree)

    agree = True
    for n in range(5):
        for lam in partitions(n):
            for nv in range(1, 5):
                agree &= gl_dimension(lam, nv) == oracle.expand_schur(lam, nv).coefficient_sum()
    check("hook-content dimensions vs tableau counts", agree)

    ok = all(flag for _, flag in checks)
    return checks, ok


# ---------------------------------------------------------------------------
# argument parsing


class Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on user error, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> Parser:
    parser = Parser(
        prog="tensorcat",
        description="Exact tensor-category calculator: decompositions, posets, Ext dimensions.",
        epilog=(
            "Configuration precedence: flag > environment > config file > default. "
            "Environment variables: TENSORCAT_DEGREE_CAP, TENSORCAT_GROUP_GUARD, "
            "TENSORCAT_CACHE_DIR, TENSORCAT_CONFIG."
        ),
    )
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--degree-cap", type=int, default=None, help="refuse work above this degree (default 12)")
    parser.add_argument("--group-guard", type=int, default=None, help="explicit group-algebra size limit (default 8)")
    parser.add_argument("--cache-dir", default=None, help="directory for the persistent coefficient cache")
    parser.add_argument("--config", default=None, help="key=value config file")
    parser.add_argument("--verify", action="store_true", help="re-run oracle cross-checks and exit")

    sub = parser.add_subparsers(dest="command")

    lr = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    lr.add_argument("lam")
    lr.add_argument("mu")
    lr.add_argument("nu")

    product = sub.add_parser("product", help="Schur-basis product of two Schur functions")
    product.add_argument("mu")
    product.add_argument("nu")

    plet = sub.add_parser("plethysm", help="closed-form power decompositions")
    plet.add_argument(
        "family",
        choices=("cauchy-sym", "cauchy-ext", "sym-sym2", "ext-sym2", "sym-ext2", "ext-ext2"),
    )
    plet.add_argument("k", type=int)

    decompose = sub.add_parser("decompose", help="composition factors of a tensor word")
    decompose.add_argument("quad")

    socle = sub.add_parser("socle", help="socle of the tensor word at a quadruple")
    socle.add_argument("quad")

    layers = sub.add_parser("layers", help="filtration layers of the injective hull of the unit")
    layers.add_argument("kmax", type=int)

    defect = sub.add_parser("defect", help="defect between two quadruples")
    defect.add_argument("a")
    defect.add_argument("b")

    chains = sub.add_parser("chains", help="all saturated chains between two quadruples")
    chains.add_argument("a")
    chains.add_argument("b")

    covers = sub.add_parser("covers", help="immediate successors within a bound")
    covers.add_argument("a")
    covers.add_argument("--bound", type=int, required=True)

    ext_trivial = sub.add_parser("ext-trivial", help="Ext dimension into the unit object")
    ext_trivial.add_argument("index")
    ext_trivial.add_argument("--degree", type=int, required=True)

    ext_thick = sub.add_parser("ext-thick", help="Ext dimension into a purely thick simple")
    ext_thick.add_argument("index")
    ext_thick.add_argument("alpha")
    ext_thick.add_argument("beta")
    ext_thick.add_argument("--degree", type=int, required=True)

    ext_vanishes = sub.add_parser("ext-vanishes", help="guaranteed-vanishing test between simples")
    ext_vanishes.add_argument("source")
    ext_vanishes.add_argument("target")
    ext_vanishes.add_argument("--degree", type=int, required=True)

    resolution = sub.add_parser("resolution", help="resolution term and its socle")
    resolution.add_argument("j", type=int)

    kernel = sub.add_parser("kernel-layer", help="filtration layer of a resolution kernel")
    kernel.add_argument("j", type=int)
    kernel.add_argument("k", type=int)

    homdim = sub.add_parser("homdim", help="endomorphism / degree-one Hom dimensions")
    homdim.add_argument("quad")
    homdim.add_argument("flavor", choices=("end", "contract", "shift-left", "shift-right"))

    quadkernel = sub.add_parser("quadkernel", help="quadratic-relation kernel dimension")
    quadkernel.add_argument("quad")
    quadkernel.add_argument("--check", action="store_true", help="also row-reduce the explicit right ideal")

    osp = sub.add_parser("osp", help="orthogonal/symplectic variant")
    osp.add_argument("--kind", choices=("o", "sp"), required=True)
    osp_sub = osp.add_subparsers(dest="osp_command", required=True)
    osp_leq = osp_sub.add_parser("leq")
    osp_leq.add_argument("a")
    osp_leq.add_argument("b")
    osp_defect = osp_sub.add_parser("defect")
    osp_defect.add_argument("a")
    osp_defect.add_argument("b")
    osp_layers = osp_sub.add_parser("layers")
    osp_layers.add_argument("kmax", type=int)
    osp_ext = osp_sub.add_parser("ext-trivial")
    osp_ext.add_argument("lam")
    osp_ext.add_argument("mu")
    osp_ext.add_argument("--degree", type=int, required=True)
    osp_conj = osp_sub.add_parser("conjugate")
    osp_conj.add_argument("lam")
    osp_conj.add_argument("mu")

    cache = sub.add_parser("cache", help="persistent cache management")
    cache.add_argument("action", choices=("info", "clear"))

    sub.add_parser("verify", help="re-run oracle cross-checks")

    return parser


def _parse_osp_pair(text: str) -> ospcat.PairIndex:
    tokens = text.strip().split(",")
    if len(tokens) != 2 or not all(t.strip().isdigit() for t in tokens):
        raise ParseError(text, 0, "expected two comma-separated entries")
    return ospcat.PairIndex(int(tokens[0]), int(tokens[1]))


def execute(args, cfg) -> tuple[list[str], object]:
    """Run one subcommand; returns (text lines, json payload)."""
    cap = cfg.degree_cap
    guard = cfg.group_guard
    cmd = args.command

    if cmd == "lr":
        value = symfunc.lr_coefficient(
            parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu)
        )
        return [str(value)], value

    if cmd == "product":
        result = symfunc.schur_term_product(
            parse_partition(args.mu), parse_partition(args.nu), cap
        )
        return symfunc_lines(result), symfunc_json(result)

    if cmd == "plethysm":
        family = args.family
        if family in ("cauchy-sym", "cauchy-ext"):
            fn = plethysm.cauchy_sym if family == "cauchy-sym" else plethysm.cauchy_ext
            terms = fn(args.k, cap)
            return pair_terms_lines(terms), pair_terms_json(terms)
        kind = plethysm.SYMMETRIC if family.startswith("sym-") else plethysm.EXTERIOR
        inner = plethysm.power_of_sym2 if family.endswith("sym2") else plethysm.power_of_ext2
        terms = inner(args.k, kind, cap)
        return partition_terms_lines(terms), partition_terms_json(terms)

    if cmd == "decompose":
        dec = gr.decompose_j(parse_quad(args.quad), cap)
        return decomposition_lines(dec), decomposition_json(dec)

    if cmd == "socle":
        dec = gr.socle_of(parse_quad(args.quad), cap)
        return decomposition_lines(dec), decomposition_json(dec)

    if cmd == "layers":
        layers = gr.layers_of_i(args.kmax, cap)
        lines = []
        payload = []
        for k, dec in enumerate(layers):
            lines.append(f"layer {k}:")
            lines.extend("  " + line for line in decomposition_lines(dec))
            payload.append({"k": k, "terms": decomposition_json(dec)})
        return lines, payload

    if cmd == "defect":
        d = poset.defect(parse_quad(args.a), parse_quad(args.b))
        return [str(d) if d is not None else "undefined"], d

    if cmd == "chains":
        found = poset.chains(parse_quad(args.a), parse_quad(args.b))
        lines = [" -> ".join(str(q) for q in chain) for chain in found] or ["(none)"]
        return lines, [[list(q) for q in chain] for chain in found]

    if cmd == "covers":
        found = poset.covers(parse_quad(args.a), args.bound)
        return [str(q) for q in found] or ["(none)"], [list(q) for q in found]

    if cmd == "ext-trivial":
        value = ext_mod.ext_to_trivial(parse_simple_index(args.index), args.degree)
        return [str(value)], value

    if cmd == "ext-thick":
        value = ext_mod.ext_to_thick(
            parse_simple_index(args.index),
            (parse_partition(args.alpha), parse_partition(args.beta)),
            args.degree,
        )
        return [str(value)], value

    if cmd == "ext-vanishes":
        value = ext_mod.ext_vanishes(
            parse_simple_index(args.source), parse_simple_index(args.target), args.degree
        )
        return ["true" if value else "false"], value

    if cmd == "resolution":
        term = ext_mod.resolution_term(args.j, cap)
        lines = [f"body: {term.body}"] + decomposition_lines(term.socle)
        payload = {"j": term.j, "body": term.body, "socle": decomposition_json(term.socle)}
        return lines, payload

    if cmd == "kernel-layer":
        dec = ext_mod.kernel_layer(args.j, args.k, cap)
        return decomposition_lines(dec), decomposition_json(dec)

    if cmd == "homdim":
        q = parse_quad(args.quad)
        if args.flavor == "end":
            value = symalg.end_dimension(q)
        else:
            flavor = {
                "contract": symalg.CONTRACT,
                "shift-left": symalg.SHIFT_LEFT,
                "shift-right": symalg.SHIFT_RIGHT,
            }[args.flavor]
            value = symalg.hom_dimension_deg1(q, flavor)
        return [str(value)], value

    if cmd == "quadkernel":
        q = parse_quad(args.quad)
        dim = symalg.quadratic_kernel_dim(q)
        if args.check:
            verified = symalg.quadratic_kernel_check(q, guard)
            lines = [str(dim), "check: ok" if verified else "check: FAIL"]
            return lines, {"dim": dim, "check": verified}
        return [str(dim)], dim

    if cmd == "osp":
        return execute_osp(args, cfg)

    if cmd == "cache":
        path = Path(cfg.cache_dir) / LR_CACHE_FILENAME if cfg.cache_dir else None
        if args.action == "info":
            if path is None:
                return ["cache: disabled (no cache directory configured)"], {"path": None, "records": 0}
            records = 0
            if path.exists():
                records = sum(1 for line in path.read_text(encoding="utf-8").splitlines() if line.strip())
            return [f"cache: {path}", f"records: {records}"], {"path": str(path), "records": records}
        if path is not None and path.exists():
            path.unlink()
        symfunc.clear_memo()
        return ["cache cleared"], {"cleared": True}

    if cmd == "verify":
        checks, ok = run_verify()
        lines = [f"check {name}: {'ok' if flag else 'FAIL'}" for name, flag in checks]
        payload = {"checks": [{"name": n, "ok": f} for n, f in checks], "ok": ok}
        if not ok:
            raise VerifyFailure(lines, payload)
        return lines, payload

    raise ValueError("missing subcommand; try --help")


class VerifyFailure(Exception):
    def __init__(self, lines, payload):
        self.lines = lines
        self.payload = payload
        super().__init__("verification failed")


def execute_osp(args, cfg) -> tuple[list[str], object]:
    cap = cfg.degree_cap
    kind = args.kind
    sub = args.osp_command
    if sub == "leq":
        value = ospcat.osp_leq(_parse_osp_pair(args.a), _parse_osp_pair(args.b))
        return ["true" if value else "false"], value
    if sub == "defect":
        d = ospcat.osp_defect(_parse_osp_pair(args.a), _parse_osp_pair(args.b))
        return [str(d) if d is not None else "undefined"], d
    if sub == "layers":
        layers = ospcat.osp_layers_of_i(kind, args.kmax, cap)
        lines = []
        payload = []
        for k, terms in enumerate(layers):
            lines.append(f"layer {k}:")
            lines.extend("  " + line for line in partition_terms_lines(terms))
            payload.append({"k": k, "terms": partition_terms_json(terms)})
        return lines, payload
    if sub == "ext-trivial":
        x = ospcat.osp_index(kind, parse_partition(args.lam), parse_partition(args.mu))
        value = ospcat.osp_ext_to_trivial(kind, x, args.degree)
        return [str(value)], value
    if sub == "conjugate":
        x = ospcat.osp_index(kind, parse_partition(args.lam), parse_partition(args.mu))
        image = ospcat.osp_conjugate(x)
        line = f"{image.kind} {image.lam},{image.mu}"
        payload = {"kind": image.kind, "lam": partition_json(image.lam), "mu": partition_json(image.mu)}
        return [line], payload
    raise ValueError(f"unknown osp subcommand {sub!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        cfg = resolve_config(
            degree_cap=args.degree_cap,
            group_guard=args.group_guard,
            cache_dir=args.cache_dir,
            config_file=args.config,
        )
    except (OSError, ValueError) as exc:
        print(f"tensorcat: error: {exc}", file=sys.stderr)
        return 1

    if cfg.cache_dir:
        symfunc.set_disk_cache(Path(cfg.cache_dir) / LR_CACHE_FILENAME)
    else:
        symfunc.set_disk_cache(None)

    if args.verify and not args.command:
        args.command = "verify"
    if not args.command:
        parser.print_usage(sys.stderr)
        print("tensorcat: error: a subcommand is required", file=sys.stderr)
        return 1

    try:
        lines, payload = execute(args, cfg)
    except VerifyFailure as failure:
        if args.output == "json":
            print(json.dumps({"command": "verify", "result": failure.payload}, sort_keys=True))
        else:
            print("\n".join(failure.lines))
        return 1
    except ParseError as exc:
        print(f"tensorcat: error: {exc}", file=sys.stderr)
        return 1
    except (DegreeCapExceeded, GuardExceeded) as exc:
        print(f"tensorcat: refused: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TensorcatError) as exc:
        print(f"tensorcat: error: {exc}", file=sys.stderr)
        return 1

    if args.output == "json":
        print(json.dumps({"command": args.command, "result": payload}, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
