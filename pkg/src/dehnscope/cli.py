"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 flag complex not simply connected,
3 simple connectivity unverified within budget, 4 search cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .bbg import papadima_suciu
from .classify import dehn_exponent
from .coloured import PushdownConfig, format_coloured_word, parse_coloured_word, pushdown
from .corpus import NAMES, load
from .errors import (CapExceeded, D1Unverified, DehnscopeError, NotEssential,
                     NotFinitelyPresented)
from .flag import simply_connected_status
from .graph import SimplicialGraph, parse_graph
from .reducible import has_D3, maximal_reducible_subgraphs
from .witness import witness_words
from .words import format_word, is_alternating, is_trivial, normal_form, parse_word, words_equal

EXIT_OK, EXIT_INPUT, EXIT_NOT_FP, EXIT_D1, EXIT_CAP = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _read_source(spec: str) -> tuple[str, str]:
    """(name, text) for a graph file path or a bundled corpus name."""
    p = Path(spec)
    if p.is_file():
        return spec, p.read_text("utf-8")
    if spec in NAMES:
        return spec, load(spec).to_text()
    raise InputError(f"no such graph file or corpus name: {spec}")


def _graph(spec: str) -> tuple[SimplicialGraph, str]:
    name, text = _read_source(spec)
    return parse_graph(text), hashlib.sha256(text.encode()).hexdigest()


def _report(command: str, digest: str, result: dict) -> str:
    return json.dumps({"command": command, "input_digest": digest, "result": result,
                       "version": __version__}, indent=2, sort_keys=True)


# commands; each returns (exit code, text output)


def _classify_one(spec: str, budget: int | None, as_json: bool) -> tuple[int, str]:
    try:
        g, digest = _graph(spec)
    except (InputError, DehnscopeError) as e:
        return EXIT_INPUT, f"{spec}: error: {e}"
    code = EXIT_OK
    try:
        rep = dehn_exponent(g, budget)
        payload = rep.to_dict()
    except NotFinitelyPresented as e:
        code = EXIT_NOT_FP
        payload = {"exponent": None, "d1_status": e.status.to_dict(), "error": "NotFinitelyPresented"}
    except D1Unverified as e:
        code = EXIT_D1
        payload = e.partial.to_dict()
        payload["error"] = "D1Unverified"
    except DehnscopeError as e:
        return EXIT_INPUT, f"{spec}: error: {e}"
    if as_json:
        return code, _report("classify", digest, dict(payload, graph=spec))
    lines = [f"graph: {spec}"]
    if "error" in payload:
        lines.append(f"error: {payload['error']}")
    lines.append(f"exponent: {payload['exponent']}")
    d1 = payload["d1_status"]
    lines.append(f"d1: {d1['status']}  h1: {d1['h1']}")
    if "is_tree" in payload:
        lines.append(f"tree: {str(payload['is_tree']).lower()}")
        for key in ("d3", "d4"):
            w = payload[key]
            wit = " ".join(w["witness"]) if w["witness"] else "-"
            lines.append(f"{key}: {str(w['holds']).lower()}  witness: {wit}")
        lines.append(f"cat0_obstructed: {str(payload['cat0_obstructed']).lower()}")
    return code, "\n".join(lines)


def _expand(specs: list[str]) -> list[str]:
    """Directories stand for their *.graph files in name order."""
    out = []
    for spec in specs:
        p = Path(spec)
        out += sorted(str(f) for f in p.glob("*.graph")) if p.is_dir() else [spec]
    return out


def cmd_classify(args) -> tuple[int, str]:
    jobs = [(f, args.pi1_budget, args.json) for f in _expand(args.files)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_classify_star, jobs))
    else:
        results = [_classify_one(*j) for j in jobs]
    code = max(c for c, _ in results)
    return code, "\n".join(t for _, t in results)


def _classify_star(job):
    return _classify_one(*job)


def cmd_present(args) -> tuple[int, str]:
    g, digest = _graph(args.file)
    pres = papadima_suciu(g)
    if args.json:
        return EXIT_OK, _report("present", digest, pres.to_dict())
    return EXIT_OK, pres.to_text().rstrip("\n")


def cmd_reducible(args) -> tuple[int, str]:
    g, digest = _graph(args.file)
    sets = maximal_reducible_subgraphs(g)
    if args.json:
        return EXIT_OK, _report("reducible", digest, {"sets": [s.to_dict() for s in sets]})
    lines = []
    for s in sets:
        flags = []
        if s.essential:
            flags.append("essential")
        if s.cone:
            flags.append("cone")
        if not s.flag_simply_connected:
            flags.append("not_simply_connected")
        factors = " * ".join("{" + " ".join(f) + "}" for f in s.decomposition.factors)
        lines.append(f"{' '.join(s.vertices)}  factors: {factors}  {' '.join(flags)}".rstrip())
    return EXIT_OK, "\n".join(lines) if lines else "(none)"


def cmd_pushdown(args) -> tuple[int, str]:
    g, digest = _graph(args.file)
    cw = parse_coloured_word(args.word, g)
    cfg = PushdownConfig.default(g, args.base)
    out = pushdown(cfg, cw, args.height)
    result = {"coloured_word": format_coloured_word(cw), "height": args.height, "base": cfg.s0,
              "pushdown": format_word(out), "length": len(out),
              "alternating": is_alternating(out)}
    if args.json:
        return EXIT_OK, _report("pushdown", digest, result)
    return EXIT_OK, f"pushdown: {result['pushdown']}\nlength: {len(out)}"


def cmd_wordprob(args) -> tuple[int, str]:
    g, digest = _graph(args.file)
    if len(args.word) not in (1, 2):
        raise InputError("give one word (triviality) or two words (equality)")
    ws = [parse_word(w, g) for w in args.word]
    nfs = [format_word(normal_form(g, w)) for w in ws]
    if len(ws) == 1:
        result = {"normal_form": nfs[0], "trivial": is_trivial(g, ws[0])}
        text = f"normal_form: {nfs[0]}\ntrivial: {str(result['trivial']).lower()}"
    else:
        eq = words_equal(g, ws[0], ws[1])
        result = {"normal_forms": nfs, "equal": eq}
        text = f"normal_form: {nfs[0]}\nnormal_form: {nfs[1]}\nequal: {str(eq).lower()}"
    if args.json:
        return EXIT_OK, _report("wordprob", digest, result)
    return EXIT_OK, text


def cmd_witness(args) -> tuple[int, str]:
    g, digest = _graph(args.file)
    if args.n > args.max_n:
        raise CapExceeded(f"n = {args.n} exceeds --max-n {args.max_n}")
    wit = has_D3(g).witness
    if wit is None:
        raise NotEssential("graph has no essential maximal reducible subgraph")
    fam = witness_words(g, wit, args.n, check=False)
    result = fam.to_dict()
    result["null_homotopic"] = is_trivial(g, fam.w)
    result["alternating"] = is_alternating(fam.w)
    if args.json:
        return EXIT_OK, _report("witness", digest, result)
    lines = [f"reducible: {' '.join(fam.reducible)}",
             f"a: {' '.join(fam.a)}  (k = {fam.k})",
             f"b: {' '.join(fam.b)}  (l = {fam.l})",
             f"n: {fam.n}",
             f"length: {len(fam.w)}",
             f"null_homotopic: {str(result['null_homotopic']).lower()}",
             f"alternating: {str(result['alternating']).lower()}"]
    if args.words:
        lines += [f"w1: {result['w1']}", f"w2: {result['w2']}", f"w: {result['w']}"]
    return EXIT_OK, "\n".join(lines)


def cmd_flagcheck(args) -> tuple[int, str]:
    g, digest = _graph(args.file)
    res = simply_connected_status(g, args.pi1_budget)
    code = EXIT_OK
    if args.json:
        return code, _report("flagcheck", digest, res.to_dict())
    return code, (f"status: {res.status.value}\nh1: {res.h1}\nmoves: {res.moves}\n"
                  f"remaining_generators: {res.remaining_generators}")


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the input-error code (argparse uses 2)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dehnscope", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="JSON report output")
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "Dehn function exponent of the Bestvina-Brady group")
    sp.add_argument("files", nargs="+", help="graph files, directories of them, or corpus names")
    sp.add_argument("--pi1-budget", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp = add("present", cmd_present, "finite presentation over spanning-tree edges")
    sp.add_argument("file")
    sp.add_argument("--tree", choices=["bfs"], default="bfs")
    sp = add("reducible", cmd_reducible, "maximal reducible subgraphs")
    sp.add_argument("file")
    sp = add("pushdown", cmd_pushdown, "h-pushdown of a coloured word")
    sp.add_argument("file")
    sp.add_argument("--word", required=True)
    sp.add_argument("--height", type=int, default=0)
    sp.add_argument("--base", default=None)
    sp = add("wordprob", cmd_wordprob, "word problem in the right-angled Artin group")
    sp.add_argument("file")
    sp.add_argument("--word", action="append", required=True)
    sp = add("witness", cmd_witness, "witness words for the cubic lower bound")
    sp.add_argument("file")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--max-n", type=int, default=50)
    sp.add_argument("--words", action="store_true", help="print the words themselves")
    sp = add("flagcheck", cmd_flagcheck, "simple connectivity of the flag complex")
    sp.add_argument("file")
    sp.add_argument("--pi1-budget", type=int, default=None)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, text = args.func(args)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, DehnscopeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
