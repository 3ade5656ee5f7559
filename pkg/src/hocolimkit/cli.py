"""Command-line front end.

Exit codes: 0 success, 1 property or assertion failure (a witness is
printed), 2 malformed input or cap violation.  ``-`` stands for stdin or
stdout.  Every JSON artifact embeds the invocation and cap under
"provenance", so identical invocations produce byte-identical output.
"""

import argparse
import json
import os
import sys

from . import fincat, homology, jsonio, replace, verify
from .fincat import SchemaError
from .sset import CapError


def _read_threads_env():
    raw = os.environ.get("HOCOLIMKIT_THREADS")
    if raw is None:
        return 0
    try:
        n = int(raw)
    except ValueError:
        raise SchemaError("HOCOLIMKIT_THREADS must be an integer, got %r"
                          % (raw,))
    if n < 0:
        raise SchemaError("HOCOLIMKIT_THREADS must be >= 0")
    # all computations here are single-process; 0 means auto, and any cap
    # is honored trivially
    return n


def _read_doc(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_ref(path):
    with open(path) as fh:
        return json.load(fh)


def _write(out, text):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _provenance(args, extra=None):
    doc = {"invocation": args._invocation}
    if getattr(args, "cap", None) is not None:
        doc["cap"] = args.cap
    if extra:
        doc.update(extra)
    return doc


def _emit(args, doc):
    doc = dict(doc)
    doc["provenance"] = _provenance(args)
    _write(args.out, jsonio.dumps(doc))


def cmd_validate(args):
    c = jsonio.category_from_json(_read_doc(args.category))
    rep = fincat.validate_category(c)
    _emit(args, rep)
    return 0 if rep["status"] == "pass" else 1


def cmd_nerve(args):
    c = jsonio.category_from_json(_read_doc(args.category))
    rep = fincat.validate_category(c)
    if rep["status"] != "pass":
        raise SchemaError("invalid category: %r" % (rep,))
    _emit(args, jsonio.sset_to_json(fincat.nerve(c, args.cap)))
    return 0


def cmd_hocolim(args):
    dg = jsonio.diagram_from_json(_read_doc(args.diagram), cap=args.cap,
                                  load_ref=_load_ref)
    if args.method == "voevodsky":
        h = replace.voevodsky_hocolim(dg, args.cap)
    else:
        h = replace.bk_hocolim(dg, args.cap)
    doc = jsonio.sset_to_json(h)
    _emit(args, doc)
    return 0


def cmd_colim(args):
    dg = jsonio.diagram_from_json(_read_doc(args.diagram), cap=args.cap,
                                  load_ref=_load_ref)
    colim, _ = replace.colim_augmentation(dg)
    _emit(args, jsonio.sset_to_json(colim))
    return 0


def cmd_kan(args):
    dg = jsonio.diagram_from_json(_read_doc(args.diagram), cap=args.cap,
                                  load_ref=_load_ref)
    f = jsonio.functor_from_json(_read_doc(args.functor), source=dg.shape)
    out = replace.homotopy_left_kan(f, dg, args.cap)
    _emit(args, jsonio.diagram_to_json(out))
    return 0


def cmd_homology(args):
    x = jsonio.sset_from_json(_read_doc(args.sset), cap=args.cap)
    if args.cap is not None and args.cap < args.max_degree + 1:
        raise CapError("cap %d below max degree %d + 1"
                       % (args.cap, args.max_degree))
    h = homology.homology_of(x, args.max_degree)
    _emit(args, {"groups": h.as_dict()})
    return 0


def cmd_check_cofinal(args):
    f = jsonio.functor_from_json(_read_doc(args.functor))
    rep = homology.check_homotopy_right_cofinal(f, args.cap)
    _emit(args, rep)
    return 0 if rep["status"] == "passes-necessary-conditions" else 1


def cmd_verify(args):
    names = None if args.suite == "all" else [args.suite]
    try:
        reports = verify.run_suites(names, seed=args.seed)
    except KeyError as exc:
        raise SchemaError(str(exc))
    summary = verify.summarize(reports)
    text = verify.reports_to_jsonl(reports)
    text += json.dumps({"summary": summary,
                        "provenance": _provenance(args,
                                                  {"seed": args.seed})},
                       sort_keys=True, separators=(",", ":")) + "\n"
    _write(args.out, text)
    if args.format == "text":
        for name, counts in sorted(summary["suites"].items()):
            sys.stderr.write("%-22s pass=%d fail=%d\n"
                             % (name, counts["pass"], counts["fail"]))
    return 0 if summary["failures"] == 0 else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="hocolimkit",
        description="homotopy colimits of capped simplicial sets over "
                    "finite categories, with an exact homology oracle")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, cap_default=None):
        sp.add_argument("--out", default="-", help="output path, - = stdout")
        sp.add_argument("--format", choices=["json", "text"],
                        default="json")

    sp = sub.add_parser("validate", help="check the category axioms")
    sp.add_argument("category")
    common(sp)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("nerve", help="nerve of a category")
    sp.add_argument("category")
    sp.add_argument("--cap", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_nerve)

    sp = sub.add_parser("hocolim", help="homotopy colimit of a diagram")
    sp.add_argument("diagram")
    sp.add_argument("--method", choices=["voevodsky", "bk"],
                    default="voevodsky")
    sp.add_argument("--cap", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_hocolim)

    sp = sub.add_parser("colim", help="strict colimit with augmentation")
    sp.add_argument("diagram")
    sp.add_argument("--cap", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_colim)

    sp = sub.add_parser("kan", help="pointwise homotopy left Kan extension")
    sp.add_argument("diagram")
    sp.add_argument("--functor", required=True)
    sp.add_argument("--cap", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_kan)

    sp = sub.add_parser("homology", help="integral homology, exact")
    sp.add_argument("sset")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--cap", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_homology)

    sp = sub.add_parser("check-cofinal",
                        help="homotopy right cofinality oracle")
    sp.add_argument("functor")
    sp.add_argument("--cap", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_check_cofinal)

    sp = sub.add_parser("verify", help="run a theorem suite (or all)")
    sp.add_argument("suite")
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    return p


def run(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    args._invocation = argv
    try:
        _read_threads_env()
        return args.fn(args)
    except (SchemaError, CapError, FileNotFoundError,
            json.JSONDecodeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except AssertionError as exc:
        sys.stderr.write("assertion failure: %s\n" % exc)
        return 1


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
