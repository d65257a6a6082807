"""Command-line front end.

Exit status: 0 on success, 1 for a mathematical error (the message names the
failing condition), 2 for malformed usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from .chmod2 import Ch2Class, mult2, reduce, sq2
from .cw import CWClass, GWForm, canonical_twist, cwdegree, cwmult, lift_schubert, product
from .errors import NotLiftableError, SchubertError
from .iring import IClass, imult
from .problems import DEFAULT_MAX_DIM, balanced_report, p1_power_report, plucker
from .schur import ChowClass, mult
from .wring import WClass, basis_class, wmult
from .young import (
    Frame, Partition, area, check_fits, decompose_even, even_diagrams, format_partition,
    parse_frame, parse_partition, render, twist,
)

_TWIST_NAMES = {"o": 0, "det": 1}
_TWIST_LABEL = {0: "o", 1: "det"}


class UsageError(Exception):
    pass


def _frame(text: str) -> Frame:
    try:
        return parse_frame(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _twisted_partition(text: str) -> Tuple[Partition, Optional[int]]:
    body, _, suffix = text.partition(":")
    try:
        p = parse_partition(body)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {body!r}: {exc}")
    if not suffix:
        return p, None
    if suffix not in _TWIST_NAMES:
        raise argparse.ArgumentTypeError(f"twist suffix must be :o or :det, got {suffix!r}")
    return p, _TWIST_NAMES[suffix]


# ---- rendering -------------------------------------------------------------

def _term_text(p: Partition, coeff) -> str:
    label = format_partition(p)
    return label if coeff == 1 else f"{coeff}*{label}"


def _sorted_items(terms):
    return sorted(terms.items(), key=lambda t: (area(t[0]), tuple(-x for x in t[0])))


def chow_text(x: ChowClass) -> str:
    return " + ".join(_term_text(p, c) for p, c in _sorted_items(x.terms)) or "0"


def ch2_text(x: Ch2Class) -> str:
    return " + ".join(format_partition(p) for p in x) or "0"


def w_text(x: WClass) -> str:
    return " + ".join(_term_text(p, c) for p, c in _sorted_items(x.diagrams())) or "0"


def chow_json(x: ChowClass) -> list:
    return [{"partition": list(p), "coeff": str(c)} for p, c in _sorted_items(x.terms)]


def ch2_json(x: Ch2Class) -> list:
    return [{"partition": list(p), "coeff": "1 (mod 2)"} for p in x]


def w_json(x: WClass) -> list:
    out = []
    for p, c in _sorted_items(x.diagrams()):
        extra = decompose_even(p, x.frame).extra
        out.append({"partition": list(p), "coeff": str(c), "extra": extra.value})
    return out


def i_json(x: IClass) -> dict:
    return {"twist": _TWIST_LABEL[x.twist], "free": w_json(x.free), "torsion": ch2_json(x.torsion)}


def i_text(x: IClass) -> str:
    return (f"twist: {_TWIST_LABEL[x.twist]}\nfree: {w_text(x.free)}\n"
            f"torsion (reduction): {ch2_text(x.torsion)}")


def cw_json(x: CWClass) -> dict:
    return {"ipart": i_json(x.ipart), "chow": chow_json(x.chow)}


def cw_text(x: CWClass) -> str:
    return f"{i_text(x.ipart)}\nchow: {chow_text(x.chow)}"


def degree_json(d) -> dict:
    if isinstance(d, GWForm):
        return {"gw": {"pos": str(d.pos), "neg": str(d.neg)}, "rank": str(d.rank),
                "signature": str(d.signature)}
    return {"degree": str(d), "rank": str(d)}


def degree_text(d) -> str:
    if isinstance(d, GWForm):
        return f"{d}\nrank: {d.rank}\nsignature: {d.signature}"
    return f"{d}\nrank: {d}\n(twist differs from the orientation class: integer degree)"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# ---- commands --------------------------------------------------------------

def _validated(parts, f: Frame):
    for p, _ in parts:
        check_fits(p, f)
    return parts


def _resolve(parts, f: Frame, default: Optional[int] = None):
    return [(p, tw if tw is not None else (default if default is not None
                                            else canonical_twist(p, f))) for p, tw in parts]


def cmd_mult(args) -> Tuple[object, str]:
    f = args.frame
    parts = _validated(args.classes, f)
    ring = args.ring
    if ring == "chow":
        out = ChowClass.unit(f)
        for p, _ in parts:
            out = mult(out, ChowClass.schubert(p, f))
        return {"result": chow_json(out)}, chow_text(out)
    if ring == "ch2":
        out = Ch2Class.unit(f)
        for p, _ in parts:
            out = mult2(out, Ch2Class.schubert(p, f))
        return {"result": ch2_json(out)}, ch2_text(out)
    if ring == "w":
        out = WClass.unit(f)
        for p, _ in parts:
            out = wmult(out, basis_class(p, f))
        return {"result": w_json(out)}, w_text(out)
    lifts = [lift_schubert(p, f, tw) for p, tw in _resolve(parts, f)]
    if ring == "i":
        out = IClass.unit(f)
        for x in lifts:
            out = imult(out, x.ipart)
        return {"result": i_json(out)}, i_text(out)
    out = product(lifts, f)
    return {"result": cw_json(out)}, cw_text(out)


def _drawing(p: Partition, f: Frame, checkerboard: bool) -> str:
    return render(p, f, checkerboard=checkerboard)


def cmd_sq2(args) -> Tuple[object, str]:
    f = args.frame
    parts = _validated(args.classes, f)
    x = Ch2Class(f, [p for p, _ in parts])
    y = sq2(x, _TWIST_NAMES[args.twist])
    text = ch2_text(y)
    if args.draw:
        pictures = [_drawing(p, f, True) for p in y]
        text += "".join("\n\n" + pic for pic in pictures)
    return {"input": ch2_json(x), "twist": args.twist, "result": ch2_json(y)}, text


def cmd_lift(args) -> Tuple[object, str]:
    f = args.frame
    ((p, tw),) = _validated([args.cls], f)
    if tw is None:
        tw = _TWIST_NAMES[args.twist] if args.twist else canonical_twist(p, f)
    x = lift_schubert(p, f, tw)
    kind = "torsion" if not x.ipart.free else "even"
    text = f"lift of {format_partition(p)} with twist {_TWIST_LABEL[tw]} ({kind})\n{cw_text(x)}"
    if args.draw:
        text += "\n\n" + _drawing(p, f, args.checkerboard)
    return {"partition": list(p), "twist": _TWIST_LABEL[tw], "kind": kind,
            "lift": cw_json(x)}, text


def cmd_degree(args) -> Tuple[object, str]:
    from .cw import schubert_problem
    f = args.frame
    parts = _validated(args.classes, f)
    d = schubert_problem(parts, f)
    return degree_json(d), degree_text(d)


def cmd_even_basis(args) -> Tuple[object, str]:
    f = args.frame
    rows, lines = [], []
    for p in sorted(even_diagrams(f), key=lambda q: (area(q), tuple(-x for x in q))):
        dec = decompose_even(p, f)
        rows.append({"partition": list(p), "twist": _TWIST_LABEL[twist(p, f)],
                     "degree": str(area(p)), "core": list(dec.core), "extra": dec.extra.value})
        line = (f"{format_partition(p):<16} twist={_TWIST_LABEL[twist(p, f)]:<3} "
                f"degree={area(p):<3} core={format_partition(dec.core)} extra={dec.extra.value}")
        lines.append(line)
        if args.draw:
            lines.append(_drawing(p, f, args.checkerboard))
    return {"frame": str(f), "basis": rows}, "\n".join(lines)


def cmd_problem(args) -> Tuple[object, str]:
    nums = args.args
    if args.name == "balanced":
        if len(nums) != 2:
            raise UsageError("problem balanced needs two integers i j")
        report = balanced_report(*nums)
    elif args.name == "p1power":
        if len(nums) != 1:
            raise UsageError("problem p1power needs one integer n")
        report = p1_power_report(nums[0], args.max_dim)
    else:
        if len(nums) != 1:
            raise UsageError("problem plucker needs one integer n")
        report = plucker(nums[0])
    payload = {"problem": args.name, "inputs": report.inputs, "frame": str(report.frame)}
    payload.update(degree_json(report.gw))
    payload["details"] = {k: (str(v).lower() if isinstance(v, bool) else str(v))
                          for k, v in report.details.items()}
    text = degree_text(report.gw) + "".join(
        f"\n{k}: {v}" for k, v in sorted(report.details.items()))
    return payload, text


# ---- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    framed = argparse.ArgumentParser(add_help=False, parents=[fmt])
    framed.add_argument("--frame", type=_frame, required=True,
                        help="k x (n-k) frame as KxW or Gr(k,n)")

    parser = argparse.ArgumentParser(
        prog="orschubert",
        description="Schubert products, Steenrod squares and quadratic-form degrees "
                    "on Grassmannians.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", parents=[framed], help="multiply Schubert classes")
    p.add_argument("--ring", choices=("chow", "ch2", "w", "i", "cw"), default="chow")
    p.add_argument("classes", nargs="+", type=_twisted_partition, metavar="PART[:o|:det]")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("sq2", parents=[framed], help="twisted Steenrod square")
    p.add_argument("--twist", choices=("o", "det"), default="o")
    p.add_argument("--draw", action="store_true", help="draw result diagrams with fill")
    p.add_argument("classes", nargs="+", type=_twisted_partition, metavar="PART")
    p.set_defaults(func=cmd_sq2)

    p = sub.add_parser("lift", parents=[framed], help="canonical Chow-Witt lift")
    p.add_argument("--twist", choices=("o", "det"))
    p.add_argument("--draw", action="store_true")
    p.add_argument("--checkerboard", action="store_true")
    p.add_argument("cls", type=_twisted_partition, metavar="PART[:o|:det]")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("degree", parents=[framed], help="degree of a Schubert problem")
    p.add_argument("classes", nargs="+", type=_twisted_partition, metavar="PART[:o|:det]")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("even-basis", parents=[framed], help="list the even diagrams")
    p.add_argument("--draw", action="store_true")
    p.add_argument("--checkerboard", action="store_true")
    p.set_defaults(func=cmd_even_basis)

    p = sub.add_parser("problem", parents=[fmt], help="packaged enumerative problems")
    p.add_argument("name", choices=("balanced", "p1power", "plucker"))
    p.add_argument("args", nargs="+", type=int)
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
    p.set_defaults(func=cmd_problem)
    return parser


def _error_payload(exc: Exception) -> dict:
    err = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NotLiftableError) and exc.obstruction is not None:
        err["obstruction"] = ch2_json(exc.obstruction)
    return {"error": err}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, text = args.func(args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except SchubertError as exc:
        if args.format == "json":
            out.write(_dump(_error_payload(exc)) + "\n")
        err.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 1
    if args.format == "json":
        out.write(_dump(payload) + "\n")
    else:
        out.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run())
