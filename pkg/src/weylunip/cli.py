"""Command-line interface.

Verbs:

    classes    list the elliptic conjugacy classes of a Weyl family
    unipotent  list the unipotent class labels of a classical group
    map        tabulate the Lusztig map on elliptic classes
    hasse      emit the Hasse diagram of either poset (or both)
    verify     exhaustively check the order-reversal theorem
    bruhat     compare two group elements in Bruhat order

Exit codes: 0 success, 1 a verification found a counterexample,
2 usage error or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import weylgroup as wg
from .weylgroup import CapExceeded, DEFAULT_CAP
from .classposet import (
    PosetError,
    class_leq_W,
    elliptic_classes,
    hasse,
    hasse_to_dot,
    hasse_to_json,
)
from .lusztig import (
    GROUP_FAMILY,
    group_spec,
    phi,
    verify_combinations,
    verify_theorem,
    weyl_context,
)
from .unipotent import (
    CHAR2,
    GOOD,
    enumerate_unipotent,
    format_unipotent,
    label_to_json,
    unipotent_leq,
)

FAMILY_CHOICES = ("A", "BC", "D", "2A", "O2n", "GL", "GLd")
GROUP_FLAG = {"GL": "GL", "GLd": "GLd", "Sp": "Sp", "SOodd": "O_odd", "SOeven": "O_even"}
FAMILY_DEFAULT_GROUP = {
    "A": "GL",
    "GL": "GL",
    "BC": "Sp",
    "D": "O_even",
    "O2n": "O_even",
    "2A": "GLd",
    "GLd": "GLd",
}


class UsageError(ValueError):
    pass


def _resolve_group(args) -> str:
    if getattr(args, "group", None):
        return GROUP_FLAG[args.group]
    if getattr(args, "family", None):
        return FAMILY_DEFAULT_GROUP[args.family]
    raise UsageError("pass --family or --group")


def _resolve_family(args) -> str:
    fam = getattr(args, "family", None)
    if fam:
        return {"O2n": "D", "GL": "A", "GLd": "2A"}.get(fam, fam)
    if getattr(args, "group", None):
        return GROUP_FAMILY[GROUP_FLAG[args.group]]
    raise UsageError("pass --family or --group")


def _single_rank(args) -> int:
    text = args.rank
    if text is None:
        raise UsageError("pass --rank")
    if ".." in text:
        raise UsageError("rank ranges are only accepted by the verify verb")
    return int(text)


def _rank_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        ranks = list(range(int(lo), int(hi) + 1))
        if not ranks:
            raise UsageError(f"empty rank range {text!r}")
        return ranks
    return [int(text)]


def _parse_window(text: str) -> tuple[int, ...]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = [p for p in body.replace(" ", "").split(",") if p]
    if not parts:
        raise UsageError(f"cannot parse element {text!r}")
    return tuple(int(p) for p in parts)


# ---------------------------------------------------------------------------
# classes


def run_classes(family: str, n: int, component: str, cap: int, fmt: str) -> str:
    ctx = wg.context(family, n, component if family in ("D", "O2n") else None)
    rows = []
    for c in elliptic_classes(ctx):
        rep = wg.class_rep(ctx, c.partition)
        rows.append(
            {
                "class": str(c),
                "rep": list(rep),
                "length": wg.length(ctx, rep),
                "size": len(wg.enumerate_class(ctx, c.partition, cap)),
            }
        )
    if fmt == "json":
        payload = {
            "family": ctx.family,
            "n": ctx.n,
            "component": ctx.component,
            "classes": rows,
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = ["class\trep\tlength\tsize"]
    suffix = "*d" if ctx.family == "2A" else ""
    for row in rows:
        window = "[" + ",".join(str(v) for v in row["rep"]) + "]" + suffix
        lines.append(f"{row['class']}\t{window}\t{row['length']}\t{row['size']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# unipotent


def run_unipotent(group: str, n: int, char: str, fmt: str) -> str:
    labels = enumerate_unipotent(group, n, char)
    if fmt == "json":
        payload = {
            "group": group,
            "n": n,
            "char": char,
            "classes": [label_to_json(u) for u in labels],
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    for u in labels:
        comp = u.so_component
        lines.append(format_unipotent(u) if comp is None else f"{format_unipotent(u)}\t{comp}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# map


def run_map(group: str, n: int, component: str = wg.IDENTITY_COMPONENT, fmt: str = "text") -> str:
    """The Lusztig map tabulated over the elliptic classes, one row per
    class: its label, the good-characteristic image, and the
    characteristic-2 image.  Components with no good-characteristic
    unipotents get a single image column."""
    spec2 = group_spec(group, n, CHAR2)
    ctx = weyl_context(spec2, component)
    good_ok = group != "GLd" and not (
        group == "O_even" and component == wg.TWISTED_COMPONENT
    )
    spec0 = group_spec(group, n, GOOD) if good_ok else None
    rows = []
    for c in elliptic_classes(ctx):
        rows.append(
            (
                c,
                phi(spec0, c) if good_ok else None,
                phi(spec2, c),
            )
        )
    if fmt == "json":
        payload = {
            "group": group,
            "n": n,
            "component": ctx.component,
            "rows": [
                {
                    "class": str(c),
                    "good": None if u0 is None else label_to_json(u0),
                    "char2": label_to_json(u2),
                }
                for c, u0, u2 in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    header = "class\tgood\tchar2" if good_ok else "class\tchar2"
    lines = [header]
    for c, u0, u2 in rows:
        cells = [str(c)]
        if good_ok:
            cells.append(format_unipotent(u0))
        cells.append(format_unipotent(u2))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# hasse


def _build_diagrams(group: str, n: int, char: str, component: str, cap: int):
    spec = group_spec(group, n, char)
    ctx = weyl_context(spec, component)
    classes = elliptic_classes(ctx)
    weyl = hasse(classes, lambda a, b: class_leq_W(a, b, cap))
    images = [phi(spec, c) for c in classes]
    unip = hasse(images, unipotent_leq)
    return weyl, unip


def run_hasse(
    group: str,
    n: int,
    char: str,
    side: str,
    component: str,
    cap: int,
    fmt: str,
) -> tuple[str, int]:
    weyl, unip = _build_diagrams(group, n, char, component, cap)
    opposite = {(j, i) for i, j in unip.covers} == set(weyl.covers)
    code = 0
    if side == "both" and not opposite:
        code = 1
    if fmt == "json":
        payload: dict = {}
        if side in ("weyl", "both"):
            payload["weyl"] = hasse_to_json(weyl)
        if side in ("unipotent", "both"):
            payload["unipotent"] = hasse_to_json(unip, format_unipotent)
        if side == "both":
            payload["opposite"] = opposite
        return json.dumps(payload, indent=2) + "\n", code
    if fmt == "dot":
        parts = []
        if side in ("weyl", "both"):
            parts.append(hasse_to_dot(weyl, name="weyl"))
        if side in ("unipotent", "both"):
            parts.append(hasse_to_dot(unip, format_unipotent, name="unipotent"))
        return "".join(parts), code
    lines = []
    if side in ("weyl", "both"):
        lines.append(f"elliptic classes of {group}({n}), covers lower < upper:")
        for i, j in weyl.covers:
            lines.append(f"  {weyl.nodes[i]} < {weyl.nodes[j]}")
    if side in ("unipotent", "both"):
        lines.append(f"unipotent image, characteristic {char}, covers lower < upper:")
        for i, j in unip.covers:
            lines.append(
                f"  {format_unipotent(unip.nodes[i])} < {format_unipotent(unip.nodes[j])}"
            )
    if side == "both":
        lines.append(f"diagrams mutually opposite: {opposite}")
    return "\n".join(lines) + "\n", code


# ---------------------------------------------------------------------------
# verify


def _verify_task(task: tuple[str, int, str, str, int]) -> dict:
    group, n, char, component, cap = task
    return verify_theorem(group, n, char, component, cap)


def run_verify(
    families: list[str],
    ranks: list[int],
    chars: list[str] | None,
    components: list[str] | None,
    cap: int,
    jobs: int,
    fmt: str,
) -> tuple[str, int]:
    tasks = []
    for family in families:
        fam = {"O2n": "D", "GL": "A", "GLd": "2A"}.get(family, family)
        for group, char, component in verify_combinations(fam):
            if chars and char not in chars:
                continue
            if components and component not in components:
                continue
            for n in ranks:
                if n < 2 and group in ("GLd", "O_even"):
                    continue
                tasks.append((group, n, char, component, cap))
    if not tasks:
        raise UsageError("nothing to verify for that family/char/component choice")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_task, tasks))
    else:
        reports = [_verify_task(t) for t in tasks]
    bad = sum(1 for r in reports if r["failures"])
    code = 1 if bad else 0
    if fmt == "json":
        payload = {"ok": not bad, "reports": reports}
        return json.dumps(payload, indent=2) + "\n", code
    lines = []
    for r in reports:
        status = "FAIL" if r["failures"] else "OK"
        extra = f" component={r['component']}" if "component" in r else ""
        lines.append(
            f"{status} group={r['group']} family={r['family']} n={r['n']} "
            f"char={r['char']}{extra} pairs={r['pairs']} failures={len(r['failures'])}"
        )
    lines.append(
        "all checks passed" if not bad else f"counterexamples found in {bad} run(s)"
    )
    return "\n".join(lines) + "\n", code


# ---------------------------------------------------------------------------
# bruhat


def run_bruhat(family: str, n: int, x_text: str, y_text: str, fmt: str) -> tuple[str, int]:
    fam = {"O2n": "D", "GL": "A", "GLd": "2A"}.get(family, family)
    x = _parse_window(x_text.replace("*d", ""))
    y = _parse_window(y_text.replace("*d", ""))
    component = None
    if fam == "D":
        component = (
            wg.TWISTED_COMPONENT
            if sum(1 for v in x if v < 0) % 2
            else wg.IDENTITY_COMPONENT
        )
    ctx = wg.context(fam, n, component)
    lx, ly = wg.length(ctx, x), wg.length(ctx, y)
    generic = wg.bruhat_leq_generic(ctx, x, y)
    counts = None
    witness = None
    note = None
    code = 0
    if fam in ("A", "BC"):
        counts = wg.bruhat_leq_counts(ctx, x, y)
        if counts != generic:
            note = "count criterion disagrees with the recursive order; this is a bug"
            code = 1
    elif fam == "D":
        cx, cy = wg.count_matrix(ctx, x), wg.count_matrix(ctx, y)
        counts = all(
            cx.entry(i, j) <= cy.entry(i, j) for i in cx.indices() for j in cx.indices()
        )
        note = "for even-signed groups the count criterion is necessary, not sufficient"
        if generic and not counts:
            note = "count criterion violated the necessity direction; this is a bug"
            code = 1
    if counts is False:
        mat_x, mat_y = wg.count_matrix(ctx, x), wg.count_matrix(ctx, y)
        for i in mat_x.indices():
            for j in mat_x.indices():
                if mat_x.entry(i, j) > mat_y.entry(i, j):
                    witness = (i, j)
                    break
            if witness:
                break
    if fmt == "json":
        payload = {
            "family": fam,
            "n": n,
            "x": list(x),
            "y": list(y),
            "generic": generic,
            "counts": counts,
            "witness": list(witness) if witness else None,
        }
        if note:
            payload["note"] = note
        return json.dumps(payload, indent=2) + "\n", code
    lines = [f"x <= y in Bruhat order: {generic}"]
    if counts is not None:
        lines.append(f"count-matrix criterion: {counts}")
        if witness:
            lines.append(f"witness entry (i,j)=({witness[0]},{witness[1]}): x > y there")
    if note:
        lines.append(note)
    return "\n".join(lines) + "\n", code


# ---------------------------------------------------------------------------
# argument wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylunip",
        description="elliptic Weyl-group classes, unipotent classes, and the order-reversing map between them",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, *, fmt=("text", "json"), char=False, component=False, group=False):
        p.add_argument("--family", choices=FAMILY_CHOICES)
        if group:
            p.add_argument("--group", choices=sorted(GROUP_FLAG))
        p.add_argument("--rank", required=True, help="rank n (verify accepts A..B)")
        if char:
            p.add_argument("--char", choices=(GOOD, CHAR2))
        if component:
            p.add_argument(
                "--component",
                choices=(wg.IDENTITY_COMPONENT, wg.TWISTED_COMPONENT),
                default=wg.IDENTITY_COMPONENT,
            )
        p.add_argument("--format", choices=fmt, default="text")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("classes", help="elliptic conjugacy classes")
    common(p, component=True)

    p = sub.add_parser("unipotent", help="unipotent class labels")
    common(p, char=True, group=True)

    p = sub.add_parser("map", help="the elliptic-to-unipotent map, both characteristics")
    common(p, component=True, group=True)

    p = sub.add_parser("hasse", help="Hasse diagrams of the two posets")
    common(p, fmt=("text", "json", "dot"), char=True, component=True, group=True)
    p.add_argument("--side", choices=("weyl", "unipotent", "both"), default="both")

    p = sub.add_parser("verify", help="check the order-reversal theorem exhaustively")
    common(p, char=True, component=True)
    p.add_argument("--jobs", type=int, default=1)
    # verify runs every valid (char, component) combination unless the
    # flags narrow it down, so its component flag must not default to id
    p.set_defaults(component=None)

    p = sub.add_parser("bruhat", help="compare two elements in Bruhat order")
    common(p)
    p.add_argument("x", help="element window, e.g. [-2,1,3]")
    p.add_argument("y", help="element window, e.g. [3,-1,-2]")

    return parser


def _default_char(args, group: str) -> str:
    char = getattr(args, "char", None)
    if char:
        return char
    if group == "GLd" or (
        group == "O_even"
        and getattr(args, "component", None) == wg.TWISTED_COMPONENT
    ):
        return CHAR2
    return GOOD


def _dispatch(args) -> tuple[str, int]:
    if args.verb == "classes":
        family = _resolve_family(args)
        return (
            run_classes(family, _single_rank(args), args.component, args.cap, args.format),
            0,
        )
    if args.verb == "unipotent":
        group = _resolve_group(args)
        return run_unipotent(group, _single_rank(args), _default_char(args, group), args.format), 0
    if args.verb == "map":
        group = _resolve_group(args)
        return run_map(group, _single_rank(args), args.component, args.format), 0
    if args.verb == "hasse":
        group = _resolve_group(args)
        return run_hasse(
            group,
            _single_rank(args),
            _default_char(args, group),
            args.side,
            args.component,
            args.cap,
            args.format,
        )
    if args.verb == "verify":
        if not args.family:
            raise UsageError("verify needs --family")
        chars = [args.char] if args.char else None
        components = [args.component] if args.component else None
        return run_verify(
            [args.family],
            _rank_range(args.rank),
            chars,
            components,
            args.cap,
            args.jobs,
            args.format,
        )
    if args.verb == "bruhat":
        family = _resolve_family(args)
        return run_bruhat(family, _single_rank(args), args.x, args.y, args.format)
    raise UsageError(f"unknown verb {args.verb!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = _dispatch(args)
    except (UsageError, ValueError, CapExceeded, PosetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
