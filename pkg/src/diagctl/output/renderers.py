"""Operation-specific rich renderers for ServiceResult.

Each renderer prints into a StringIO-backed console; :func:`render_result`
dispatches on ``result.op`` and falls back to a key-value listing for
operations without a dedicated renderer.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any

from rich.table import Table
from rich.text import Text

from diagctl.output.console import create_console, get_output, style_for_status

if TYPE_CHECKING:
    from collections.abc import Callable

    from rich.console import Console

    from diagctl.services.result import ServiceResult

    Renderer = Callable[..., None]


# ── Public API ────────────────────────────────────────────────────────


def render_result(result: ServiceResult, *, verbose: bool = False) -> str:
    """Render *result* as styled text (plain when not on a terminal)."""
    console = create_console()
    renderer = _OP_RENDERERS.get(result.op, _render_generic)
    if result.ok:
        renderer(result, console, verbose=verbose)
    else:
        _render_error(result, console, verbose=verbose)
        # Failed checks and bound breaches keep their data; show it.
        if result.data and result.op in _OP_RENDERERS:
            console.print()
            renderer(result, console, verbose=verbose, header=False)
    return get_output(console).rstrip("\n")


def render_quiet(result: ServiceResult) -> str:
    """One line per result, or ids for list payloads."""
    if not result.ok:
        msg = result.error.message if result.error else "unknown error"
        return f"ERROR: {result.op}: {msg}"
    for key in ("items", "checks"):
        rows = result.data.get(key)
        if isinstance(rows, list) and rows:
            return "\n".join(_row_id(r) for r in rows)
    headline = _HEADLINES.get(result.op)
    if headline and headline in result.data:
        return f"{result.data[headline]}"
    return f"OK: {result.op}"


# Field printed alone in quiet mode.
_HEADLINES: dict[str, str] = {
    "info": "order",
    "covering": "cn",
    "strongly_real": "strongly_real",
    "orbdiam": "orbdiam",
    "gamma0": "diameter",
    "path": "length",
    "nu": "ratio",
    "corollary": "implied",
}


# ── Helpers ───────────────────────────────────────────────────────────


def _row_id(row: Any) -> str:
    if isinstance(row, dict):
        if "status" in row:
            return f"{row.get('id')} {row['status']}"
        for key in ("id", "class_id", "z_class"):
            if key in row:
                return str(row[key])
    return str(row)


def _status_line(console: Console, result: ServiceResult) -> None:
    label = Text("OK", style="diag.ok")
    op = Text(f"  {result.op}", style="diag.op")
    console.print(label, op, sep="", end="")
    group = result.data.get("group")
    if group:
        console.print(Text(f"  {group}", style="diag.group"), end="")
    console.print()


def _field(console: Console, key: str, value: Any) -> None:
    k = Text(f"  {key}: ", style="diag.key")
    if isinstance(value, (dict, list)):
        v = Text(json.dumps(value, separators=(",", ":")))
    elif key.endswith("cycles") or key in ("t", "u", "x"):
        v = Text(str(value), style="diag.cycles")
    elif key in ("path", "dot"):
        v = Text(str(value), style="diag.path")
    elif isinstance(value, (int, float)) and not isinstance(value, bool):
        v = Text(str(value), style="diag.value")
    else:
        v = Text(str(value))
    console.print(k, v, sep="", end="")
    console.print()


def _fields(console: Console, data: dict[str, Any], keys: tuple[str, ...]) -> None:
    for key in keys:
        if data.get(key) is not None:
            _field(console, key, data[key])


def _table(columns: list[str], rows: list[list[Any]], *, right: int = 0) -> Table:
    """Table whose last *right* columns are right-aligned numbers."""
    table = Table(show_header=True, show_lines=False, pad_edge=False, expand=False)
    for i, name in enumerate(columns):
        numeric = i >= len(columns) - right
        table.add_column(name, justify="right" if numeric else "left", no_wrap=numeric)
    for row in rows:
        table.add_row(*("-" if v is None else str(v) for v in row))
    return table


def _render_meta(console: Console, result: ServiceResult) -> None:
    """Meta block with the telemetry tree (verbose only)."""
    if not result.meta:
        return
    console.print()
    console.print(Text("  meta:", style="dim"))
    for key, value in result.meta.items():
        if key == "telemetry":
            _render_telemetry_tree(console, value, indent=4)
        else:
            console.print(Text(f"    {key}: {value}"))


def _render_telemetry_tree(console: Console, span: dict[str, Any], indent: int = 4) -> None:
    prefix = " " * indent
    duration = span.get("duration_ms", 0.0)
    if duration > 10_000:
        style = "bold red"
    elif duration > 1_000:
        style = "yellow"
    else:
        style = "dim"
    line = f"{prefix}[{style}]{duration:>10.2f}ms[/{style}]  {span.get('name', '?')}"
    extras = []
    if span.get("work"):
        extras.append(f"work={span['work']:,}")
    for key, value in span.get("annotations", {}).items():
        extras.append(f"{key}={value}")
    if extras:
        line += f"  ({', '.join(extras)})"
    console.print(line)
    for child in span.get("children", []):
        _render_telemetry_tree(console, child, indent=indent + 4)


def _yes(flag: bool, no: str = "no") -> str:
    return "yes" if flag else no


def _complex(pair: list[float]) -> str:
    re, im = pair
    if abs(im) < 1e-9:
        return f"{re:g}"
    sign = "+" if im >= 0 else "-"
    if abs(re) < 1e-9:
        return f"{im:.3g}i"
    return f"{re:.3g}{sign}{abs(im):.3g}i"


# ── Error renderer ────────────────────────────────────────────────────


def _render_error(result: ServiceResult, console: Console, *, verbose: bool = False) -> None:
    err = result.error
    msg = err.message if err else "unknown error"
    label = Text("ERROR", style="diag.error")
    op = Text(f"  {result.op}", style="diag.op")
    code = Text(f"  [{err.code}]  " if err else "  ", style="dim")
    console.print(label, op, code, Text(msg), sep="")
    if err and err.detail and (verbose or err.code == "PARSE_ERROR"):
        console.print(Text("  detail:", style="dim"))
        for key, value in err.detail.items():
            console.print(Text(f"    {key}: {value}"))
    for warning in result.warnings:
        console.print(Text(f"  warning: {warning}", style="diag.warning"))


# ── Group renderers ───────────────────────────────────────────────────


def _render_info(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    _fields(console, d, ("order", "degree", "class_count", "exponent"))
    _field(console, "class_sizes", d.get("class_sizes", []))
    _field(console, "rep_orders", d.get("rep_orders", []))
    _field(console, "real_classes", d.get("real_classes", []))
    if verbose:
        _field(console, "generators", d.get("generators", []))
    autos = d.get("automorphisms", [])
    if autos:
        console.print(Text("  automorphisms:", style="diag.key"))
        for item in autos:
            console.print(f"    {item['label']} ({item['kind']})")
    if verbose:
        _render_meta(console, result)


def _render_classes(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    if header:
        _status_line(console, result)
    rows = [
        [r["id"], r["rep_cycles"], r["size"], r["order"], r["inverse"], _yes(r["real"])]
        for r in result.data.get("items", [])
    ]
    columns = ["id", "representative", "size", "order", "inverse", "real"]
    console.print(_table(columns, rows, right=4))
    if verbose:
        _render_meta(console, result)


# ── Width renderers ───────────────────────────────────────────────────


def _render_widths(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    if d.get("model") and d["model"] != d.get("group"):
        _field(console, "model", d["model"])
    _field(console, "x", d.get("x"))
    x_col = f"c_{d.get('x', 'x')}"
    columns = ["class", "representative", "size", "order", "c", "c_i", x_col]
    with_cn = any(r.get("cn") is not None for r in d.get("classes", []))
    if with_cn:
        columns.append("cn")
    rows = []
    for r in d.get("classes", []):
        row = [r["class_id"], r["rep_cycles"], r["size"], r["order"], r["c"], r["c_i"], r["c_x"]]
        if with_cn:
            row.append(r.get("cn"))
        rows.append(row)
    console.print(_table(columns, rows, right=len(columns) - 2))
    maxima = {k: v for k, v in d.get("maxima", {}).items() if v is not None}
    console.print(
        Text("  maxima: ", style="diag.key"),
        Text("  ".join(f"{k}={v}" for k, v in maxima.items()), style="diag.value"),
        sep="",
    )
    if verbose:
        _render_meta(console, result)


def _render_covering(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    rows = [[r["class_id"], r["rep_cycles"], r["size"], r["cn"]] for r in d.get("classes", [])]
    console.print(_table(["class", "representative", "size", "cn"], rows, right=2))
    _field(console, "cn", d.get("cn"))
    if verbose:
        _render_meta(console, result)


def _render_cycles(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    if header:
        _status_line(console, result)
    rows = [[r["n"], r["l"], _yes(r["holds"])] for r in result.data.get("items", [])]
    console.print(_table(["n", "l", "three l-cycles"], rows, right=2))
    if verbose:
        _render_meta(console, result)


def _render_involution(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    if header:
        _status_line(console, result)
    rows = [
        [r["class_id"], r["u"], r["x"], r["product_order"]] for r in result.data.get("items", [])
    ]
    console.print(_table(["class", "u", "x", "|u·u^x|"], rows, right=1))
    if verbose:
        _render_meta(console, result)


# ── Character renderers ───────────────────────────────────────────────


def _render_chartable(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    _fields(console, d, ("order", "source", "prime", "path"))
    classes = d.get("classes", {})
    pairs = zip(classes.get("rep_orders", []), classes.get("sizes", []), strict=True)
    columns = ["χ"] + [f"{o}/{s}" for o, s in pairs]
    rows = [[f"χ{i}", *(_complex(v) for v in row)] for i, row in enumerate(d.get("values", []))]
    console.print(_table(columns, rows, right=len(columns) - 1))
    console.print(Text("  columns are order/size of each class", style="dim"))
    _fields(console, d, ("row_residual", "column_residual"))
    if verbose:
        _render_meta(console, result)


def _render_count(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    _field(console, "class_ids", d.get("class_ids", []))
    rows = [
        [
            r["z_class"],
            r["rounded"],
            f"{r['residual']:.2e}",
            r.get("bruteforce"),
            {True: "yes", False: "NO", None: "-"}[r.get("match")],
        ]
        for r in d.get("items", [])
    ]
    console.print(_table(["z", "characters", "residual", "brute force", "match"], rows, right=4))
    if verbose:
        _render_meta(console, result)


def _render_corollary(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    if header:
        _status_line(console, result)
    _fields(console, result.data, ("c_class", "d_class", "k", "magnitude", "implied"))
    if verbose:
        _render_meta(console, result)


# ── Diagonal renderers ────────────────────────────────────────────────


def _diagonal_header(console: Console, d: dict[str, Any]) -> None:
    if d.get("model") and d["model"] != d.get("group"):
        _field(console, "model", d["model"])
    _field(console, "action", f"{d.get('variant')}, k={d.get('k')}")


def _render_orbdiam(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    _diagonal_header(console, d)
    _fields(console, d, ("omega_size", "rank"))
    rows = [
        [
            ",".join(str(i) for i in r["suborbit_ids"]),
            " ".join(r["representative"]),
            r["suborbit_size"],
            r["valency"],
            r["diameter"],
        ]
        for r in d.get("orbitals", [])
    ]
    columns = ["suborbits", "representative", "size", "valency", "diameter"]
    console.print(_table(columns, rows, right=3))
    _fields(console, d, ("orbdiam", "strict_lower_bound"))
    if verbose:
        _render_meta(console, result)


def _render_gamma0(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    _diagonal_header(console, d)
    _fields(console, d, ("t", "omega_size", "valency", "diameter", "dot"))
    cert = d.get("certificate", {})
    console.print(Text("  certificate:", style="diag.key"))
    bounds = f"{cert.get('lower')} ≤ {d.get('diameter')} ≤ {cert.get('upper')}"
    style = "diag.ok" if cert.get("holds") else "diag.error"
    console.print(Text(f"    {bounds}", style=style))
    for key in ("c_x_t", "c_i", "upper_quadratic"):
        if cert.get(key) is not None:
            console.print(f"    {key}: {cert[key]}")
    if verbose:
        _render_meta(console, result)


def _render_path(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    _field(console, "action", f"{d.get('variant')}, k={d.get('k')}")
    _fields(console, d, ("t", "length"))
    for i, step in enumerate(d.get("steps", []), start=1):
        console.print(f"  {i:>3}. ({', '.join(step)})")
    if verbose:
        _render_meta(console, result)


# ── Linear and verification renderers ─────────────────────────────────


def _render_nu(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    _field(console, "group", f"SL_{d.get('n')}({d.get('q')})")
    _fields(console, d, ("transvection", "singer", "ratio", "c_a", "bound_holds"))
    classes = d.get("classes", [])
    if classes:
        rows = [
            [r["class_id"], r["rep_cycles"], r["nu"], r["bound"], r["c_a"], _yes(r["holds"], "NO")]
            for r in classes
        ]
        columns = ["class", "representative", "ν", "bound", "c_A", "holds"]
        console.print(_table(columns, rows, right=4))
    if verbose:
        _render_meta(console, result)


def _render_verify(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    d = result.data
    if header:
        _status_line(console, result)
    table = Table(show_header=True, show_lines=False, pad_edge=False, expand=False)
    table.add_column("check", no_wrap=True)
    table.add_column("expected", justify="right")
    table.add_column("computed", justify="right")
    table.add_column("status")
    if verbose:
        table.add_column("source", style="dim")
    for check in d.get("checks", []):
        status = check["status"]
        row = [
            check["id"],
            json.dumps(check["expected"]),
            "-" if status == "skipped" else json.dumps(check.get("computed")),
            Text(status, style=style_for_status(status)),
        ]
        if verbose:
            row.append(check["source"])
        table.add_row(*row)
    console.print(table)
    counts = {key: d.get(key, 0) for key in ("passed", "failed", "skipped")}
    summary = "  " + ", ".join(f"{key} {value}" for key, value in counts.items())
    console.print(summary + ("  (incomplete)" if d.get("incomplete") else ""))
    notes = [c for c in d.get("checks", []) if c.get("note")]
    for check in notes:
        console.print(Text(f"  {check['id']}: {check['note']}", style="diag.warning"))
    if verbose:
        _render_meta(console, result)


# ── Generic fallback ──────────────────────────────────────────────────


def _render_generic(
    result: ServiceResult, console: Console, *, verbose: bool = False, header: bool = True
) -> None:
    if header:
        _status_line(console, result)
    for key, value in result.data.items():
        if key != "group":
            _field(console, key, value)
    if verbose:
        _render_meta(console, result)


# ── Dispatch table ────────────────────────────────────────────────────

_OP_RENDERERS: dict[str, Renderer] = {
    "info": _render_info,
    "classes": _render_classes,
    "widths": _render_widths,
    "covering": _render_covering,
    "strongly_real": _render_generic,
    "cycles": _render_cycles,
    "involution": _render_involution,
    "chartable": _render_chartable,
    "count": _render_count,
    "corollary": _render_corollary,
    "orbdiam": _render_orbdiam,
    "gamma0": _render_gamma0,
    "path": _render_path,
    "nu": _render_nu,
    "verify_paper": _render_verify,
}
