"""CSV and SVG writers with a reproducibility header."""

from __future__ import annotations

import csv
import datetime as _dt
import io
import os
import shlex
import subprocess
import sys
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import __version__

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


def git_revision() -> str:
    try:
        out = subprocess.run(
            ["git", "rev-parse", "--short", "HEAD"],
            cwd=Path(__file__).resolve().parent,
            capture_output=True, text=True, timeout=5,
        )
    except (OSError, subprocess.SubprocessError):
        return "unknown"
    return out.stdout.strip() or "unknown"


def timestamp() -> str:
    # SOURCE_DATE_EPOCH pins the header so reruns are byte-identical
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = (_dt.datetime.fromtimestamp(int(epoch), _dt.timezone.utc) if epoch
            else _dt.datetime.now(_dt.timezone.utc))
    return when.strftime("%Y-%m-%dT%H:%M:%SZ")


def run_metadata(argv: Sequence[str] | None = None, seed: int | None = None, **extra) -> dict:
    argv = list(sys.argv if argv is None else argv)
    meta = {
        "tool": f"qswitch {__version__}",
        "command": shlex.join(argv),
        "seed": "none" if seed is None else str(seed),
        "timestamp": timestamp(),
        "git": git_revision(),
    }
    meta.update({k: str(v) for k, v in extra.items()})
    return meta


def fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def csv_text(header: Sequence[str], rows: Iterable[Sequence], meta: Mapping[str, str]) -> str:
    buf = io.StringIO(newline="")
    for key, value in meta.items():
        buf.write(f"# {key}: {value}\r\n")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def write_text(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def write_csv(path, header, rows, meta) -> None:
    write_text(path, csv_text(header, rows, meta))


def read_csv(path) -> tuple[dict, list[dict]]:
    """Parse a file written by `write_csv`: ``(metadata, rows)``."""
    meta, lines = {}, []
    with open(path, encoding="utf-8", newline="") as fh:
        for line in fh:
            if line.startswith("# "):
                key, _, value = line[2:].rstrip("\r\n").partition(": ")
                meta[key] = value
            else:
                lines.append(line)
    return meta, list(csv.DictReader(lines))


def line_plot_svg(series: Mapping[str, tuple[Sequence[float], Sequence[float]]], *,
                  title: str = "", xlabel: str = "", ylabel: str = "",
                  width: int = 640, height: int = 420, meta: Mapping[str, str] | None = None) -> str:
    """Minimal SVG line plot: axes with ticks, one polyline per series, legend."""
    left, right, top, bottom = 70, 150, 40, 55
    pw, ph = width - left - right, height - top - bottom
    xs = [x for xv, _ in series.values() for x in xv]
    ys = [y for _, yv in series.values() for y in yv]
    x0, x1 = (min(xs), max(xs)) if xs else (0.0, 1.0)
    y0, y1 = (min(0.0, min(ys)), max(ys)) if ys else (0.0, 1.0)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1

    def sx(x):
        return left + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return top + ph - (y - y0) / (y1 - y0) * ph

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'font-family="sans-serif" font-size="12">']
    for key, value in (meta or {}).items():
        out.append(f"<!-- {key}: {value.replace('--', '- -')} -->")
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>')
    out.append(f'<text x="{left + pw / 2}" y="22" text-anchor="middle" font-size="14">{title}</text>')
    out.append(f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>')
    for i in range(6):
        tx = x0 + (x1 - x0) * i / 5
        ty = y0 + (y1 - y0) * i / 5
        out.append(f'<line x1="{sx(tx):.2f}" y1="{top + ph}" x2="{sx(tx):.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{sx(tx):.2f}" y="{top + ph + 18}" text-anchor="middle">{tx:.3g}</text>')
        out.append(f'<line x1="{left - 5}" y1="{sy(ty):.2f}" x2="{left}" y2="{sy(ty):.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{sy(ty) + 4:.2f}" text-anchor="end">{ty:.3g}</text>')
    out.append(f'<text x="{left + pw / 2}" y="{height - 15}" text-anchor="middle">{xlabel}</text>')
    out.append(f'<text x="18" y="{top + ph / 2}" text-anchor="middle" '
               f'transform="rotate(-90 18 {top + ph / 2})">{ylabel}</text>')
    for i, (label, (xv, yv)) in enumerate(series.items()):
        color = PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xv, yv))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = top + 15 + 18 * i
        out.append(f'<line x1="{left + pw + 12}" y1="{ly}" x2="{left + pw + 32}" y2="{ly}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{left + pw + 38}" y="{ly + 4}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
