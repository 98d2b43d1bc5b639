"""Standalone gnuplot recipes for the survey figures.

Each recipe reads a data file produced by the CLI (CSV or JSON), rewrites
it as a normalized whitespace table next to the script (so both input
formats yield byte-identical scripts and tables), and embeds any auxiliary
closed-form curves (the critical-line |zeta|, Wigner marginals) as inline
data blocks, keeping the script self-contained.
"""
from __future__ import annotations

import csv
import json
import math
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import SchemaError
from .specialfn import zeta_critical


class FigureId(Enum):
    FIG1_I = "fig1-i"
    FIG1_II = "fig1-ii"
    FIG2A = "fig2a"
    FIG2B = "fig2b"
    FIG7 = "fig7"
    FIG8 = "fig8"
    FIG9 = "fig9"
    FIG10 = "fig10"


SCHEMAS = {
    FigureId.FIG1_I: ("p_eta", "re", "im", "abs"),
    FigureId.FIG1_II: ("p_eta", "re", "im", "abs"),
    FigureId.FIG2A: ("x", "phi", "value"),
    FigureId.FIG2B: ("t", "phi", "abs"),
    FigureId.FIG7: ("eta", "p_eta", "w_value"),
    FigureId.FIG8: ("eta", "p_eta", "w_value"),
    FigureId.FIG9: ("eta", "p_eta", "w_value"),
    FigureId.FIG10: ("eta", "p_eta", "w_value"),
}

# long-form tables whose first column is the outer scan variable; gnuplot's
# grid format wants a blank line between scan blocks
_GRIDDED = {FigureId.FIG2A, FigureId.FIG2B, FigureId.FIG7, FigureId.FIG8,
            FigureId.FIG9, FigureId.FIG10}


def load_rows(path: Path) -> tuple[tuple[str, ...], np.ndarray]:
    """Read a CLI output file; format chosen by extension (.json or CSV)."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        with open(path) as fh:
            doc = json.load(fh)
        cols = tuple(doc["meta"]["columns"])
        rows = np.asarray(doc["rows"], dtype=float)
    else:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            cols = tuple(next(reader))
            rows = np.array([[float(c) for c in row] for row in reader])
    if rows.ndim == 1:
        rows = rows.reshape(0, len(cols))
    return cols, rows


def _zeta_block(t_lo: float, t_hi: float, n: int = 320) -> str:
    lines = [f"{t:.10g} {abs(zeta_critical(t)):.10g}"
             for t in np.linspace(t_lo, t_hi, n)]
    return "\n".join(lines)


def _write_dat(path: Path, rows: np.ndarray, gridded: bool) -> None:
    with open(path, "w") as fh:
        prev = None
        for row in rows:
            if gridded and prev is not None and row[0] != prev:
                fh.write("\n")
            prev = row[0]
            fh.write(" ".join(repr(float(c)) for c in row) + "\n")


def _marginal_block(rows: np.ndarray) -> str:
    """ln |integral W d eta| vs p from the long-form Wigner table."""
    etas = np.unique(rows[:, 0])
    ps = np.unique(rows[:, 1])
    w = rows[:, 2].reshape(len(etas), len(ps))
    marg = np.trapezoid(w, x=etas, axis=0)
    out = []
    for p, m in zip(ps, marg):
        out.append(f"{p:.10g} {math.log(abs(m) + 1e-300):.10g}")
    return "\n".join(out)


_HEADER = """\
# gnuplot recipe (standalone); render with: gnuplot {name}
set terminal pngcairo size 1100,800
set output '{stem}.png'
"""


def _script_fig1_i(dat: Path, rows: np.ndarray) -> str:
    body = _HEADER.format(name=dat.with_suffix(".gp").name, stem=dat.stem)
    body += f"""\
$zeta << EOD
{_zeta_block(0.0, 40.0)}
EOD
set multiplot layout 2,1
set xlabel '-p_eta'
set ylabel '|zeta(1/2 - i p_eta)|'
plot [0:40] $zeta using 1:2 with lines lc rgb 'blue' title '|zeta|'
set ylabel 'log|psi(p_eta)| / (-p_eta)'
plot [0:40] '{dat.name}' using (-$1):($1 < -1e-6 ? log($4)/(-$1) : 1/0) \\
    with lines lc rgb 'red' title 'rescaled state'
unset multiplot
"""
    return body


def _script_fig1_ii(dat: Path, rows: np.ndarray) -> str:
    body = _HEADER.format(name=dat.with_suffix(".gp").name, stem=dat.stem)
    body += f"""\
$zeta << EOD
{_zeta_block(0.0, 40.0)}
EOD
set multiplot layout 1,2
set xlabel '-p_eta'
plot [0:40] $zeta using 1:2 with lines lc rgb 'blue' title '|zeta|', \\
    '{dat.name}' using (-$1):4 with lines lc rgb 'red' title '|<p|chi>|'
set logscale y
plot [0:40] $zeta using 1:2 with lines lc rgb 'blue' title '|zeta|', \\
    '{dat.name}' using (-$1):4 with lines lc rgb 'red' title '|<p|chi>|'
unset logscale y
unset multiplot
"""
    return body


def _script_surface(dat: Path, xlabel: str, ylabel: str, title: str) -> str:
    body = _HEADER.format(name=dat.with_suffix(".gp").name, stem=dat.stem)
    body += f"""\
set pm3d map
set xlabel '{xlabel}'
set ylabel '{ylabel}'
splot '{dat.name}' using 1:2:3 with pm3d title '{title}'
"""
    return body


def _script_wigner_detail(dat: Path, rows: np.ndarray) -> str:
    ps = np.unique(rows[:, 1])
    body = _HEADER.format(name=dat.with_suffix(".gp").name, stem=dat.stem)
    body += f"""\
$marginal << EOD
{_marginal_block(rows)}
EOD
$zeta << EOD
{_zeta_block(float(max(0.0, ps.min())), float(ps.max()))}
EOD
set multiplot layout 2,2
set xlabel 'eta'
set ylabel 'p_eta'
set pm3d map
splot '{dat.name}' using 1:2:3 with pm3d title 'W'
splot '{dat.name}' using 1:2:(log(abs($3) + 1e-300)) with pm3d title 'ln|W|'
unset pm3d
set xlabel 'p_eta'
set ylabel 'ln integral W d eta'
plot $marginal using 1:2 with lines title 'momentum marginal'
set ylabel '|zeta(1/2 - i p_eta)|'
plot $zeta using 1:2 with lines lc rgb 'blue' title '|zeta|'
unset multiplot
"""
    return body


def emit_figure_recipe(figure_id: FigureId | str, data_path,
                       script_path=None) -> Path:
    """Write the gnuplot script (and its normalized .dat sidecar).

    Raises SchemaError when the data file does not carry the column set the
    figure expects.  Returns the script path.
    """
    if isinstance(figure_id, str):
        figure_id = FigureId(figure_id)
    data_path = Path(data_path)
    cols, rows = load_rows(data_path)
    expected = SCHEMAS[figure_id]
    if cols != expected:
        raise SchemaError(f"{figure_id.value} expects columns {expected}, "
                          f"file has {cols}")
    script_path = Path(script_path) if script_path else \
        data_path.with_suffix("").with_name(
            data_path.stem + f"_{figure_id.value}.gp")
    dat_path = script_path.with_suffix(".dat")
    _write_dat(dat_path, rows, figure_id in _GRIDDED)

    if figure_id is FigureId.FIG1_I:
        script = _script_fig1_i(dat_path, rows)
    elif figure_id is FigureId.FIG1_II:
        script = _script_fig1_ii(dat_path, rows)
    elif figure_id is FigureId.FIG2A:
        script = _script_surface(dat_path, "x", "phi", "Sigma(x, phi)")
    elif figure_id is FigureId.FIG2B:
        script = _script_surface(dat_path, "t", "phi",
                                 "|Mellin g (1/2 + i t)|")
    elif figure_id in (FigureId.FIG7, FigureId.FIG9):
        script = _script_surface(dat_path, "eta", "p_eta", "W(eta, p_eta)")
    else:
        script = _script_wigner_detail(dat_path, rows)

    with open(script_path, "w") as fh:
        fh.write(script)
    return script_path
