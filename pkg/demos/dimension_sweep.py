"""Best class of each m across target dimensions d = 2..6.

At small q the Holevo information falls with d; past roughly q = 0.3 the
log d term wins and larger targets carry more.

    python demos/dimension_sweep.py
"""

from pathlib import Path

import numpy as np

from qswitch import ChannelParams, equiprobable, holevo
from qswitch.classifier import classify
from qswitch.output import csv_text, line_plot_svg, run_metadata, write_text

OUT = Path(__file__).parent / "out"
qs = np.linspace(0.0, 1.0, 101)
meta = run_metadata()
rows = []

for m in (2, 3, 4, 5):
    # largest chi at q = 0, d = 2
    best = max(classify(m).classes,
               key=lambda c: holevo(equiprobable(c.representative), ChannelParams(0.0, 2)).chi)
    cfg = equiprobable(best.representative)
    series = {}
    for d in range(2, 7):
        chi = [holevo(cfg, ChannelParams(q, d)).chi for q in qs]
        series[f"d = {d}"] = (qs, chi)
        rows += [(q, d, m, best.published_label, c) for q, c in zip(qs, chi)]
    at = {q: [holevo(cfg, ChannelParams(q, d)).chi for d in range(2, 7)] for q in (0.1, 0.6)}
    print(f"m={m} best class {best.published_label} {best.representative}")
    print("   q=0.1:", " ".join(f"{c:.4f}" for c in at[0.1]))
    print("   q=0.6:", " ".join(f"{c:.4f}" for c in at[0.6]))
    write_text(OUT / f"chi_vs_q_by_d_m{m}.svg", line_plot_svg(series, title=f"m = {m}, class {best.published_label}",
                                                     xlabel="q", ylabel="chi (bits)", meta=meta))

write_text(OUT / "chi_vs_q_by_d.csv", csv_text(["q", "d", "m", "class", "chi"], rows, meta))
