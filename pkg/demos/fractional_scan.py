"""Monte-Carlo scan of chi against the fractional order 1 / sum P^2.

Draws configurations uniformly from the probability simplex (10^4 by default;
pass a count to go bigger, e.g. 1000000 for the full-size scan) and writes the
scatter, the density of fractional orders, and the per-bin minimum of chi.

    python demos/fractional_scan.py [count]
"""

import sys
from pathlib import Path

import numpy as np

from qswitch.fractional import lower_frontier, scan
from qswitch.output import csv_text, line_plot_svg, run_metadata, write_text

OUT = Path(__file__).parent / "out"
count = int(sys.argv[1]) if len(sys.argv) > 1 else 10_000
seed = 0

r = scan(count, d=2, q=0.0, seed=seed, bins=100, workers=4)
meta = run_metadata(seed=seed, count=count)
centers = 0.5 * (r.bin_edges[:-1] + r.bin_edges[1:])
_, lo = lower_frontier(r.m_frac, r.chi, 100)

write_text(OUT / "fractional_scatter.csv",
           csv_text(["m_frac", "chi"], zip(r.m_frac.tolist(), r.chi.tolist()), meta))
write_text(OUT / "fractional_hist.csv", csv_text(["m_center", "density"], zip(centers, r.density), meta))
write_text(OUT / "fractional_density.svg",
           line_plot_svg({"sigma_m": (centers, r.density)}, title="fractional order density",
                         xlabel="m", ylabel="density", meta=meta))
keep = ~np.isnan(lo)
write_text(OUT / "fractional_frontier.svg",
           line_plot_svg({"min chi": (centers[keep], lo[keep])}, title="per-bin minimum of chi",
                         xlabel="m", ylabel="chi (bits)", meta=meta))

print(f"{count} samples, seed {seed}")
print(f"fractional order: mean {r.m_frac.mean():.3f}, range [{r.m_frac.min():.3f}, {r.m_frac.max():.3f}]")
print(f"chi: mean {r.chi.mean():.4f}, max {r.chi.max():.4f}")
print(f"density peaks near m = {centers[np.argmax(r.density)]:.2f}")
