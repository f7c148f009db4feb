"""Cross-check the block-algebra pipeline against explicit Kraus operators.

The brute force builds the full 6d x 6d output of the switch from Weyl
operator Kraus sets and compares every d x d block, the control marginal and
chi.  A second run swaps one F block for a B block to show the check bites.

    python demos/oracle_check.py
"""

from qswitch.cli import run_validation
from qswitch.switch import CANONICAL_PATTERN

for label, pattern in (("canonical", CANONICAL_PATTERN), ("corrupted", CANONICAL_PATTERN.replace(1, 6, "B"))):
    ok, records = run_validation([2, 3], samples=10, seed=1, pattern=pattern)
    worst = max(records, key=lambda r: r["block"])
    print(f"{label:9s} pattern: {'PASS' if ok else 'FAIL'}  worst block deviation {worst['block']:.2e}"
          f" (d={worst['d']}, q={worst['q']}) {worst['where']}")
