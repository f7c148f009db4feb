"""Equivalence classes of the 63 equiprobable configurations.

Two configurations are equivalent when their reduced output matrices have the
same spectrum for every (q, d); the partition is found by comparing
characteristic polynomials at a few sample points, then checked against the
published class table.

    python demos/class_table.py
"""

from qswitch.classifier import classify, format_table, verify_against_published

for m in range(1, 7):
    table = classify(m)
    print(format_table(table, verify_against_published(table)))
    print()
