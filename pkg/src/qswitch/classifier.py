"""Partition of the equiprobable configurations into spectral equivalence classes."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb

from .blocks import ChannelParams
from .holevo import holevo
from .spectrum import DEFAULT_SAMPLE_POINTS, invariant_signature, signatures_match
from .switch import N_ORDERS, OrderConfiguration, equiprobable

# probe used to order the classes of one m
ORDERING_PROBE = ChannelParams(0.1, 2)

# Published class table: member positions in the lexicographic enumeration of
# supports, grouped by published class label.
PUBLISHED_CLASSES: dict[int, dict[int, tuple[int, ...]]] = {
    1: {1: (1, 2, 3, 4, 5, 6)},
    2: {1: (1, 2, 8, 10, 14, 15), 2: (3, 4, 6, 9, 12, 13), 3: (5, 7, 11)},
    3: {1: (1, 3, 5, 16, 18, 20), 2: (2, 4, 6, 7, 9, 10, 11, 12, 14, 15, 17, 19), 3: (8, 13)},
    4: {1: (1, 2, 6, 8, 14, 15), 2: (3, 4, 7, 10, 12, 13), 3: (5, 9, 11)},
    5: {1: (1, 2, 3, 4, 5, 6)},
    6: {1: (1,)},
}


def supports(m: int) -> list[tuple[int, ...]]:
    """All m-subsets of the labels 1..6 in lexicographic order."""
    if not 1 <= m <= N_ORDERS:
        raise ValueError(f"m must be between 1 and {N_ORDERS}, got {m}")
    return list(itertools.combinations(range(1, N_ORDERS + 1), m))


def enumerate_configs(m: int) -> list[OrderConfiguration]:
    """Equiprobable configurations with m orders; position i+1 in the list is
    the configuration the class table calls S_{i+1}^(m)."""
    return [equiprobable(s) for s in supports(m)]


def published_support(m: int, label: int) -> tuple[int, ...]:
    """Support of the first member of a published class (its representative)."""
    return supports(m)[PUBLISHED_CLASSES[m][label][0] - 1]


@dataclass
class EquivalenceClass:
    signature: tuple[float, ...]
    members: list[int]                     # 1-based enumeration indices
    supports: list[tuple[int, ...]]
    chi_probe: float
    published_label: int | None = None

    @property
    def representative(self) -> tuple[int, ...]:
        return self.supports[0]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class ClassTable:
    m: int
    classes: list[EquivalenceClass]

    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def representatives(self) -> list[tuple[int, ...]]:
        return [c.representative for c in self.classes]

    def by_label(self, label: int) -> EquivalenceClass:
        for c in self.classes:
            if c.published_label == label:
                return c
        raise KeyError(f"no class with published label {label} for m={self.m}")


@dataclass
class PublishedReport:
    m: int
    mapping: dict[int, int | None] = field(default_factory=dict)   # computed index -> published label
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def classify(m: int, sample_points=DEFAULT_SAMPLE_POINTS) -> ClassTable:
    """Group the C(6, m) equiprobable configurations by invariant signature.

    Each configuration joins the first class whose signature it matches.

    Classes are ordered by descending chi at q=0.1, d=2, ties broken by the
    first member.  Published labels are attached by matching memberships.
    """
    groups: list[tuple[tuple[float, ...], list[int]]] = []
    configs = enumerate_configs(m)
    for index, config in enumerate(configs, start=1):
        sig = invariant_signature(config, sample_points)
        for ref, members in groups:
            if signatures_match(sig, ref):
                members.append(index)
                break
        else:
            groups.append((sig, [index]))

    all_supports = supports(m)
    classes = []
    for sig, members in groups:
        chi = holevo(configs[members[0] - 1], ORDERING_PROBE).chi
        classes.append(EquivalenceClass(sig, members, [all_supports[i - 1] for i in members], chi))
    classes.sort(key=lambda c: (-round(c.chi_probe, 10), c.members[0]))

    table = ClassTable(m, classes)
    report = verify_against_published(table)
    for index, cls in enumerate(table.classes, start=1):
        cls.published_label = report.mapping.get(index)
    return table


def verify_against_published(table: ClassTable) -> PublishedReport:
    """Compare computed memberships with the published class table."""
    report = PublishedReport(table.m)
    published = {label: set(members) for label, members in PUBLISHED_CLASSES[table.m].items()}
    matched = set()
    for index, cls in enumerate(table.classes, start=1):
        label = next((lb for lb, mem in published.items() if mem == set(cls.members)), None)
        report.mapping[index] = label
        if label is None:
            report.mismatches.append(
                f"m={table.m}: computed class {index} {sorted(cls.members)} matches no published class"
            )
        else:
            matched.add(label)
    for label in sorted(set(published) - matched):
        report.mismatches.append(
            f"m={table.m}: published class {label} {sorted(published[label])} was not recovered"
        )
    total = sum(table.sizes())
    if total != comb(N_ORDERS, table.m):
        report.mismatches.append(f"m={table.m}: class sizes sum to {total}, expected {comb(N_ORDERS, table.m)}")
    return report


def table_to_dict(table: ClassTable, report: PublishedReport | None = None) -> dict:
    report = report or verify_against_published(table)
    return {
        "m": table.m,
        "classes": [
            {
                "index": i,
                "published_class": c.published_label,
                "size": c.size,
                "members": c.members,
                "supports": [list(s) for s in c.supports],
                "chi_q0.1_d2": c.chi_probe,
            }
            for i, c in enumerate(table.classes, start=1)
        ],
        "report": {"ok": report.ok, "mapping": {str(k): v for k, v in report.mapping.items()},
                   "mismatches": report.mismatches},
    }


def tables_to_json(tables: list[ClassTable]) -> str:
    return json.dumps([table_to_dict(t) for t in tables], indent=2)


def format_table(table: ClassTable, report: PublishedReport | None = None) -> str:
    report = report or verify_against_published(table)
    lines = [f"m = {table.m}  ({sum(table.sizes())} configurations, {len(table.classes)} classes)"]
    for i, c in enumerate(table.classes, start=1):
        label = "-" if c.published_label is None else str(c.published_label)
        members = ", ".join(f"S{j}" for j in c.members)
        lines.append(f"  class {i} [published: {label}] size {c.size:2d}  chi(0.1, 2)={c.chi_probe:.6f}  {members}")
    lines.append("  published: " + ("match" if report.ok else "MISMATCH"))
    lines.extend("    " + msg for msg in report.mismatches)
    return "\n".join(lines)
