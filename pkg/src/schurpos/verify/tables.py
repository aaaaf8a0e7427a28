"""Golden expansions of the D-families and the table layout used by the CLI.

Golden rows are stored as text in the compact ``s[4,3^2,1]`` form and compared
as dictionaries, so term order inside a row is irrelevant.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..report import CheckReport, report
from ..schur import SchurSum
from .dfamily import DabkrIndex, DFamilyIndex, d_family, dabkr

# D_{m,i}, keyed by m then i.
GOLDEN_D_FAMILY: dict[int, dict[int, str]] = {
    7: {
        0: "s[2^6]",
        1: "s[4,2^4] + s[3^2,2^3] + s[3,2^4,1]",
        2: "s[3^2,2^2,1^2] + s[4,3^2,2] + s[4^2,2^2] + s[3^3,2,1] + s[4,3,2^2,1]",
        3: "s[4,3^2,1^2] + s[3^3,1^3] + s[4^2,3,1] + s[4^3]",
        4: "-s[4,3^2,2] - s[4,3^2,1^2] - s[3^3,2,1] - s[3^3,1^3] - s[4^2,3,1]",
        5: "-s[3^2,2^3] - s[3^2,2^2,1^2] - s[4,3,2^2,1]",
        6: "-s[3,2^4,1]",
        7: "0",
    },
    8: {
        0: "s[2^7]",
        1: "s[4,2^5] + s[3^2,2^4] + s[3,2^5,1]",
        2: "s[3^2,2^3,1^2] + s[4,3^2,2^2] + s[4^2,2^3] + s[3^3,2^2,1] + s[4,3,2^3,1]",
        3: "s[4,3^2,2,1^2] + s[3^3,2,1^3] + s[4^2,3,2,1] + s[4^3,2] + s[3^4,1^2] + s[4^2,3^2] + s[4,3^3,1]",
        4: "-s[3^4,1^2] - s[4^2,3^2] - s[4,3^3,1]",
        5: "-s[4^2,3,2,1] - s[3^3,2^2,1] - s[3^3,2,1^3] - s[4,3^2,2,1^2] - s[4,3^2,2^2]",
        6: "-s[3^2,2^4] - s[3^2,2^3,1^2] - s[4,3,2^3,1]",
        7: "-s[3,2^5,1]",
        8: "0",
    },
    9: {
        0: "s[2^8]",
        1: "s[4,2^6] + s[3^2,2^5] + s[3,2^6,1]",
        2: "s[3^2,2^4,1^2] + s[4,3^2,2^3] + s[4^2,2^4] + s[3^3,2^3,1] + s[4,3,2^4,1]",
        3: "s[4,3^2,2^2,1^2] + s[3^3,2^2,1^3] + s[4^2,3,2^2,1] + s[4^3,2^2] + s[3^4,2,1^2] + s[4^2,3^2,2] + s[4,3^3,2,1]",
        4: "s[4,3^3,1^3] + s[4^2,3^2,1^2] + s[4^4] + s[4^3,3,1] + s[3^4,1^4]",
        5: "-s[4,3^3,1^3] - s[4^2,3^2,1^2] - s[4^4] - s[4^3,3,1] - s[3^4,1^4] - s[3^4,2,1^2] - s[4^2,3^2,2] - s[4,3^3,2,1]",
        6: "-s[4^2,3,2^2,1] - s[3^3,2^3,1] - s[3^3,2^2,1^3] - s[4,3^2,2^2,1^2] - s[4,3^2,2^3]",
        7: "-s[3^2,2^5] - s[3^2,2^4,1^2] - s[4,3,2^4,1]",
        8: "-s[3,2^6,1]",
        9: "0",
    },
}

# D(a,b,k,r), keyed by (a, b, r) then k; only the rows listed there.
GOLDEN_DABKR: dict[tuple[int, int, int], dict[int, str]] = {
    (0, 1, 8): {
        0: "0",
        1: "s[3,2^5] + s[2^6,1]",
        2: "s[3^3,2^2] + s[3^2,2^3,1] + s[3,2^4,1^2] + s[4,3,2^3] + s[4,2^4,1]",
        3: "s[4,3^2,2,1] + s[4,3,2^2,1^2] + s[3^3,2,1^2] + s[3^2,2^2,1^3] + s[4^2,3,2] + s[4^2,2^2,1] + s[4,3^3] + s[3^4,1]",
        4: "s[4^2,3,1^2] - s[4,3^3] + s[4,3^2,1^3] - s[3^4,1] + s[3^3,1^4] + s[4^3,1]",
        5: "-s[4,3^2,2,1] - s[3^3,2^2] - s[3^3,2,1^2] - s[4^2,3,1^2] - s[4,3^2,1^3] - s[3^3,1^4]",
        6: "-s[4,3,2^2,1^2] - s[3^2,2^3,1] - s[3^2,2^2,1^3]",
        7: "-s[3,2^4,1^2]",
        8: "0",
    },
    (0, 1, 9): {
        0: "0",
        1: "s[3,2^6] + s[2^7,1]",
        2: "s[3^3,2^3] + s[3^2,2^4,1] + s[3,2^5,1^2] + s[4,3,2^4] + s[4,2^5,1]",
        3: "s[4,3^3,2] + s[3^4,2,1] + s[4^2,2^3,1] + s[4,3,2^3,1^2] + s[3^2,2^3,1^3] + s[4^2,3,2^2] + s[4,3^2,2^2,1] + s[3^3,2^2,1^2]",
        4: "s[4^3,3] + s[4^2,3^2,1] + s[4,3^3,1^2] + s[3^4,1^3] + s[4^3,2,1] + s[4^2,3,2,1^2] + s[4,3^2,2,1^3] + s[3^3,2,1^4]",
        5: "-s[4^2,3^2,1] - s[4,3^3,1^2] - s[3^4,1^3] - s[4,3^3,2] - s[3^4,2,1]",
        6: "-s[4,3^2,2^2,1] - s[3^3,2^3] - s[3^3,2^2,1^2] - s[4^2,3,2,1^2] - s[4,3^2,2,1^3] - s[3^3,2,1^4]",
        7: "-s[4,3,2^3,1^2] - s[3^2,2^4,1] - s[3^2,2^3,1^3]",
        8: "-s[3,2^5,1^2]",
    },
    (0, 2, 10): {
        1: "0",
        2: "s[3^2,2^5] + s[3,2^6,1] + s[2^7,1^2]",
        3: "s[3^4,2^2] + s[4,3^2,2^3] + s[4,2^5,1^2] + s[3^3,2^3,1] + s[3^2,2^4,1^2] + s[3,2^5,1^3] + s[4,3,2^4,1]",
        4: "s[4,3^4] + s[4^2,3^2,2] + s[4,3^3,2,1] + s[3^4,2,1^2] + s[4^2,2^3,1^2] + s[4,3,2^3,1^3] + s[3^2,2^3,1^4] + s[4^2,3,2^2,1] + s[4,3^2,2^2,1^2] + s[3^3,2^2,1^3]",
        5: "-s[3^5,1] - s[4,3^4] + s[4^3,3,1] + s[4^2,3^2,1^2] + s[4,3^3,1^3] + s[3^4,1^4] + s[4^3,2,1^2] + s[4^2,3,2,1^3] + s[4,3^2,2,1^4] + s[3^3,2,1^5]",
        6: "-s[4^2,3^2,1^2] - s[4,3^3,1^3] - s[3^4,1^4] - s[4,3^3,2,1] - s[3^4,2,1^2] - s[3^4,2^2]",
        7: "-s[4,3^2,2^2,1^2] - s[3^3,2^2,1^3] - s[3^3,2^3,1] - s[3^3,2,1^5] - s[4,3^2,2,1^4] - s[4^2,3,2,1^3]",
        8: "-s[4,3,2^3,1^3] - s[3^2,2^4,1^2] - s[3^2,2^3,1^4]",
        9: "-s[3,2^5,1^3]",
    },
}

# Printed rows that disagree with every independent computation, with the value
# the computation gives.  The golden data above is left exactly as printed.
KNOWN_ERRATA: dict[str, str] = {
    "D[9,5]": "-s[4^3,3,1] - s[4^2,3^2,2] - s[4^2,3^2,1^2] - s[4,3^3,2,1] - s[4,3^3,1^3] - s[3^4,2,1^2] - s[3^4,1^4]",
    "D(0,2,4,10)": GOLDEN_DABKR[(0, 2, 10)][4] + " + s[3^5,1]",
}


@dataclass(frozen=True)
class TableRow:
    label: str
    index: int
    value: SchurSum
    golden: SchurSum | None = None

    @property
    def matches(self) -> bool | None:
        return None if self.golden is None else self.value == self.golden

    def render(self) -> str:
        return f"{self.label}\t{self.value.render_short()}"


def d_family_rows(m: int) -> list[TableRow]:
    gold = GOLDEN_D_FAMILY.get(m, {})
    rows = []
    for i in range(m + 1):
        g = SchurSum.parse(gold[i]) if i in gold else None
        rows.append(TableRow(f"D[{m},{i}]", i, d_family(DFamilyIndex(m, i)), g))
    return rows


def dabkr_rows(a: int, b: int, r: int, ks=None) -> list[TableRow]:
    gold = GOLDEN_DABKR.get((a, b, r), {})
    if ks is None:
        ks = sorted(gold) if gold else range(r + 1)
    rows = []
    for k in ks:
        g = SchurSum.parse(gold[k]) if k in gold else None
        rows.append(TableRow(f"D({a},{b},{k},{r})", k, dabkr(DabkrIndex(a, b, k, r)), g))
    return rows


def golden_mismatches() -> list[str]:
    """Labels of every golden row the computation disagrees with."""
    bad = [row.label for m in GOLDEN_D_FAMILY for row in d_family_rows(m) if row.matches is False]
    bad += [row.label for key in GOLDEN_DABKR for row in dabkr_rows(*key) if row.matches is False]
    return bad


def _row(table: str, key, index: int) -> TableRow:
    rows = d_family_rows(key) if table == "d-family" else dabkr_rows(*key, ks=[index])
    return next(r for r in rows if r.index == index)


def check_table_row(table: str, key, index: int) -> CheckReport:
    """Computed row against the printed golden row."""
    row = _row(table, key, index)
    if row.golden is None:
        raise KeyError(f"no golden row {index} for {table} {key}")
    failures = [] if row.matches else [{"printed": row.golden, "computed": row.value, "difference": row.value - row.golden}]
    return report("tables", {"table": table, "row": row.label}, failures)


def check_errata(label: str) -> CheckReport:
    """The computed value of a known erratum row equals the recorded correction."""
    rows = {r.label: r for m in GOLDEN_D_FAMILY for r in d_family_rows(m)}
    rows.update({r.label: r for key in GOLDEN_DABKR for r in dabkr_rows(*key)})
    row = rows[label]
    want = SchurSum.parse(KNOWN_ERRATA[label])
    failures = [] if row.value == want else [{"computed": row.value, "recorded": want}]
    return report("tables-errata", {"row": label}, failures)
