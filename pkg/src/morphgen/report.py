"""Regression reports and figure rendering for the command-line front end.

The test command compares generated forms against an expected-forms corpus
and summarizes the outcome in a RunReport. With a report directory given it
also writes the row-by-row results as a TSV file and renders a per-lemma
pass/fail chart next to it; the paradigm command can likewise render a
table figure of the 18 cells.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

from .arabic import CASES, DEFS, NUMBERS


def _pyplot():
    # matplotlib loads lazily so the text-only commands never pay for it
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


@dataclass
class RunReport:
    """Outcome of one corpus run: passed + len(failures) == total."""

    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)  # (description, expected, actual)

    @property
    def ok(self):
        return not self.failures


@dataclass(frozen=True)
class RowResult:
    lemma: str
    number: str
    case: str
    definite: str
    expected: str
    actual: str

    @property
    def ok(self):
        return self.expected == self.actual

    @property
    def description(self):
        return f"{self.lemma} {self.number} {self.case} {self.definite}"


def summarize(rows):
    """Fold row results into a RunReport."""
    report = RunReport(total=len(rows))
    for row in rows:
        if row.ok:
            report.passed += 1
        else:
            report.failures.append((row.description, row.expected, row.actual))
    return report


def write_results_tsv(rows, path):
    """Row-by-row outcomes as a tab-separated file."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, delimiter="\t", lineterminator="\n")
        writer.writerow(["lemma", "number", "case", "def", "expected",
                         "actual", "status"])
        for row in rows:
            writer.writerow([row.lemma, row.number, row.case, row.definite,
                             row.expected, row.actual,
                             "ok" if row.ok else "FAIL"])


def save_run_figure(rows, path):
    """Stacked per-lemma pass/fail bars for a corpus run."""
    plt = _pyplot()
    lemmas = []
    passed = {}
    failed = {}
    for row in rows:
        if row.lemma not in passed:
            lemmas.append(row.lemma)
            passed[row.lemma] = 0
            failed[row.lemma] = 0
        if row.ok:
            passed[row.lemma] += 1
        else:
            failed[row.lemma] += 1
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(lemmas) + 2.0), 3.5))
    xs = range(len(lemmas))
    pass_counts = [passed[l] for l in lemmas]
    fail_counts = [failed[l] for l in lemmas]
    ax.bar(xs, pass_counts, color="#4c9f70", label="pass")
    ax.bar(xs, fail_counts, bottom=pass_counts, color="#c0392b", label="fail")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(lemmas, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("forms")
    total = len(rows)
    ok = sum(pass_counts)
    ax.set_title(f"expected-forms run: {ok}/{total} match")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_paradigm_figure(table, path):
    """Render a paradigm as a def/case by number table figure."""
    plt = _pyplot()
    col_labels = list(NUMBERS)
    row_labels = [f"{d} {c}" for d in DEFS for c in CASES]
    cell_text = [
        [table.cell(number, case, definite) for number in NUMBERS]
        for definite in DEFS for case in CASES
    ]
    fig, ax = plt.subplots(figsize=(7.0, 3.2))
    ax.axis("off")
    rendered = ax.table(cellText=cell_text, rowLabels=row_labels,
                        colLabels=col_labels, loc="center",
                        cellLoc="center")
    rendered.auto_set_font_size(False)
    rendered.set_fontsize(9)
    rendered.scale(1.0, 1.3)
    ax.set_title(table.lemma)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
