"""The eta-expansion survey: expand every closure of a valid corpus, check
the expansions against the {0} domain, and archive the outcomes.

The question whether validity at the full domain survives expansion into the
{0} domain is open; nothing here asserts an answer. The report records, per
closure, whether the expansion changed anything and how the {0} check came
out, as a CSV plus a small summary figure.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .checker import check_valid  # noqa: E402
from .corpus import valid_closures  # noqa: E402
from .domains import fin_set  # noqa: E402
from .eta import eta_expand_closure  # noqa: E402
from .surface import print_closure  # noqa: E402
from .terms import Closure, SortPolicy, SUCCESSOR, closure_size  # noqa: E402


@dataclass(frozen=True)
class EtaRow:
    index: int
    size: int
    closure: str
    expanded: str
    changed: bool
    original_zero_valid: bool
    expanded_zero_valid: bool
    expanded_tag: str


def eta_survey(
    seed: int = 20260814,
    count: int = 500,
    policy: SortPolicy = SUCCESSOR,
) -> list:
    zero = fin_set([0])
    rows = []
    for index, c in enumerate(valid_closures(seed, count, policy=policy)):
        expanded = eta_expand_closure(c, policy)
        before = check_valid(zero, c.env, c.subject, policy)
        after = check_valid(zero, expanded.env, expanded.subject, policy)
        rows.append(
            EtaRow(
                index=index,
                size=closure_size(c),
                closure=print_closure(c),
                expanded=print_closure(expanded),
                changed=expanded != c,
                original_zero_valid=before.is_valid,
                expanded_zero_valid=after.is_valid,
                expanded_tag="" if after.is_valid else (after.tag or ""),
            )
        )
    return rows


def write_report(
    out_dir: str,
    seed: int = 20260814,
    count: int = 500,
    policy: SortPolicy = SUCCESSOR,
):
    """Write eta_conjecture.csv and eta_conjecture.png under out_dir and
    return their paths."""
    rows = eta_survey(seed, count, policy)
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "eta_conjecture.csv")
    png_path = os.path.join(out_dir, "eta_conjecture.png")

    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            [
                "index",
                "size",
                "closure",
                "expanded",
                "changed",
                "original_zero_valid",
                "expanded_zero_valid",
                "expanded_tag",
            ]
        )
        for row in rows:
            writer.writerow(
                [
                    row.index,
                    row.size,
                    row.closure,
                    row.expanded,
                    row.changed,
                    row.original_zero_valid,
                    row.expanded_zero_valid,
                    row.expanded_tag,
                ]
            )

    groups = {
        (False, False): 0,
        (False, True): 0,
        (True, False): 0,
        (True, True): 0,
    }
    for row in rows:
        groups[(row.changed, row.expanded_zero_valid)] += 1

    fig, ax = plt.subplots(figsize=(7, 4))
    labels = ["unchanged", "expanded"]
    valid_counts = [groups[(False, True)], groups[(True, True)]]
    invalid_counts = [groups[(False, False)], groups[(True, False)]]
    xs = range(len(labels))
    ax.bar(xs, valid_counts, label="{0}-valid", color="#4c72b0")
    ax.bar(
        xs,
        invalid_counts,
        bottom=valid_counts,
        label="{0}-invalid",
        color="#c44e52",
    )
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels)
    ax.set_ylabel("closures")
    ax.set_title(
        f"{{0}}-validity after one eta pass ({len(rows)} Omega-valid closures)"
    )
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)

    return csv_path, png_path
