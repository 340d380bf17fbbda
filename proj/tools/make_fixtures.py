#!/usr/bin/env python3
"""Writes the bundled b-files under core/data/bfiles.

Each sequence is rebuilt from its defining recurrence or counting argument,
not from the closed forms the library uses, so the fixtures can catch a
wrong generator.
"""

import argparse
import pathlib

TRIANGLE_ROWS = 21
LINEAR_TERMS = 101


def pascal_rows(count):
    row = [1]
    for _ in range(count):
        yield row
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]


def flatten(rows):
    return [v for row in rows for v in row]


def cube_triangle():
    # Interior entry: one plus six times the area k*(n-k) of a k by (n-k) grid.
    return flatten([[1 + 6 * k * (n - k) for k in range(n + 1)] for n in range(TRIANGLE_ROWS)])


def rascal():
    return flatten([[1 + k * (n - k) for k in range(n + 1)] for n in range(TRIANGLE_ROWS)])


def lazy_caterer():
    out, pieces = [], 1
    for n in range(LINEAR_TERMS):
        pieces += n
        out.append(pieces)
    return out


def hexagonal_coordination():
    return [1] + [6 * n for n in range(1, LINEAR_TERMS)]


def sequences():
    n = range(LINEAR_TERMS)
    return {
        "A000012": [1] * LINEAR_TERMS,
        "A000124": lazy_caterer(),
        "A007318": flatten(pascal_rows(TRIANGLE_ROWS)),
        "A008458": hexagonal_coordination(),
        "A028896": [6 * (i * (i + 1) // 2) for i in n],
        "A077028": rascal(),
        "A275709": [i * i * (2 * i + 3) for i in n],
        "A287326": cube_triangle(),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    default = pathlib.Path(__file__).resolve().parent.parent / "core" / "data" / "bfiles"
    parser.add_argument("--out", type=pathlib.Path, default=default)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for seq_id, terms in sequences().items():
        lines = [f"# {seq_id}: {len(terms)} terms, offset 0"]
        lines += [f"{i} {v}" for i, v in enumerate(terms)]
        (args.out / f"b{seq_id[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
