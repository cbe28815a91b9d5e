#!/usr/bin/env python3
"""Extracts the explicit arrays from the paper text into fixture files.

Development helper: reads the LaTeX rows of each displayed array and writes
them in the plain triple-array text format (keeping the 1-based symbols of
the source; the loader shifts them).
"""
import re
import sys

SRC = "paper.md"
OUT = "data/figures"


def grab(lines, start, count, ncols, has_label=True):
    rows = []
    i = start
    while len(rows) < count:
        line = lines[i]
        i += 1
        nums = re.findall(r"\$\s*(\d+)\s*\$", line)
        if has_label and line.strip().startswith("{\\scriptsize $R"):
            nums = nums[1:] if len(nums) == ncols + 1 else nums
        if len(nums) != ncols:
            continue
        rows.append([int(x) for x in nums])
    return rows, i


def write_ta(path, rows, v):
    r = len(rows)
    c = len(rows[0])
    with open(path, "w") as f:
        f.write(f"{r} {c} {v}\n")
        for row in rows:
            f.write(" ".join(str(x) for x in row) + "\n")
    flat = [x for row in rows for x in row]
    assert max(flat) == v and min(flat) == 1, path


def main():
    with open(SRC) as f:
        lines = f.readlines()

    def find(pattern, frm=0):
        for i in range(frm, len(lines)):
            if pattern in lines[i]:
                return i
        raise SystemExit(f"pattern not found: {pattern}")

    # figure 1: 4x9 array
    i = find("fig:4-9-12-TA") - 200
    i = find("{\\scriptsize $R_{ 1}$}", i)
    rows, _ = grab(lines, i, 4, 9)
    write_ta(f"{OUT}/fig1_ta_4x9.txt", rows, 12)

    # figure 3: 7x15 array
    i = find("fig:MPWY-71535") - 200
    i = find("{\\scriptsize $R_{ 1}$}", i)
    rows, _ = grab(lines, i, 7, 15)
    write_ta(f"{OUT}/fig3_ta_7x15.txt", rows, 35)

    # figure with the two 7x8 arrays
    i = find("fig:ex7-8-14") - 200
    i = find("{\\scriptsize $R_{ 1}$}", i)
    rows, nxt = grab(lines, i, 7, 8)
    write_ta(f"{OUT}/fig6_top_ta_7x8.txt", rows, 14)
    i = find("{\\scriptsize $R_{ 1}$}", nxt)
    rows, _ = grab(lines, i, 7, 8)
    write_ta(f"{OUT}/fig6_bottom_ta_7x8.txt", rows, 14)

    # figure with the two 5x6 arrays
    i = find("fig:2ex-5-6-10") - 100
    i = find("{\\scriptsize $R_{ 1}$}", i)
    rows, nxt = grab(lines, i, 5, 6)
    write_ta(f"{OUT}/fig8_top_ta_5x6.txt", rows, 10)
    i = find("{\\scriptsize $R_{ 1}$}", nxt)
    rows, _ = grab(lines, i, 5, 6)
    write_ta(f"{OUT}/fig8_bottom_ta_5x6.txt", rows, 10)

    # appendix: three 7x15 arrays (borderless rows, no R labels)
    i = find("fig:PG-71535") - 60
    names = ["figB1_top_ta_7x15.txt", "figB1_middle_ta_7x15.txt", "figB1_bottom_ta_7x15.txt"]
    for name in names:
        rows, i = grab(lines, i, 7, 15, has_label=False)
        write_ta(f"{OUT}/{name}", rows, 35)

    # appendix: the 21x15 array
    i = find("fig:ex21-15-63") - 200
    i = find("{\\scriptsize $R_{ 1}$}", i)
    rows, _ = grab(lines, i, 21, 15)
    write_ta(f"{OUT}/figC1_ta_21x15.txt", rows, 63)

    print("figure fixtures written")


if __name__ == "__main__":
    sys.exit(main())
