#!/usr/bin/env python3
"""Brute-force parameters for the fixture corpus, written as fixtures/manifest.json.

Independent of the C++ library: enumerates all 4^n Pauli strings.
"""
import itertools
import json
import pathlib
import sys

PAULI = {"I": 0, "X": 1, "Z": 2, "Y": 3}
GF4 = {"0": 0, "1": 1, "w": 2, "x": 3}
OMEGA = {0: 0, 1: 2, 2: 3, 3: 1}  # multiplication by w on x + 2z


def parse(path):
    rows = []
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].replace(" ", "").replace("\t", "")
        if not line:
            continue
        table = PAULI if set(line) <= set(PAULI) else GF4
        rows.append(tuple(table[c] for c in line))
    return rows


def add(a, b):
    return tuple(x ^ y for x, y in zip(a, b))


def commute(a, b):
    s = 0
    for u, v in zip(a, b):
        s ^= ((u & 1) & (v >> 1)) ^ ((u >> 1) & (v & 1))
    return s == 0


def weight(v):
    return sum(1 for s in v if s)


def span(rows, n):
    out = set()
    for mask in range(1 << len(rows)):
        v = (0,) * n
        for i, r in enumerate(rows):
            if mask >> i & 1:
                v = add(v, r)
        out.add(v)
    return out


def analyse(path):
    gens = parse(path)
    n = len(gens[0])
    C = span(gens, n)
    rank = len(gens)
    assert len(C) == 1 << rank, "dependent generators"
    if not all(commute(a, b) for a in gens for b in gens):
        return None
    dual = [v for v in itertools.product(range(4), repeat=n) if all(commute(v, g) for g in gens)]
    k = n - rank
    A = [0] * (n + 1)
    B = [0] * (n + 1)
    for v in C:
        A[weight(v)] += 1
    for v in dual:
        B[weight(v)] += 1
    if k == 0:
        d = min(weight(v) for v in C if any(v))
    else:
        d = min(weight(v) for v in dual if v not in C)
    degenerate = any(0 < weight(v) < d for v in C)
    linear = all(tuple(OMEGA[s] for s in v) in C for v in C)
    entry = {
        "file": path.name, "n": n, "k": k, "d": d, "degenerate": degenerate,
        "gf4_linear": linear, "A": A, "B": B,
    }
    if linear:
        entry["k0"], entry["k1"] = rank // 2, 0
    elif rank == 1:
        entry["k0"], entry["k1"] = 0, 1
    return entry


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    entries = [e for p in sorted(root.glob("*.code")) if (e := analyse(p))]
    (root / "manifest.json").write_text(json.dumps({"fixtures": entries}, indent=2) + "\n")


if __name__ == "__main__":
    main()
