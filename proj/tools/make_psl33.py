#!/usr/bin/env python3
"""Writes PSL(3,3) acting on the 13 points of the projective plane over GF(3)."""

import itertools
import json
import sys

P = 3


def normalize(v):
    for x in v:
        if x % P:
            inv = pow(x, -1, P)
            return tuple(y * inv % P for y in v)
    raise ValueError("zero vector")


def points():
    seen = []
    for v in itertools.product(range(P), repeat=3):
        if any(v):
            n = normalize(v)
            if n not in seen:
                seen.append(n)
    return seen


def act(v, m):
    return tuple(sum(v[i] * m[i][j] for i in range(3)) % P for j in range(3))


def to_cycles(images):
    seen, out = set(), []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cycle, x = [], start
        while x not in seen:
            seen.add(x)
            cycle.append(x + 1)
            x = images[x]
        out.append("(" + ",".join(map(str, cycle)) + ")")
    return "".join(out) or "()"


def main():
    pts = points()
    index = {p: i for i, p in enumerate(pts)}
    matrices = {
        "I+E12": [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        "I+E21": [[1, 0, 0], [1, 1, 0], [0, 0, 1]],
        "cyclic": [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    }
    gens = []
    for m in matrices.values():
        gens.append(to_cycles([index[normalize(act(p, m))] for p in pts]))
    doc = {
        "label": "PSL(3,3)",
        "degree": len(pts),
        "generators": gens,
        "provenance": "SL(3,3) = PSL(3,3) generated by the transvections I+E12, I+E21 and the "
                      "cyclic permutation matrix, acting on row vectors of PG(2,3); points "
                      "numbered in lexicographic order of their normalized coordinates: "
                      + " ".join("".join(map(str, p)) for p in pts),
        "order": "5616",
    }
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
