#!/usr/bin/env python3
"""Writes lattices.json (amalgams A *_C B with cyclic C, tagged with q, p and
the expected admissibility) and the standalone lattice files used by the CLI
golden tests. Reads groups.json."""

import json
import pathlib

HERE = pathlib.Path(__file__).parent
GROUPS = {g["name"]: g["table"] for g in json.loads((HERE / "groups.json").read_text())}


def order(t, a):
    k, x = 1, a
    while x != 0:
        x = t[x][a]
        k += 1
    return k


def cyclic_image(t, n):
    """Images of 0..n-1 under c^k -> g^k for the first element g of order n."""
    if n == 1:
        return [0]
    g = next(a for a in range(len(t)) if order(t, a) == n)
    img, x = [0], 0
    for _ in range(n - 1):
        x = t[x][g]
        img.append(x)
    return img


def lattice(a, b, c, extra=None):
    ta, tb = GROUPS[a], GROUPS[b]
    d = {
        "vertex_groups": [{"order": len(ta), "table": ta}, {"order": len(tb), "table": tb}],
        "edge_group": {"order": c, "into_A": cyclic_image(ta, c), "into_B": cyclic_image(tb, c)},
    }
    if extra:
        d.update(extra)
    return d


# (A, B, |C|, q, p); admissibility expected iff p divides neither |A| nor |B|
CASES = [
    ("C3", "C3", 1, 2, 2),
    ("C6", "C6", 2, 2, 2),
    ("D6", "D6", 2, 2, 2),
    ("C9", "C3xC3", 3, 2, 2),
    ("C4", "C4", 1, 3, 3),
    ("C8", "Q8", 2, 3, 3),
    ("C2xC4", "C8", 2, 3, 3),
    ("C12", "C12", 3, 3, 3),
    ("A4", "C12", 3, 3, 3),
    ("Dic12", "C12", 3, 3, 3),
    ("C5", "C5", 1, 4, 2),
    ("C10", "D10", 2, 4, 2),
    ("C15", "C15", 3, 4, 2),
    ("C20", "C20", 4, 4, 2),
    ("C6", "C6", 1, 5, 5),
    ("D12", "C12", 2, 5, 5),
    ("C18", "C3xC6", 3, 5, 5),
    ("C24", "SL(2,3)", 4, 5, 5),
    ("C8", "C8", 1, 7, 7),
    ("D16", "Q16", 2, 7, 7),
]

entries = []
for a, b, c, q, p in CASES:
    la, lb = len(GROUPS[a]), len(GROUPS[b])
    assert la == (q + 1) * c and lb == (q + 1) * c, (a, b, c, q)
    entries.append({
        "name": f"{a}*{b} over C{c}, q={q}",
        "q": q,
        "p": p,
        "admissible": la % p != 0 and lb % p != 0,
        "lattice": lattice(a, b, c),
    })
(HERE / "lattices.json").write_text(json.dumps(entries, separators=(",", ":")) + "\n")

# Vertex groups realized in the affine group over F_2 (A = <x_a1(1) n_1>, B = <x_a2(1) n_2>).
realization_c3 = {"realization": {"gens_A": ["x(1,0;1) n(1)"], "gens_B": ["x(0,1;1) n(2)"]}}
realization_s3 = {"realization": {"gens_A": ["x(1,0;1)", "n(1)"], "gens_B": ["x(0,1;1)", "n(2)"]}}
files = {
    "lattice_c3_q2.json": lattice("C3", "C3", 1, realization_c3),
    "lattice_s3_q2.json": lattice("D6", "D6", 2, realization_s3),
    # declares |A| = 6 for a realization whose vertex group has order 3
    "lattice_mismatch_q2.json": lattice("C6", "C3", 1, realization_c3),
}
for name, d in files.items():
    (HERE / name).write_text(json.dumps(d, indent=1) + "\n")
print(len(entries), "lattices,", len(files), "files")
