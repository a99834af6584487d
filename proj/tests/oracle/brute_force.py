#!/usr/bin/env python3
"""Independent brute-force oracle for the restricted edge cover pebbling game.

Everything here is implemented from scratch, sharing no code with the C++
library: graph construction, edge labels, exhaustive enumeration of
restricted distributions, and a memoized full search of the move tree.
The expected values baked into the C++ test suite were produced by this
script before the library existed; `crosscheck` mode replays the same
computations against a built CLI binary.

Usage:
    brute_force.py selftest
    brute_force.py crosscheck --cli path/to/pebblekit
"""

import argparse
import re
import subprocess
import sys
import time


# ---------------------------------------------------------------------------
# graph families
# ---------------------------------------------------------------------------

FAMILIES = [
    "comb",
    "star",
    "subdivided-star",
    "bistar",
    "subdivided-bistar",
    "two-stars-delta",
    "degree-split-bistar",
    "star-of-stars",
]


def family(name, n):
    """Return (vertex_count, edges, labels) with edges sorted by (min, max).

    Vertex numbering matches the library layout so that distributions can be
    compared edge-for-edge.  Labels follow the published patterns: an edge is
    labeled 1 exactly when its endpoints receive same-parity values.
    """
    lab = {}

    def add(u, v, l):
        key = (min(u, v), max(u, v))
        assert key not in lab and u != v
        lab[key] = l

    if name == "comb":
        # a_r -> r-1, b_r -> n+r-1
        assert n >= 2
        vc = 2 * n
        for r in range(1, n):
            add(r - 1, r, 1)
        for r in range(1, n + 1):
            add(r - 1, n + r - 1, 0)
    elif name == "star":
        # a -> 0, a_r -> r
        vc = n + 1
        for r in range(1, n + 1):
            add(0, r, 1 if r % 2 == 0 else 0)
    elif name == "subdivided-star":
        # a -> 0, a_r -> r, b_r -> n+r
        vc = 2 * n + 1
        for r in range(1, n + 1):
            add(0, r, 1)
            add(r, n + r, 0)
    elif name == "bistar":
        # a -> 0, b -> 1, a_r -> 1+r, b_r -> n+1+r
        vc = 2 * n + 2
        add(0, 1, 0)
        for r in range(1, n + 1):
            add(0, 1 + r, 1 if r % 2 == 1 else 0)
            add(1, n + 1 + r, 1 if r % 2 == 1 else 0)
    elif name == "subdivided-bistar":
        # a -> 0, a' -> 1, b -> 2, a'_r -> 2+r, a_r -> n+2+r,
        # b'_r -> 2n+2+r, b_r -> 3n+2+r
        vc = 4 * n + 3
        add(0, 1, 1)
        add(1, 2, 0)
        for r in range(1, n + 1):
            add(0, 2 + r, 1)
            add(2 + r, n + 2 + r, 0)
            add(2, 2 * n + 2 + r, 1)
            add(2 * n + 2 + r, 3 * n + 2 + r, 0)
    elif name == "two-stars-delta":
        # a -> 0, b -> 1, x -> 2, a_r -> 2+r, b_r -> n+2+r
        vc = 2 * n + 3
        add(0, 1, 1)
        add(0, 2, 0)
        add(1, 2, 0)
        for r in range(1, n + 1):
            add(0, 2 + r, 0 if r % 2 == 1 else 1)
            add(1, n + 2 + r, 1 if r % 2 == 1 else 0)
    elif name == "degree-split-bistar":
        # u -> 0, v -> 1, u_r -> 1+r, v_r -> n+1+r, w1 -> 2n+2, w2 -> 2n+3
        vc = 2 * n + 4
        add(0, 1, 1)
        add(0, 2 * n + 3, 0)
        add(1, 2 * n + 3, 0)
        for r in range(1, n + 1):
            add(0, 1 + r, 1)
            add(1 + r, 2 * n + 2, 0)
            add(1, n + 1 + r, 0)
            add(n + 1 + r, 2 * n + 2, 1)
    elif name == "star-of-stars":
        # x -> 0, u -> 1, v -> 2, w -> 3, u_r -> 3+r, v_r -> n+3+r, w_r -> 2n+3+r
        vc = 3 * n + 4
        add(0, 1, 1)
        add(0, 2, 0)
        add(0, 3, 0)
        for r in range(1, n + 1):
            add(1, 3 + r, 1 if r % 2 == 1 else 0)
            add(2, n + 3 + r, 1 if r % 2 == 1 else 0)
            add(3, 2 * n + 3 + r, 0 if r % 2 == 1 else 1)
    else:
        raise ValueError(name)

    edges = sorted(lab)
    labels = [lab[e] for e in edges]
    e1 = sum(labels)
    e0 = len(labels) - e1
    assert abs(e0 - e1) <= 1, (name, n, e0, e1)
    return vc, edges, labels


def closed_form(name, n):
    if name == "comb":
        return 2 ** n - 2
    if name == "star":
        return n - 1 if n % 2 == 1 else n
    if name == "subdivided-star":
        return 4 * n - 2
    if name == "bistar":
        return 3 * n + 3 if n % 2 == 1 else 3 * n
    if name == "subdivided-bistar":
        return 20 * n + 6
    if name == "two-stars-delta":
        return 3 * n + 3 if n % 2 == 1 else 3 * n + 2
    if name == "degree-split-bistar":
        return 8 * n + 2
    if name == "star-of-stars":
        return 9 * n + 11 if n % 2 == 1 else 9 * n + 4
    raise ValueError(name)


# ---------------------------------------------------------------------------
# game
# ---------------------------------------------------------------------------

def solvable(edges, labels, counts, cover="resting", parity="initial"):
    """Full search of the move tree with a visited set; no pruning."""
    ecount = len(edges)
    adj = [
        sorted(
            j
            for j in range(ecount)
            if j != i and set(edges[i]) & set(edges[j])
        )
        for i in range(ecount)
    ]
    zeros = [i for i, l in enumerate(labels) if l == 0]
    targets = [i for i, l in enumerate(labels) if l == 1]
    tbit = {t: 1 << k for k, t in enumerate(targets)}
    full = (1 << len(targets)) - 1
    track = cover == "must-receive"
    seen = set()

    def goal(c, received):
        if any(c[z] for z in zeros):
            return False
        if any(c[t] < 1 for t in targets):
            return False
        if track and received != full:
            return False
        return True

    def rec(c, received):
        if goal(c, received):
            return True
        key = (c, received if track else 0)
        if key in seen:
            return False
        seen.add(key)
        for f in range(ecount):
            if c[f] < 2:
                continue
            for t in adj[f]:
                if parity == "always":
                    ok = True
                    for z in zeros:
                        cz = c[z] - (2 if z == f else 0) + (1 if z == t else 0)
                        if cz % 2:
                            ok = False
                            break
                    if not ok:
                        continue
                nc = list(c)
                nc[f] -= 2
                nc[t] += 1
                if rec(tuple(nc), received | tbit.get(t, 0)):
                    return True
        return False

    sys.setrecursionlimit(1000000)
    return rec(tuple(counts), 0)


def restricted_dists(ecount, labels, m):
    """All count vectors of total m, even on every label-0 edge; ascending."""
    zeros = {i for i, l in enumerate(labels) if l == 0}

    def rec(i, rem):
        if i == ecount - 1:
            if i in zeros and rem % 2:
                return
            yield (rem,)
            return
        step = 2 if i in zeros else 1
        for c in range(0, rem + 1, step):
            for rest in rec(i + 1, rem - c):
                yield (c,) + rest

    if ecount == 0:
        return
    yield from rec(0, m)


def size_verdict(edges, labels, m, cover, parity):
    """Return (all_solvable, first_unsolvable_or_None)."""
    for d in restricted_dists(len(edges), labels, m):
        if not solvable(edges, labels, d, cover, parity):
            return False, d
    return True, None


def psi(edges, labels, cap, cover="resting", parity="initial", quantifier="exact"):
    """Scan m = 1..cap; returns (value_or_None, status, witness_or_None)."""
    verdicts = []
    bads = {}
    for m in range(1, cap + 1):
        ok, bad = size_verdict(edges, labels, m, cover, parity)
        verdicts.append(ok)
        if not ok:
            bads[m] = bad
        if quantifier == "exact" and ok:
            return m, "determined", bads.get(m - 1)
    if quantifier == "exact":
        return None, "undetermined_at_cap", None
    # at-least: value = start of the trailing all-true run ending at cap
    if not verdicts[-1]:
        return None, "undetermined_at_cap", None
    v = cap
    while v > 1 and verdicts[v - 2]:
        v -= 1
    return v, "undetermined_at_cap", bads.get(v - 1)


def classic_cover(edges, cap):
    """Least m such that every distribution of size m covers every edge."""
    labels = [1] * len(edges)
    value, _, _ = psi(edges, labels, cap)
    return value


# ---------------------------------------------------------------------------
# frozen scenarios
# ---------------------------------------------------------------------------

# (family, n, witness edge endpoints, unsolvable size, solvable size)
WITNESS_SUITE = [
    ("star", 4, (0, 1), 2, 4),
    ("comb", 4, (3, 7), 12, 14),
    ("subdivided-star", 2, (2, 4), 4, 6),
    ("bistar", 2, (1, 5), 4, 6),
    ("bistar", 3, (1, 6), 10, 12),
    ("subdivided-bistar", 1, (5, 6), 24, 26),
    ("two-stars-delta", 1, (0, 3), 4, 6),
    ("degree-split-bistar", 1, (1, 5), 8, 10),
    ("star-of-stars", 1, (3, 6), 18, 20),
]

PSI_CASES = [
    ("star", 2, 8, 1),
    ("comb", 2, 8, 1),
    ("star", 4, 10, 3),
]


def concentrated(ecount, edge_index, amount):
    d = [0] * ecount
    d[edge_index] = amount
    return tuple(d)


def run_selftest():
    failures = 0

    def check(label, got, want):
        nonlocal failures
        ok = got == want
        if not ok:
            failures += 1
        print(f"{'ok  ' if ok else 'FAIL'} {label}: got {got}, want {want}")

    for name, n, cap, want in PSI_CASES:
        _, edges, labels = family(name, n)
        t0 = time.time()
        value, status, witness = psi(edges, labels, cap)
        check(f"psi {name} n={n}", value, want)
        if want > 1:
            assert witness is not None and sum(witness) == want - 1
            assert not solvable(edges, labels, witness)
        print(f"     witness at {want - 1}: {witness}  ({time.time() - t0:.1f}s)")

    # classic edge cover of short paths: P2 and P3 (path on 2 resp. 3 vertices)
    check("classic cover P2", classic_cover([(0, 1)], 4), 1)
    check("classic cover P3", classic_cover([(0, 1), (1, 2)], 6), 3)

    for name, n, (u, v), bad_m, good_m in WITNESS_SUITE:
        _, edges, labels = family(name, n)
        ei = edges.index((u, v))
        # concentrating on a label-0 edge is the expensive case: every pebble
        # must be moved off it, and only even piles are restricted-legal
        assert labels[ei] == 0 and bad_m % 2 == 0 and good_m % 2 == 0
        t0 = time.time()
        bad = concentrated(len(edges), ei, bad_m)
        good = concentrated(len(edges), ei, good_m)
        check(f"{name} n={n} edge {edges[ei]} size {bad_m} unsolvable",
              solvable(edges, labels, bad), False)
        check(f"{name} n={n} edge {edges[ei]} size {good_m} solvable",
              solvable(edges, labels, good), True)
        print(f"     ({time.time() - t0:.1f}s)")

    # a few uncommitted reference points, printed for the record
    for name, n, cap in [("star", 3, 6), ("star", 5, 8), ("bistar", 1, 9), ("comb", 3, 9)]:
        _, edges, labels = family(name, n)
        value, status, _ = psi(edges, labels, cap)
        print(f"info psi {name} n={n} cap={cap}: value={value} status={status}")

    _, edges, labels = family("star", 4)
    for cover in ("resting", "must-receive"):
        for parity in ("initial", "always"):
            for quant in ("exact", "at-least"):
                value, status, _ = psi(edges, labels, 8, cover, parity, quant)
                print(f"info star4 {cover}/{parity}/{quant} cap=8: "
                      f"value={value} status={status}")

    print("selftest:", "FAIL" if failures else "PASS")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# crosscheck against the CLI
# ---------------------------------------------------------------------------

def cli_psi(cli, name, n, cap):
    out = subprocess.run(
        [cli, "psi", "--family", name, "--n", str(n), "--cap", str(cap)],
        capture_output=True, text=True, check=True, cwd="/tmp",
    ).stdout
    m = re.search(r"^value:\s*(\d+)\s*$", out, re.M)
    return int(m.group(1)) if m else None


def run_crosscheck(cli):
    failures = 0
    for name, n, cap, _ in PSI_CASES:
        _, edges, labels = family(name, n)
        want, _, _ = psi(edges, labels, cap)
        got = cli_psi(cli, name, n, cap)
        ok = got == want
        if not ok:
            failures += 1
        print(f"{'ok  ' if ok else 'FAIL'} cli psi {name} n={n}: cli={got} oracle={want}")
    print("crosscheck:", "FAIL" if failures else "PASS")
    return 1 if failures else 0


def main():
    ap = argparse.ArgumentParser()
    sub = ap.add_subparsers(dest="mode", required=True)
    sub.add_parser("selftest")
    cc = sub.add_parser("crosscheck")
    cc.add_argument("--cli", required=True)
    args = ap.parse_args()
    if args.mode == "selftest":
        return run_selftest()
    return run_crosscheck(args.cli)


if __name__ == "__main__":
    sys.exit(main())
