"""
Indifference graphs of Hessenberg functions and their chromatic
quasisymmetric functions, collapsed to symmetric functions with q
coefficients.

csf_q(G) = sum over proper colorings kappa of q^(asc(kappa)) x_kappa, where
asc counts edges {i, j} with i < j and kappa(i) < kappa(j), with the natural
vertex order 1 < 2 < ... < n.  For an indifference graph this is symmetric,
so the monomial-basis coefficient of m_lambda is the weight of the proper
colorings whose color classes, in increasing color order, have sizes
exactly lambda_1, lambda_2, ...

The production path enumerates ordered independent-set partitions with a
subset-mask dynamic program (the class of color c only interacts with the
still-uncolored vertices); the oracle enumerates all n^n colorings and is
deliberately independent of that machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .hecke import poly_add, poly_shift, poly_to_laurent
from .permutations import (Perm, codominant_of_hessenberg, enumerate_hessenberg,
                           hessenberg_to_str, is_hessenberg, parse_hessenberg)
from .qpoly import LaurentQ
from .symfunc import SymmetricFunction, partitions

__all__ = [
    "IndifferenceGraph", "indifference_graph", "edge_count",
    "csf", "csf_oracle", "csf_batch", "csf_index", "csf_key",
]


@dataclass(frozen=True)
class IndifferenceGraph:
    n: int
    edges: frozenset

    @classmethod
    def from_hessenberg(cls, m) -> "IndifferenceGraph":
        m = tuple(m)
        if not is_hessenberg(m):
            raise ValueError(f"not a Hessenberg function: {m}")
        n = len(m)
        edges = frozenset((i, j) for i in range(1, n + 1)
                          for j in range(i + 1, m[i - 1] + 1))
        return cls(n, edges)


def indifference_graph(m) -> IndifferenceGraph:
    return IndifferenceGraph.from_hessenberg(m)


def edge_count(m) -> int:
    """|E(G_m)| = sum(m(i) - i), which equals l(w_m)."""
    return sum(v - i for i, v in enumerate(m, start=1))


def _upward_masks(m) -> list[int]:
    """up[v] = bitmask of neighbors of v+1 above it (0-based vertex bits)."""
    n = len(m)
    up = []
    for i in range(1, n + 1):
        mask = 0
        for j in range(i + 1, m[i - 1] + 1):
            mask |= 1 << (j - 1)
        up.append(mask)
    return up


def _independent_by_size(up: list[int], n: int) -> dict[int, list[int]]:
    """All independent vertex subsets, as masks grouped by size."""
    by_size: dict[int, list[int]] = {k: [] for k in range(1, n + 1)}

    def extend(mask, size, start, forbidden):
        if size:
            by_size[size].append(mask)
        for v in range(start, n):
            bit = 1 << v
            if forbidden & bit:
                continue
            extend(mask | bit, size + 1, v + 1, forbidden | up[v])

    extend(0, 0, 0, 0)
    return by_size


def _dp_coefficient(lam, up, indep_by_size, full) -> tuple:
    """q-weight of proper colorings with class sizes exactly lam."""
    memo = {0: (1,)}
    parts = tuple(lam)

    def solve(remaining: int, j: int) -> tuple:
        got = memo.get(remaining)
        if got is not None:
            return got
        acc = ()
        for block in indep_by_size[parts[j]]:
            if block & remaining == block:
                rest = remaining & ~block
                sub = solve(rest, j + 1)
                if sub:
                    weight = 0
                    b = block
                    while b:
                        v = (b & -b).bit_length() - 1
                        weight += (up[v] & rest).bit_count()
                        b &= b - 1
                    acc = poly_add(acc, poly_shift(sub, weight))
        memo[remaining] = acc
        return acc

    return solve(full, 0)


def _csf_coeffs(m) -> dict[tuple, tuple]:
    """Monomial coefficients of csf_q(G_m) as tuple polynomials."""
    m = tuple(m)
    n = len(m)
    up = _upward_masks(m)
    indep = _independent_by_size(up, n)
    full = (1 << n) - 1
    out = {}
    for lam in partitions(n):
        poly = _dp_coefficient(lam, up, indep, full)
        if poly:
            out[lam] = poly
    return out


def csf(m) -> SymmetricFunction:
    """csf_q(G_m) in the monomial basis."""
    m = tuple(m)
    if not is_hessenberg(m):
        raise ValueError(f"not a Hessenberg function: {m}")
    coeffs = {lam: poly_to_laurent(p) for lam, p in _csf_coeffs(m).items()}
    return SymmetricFunction("m", len(m), coeffs)


def csf_oracle(m) -> SymmetricFunction:
    """Brute-force csf over all n^n colorings; the independent cross-check.

    Only the colorings whose color-count vector is (lambda_1, ..., lambda_k,
    0, ..., 0) contribute to m_lambda, which is enough by symmetry.
    """
    m = tuple(m)
    n = len(m)
    if n > 6:
        raise ValueError("the coloring oracle is capped at n = 6")
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, m[i - 1] + 1)]
    coeffs: dict[tuple, tuple] = {}
    for kappa in product(range(1, n + 1), repeat=n):
        if any(kappa[i - 1] == kappa[j - 1] for i, j in edges):
            continue
        counts = [0] * n
        for c in kappa:
            counts[c - 1] += 1
        k = n
        while k and counts[k - 1] == 0:
            k -= 1
        lam = tuple(counts[:k])
        if any(lam[t] < lam[t + 1] for t in range(k - 1)) or 0 in lam:
            continue
        asc = sum(1 for i, j in edges if kappa[i - 1] < kappa[j - 1])
        prev = coeffs.get(lam, ())
        coeffs[lam] = poly_add(prev, poly_shift((1,), asc))
    return SymmetricFunction(
        "m", n, {lam: poly_to_laurent(p) for lam, p in coeffs.items()})


# -- batch computation over all Hessenberg functions of a rank ---------------

_batches: dict[int, dict] = {}


def clear_batch_cache(n: int | None = None) -> None:
    """Drop in-memory batches (all ranks, or one); disk files are kept."""
    if n is None:
        _batches.clear()
    else:
        _batches.pop(n, None)


def _batch_worker(m):
    return m, _csf_coeffs(m)


def csf_batch(n: int, cache=None, threads: int = 1) -> dict:
    """{m: monomial tuple-poly coefficients} for every Hessenberg function.

    Deterministic (lexicographic) order; cached per rank; optionally
    computed in a process pool.
    """
    got = _batches.get(n)
    if got is not None:
        return got
    if cache is None:
        from .cache import active
        cache = active()
    if cache is not None:
        data = cache.load("csf", f"csf-n{n}")
        if data is not None and data.get("n") == n:
            batch = {}
            for entry in data["entries"]:
                m = parse_hessenberg(entry["m"])
                batch[m] = {
                    tuple(int(t) for t in lam.split(",")): tuple(p)
                    for lam, p in entry["csf"].items()
                }
            _batches[n] = batch
            return batch

    ms = enumerate_hessenberg(n)
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = dict(pool.map(_batch_worker, ms, chunksize=16))
        batch = {m: results[m] for m in ms}
    else:
        batch = {m: _csf_coeffs(m) for m in ms}
    _batches[n] = batch
    if cache is not None:
        cache.store("csf", f"csf-n{n}", {
            "n": n,
            "entries": [
                {
                    "m": hessenberg_to_str(m),
                    "csf": {",".join(map(str, lam)): list(p)
                            for lam, p in sorted(coeffs.items(), reverse=True)},
                }
                for m, coeffs in batch.items()
            ],
        })
    return batch


def csf_key(coeffs: dict) -> tuple:
    """Canonical hashable key for monomial tuple-poly coefficient data."""
    return tuple(sorted((lam, p) for lam, p in coeffs.items() if p))


def csf_index(n: int, cache=None, threads: int = 1) -> dict:
    """Reverse lookup: canonical coefficient key -> list of Hessenberg
    functions with that csf.

    Distinct functions can share a csf (reversing the vertex order of an
    indifference graph changes m but, by palindromicity, not csf_q), so the
    values are lists, in lexicographic order.
    """
    index: dict[tuple, list] = {}
    for m, coeffs in csf_batch(n, cache=cache, threads=threads).items():
        index.setdefault(csf_key(coeffs), []).append(m)
    return index
