"""
Irreducible characters of the Hecke algebra of S_n, via the q-deformed
Young seminormal form, and the Frobenius character map into symmetric
functions.

Strategy: the seminormal generator matrices have rational entries with
denominators like 1 - q^rho, which vanish nowhere on integers q0 > 1.  We
therefore evaluate the whole representation at integer sample points
q0 = 2, 3, ... with exact rational arithmetic, take traces along one
reduced word, and recover chi^lambda(T_w) as an integer polynomial in q by
exact interpolation from l(w)+1 points.  Every spare sample point is
checked against the interpolated polynomial, and the generator matrices
are validated against the quadratic and braid relations at every sample
point when they are constructed; any mismatch is a hard error.

The classical Murnaghan-Nakayama rule appears only as the q := 1 oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .hecke import (HeckeElement, poly_add, poly_mul, poly_to_laurent,
                    row_store)
from .permutations import Perm, all_perms
from .qpoly import LaurentQ
from .symfunc import SymmetricFunction, partitions

__all__ = [
    "standard_tableaux", "SeminormalRep", "InterpolationError",
    "chi", "chi_element", "frobenius_ch", "frobenius_cprime",
    "character_table", "murnaghan_nakayama", "min_class_rep", "cycle_type",
    "MAX_FULL_TABLE_N",
]

# full character tables (all of S_n at once) are only sane up to here
MAX_FULL_TABLE_N = 6


class InterpolationError(RuntimeError):
    """Internal consistency failure in evaluate-then-interpolate."""


@lru_cache(maxsize=None)
def standard_tableaux(lam: tuple) -> tuple:
    """All standard Young tableaux of shape lam, in a fixed sorted order.

    A tableau is a tuple of row tuples.
    """
    n = sum(lam)
    if n == 0:
        return ((),)
    out = []

    def grow(tab, entry):
        if entry > n:
            out.append(tuple(tuple(r) for r in tab))
            return
        for r in range(len(lam)):
            cur = len(tab[r])
            if cur < lam[r] and (r == 0 or len(tab[r - 1]) > cur):
                tab[r].append(entry)
                grow(tab, entry + 1)
                tab[r].pop()

    grow([[] for _ in lam], 1)
    return tuple(sorted(out))


def _positions(tab) -> dict:
    pos = {}
    for r, row in enumerate(tab):
        for c, v in enumerate(row):
            pos[v] = (r, c)
    return pos


def _swap_entries(tab, a, b):
    return tuple(tuple(b if v == a else a if v == b else v for v in row)
                 for row in tab)


def _matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


class SeminormalRep:
    """Seminormal matrices for one shape, evaluated at one integer q0.

    Entries are scaled to a common integer denominator: the generator
    matrix for s_i is mats[i-1] / denom.  The quadratic relation
    (T - q0)(T + 1) = 0 and both braid relations are asserted on
    construction.
    """

    def __init__(self, lam: tuple, q0: int):
        if q0 <= 1:
            raise ValueError("sample points must be integers > 1")
        self.lam = lam
        self.q0 = q0
        self.n = sum(lam)
        tableaux = standard_tableaux(lam)
        self.dim = len(tableaux)
        index = {t: i for i, t in enumerate(tableaux)}
        frac_mats = []
        for i in range(1, self.n):
            M = [[Fraction(0)] * self.dim for _ in range(self.dim)]
            for b, t in enumerate(tableaux):
                pos = _positions(t)
                r1, c1 = pos[i]
                r2, c2 = pos[i + 1]
                rho = (c2 - r2) - (c1 - r1)
                M[b][b] = Fraction(q0 - 1, 1) / (1 - Fraction(q0) ** (-rho))
                if rho > 0 and r1 != r2 and c1 != c2:
                    other = index.get(_swap_entries(t, i, i + 1))
                    if other is not None:
                        y = Fraction(q0) ** rho
                        # v_t -> v_t' with coefficient 1; back with bb'
                        M[other][b] = Fraction(1)
                        M[b][other] = (q0 - y) * (1 - q0 * y) / (1 - y) ** 2
            frac_mats.append(M)
        denom = 1
        for M in frac_mats:
            for row in M:
                for v in row:
                    denom = lcm(denom, v.denominator)
        self.denom = denom
        self.mats = []
        for M in frac_mats:
            N = [[int(v * denom) for v in row] for row in M]
            self.mats.append(N)
        self._validate()

    def _validate(self):
        q0, D = self.q0, self.denom
        ident = [[int(a == b) for b in range(self.dim)] for a in range(self.dim)]
        for N in self.mats:
            sq = _matmul(N, N)
            expect = [[(q0 - 1) * D * N[a][b] + q0 * D * D * ident[a][b]
                       for b in range(self.dim)] for a in range(self.dim)]
            if sq != expect:
                raise AssertionError(
                    f"quadratic relation fails for {self.lam} at q={q0}")
        for i in range(len(self.mats)):
            for j in range(i + 1, len(self.mats)):
                A, B = self.mats[i], self.mats[j]
                if j == i + 1:
                    if _matmul(_matmul(A, B), A) != _matmul(_matmul(B, A), B):
                        raise AssertionError(
                            f"braid relation fails for {self.lam} at q={q0}")
                else:
                    if _matmul(A, B) != _matmul(B, A):
                        raise AssertionError(
                            f"commuting relation fails for {self.lam} at q={q0}")

    def trace_t(self, word) -> Fraction:
        """trace of T_{s_{word[0]}} ... T_{s_{word[-1]}} at q = q0."""
        if not word:
            return Fraction(self.dim)
        M = self.mats[word[0] - 1]
        for i in word[1:]:
            M = _matmul(M, self.mats[i - 1])
        tr = sum(M[a][a] for a in range(self.dim))
        return Fraction(tr, self.denom ** len(word))


@lru_cache(maxsize=None)
def _rep(lam: tuple, q0: int) -> SeminormalRep:
    return SeminormalRep(lam, q0)


def _interpolate(xs, ys) -> tuple:
    """Exact Lagrange interpolation; returns int tuple poly, ascending."""
    d = len(xs)
    coeffs = [Fraction(0)] * d
    for i in range(d):
        # basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(d):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for k in range(len(basis)):
            coeffs[k] += scale * basis[k]
    out = []
    for v in coeffs:
        if v.denominator != 1:
            raise InterpolationError("non-integer interpolated coefficient")
        out.append(int(v))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_eval(p: tuple, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _chi_poly_from_word(lam: tuple, word) -> tuple:
    """chi^lambda(T_w) as a tuple poly, via sampling and interpolation."""
    ell = len(word)
    points = list(range(2, ell + 4))  # l+1 for interpolation, one spare
    values = [_rep(lam, q0).trace_t(word) for q0 in points]
    poly = _interpolate(points[:ell + 1], values[:ell + 1])
    for x, y in zip(points[ell + 1:], values[ell + 1:]):
        if _poly_eval(poly, x) != y:
            raise InterpolationError(
                f"spare-point mismatch for chi^{lam} at q={x}")
    return poly


_chi_cache: dict = {}
_tables: dict = {}


def chi(lam, w: Perm) -> LaurentQ:
    """chi^lambda(T_w), an integer polynomial in q of degree <= l(w)."""
    lam = tuple(lam)
    if sum(lam) != len(w):
        raise ValueError("partition size does not match the rank")
    n = len(w)
    table = _tables.get(n)
    if table is not None:
        return poly_to_laurent(table[lam][w])
    key = (lam, w)
    poly = _chi_cache.get(key)
    if poly is None:
        poly = _chi_poly_from_word(lam, w.reduced_word())
        _chi_cache[key] = poly
    return poly_to_laurent(poly)


def chi_element(lam, a: HeckeElement) -> LaurentQ:
    """Linear extension of chi over the T-basis terms of a."""
    lam = tuple(lam)
    out = LaurentQ.zero()
    for w, c in a.terms.items():
        out = out + c * chi(lam, w)
    return out


def character_table(n: int, cache=None) -> dict:
    """chi^lambda(T_w) for every lambda |- n and every w in S_n.

    Returns {lambda: {w: tuple poly}}; built once per process and reused.
    Only sensible for n <= MAX_FULL_TABLE_N.
    """
    if n > MAX_FULL_TABLE_N:
        raise ValueError(
            f"full character table beyond n={MAX_FULL_TABLE_N} is not supported; "
            "use chi() on the elements you need")
    table = _tables.get(n)
    if table is not None:
        return table
    if cache is None:
        from .cache import active
        cache = active()
    if cache is not None:
        data = cache.load("chartable", f"chartable-n{n}")
        if data is not None and data.get("n") == n:
            table = {}
            for lam_s, row in data["values"].items():
                lam = tuple(int(t) for t in lam_s.split(",")) if lam_s else ()
                table[lam] = {Perm(tuple(map(int, ws.split("-")))): tuple(p)
                              for ws, p in row.items()}
            _tables[n] = table
            return table

    perms = sorted(all_perms(n), key=lambda w: (w.length(), w))
    words = {w: w.reduced_word() for w in perms}
    max_len = n * (n - 1) // 2
    points = list(range(2, max_len + 4))
    table = {}
    for lam in partitions(n):
        traces = {w: [] for w in perms}
        for q0 in points:
            rep = _rep(lam, q0)
            # incremental products along the weak order, one matmul per perm
            mats = {perms[0]: None}
            for w in perms[1:]:
                i = w.descents()[0]
                prev = mats[w.times_simple(i)]
                gen = rep.mats[i - 1]
                mats[w] = gen if prev is None else _matmul(prev, gen)
            for w in perms:
                M = mats[w]
                if M is None:
                    traces[w].append(Fraction(rep.dim))
                else:
                    tr = sum(M[a][a] for a in range(rep.dim))
                    traces[w].append(Fraction(tr, rep.denom ** w.length()))
        row = {}
        for w in perms:
            ell = len(words[w])
            poly = _interpolate(points[:ell + 1], traces[w][:ell + 1])
            for x, y in zip(points[ell + 1:], traces[w][ell + 1:]):
                if _poly_eval(poly, x) != y:
                    raise InterpolationError(
                        f"character table mismatch at {lam}, {w}, q={x}")
            row[w] = poly
        table[lam] = row
    _tables[n] = table
    if cache is not None:
        cache.store("chartable", f"chartable-n{n}", {
            "n": n,
            "values": {
                ",".join(map(str, lam)): {
                    "-".join(map(str, w)): list(p) for w, p in row.items()
                } for lam, row in table.items()
            },
        })
    return table


def frobenius_ch(a: HeckeElement) -> SymmetricFunction:
    """ch(a) = sum_lambda chi^lambda(a) s_lambda."""
    n = a.n
    coeffs = {}
    for lam in partitions(n):
        c = chi_element(lam, a)
        if c:
            coeffs[lam] = c
    return SymmetricFunction("s", n, coeffs)


@lru_cache(maxsize=None)
def frobenius_cprime(w: Perm) -> SymmetricFunction:
    """ch(q^(l(w)/2) C'_w), computed from the KL row and the character table.

    Equals frobenius_ch(cprime(w)) but works in tuple-polynomial space over
    the whole Bruhat interval, which is what the exhaustive S_6 checks need.
    """
    n = len(w)
    if n > MAX_FULL_TABLE_N:
        raise ValueError(
            "direct character evaluation beyond n=6 is out of reach; "
            "use the reduction drivers in heckelab.lab")
    table = character_table(n)
    row = row_store(n).row(w)
    coeffs = {}
    for lam in partitions(n):
        chi_row = table[lam]
        acc = ()
        for z, p in row.items():
            chi_z = chi_row[z]
            if not chi_z:
                continue
            if p == (1,):
                term = chi_z
            else:
                term = poly_mul(p, chi_z)
            acc = poly_add(acc, term)
        if acc:
            coeffs[lam] = poly_to_laurent(acc)
    return SymmetricFunction("s", n, coeffs)


# -- the q := 1 oracle --------------------------------------------------------

def cycle_type(w: Perm) -> tuple:
    """Cycle type of a permutation, as a partition."""
    n = len(w)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        k, cur = 0, start
        while not seen[cur]:
            seen[cur] = True
            cur = w(cur)
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def min_class_rep(mu) -> Perm:
    """A minimal-length representative of the class with cycle type mu:
    consecutive cycles on blocks, length sum(mu_i - 1)."""
    word = []
    start = 1
    for k in sorted(mu, reverse=True):
        block = list(range(start + 1, start + k)) + [start]
        word.extend(block)
        start += k
    return Perm(word)


@lru_cache(maxsize=None)
def murnaghan_nakayama(lam: tuple, mu: tuple) -> int:
    """Classical S_n character chi^lambda on the class of cycle type mu,
    by border-strip removal on beta numbers."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    k = mu[0]
    m = len(lam)
    betas = [lam[i] + (m - 1 - i) for i in range(m)]
    beta_set = set(betas)
    total = 0
    for i, b in enumerate(betas):
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new_betas = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(v - (m - 1 - j) for j, v in enumerate(new_betas))
        new_lam = tuple(v for v in new_lam if v > 0)
        total += (-1) ** height * murnaghan_nakayama(new_lam, mu[1:])
    return total
