"""
Permutations of [n] = {1, ..., n} in one-line notation, with Bruhat order,
pattern containment, coessential sets, and the dictionary between smooth
permutations, Hessenberg functions and codominant permutations.

Conventions, fixed once for the whole package:

* ``Perm`` is a tuple of the values (w(1), ..., w(n)); ``w(i)`` is 1-based.
* Products act on positions: ``(u * v)(i) = u(v(i))``.  Consequently
  ``w * s_i`` swaps the *positions* i, i+1 of w, while ``s_i * w`` swaps
  the *values* i, i+1.

>>> w = Perm((2, 4, 5, 3, 6, 1))
>>> w.length()
7
>>> w.is_codominant()
True
>>> hessenberg_of_smooth(w)
(2, 4, 5, 5, 6, 6)
"""

from __future__ import annotations

from itertools import combinations

__all__ = [
    "Perm", "NotSmoothError",
    "bruhat_leq", "coessential_set", "hessenberg_of_smooth",
    "codominant_of_hessenberg", "transpositions_below",
    "is_hessenberg", "enumerate_hessenberg", "catalan",
    "all_perms", "simple_reflection",
    "parse_perm", "perm_to_str", "parse_hessenberg", "hessenberg_to_str",
]


class NotSmoothError(ValueError):
    """Raised when a smooth permutation was required."""


class Perm(tuple):
    """A permutation of [n] in one-line notation, as a tuple of values."""

    def __new__(cls, word):
        word = tuple(word)
        n = len(word)
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {word}")
        return super().__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        """w(i), 1-based."""
        return self[i - 1]

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    def __mul__(self, other: "Perm") -> "Perm":
        """(self * other)(i) = self(other(i))."""
        if len(self) != len(other):
            raise ValueError("size mismatch")
        return Perm(self[v - 1] for v in other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, v in enumerate(self):
            inv[v - 1] = i + 1
        return Perm(inv)

    def length(self) -> int:
        """Number of inversion pairs i < j with w(i) > w(j)."""
        count = 0
        for i, v in enumerate(self):
            for u in self[i + 1:]:
                if u < v:
                    count += 1
        return count

    def rank(self, i: int, j: int) -> int:
        """r_{i,j}(w) = #{k <= i : w(k) <= j}."""
        if not (1 <= i <= len(self) and 1 <= j <= len(self)):
            raise ValueError(f"indices out of range: ({i}, {j})")
        return sum(1 for v in self[:i] if v <= j)

    def times_simple(self, i: int) -> "Perm":
        """w * s_i: swap positions i, i+1 (1-based i < n)."""
        w = list(self)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Perm(w)

    def times_transposition(self, i: int, j: int) -> "Perm":
        """w * (i j): swap positions i and j."""
        w = list(self)
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return Perm(w)

    def descents(self) -> list[int]:
        """Positions i with w(i) > w(i+1)."""
        return [i + 1 for i in range(len(self) - 1) if self[i] > self[i + 1]]

    def reduced_word(self) -> tuple[int, ...]:
        """One canonical reduced word (s_{i_1} ... s_{i_k} = w).

        Built by repeatedly removing the leftmost descent on the right.
        """
        w = list(self)
        rev = []
        while True:
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    rev.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(rev))

    def lower_covers(self) -> set["Perm"]:
        """All z = w * t with length(z) = length(w) - 1."""
        target = self.length() - 1
        out = set()
        n = len(self)
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                if self[i - 1] > self[j - 1]:
                    z = self.times_transposition(i, j)
                    if z.length() == target:
                        out.add(z)
        return out

    # -- patterns ---------------------------------------------------------

    def contains_pattern(self, pattern) -> bool:
        """True iff some subsequence of w is order-isomorphic to pattern."""
        p = tuple(pattern)
        k, n = len(p), len(self)
        if k > n:
            return False
        # DFS over increasing positions; prune on partial order-isomorphism
        order = sorted(range(k), key=lambda t: p[t])
        rank_of = {t: r for r, t in enumerate(order)}

        def extend(chosen: list[int], start: int) -> bool:
            t = len(chosen)
            if t == k:
                return True
            for pos in range(start, n - (k - t) + 1):
                v = self[pos]
                ok = True
                for t2, pos2 in enumerate(chosen):
                    if (rank_of[t2] < rank_of[t]) != (self[pos2] < v):
                        ok = False
                        break
                if ok and extend(chosen + [pos], pos + 1):
                    return True
            return False

        return extend([], 0)

    def is_smooth(self) -> bool:
        """Avoids 3412 and 4231."""
        return not (self.contains_pattern((3, 4, 1, 2))
                    or self.contains_pattern((4, 2, 3, 1)))

    def is_codominant(self) -> bool:
        """Avoids 312."""
        return not self.contains_pattern((3, 1, 2))

    def classify(self) -> dict:
        return {"smooth": self.is_smooth(), "codominant": self.is_codominant()}

    def __repr__(self):
        return f"Perm({perm_to_str(self)!r})"


def simple_reflection(i: int, n: int) -> Perm:
    """s_i in S_n (swaps values/positions i, i+1 of the identity)."""
    return Perm.identity(n).times_simple(i)


def bruhat_leq(z: Perm, w: Perm) -> bool:
    """z <= w in Bruhat order, by the rank criterion.

    z <= w iff r_{i,j}(z) >= r_{i,j}(w) for all i, j.  The identity has the
    maximal rank matrix, the longest element the minimal one.
    """
    if len(z) != len(w):
        raise ValueError("size mismatch")
    n = len(z)
    # incremental row-wise rank computation, O(n^2)
    rz = [0] * (n + 1)
    rw = [0] * (n + 1)
    for i in range(n):
        for j in range(z[i], n + 1):
            rz[j] += 1
        for j in range(w[i], n + 1):
            rw[j] += 1
        for j in range(1, n + 1):
            if rz[j] < rw[j]:
                return False
    return True


def coessential_set(w: Perm) -> frozenset[tuple[int, int]]:
    """The pairs (i, j) with w(i) <= j < w(i+1) and w^-1(j) <= i < w^-1(j+1).

    Out-of-range values w(n+1) and w^-1(n+1) are treated as +infinity, the
    boundary convention that reproduces the dot-diagram construction (e.g.
    Coess(245361) = {(1,2), (2,4), (4,5), (6,6)}).
    """
    n = len(w)
    winv = w.inverse()

    def wv(i):
        return w[i - 1] if i <= n else n + 1

    def wi(j):
        return winv[j - 1] if j <= n else n + 1

    out = set()
    for i in range(1, n + 1):
        for j in range(w[i - 1], min(wv(i + 1) - 1, n) + 1):
            if wi(j) <= i < wi(j + 1):
                out.add((i, j))
    return frozenset(out)


def hessenberg_of_smooth(w: Perm) -> tuple[int, ...]:
    """The Hessenberg function m_w of a smooth permutation.

    From the coessential set: I is the set of indices i such that (i, j) or
    (j, i) lies in Coess(w) for some j >= i; m(i) is that j for i in I, and
    the remaining values are filled right to left by m(i) = m(i+1), with
    base m(n) = n.

    Raises NotSmoothError when w contains 3412 or 4231.
    """
    if not w.is_smooth():
        raise NotSmoothError(f"{perm_to_str(w)} contains 3412 or 4231")
    n = len(w)
    coess = coessential_set(w)
    pinned = {}
    for (i, j) in coess:
        if j >= i:
            if i in pinned and pinned[i] != j:
                raise AssertionError(
                    f"ambiguous coessential data at i={i} for {perm_to_str(w)}")
            pinned[i] = j
        if i > j:
            # (j', i') = (i, j) read as (j, i) with the roles swapped
            if j in pinned and pinned[j] != i:
                raise AssertionError(
                    f"ambiguous coessential data at i={j} for {perm_to_str(w)}")
            pinned[j] = i
    m = [0] * (n + 1)
    m[n] = pinned.get(n, n)
    for i in range(n - 1, 0, -1):
        m[i] = pinned.get(i, m[i + 1])
    m = tuple(m[1:])
    if not is_hessenberg(m):
        raise AssertionError(f"m_w is not a Hessenberg function: {m}")
    return m


def codominant_of_hessenberg(m) -> Perm:
    """Lexicographically greatest permutation with w(i) <= m(i) for all i.

    Greedy: at each position take the largest unused value <= m(i).  The
    result avoids 312.
    """
    m = tuple(m)
    if not is_hessenberg(m):
        raise ValueError(f"not a Hessenberg function: {m}")
    used = set()
    word = []
    for i, bound in enumerate(m, start=1):
        v = bound
        while v in used:
            v -= 1
        # m(i) >= i guarantees an unused value exists
        used.add(v)
        word.append(v)
    return Perm(word)


def transpositions_below(w: Perm) -> frozenset[tuple[int, int]]:
    """All transpositions t = (i j), i < j, with t <= w in Bruhat order.

    Computed by rank-criterion comparisons; callers wanting the smooth fast
    path should go through ``heckelab.lab.moment_graph``.
    """
    n = len(w)
    out = set()
    e = Perm.identity(n)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if bruhat_leq(e.times_transposition(i, j), w):
                out.add((i, j))
    return frozenset(out)


def is_hessenberg(m) -> bool:
    """Non-decreasing m: [n] -> [n] with m(i) >= i (forces m(n) = n)."""
    m = tuple(m)
    n = len(m)
    if n == 0:
        return False
    for i, v in enumerate(m, start=1):
        if not (i <= v <= n):
            return False
    return all(m[i] <= m[i + 1] for i in range(n - 1))


def enumerate_hessenberg(n: int) -> list[tuple[int, ...]]:
    """All Hessenberg functions on [n], lexicographically; Catalan(n) many."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []

    def build(prefix: list[int]):
        i = len(prefix) + 1
        if i > n:
            out.append(tuple(prefix))
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            build(prefix + [v])

    build([])
    return out


def catalan(n: int) -> int:
    from math import comb
    return comb(2 * n, n) // (n + 1)


def all_perms(n: int):
    """All permutations of [n], lexicographic order."""
    from itertools import permutations as _p
    for word in _p(range(1, n + 1)):
        yield Perm(word)


# -- serialization ----------------------------------------------------------

def perm_to_str(w: Perm) -> str:
    """Digit string for n <= 9 (e.g. '62754381'), comma-separated beyond."""
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def parse_perm(text: str, n: int | None = None) -> Perm:
    """Parse a digit string or comma-separated list; 'e' is the identity.

    Parsing 'e' requires n.
    """
    text = text.strip()
    if text == "e":
        if n is None:
            raise ValueError("parsing 'e' requires the rank n")
        return Perm.identity(n)
    if "," in text:
        word = [int(t) for t in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"not a permutation string: {text!r}")
        word = [int(ch) for ch in text]
    w = Perm(word)
    if n is not None and len(w) != n:
        raise ValueError(f"expected a permutation of [{n}], got {text!r}")
    return w


def hessenberg_to_str(m) -> str:
    return ",".join(str(v) for v in m)


def parse_hessenberg(text: str) -> tuple[int, ...]:
    m = tuple(int(t) for t in text.strip().split(","))
    if not is_hessenberg(m):
        raise ValueError(f"not a Hessenberg function: {text!r}")
    return m
