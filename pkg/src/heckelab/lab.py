"""
Theorem drivers: smooth-to-codominant reduction, moment graphs, the modular
relation dichotomy, the codominant-decomposition search and its S_8
counterexample, and the named exhaustive check suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .characters import (character_table, chi, cycle_type, frobenius_cprime,
                         min_class_rep, murnaghan_nakayama)
from .csf import csf, csf_batch, csf_index, csf_key, csf_oracle, edge_count
from .hecke import (HeckeElement, cprime, cprime_normalized, iota,
                    poly_add, poly_mul, poly_shift, poly_sub, row_store)
from .permutations import (NotSmoothError, Perm, all_perms, bruhat_leq,
                           codominant_of_hessenberg, enumerate_hessenberg,
                           hessenberg_of_smooth, hessenberg_to_str,
                           perm_to_str, transpositions_below)
from .qpoly import LaurentQ
from .symfunc import SymmetricFunction, omega, partitions, positivity

__all__ = [
    "PreconditionError", "InternalContradictionError",
    "MomentGraph", "moment_graph", "smooth_reduce",
    "ModularRelation", "modular_relation", "modular_triples",
    "CounterexampleResult", "counterexample_search",
    "decompose_codominant", "verify_decomposition",
    "Report", "check_suite", "CHECKS", "smooth_perms",
]


class PreconditionError(ValueError):
    """An operation's stated hypotheses were not met."""


class InternalContradictionError(RuntimeError):
    """A proved dichotomy failed; should be unreachable."""


def smooth_perms(n: int):
    """All smooth permutations of [n]."""
    return [w for w in all_perms(n) if w.is_smooth()]


def smooth_reduce(w: Perm) -> Perm:
    """The codominant permutation w' with the same moment graph (and
    Frobenius character) as the smooth permutation w."""
    return codominant_of_hessenberg(hessenberg_of_smooth(w))


@dataclass(frozen=True)
class MomentGraph:
    """Vertex set all of S_n; edges {u, ut} for the listed transpositions.

    Equality of moment graphs is equality of the transposition sets.
    """
    n: int
    transpositions: frozenset


def moment_graph(w: Perm, use_hessenberg: bool | None = None) -> MomentGraph:
    """Transpositions t <= w; fast path {(i,j): j <= m_w(i)} for smooth w,
    slow path via Bruhat comparisons for arbitrary w."""
    if use_hessenberg is None:
        use_hessenberg = w.is_smooth()
    if use_hessenberg:
        m = hessenberg_of_smooth(w)
        ts = frozenset((i, j) for i in range(1, len(w) + 1)
                       for j in range(i + 1, m[i - 1] + 1))
    else:
        ts = transpositions_below(w)
    return MomentGraph(len(w), ts)


# -- the modular relation ----------------------------------------------------

@dataclass(frozen=True)
class ModularRelation:
    """One instance of the character dichotomy for (smooth w, simple s) with
    sw < w < ws.

    case "smooth":   (q^(-1/2)+q^(1/2)) ch(C'_w) = ch(C'_ws) + ch(C'_z)
    case "singular": (q^(-1/2)+q^(1/2)) ch(C'_w) = ch(C'_ws)

    verified is True when the identity was recomputed through the character
    module, None when it is asserted by the theorem (large n).
    """
    case: str
    w: Perm
    s: int
    ws: Perm
    z: Perm | None
    verified: bool | None

    def identity(self) -> str:
        lhs = f"(q^(-1/2)+q^(1/2))*ch(C'[{perm_to_str(self.w)}])"
        rhs = f"ch(C'[{perm_to_str(self.ws)}])"
        if self.z is not None:
            rhs += f" + ch(C'[{perm_to_str(self.z)}])"
        return f"{lhs} = {rhs}"

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "w": perm_to_str(self.w),
            "s": self.s,
            "ws": perm_to_str(self.ws),
            "z": None if self.z is None else perm_to_str(self.z),
            "identity": self.identity(),
            "verified": self.verified,
        }


def modular_relation(w: Perm, i: int, verify_limit: int = 6) -> ModularRelation:
    """Classify (w, s_i) with w smooth and s_i w < w < w s_i.

    Smooth case: w s_i is smooth and exactly one lower cover z of w has
    z s_i < z (and z is smooth); singular case: w s_i is singular and no
    such cover exists.  Any other combination raises
    InternalContradictionError.  The emitted identity is recomputed exactly
    via characters when n <= verify_limit.
    """
    n = len(w)
    if not w.is_smooth():
        raise PreconditionError("w must be smooth")
    winv = w.inverse()
    if not (w[i - 1] < w[i] and winv[i - 1] > winv[i]):
        raise PreconditionError("requires s w < w < w s")
    ws = w.times_simple(i)
    candidates = sorted(z for z in w.lower_covers() if z[i - 1] > z[i])
    ws_smooth = ws.is_smooth()
    if ws_smooth and len(candidates) != 1:
        raise InternalContradictionError(
            f"smooth ws but {len(candidates)} covers with zs < z at "
            f"w={perm_to_str(w)}, s={i}")
    if not ws_smooth and candidates:
        raise InternalContradictionError(
            f"singular ws but a cover with zs < z exists at "
            f"w={perm_to_str(w)}, s={i}")
    z = candidates[0] if ws_smooth else None
    if z is not None and not z.is_smooth():
        raise InternalContradictionError(
            f"the distinguished cover {perm_to_str(z)} is singular")
    verified: bool | None = None
    if n <= verify_limit:
        one_plus_q = LaurentQ.one() + LaurentQ.q()
        lhs = frobenius_cprime(w).scale(one_plus_q)
        rhs = frobenius_cprime(ws)
        if z is not None:
            rhs = rhs + frobenius_cprime(z).scale(LaurentQ.q())
        verified = lhs == rhs
        if not verified:
            raise InternalContradictionError(
                f"character identity failed at w={perm_to_str(w)}, s={i}")
    return ModularRelation("smooth" if ws_smooth else "singular",
                           w, i, ws, z, verified)


def modular_triples(n: int) -> list[tuple]:
    """All (m0, m1, m2, i) with m0 = m1 - delta_i, m2 = m1 + delta_i all
    Hessenberg and m1(l+1) = m1(l) for l = m1(i)."""
    out = []
    for m1 in enumerate_hessenberg(n):
        for i in range(1, n):
            l = m1[i - 1]
            if l >= n or m1[l] != m1[l - 1]:
                continue
            if l - 1 < i or (i >= 2 and m1[i - 2] > l - 1):
                continue
            if l + 1 > m1[i]:
                continue
            m0 = m1[:i - 1] + (l - 1,) + m1[i:]
            m2 = m1[:i - 1] + (l + 1,) + m1[i:]
            out.append((m0, m1, m2, i))
    return out


# -- the counterexample search ------------------------------------------------

@dataclass(frozen=True)
class CounterexampleResult:
    m0: tuple
    m2: tuple
    shift: int  # the exponent a in (1+q) csf(m1) = q^a csf(m0) + csf(m2)


def counterexample_search(m1, general: bool = False, cache=None,
                          threads: int = 1) -> CounterexampleResult | None:
    """Search for (m0, m2) with (1+q) csf(G_m1) = csf(G_m2) + q csf(G_m0).

    The default search fixes edge counts E(m0) = E(m1) - 1 and
    E(m2) = E(m1) + 1 (the lengths any character-level solution must have,
    since P_{e,w} = 1 + q pins the length gaps).  With general=True the
    equation (1+q) csf(m1) = q^a csf(m0) + csf(m2) is scanned for every
    a in 0..E(m1)+1 with no length filter; the trivial solution
    (a, m0, m2) = (1, m1, m1) is excluded, being an artifact of the
    symmetric-function form that the character equation does not admit.

    Returns the first solution in scan order, or None (NotFound).
    """
    m1 = tuple(m1)
    n = len(m1)
    batch = csf_batch(n, cache=cache, threads=threads)
    index = csf_index(n, cache=cache)
    target = {lam: poly_mul((1, 1), p) for lam, p in batch[m1].items()}
    e1 = edge_count(m1)

    def residual_key(m0_coeffs, a):
        out = {}
        for lam in set(target) | set(m0_coeffs):
            diff = poly_sub(target.get(lam, ()),
                            poly_shift(m0_coeffs.get(lam, ()), a))
            if diff:
                out[lam] = diff
        return csf_key(out)

    if not general:
        for m0, coeffs in batch.items():
            if edge_count(m0) != e1 - 1:
                continue
            hits = index.get(residual_key(coeffs, 1))
            if not hits:
                continue
            for m2 in hits:
                if edge_count(m2) == e1 + 1:
                    return CounterexampleResult(m0, m2, 1)
        return None

    for a in range(0, e1 + 2):
        for m0, coeffs in batch.items():
            hits = index.get(residual_key(coeffs, a))
            if not hits:
                continue
            for m2 in hits:
                if a == 1 and m0 == m1 and m2 == m1:
                    continue
                return CounterexampleResult(m0, m2, a)
    return None


# -- decomposition into codominant characters ---------------------------------

def _thm16_step(w: Perm):
    """A simple s such that ws (or sw) is smooth, one step down, with
    s w s two steps down; the reduction of Thm 1.6 then applies."""
    n = len(w)
    lw = w.length()
    for i in range(1, n):
        for side in ("right", "left"):
            v = w.times_simple(i) if side == "right" else \
                Perm.identity(n).times_simple(i) * w
            if v.length() != lw - 1 or not v.is_smooth():
                continue
            sws = Perm.identity(n).times_simple(i) * w.times_simple(i)
            if sws.length() == lw - 2:
                return v
    return None


def decompose_codominant(w: Perm, max_n: int = 6):
    """Best-effort decomposition ch(q^(l(w)/2) C'_w) =
    sum c_i(q) ch(q^(l(w_i)/2) C'_{w_i}) over codominant w_i, c_i in N[q].

    Smooth w reduce to a single codominant permutation; singular w are first
    reduced by ch(B_w) = (1+q) ch(B_{ws}) whenever a simple s makes ws
    smooth one step down with sws two steps down.  Whatever remains is
    handed to an exact leading-term search over all codominant characters,
    which requires n <= max_n.  Returns {codominant: coefficient} or None
    for Unknown (search exhausted or out of reach).
    """
    if w.is_smooth():
        return {smooth_reduce(w): LaurentQ.one()}
    v = _thm16_step(w)
    if v is not None:
        sub = decompose_codominant(v, max_n=max_n)
        if sub is None:
            return None
        one_plus_q = LaurentQ.one() + LaurentQ.q()
        return {u: c * one_plus_q for u, c in sub.items()}
    n = len(w)
    if n > max_n:
        return None
    return _positive_solve(frobenius_cprime(w), n)


def _positive_solve(target: SymmetricFunction, n: int, node_budget: int = 200000):
    """Exact search for an N[q]-combination of codominant characters equal
    to the target, by leading-term peeling in the h-basis."""
    candidates = []
    for m in enumerate_hessenberg(n):
        wm = codominant_of_hessenberg(m)
        vec = _h_vec(frobenius_cprime(wm))
        candidates.append((wm, vec, wm.length()))

    budget = [node_budget]

    def leading(vec):
        deg = max((len(p) - 1 for p in vec.values()), default=-1)
        if deg < 0:
            return None
        for lam in sorted(vec, reverse=True):
            p = vec[lam]
            if len(p) - 1 == deg:
                return deg, lam
        return None

    def subtract(vec, other, k, shift):
        out = dict(vec)
        for lam, p in other.items():
            cur = poly_sub(out.get(lam, ()), poly_shift(tuple(v * k for v in p), shift))
            if cur:
                out[lam] = cur
            else:
                out.pop(lam, None)
        return out

    def search(vec, pos, min_index):
        if budget[0] <= 0:
            return None
        budget[0] -= 1
        lead = leading(vec)
        if lead is None:
            return {}
        if lead != pos:
            # fresh leading position: every candidate is admissible again
            min_index = 0
        deg, lam = lead
        head = vec[lam][deg]
        if head < 0:
            return None
        for idx in range(min_index, len(candidates)):
            wm, cvec, lw = candidates[idx]
            if lw > deg:
                continue
            clead = leading(cvec)
            if clead is None or clead[0] != lw or clead[1] != lam:
                continue
            chead = cvec[lam][lw]
            kmax = head // chead
            for k in range(kmax, 0, -1):
                rest = search(subtract(vec, cvec, k, deg - lw), lead, idx + 1)
                if rest is not None:
                    rest = dict(rest)
                    prev = rest.get(wm, LaurentQ.zero())
                    rest[wm] = prev + LaurentQ({2 * (deg - lw): k})
                    return rest
        return None

    return search(_h_vec(target), None, 0)


def _h_vec(f: SymmetricFunction) -> dict:
    """h-basis coefficients as tuple polynomials (requires poly entries)."""
    from .hecke import laurent_to_poly
    return {lam: laurent_to_poly(c)
            for lam, c in f.convert("h").coeffs.items() if c}


def verify_decomposition(w: Perm, decomposition: dict) -> bool:
    """Check ch(B_w) = sum c_i ch(B_{w_i}) exactly (small n only)."""
    total = SymmetricFunction.zero("s", len(w))
    for wi, c in decomposition.items():
        total = total + frobenius_cprime(wi).scale(c)
    return total == frobenius_cprime(w)


# -- named exhaustive checks ---------------------------------------------------

@dataclass
class Report:
    check: str
    n: int
    status: str  # "pass" | "fail"
    witnesses: list = field(default_factory=list)
    details: str = ""

    def to_json(self) -> dict:
        return {"check": self.check, "n": self.n, "status": self.status,
                "witnesses": self.witnesses, "details": self.details}

    def __str__(self):
        head = f"[{self.status.upper()}] {self.check} (n={self.n}): {self.details}"
        for wit in self.witnesses[:10]:
            head += f"\n    witness: {wit}"
        if len(self.witnesses) > 10:
            head += f"\n    ... {len(self.witnesses) - 10} more"
        return head


def _check_cor44(n: int, sample: int | None = None) -> Report:
    ms = enumerate_hessenberg(n)
    if sample is not None and len(ms) > sample:
        ms = random.Random(44).sample(ms, sample)
    witnesses = []
    for m in ms:
        wm = codominant_of_hessenberg(m)
        if frobenius_cprime(wm) != omega(csf(m)):
            witnesses.append(hessenberg_to_str(m))
    return Report("cor44", n, "fail" if witnesses else "pass", witnesses,
                  f"ch(q^(l/2) C'_wm) = omega(csf(G_m)) on {len(ms)} "
                  "Hessenberg functions")


def _check_hpos(n: int) -> Report:
    witnesses = []
    count = 0
    for w in all_perms(n):
        count += 1
        rep = positivity(frobenius_cprime(w), "h")
        if not rep.positive:
            witnesses.append({
                "w": perm_to_str(w),
                "partition": list(rep.witness_partition),
                "coefficient": str(rep.witness_coefficient),
            })
    return Report("hpos", n, "fail" if witnesses else "pass", witnesses,
                  f"h-positivity of ch(q^(l/2) C'_w) over all {count} "
                  "permutations (conjecture-level)")


def _check_prop31(n: int, verify_limit: int = 5) -> Report:
    witnesses = []
    pairs = 0
    for w in smooth_perms(n):
        winv = w.inverse()
        for i in range(1, n):
            if w[i - 1] < w[i] and winv[i - 1] > winv[i]:
                pairs += 1
                try:
                    modular_relation(w, i, verify_limit=verify_limit)
                except InternalContradictionError as exc:
                    witnesses.append(str(exc))
    return Report("prop31", n, "fail" if witnesses else "pass", witnesses,
                  f"dichotomy over {pairs} (smooth w, s) pairs with sw<w<ws"
                  + (", character identities verified exactly"
                     if n <= verify_limit else ""))


def _check_thm15(n: int) -> Report:
    witnesses = []
    count = 0
    for w in smooth_perms(n):
        count += 1
        if frobenius_cprime(w) != frobenius_cprime(smooth_reduce(w)):
            witnesses.append(perm_to_str(w))
    return Report("thm15", n, "fail" if witnesses else "pass", witnesses,
                  f"ch(q^(l/2) C'_w) = ch(q^(l/2) C'_w') for all {count} "
                  "smooth w")


def _check_momentgraph(n: int) -> Report:
    witnesses = []
    count = 0
    for w in smooth_perms(n):
        count += 1
        left = moment_graph(w, use_hessenberg=False)
        right = moment_graph(smooth_reduce(w), use_hessenberg=False)
        if left != right:
            witnesses.append(perm_to_str(w))
    return Report("momentgraph", n, "fail" if witnesses else "pass", witnesses,
                  f"brute-force moment graphs agree for all {count} smooth w")


def _check_modular_law(n: int) -> Report:
    one_plus_q = LaurentQ.one() + LaurentQ.q()
    q = LaurentQ.q()
    triples = modular_triples(n)
    witnesses = []
    for m0, m1, m2, i in triples:
        lhs = csf(m1).scale(one_plus_q)
        rhs = csf(m2) + csf(m0).scale(q)
        if lhs != rhs:
            witnesses.append([hessenberg_to_str(m) for m in (m0, m1, m2)])
    return Report("modular-law", n, "fail" if witnesses else "pass", witnesses,
                  f"(1+q) csf(m1) = csf(m2) + q csf(m0) on {len(triples)} "
                  "triples")


def _check_csf_oracle(n: int, sample: int | None = None) -> Report:
    ms = enumerate_hessenberg(n)
    if sample is not None and len(ms) > sample:
        ms = random.Random(7).sample(ms, sample)
    witnesses = []
    for m in ms:
        if csf(m) != csf_oracle(m):
            witnesses.append(hessenberg_to_str(m))
    return Report("csf-oracle", n, "fail" if witnesses else "pass", witnesses,
                  f"partition enumeration matches the n^n coloring oracle on "
                  f"{len(ms)} graphs")


def _check_kl_selfdual(n: int) -> Report:
    witnesses = []
    count = 0
    store = row_store(n)
    for w in all_perms(n):
        count += 1
        cn = cprime_normalized(w)
        if iota(cn) != cn:
            witnesses.append(perm_to_str(w) + ": iota(C'_w) != C'_w")
        lw = w.length()
        for z, p in store.row(w).items():
            if z != w and p and 2 * (len(p) - 1) >= lw - z.length():
                witnesses.append(
                    f"deg P[{perm_to_str(z)},{perm_to_str(w)}] too big")
    return Report("kl-selfdual", n, "fail" if witnesses else "pass", witnesses,
                  f"iota(C'_w) = C'_w and KL degree bounds over all {count} w")


def _check_unimodal(n: int) -> Report:
    from .characters import chi_element
    witnesses = []
    checked = 0
    for w in all_perms(n):
        b = cprime(w)
        for lam in partitions(n):
            props = chi_element(lam, b).props()
            checked += 1
            if not (props.nonnegative and props.palindromic and props.unimodal):
                witnesses.append({"w": perm_to_str(w), "lambda": list(lam)})
    return Report("unimodal", n, "fail" if witnesses else "pass", witnesses,
                  f"chi^lam(q^(l/2) C'_w) nonnegative, palindromic, unimodal "
                  f"({checked} values)")


def _check_mn(n: int) -> Report:
    witnesses = []
    for mu in partitions(n):
        w = min_class_rep(mu)
        for lam in partitions(n):
            if chi(lam, w).at_q1() != murnaghan_nakayama(lam, mu):
                witnesses.append({"lambda": list(lam), "class": list(mu)})
    return Report("mn", n, "fail" if witnesses else "pass", witnesses,
                  "q := 1 character table matches the Murnaghan-Nakayama "
                  "oracle on every (lambda, class)")


def _check_lemma22(n: int) -> Report:
    witnesses = []
    count = 0
    for w in smooth_perms(n):
        count += 1
        m = hessenberg_of_smooth(w)
        fast = frozenset((i, j) for i in range(1, n + 1)
                         for j in range(i + 1, m[i - 1] + 1))
        brute = transpositions_below(w)
        if fast != brute or len(brute) != w.length():
            witnesses.append(perm_to_str(w))
    return Report("lemma22", n, "fail" if witnesses else "pass", witnesses,
                  f"transpositions below smooth w are (i,j), j <= m_w(i), "
                  f"with count l(w), over {count} w")


CHECKS = {
    "cor44": _check_cor44,
    "hpos": _check_hpos,
    "prop31": _check_prop31,
    "thm15": _check_thm15,
    "momentgraph": _check_momentgraph,
    "modular-law": _check_modular_law,
    "csf-oracle": _check_csf_oracle,
    "kl-selfdual": _check_kl_selfdual,
    "unimodal": _check_unimodal,
    "mn": _check_mn,
    "lemma22": _check_lemma22,
}

# checks that would be prohibitively slow past these ranks
CHECK_BOUNDS = {
    "cor44": 6, "hpos": 5, "prop31": 7, "thm15": 6, "momentgraph": 6,
    "modular-law": 7, "csf-oracle": 6, "kl-selfdual": 5, "unimodal": 5,
    "mn": 7, "lemma22": 7,
}

# at these ranks a check switches from exhaustive to a seeded sample
CHECK_SAMPLED = {"cor44": (6, 50), "csf-oracle": (6, 12)}


def check_suite(n: int, which=None) -> list[Report]:
    """Run the named checks (default: all applicable at rank n)."""
    names = list(CHECKS) if which is None else list(which)
    reports = []
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; "
                             f"known: {', '.join(sorted(CHECKS))}")
        if n > CHECK_BOUNDS[name]:
            raise ValueError(
                f"check {name!r} is capped at n = {CHECK_BOUNDS[name]}")
        sampled = CHECK_SAMPLED.get(name)
        if sampled and n >= sampled[0]:
            reports.append(CHECKS[name](n, sample=sampled[1]))
        else:
            reports.append(CHECKS[name](n))
    return reports
