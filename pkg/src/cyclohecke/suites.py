"""Named verification campaigns composing the other modules.

"Generic parameter" claims are certified at sampled random rational
specializations (Schwartz-Zippel style), never proclaimed proved; the
reports label them "generic (sampled)". Every suite is deterministic given
its parameters and seed.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from fractions import Fraction

from .combinatorics import (
    count_standard_tableaux,
    enumerate_multipartitions,
)
from .center import (
    SingularGramError,
    center_basis,
    character_dual,
    cocenter_class_to_element,
    cocenter_project,
    commutator_coordinates,
    descriptor_characters,
    jm_center_span,
    trace_gram_matrix,
)
from .hecke import (
    AlgebraContext,
    all_permutations,
    pairing,
    perm_compose,
    _random_element,
)
from .ktheory import verify_main_theorem
from .linalg import kernel_basis
from .reports import VerificationReport
from .rings import CyclotomicDomain, RationalDomain


def sample_specialization(n, rng, r):
    """Random rational (q, Q_1..Q_r) in the semisimple locus: entries from
    {2..97}, rejecting q = 1 and coincidences Q_i = q^m Q_j for |m| <= 2n."""
    while True:
        q = Fraction(rng.randint(2, 97))
        if q == 1:
            continue
        Qs = [Fraction(rng.randint(2, 97)) for _ in range(r)]
        ok = True
        for i in range(r):
            for j in range(r):
                if i == j:
                    continue
                for m in range(-2 * n, 2 * n + 1):
                    if Qs[i] == q ** m * Qs[j]:
                        ok = False
        if ok:
            return q, Qs


def generic_contexts(n, r, seed, samples=3, **kwargs):
    """Independently sampled rational specializations of (n, r)."""
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        q, Qs = sample_specialization(n, rng, r)
        domain = RationalDomain()
        out.append(AlgebraContext(n, r, domain, q, Qs, **kwargs))
    return out


# ---------------------------------------------------------------------------
# main theorem
# ---------------------------------------------------------------------------

def main_theorem_coverage(budget=400, n_cap=8, r_cap=6):
    """All (n, r) with r^n * n! within the dimension budget, under sane caps
    on n and r (the budget alone leaves r unbounded for n <= 1)."""
    pairs = []
    for r in range(1, r_cap + 1):
        for n in range(0, n_cap + 1):
            if r ** n * math.factorial(n) <= budget:
                pairs.append((n, r))
    return pairs


def suite_main_theorem(budget=400, n_cap=8, r_cap=6):
    """The main identity (geometric vs algebraic restriction tables) over
    every (n, r) in the dimension budget."""
    return [verify_main_theorem(n, r)
            for n, r in main_theorem_coverage(budget, n_cap, r_cap)]


# ---------------------------------------------------------------------------
# Hilbert scheme corollary (r = 1)
# ---------------------------------------------------------------------------

def suite_hilb_fg06(n, q_specs, *, seed=0, cache_dir=None):
    """For r = 1 and Q_1 = 1: the center and the Jucys-Murphy center have
    equal dimension at every q != 1 in the list, and both equal the number
    of partitions of n at the generic entries.

    q_specs entries: ("rational", Fraction) or ("zeta", order, power);
    rational entries other than roots of unity count as generic.
    """
    start = time.time()
    witnesses = []
    results = []
    p_n = len(enumerate_multipartitions(n, 1))
    for spec in q_specs:
        if spec[0] == "rational":
            q = Fraction(spec[1])
            if q == 1:
                raise ValueError("the corollary needs q != 1")
            domain = RationalDomain()
            q_val = q
            generic = q not in (Fraction(-1),)
            label = str(q)
        elif spec[0] == "zeta":
            order, power = spec[1], spec[2]
            domain = CyclotomicDomain(order)
            q_val = domain.zeta(power)
            if q_val == domain.one:
                raise ValueError("the corollary needs q != 1")
            generic = False
            label = f"zeta_{order}^{power}"
        else:
            raise ValueError(f"unknown q spec {spec!r}")
        ctx = AlgebraContext(n, 1, domain, q_val, [domain.one],
                             cache_dir=cache_dir)
        dim_center = len(center_basis(ctx))
        dim_jm = jm_center_span(ctx).rank
        results.append({
            "q": label, "dim_center": dim_center, "dim_jm_center": dim_jm})
        if dim_center != dim_jm:
            witnesses.append({
                "reason": "center and JM-center dimensions differ",
                "q": label, "dim_center": dim_center,
                "dim_jm_center": dim_jm,
            })
        if generic and (dim_center != p_n or dim_jm != p_n):
            witnesses.append({
                "reason": "generic dimensions differ from p(n)",
                "q": label, "expected": p_n,
                "dim_center": dim_center, "dim_jm_center": dim_jm,
            })
    return VerificationReport(
        check="hilb_center_equals_jm_center",
        params={"n": n, "r": 1, "Q1": "1", "results": results,
                "p_n": p_n},
        status="pass" if not witnesses else "fail",
        witnesses=witnesses,
        seed=seed,
        duration=time.time() - start,
    )


# ---------------------------------------------------------------------------
# q = 1 degeneration: the smash product and the invariant gap
# ---------------------------------------------------------------------------

class SmashProduct:
    """The q = 1 degeneration: the symmetric group acting on the quotient
    P_Q = K[L_1..L_n] / (prod_i (L_k - Q_i) for all k), with monomial basis
    L^a w, exponents below r. Built directly from this presentation,
    independently of the Hecke engine."""

    def __init__(self, n, r, Q_vals):
        if len(Q_vals) != r:
            raise ValueError("need one parameter per level")
        self.n = n
        self.r = r
        self.Q_vals = [Fraction(Q) for Q in Q_vals]
        # minimal polynomial prod (x - Q_i) = x^r + sum poly[j] x^j
        poly = [Fraction(1)]
        for Q in self.Q_vals:
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= c * Q
            poly = nxt
        self.reduction = [-c for c in poly[:r]]  # x^r = sum red[j] x^j
        self.exponents = list(itertools.product(range(r), repeat=n))
        self.exp_index = {e: i for i, e in enumerate(self.exponents)}
        self.perms = all_permutations(n)
        self.basis = [(e, w) for e in self.exponents for w in self.perms]
        self.index = {word: i for i, word in enumerate(self.basis)}

    def _reduce_monomial(self, exps):
        """Expand a monomial with exponents possibly >= r into the reduced
        basis; returns dict exponent-tuple -> Fraction."""
        out = {tuple(exps): Fraction(1)}
        while True:
            hot = None
            for e in out:
                if any(x >= self.r for x in e):
                    hot = e
                    break
            if hot is None:
                return out
            coeff = out.pop(hot)
            slot = next(i for i, x in enumerate(hot) if x >= self.r)
            for j, c in enumerate(self.reduction):
                if not c:
                    continue
                e = list(hot)
                e[slot] = e[slot] - self.r + j
                key = tuple(e)
                acc = out.get(key, Fraction(0)) + coeff * c
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)

    def multiply_words(self, x, y):
        """Product of two basis words (a, w) * (b, v) = L^(a + w.b) (w v)."""
        (a, w), (b, v) = x, y
        moved = [0] * self.n
        for k in range(self.n):
            moved[w[k]] = b[k]
        exps = [a_k + m_k for a_k, m_k in zip(a, moved)]
        perm = perm_compose(w, v)
        out = {}
        for e, c in self._reduce_monomial(exps).items():
            out[(e, perm)] = out.get((e, perm), Fraction(0)) + c
        return {k: c for k, c in out.items() if c}

    def invariant_polynomial_dim(self):
        """Dimension of the symmetric-group invariants of P_Q: kernel of the
        stacked (swap - identity) actions on the monomial basis."""
        domain = RationalDomain()
        rows = []
        size = len(self.exponents)
        for i in range(self.n - 1):
            for col, exps in enumerate(self.exponents):
                swapped = list(exps)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                target = self.exp_index[tuple(swapped)]
                if target == col:
                    continue
                row = [Fraction(0)] * size
                row[col] = Fraction(-1)
                row[target] = Fraction(1)
                rows.append(row)
        if not rows:
            return size
        return len(kernel_basis(rows, domain))


def suite_q1_gap(n, r, Q_vals=None, *, seed=0, cache_dir=None):
    """At q = 1 the invariant subalgebra of the smash product has dimension
    binom(n+r-1, n), strictly below the multipartition count once n, r >= 2;
    the engine's JM-center rank at q = 1 must reproduce the same number, and
    for n <= 2 the two algebra structures are compared word by word."""
    start = time.time()
    rng = random.Random(seed)
    if Q_vals is None:
        Q_vals = []
        while len(Q_vals) < r:
            c = Fraction(rng.randint(2, 97))
            if c not in Q_vals:
                Q_vals.append(c)
    Q_vals = [Fraction(Q) for Q in Q_vals]
    if len(set(Q_vals)) != r:
        raise ValueError("the q = 1 degeneration needs distinct parameters")
    witnesses = []
    smash = SmashProduct(n, r, Q_vals)
    invariant_dim = smash.invariant_polynomial_dim()
    expected = math.comb(n + r - 1, n)
    mp_count = len(enumerate_multipartitions(n, r))
    if invariant_dim != expected:
        witnesses.append({
            "reason": "invariant dimension != binom(n+r-1, n)",
            "invariant_dim": invariant_dim, "expected": expected,
        })
    if n >= 2 and r >= 2 and not invariant_dim < mp_count:
        witnesses.append({
            "reason": "no gap: invariant dimension not below the "
                      "multipartition count",
            "invariant_dim": invariant_dim, "multipartitions": mp_count,
        })
    domain = RationalDomain()
    ctx = AlgebraContext(n, r, domain, Fraction(1), Q_vals,
                         cache_dir=cache_dir)
    jm_rank = jm_center_span(ctx).rank
    if jm_rank != invariant_dim:
        witnesses.append({
            "reason": "engine JM-center rank at q = 1 disagrees",
            "jm_rank": jm_rank, "invariant_dim": invariant_dim,
        })
    compared = False
    if n <= 2:
        compared = True
        for x in smash.basis:
            for y in smash.basis:
                expected_terms = smash.multiply_words(x, y)
                got = ctx.multiply(
                    ctx.basis_element(ctx.index[x]),
                    ctx.basis_element(ctx.index[y]))
                got_terms = {w: c for w, c in got.terms.items()}
                if got_terms != expected_terms:
                    witnesses.append({
                        "reason": "engine at q = 1 differs from the smash "
                                  "product",
                        "left": str(x), "right": str(y),
                    })
                    break
            if witnesses:
                break
    return VerificationReport(
        check="q1_invariant_gap",
        params={
            "n": n, "r": r, "Q": [str(Q) for Q in Q_vals],
            "invariant_dim": invariant_dim,
            "binom": expected,
            "multipartitions": mp_count,
            "gap": invariant_dim < mp_count,
            "structure_compared": compared,
        },
        status="pass" if not witnesses else "fail",
        witnesses=witnesses,
        seed=seed,
        duration=time.time() - start,
    )


# ---------------------------------------------------------------------------
# pairing / cocenter suite
# ---------------------------------------------------------------------------

def suite_pairing(n, r, trials=1000, *, seed=0, samples=1, cache_dir=None):
    """Trace symmetry, adjointness for central elements, the character-dual
    module property, the cocenter dimension and the invertibility of the
    trace Gram matrix, at sampled generic rational specializations."""
    start = time.time()
    witnesses = []
    gram_skipped = None
    mp_count = len(enumerate_multipartitions(n, r))
    sampled = []
    for ctx in generic_contexts(n, r, seed, samples, cache_dir=cache_dir):
        rng = random.Random(seed + len(sampled))
        sampled.append({"q": str(ctx.q_val),
                        "Q": [str(Q) for Q in ctx.Q_vals]})
        # trace symmetry
        for _ in range(trials):
            x = _random_element(ctx, rng)
            y = _random_element(ctx, rng)
            if not ctx.domain.is_zero((x * y).tau() - (y * x).tau()):
                witnesses.append({
                    "reason": "trace symmetry failed",
                    "x": x.render(), "y": y.render(),
                })
                break
        # cocenter dimension and coordinates
        coords = commutator_coordinates(ctx)
        if coords.dim != mp_count:
            witnesses.append({
                "reason": "cocenter dimension != multipartition count",
                "cocenter_dim": coords.dim, "expected": mp_count,
            })
            continue
        span = jm_center_span(ctx)
        if span.rank != mp_count:
            witnesses.append({
                "reason": "JM-center rank != multipartition count",
                "rank": span.rank, "expected": mp_count,
            })
            continue
        # adjointness for central a
        for _ in range(trials):
            a = span.elements[rng.randrange(len(span.elements))]
            b = _random_element(ctx, rng)
            c = _random_element(ctx, rng)
            lhs = pairing(a * b, c)
            rhs = pairing(b, a * c)
            if not ctx.domain.is_zero(lhs - rhs):
                witnesses.append({
                    "reason": "adjointness failed",
                    "a": a.render(), "b": b.render(), "c": c.render(),
                })
                break
        # Gram invertibility via the character dual, plus module property
        char_matrix = descriptor_characters(ctx, span.descriptors)
        try:
            gram = trace_gram_matrix(ctx, span, coords)
            for _ in range(100):
                x = [ctx.domain.from_int(rng.randint(-5, 5))
                     for _ in range(mp_count)]
                a_idx = rng.randrange(len(span.elements))
                a = span.elements[a_idx]
                # sigma(a) * x, componentwise
                ax = [char_matrix[lam][a_idx] * x[lam]
                      for lam in range(mp_count)]
                lhs = character_dual(ctx, ax, span=span, coords=coords,
                                     gram=gram, chars=char_matrix)
                rhs_elt = a * cocenter_class_to_element(
                    ctx, character_dual(ctx, x, span=span, coords=coords,
                                        gram=gram, chars=char_matrix))
                rhs = cocenter_project(coords, rhs_elt)
                if lhs != rhs:
                    witnesses.append({
                        "reason": "character dual is not a module map",
                        "a": a.render(),
                    })
                    break
        except SingularGramError as exc:
            # non-generic sample: the dual-map checks cannot run there
            gram_skipped = str(exc)
    if witnesses:
        status = "fail"
    elif gram_skipped:
        status = "skipped"
    else:
        status = "pass"
    return VerificationReport(
        check="pairing_cocenter",
        params={
            "n": n, "r": r, "trials": trials,
            "specialization": "generic (sampled)",
            "samples": sampled,
            "cocenter_dim_expected": mp_count,
            "gram_skipped": gram_skipped,
        },
        status=status,
        witnesses=witnesses,
        seed=seed,
        duration=time.time() - start,
    )


# ---------------------------------------------------------------------------
# dimension bookkeeping
# ---------------------------------------------------------------------------

def pbw_dimension_report(n, r, ctx=None):
    """PBW basis size r^n n! against the standard-tableaux square sum."""
    start = time.time()
    expected = r ** n * math.factorial(n)
    syt_sum = sum(
        count_standard_tableaux(mp) ** 2
        for mp in enumerate_multipartitions(n, r))
    witnesses = []
    basis_size = None
    if ctx is not None:
        basis_size = ctx.dim
        if basis_size != expected:
            witnesses.append({
                "reason": "PBW basis size mismatch",
                "basis": basis_size, "expected": expected,
            })
    if syt_sum != expected:
        witnesses.append({
            "reason": "sum of squared tableau counts mismatch",
            "syt_sum": syt_sum, "expected": expected,
        })
    return VerificationReport(
        check="pbw_dimension",
        params={"n": n, "r": r, "expected": expected,
                "syt_square_sum": syt_sum, "basis_size": basis_size},
        status="pass" if not witnesses else "fail",
        witnesses=witnesses,
        duration=time.time() - start,
    )
