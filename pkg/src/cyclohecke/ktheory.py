"""Fixed-point model of the equivariant K-theory of the Gieseker space.

The space enters only through its torus fixed points (multipartitions) and
the torus characters of the tautological bundle there. The two sides of the
main identity are produced by deliberately independent code paths:

* geometric: fill each Young diagram with the monomial basis of the quotient
  ring it cuts out and read off torus weights from monomial exponents;
* algebraic: evaluate symmetric functions on the Jucys-Murphy eigenvalue
  multiset coming from node contents.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass

from .combinatorics import (
    block_partition,
    enumerate_multipartitions,
    jm_eigenvalues,
    render_multipartition,
)
from .center import (
    jm_center_span,
    central_idempotents,
    min_poly_on_center_ideal,
    specialized_elementary_characters,
    unique_eigenvalue,
)
from .hecke import AlgebraContext
from .linalg import RowSpace
from .reports import VerificationReport
from .rings import CyclotomicDomain, LaurentPoly, elementary_symmetric


@dataclass
class FixedPointCharacter:
    """Torus character of the tautological bundle at one fixed point: a
    multiset of n weight monomials, each q-power times a single Q variable."""

    multipartition: tuple
    weights: list

    def validate(self):
        n = sum(sum(p) for p in self.multipartition)
        if len(self.weights) != n:
            raise ValueError("weight count must equal n")
        for w in self.weights:
            ((exps, _),) = w.terms.items()
            q_degrees = [e for e in exps[1:] if e]
            if q_degrees != [1]:
                raise ValueError("weight must involve exactly one Q variable")
        return self


def fixed_point_character(mp, r=None):
    """Weights at the fixed point of a multipartition, computed from the
    diagram geometry: box (i, j) of component k carries the quotient-ring
    monomial x^(i-1) y^(j-1) and the torus scales it by q^(j-i) Q_k.

    Deliberately does not touch the node/content code path.
    """
    if r is None:
        r = len(mp)
    weights = []
    for k, part in enumerate(mp, start=1):
        for row_idx, row_len in enumerate(part):
            for col_idx in range(row_len):
                # monomial exponents of x^u y^v under the staircase
                u, v = row_idx, col_idx
                exps = [0] * (1 + r)
                exps[0] = v - u
                exps[k] = 1
                weights.append(LaurentPoly.monomial(1, exps))
    return FixedPointCharacter(mp, weights).validate()


@dataclass
class RestrictionTable:
    """Restrictions of the tautological classes e_1..e_n and the inverse
    determinant class at every fixed point, as exact Laurent polynomials."""

    n: int
    r: int
    rows: list        # multipartitions in canonical order
    entries: list     # per row: [e_1, ..., e_n, det_inv]

    @property
    def column_labels(self):
        return [f"e{i}" for i in range(1, self.n + 1)] + ["det_inv"]

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["multipartition"] + self.column_labels)
        for mp, row in zip(self.rows, self.entries):
            writer.writerow([render_multipartition(mp)]
                            + [p.render() for p in row])
        return buf.getvalue()

    def to_json(self):
        return json.dumps({
            "n": self.n,
            "r": self.r,
            "columns": self.column_labels,
            "rows": [
                {
                    "multipartition": render_multipartition(mp),
                    "entries": [p.render() for p in row],
                }
                for mp, row in zip(self.rows, self.entries)
            ],
        }, sort_keys=True, separators=(",", ":"))


def restriction_table(n, r):
    """The full fixed-point restriction table of (n, r), geometric side."""
    one = LaurentPoly.const(1, 1 + r)
    rows = enumerate_multipartitions(n, r)
    entries = []
    for mp in rows:
        weights = fixed_point_character(mp, r).weights
        row = [elementary_symmetric(k, weights, one)
               for k in range(1, n + 1)]
        det_inv = one
        for w in weights:
            det_inv = det_inv * w.inverse()
        row.append(det_inv)
        entries.append(row)
    return RestrictionTable(n, r, rows, entries)


def verify_main_theorem(n, r, table=None):
    """Exact equality of the geometric restriction table (diagram weights)
    and the algebraic one (elementary symmetric functions of Jucys-Murphy
    eigenvalues), entry by entry, including the inverse determinant column.
    """
    start = time.time()
    if table is None:
        table = restriction_table(n, r)
    one = LaurentPoly.const(1, 1 + r)
    witnesses = []
    rows_checked = 0
    for mp, row in zip(table.rows, table.entries):
        rows_checked += 1
        alphas = jm_eigenvalues(mp, r)
        algebraic = [elementary_symmetric(k, alphas, one)
                     for k in range(1, n + 1)]
        det_inv = one
        for a in alphas:
            det_inv = det_inv * a.inverse()
        algebraic.append(det_inv)
        for label, geom, alg in zip(table.column_labels, row, algebraic):
            if geom != alg:
                witnesses.append({
                    "multipartition": render_multipartition(mp),
                    "column": label,
                    "geometric": geom.render(),
                    "algebraic": alg.render(),
                })
    return VerificationReport(
        check="main_theorem_identity",
        params={"n": n, "r": r, "rows": rows_checked,
                "columns": len(table.column_labels)},
        status="pass" if not witnesses else "fail",
        witnesses=witnesses,
        duration=time.time() - start,
    )


def verify_blocks(n, r, modulus, charge, *, seed=0, cache_dir=None):
    """Block decomposition at a root of unity against the residue-vector
    classes: counts must agree, blocks must match classes through the
    spectra of the Jucys-Murphy center, and per block the dimension of the
    Jucys-Murphy center image must equal the class size."""
    start = time.time()
    charge = tuple(charge)
    classes = block_partition(n, r, modulus, charge)
    domain = CyclotomicDomain(modulus)
    q_val = domain.zeta(1)
    Q_vals = [domain.zeta(s) for s in charge]
    ctx = AlgebraContext(n, r, domain, q_val, Q_vals, cache_dir=cache_dir)
    idempotents = central_idempotents(ctx, seed=seed)
    witnesses = []
    blocks_found = len(idempotents)
    params = {
        "n": n, "r": r, "ell": modulus, "charge": list(charge),
        "classes": len(classes), "blocks": blocks_found,
    }
    if blocks_found != len(classes):
        witnesses.append({
            "reason": "block count mismatch",
            "residue_classes": [str(k) for k in classes],
            "blocks": blocks_found,
        })
        return VerificationReport(
            check="block_decomposition", params=params, status="fail",
            witnesses=witnesses, seed=seed, duration=time.time() - start)

    mps, char_rows = specialized_elementary_characters(ctx)
    mp_index = {mp: i for i, mp in enumerate(mps)}
    class_spectra = {}
    for residue, members in classes.items():
        spectra = {tuple(char_rows[mp_index[mp]]) for mp in members}
        if len(spectra) != 1:
            witnesses.append({
                "reason": "class spectra not constant",
                "residue": str(residue),
            })
            continue
        class_spectra[spectra.pop()] = residue
    if len(class_spectra) != len(classes) and not witnesses:
        witnesses.append({
            "reason": "distinct residue classes share a spectrum",
            "classes": len(classes), "spectra": len(class_spectra),
        })

    block_info = []
    used = set()
    for eps in idempotents:
        spectrum = []
        for k in range(1, n + 1):
            mu = min_poly_on_center_ideal(ctx, eps, ctx.symmetric_jm(k))
            value = unique_eigenvalue(ctx, mu)
            if value is None:
                witnesses.append({
                    "reason": "block spectrum not a single eigenvalue",
                    "generator": f"e{k}",
                })
                break
            spectrum.append(value)
        else:
            key = tuple(spectrum)
            residue = class_spectra.get(key)
            if residue is None or residue in used:
                witnesses.append({
                    "reason": "block does not match a residue class",
                    "spectrum": [ctx.domain.render(v) for v in spectrum],
                })
                continue
            used.add(residue)
            block_info.append((eps, residue))

    if not witnesses:
        span = jm_center_span(ctx)
        per_block = []
        for eps, residue in block_info:
            image = RowSpace(ctx.domain, ctx.dim)
            for z in span.elements:
                image.add((eps * z).to_vector())
            class_size = len(classes[residue])
            per_block.append({
                "residue": str(residue),
                "jm_image_dim": image.rank,
                "class_size": class_size,
            })
            if image.rank != class_size:
                witnesses.append({
                    "reason": "jm-center image dimension != class size",
                    "residue": str(residue),
                    "jm_image_dim": image.rank,
                    "class_size": class_size,
                })
        params["per_block"] = per_block

    return VerificationReport(
        check="block_decomposition",
        params=params,
        status="pass" if not witnesses else "fail",
        witnesses=witnesses,
        seed=seed,
        duration=time.time() - start,
    )
