"""Exact equivalence decisions for order-6 Hadamard matrices.

Two Hadamard matrices are equivalent when H2 = D2 P2 H1 P1 D1 for
permutations P and unit-modulus diagonals D. Dephasing kills the diagonals,
so H1 ~ H2 iff some row/column permutation of H1 dephases to exactly the
dephased form of H2; the search below enumerates all 6! * 6! permutation
pairs with an exact multiset prune.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    FINGERPRINT_HADAMARD_TOL,
    FINGERPRINT_PRECISION,
    EquivalenceWitness,
    apply_equivalence,
    as_matrix,
    dephase,
    fingerprint,
    is_hadamard,
)
from .errors import DimensionMismatch, NotHadamard, OrderUnsupported

_PERMS6 = np.array(list(permutations(range(6))))  # lexicographic
# row permutations grouped by their image of row 0, lexicographic inside
_PERMS6_BY_ANCHOR = [_PERMS6[_PERMS6[:, 0] == a] for a in range(6)]


@dataclass(frozen=True)
class EquivalenceResult:
    decision: str  # "equivalent" | "inequivalent" | "inconclusive"
    witness: Optional[EquivalenceWitness] = None
    screened_by: Optional[str] = None


def fingerprint_match(h1, h2, precision=FINGERPRINT_PRECISION):
    """Equal fingerprint multisets; False certifies inequivalence."""
    h1, h2 = as_matrix(h1), as_matrix(h2)
    if h1.shape != h2.shape:
        raise DimensionMismatch(f"orders differ: {h1.shape[0]} vs {h2.shape[0]}")
    return fingerprint(h1, precision).values == fingerprint(h2, precision).values


def _exhaustive_witness(h1, h2, tol):
    """First witness in (column-outer, row-inner) lexicographic order, or None."""
    h2d, wd = dephase(h2)
    target_re = np.sort(h2d.real.ravel())
    target_im = np.sort(h2d.imag.ravel())
    atol = 10.0 * tol
    prune_tol = atol + 1e-12
    g2 = np.asarray(wd.row_phases)
    g1 = np.asarray(wd.col_phases)

    for cp in _PERMS6:
        m = h1[:, cp]
        # dephased form of m for every choice of anchor row a:
        # q[a, i, j] = m_ij * m_a0 / (m_i0 * m_aj)
        q = m[None, :, :] * m[:, 0][:, None, None] / (m[:, 0][None, :, None] * m[:, None, :])
        for a in range(6):
            qa = q[a]
            # sorting is 1-Lipschitz, so a true match survives this prune
            if (
                np.abs(np.sort(qa.real.ravel()) - target_re).max() > prune_tol
                or np.abs(np.sort(qa.imag.ravel()) - target_im).max() > prune_tol
            ):
                continue
            block = _PERMS6_BY_ANCHOR[a]
            diffs = np.abs(qa[block] - h2d[None]).reshape(len(block), -1).max(axis=1)
            hits = np.nonzero(diffs <= atol)[0]
            if hits.size == 0:
                continue
            sigma = block[hits[0]]
            # h2[i,j] = conj(g2_i) h2d[i,j] conj(g1_j) and
            # h2d[i,j] = q[a, sigma_i, j], which factors into witness form
            rph = np.conj(g2) * m[a, 0] / m[sigma, 0]
            cph = np.conj(g1) / m[a, :]
            rph /= np.abs(rph)
            cph /= np.abs(cph)
            return EquivalenceWitness(tuple(sigma), tuple(rph), tuple(cp), tuple(cph))
    return None


def are_equivalent(h1, h2, tol=DEFAULT_TOL, screen=True):
    """Decide H1 ~ H2.

    Order 6: fingerprint screen (skippable via screen=False, e.g. to time the
    raw enumeration), then exhaustive search returning a verifying witness.
    Order 12: screening only; matching fingerprints are inconclusive.
    """
    h1, h2 = as_matrix(h1), as_matrix(h2)
    if h1.shape != h2.shape:
        raise DimensionMismatch(f"orders differ: {h1.shape[0]} vs {h2.shape[0]}")
    n = h1.shape[0]
    if n not in (6, 12):
        raise OrderUnsupported(f"equivalence decisions support n in (6, 12), got {n}")
    for name, h in (("first", h1), ("second", h2)):
        if not is_hadamard(h, tol):
            raise NotHadamard(f"{name} matrix is not Hadamard within {tol}")

    screenable = is_hadamard(h1, FINGERPRINT_HADAMARD_TOL) and is_hadamard(
        h2, FINGERPRINT_HADAMARD_TOL
    )
    if screen and screenable:
        if not fingerprint_match(h1, h2, FINGERPRINT_PRECISION):
            return EquivalenceResult(
                "inequivalent",
                screened_by=f"fingerprint mismatch at precision {FINGERPRINT_PRECISION}",
            )
    if n == 12:
        if not (screen and screenable):
            return EquivalenceResult(
                "inconclusive", screened_by="order-12 enumeration unsupported"
            )
        return EquivalenceResult(
            "inconclusive",
            screened_by="fingerprint match is necessary but not sufficient",
        )

    w = _exhaustive_witness(h1, h2, tol)
    if w is None:
        return EquivalenceResult("inequivalent")
    return EquivalenceResult("equivalent", witness=w)


def verify_witness(h1, h2, w, tol=DEFAULT_TOL):
    """Max entrywise error of the witness reproduction of h2 from h1."""
    return float(np.abs(apply_equivalence(h1, w) - as_matrix(h2)).max())
