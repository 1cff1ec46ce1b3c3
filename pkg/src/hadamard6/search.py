"""Alternating-projection search for Hadamard matrices and classification
of order-6 matrices against the known families by fingerprint distance."""

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

import numpy as np

from .core import as_matrix, fingerprint, is_hadamard, modulus_defect, unitarity_defect
from .equivalence import are_equivalent
from .errors import NotHadamard, OrderUnsupported, SingularZ
from .families import dita_d6, family_h, fourier_f6, reduce_params

CLASSIFY_PRECISION = 6
# fingerprint distance below 1e-4 per multiset element is float noise
CLASSIFY_THRESHOLD_PER_VALUE = 1e-4
_CONFIRM_TOL = 1e-5  # fitted params carry ~1e-6 error; exact tol would reject


@dataclass
class SearchConfig:
    rng_seed: int = 0
    tol: float = 1e-8
    max_iter: int = 2000
    seed_matrix: Optional[np.ndarray] = None
    n: int = 6

    def __post_init__(self):
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


@dataclass
class SearchResult:
    matrix: np.ndarray
    iterations: int
    final_defect: float
    converged: bool


@dataclass
class Classification:
    label: str  # F6-slice | F6T-slice | H-family | D6 | unknown
    params: Optional[tuple]
    distance: float


def _defect(m):
    return max(modulus_defect(m), unitarity_defect(m))


def project_search(cfg=None):
    """Alternate unimodular phase normalization with the nearest
    sqrt(n)-scaled unitary (polar factor). Deterministic in rng_seed."""
    cfg = cfg or SearchConfig()
    if cfg.seed_matrix is not None:
        m = as_matrix(cfg.seed_matrix)
    else:
        rng = np.random.default_rng(cfg.rng_seed)
        m = np.exp(2j * np.pi * rng.random((cfg.n, cfg.n)))
    n = m.shape[0]
    root_n = math.sqrt(n)
    d = _defect(m)
    best_d, best_m, best_it = d, m.copy(), 0
    if d <= cfg.tol:
        return SearchResult(m, 0, d, True)
    for it in range(1, cfg.max_iter + 1):
        mod = np.abs(m)
        m = np.where(mod > 0, m / np.where(mod > 0, mod, 1.0), 1.0)
        u, _, vt = np.linalg.svd(m)
        m = root_n * (u @ vt)
        d = _defect(m)
        if d < best_d:
            best_d, best_m, best_it = d, m.copy(), it
        if d <= cfg.tol:
            return SearchResult(m, it, d, True)
    return SearchResult(best_m, cfg.max_iter, best_d, False)


def _refine(dist, p0, w0, lo, hi, wmin=2e-7, max_evals=4000):
    """Compass search on a rugged objective: step to the first improving
    neighbor, halve the step when none improves."""
    p = np.asarray(p0, dtype=float)
    w = float(w0)
    best = dist(p)
    steps = [np.array(s, dtype=float) for s in product((-1, 0, 1), repeat=p.size) if any(s)]
    evals = 0
    while w > wmin and evals < max_evals:
        improved = False
        for s in steps:
            cand = np.clip(p + w * s, lo, hi)
            d = dist(cand)
            evals += 1
            if d < best - 1e-15:
                best, p, improved = d, cand, True
                break
        if not improved:
            w *= 0.5
    return p, best


def _candidates(dist, cells, w0, lo, hi, k_cells, k_out, canon=None):
    """Refine the best k_cells grid cells, dedupe, keep k_out by distance.

    canon maps a point to a representative of its symmetry orbit; without it
    the images of one false minimum can crowd out the true basin.
    """
    canon = canon or (lambda p: p)
    vals = np.array([dist(np.asarray(c, dtype=float)) for c in cells])
    order = np.argsort(vals, kind="stable")[:k_cells]
    out = []
    for idx in order:
        p, d = _refine(dist, cells[idx], w0, lo, hi)
        key = np.asarray(canon(p), dtype=float)
        if any(np.abs(key - np.asarray(q)).max() < 1e-4 for q, _, _ in out):
            continue
        out.append((tuple(float(x) for x in key), tuple(float(x) for x in p), float(d)))
        if len(out) >= k_out:
            break
    return sorted(((p, d) for _, p, d in out), key=lambda t: (t[1], t[0]))


def _microscan(dist, p, lo, hi, radius=0.05, step=0.002):
    """Dense local sampling. The distance surface is a cluster of narrow
    V-shaped wells; compass steps can converge on a false floor a few
    hundredths away from the true zero, so near misses get swept densely."""
    p = np.asarray(p, dtype=float)
    offs = np.arange(-radius, radius + step / 2, step)
    best_p, best_d = p, dist(p)
    if p.size == 1:
        grid = [(o,) for o in offs]
    else:
        grid = product(offs, repeat=p.size)
    for off in grid:
        cand = np.clip(p + np.asarray(off), lo, hi)
        d = dist(cand)
        if d < best_d:
            best_p, best_d = cand, d
    return best_p, best_d


def _polish(dist, cands, lo, hi, threshold, max_rescues=3):
    """Rescue near-miss candidates (above threshold but within two orders)
    with a microscan plus a fine re-refine."""
    out = []
    rescues = 0
    for p, d in cands:
        if threshold < d <= 100 * threshold and rescues < max_rescues:
            rescues += 1
            p2, d2 = _microscan(dist, p, lo, hi)
            if d2 < d:
                p2, d2 = _refine(dist, p2, 0.002, lo, hi)
                p, d = tuple(float(x) for x in p2), float(d2)
        out.append((p, d))
    return sorted(out, key=lambda t: (t[1], t[0]))


_FOURIER_SHIFT = np.pi / 3


def _fourier_canonical(a, b):
    """Lexicographic-min representative of the verified parameter orbit:
    (a,b) ~ (a + k pi/3, b - k pi/3) ~ (a + pi, b) ~ (a, b + pi) ~ (-a, -b)
    ~ (b, a), all mod 2 pi."""
    two_pi = 2 * np.pi
    best = None
    for swap in (False, True):
        u, v = (b, a) if swap else (a, b)
        for neg in (1, -1):
            for j in range(6):
                for k1 in (0, 1):
                    for k2 in (0, 1):
                        aa = (neg * u + j * _FOURIER_SHIFT + k1 * np.pi) % two_pi
                        bb = (neg * v - j * _FOURIER_SHIFT + k2 * np.pi) % two_pi
                        key = (round(aa, 9), round(bb, 9))
                        if best is None or key < best[0]:
                            best = (key, (aa, bb))
    return best[1]


def _sign_swap_images(p):
    u, v = p
    seen, out = set(), []
    for q in (
        (u, v), (-u, -v), (u, -v), (-u, v),
        (v, u), (-v, -u), (v, -u), (-v, u),
    ):
        key = (round(q[0], 9), round(q[1], 9))
        if key not in seen:
            seen.add(key)
            out.append(q)
    return out


def classify(h, grid_n=24):
    """Label an order-6 Hadamard matrix by fingerprint distance to the
    known families, refining grid cells and confirming the orientation of
    parametric fits with exact equivalence checks."""
    h = as_matrix(h)
    if h.shape[0] != 6:
        raise OrderUnsupported("classification grids are order-6 only")
    if not is_hadamard(h, 1e-8):
        raise NotHadamard("classify needs a Hadamard matrix within 1e-8")
    fq = fingerprint(h, CLASSIFY_PRECISION)
    threshold = CLASSIFY_THRESHOLD_PER_VALUE * len(fq)

    def family_dist(build):
        def dist(p):
            try:
                return fingerprint(build(p), CLASSIFY_PRECISION).distance(fq)
            except SingularZ:
                return float("inf")
        return dist

    def confirmed(candidate):
        return (
            are_equivalent(h, candidate, tol=_CONFIRM_TOL, screen=False).decision
            == "equivalent"
        )

    best_overall = float("inf")

    # D6 first: corner ties break toward D6, so no equivalence gate here
    d_dist = family_dist(lambda p: dita_d6(p[0]))
    centers = [(-np.pi / 4 + (i + 0.5) * (np.pi / 2) / grid_n,) for i in range(grid_n)]
    cands = _candidates(
        d_dist, centers, (np.pi / 2) / grid_n, -np.pi / 4, np.pi / 4, 8, 4,
        canon=lambda p: np.abs(p),
    )
    cands = _polish(d_dist, cands, -np.pi / 4, np.pi / 4, threshold)
    best_overall = min(best_overall, cands[0][1])
    if cands[0][1] <= threshold:
        return Classification("D6", (abs(cands[0][0][0]),), cands[0][1])

    # one Fourier scan serves both orientations (fingerprints cannot
    # distinguish a matrix from its transpose)
    f_dist = family_dist(lambda p: fourier_f6(p[0], p[1]))
    step = 2 * np.pi / grid_n
    centers = [((i + 0.5) * step, (j + 0.5) * step) for i in range(grid_n) for j in range(grid_n)]
    cands = _candidates(
        f_dist, centers, step, 0.0, 2 * np.pi, 40, 12,
        canon=lambda p: _fourier_canonical(p[0], p[1]),
    )
    cands = _polish(f_dist, cands, 0.0, 2 * np.pi, threshold)
    best_overall = min(best_overall, cands[0][1])
    if cands[0][1] <= threshold:
        for p, d in cands:
            if d > threshold:
                break
            if confirmed(fourier_f6(*p)):
                return Classification("F6-slice", _fourier_canonical(*p), d)
        for p, d in cands:
            if d > threshold:
                break
            if confirmed(fourier_f6(*p).T):
                return Classification("F6T-slice", _fourier_canonical(*p), d)

    def h_build(p):
        return family_h(p[0], p[1])

    h_dist = family_dist(h_build)
    step = np.pi / grid_n
    centers = [
        (-np.pi / 2 + (i + 0.5) * step, -np.pi / 2 + (j + 0.5) * step)
        for i in range(grid_n)
        for j in range(grid_n)
    ]
    cands = _candidates(
        h_dist, centers, step, -np.pi / 2, np.pi / 2, 40, 6,
        canon=lambda p: sorted(np.abs(p)),
    )
    cands = _polish(h_dist, cands, -np.pi / 2, np.pi / 2, threshold)
    best_overall = min(best_overall, cands[0][1])
    if cands[0][1] <= threshold:
        for p, d in cands:
            if d > threshold:
                break
            # the zero set is the orbit {(+-u, +-v), (+-v, +-u)}; sign flips
            # are equivalent to the query, swaps are its transpose class
            for q in _sign_swap_images(p):
                try:
                    candidate = family_h(*q)
                except SingularZ:
                    continue
                if confirmed(candidate):
                    (r1, r2), _ = reduce_params(abs(q[0]), abs(q[1]))
                    return Classification("H-family", (r1, r2), d)

    return Classification("unknown", None, best_overall)
