"""Exact chord queries for piecewise linear functions.

For piecewise linear f the shifted difference g(x) = f(x + s) - f(x) is
again piecewise linear, so "does f have a horizontal chord of length s"
reduces to checking g's vertex values and sign changes.  No sampling is
involved; answers are exact up to the tolerance used for "equals zero".

The module also provides a scanning routine that classifies a whole
range of chord lengths, a complement-additivity verifier built on it,
and the sign-change lower bound on guaranteed chord lengths.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .piecewise import PiecewiseLinearFunction

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ChordQueryResult:
    exists: bool
    s: float
    witness_x: float | None = None

    @property
    def witness_pair(self) -> tuple[float, float] | None:
        if self.witness_x is None:
            return None
        return (self.witness_x, self.witness_x + self.s)


def has_horizontal_chord(
    f: PiecewiseLinearFunction, s: float, tol: float = DEFAULT_TOL
) -> ChordQueryResult:
    """Decide whether f(x + s) = f(x) for some x, exactly.

    Returns the leftmost witness x.  A vertex of the shifted difference
    counts as a zero when its value is within tol; between vertices a
    sign change pins an exact interpolated root.
    """
    s = float(s)
    if s < -tol or s > f.width + tol:
        raise ValueError(
            f"chord length {s:g} must lie in [0, {f.width:g}] for this function"
        )
    s = min(max(s, 0.0), f.width)
    g = f.shift_difference(s, tol)
    ys = g.ys
    zero_idx = np.nonzero(np.abs(ys) <= tol)[0]
    first_zero = int(zero_idx[0]) if zero_idx.size else None
    first_cross = None
    if ys.size > 1:
        prods = ys[:-1] * ys[1:]
        cross_idx = np.nonzero(prods < 0)[0]
        if cross_idx.size:
            first_cross = int(cross_idx[0])
    if first_zero is None and first_cross is None:
        return ChordQueryResult(False, s)
    if first_zero is not None and (first_cross is None or first_zero <= first_cross):
        return ChordQueryResult(True, s, float(g.xs[first_zero]))
    i = first_cross
    x0, x1 = float(g.xs[i]), float(g.xs[i + 1])
    y0, y1 = float(ys[i]), float(ys[i + 1])
    witness = x0 - y0 * (x1 - x0) / (y1 - y0)
    return ChordQueryResult(True, s, witness)


@dataclass(frozen=True)
class ChordScan:
    """Membership of each scanned length in the chord set, plus refined
    brackets around every membership flip."""

    lengths: np.ndarray
    membership: np.ndarray
    refined_boundaries: tuple[tuple[float, float], ...]
    resolution: float


def chord_set_scan(
    f: PiecewiseLinearFunction, resolution: float, tol: float = DEFAULT_TOL
) -> ChordScan:
    """Classify chord lengths on a uniform grid over [0, width].

    Each membership flip between adjacent grid points is refined by
    bisection to a bracket of width resolution / 1024, locating the
    chord set's boundary points."""
    w = f.width
    if w <= 0:
        raise ValueError("cannot scan a single-point function")
    resolution = float(resolution)
    if not (0 < resolution <= w):
        raise ValueError(f"resolution must lie in (0, {w:g}], got {resolution:g}")
    n = int(np.floor(w / resolution + 1e-9))
    grid = np.arange(n + 1) * resolution
    guard = 1e-12 * max(1.0, w)
    if grid[-1] < w - guard:
        grid = np.append(grid, w)
    else:
        grid[-1] = w
    member = np.array(
        [has_horizontal_chord(f, float(s), tol).exists for s in grid], dtype=bool
    )
    brackets = []
    for i in np.nonzero(member[:-1] != member[1:])[0]:
        lo, hi = float(grid[i]), float(grid[i + 1])
        m_lo = bool(member[i])
        for _ in range(10):
            mid = 0.5 * (lo + hi)
            if has_horizontal_chord(f, mid, tol).exists == m_lo:
                lo = mid
            else:
                hi = mid
        brackets.append((lo, hi))
    return ChordScan(grid, member, tuple(brackets), resolution)


@dataclass(frozen=True)
class AdditivityCheck:
    holds: bool
    violations: tuple[tuple[float, float, float], ...]


def verify_complement_additivity(
    f: PiecewiseLinearFunction, resolution: float, tol: float = DEFAULT_TOL
) -> AdditivityCheck:
    """Empirically confirm that absent chord lengths are closed under
    addition for this function.

    Scans the chord set, then checks every pairwise sum of absent grid
    lengths: the sum must again be absent.  Sums falling within one
    resolution of a refined set boundary are skipped, since grid
    membership is not trustworthy there.  Violations are returned as
    (a, b, a + b) triples."""
    scan = chord_set_scan(f, resolution, tol)
    w = float(scan.lengths[-1])
    absent = scan.lengths[~scan.membership]
    if absent.size == 0:
        return AdditivityCheck(True, ())
    a = np.repeat(absent, absent.size)
    b = np.tile(absent, absent.size)
    sums = a + b
    keep = sums <= w + 1e-12 * max(1.0, w)
    a, b, sums = a[keep], b[keep], sums[keep]
    if sums.size == 0:
        return AdditivityCheck(True, ())
    idx = np.searchsorted(scan.lengths, sums)
    idx = np.clip(idx, 1, scan.lengths.size - 1)
    left_closer = (sums - scan.lengths[idx - 1]) < (scan.lengths[idx] - sums)
    nearest = np.where(left_closer, idx - 1, idx)
    in_set = scan.membership[nearest]
    near_boundary = np.zeros(sums.shape, dtype=bool)
    for blo, bhi in scan.refined_boundaries:
        near_boundary |= (sums >= blo - resolution) & (sums <= bhi + resolution)
    bad = in_set & ~near_boundary
    violations = tuple(
        (float(x), float(y), float(z)) for x, y, z in zip(a[bad], b[bad], sums[bad])
    )
    return AdditivityCheck(len(violations) == 0, violations)


def sign_changes(f: PiecewiseLinearFunction, tol: float = DEFAULT_TOL) -> int:
    """Count sign alternations among f's nonzero vertex values.

    Requires f to vanish at both endpoints (within tol); vertex values
    with magnitude at most tol are dropped, and the count is the number
    of consecutive opposite-sign pairs in what remains."""
    ys = f.ys
    if abs(float(ys[0])) > tol or abs(float(ys[-1])) > tol:
        raise ValueError(
            "sign change count requires zero endpoint values; got "
            f"f(x_min) = {float(ys[0]):g}, f(x_max) = {float(ys[-1]):g}"
        )
    vals = ys[np.abs(ys) > tol]
    if vals.size < 2:
        return 0
    return int(np.sum(vals[:-1] * vals[1:] < 0))


def levit_bound(f: PiecewiseLinearFunction, tol: float = DEFAULT_TOL) -> float:
    """Largest L such that chords of every length in (0, L] are
    guaranteed, from the sign-change count n: L = width / floor((n+3)/2).

    Applies to functions vanishing at both endpoints."""
    n = sign_changes(f, tol)
    return f.width / float((n + 3) // 2)
