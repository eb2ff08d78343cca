"""Average-pace window analysis for race position profiles.

A race profile is a strictly increasing piecewise linear position
function on [0, T] covering distance L.  The central question: is there
a sub-interval covering exactly distance d in exactly the average time
T * d / L?  A change of variables turns this into a horizontal chord
question, so the answers inherit the chord-set dichotomy: for L/d a
whole number the window always exists and a proof-following bisection
finds one; otherwise adversarial profiles without any such window can
be constructed.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .builders import SmoothFunction, SmoothShapeSpec, build_levy
from .oracle import ChordQueryResult, has_horizontal_chord
from .piecewise import PiecewiseLinearFunction

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class RaceProfile:
    """Cumulative position (time -> distance) for a race.

    position must start at (0, 0), end at (total_time, total_distance),
    and move strictly forward on every segment.
    """

    total_distance: float
    total_time: float
    position: PiecewiseLinearFunction

    def __post_init__(self) -> None:
        L = float(self.total_distance)
        T = float(self.total_time)
        if not (math.isfinite(L) and L > 0):
            raise ValueError(f"total distance must be positive, got {self.total_distance!r}")
        if not (math.isfinite(T) and T > 0):
            raise ValueError(f"total time must be positive, got {self.total_time!r}")
        object.__setattr__(self, "total_distance", L)
        object.__setattr__(self, "total_time", T)
        pos = self.position
        if pos.xs.size < 2:
            raise ValueError("position must have at least one segment")
        t_tol = DEFAULT_TOL * max(1.0, T)
        d_tol = DEFAULT_TOL * max(1.0, L)
        if abs(pos.x_min) > t_tol or abs(pos.x_max - T) > t_tol:
            raise ValueError(
                f"position must span [0, {T:g}], got [{pos.x_min:g}, {pos.x_max:g}]"
            )
        if abs(float(pos.ys[0])) > d_tol or abs(float(pos.ys[-1]) - L) > d_tol:
            raise ValueError(
                f"position must climb from 0 to {L:g}, got "
                f"{float(pos.ys[0]):g} to {float(pos.ys[-1]):g}"
            )
        gains = np.diff(pos.ys)
        bad = np.nonzero(gains <= 0)[0]
        if bad.size:
            i = int(bad[0])
            raise ValueError(
                "every segment must make strictly forward progress; segment "
                f"{i} (t = {pos.xs[i]:g} to {pos.xs[i + 1]:g}) gains {gains[i]:g}"
            )

    @classmethod
    def constant(cls, total_distance: float, total_time: float) -> "RaceProfile":
        """Perfectly even pacing."""
        pos = PiecewiseLinearFunction(
            np.array([0.0, float(total_time)]), np.array([0.0, float(total_distance)])
        )
        return cls(total_distance, total_time, pos)

    @classmethod
    def from_splits(
        cls, total_distance: float, total_time: float, splits
    ) -> "RaceProfile":
        """Build a profile from cumulative (distance, time) checkpoints.

        The final checkpoint must equal (total_distance, total_time); a
        leading (0, 0) checkpoint may be included or omitted.
        """
        L = float(total_distance)
        T = float(total_time)
        ts = [0.0]
        ds = [0.0]
        for item in splits:
            pair = tuple(item)
            if len(pair) != 2:
                raise ValueError(f"each split must be a (distance, time) pair, got {item!r}")
            d, t = float(pair[0]), float(pair[1])
            if not ts[1:] and abs(d) <= DEFAULT_TOL and abs(t) <= DEFAULT_TOL:
                continue
            ts.append(t)
            ds.append(d)
        if len(ts) < 2:
            raise ValueError("need at least one split beyond the start")
        if abs(ds[-1] - L) > DEFAULT_TOL * max(1.0, L) or abs(ts[-1] - T) > DEFAULT_TOL * max(1.0, T):
            raise ValueError(
                f"final split ({ds[-1]:g}, {ts[-1]:g}) must reach the full "
                f"distance {L:g} and time {T:g}"
            )
        ts[-1] = T
        ds[-1] = L
        try:
            pos = PiecewiseLinearFunction(np.array(ts), np.array(ds))
        except ValueError as exc:
            raise ValueError(f"invalid splits: {exc}") from exc
        return cls(L, T, pos)

    @property
    def average_pace(self) -> float:
        """Seconds per unit distance over the whole race."""
        return self.total_time / self.total_distance

    @property
    def inverse(self) -> PiecewiseLinearFunction:
        """Time as a function of distance (well defined because the
        profile moves strictly forward)."""
        return PiecewiseLinearFunction(self.position.ys, self.position.xs)

    def splits(self) -> list[tuple[float, float]]:
        """Cumulative (distance, time) checkpoints, start omitted."""
        return [
            (float(d), float(t))
            for t, d in zip(self.position.xs[1:], self.position.ys[1:])
        ]


@dataclass(frozen=True)
class WindowExtrema:
    min_time: float
    max_time: float


def _check_window_distance(profile: RaceProfile, d: float) -> float:
    d = float(d)
    L = profile.total_distance
    if not (d > 0):
        raise ValueError(f"window distance must be positive, got {d!r}")
    if d > L * (1.0 + DEFAULT_TOL):
        raise ValueError(f"window distance {d:g} exceeds the total distance {L:g}")
    return min(d, L)


def window_time_extrema(profile: RaceProfile, d: float) -> WindowExtrema:
    """Fastest and slowest time over any sub-interval covering distance d.

    Exact: the elapsed-time function of the window's start distance is
    piecewise linear, so its extrema sit at vertices."""
    d = _check_window_distance(profile, d)
    g = profile.inverse.shift_difference(d)
    return WindowExtrema(float(np.min(g.ys)), float(np.max(g.ys)))


def to_chord_problem(profile: RaceProfile, d: float) -> PiecewiseLinearFunction:
    """Rescale the profile so distance-d average-pace windows become
    horizontal chords of length 1.

    Returns g on [0, L/d] with g(0) = g(L/d) = 0, where g(u) =
    position(u T d / L) - d u.  A chord g(u + 1) = g(u) corresponds to
    the window starting at time u T d / L covering exactly distance d in
    exactly the average time T d / L."""
    d = _check_window_distance(profile, d)
    L = profile.total_distance
    T = profile.total_time
    lam = L / d
    us = profile.position.xs * (lam / T)
    ys = profile.position.ys - d * us
    us = us.copy()
    ys = ys.copy()
    us[0] = 0.0
    us[-1] = lam
    ys[0] = 0.0
    ys[-1] = 0.0
    return PiecewiseLinearFunction(us, ys)


def exists_average_split(
    profile: RaceProfile, d: float, tol: float = DEFAULT_TOL
) -> ChordQueryResult:
    """Decide whether some sub-interval covers distance d at exactly the
    race's average pace.

    The result's ``s`` is the window duration T d / L and ``witness_x``
    the window's start time (None when no window exists).  Exact for
    piecewise linear profiles, up to tol."""
    d = _check_window_distance(profile, d)
    g = to_chord_problem(profile, d)
    res = has_horizontal_chord(g, 1.0, tol)
    window = profile.total_time * d / profile.total_distance
    if not res.exists:
        return ChordQueryResult(False, window)
    t = res.witness_x * window
    t = min(max(t, 0.0), profile.total_time - window)
    return ChordQueryResult(True, window, t)


def find_average_split(profile: RaceProfile, d: float, tol: float = DEFAULT_TOL) -> float:
    """Start time of a distance-d window run at exactly average pace,
    for d dividing the total distance a whole number of times.

    Existence is guaranteed in this case: the n aligned windows of
    duration T / n cover distances summing to L = n d, so either some
    aligned window covers exactly d, or two cover more and less than d
    and a bisection between their start times pins the root of
    (distance covered) - d.  The returned t* satisfies
    |position(t* + T/n) - position(t*) - d| <= tol * d."""
    d = _check_window_distance(profile, d)
    L = profile.total_distance
    T = profile.total_time
    ratio = L / d
    n = round(ratio)
    if n < 1 or abs(ratio - n) > DEFAULT_TOL * max(1.0, ratio):
        raise ValueError(
            f"total distance {L:g} is not a whole-number multiple of {d:g}; "
            "an average-pace window need not exist (use exists_average_split instead)"
        )
    window = T / n
    pos = profile.position

    def covered(t: float) -> float:
        return pos(t + window) - pos(t)

    x0 = None  # earliest aligned start covering more than d
    x1 = None  # earliest aligned start covering less than d
    for k in range(n):
        t = k * window
        r = covered(t) - d
        if abs(r) <= tol * d:
            return t
        if r > 0 and x0 is None:
            x0 = t
        elif r < 0 and x1 is None:
            x1 = t
        if x0 is not None and x1 is not None:
            break
    if x0 is None or x1 is None:
        # Cannot happen for a valid profile: the aligned residues sum to 0.
        raise RuntimeError("aligned windows do not bracket the average distance")
    mid = x0
    for _ in range(200):
        mid = 0.5 * (x0 + x1)
        if mid == x0 or mid == x1:
            break
        r = covered(mid) - d
        if r > 0:
            x0 = mid
        elif r < 0:
            x1 = mid
        else:
            break
    if abs(covered(mid) - d) > tol * d:
        raise RuntimeError(
            f"bisection failed to locate an average-pace window (residual "
            f"{covered(mid) - d:g})"
        )
    return float(min(max(mid, 0.0), T - window))


def from_chord_function(
    g: PiecewiseLinearFunction,
    total_distance: float,
    total_time: float,
    d: float,
    tol: float = DEFAULT_TOL,
) -> RaceProfile:
    """Invert :func:`to_chord_problem`: turn a zero-ended chord function
    on [0, L/d] into a race profile whose distance-d average-pace windows
    are exactly g's unit chords.

    If g's slopes reach the distance budget d in magnitude, the shear
    that adds d per unit would stall or reverse the runner; amplitudes
    are then rescaled so slopes stay within d/2, with a warning.
    """
    L = float(total_distance)
    T = float(total_time)
    d = float(d)
    if not (L > 0 and T > 0 and d > 0):
        raise ValueError("total distance, total time, and window distance must be positive")
    lam = L / d
    scale_tol = tol * max(1.0, lam)
    if abs(g.width - lam) > scale_tol or abs(g.x_min) > scale_tol:
        raise ValueError(
            f"chord function must live on [0, {lam:g}] (= L/d), got "
            f"[{g.x_min:g}, {g.x_max:g}]"
        )
    y_tol = tol * max(1.0, L)
    if abs(float(g.ys[0])) > y_tol or abs(float(g.ys[-1])) > y_tol:
        raise ValueError(
            f"chord function must vanish at both endpoints, got "
            f"{float(g.ys[0]):g} and {float(g.ys[-1]):g}"
        )
    ys = g.ys
    slopes = g.slopes()
    steep = float(np.max(np.abs(slopes))) if slopes.size else 0.0
    if steep >= d:
        factor = (0.5 * d) / steep
        warnings.warn(
            f"chord function slopes reach {steep:g}, at or beyond the window "
            f"distance {d:g}; amplitudes rescaled by {factor:g} to keep the "
            "profile moving forward",
            stacklevel=2,
        )
        ys = ys * factor
    ts = g.xs * (T / lam)
    dist = ys + d * g.xs
    ts = ts.copy()
    dist = np.asarray(dist, dtype=np.float64).copy()
    ts[0] = 0.0
    ts[-1] = T
    dist[0] = 0.0
    dist[-1] = L
    return RaceProfile(L, T, PiecewiseLinearFunction(ts, dist))


def build_adversarial_profile(
    total_distance: float,
    total_time: float,
    d: float,
    phi_kind: str = "triangle_wave",
    tol: float = DEFAULT_TOL,
) -> RaceProfile:
    """A race profile with no distance-d sub-interval at average pace.

    Only possible when L/d is not a whole number (otherwise such a
    window always exists); raises ValueError for whole-number ratios.
    Built by shearing a chord-avoiding function into position form and
    re-verified before returning.
    """
    L = float(total_distance)
    T = float(total_time)
    d = float(d)
    if not (L > 0 and T > 0 and d > 0):
        raise ValueError("total distance, total time, and window distance must be positive")
    ratio = L / d
    if ratio <= 1.0 + 1e-12:
        raise ValueError(
            f"window distance {d:g} must be strictly less than the total distance {L:g}"
        )
    if abs(ratio - round(ratio)) <= DEFAULT_TOL * max(1.0, ratio):
        raise ValueError(
            f"a distance-{d:g} window at exactly average pace is unavoidable when "
            f"{L:g} / {d:g} is a whole number; no adversarial profile exists"
        )
    base = build_levy(ratio, 1.0, SmoothShapeSpec(phi_kind, period=1.0), tol)
    if isinstance(base, SmoothFunction):
        base = base.to_piecewise(8193)
    steep = float(np.max(np.abs(base.slopes())))
    base = base.scaled((0.5 * d) / steep)
    profile = from_chord_function(base, L, T, d, tol)
    check = exists_average_split(profile, d, tol)
    if check.exists:
        raise RuntimeError(
            "internal error: constructed profile still contains an average-pace window"
        )
    return profile
