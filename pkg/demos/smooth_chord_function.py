"""Beyond tents: smooth functions with the same prescribed chord set,
and periodic perturbations that avoid one chord length entirely.

Part one swaps the tent profile for exp(-1/(alpha * beta)), where alpha
and beta are the distances to the nearest boundary points below and
above.  The result is smooth away from the boundary, flat to all orders
at every boundary point, and keeps exactly the same sign pattern, so
the chord set is unchanged.

Part two is the classical periodic construction: subtract a linear ramp
from an h-periodic wave and every increment over distance h equals the
same nonzero constant, so chords of length h cannot exist.  It only
fails when the width is a whole multiple of h, which is precisely the
universal chord theorem.
"""

from pathlib import Path

import numpy as np

from chordlab import (
    SmoothShapeSpec,
    build_hopf,
    build_levy,
    eval_smooth,
    has_horizontal_chord,
    parse_interval_set,
    smooth_chord_function,
    smooth_samples_to_obj,
    save_json,
    svg_for_curves,
)

SAWTOOTH = [[0.0, 0.9], [1.1, 1.8], [2.2, 2.7], [3.3, 3.6], [4.4, 4.4]]


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "demo_output"
    out.mkdir(exist_ok=True)

    s = parse_interval_set({"intervals": SAWTOOTH})
    tents = build_hopf(s)
    print("smooth variant at a few points:")
    for x in (0.45, 1.0, 1.45, 4.0):
        print(f"  x = {x:<5g} tent {tents(x):+.4f}   smooth {eval_smooth(s, x):+.3e}")
    print("(gap values are tiny but still strictly negative)")

    smooth = smooth_chord_function(s)
    xs, ys = smooth.sample(1001)
    save_json(smooth_samples_to_obj(xs, ys), out / "smooth_sawtooth.json")
    svg = svg_for_curves([(tents.xs, tents.ys), (xs, ys)])
    (out / "smooth_vs_tents.svg").write_text(svg)
    print(f"wrote {out / 'smooth_sawtooth.json'}")
    print(f"wrote {out / 'smooth_vs_tents.svg'}")
    print()

    # periodic perturbation minus its ramp: no chord of length 1 on [0, 1.5]
    f = build_levy(1.5, 1.0)
    print(f"ramp-corrected triangle wave on [0, {f.width:g}]:")
    grid = np.linspace(0.0, 0.5, 6)
    incs = f(grid + 1.0) - f(grid)
    print(f"  increments over distance 1: {np.round(incs, 6)}")
    print(f"  chord of length 1 exists: {has_horizontal_chord(f, 1.0).exists}")
    print(f"  chord of length 1.5 exists: {has_horizontal_chord(f, 1.5).exists}")

    shape = SmoothShapeSpec("sin_squared", period=1.0, amplitude=1.0)
    g = build_levy(2.5, 1.0, shape)
    gs, gy = g.sample(801)
    incs = np.array([g(x + 1.0) - g(x) for x in np.linspace(0.0, 1.5, 6)])
    print(f"sine-squared variant on [0, {g.width:g}]: increments "
          f"{np.round(incs, 6)}")
    (out / "levy_sin_squared.svg").write_text(svg_for_curves([(gs, gy)]))
    print(f"wrote {out / 'levy_sin_squared.svg'}")

    try:
        build_levy(3.0, 1.0)
    except ValueError as exc:
        print(f"width 3, period 1 is refused: {exc}")


if __name__ == "__main__":
    main()
