"""Constructing a race with no average-pace window at all.

When the total distance is not a whole multiple of the window distance
the existence guarantee evaporates.  For a 3 km race probed in 1.25 km
windows (ratio 2.4) the adversarial builder runs the chord construction
in reverse: a sawtooth-perturbed profile in which every 1.25 km window
misses the average time by the same fixed amount.
"""

from pathlib import Path

from chordlab import (
    build_adversarial_profile,
    exists_average_split,
    profile_to_obj,
    save_json,
    svg_for_curves,
    window_time_extrema,
)


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "demo_output"
    out.mkdir(exist_ok=True)

    L, T, d = 3.0, 1200.0, 1.25
    profile = build_adversarial_profile(L, T, d)
    print(f"{L:g} km in {T:g} s, probing {d:g} km windows "
          f"(ratio {L / d:g}, not a whole number)")
    print("splits (cumulative km, cumulative s):")
    for dist, t in profile.splits():
        print(f"  {dist:6.3f}  {t:7.1f}")

    avg = T * d / L
    ex = window_time_extrema(profile, d)
    print(f"average-pace target for {d:g} km: {avg:g} s")
    print(f"actual {d:g} km window times span "
          f"[{ex.min_time:g}, {ex.max_time:g}] s")

    res = exists_average_split(profile, d)
    print("window found" if res.exists else "no average-pace window exists")

    smooth = build_adversarial_profile(L, T, d, phi_kind="sin_squared")
    res2 = exists_average_split(smooth, d)
    print("smooth-perturbation variant: "
          + ("window found" if res2.exists else "still no window"))

    save_json(profile_to_obj(profile), out / "no_average_mile_profile.json")
    pos = profile.position
    svg = svg_for_curves([(pos.xs, pos.ys)])
    (out / "no_average_mile_profile.svg").write_text(svg)
    print(f"wrote {out / 'no_average_mile_profile.json'}")
    print(f"wrote {out / 'no_average_mile_profile.svg'}")


if __name__ == "__main__":
    main()
