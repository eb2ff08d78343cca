"""A real half marathon where no 12 km stretch was run at average pace.

Mary Keitany's 2017 London half marathon splits: 9.1 km in 27:00 (a
world-record opening surge), the next 2.9 km slower, then 9.1 km home.
Coarsened to three checkpoints the profile makes every 12 km window
take exactly 38:50, well off the race-average 12 km time of 37:26.

This is the negative side of the dichotomy: 21.1 / 12 is not a whole
number, so a profile with no average-pace 12 km window can exist.
"""

from pathlib import Path

from chordlab import (
    RaceProfile,
    exists_average_split,
    profile_to_obj,
    save_json,
    svg_for_curves,
    to_chord_problem,
    window_time_extrema,
)


def fmt_mmss(seconds: float) -> str:
    m, s = divmod(round(seconds), 60)
    return f"{m}:{s:02d}"


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "demo_output"
    out.mkdir(exist_ok=True)

    profile = RaceProfile.from_splits(
        21.1, 3950.0, [(9.1, 1620.0), (12.0, 2330.0), (21.1, 3950.0)]
    )
    print(f"half marathon: {profile.total_distance} km in {fmt_mmss(profile.total_time)}")
    print(f"average pace: {fmt_mmss(profile.average_pace)} per km")

    d = 12.0
    ex = window_time_extrema(profile, d)
    avg = profile.total_time * d / profile.total_distance
    print(f"every {d:g} km window takes between {fmt_mmss(ex.min_time)} "
          f"and {fmt_mmss(ex.max_time)}")
    print(f"average-pace target for {d:g} km: {fmt_mmss(avg)}")

    res = exists_average_split(profile, d)
    if res.exists:
        print(f"found an average-pace window starting at t = {res.witness_x:.1f} s")
    else:
        print("no sub-interval covers 12 km at average pace")

    g = to_chord_problem(profile, d)
    print(f"equivalent chord problem on [0, {g.width:g}]: "
          f"a horizontal chord of length 1 would be such a window")

    save_json(profile_to_obj(profile), out / "keitany_profile.json")
    svg = svg_for_curves([(g.xs, g.ys)])
    (out / "keitany_chord_problem.svg").write_text(svg)
    print(f"wrote {out / 'keitany_profile.json'}")
    print(f"wrote {out / 'keitany_chord_problem.svg'}")


if __name__ == "__main__":
    main()
