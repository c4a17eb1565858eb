"""Compare the landscapes one spec induces on two datasets.

The same population view stack behaves differently on the full world dataset
and on the Americas subset: the subset has fewer, less skewed values, so the
map views stay legible down to smaller viewports. The diff report quantifies
how much of viewport space changes hands.
"""

from viewscape import LayoutContext, compute_landscape, diff_landscape
from viewscape.datasets import load_bundled_dataset, load_bundled_spec


def main() -> None:
    spec = load_bundled_spec("population")
    world = load_bundled_dataset("world_population")
    americas = load_bundled_dataset("americas_population")

    world_land = compute_landscape(spec, world, step=8, ctx=LayoutContext(world))
    am_land = compute_landscape(spec, americas, step=8, ctx=LayoutContext(americas))

    report = diff_landscape(world_land, am_land)
    print(f"cells changed: {report.changed_fraction:.1%}\n")
    print(f"{'view':<16} {'world':>8} {'americas':>9} {'delta':>8}")
    ws, As = world_land.area_shares(), am_land.area_shares()
    for name in sorted(set(ws) | set(As)):
        a, b = ws.get(name, 0.0), As.get(name, 0.0)
        print(f"{name:<16} {a:8.1%} {b:9.1%} {b - a:+8.1%}")


if __name__ == "__main__":
    main()
