"""Rasterize view landscapes for every bundled spec and render them to images.

A view landscape samples the selector over a grid of viewports, labelling
each cell with the winning view. The fast path exploits that size-based
constraints are monotone in viewport size (a per-view frontier found by
binary search per column), and produces a grid identical to the exhaustive
scan. Outputs land in demos/output/.
"""

import time
from pathlib import Path

from viewscape import LayoutContext, compute_landscape, extract_breakpoints, render_landscape
from viewscape.datasets import load_bundled_dataset, load_bundled_spec

PAIRS = [
    ("population", "world_population"),
    ("uk_election", "uk_election"),
    ("network", "les_miserables"),
    ("movies", "movies"),
]


def main() -> None:
    out_dir = Path(__file__).parent / "output"
    out_dir.mkdir(exist_ok=True)

    for spec_name, data_name in PAIRS:
        spec = load_bundled_spec(spec_name)
        data = load_bundled_dataset(data_name)
        ctx = LayoutContext(data)

        t0 = time.time()
        land = compute_landscape(spec, data, step=4, mode="monotone_fast", ctx=ctx)
        elapsed = time.time() - t0

        print(f"{spec_name}: {land.labels.shape[1]}x{land.labels.shape[0]} cells "
              f"in {elapsed:.2f}s")
        for name, share in sorted(land.area_shares().items(), key=lambda kv: -kv[1]):
            print(f"    {name:<16} {share:6.1%}")

        bp = extract_breakpoints(land)
        print(f"    {len(bp.boundaries)} boundary pair(s): "
              f"{', '.join('|'.join(k) for k in sorted(bp.boundaries))}")

        png = out_dir / f"{spec_name}.png"
        png.write_bytes(render_landscape(land, format="png"))
        svg = out_dir / f"{spec_name}.svg"
        svg.write_bytes(render_landscape(land, format="svg"))
        print(f"    wrote {png.name}, {svg.name}\n")


if __name__ == "__main__":
    main()
