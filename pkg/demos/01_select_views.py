"""Walk through constraint-driven view selection on the population dataset.

A responsive spec is an ordered stack of views, each guarded by quantified
legibility constraints. At any viewport the first view whose constraints all
hold is displayed; if nothing holds, the last view serves as a flagged
fallback. This script evaluates the bundled population spec at a handful of
viewports and prints which view wins and why.
"""

from viewscape import LayoutContext, Viewport, select_view
from viewscape.datasets import load_bundled_dataset, load_bundled_spec


def main() -> None:
    spec = load_bundled_spec("population")
    data = load_bundled_dataset("world_population")
    ctx = LayoutContext(data)  # caches projections and layouts across calls

    print(f"view stack: {' -> '.join(v.id for v in spec.views)}\n")

    for w, h in [(1400, 700), (700, 360), (500, 400), (300, 500), (120, 90)]:
        sel = select_view(spec, data, Viewport(w, h), ctx, evaluate_all=True)
        tag = "  (fallback)" if sel.fallback_used else ""
        print(f"{w:>5} x {h:<5} -> {sel.selected_view_id}{tag}")
        for vid, r in sel.results:
            verdict = "pass" if r.passed else "FAIL"
            print(f"        {vid:<16} {r.kind.value:<22} "
                  f"measured {r.measured:10.3f} vs {r.threshold:<8g} {verdict}")
        print()


if __name__ == "__main__":
    main()
