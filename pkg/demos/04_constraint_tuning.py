"""Show how tightening one constraint reshapes a landscape.

Raising the matrix label-size threshold pushes the adjacency matrix out of
ever-larger viewports; the arc diagram absorbs the ceded territory. This is
the core designer workflow: edit a threshold, recompute, and watch the
regions move.
"""

from viewscape import LayoutContext, compute_landscape, diff_landscape
from viewscape.datasets import load_bundled_dataset, load_bundled_spec
from viewscape.spec import ConstraintSpec, ResponsiveSpec, ViewSpec


def with_matrix_threshold(spec: ResponsiveSpec, threshold: float) -> ResponsiveSpec:
    matrix = spec.views[0]
    patched = ViewSpec(id=matrix.id, view_type=matrix.view_type, params=matrix.params,
                       constraints=(ConstraintSpec(matrix.constraints[0].kind, threshold),))
    return ResponsiveSpec(views=(patched,) + spec.views[1:],
                          dataset_ref=spec.dataset_ref,
                          landscape_region=spec.landscape_region)


def main() -> None:
    spec = load_bundled_spec("network")
    data = load_bundled_dataset("les_miserables")
    ctx = LayoutContext(data)

    base = compute_landscape(spec, data, step=8, ctx=ctx)
    print(f"{'threshold':>9}  {'matrix':>7} {'arcs':>7} {'node_link':>9}  changed")
    prev = base
    for threshold in [6.0, 8.0, 10.0, 12.0]:
        land = compute_landscape(with_matrix_threshold(spec, threshold), data,
                                 step=8, ctx=ctx)
        shares = land.area_shares()
        changed = diff_landscape(prev, land).changed_fraction
        print(f"{threshold:9.1f}  {shares.get('matrix', 0):7.1%} "
              f"{shares.get('arcs', 0):7.1%} {shares.get('node_link', 0):9.1%}  "
              f"{changed:6.1%}")
        prev = land


if __name__ == "__main__":
    main()
