"""Shared helpers for randomized selector checks."""

from __future__ import annotations

import numpy as np

from viewscape.constraints import evaluate_constraint
from viewscape.core import Viewport
from viewscape.spec import ConstraintKind, ConstraintSpec, ResponsiveSpec, ViewSpec, ViewType

# network view stacks are cheap to evaluate, which keeps large randomized
# oracle comparisons fast
_NETWORK_CHOICES = (
    (ViewType.ADJACENCY_MATRIX, ConstraintKind.MIN_MATRIX_LABEL_SIZE),
    (ViewType.ARC_DIAGRAM, ConstraintKind.MIN_ARC_LABEL_SIZE),
    (ViewType.NODE_LINK, None),
)


def random_network_spec(rng: np.random.RandomState) -> ResponsiveSpec:
    n_views = rng.randint(2, 6)
    views = []
    for i in range(n_views):
        vt, size_kind = _NETWORK_CHOICES[rng.randint(0, len(_NETWORK_CHOICES))]
        constraints = []
        if size_kind is not None and rng.rand() < 0.9:
            constraints.append(ConstraintSpec(size_kind, float(rng.uniform(1.0, 15.0))))
        if rng.rand() < 0.4:
            kind = (ConstraintKind.MIN_ASPECT_RATIO if rng.rand() < 0.5
                    else ConstraintKind.MAX_ASPECT_RATIO)
            constraints.append(ConstraintSpec(kind, float(rng.uniform(0.4, 2.5))))
        views.append(ViewSpec(id=f"v{i}", view_type=vt, params={},
                              constraints=tuple(constraints)))
    return ResponsiveSpec(views=tuple(views))


def oracle_select(spec: ResponsiveSpec, data, v: Viewport, ctx):
    """Evaluate-everything-take-first reference implementation."""
    for view in spec.views:
        if all(evaluate_constraint(c, view, data, v, ctx).passed
               for c in view.constraints):
            return view.id, False
    return spec.views[-1].id, True


def random_viewport(rng: np.random.RandomState) -> Viewport:
    return Viewport(float(rng.uniform(5, 1600)), float(rng.uniform(5, 1000)))
