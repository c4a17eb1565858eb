"""View selection: the first view in the stack whose constraints all pass."""

from __future__ import annotations

from dataclasses import dataclass, field

from .constraints import ConstraintResult, evaluate_constraint
from .core import Viewport
from .layouts import LayoutContext
from .spec import ResponsiveSpec


class SelectionError(RuntimeError):
    def __init__(self, view_id, cause):
        super().__init__(f"evaluation failed for view {view_id!r}: {cause}")
        self.view_id = view_id
        self.cause = cause


@dataclass(frozen=True)
class Selection:
    selected_view_id: str
    results: tuple  # (view id, ConstraintResult), in evaluation order
    fallback_used: bool

    def to_dict(self) -> dict:
        return {
            "view": self.selected_view_id,
            "fallback": self.fallback_used,
            "results": [{"view": vid, "constraint": r.kind.value, "measured": r.measured,
                         "threshold": r.threshold, "passed": r.passed}
                        for vid, r in self.results],
        }


def select_view(spec: ResponsiveSpec, data, v: Viewport,
                ctx: LayoutContext | None = None, evaluate_all: bool = False) -> Selection:
    """Walk the view stack in preference order and return the first view whose
    constraints all pass; the last view is the fallback when none does.

    With ``evaluate_all`` every constraint of every view is evaluated and
    reported (debugging aid); selection is unchanged.
    """
    ctx = ctx or LayoutContext(data)
    results = []
    selected = None
    fallback = False
    for view in spec.views:
        view_ok = True
        for c in view.constraints:
            try:
                r = evaluate_constraint(c, view, data, v, ctx)
            except Exception as e:  # propagate with the offending view id
                raise SelectionError(view.id, e) from e
            results.append((view.id, r))
            if not r.passed:
                view_ok = False
                if not evaluate_all:
                    break
        if view_ok and selected is None:
            selected = view.id
            if not evaluate_all:
                break
    if selected is None:
        selected = spec.views[-1].id
        fallback = True
    return Selection(selected_view_id=selected, results=tuple(results), fallback_used=fallback)
