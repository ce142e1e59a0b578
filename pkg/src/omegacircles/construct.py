"""Full configurations: the areal construction plus its metric layer."""
from __future__ import annotations

from .areal import TriangleMetric
from .errors import GeometryError
from .figures import DIRECT_PIVOTS, Figure, MNParams, Pivot, PivotKind, build_figure, jk_and_wood
from .formulas import cross_check_formulas
from .similarity import figure_similarity, inverse_images, omega0_omega1


def complete_figure(fig: Figure) -> Figure:
    """Attach R, D, E, F, T, the Omega0/Omega1 pair and, for median-point
    pivots, J, K and the projected triangle A1 B1 C1. Stages that do not
    apply are recorded in ``fig.flags``."""
    metric = fig.metric
    try:
        sim = figure_similarity(fig)
    except GeometryError as exc:
        fig.flags.append(f"similarity: {exc}")
        sim = None
    fig.similarity = sim
    if sim is not None:
        if sim.R is not None:
            fig.points["R"] = sim.R
        if fig.has("U", "V", "W"):
            try:
                inv = inverse_images(sim.fmap, fig["U"], fig["V"], fig["W"], metric, fig.pivot.labels)
                fig.points.update(D=inv.D, E=inv.E, F=inv.F, T=inv.T)
            except GeometryError as exc:
                fig.flags.append(f"inverse-images: {exc}")
        if fig.pivot.kind is PivotKind.OMEGA:
            lines = omega0_omega1(fig, sim.fmap)
            fig.points.update(Omega0=lines.omega0, Omega1=lines.omega1)
    if fig.pivot.kind in DIRECT_PIVOTS:
        try:
            wood = jk_and_wood(fig)
            fig.points.update(J=wood.J, K=wood.K)
            fig.points.update(zip(("A1", "B1", "C1"), wood.images["J"]))
            if wood.factor != 1:
                fig.flags.append(f"enlarged-by-{wood.factor}")
        except GeometryError as exc:
            fig.flags.append(f"wood: {exc}")
    if fig.pivot.kind is PivotKind.OMEGA and isinstance(fig.spec, MNParams):
        fig.ledger = cross_check_formulas(metric, fig.spec.m, fig.spec.n)
    return fig


def construct(metric: TriangleMetric, pivot: Pivot, spec) -> Figure:
    return complete_figure(build_figure(metric, pivot, spec))
