"""Report rendering: delimited tables plus figure files.

Writes the model's data tables as TSV (and the model document as JSON)
into a directory, together with matplotlib renderings of the AR cycle and
of the crossing relation.  Everything written is deterministic for a
fixed model and tilting object.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import bridge, cyclic
from .cyclic import Model

_PNG_META = {"Software": "taurigid"}


def _display_order(model: Model):
    if model.n != 2:
        return list(model.objects)
    order = [model.objects[0]]
    while len(order) < len(model.objects):
        order.append(cyclic.ar_successor(model, order[-1]))
    return order


def _circle_layout(count: int):
    return [
        (math.cos(math.pi / 2 - 2 * math.pi * i / count),
         math.sin(math.pi / 2 - 2 * math.pi * i / count))
        for i in range(count)
    ]


def render_ar_quiver(model: Model, path: Path) -> None:
    """Objects on a circle; at rank two, arrows along the AR successor cycle."""
    order = _display_order(model)
    pts = _circle_layout(len(order))
    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    if model.n == 2:
        for i in range(len(order)):
            (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % len(order)]
            ax.annotate(
                "",
                xy=(x0 + 0.72 * (x1 - x0), y0 + 0.72 * (y1 - y0)),
                xytext=(x0 + 0.28 * (x1 - x0), y0 + 0.28 * (y1 - y0)),
                arrowprops={"arrowstyle": "->", "color": "0.25"},
            )
    for (x, y), obj in zip(pts, order):
        ax.text(x, y, cyclic.format_object(obj, model.m), ha="center", va="center",
                fontsize=11, bbox={"boxstyle": "round", "fc": "white", "ec": "0.6"})
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"indecomposables of the (n, d) = ({model.n}, {model.d}) model")
    fig.savefig(path, dpi=130, metadata=_PNG_META)
    plt.close(fig)


def render_crossing_graph(model: Model, path: Path) -> None:
    """Chord diagram of the nonvanishing-extension (crossing) relation."""
    order = _display_order(model)
    pts = {obj: pt for obj, pt in zip(order, _circle_layout(len(order)))}
    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    for a, b in model.crossing_edges():
        (x0, y0), (x1, y1) = pts[a], pts[b]
        ax.plot([x0, x1], [y0, y1], color="tab:red", lw=1.2, alpha=0.7, zorder=1)
    for obj, (x, y) in pts.items():
        ax.text(x, y, cyclic.format_object(obj, model.m), ha="center", va="center",
                fontsize=11, zorder=2,
                bbox={"boxstyle": "round", "fc": "white", "ec": "0.6"})
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title("pairs with nonvanishing degree-d extensions")
    fig.savefig(path, dpi=130, metadata=_PNG_META)
    plt.close(fig)


def objects_tsv(model: Model) -> str:
    lines = ["object\tcrosses"]
    for i, x in enumerate(model.objects):
        partners = sorted(model.crossing_neighbors[i])
        lines.append(
            f"{cyclic.format_object(x, model.m)}\t{cyclic.format_sum(partners, model.m)}"
        )
    return "\n".join(lines) + "\n"


def maximal_rigid_tsv(model: Model) -> str:
    lines = ["object\trigid\tmaximal_rigid\tself_perpendicular\tcluster_tilting_by_cardinality"]
    for s in cyclic.enumerate_maximal_rigid(model):
        f = cyclic.classify(model, s)
        lines.append(
            "\t".join(
                [
                    cyclic.format_sum(s, model.m),
                    str(f.rigid).lower(),
                    str(f.maximal_rigid).lower(),
                    str(f.self_perpendicular).lower(),
                    str(f.cluster_tilting).lower(),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def image_table_tsv(ctx: bridge.TiltingContext) -> str:
    lines = ["object\timage"]
    for X, fm in bridge.image_table(ctx):
        val = "+".join(fm.entries) if fm.entries else "0"
        lines.append(f"{cyclic.format_object(X, ctx.model.m)}\t{val}")
    return "\n".join(lines) + "\n"


def image_table_json(ctx: bridge.TiltingContext) -> str:
    rows = [
        {"object": cyclic.format_object(X, ctx.model.m), "image": list(fm.entries)}
        for X, fm in bridge.image_table(ctx)
    ]
    doc = {"schema": "taurigid.image_table", "version": 1,
           "T": cyclic.format_sum(ctx.T, ctx.model.m), "rows": rows}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def delta_table_tsv(ctx: bridge.TiltingContext) -> str:
    lines = ["object\tpair"]
    for X, pair in bridge.delta_table(ctx):
        lines.append(f"{cyclic.format_sum(X, ctx.model.m)}\t{bridge.format_pair(ctx, pair)}")
    return "\n".join(lines) + "\n"


def delta_table_json(ctx: bridge.TiltingContext) -> str:
    rows = [
        {
            "object": cyclic.format_sum(X, ctx.model.m),
            "module_part": list(pair.m_part.entries),
            "projective_part": list(pair.p_part.entries),
        }
        for X, pair in bridge.delta_table(ctx)
    ]
    doc = {"schema": "taurigid.delta", "version": 1,
           "T": cyclic.format_sum(ctx.T, ctx.model.m), "rows": rows}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_report(model: Model, outdir, T=None) -> list[Path]:
    """Write all tables and figures into ``outdir``; returns the written paths.

    The module-side tables need a tilting context and are only produced at
    rank two; pass T to override the canonical choice.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def put(name: str, text: str):
        p = outdir / name
        p.write_text(text, encoding="utf-8")
        written.append(p)

    put("model.json", cyclic.model_to_json(model) + "\n")
    put("objects.tsv", objects_tsv(model))
    put("maximal_rigid.tsv", maximal_rigid_tsv(model))
    if model.n == 2:
        ctx = bridge.build_context(model, T if T is not None else bridge.canonical_T(model))
        put("image_table.tsv", image_table_tsv(ctx))
        put("image_table.json", image_table_json(ctx))
        put("delta_table.tsv", delta_table_tsv(ctx))
        put("delta_table.json", delta_table_json(ctx))
    for name, renderer in (("ar_quiver.png", render_ar_quiver),
                           ("crossing_graph.png", render_crossing_graph)):
        p = outdir / name
        renderer(model, p)
        written.append(p)
    return sorted(written)
