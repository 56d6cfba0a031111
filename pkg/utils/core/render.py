# utils/core/render.py
import logging
from dataclasses import dataclass
from pathlib import Path
from jinja2 import Environment, FileSystemLoader, select_autoescape
from utils.core.config import TEMPLATES_DIR
from utils.core.models import CuttingPlan, Instance
from utils.core.metrics import check_lay_dimensions, utilization_rate

logger = logging.getLogger("hfsc")


# --- Constants ---


PLAN_TEMPLATE = "plan.svg"
MARGIN = 20
LABEL_HEIGHT = 16
LAY_GAP = 12
PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)

templates = Environment(
    loader=FileSystemLoader(TEMPLATES_DIR),
    autoescape=select_autoescape(["svg", "html"]),
    trim_blocks=True,
    lstrip_blocks=True,
)


# --- View models ---


@dataclass(frozen=True)
class ColumnBox:
    x: int
    y: int
    width: int
    height: int
    figure_index: int
    count: int
    fill: str


@dataclass(frozen=True)
class LayBox:
    number: int
    x: int
    y: int
    label: str
    columns: tuple[ColumnBox, ...]


def layout_plan(plan: CuttingPlan, inst: Instance) -> list[LayBox]:
    """
    Places each lay as a bed-sized frame, stacked top to bottom in lay order.
    Inside a frame the templates abut from the left: one box per figure with
    width l_i·q_i and height equal to the lay's layer count.
    """
    boxes = []
    y = MARGIN
    for number, lay in enumerate(plan.lays, start=1):
        check_lay_dimensions(lay, inst)
        bed_y = y + LABEL_HEIGHT
        columns = []
        x = MARGIN
        for i, (length, count) in enumerate(zip(inst.lengths, lay.counts)):
            if count <= 0:
                continue
            width = length * count
            columns.append(ColumnBox(
                x=x,
                y=bed_y + inst.bed_height - lay.height,
                width=width,
                height=lay.height,
                figure_index=i,
                count=count,
                fill=PALETTE[i % len(PALETTE)],
            ))
            x += width
        heights = ",".join(str(h) for h in lay.heights)
        label = f"lay {number}: heights ({heights}), UR {100 * utilization_rate(lay, inst):.2f}%"
        boxes.append(LayBox(number=number, x=MARGIN, y=bed_y, label=label, columns=tuple(columns)))
        y = bed_y + inst.bed_height + LAY_GAP
    return boxes


def render_plan_svg(plan: CuttingPlan, inst: Instance, scale: float = 1.0) -> str:
    """
    Draws a schematic of the plan: one bed rectangle per lay with the
    template columns placed along it. One length unit and one layer are each
    one SVG user unit; scale only sizes the drawing's width and height.
    """
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    lays = layout_plan(plan, inst)
    view_width = inst.bed_length + 2 * MARGIN
    view_height = MARGIN + len(lays) * (LABEL_HEIGHT + inst.bed_height + LAY_GAP) + MARGIN
    return templates.get_template(PLAN_TEMPLATE).render(
        plan=plan,
        inst=inst,
        lays=lays,
        view_width=view_width,
        view_height=view_height,
        width=view_width * scale,
        height=view_height * scale,
        mean_ur_pct=f"{100 * plan.mean_ur:.2f}",
    )


def write_plan_svg(plan: CuttingPlan, inst: Instance, path: str | Path, scale: float = 1.0) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_plan_svg(plan, inst, scale=scale), encoding="utf-8")
    logger.info(f"Rendered {plan.k} lays to {path}")
    return path
