"""SVG drawings of polygon sets and Procedure-2 pieces over the seed box."""

from pathlib import Path
from typing import Iterable

from jinja2 import Environment, FileSystemLoader

from scramble_attack.attack_engine.types import AttackResult
from scramble_attack.exact_geometry import RationalConvexPolygon
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.path_utils import write_text_atomic

THIS_DIR = Path(__file__).parent
SVG_TEMPLATES_DIR = (THIS_DIR / "./templates").resolve().absolute()
SVG_TEMPLATE_NAME = "polygons.svg.j2"
VIEWPORT_SIZE = 1024
FILLS = ("#7aa6e0", "#e0a97a", "#8fd19e", "#d18fbf")


def _environment() -> Environment:
    return Environment(loader=FileSystemLoader(SVG_TEMPLATES_DIR), autoescape=True, keep_trailing_newline=True)


def polygon_path(poly: RationalConvexPolygon, params: ScrambleParams, size: int = VIEWPORT_SIZE) -> str:
    """Path data with ``[0, 2**W)**2`` mapped onto the viewport, y pointing up."""
    scale = size / params.box_side
    points = [(float(x) * scale, size - float(y) * scale) for x, y in poly.vertices]
    head, *rest = points
    return f"M {head[0]:.3f} {head[1]:.3f} " + "".join(f"L {x:.3f} {y:.3f} " for x, y in rest) + "Z"


def render_polygons_svg(
    polygons: Iterable[RationalConvexPolygon], params: ScrambleParams, title: str, description: str = ""
) -> str:
    paths = [
        {"d": polygon_path(poly, params), "fill": FILLS[idx % len(FILLS)]}
        for idx, poly in enumerate(p for p in polygons if not p.is_empty)
    ]
    template = _environment().get_template(SVG_TEMPLATE_NAME)
    return template.render(size=VIEWPORT_SIZE, title=title, description=description, paths=paths)


def write_attack_figures(result: AttackResult, params: ScrambleParams, out_dir: Path) -> list[Path]:
    """One drawing per Procedure-1 set and one per Procedure-2 round."""
    written = []
    for idx, polygon_set in enumerate(result.polygon_sets):
        svg = render_polygons_svg(
            polygon_set.polygons,
            params,
            title=f"Polygon set of pair {idx} (w9={polygon_set.w9}, {len(polygon_set)} polygons)",
            description=f"challenge hash {polygon_set.pair.challenge_hash}",
        )
        written.append(write_text_atomic(out_dir / f"procedure1_{idx}.svg", svg))

    for round_idx, (m, pieces) in enumerate(result.piece_rounds):
        svg = render_polygons_svg(
            (piece.fragment for piece in pieces),
            params,
            title=f"Procedure 2 round {round_idx}: {len(pieces)} pieces at cell exponent {m}",
        )
        written.append(write_text_atomic(out_dir / f"procedure2_{round_idx}_m{m}.svg", svg))
    return written
