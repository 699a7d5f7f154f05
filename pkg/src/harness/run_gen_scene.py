"""CLI entrypoint: render a synthetic scene and its ground truth."""

from __future__ import annotations

import argparse
from pathlib import Path

from src.common.config import ConfigError, add_config_arguments, config_from_args
from src.common.logging import setup_logging
from src.harness.scene import SceneSpec, SceneSpecError, ShapeSpec, gen_scene
from src.harness.scoring import score_scene
from src.pipeline.pipeline import run_pipeline
from src.raster.ppm import save_ppm

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_IO = 2
EXIT_CONFIG = 3


def truth_path_for(image_path: Path) -> Path:
    return image_path.with_name(image_path.stem + ".truth.json")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chromaseg gen-scene", description="Generate a synthetic test scene")
    p.add_argument("--out", required=True, help="output PPM path")
    p.add_argument("--truth", default=None, help="ground-truth JSON path (default: <out stem>.truth.json)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=480)
    p.add_argument(
        "--shape",
        action="append",
        default=[],
        help="explicit shape color:kind:x,y:WxH (repeatable; disables random placement)",
    )
    p.add_argument("--check", action="store_true", help="run the pipeline on the scene and score it")
    p.add_argument("--log-level", default="INFO")
    add_config_arguments(p, ("classifier", "segmentation", "calibration", "pipeline"))
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logger = setup_logging(args.log_level)

    try:
        cfg = config_from_args(args)
        seg = cfg.pipeline.segmentation
        spec = SceneSpec(
            seed=args.seed,
            width=args.width,
            height=args.height,
            shapes=tuple(ShapeSpec.parse(s) for s in args.shape),
            min_gap_px=seg.gap_px,
            min_area_px=seg.min_area_px,
        )
        img, truth = gen_scene(spec)
    except (ConfigError, SceneSpecError) as e:
        logger.error(f"[scene] {e}")
        return EXIT_CONFIG

    out = Path(args.out)
    truth_out = Path(args.truth) if args.truth else truth_path_for(out)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(save_ppm(img))
        truth_out.write_text(truth.to_json(), encoding="utf-8")
    except OSError as e:
        logger.error(f"[scene] write failed: {e}")
        return EXIT_IO
    logger.info(f"[scene] wrote {out} ({img.width}x{img.height}, {len(truth.shapes)} shapes) truth={truth_out}")

    if args.check:
        report, _ = run_pipeline(img, cfg.pipeline, source=out.name)
        score = score_scene(report, truth, seg.min_area_px)
        logger.info(
            f"[scene] check: detected {score.detected}/{score.expected} "
            f"max_centroid_err={score.max_centroid_error:.3f}px "
            f"max_distance_err={score.max_distance_error:.3f}px"
        )
        if score.detected != score.expected:
            return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
