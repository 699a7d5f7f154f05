"""CLI entrypoint: segment one image and write the scene report."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from src.common.config import ConfigError, add_config_arguments, config_from_args
from src.common.logging import setup_logging
from src.pipeline.pipeline import run_pipeline
from src.pipeline.validations import validate_report
from src.raster.ppm import ImageFormatError, read_image, save_ppm

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_IO = 2
EXIT_CONFIG = 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chromaseg segment", description="Detect, segment and measure colored objects")
    p.add_argument("input", help="PPM (P6) or raw CSRW image")
    p.add_argument("--report", default=None, help="write JSON report here instead of stdout")
    p.add_argument("--annotate", default=None, help="write annotated PPM here")
    p.add_argument("--log-level", default="INFO")
    add_config_arguments(p, ("classifier", "segmentation", "calibration", "pipeline"))
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logger = setup_logging(args.log_level)

    try:
        cfg = config_from_args(args)
    except ConfigError as e:
        logger.error(f"[segment] invalid config: {e}")
        return EXIT_CONFIG

    input_path = Path(args.input)
    try:
        img = read_image(input_path)
    except (OSError, ImageFormatError) as e:
        logger.error(f"[segment] cannot read {input_path}: {e}")
        return EXIT_IO
    logger.info(f"[segment] loaded {input_path.name} {img.width}x{img.height}")

    report, annotated = run_pipeline(img, cfg.pipeline, source=input_path.name)

    errors = validate_report(report)
    if errors:
        for err in errors:
            logger.error(f"[segment] VALIDATION FAILED: {err}")
        return EXIT_INTERNAL

    text = report.to_json()
    try:
        if args.report:
            Path(args.report).write_text(text, encoding="utf-8")
            logger.info(f"[segment] wrote report {args.report}")
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
        if args.annotate:
            Path(args.annotate).write_bytes(save_ppm(annotated))
            logger.info(f"[segment] wrote annotated image {args.annotate}")
    except OSError as e:
        logger.error(f"[segment] write failed: {e}")
        return EXIT_IO

    logger.info(
        f"[segment] objects={len(report.objects)} reference={report.reference_id} "
        f"distances={len(report.distances)}"
    )
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
