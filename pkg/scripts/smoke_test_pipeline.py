#!/usr/bin/env python3
"""
Smoke test for the command-line pipeline.
Generates a scene, segments it and checks the report against ground truth.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run_cli(root: Path, *args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, str(root / "chromaseg.py"), *args],
        capture_output=True,
        text=True,
        timeout=120,
    )


def smoke_test_pipeline():
    """Run smoke tests on gen-scene + segment."""
    root = Path(__file__).parent.parent.resolve()

    print("Running pipeline smoke tests...")
    print(f"Project root: {root}\n")

    errors = []
    warnings = []

    for rel in ("chromaseg.py", "configs/chromaseg.yaml", "src/__init__.py"):
        if (root / rel).exists():
            print(f"[OK] {rel} exists")
        else:
            errors.append(f"{rel} not found")
            print(f"[ERROR] {rel} not found")

    with tempfile.TemporaryDirectory() as tmp:
        work = Path(tmp)
        scene = work / "scene.ppm"
        annotated = work / "scene.annotated.ppm"

        print("\n[TEST] gen-scene...")
        result = run_cli(root, "gen-scene", "--out", str(scene), "--seed", "7")
        truth_path = work / "scene.truth.json"
        if result.returncode == 0 and scene.exists() and truth_path.exists():
            print(f"[OK] scene written ({scene.stat().st_size} bytes)")
        else:
            errors.append(f"gen-scene failed (exit {result.returncode}): {result.stderr.strip()}")
            print(f"[ERROR] gen-scene failed (exit {result.returncode})")

        if not errors:
            print("\n[TEST] segment...")
            result = run_cli(root, "segment", str(scene), "--annotate", str(annotated))
            if result.returncode != 0:
                errors.append(f"segment failed (exit {result.returncode}): {result.stderr.strip()}")
                print(f"[ERROR] segment failed (exit {result.returncode})")
            else:
                report = json.loads(result.stdout)
                truth = json.loads(truth_path.read_text(encoding="utf-8"))
                expected = len(truth["shapes"])
                found = len(report["objects"])
                if found == expected:
                    print(f"[OK] {found} objects detected")
                else:
                    errors.append(f"detected {found} objects, ground truth has {expected}")
                    print(f"[ERROR] detected {found} objects, ground truth has {expected}")

                if report["reference_id"] is None:
                    warnings.append("no green reference object in scene")
                    print("[WARNING] no green reference object in scene")
                else:
                    print(f"[OK] reference id {report['reference_id']}, {len(report['distances'])} distances")

                if annotated.exists() and annotated.read_bytes().startswith(b"P6\n"):
                    print("[OK] annotated image written")
                else:
                    errors.append("annotated image missing or not P6")
                    print("[ERROR] annotated image missing or not P6")

        print("\n[TEST] error exit codes...")
        result = run_cli(root, "segment", str(work / "absent.ppm"))
        if result.returncode == 2:
            print("[OK] missing input -> exit 2")
        else:
            errors.append(f"missing input gave exit {result.returncode}, expected 2")
            print(f"[ERROR] missing input gave exit {result.returncode}, expected 2")

    print("\n" + "=" * 60)
    if errors:
        print("SMOKE TEST FAILED")
        print("=" * 60)
        for error in errors:
            print(f"  ERROR: {error}")
        if warnings:
            print("\nWarnings:")
            for warning in warnings:
                print(f"  WARNING: {warning}")
        return False
    print("SMOKE TEST PASSED")
    print("=" * 60)
    if warnings:
        print("Warnings:")
        for warning in warnings:
            print(f"  WARNING: {warning}")
    return True


if __name__ == "__main__":
    success = smoke_test_pipeline()
    sys.exit(0 if success else 1)
