"""Synthetic scenes with ground truth, accuracy scoring and the throughput bench."""
