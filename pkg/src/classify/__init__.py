"""Dominant-channel color classification."""

from src.classify.colors import SATURATED_RGB, ColorClass
from src.classify.classifier import (
    ClassifierConfig,
    ClassMask,
    classify_image,
    classify_pixel,
    validate_classifier_config,
)

__all__ = [
    "SATURATED_RGB",
    "ClassMask",
    "ClassifierConfig",
    "ColorClass",
    "classify_image",
    "classify_pixel",
    "validate_classifier_config",
]
