"""Fundamental group presentations of sapphires and torus bundles"""
from .base import GluingMatrix, h1_of_presentation
from .sapphire import SapphireMatrix, pi1_sapphire
from .torus_bundle import TorusBundleMatrix, pi1_torus_bundle

__all__ = [
    "GluingMatrix",
    "h1_of_presentation",
    "SapphireMatrix",
    "pi1_sapphire",
    "TorusBundleMatrix",
    "pi1_torus_bundle",
]
