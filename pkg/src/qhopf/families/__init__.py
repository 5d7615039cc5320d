"""Structure providers for the eight Hopf algebra families."""

from qhopf.families.base import HopfProvider, PowCache, Presentation
from qhopf.families.builder import build

__all__ = ["HopfProvider", "PowCache", "Presentation", "build"]
