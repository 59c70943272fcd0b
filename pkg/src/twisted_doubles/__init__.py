"""Exact computations with twisted Drinfeld doubles of finite groups and their isomorphisms."""
from __future__ import annotations

from .cocycle import Cocycle3, catalog, cohomologous
from .components import Quadruple, decompose, reconstruct
from .double import TwistedDouble, build_double
from .groups import FiniteGroup
from .morphism import DoubleMap, check_quasi_hopf_morphism, check_rigid

__version__ = "0.1.0"

__all__ = ["Cocycle3", "DoubleMap", "FiniteGroup", "Quadruple", "TwistedDouble", "build_double",
           "catalog", "check_quasi_hopf_morphism", "check_rigid", "cohomologous", "decompose",
           "reconstruct"]
