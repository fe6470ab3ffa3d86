"""
Generate matrices from the built-in families.

Each family lives in its own module under families/ and exposes
validate(params) and get(params).
"""

import logging
import os
import sys
from dataclasses import dataclass, field
from types import ModuleType
from typing import Any, Dict, List, Sequence, Tuple, Union

from . import util
from .bifunction import LabeledBiFunction
from .settings import MODULE_DIR

FAMILY_MODULES: Dict[str, str] = {
    "Ln": "ln",
    "LA": "la",
    "hermitean4": "hermitean4",
    "sobolev": "sobolev",
    "szego0": "szego0",
    "exaSampled": "exa_sampled",
    "randomPm1Pair": "random_pm1_pair",
    "randomRescaledPair": "random_rescaled_pair",
}

Generated = Union[LabeledBiFunction, Tuple[LabeledBiFunction, LabeledBiFunction]]


def list_families() -> List[str]:
    """List the families whose modules are installed."""
    modules = {
        f.name.replace(".py", "")
        for f in os.scandir(os.path.join(MODULE_DIR, "families"))
        if "__" not in f.name and f.name.endswith(".py")
    }
    return [family for family, module in FAMILY_MODULES.items() if module in modules]


def get_family(family: str) -> ModuleType:
    """Import the module for a family."""
    if family not in FAMILY_MODULES:
        raise util.ParameterError(
            f"Unknown family '{family}', expected one of {list(FAMILY_MODULES)}"
        )
    name = f"rescalings.families.{FAMILY_MODULES[family]}"
    __import__(name)
    return sys.modules[name]


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameters: Dict[str, Any] = field(default_factory=dict)

    def validated(self) -> "FamilySpec":
        """Family request with defaults filled in; raises ParameterError on bad input."""
        module = get_family(self.family)
        parameters = module.validate(dict(self.parameters))
        unknown = set(self.parameters) - set(parameters)
        if unknown:
            raise util.ParameterError(
                f"Family '{self.family}' does not take {sorted(unknown)}"
            )
        return FamilySpec(self.family, parameters)


def generate(spec: FamilySpec) -> Generated:
    """Matrix, or (L, M) pair for the pair families."""
    spec = spec.validated()
    logging.info(f"Generating {spec.family} with {spec.parameters}")
    return get_family(spec.family).get(spec.parameters)


def closed_form_det(family: str, points: Sequence[float]) -> float:
    """Product-formula determinant; only the sobolev family has one."""
    if family != "sobolev":
        raise util.ParameterError(f"No closed-form determinant for '{family}'")
    return get_family(family).closed_form_det(points)
