"""The 21 high-level macro actions and their canonical surface forms."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .env.types import Ingredient, Recipe


class Verb(str, Enum):
    CHOP = "Chop"
    MIX = "Mix"
    COOK = "Cook"
    PLATE = "Plate"
    SERVE = "Serve"
    PUTOUT = "Putout"
    DROP = "Drop"


@dataclass(frozen=True)
class MacroAction:
    verb: Verb
    target: Optional[Union[Ingredient, Recipe]] = None

    @property
    def name(self) -> str:
        if self.verb is Verb.CHOP:
            return f"Chop {self.target.value}"
        if self.verb is Verb.MIX:
            return f"Prepare {self.target.value} Ingredients"
        if self.verb in (Verb.COOK, Verb.PLATE, Verb.SERVE):
            return f"{self.verb.value} {self.target.value} Soup"
        return self.verb.value

    def __str__(self) -> str:
        return self.name


def _build_catalog() -> list[MacroAction]:
    catalog = [MacroAction(Verb.CHOP, k) for k in (Ingredient.TOMATO, Ingredient.LETTUCE, Ingredient.ONION)]
    catalog += [MacroAction(Verb.MIX, r) for r in Recipe]
    catalog.append(MacroAction(Verb.PUTOUT))
    catalog += [MacroAction(Verb.COOK, r) for r in Recipe]
    catalog += [MacroAction(Verb.PLATE, r) for r in Recipe]
    catalog += [MacroAction(Verb.SERVE, r) for r in Recipe]
    catalog.append(MacroAction(Verb.DROP))
    return catalog


# Fixed ordering; also the deterministic tie-break order for selection.
MACRO_CATALOG: list[MacroAction] = _build_catalog()
MACRO_BY_NAME: dict[str, MacroAction] = {m.name: m for m in MACRO_CATALOG}
CATALOG_INDEX: dict[MacroAction, int] = {m: i for i, m in enumerate(MACRO_CATALOG)}


def parse_macro(text: str) -> Optional[MacroAction]:
    """Parse a macro surface form, tolerating case and trailing punctuation."""
    cleaned = " ".join(text.strip().strip(".!?").split())
    for name, macro in MACRO_BY_NAME.items():
        if cleaned.lower() == name.lower():
            return macro
    return None
