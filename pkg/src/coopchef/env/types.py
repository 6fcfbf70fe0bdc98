"""Core domain types for the cooking world: tiles, items, recipes, config."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class Ingredient(str, Enum):
    TOMATO = "Tomato"
    LETTUCE = "Lettuce"
    ONION = "Onion"


class Recipe(str, Enum):
    ALICE = "Alice"
    BOB = "Bob"
    CATHY = "Cathy"
    DAVID = "David"


# Fixed soup compositions.
RECIPE_INGREDIENTS: dict[Recipe, frozenset[Ingredient]] = {
    Recipe.ALICE: frozenset({Ingredient.LETTUCE, Ingredient.ONION}),
    Recipe.BOB: frozenset({Ingredient.LETTUCE, Ingredient.TOMATO}),
    Recipe.CATHY: frozenset({Ingredient.ONION, Ingredient.TOMATO}),
    Recipe.DAVID: frozenset({Ingredient.LETTUCE, Ingredient.ONION, Ingredient.TOMATO}),
}


def recipe_for_ingredients(kinds: frozenset[Ingredient]) -> Optional[Recipe]:
    for recipe, needed in RECIPE_INGREDIENTS.items():
        if needed == kinds:
            return recipe
    return None


class TileKind(str, Enum):
    FLOOR = "Floor"
    COUNTER = "Counter"
    TOMATO_SOURCE = "TomatoSource"
    LETTUCE_SOURCE = "LettuceSource"
    ONION_SOURCE = "OnionSource"
    CHOP_BOARD = "ChopBoard"
    POT = "Pot"
    PLATE_SOURCE = "PlateSource"
    DELIVERY = "Delivery"
    TRASH_BIN = "TrashBin"
    EXTINGUISHER_STAND = "ExtinguisherStand"


SOURCE_TILES: dict[TileKind, Ingredient] = {
    TileKind.TOMATO_SOURCE: Ingredient.TOMATO,
    TileKind.LETTUCE_SOURCE: Ingredient.LETTUCE,
    TileKind.ONION_SOURCE: Ingredient.ONION,
}


class AtomicAction(str, Enum):
    UP = "Up"
    DOWN = "Down"
    LEFT = "Left"
    RIGHT = "Right"
    NOOP = "Noop"


# (row, col) deltas
ACTION_DELTAS: dict[AtomicAction, tuple[int, int]] = {
    AtomicAction.UP: (-1, 0),
    AtomicAction.DOWN: (1, 0),
    AtomicAction.LEFT: (0, -1),
    AtomicAction.RIGHT: (0, 1),
    AtomicAction.NOOP: (0, 0),
}

Cell = tuple[int, int]


# ---------------------------------------------------------------------------
# Items
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Item:
    """Base class for anything that can be held or sit on a counter."""

    def label(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class RawIngredient(Item):
    kind: Ingredient

    def label(self) -> str:
        return f"Fresh {self.kind.value}"


@dataclass(frozen=True)
class ChoppedIngredient(Item):
    kind: Ingredient

    def label(self) -> str:
        return f"Chopped {self.kind.value}"


@dataclass(frozen=True)
class IngredientMix(Item):
    """One or more chopped ingredients assembled on a counter.

    When ``kinds`` exactly matches a recipe the mix is ready for a pot.
    """

    kinds: frozenset[Ingredient]

    @property
    def recipe(self) -> Optional[Recipe]:
        return recipe_for_ingredients(self.kinds)

    def label(self) -> str:
        recipe = self.recipe
        if recipe is not None:
            return f"{recipe.value} Ingredients"
        names = ", ".join(sorted(k.value for k in self.kinds))
        return f"Mixed ({names})"


@dataclass(frozen=True)
class Plate(Item):
    def label(self) -> str:
        return "Plate"


@dataclass(frozen=True)
class PlatedSoup(Item):
    recipe: Recipe

    def label(self) -> str:
        return f"Plated {self.recipe.value} Soup"


@dataclass(frozen=True)
class CharredSoupPlated(Item):
    def label(self) -> str:
        return "Plated Charred Soup"


@dataclass(frozen=True)
class FireExtinguisher(Item):
    def label(self) -> str:
        return "Fire Extinguisher"


# ---------------------------------------------------------------------------
# Config
# ---------------------------------------------------------------------------


class InvalidConfig(ValueError):
    pass


@dataclass
class GameConfig:
    game_duration: float = 100.0
    tick_rate: float = 2.5
    concurrent_orders: int = 3
    chop_interactions: int = 8
    cook_time: float = 15.0
    overcook_time: float = 25.0
    putout_time: float = 5.0
    order_lifetimes: dict[Recipe, float] = field(
        default_factory=lambda: {
            Recipe.ALICE: 60.0,
            Recipe.BOB: 60.0,
            Recipe.CATHY: 60.0,
            Recipe.DAVID: 70.0,
        }
    )
    order_rewards: dict[Recipe, int] = field(
        default_factory=lambda: {
            Recipe.ALICE: 15,
            Recipe.BOB: 15,
            Recipe.CATHY: 15,
            Recipe.DAVID: 20,
        }
    )
    order_penalty: int = -5
    rng_seed: int = 0
    # Optional fixed order sequence; when set, new orders are drawn from this
    # list (cycling) instead of the seeded RNG.
    order_sequence: Optional[list[Recipe]] = None

    def validate(self) -> None:
        durations = [
            self.game_duration,
            self.cook_time,
            self.overcook_time,
            self.putout_time,
            *self.order_lifetimes.values(),
        ]
        if any(d <= 0 for d in durations):
            raise InvalidConfig("all durations must be > 0")
        if self.concurrent_orders < 1:
            raise InvalidConfig("concurrent_orders must be >= 1")
        if self.tick_rate <= 0:
            raise InvalidConfig("tick_rate must be > 0")
        if self.chop_interactions < 1:
            raise InvalidConfig("chop_interactions must be >= 1")

    @property
    def tick_dt(self) -> float:
        return 1.0 / self.tick_rate


def parse_config_file(text: str) -> GameConfig:
    """Parse the key/value config format.

    Lines are ``key = value``; ``#`` starts a comment. Per-recipe values use
    suffixed keys, e.g. ``order_lifetime_alice = 60``.
    """
    cfg = GameConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidConfig(f"line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        try:
            _apply_config_key(cfg, key, value)
        except (KeyError, ValueError) as exc:
            raise InvalidConfig(f"line {lineno}: {exc}") from exc
    cfg.validate()
    return cfg


def _apply_config_key(cfg: GameConfig, key: str, value: str) -> None:
    floats = {
        "game_duration",
        "tick_rate",
        "cook_time",
        "overcook_time",
        "putout_time",
    }
    ints = {"concurrent_orders", "chop_interactions", "order_penalty", "rng_seed"}
    if key in floats:
        setattr(cfg, key, float(value))
    elif key in ints:
        setattr(cfg, key, int(value))
    elif key.startswith("order_lifetime_"):
        recipe = Recipe(key.removeprefix("order_lifetime_").capitalize())
        cfg.order_lifetimes[recipe] = float(value)
    elif key.startswith("order_reward_"):
        recipe = Recipe(key.removeprefix("order_reward_").capitalize())
        cfg.order_rewards[recipe] = int(value)
    elif key == "order_sequence":
        cfg.order_sequence = [Recipe(name.strip().capitalize()) for name in value.split(",")]
    else:
        raise InvalidConfig(f"unknown config key {key!r}")
