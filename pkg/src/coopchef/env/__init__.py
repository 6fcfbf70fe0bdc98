from .game import (
    BoardState,
    GameEvent,
    GameOver,
    GameState,
    Order,
    OrderStatus,
    PlayerState,
    PotPhase,
    PotState,
    advance_time_only,
    item_from_dict,
    new_game,
    step,
)
from .maps import (
    InvalidMap,
    MapSpec,
    apply_map_overrides,
    builtin_map_names,
    load_builtin_map,
    parse_map,
)
from .text import items_text, orders_text, orders_with_time_text, positions_text, snapshot_text
from .types import (
    ACTION_DELTAS,
    AtomicAction,
    Cell,
    CharredSoupPlated,
    ChoppedIngredient,
    FireExtinguisher,
    GameConfig,
    Ingredient,
    IngredientMix,
    InvalidConfig,
    Item,
    Plate,
    PlatedSoup,
    RawIngredient,
    Recipe,
    RECIPE_INGREDIENTS,
    SOURCE_TILES,
    TileKind,
    parse_config_file,
)

__all__ = [name for name in dir() if not name.startswith("_")]
