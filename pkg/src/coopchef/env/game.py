"""Deterministic discrete-time kitchen simulation.

One tick moves both players (or triggers one tile interaction each), then
advances cooking, fire, and order timers by ``1 / tick_rate`` seconds.
"""

from __future__ import annotations

import copy
import hashlib
import json
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .maps import MapSpec
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
    Item,
    Plate,
    PlatedSoup,
    RawIngredient,
    Recipe,
    SOURCE_TILES,
    TileKind,
)

_EPS = 1e-9


class GameOver(RuntimeError):
    pass


class PotPhase(str, Enum):
    EMPTY = "Empty"
    COOKING = "Cooking"
    COOKED = "Cooked"
    ON_FIRE = "OnFire"
    CHARRED = "CharredOccupied"


@dataclass
class PotState:
    phase: PotPhase = PotPhase.EMPTY
    recipe: Optional[Recipe] = None
    # Cooking: seconds elapsed; Cooked: seconds since done; OnFire: extinguish progress.
    timer: float = 0.0


@dataclass
class BoardState:
    occupant: Optional[Item] = None  # RawIngredient while chopping, then ChoppedIngredient
    progress: int = 0


class OrderStatus(str, Enum):
    OPEN = "Open"
    SERVED = "Served"
    EXPIRED = "Expired"


@dataclass
class Order:
    soup: Recipe
    issued_at: float
    deadline: float
    reward: int
    penalty: int
    status: OrderStatus = OrderStatus.OPEN


@dataclass
class PlayerState:
    position: Cell
    held: Optional[Item] = None


@dataclass
class GameEvent:
    kind: str
    tick: int
    clock: float
    data: dict = field(default_factory=dict)


@dataclass
class GameState:
    map: MapSpec
    config: GameConfig
    players: list[PlayerState]
    pots: dict[Cell, PotState]
    boards: dict[Cell, BoardState]
    counter_items: dict[Cell, Item]
    orders: list[Order]
    clock: float = 0.0
    tick: int = 0
    score: int = 0
    rng: random.Random = field(default_factory=random.Random)
    _order_cursor: int = 0

    # -- queries ---------------------------------------------------------

    @property
    def over(self) -> bool:
        return self.clock >= self.config.game_duration - _EPS

    def open_orders(self) -> list[Order]:
        return [o for o in self.orders if o.status is OrderStatus.OPEN]

    def copy(self) -> "GameState":
        return copy.deepcopy(self)

    def player_at(self, cell: Cell) -> Optional[int]:
        for i, p in enumerate(self.players):
            if p.position == cell:
                return i
        return None

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "map": self.map.name,
            "clock": round(self.clock, 9),
            "tick": self.tick,
            "score": self.score,
            "players": [
                {"position": list(p.position), "held": _item_to_dict(p.held)}
                for p in self.players
            ],
            "pots": {
                _cell_key(cell): {
                    "phase": pot.phase.value,
                    "recipe": pot.recipe.value if pot.recipe else None,
                    "timer": round(pot.timer, 9),
                }
                for cell, pot in sorted(self.pots.items())
            },
            "boards": {
                _cell_key(cell): {
                    "occupant": _item_to_dict(board.occupant),
                    "progress": board.progress,
                }
                for cell, board in sorted(self.boards.items())
            },
            "counters": {
                _cell_key(cell): _item_to_dict(item)
                for cell, item in sorted(self.counter_items.items())
            },
            "orders": [
                {
                    "soup": o.soup.value,
                    "issued_at": round(o.issued_at, 9),
                    "deadline": round(o.deadline, 9),
                    "reward": o.reward,
                    "penalty": o.penalty,
                    "status": o.status.value,
                }
                for o in self.orders
            ],
        }

    def state_hash(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


def _cell_key(cell: Cell) -> str:
    return f"{cell[0]},{cell[1]}"


def _item_to_dict(item: Optional[Item]) -> Optional[dict]:
    if item is None:
        return None
    if isinstance(item, RawIngredient):
        return {"type": "raw", "kind": item.kind.value}
    if isinstance(item, ChoppedIngredient):
        return {"type": "chopped", "kind": item.kind.value}
    if isinstance(item, IngredientMix):
        return {"type": "mix", "kinds": sorted(k.value for k in item.kinds)}
    if isinstance(item, Plate):
        return {"type": "plate"}
    if isinstance(item, PlatedSoup):
        return {"type": "plated_soup", "recipe": item.recipe.value}
    if isinstance(item, CharredSoupPlated):
        return {"type": "charred_plated"}
    if isinstance(item, FireExtinguisher):
        return {"type": "extinguisher"}
    raise TypeError(f"unknown item {item!r}")


def item_from_dict(data: Optional[dict]) -> Optional[Item]:
    if data is None:
        return None
    kind = data["type"]
    if kind == "raw":
        return RawIngredient(Ingredient(data["kind"]))
    if kind == "chopped":
        return ChoppedIngredient(Ingredient(data["kind"]))
    if kind == "mix":
        return IngredientMix(frozenset(Ingredient(k) for k in data["kinds"]))
    if kind == "plate":
        return Plate()
    if kind == "plated_soup":
        return PlatedSoup(Recipe(data["recipe"]))
    if kind == "charred_plated":
        return CharredSoupPlated()
    if kind == "extinguisher":
        return FireExtinguisher()
    raise ValueError(f"unknown item type {kind!r}")


# ---------------------------------------------------------------------------
# Game setup
# ---------------------------------------------------------------------------


def new_game(config: GameConfig, map_spec: MapSpec) -> GameState:
    config.validate()
    map_spec.validate()
    rng = random.Random(config.rng_seed)
    state = GameState(
        map=map_spec,
        config=config,
        players=[PlayerState(position=cell) for cell in map_spec.spawns],
        pots={cell: PotState() for cell in map_spec.cells_of(TileKind.POT)},
        boards={cell: BoardState() for cell in map_spec.cells_of(TileKind.CHOP_BOARD)},
        counter_items={},
        orders=[],
        rng=rng,
    )
    for _ in range(config.concurrent_orders):
        _spawn_order(state)
    return state


def _spawn_order(state: GameState) -> Order:
    cfg = state.config
    if cfg.order_sequence:
        soup = cfg.order_sequence[state._order_cursor % len(cfg.order_sequence)]
        state._order_cursor += 1
    else:
        soup = state.rng.choice(list(Recipe))
    order = Order(
        soup=soup,
        issued_at=state.clock,
        deadline=state.clock + cfg.order_lifetimes[soup],
        reward=cfg.order_rewards[soup],
        penalty=cfg.order_penalty,
    )
    state.orders.append(order)
    return order


# ---------------------------------------------------------------------------
# Stepping
# ---------------------------------------------------------------------------


def step(state: GameState, actions: list[AtomicAction]) -> tuple[GameState, list[GameEvent]]:
    """Apply one action per player, then advance all timers by one tick."""
    if state.over:
        raise GameOver(f"game ended at clock {state.clock:.2f}")
    events: list[GameEvent] = []
    for idx, action in enumerate(actions):
        events.extend(_apply_action(state, idx, action))
    events.extend(_advance_time(state, state.config.tick_dt))
    state.tick += 1
    return state, events


def advance_time_only(state: GameState, dt: float) -> GameState:
    """Advance clocks and timers by ``dt`` seconds without any player input."""
    if dt < 0:
        raise ValueError("dt must be >= 0")
    if dt > 0:
        _advance_time(state, dt)
    return state


def _apply_action(state: GameState, player_idx: int, action: AtomicAction) -> list[GameEvent]:
    if action is AtomicAction.NOOP:
        return []
    player = state.players[player_idx]
    dr, dc = ACTION_DELTAS[action]
    target = (player.position[0] + dr, player.position[1] + dc)
    if not state.map.in_bounds(target):
        return []
    tile = state.map.tile(target)
    if tile is TileKind.FLOOR:
        if state.player_at(target) is None:
            player.position = target
        return []
    return _interact(state, player_idx, target, tile)


def _event(state: GameState, kind: str, **data) -> GameEvent:
    return GameEvent(kind=kind, tick=state.tick, clock=state.clock, data=data)


def _interact(state: GameState, player_idx: int, cell: Cell, tile: TileKind) -> list[GameEvent]:
    player = state.players[player_idx]
    held = player.held

    if tile in SOURCE_TILES:
        if held is None:
            player.held = RawIngredient(SOURCE_TILES[tile])
            return [_event(state, "picked", player=player_idx, item=_item_to_dict(player.held), cell=cell)]
        return []

    if tile is TileKind.PLATE_SOURCE:
        if held is None:
            player.held = Plate()
            return [_event(state, "picked", player=player_idx, item=_item_to_dict(player.held), cell=cell)]
        return []

    if tile is TileKind.COUNTER:
        return _interact_counter(state, player_idx, cell)

    if tile is TileKind.CHOP_BOARD:
        return _interact_board(state, player_idx, cell)

    if tile is TileKind.POT:
        return _interact_pot(state, player_idx, cell)

    if tile is TileKind.DELIVERY:
        return _interact_delivery(state, player_idx, cell)

    if tile is TileKind.TRASH_BIN:
        if held is not None:
            player.held = None
            return [_event(state, "discarded", player=player_idx, item=_item_to_dict(held), cell=cell)]
        return []

    if tile is TileKind.EXTINGUISHER_STAND:
        if held is None:
            player.held = FireExtinguisher()
            return [_event(state, "picked", player=player_idx, item=_item_to_dict(player.held), cell=cell)]
        if isinstance(held, FireExtinguisher):
            player.held = None
            return [_event(state, "stowed_extinguisher", player=player_idx, cell=cell)]
        return []

    return []


def _interact_counter(state: GameState, player_idx: int, cell: Cell) -> list[GameEvent]:
    player = state.players[player_idx]
    held = player.held
    existing = state.counter_items.get(cell)

    if held is None:
        if existing is not None:
            player.held = existing
            del state.counter_items[cell]
            return [_event(state, "picked", player=player_idx, item=_item_to_dict(existing), cell=cell)]
        return []

    if existing is None:
        state.counter_items[cell] = held
        player.held = None
        return [_event(state, "placed", player=player_idx, item=_item_to_dict(existing or held), cell=cell)]

    merged = _merge_items(existing, held)
    if merged is not None:
        state.counter_items[cell] = merged
        player.held = None
        events = [_event(state, "placed", player=player_idx, item=_item_to_dict(held), cell=cell)]
        if isinstance(merged, IngredientMix) and merged.recipe is not None:
            events.append(
                _event(state, "mix_complete", player=player_idx, recipe=merged.recipe.value, cell=cell)
            )
        return events
    return []


def _merge_items(existing: Item, held: Item) -> Optional[Item]:
    """Combine chopped ingredients on a counter toward a recipe, if compatible."""
    def kinds_of(item: Item) -> Optional[frozenset[Ingredient]]:
        if isinstance(item, ChoppedIngredient):
            return frozenset({item.kind})
        if isinstance(item, IngredientMix):
            return item.kinds
        return None

    a, b = kinds_of(existing), kinds_of(held)
    if a is None or b is None or a & b:
        return None
    combined = a | b
    from .types import RECIPE_INGREDIENTS

    if any(combined <= needed for needed in RECIPE_INGREDIENTS.values()):
        return IngredientMix(combined)
    return None


def _interact_board(state: GameState, player_idx: int, cell: Cell) -> list[GameEvent]:
    player = state.players[player_idx]
    board = state.boards[cell]
    held = player.held

    if held is None:
        if board.occupant is None:
            return []
        if isinstance(board.occupant, RawIngredient):
            board.progress += 1
            events = [
                _event(
                    state,
                    "chop_progress",
                    player=player_idx,
                    cell=cell,
                    kind=board.occupant.kind.value,
                    progress=board.progress,
                )
            ]
            if board.progress >= state.config.chop_interactions:
                kind = board.occupant.kind
                board.occupant = ChoppedIngredient(kind)
                board.progress = 0
                events.append(
                    _event(state, "chopped", player=player_idx, cell=cell, kind=kind.value)
                )
            return events
        # finished chopped item: pick it up
        item = board.occupant
        board.occupant = None
        board.progress = 0
        player.held = item
        return [_event(state, "picked", player=player_idx, item=_item_to_dict(item), cell=cell)]

    if isinstance(held, RawIngredient) and board.occupant is None:
        board.occupant = held
        board.progress = 0
        player.held = None
        return [
            _event(
                state, "board_loaded", player=player_idx, cell=cell, kind=held.kind.value
            )
        ]
    return []


def _interact_pot(state: GameState, player_idx: int, cell: Cell) -> list[GameEvent]:
    player = state.players[player_idx]
    pot = state.pots[cell]
    held = player.held

    if pot.phase is PotPhase.EMPTY:
        if isinstance(held, IngredientMix) and held.recipe is not None:
            pot.phase = PotPhase.COOKING
            pot.recipe = held.recipe
            pot.timer = 0.0
            player.held = None
            return [
                _event(state, "cooking_started", player=player_idx, cell=cell, recipe=pot.recipe.value)
            ]
        return []

    if pot.phase is PotPhase.COOKED:
        if isinstance(held, Plate):
            recipe = pot.recipe
            player.held = PlatedSoup(recipe)
            pot.phase = PotPhase.EMPTY
            pot.recipe = None
            pot.timer = 0.0
            return [_event(state, "plated", player=player_idx, cell=cell, recipe=recipe.value)]
        return []

    if pot.phase is PotPhase.ON_FIRE:
        if isinstance(held, FireExtinguisher):
            pot.timer += state.config.tick_dt
            events = [
                _event(
                    state,
                    "extinguish_progress",
                    player=player_idx,
                    cell=cell,
                    progress=round(pot.timer, 9),
                )
            ]
            if pot.timer >= state.config.putout_time - _EPS:
                pot.phase = PotPhase.CHARRED
                pot.timer = 0.0
                events.append(
                    _event(state, "fire_extinguished", player=player_idx, cell=cell, recipe=pot.recipe.value)
                )
            return events
        return []

    if pot.phase is PotPhase.CHARRED:
        if isinstance(held, Plate):
            player.held = CharredSoupPlated()
            recipe = pot.recipe
            pot.phase = PotPhase.EMPTY
            pot.recipe = None
            pot.timer = 0.0
            return [
                _event(state, "charred_plated", player=player_idx, cell=cell, recipe=recipe.value)
            ]
        return []

    return []  # Cooking: nothing to do


def _interact_delivery(state: GameState, player_idx: int, cell: Cell) -> list[GameEvent]:
    player = state.players[player_idx]
    held = player.held
    if not isinstance(held, PlatedSoup):
        return []
    # serve the oldest open order for this soup
    for order in state.orders:
        if order.status is OrderStatus.OPEN and order.soup == held.recipe:
            order.status = OrderStatus.SERVED
            state.score += order.reward
            player.held = None
            events = [
                _event(
                    state,
                    "order_served",
                    player=player_idx,
                    recipe=held.recipe.value,
                    reward=order.reward,
                    score=state.score,
                )
            ]
            new_order = _spawn_order(state)
            events.append(
                _event(state, "order_spawned", recipe=new_order.soup.value, deadline=new_order.deadline)
            )
            return events
    return [_event(state, "delivery_refused", player=player_idx, recipe=held.recipe.value)]


# ---------------------------------------------------------------------------
# Timer advance
# ---------------------------------------------------------------------------


def _advance_time(state: GameState, dt: float) -> list[GameEvent]:
    events: list[GameEvent] = []
    remaining = dt
    # process order expiries chronologically so respawned orders also age
    while remaining > _EPS:
        next_deadline = min(
            (o.deadline for o in state.orders if o.status is OrderStatus.OPEN),
            default=None,
        )
        if next_deadline is None or next_deadline > state.clock + remaining + _EPS:
            chunk = remaining
        else:
            chunk = max(next_deadline - state.clock, 0.0)
        events.extend(_advance_pots(state, chunk))
        state.clock += chunk
        remaining -= chunk
        events.extend(_expire_due_orders(state))
    if dt <= _EPS:
        events.extend(_expire_due_orders(state))
    return events


def _expire_due_orders(state: GameState) -> list[GameEvent]:
    events: list[GameEvent] = []
    for order in state.orders:
        if order.status is OrderStatus.OPEN and state.clock >= order.deadline - _EPS:
            order.status = OrderStatus.EXPIRED
            state.score += order.penalty
            events.append(
                _event(
                    state,
                    "order_expired",
                    recipe=order.soup.value,
                    penalty=order.penalty,
                    score=state.score,
                )
            )
            new_order = _spawn_order(state)
            events.append(
                _event(state, "order_spawned", recipe=new_order.soup.value, deadline=new_order.deadline)
            )
    return events


def _advance_pots(state: GameState, dt: float) -> list[GameEvent]:
    events: list[GameEvent] = []
    cfg = state.config
    for cell, pot in state.pots.items():
        left = dt
        while left > _EPS:
            if pot.phase is PotPhase.COOKING:
                to_done = cfg.cook_time - pot.timer
                if left >= to_done - _EPS:
                    pot.phase = PotPhase.COOKED
                    pot.timer = max(0.0, left - to_done)
                    left = 0.0
                    events.append(_event(state, "cooked", cell=cell, recipe=pot.recipe.value))
                else:
                    pot.timer += left
                    left = 0.0
            elif pot.phase is PotPhase.COOKED:
                to_fire = cfg.overcook_time - pot.timer
                if left >= to_fire - _EPS:
                    pot.phase = PotPhase.ON_FIRE
                    pot.timer = 0.0
                    left = max(0.0, left - to_fire)
                    events.append(_event(state, "fire_started", cell=cell, recipe=pot.recipe.value))
                else:
                    pot.timer += left
                    left = 0.0
            else:
                # Empty, OnFire, Charred: no autonomous transitions
                left = 0.0
    return events
