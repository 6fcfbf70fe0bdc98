"""Canonical textual rendering of a game snapshot for prompt assembly."""

from __future__ import annotations

from .game import GameState, OrderStatus, PotPhase
from .types import SOURCE_TILES, TileKind


def order_time_phrase(remaining: float, lifetime: float) -> str:
    ratio = remaining / lifetime if lifetime > 0 else 0.0
    if ratio > 0.5:
        return "plenty of time"
    if ratio > 0.2:
        return "some time left"
    return "about to expire"


def orders_text(state: GameState) -> str:
    lines = []
    for order in state.orders:
        if order.status is not OrderStatus.OPEN:
            continue
        remaining = max(0.0, order.deadline - state.clock)
        lifetime = order.deadline - order.issued_at
        lines.append(f"{order.soup.value} Soup with {order_time_phrase(remaining, lifetime)}")
    return "\n".join(lines) if lines else "No open orders"


def orders_with_time_text(state: GameState) -> str:
    lines = []
    for order in state.orders:
        if order.status is not OrderStatus.OPEN:
            continue
        remaining = max(0.0, order.deadline - state.clock)
        lines.append(f"{order.soup.value} Soup ({remaining:.0f} seconds left)")
    return "\n".join(lines) if lines else "No open orders"


def items_text(state: GameState) -> str:
    lines = []
    seen_sources = set()
    for kind in (TileKind.TOMATO_SOURCE, TileKind.LETTUCE_SOURCE, TileKind.ONION_SOURCE):
        if state.map.cells_of(kind) and kind not in seen_sources:
            seen_sources.add(kind)
            lines.append(f"{SOURCE_TILES[kind].value} Source")
    if state.map.cells_of(TileKind.PLATE_SOURCE):
        lines.append("Plate Source")
    for cell in sorted(state.pots):
        pot = state.pots[cell]
        if pot.phase is PotPhase.EMPTY:
            lines.append("Pot (empty)")
        elif pot.phase is PotPhase.COOKING:
            lines.append(f"Pot cooking {pot.recipe.value} Soup")
        elif pot.phase is PotPhase.COOKED:
            lines.append(f"Pot with cooked {pot.recipe.value} Soup")
        elif pot.phase is PotPhase.ON_FIRE:
            lines.append("Pot on fire")
        else:
            lines.append("Pot with charred soup")
    for cell in sorted(state.boards):
        board = state.boards[cell]
        if board.occupant is not None:
            lines.append(f"Chop board with {board.occupant.label()}")
    for cell in sorted(state.counter_items):
        lines.append(f"Counter with {state.counter_items[cell].label()}")
    return "\n".join(lines)


def positions_text(state: GameState) -> str:
    """Item and player coordinates, used by the executor-free agent prompt."""
    lines = []
    for i, player in enumerate(state.players):
        who = "You" if i == 1 else "Human player"
        held = player.held.label() if player.held else "nothing"
        lines.append(f"{who} at {player.position}, holding {held}")
    for cell in sorted(state.counter_items):
        lines.append(f"{state.counter_items[cell].label()} at {cell}")
    for cell in sorted(state.boards):
        board = state.boards[cell]
        if board.occupant is not None:
            lines.append(f"{board.occupant.label()} on chop board at {cell}")
    for cell in sorted(state.pots):
        pot = state.pots[cell]
        lines.append(f"Pot ({pot.phase.value}) at {cell}")
    return "\n".join(lines)


def snapshot_text(state: GameState) -> str:
    """Stable, prompt-ready description of orders, items, and pots."""
    return (
        "Current soup orders:\n"
        + orders_text(state)
        + "\n\nItems on the map:\n"
        + items_text(state)
    )
