"""ASCII map format, validation, and the four shipped kitchen layouts."""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field

from .types import Cell, GameConfig, TileKind

CHAR_TO_TILE = {
    ".": TileKind.FLOOR,
    "X": TileKind.COUNTER,
    "T": TileKind.TOMATO_SOURCE,
    "L": TileKind.LETTUCE_SOURCE,
    "O": TileKind.ONION_SOURCE,
    "C": TileKind.CHOP_BOARD,
    "P": TileKind.POT,
    "S": TileKind.PLATE_SOURCE,
    "D": TileKind.DELIVERY,
    "B": TileKind.TRASH_BIN,
    "E": TileKind.EXTINGUISHER_STAND,
}
TILE_TO_CHAR = {tile: char for char, tile in CHAR_TO_TILE.items()}

REQUIRED_TILES = [
    TileKind.POT,
    TileKind.CHOP_BOARD,
    TileKind.DELIVERY,
    TileKind.TRASH_BIN,
    TileKind.TOMATO_SOURCE,
    TileKind.LETTUCE_SOURCE,
    TileKind.ONION_SOURCE,
    TileKind.PLATE_SOURCE,
    TileKind.EXTINGUISHER_STAND,
]


class InvalidMap(ValueError):
    pass


@dataclass
class MapSpec:
    name: str
    tiles: list[list[TileKind]]
    spawns: list[Cell]  # [human, agent]
    config_overrides: dict = field(default_factory=dict)

    @property
    def height(self) -> int:
        return len(self.tiles)

    @property
    def width(self) -> int:
        return len(self.tiles[0])

    def tile(self, cell: Cell) -> TileKind:
        return self.tiles[cell[0]][cell[1]]

    def in_bounds(self, cell: Cell) -> bool:
        return 0 <= cell[0] < self.height and 0 <= cell[1] < self.width

    def cells_of(self, kind: TileKind) -> list[Cell]:
        return [
            (r, c)
            for r, row in enumerate(self.tiles)
            for c, tile in enumerate(row)
            if tile is kind
        ]

    def validate(self) -> None:
        if not self.tiles or any(len(row) != self.width for row in self.tiles):
            raise InvalidMap("map must be a non-empty rectangle")
        for kind in REQUIRED_TILES:
            if not self.cells_of(kind):
                raise InvalidMap(f"map {self.name!r} is missing a {kind.value} tile")
        if len(self.spawns) != 2:
            raise InvalidMap("map must define exactly two player spawns")
        for cell in self.spawns:
            if self.tile(cell) is not TileKind.FLOOR:
                raise InvalidMap(f"spawn {cell} is not on Floor")


def parse_map(text: str, name: str = "custom", config_overrides: dict | None = None) -> MapSpec:
    tiles: list[list[TileKind]] = []
    spawns: dict[int, Cell] = {}
    for r, line in enumerate(text.rstrip("\n").splitlines()):
        row = []
        for c, char in enumerate(line):
            if char in ("1", "2"):
                spawns[int(char)] = (r, c)
                row.append(TileKind.FLOOR)
            elif char in CHAR_TO_TILE:
                row.append(CHAR_TO_TILE[char])
            else:
                raise InvalidMap(f"unknown map character {char!r} at row {r}, col {c}")
        tiles.append(row)
    if set(spawns) != {1, 2}:
        raise InvalidMap("map must mark player spawns '1' and '2'")
    spec = MapSpec(
        name=name,
        tiles=tiles,
        spawns=[spawns[1], spawns[2]],
        config_overrides=dict(config_overrides or {}),
    )
    spec.validate()
    return spec


# Per-map config deviations from the defaults.
BUILTIN_OVERRIDES: dict[str, dict] = {
    "ring": {},
    "bottleneck": {},
    "partition": {},
    "quick": {"tick_rate": 3.5, "concurrent_orders": 4},
}


def builtin_map_names() -> list[str]:
    return sorted(BUILTIN_OVERRIDES)


def load_builtin_map(name: str) -> MapSpec:
    if name not in BUILTIN_OVERRIDES:
        raise InvalidMap(f"unknown map {name!r}; known: {builtin_map_names()}")
    text = (
        importlib.resources.files("coopchef").joinpath(f"maps/{name}.txt").read_text()
    )
    return parse_map(text, name=name, config_overrides=BUILTIN_OVERRIDES[name])


def apply_map_overrides(config: GameConfig, spec: MapSpec) -> GameConfig:
    for key, value in spec.config_overrides.items():
        setattr(config, key, value)
    return config
