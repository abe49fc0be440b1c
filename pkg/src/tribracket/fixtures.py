"""Bundled tensors and PD codes.

Tensors are ``<name>.tensor`` files and diagrams ``<name>.pd`` files in the
``fixtures`` data directory next to this module.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .algebra import Tribracket, make_tribracket
from .diagram import PDCode, parse_pd
from .formats import loads_tensor

__all__ = ["fixture_dir", "fixture_path", "list_fixtures", "load_pd", "load_tensor_fixture"]

ALIASES = {
    "3_1#3_1": "granny",
    "L10n9{0}": "L10n9_0",
    "L10n9{1}": "L10n9_1",
    "unlink": "unlink2",
}

#: the eighteen links with at most seven crossings, Z_8 table order
Z8_LINKS = (
    "L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1",
    "L7a1", "L7a2", "L7a3", "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2",
)


def fixture_dir() -> Path:
    return Path(str(resources.files("tribracket") / "fixtures"))


def fixture_path(name: str, suffix: str) -> Path:
    name = ALIASES.get(name, name)
    if name.endswith(suffix):
        name = name[: -len(suffix)]
    p = fixture_dir() / f"{name}{suffix}"
    if not p.exists():
        raise FileNotFoundError(f"no fixture named {name!r}")
    return p


def list_fixtures(suffix: str) -> list:
    return sorted(p.stem for p in fixture_dir().glob(f"*{suffix}"))


def load_pd(name: str) -> PDCode:
    return parse_pd(fixture_path(name, ".pd").read_text())


def load_tensor_fixture(name: str) -> Tribracket:
    return make_tribracket(loads_tensor(fixture_path(name, ".tensor").read_text()))
