"""Bundled default data: a character pinyin table and a built idiom dictionary."""

from __future__ import annotations

from importlib.resources import files
from pathlib import Path

__all__ = ["default_table_path", "default_dict_path"]


def default_table_path() -> Path:
    """Path of the bundled character-to-pinyin TSV table."""
    return Path(str(files("idiomfix.data").joinpath("pinyin_table.tsv")))


def default_dict_path() -> Path:
    """Path of the bundled idiom dictionary JSON."""
    return Path(str(files("idiomfix.data").joinpath("idioms.json")))
