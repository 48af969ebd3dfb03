"""Responsibility degrees in concurrent game structures.

Coalitions and states of affairs accept either a comma separated string
(the CLI syntax, where "@label" names an affairs set stored in the model) or
a sequence of names.
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import Optional, Union

from ._core import Model as _Model
from ._core import ModelError

__all__ = ["Model", "ModelError"]

Names = Union[str, Sequence]


def _join(names: Names) -> str:
    return names if isinstance(names, str) else ",".join(names)


class Model:
    """A validated concurrent game structure."""

    def __init__(self, text: str):
        self._core = _Model(text)

    @classmethod
    def load(cls, path) -> "Model":
        with open(path, encoding="utf-8") as f:
            return cls(f.read())

    @property
    def agents(self) -> list:
        return self._core.agents

    @property
    def states(self) -> list:
        return self._core.states

    @property
    def affairs(self) -> dict:
        return self._core.affairs

    @property
    def num_transitions(self) -> int:
        return self._core.num_transitions

    @property
    def content_hash(self) -> str:
        return self._core.content_hash

    def serialize(self) -> str:
        return self._core.serialize()

    def can_preclude(self, coalition: Names, state: str, affairs: Names, semantics: str = "future") -> bool:
        return self._core.can_preclude(_join(coalition), state, _join(affairs), semantics)

    def responsible(self, state: str, affairs: Names, semantics: str = "future",
                    minimal_only: bool = False, threads: int = 1) -> list:
        return self._core.responsible(state, _join(affairs), semantics, minimal_only, threads)

    def sdr(self, coalition: Names, state: str, affairs: Names, semantics: str = "future",
            threads: int = 1) -> tuple[Optional[Fraction], Optional[list]]:
        """(degree, witness); both are None when nobody is responsible."""
        return self._core.sdr(_join(coalition), state, _join(affairs), semantics, threads)

    def fdr(self, coalition: Names, state: str, affairs: Names,
            semantics: str = "future") -> tuple[Fraction, Optional[int], Optional[str]]:
        """(degree, distance, witness); distance is None when unreachable."""
        return self._core.fdr(_join(coalition), state, _join(affairs), semantics)

    def report(self, state: str, affairs: Names, semantics: str = "future", format: str = "json",
               precision: int = 4, threads: int = 1) -> str:
        return self._core.report(state, _join(affairs), semantics, format, precision, threads)
