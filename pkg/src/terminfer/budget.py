"""Deterministic fuel budgets and analysis diagnostics.

Each potentially expensive stage (numeric model, level-mapping constraint
setup, level-mapping extraction, boolean model, termination conditions) gets
a fresh budget per SCC, counted in abstract-domain operations rather than
wall-clock time so results are reproducible.  The CLI's millisecond knob is
mapped onto fuel with a fixed documented rate (FUEL_PER_MS).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .terms import PredId

FUEL_PER_MS = 50
DEFAULT_TIMEOUT_MS = 2000


class FuelExhausted(Exception):
    pass


class Fuel:
    """Countdown of domain operations; None means unlimited."""

    __slots__ = ("remaining",)

    def __init__(self, budget: int | None):
        self.remaining = budget

    def spend(self, n: int = 1) -> None:
        if self.remaining is None:
            return
        self.remaining -= n
        if self.remaining < 0:
            raise FuelExhausted()


@dataclass(frozen=True)
class Diagnostic:
    scc: frozenset[PredId]
    step: str  # one of "2", "3a", "3b", "4", "5"
    note: str

    def render(self) -> str:
        members = ",".join(str(p) for p in sorted(self.scc))
        return "diagnostic: scc={%s} step=%s: %s" % (members, self.step, self.note)


@dataclass
class AnalysisParams:
    """Knobs shared by the pipeline stages.

    widen_delay: number of plain hull iterations per SCC before the numeric
    fixpoint switches to widening.  fuel_per_step: budget per (stage, SCC);
    None disables budgeting (test mode).
    """

    widen_delay: int = 1
    fuel_per_step: int | None = DEFAULT_TIMEOUT_MS * FUEL_PER_MS
    fuel_overrides: dict[str, int | None] = field(default_factory=dict)

    def fuel_for(self, step: str) -> Fuel:
        if step in self.fuel_overrides:
            return Fuel(self.fuel_overrides[step])
        return Fuel(self.fuel_per_step)

    @classmethod
    def from_timeout_ms(cls, ms: int, widen_delay: int = 1) -> "AnalysisParams":
        return cls(widen_delay=widen_delay, fuel_per_step=ms * FUEL_PER_MS)
