"""Forward reasoning over a fuzzy Petri net.

A transition is enabled when every input place carries at least the
threshold degree.  Firing deposits ``min(inputs) * mu`` into each output
place, merged by max with whatever degree is already there.  Input degrees
persist, so one proposition can feed any number of rules; reasoning runs
to the least fixpoint above the initial marking, which is independent of
the order transitions are evaluated in.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from concierge.errors import ReasoningBudgetExceededError, ValidationError
from concierge.fpn.model import FuzzyPetriNet, Marking, Transition


@dataclass(frozen=True)
class ReasoningConfig:
    threshold: float = 0.1
    max_iterations: int | None = None  # None -> 10 * |T|
    tolerance: float = 1e-9

    def __post_init__(self):
        if not 0.0 <= self.threshold <= 1.0:
            raise ValidationError("threshold must be in [0, 1]")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValidationError("max_iterations must be positive")
        if self.tolerance < 0:
            raise ValidationError("tolerance must be non-negative")


@dataclass(frozen=True)
class FiringRecord:
    iteration: int
    transition_id: str
    input_degrees: tuple[float, ...]
    produced: float


@dataclass
class FiringTrace:
    records: list[FiringRecord] = field(default_factory=list)

    def transitions_fired(self) -> set[str]:
        return {r.transition_id for r in self.records}

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)


def enabled(t: Transition, m: Marking, threshold: float) -> bool:
    return all(m.get(p) >= threshold for p in t.inputs)


def fire(t: Transition, m: Marking) -> Marking:
    """One firing of ``t``; inputs persist, outputs merge by max."""
    produced = min(m.get(p) for p in t.inputs) * t.mu
    out = m.copy()
    for p in t.outputs:
        if produced > out.get(p):
            out.set(p, produced)
    return out


def run(
    net: FuzzyPetriNet,
    initial: Marking,
    cfg: ReasoningConfig | None = None,
    order: list[str] | None = None,
) -> tuple[Marking, FiringTrace]:
    """Fire enabled transitions until degrees stop changing.

    ``order`` optionally fixes the per-sweep evaluation order (by transition
    id); the fixpoint does not depend on it.  Only firings that raised a
    degree are recorded in the trace.
    """
    cfg = cfg or ReasoningConfig()
    initial.check_against(net)
    marking = initial.copy()
    trace = FiringTrace()

    if order is None:
        schedule = net.transitions
    else:
        by_id = {t.id: t for t in net.transitions}
        try:
            schedule = tuple(by_id[tid] for tid in order)
        except KeyError as exc:
            raise ValidationError(f"unknown transition {exc.args[0]!r} in order") from None
        if len(schedule) != len(net.transitions):
            raise ValidationError("order must list every transition exactly once")

    budget = cfg.max_iterations if cfg.max_iterations is not None else max(1, 10 * len(net.transitions))
    degrees = marking.degrees
    for iteration in range(1, budget + 1):
        sweep_delta = 0.0
        for t in schedule:
            inputs = tuple(degrees.get(p, 0.0) for p in t.inputs)
            if any(d < cfg.threshold for d in inputs):
                continue
            produced = min(inputs) * t.mu
            changed = False
            for p in t.outputs:
                delta = produced - degrees.get(p, 0.0)
                if delta > 0.0:
                    degrees[p] = produced
                    sweep_delta = max(sweep_delta, delta)
                    changed = True
            if changed:
                trace.records.append(FiringRecord(iteration, t.id, inputs, produced))
        if sweep_delta <= cfg.tolerance:
            return marking, trace
    raise ReasoningBudgetExceededError(
        f"no fixpoint within {budget} sweeps (last change {sweep_delta:.3e})"
    )


def query(net: FuzzyPetriNet, m: Marking, proposition_id: str) -> float:
    """Truth degree of a proposition in ``m`` (0 if never touched)."""
    return m.get(net.place_for(proposition_id).id)
