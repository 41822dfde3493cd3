"""Shared result types for the three reducers, plus trace replay.

A trace records every mutation a reducer performed.  Replaying a trace
against a fresh copy of the input both validates the recording (any
divergence raises TraceMismatch) and recomputes the amortized charges
from scratch, so the accounting asserted in tests does not trust any
state the reducer kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoSuchEdge, TraceMismatch, UnknownVertex
from .multigraph import MultiGraph


@dataclass(frozen=True)
class TraceStep:
    """One reduction step.

    deleted: working vertices removed without joining the output set.
    contracted: (u, v, survivor) edge contractions, in order.
    accepted: working vertices whose originals joined the output set and
        which left the working graph (their incident edges removed).
    removed_edges: total edge units consumed by this step, including
        units removed by simplification when the step simplifies.
    s_added: original vertex ids added to the output set.
    simplified: True when the step ends with a simplification pass.
    """

    label: str
    deleted: tuple[int, ...] = ()
    contracted: tuple[tuple[int, int, int], ...] = ()
    accepted: tuple[int, ...] = ()
    removed_edges: int = 0
    s_added: tuple[int, ...] = ()
    simplified: bool = False


@dataclass
class ReductionSolution:
    """Output set S over original vertex ids plus the exact bound ratio.

    The guarantee is den * |S| >= den * n - num * m, checked in integers.
    """

    algorithm: str
    n: int
    m: int
    s: set[int]
    bound_num: int
    bound_den: int
    trace: list[TraceStep] = field(default_factory=list)

    def bound_value(self) -> Fraction:
        return Fraction(self.bound_den * self.n - self.bound_num * self.m, self.bound_den)

    def bound_holds(self) -> bool:
        return self.bound_den * len(self.s) >= self.bound_den * self.n - self.bound_num * self.m

    @property
    def deletions(self) -> int:
        return sum(len(step.deleted) for step in self.trace)

    @property
    def edge_events(self) -> int:
        return sum(step.removed_edges for step in self.trace)


@dataclass(frozen=True)
class ChargeReport:
    """Aggregate charges recovered from a replay.

    The scheme charges +1 per consumed edge unit and den/num per deleted
    vertex (4.5 for the pseudoforest ratio 2/9, 5 for 1/5); the total is
    non-negative iff num * edge_events >= den * deletions, stored here
    scaled by num so everything stays integral.
    """

    edge_events: int
    deletions: int
    scaled_charge: int  # num * edge_events - den * deletions

    @property
    def nonnegative(self) -> bool:
        return self.scaled_charge >= 0


def replay(g: MultiGraph, sol: ReductionSolution) -> ChargeReport:
    """Re-execute a trace on a copy of g, verifying every recorded step.

    Raises TraceMismatch if the trace does not apply cleanly, if any
    step's recorded edge-unit count disagrees with the replayed one, or
    if the rebuilt output set differs from the recorded one.
    """
    work = g.copy()
    s: set[int] = set()
    total_units = 0
    deletions = 0
    for idx, step in enumerate(sol.trace):
        units = 0
        try:
            for v in step.deleted:
                units += work.delete_vertex(v)
                deletions += 1
            for u, v, survivor in step.contracted:
                orig = work.origin(u if survivor == v else v)
                work.contract_edge(u, v, survivor)
                if orig not in step.s_added:
                    raise TraceMismatch(
                        f"step {idx}: contracted-away original {orig} missing from s_added"
                    )
                s.add(orig)
                units += 1
            for v in step.accepted:
                orig = work.origin(v)
                units += work.delete_vertex(v)
                if orig not in step.s_added:
                    raise TraceMismatch(
                        f"step {idx}: accepted original {orig} missing from s_added"
                    )
                s.add(orig)
        except (UnknownVertex, NoSuchEdge) as exc:
            raise TraceMismatch(f"step {idx} ({step.label}): {exc}") from exc
        if step.simplified:
            units += work.simplify()
        if units != step.removed_edges:
            raise TraceMismatch(
                f"step {idx} ({step.label}): recorded {step.removed_edges} edge units, "
                f"replay removed {units}"
            )
        if not step.deleted and not step.contracted and not step.accepted:
            raise TraceMismatch(f"step {idx} ({step.label}): no progress recorded")
        total_units += units
    if work.m != 0:
        raise TraceMismatch(f"{work.m} edge units left after replay")
    if s != sol.s:
        raise TraceMismatch("replayed output set differs from recorded set")
    if total_units != sol.m:
        raise TraceMismatch(f"replay consumed {total_units} units, input had {sol.m}")
    scaled = sol.bound_num * total_units - sol.bound_den * deletions
    return ChargeReport(total_units, deletions, scaled)


def aggregate_charge_ok(sol: ReductionSolution) -> bool:
    """num * edge_events >= den * deletions: the whole-run form of the
    +1 per edge / -(den/num) per deletion charging scheme."""
    return sol.bound_num * sol.edge_events >= sol.bound_den * sol.deletions
