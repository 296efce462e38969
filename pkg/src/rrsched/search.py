"""Exhaustive enumeration of single round-robin game orders, with pruning.

The enumerator builds the game sequence position by position, trying unused
pairs in ascending lexicographic order.  Each of the three optional bounds is
prefix-monotone - once a prefix violates it, no extension can repair it - so
pruning never loses a satisfying schedule and a "none found" answer is a
proof of emptiness over the searched space.

Symmetry breaking (on by default) admits only schedules whose team labels
first appear in ascending order.  Every schedule is a relabeling of such a
schedule, and all measures are invariant under relabeling, so existence and
emptiness answers are unaffected; counts are counts of these canonical
labelings (schedules whose opening game introduces two teams at once still
have interchangeable labels and are not quotiented further).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .model import GamePair, Schedule, expected_length

DEFAULT_TEAM_CEILING = 8
# Unconstrained runs visit every ordering of the n(n-1)/2 games: 15! already
# at six teams.  Refuse those without an explicit override.
_UNCONSTRAINED_REFUSAL = 6

MODES = ("first", "count", "enumerate")


@dataclass(frozen=True)
class SearchConstraints:
    """Optional bounds: rest at least ``min_rest`` between a team's games,
    prefix games-played spread at most ``max_gpd``, per-game rest difference
    at most ``max_rdi``."""

    min_rest: int | None = None
    max_gpd: int | None = None
    max_rdi: int | None = None

    def __post_init__(self):
        for name in ("min_rest", "max_gpd", "max_rdi"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")

    @property
    def unconstrained(self) -> bool:
        return self.min_rest is None and self.max_gpd is None and self.max_rdi is None


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search run.

    ``found`` is set in mode "first" (None when nothing satisfies the
    constraints), ``count`` in mode "count", ``schedules`` in mode
    "enumerate".  ``nodes_explored`` counts accepted placements and is
    independent of the worker count.
    """

    mode: str
    nodes_explored: int
    found: Schedule | None = None
    count: int | None = None
    schedules: tuple[Schedule, ...] = ()


class _State:
    __slots__ = ("n", "total", "pairs", "used", "last", "counts", "seen",
                 "games", "nodes", "min_rest", "max_gpd", "max_rdi", "symmetry")

    def __init__(self, n: int, constraints: SearchConstraints, symmetry: bool):
        self.n = n
        self.total = expected_length(n)
        self.pairs = [(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]
        self.used = dict.fromkeys(self.pairs, False)
        self.last = [0] * (n + 1)
        self.counts = [0] * (n + 1)
        self.seen = 0
        self.games: list[tuple[int, int]] = []
        self.nodes = 0
        self.min_rest = constraints.min_rest
        self.max_gpd = constraints.max_gpd
        self.max_rdi = constraints.max_rdi
        self.symmetry = symmetry


def _extend(state: _State, depth: int,
            forced_first: tuple[int, int] | None = None) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every completed game sequence below the current prefix."""
    if depth > state.total:
        yield tuple(state.games)
        return
    if depth == 1 and forced_first is not None:
        candidates = [forced_first]
    else:
        candidates = state.pairs
    for pair in candidates:
        if state.used[pair]:
            continue
        a, b = pair
        fresh = (state.last[a] == 0) + (state.last[b] == 0)
        if state.symmetry and fresh:
            # Fresh labels must be the next unused ones (a < b throughout).
            if fresh == 2:
                if a != state.seen + 1 or b != state.seen + 2:
                    continue
            elif b != state.seen + 1:
                continue
        rest_a = depth - state.last[a] - 1
        rest_b = depth - state.last[b] - 1
        if state.min_rest is not None:
            if ((state.last[a] and rest_a < state.min_rest)
                    or (state.last[b] and rest_b < state.min_rest)):
                continue
        if state.max_rdi is not None and abs(rest_a - rest_b) > state.max_rdi:
            continue
        counts = state.counts
        counts[a] += 1
        counts[b] += 1
        if state.max_gpd is not None:
            active = counts[1:]
            if max(active) - min(active) > state.max_gpd:
                counts[a] -= 1
                counts[b] -= 1
                continue
        state.nodes += 1
        state.used[pair] = True
        last_a, last_b = state.last[a], state.last[b]
        state.last[a] = state.last[b] = depth
        state.seen += fresh
        state.games.append(pair)
        yield from _extend(state, depth + 1, forced_first)
        state.games.pop()
        state.seen -= fresh
        state.last[a], state.last[b] = last_a, last_b
        state.used[pair] = False
        counts[a] -= 1
        counts[b] -= 1


def _to_schedule(n: int, games: tuple[tuple[int, int], ...]) -> Schedule:
    # Sequences coming out of the enumerator are complete and valid by
    # construction; build the Schedule directly.
    return Schedule(team_count=n, multiplicity=1,
                    games=tuple(GamePair(a, b) for a, b in games))


def _validate_search_args(n, constraints, mode, limit, jobs, allow_large):
    if n < 3:
        raise ValueError(f"search needs at least 3 teams, got {n}")
    if n > DEFAULT_TEAM_CEILING and not allow_large:
        raise ValueError(
            f"search above {DEFAULT_TEAM_CEILING} teams is refused without allow_large"
        )
    if constraints.unconstrained and n >= _UNCONSTRAINED_REFUSAL and not allow_large:
        raise ValueError(
            f"unconstrained search at {n} teams would visit up to "
            f"{expected_length(n)}! orderings; pass allow_large to force it"
        )
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if limit is not None and limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")


def search(n: int, constraints: SearchConstraints | None = None, mode: str = "first",
           limit: int | None = None, *, symmetry_breaking: bool = True, jobs: int = 1,
           allow_large: bool = False) -> SearchOutcome:
    """Run the enumerator over all single round robins on ``n`` teams.

    Modes: "first" returns the lexicographically first satisfying schedule
    (or None), "count" counts all of them, "enumerate" collects up to
    ``limit`` of them in lexicographic order.  Results do not depend on
    ``jobs``; parallel runs split the tree at the first game and merge in
    branch order.
    """
    constraints = constraints if constraints is not None else SearchConstraints()
    _validate_search_args(n, constraints, mode, limit, jobs, allow_large)
    if jobs > 1:
        return _search_parallel(n, constraints, mode, limit, symmetry_breaking, jobs)

    state = _State(n, constraints, symmetry_breaking)
    gen = _extend(state, 1)
    if mode == "first":
        games = next(gen, None)
        gen.close()
        found = _to_schedule(n, games) if games is not None else None
        return SearchOutcome(mode=mode, nodes_explored=state.nodes, found=found)
    if mode == "count":
        total = sum(1 for _ in gen)
        return SearchOutcome(mode=mode, nodes_explored=state.nodes, count=total)
    collected = tuple(_to_schedule(n, g) for g in itertools.islice(gen, limit))
    gen.close()
    return SearchOutcome(mode=mode, nodes_explored=state.nodes, schedules=collected)


def _first_game_branches(n: int, symmetry_breaking: bool) -> list[tuple[int, int]]:
    if symmetry_breaking:
        return [(1, 2)]
    return [(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]


def _run_branch(args):
    """Worker: enumerate one first-game subtree.

    Returns (emissions, emission_nodes, found, total_nodes) where
    emissions[i] was yielded when the node counter read emission_nodes[i]
    (count mode keeps only the tally).  The caller uses the checkpoints to
    report the same node count a sequential run would.
    """
    n, constraint_values, mode, limit, symmetry, first_pair = args
    constraints = SearchConstraints(*constraint_values)
    state = _State(n, constraints, symmetry)
    gen = _extend(state, 1, forced_first=first_pair)
    emissions: list[tuple[tuple[int, int], ...]] = []
    emission_nodes: list[int] = []
    found = 0
    # limit only bounds enumerate mode; count always consumes the full tree.
    cap = 1 if mode == "first" else (limit if mode == "enumerate" else None)
    for games in gen:
        found += 1
        if mode != "count":
            emissions.append(games)
            emission_nodes.append(state.nodes)
        if cap is not None and found >= cap:
            gen.close()
            break
    return emissions, emission_nodes, found, state.nodes


def _search_parallel(n, constraints, mode, limit, symmetry_breaking, jobs) -> SearchOutcome:
    branches = _first_game_branches(n, symmetry_breaking)
    constraint_values = (constraints.min_rest, constraints.max_gpd, constraints.max_rdi)
    tasks = [(n, constraint_values, mode, limit, symmetry_breaking, pair) for pair in branches]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        results = list(pool.map(_run_branch, tasks))

    if mode == "first":
        nodes = 0
        for emissions, emission_nodes, _found, total in results:
            if emissions:
                nodes += emission_nodes[0]
                return SearchOutcome(mode=mode, nodes_explored=nodes,
                                     found=_to_schedule(n, emissions[0]))
            nodes += total
        return SearchOutcome(mode=mode, nodes_explored=nodes, found=None)

    if mode == "count":
        count = sum(found for _, _, found, _ in results)
        nodes = sum(total for _, _, _, total in results)
        return SearchOutcome(mode=mode, nodes_explored=nodes, count=count)

    collected: list[Schedule] = []
    nodes = 0
    for emissions, emission_nodes, _found, total in results:
        if limit is not None and len(collected) + len(emissions) >= limit:
            take = limit - len(collected)
            collected.extend(_to_schedule(n, g) for g in emissions[:take])
            nodes += emission_nodes[take - 1]
            return SearchOutcome(mode=mode, nodes_explored=nodes,
                                 schedules=tuple(collected))
        collected.extend(_to_schedule(n, g) for g in emissions)
        nodes += total
    return SearchOutcome(mode=mode, nodes_explored=nodes, schedules=tuple(collected))


def canonicalize(s: Schedule) -> Schedule:
    """Relabel teams in order of first appearance.

    The first-listed team of the first game becomes 1, its opponent 2, the
    next unseen team 3, and so on; a game that introduces two unseen teams
    takes the next two labels and is emitted ascending.  Idempotent.
    """
    mapping: dict[int, int] = {}
    games = []
    for game in s.games:
        for team in (game.a, game.b):
            if team not in mapping:
                mapping[team] = len(mapping) + 1
        games.append(GamePair(mapping[game.a], mapping[game.b]))
    return Schedule(team_count=s.team_count, multiplicity=s.multiplicity, games=tuple(games))
