"""Schedule constructions.

Two single-round-robin generators plus a round-duplication operator:

* :func:`circle_schedule` - the classic rotating-table ("circle") method for
  any number of teams.
* :func:`odd_optimal_schedule` - a slot-table construction for an odd number
  of teams that simultaneously maximizes the guaranteed rest time and keeps
  both difference indices at 1.
* :func:`duplicate_rounds` - turns a single round robin into an m-fold one by
  repeating each round block m times.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import GamePair, Schedule, make_schedule, round_structure

_DUMMY = 0


def circle_schedule(n: int) -> Schedule:
    """Single round robin for ``n`` teams by the circle method.

    Teams sit in two rows: top row 1..n/2 left to right, bottom row n down to
    n/2+1, so the first round is (1,n), (2,n-1), ...  Each round's games are
    the aligned columns read left to right.  Between rounds the top-left seat
    stays fixed and every other team advances one seat counterclockwise:
    bottom-left up to the second top seat, along the top row, down at the
    right end, and back along the bottom row.

    For odd ``n`` a dummy occupies the fixed top-left seat with team n seated
    below it; the dummy's opponent sits out the round and the remaining
    columns are read left to right as before.
    """
    if n < 2:
        raise ValueError(f"need at least 2 teams, got {n}")
    if n % 2 == 0:
        cols = n // 2
        top = list(range(1, cols + 1))
        bottom = list(range(n, cols, -1))
    else:
        cols = (n + 1) // 2
        top = [_DUMMY] + list(range(1, cols))
        bottom = list(range(n, cols - 1, -1))

    rounds = round_structure(n).r
    games: list[GamePair] = []
    for round_no in range(rounds):
        for x, y in zip(top, bottom):
            if x != _DUMMY:
                games.append(GamePair(x, y))
        if round_no < rounds - 1:
            top, bottom = [top[0], bottom[0]] + top[1:-1], bottom[1:] + [top[-1]]
    return make_schedule(n, 1, games)


@dataclass(frozen=True)
class SlotAssignment:
    """Per-round slot table for an odd number of teams.

    ``slots[j-1][t-1]`` is the slot of team t in round j.  Slots run 0..k
    where k = (n-1)/2; slot 0 means the team sits out (its bye).  Every round
    seats exactly two teams in each of slots 1..k and exactly one team in
    slot 0, and each team has exactly one bye across the rounds.
    """

    n: int
    slots: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = self.games_per_round
        for j, row in enumerate(self.slots, start=1):
            seen: dict[int, int] = {}
            for value in row:
                seen[value] = seen.get(value, 0) + 1
            if seen.get(0, 0) != 1 or any(seen.get(s, 0) != 2 for s in range(1, k + 1)):
                raise ValueError(f"round {j} slot occupancy is not 1 bye + 2 per slot: {row}")
        byes = [sum(1 for row in self.slots if row[t] == 0) for t in range(self.n)]
        if any(count != 1 for count in byes):
            raise ValueError(f"each team must sit out exactly once, got byes {byes}")

    @property
    def games_per_round(self) -> int:
        return (self.n - 1) // 2

    def slot(self, round_no: int, team: int) -> int:
        return self.slots[round_no - 1][team - 1]

    def bye_team(self, round_no: int) -> int:
        return self.slots[round_no - 1].index(0) + 1


def _odd_slot(n: int, k: int, team: int, j: int) -> int:
    # Closed forms for the per-round slot of each team; slots are mod k+1.
    if team == n:
        return j // 2
    if team % 2 == 1:
        i = (team + 1) // 2
        if j <= 2 * i:
            return i
        return (i + (j - 2 * i)) % (k + 1)
    i = team // 2
    if j <= 2 * k + 3 - 2 * i:
        return (i + j - 1) % (k + 1)
    return (k + 1 - i) % (k + 1)


def odd_slot_assignment(n: int) -> SlotAssignment:
    """Slot table realizing the optimal odd-``n`` construction.

    With k = (n-1)/2 and rounds j = 1..2k+1:

    * odd team 2i-1 holds slot i through round 2i, then advances one slot per
      round (mod k+1, passing through the bye slot 0);
    * even team 2i starts in slot i and advances one slot per round through
      round 2k+3-2i, then holds its slot for the remaining rounds;
    * team n sits in slot floor(j/2) in round j, so it has the round-1 bye.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need an odd team count >= 3, got {n}")
    k = (n - 1) // 2
    rows = tuple(
        tuple(_odd_slot(n, k, team, j) for team in range(1, n + 1))
        for j in range(1, 2 * k + 2)
    )
    return SlotAssignment(n=n, slots=rows)


def odd_optimal_schedule(n: int) -> Schedule:
    """Materialize :func:`odd_slot_assignment` into a schedule.

    Round j contributes its games in slot order 1..k; each game is the pair
    of teams sharing that slot, emitted with the lower team first.
    """
    table = odd_slot_assignment(n)
    k = table.games_per_round
    games: list[GamePair] = []
    for row in table.slots:
        by_slot: dict[int, list[int]] = {}
        for team, slot in enumerate(row, start=1):
            by_slot.setdefault(slot, []).append(team)
        for slot in range(1, k + 1):
            x, y = sorted(by_slot[slot])
            games.append(GamePair(x, y))
    return make_schedule(n, 1, games)


def duplicate_rounds(s: Schedule, factor: int) -> Schedule:
    """Repeat each round block ``factor`` times, giving multiplicity ``factor``.

    Requires a single round robin (m = 1).  For schedules in which no team
    plays twice within a round block (both generators in this module), the
    guaranteed rest time is unchanged by this expansion; when every team
    plays in every round (even team counts) the two difference indices are
    unchanged as well.  Byes stretch with the factor, so odd-team schedules
    come out with a larger rest difference index than they started with.
    """
    if factor < 1:
        raise ValueError(f"duplication factor must be >= 1, got {factor}")
    if s.multiplicity != 1:
        raise ValueError(f"can only duplicate a single round robin, got m={s.multiplicity}")
    g = round_structure(s.team_count).g
    games: list[GamePair] = []
    for start in range(0, len(s.games), g):
        block = s.games[start:start + g]
        for _ in range(factor):
            games.extend(block)
    return make_schedule(s.team_count, factor, games)
