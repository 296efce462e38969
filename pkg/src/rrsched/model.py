"""Core schedule model: games, round/slot arithmetic, validation, and I/O.

An asynchronous round-robin schedule is a total order on games: game i is the
i-th game played, and no two games overlap.  Teams are 1-based integers; a
schedule for ``n`` teams with multiplicity ``m`` contains every unordered pair
of distinct teams exactly ``m`` times.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

GameLike = Union["GamePair", tuple]


class ScheduleValidationError(ValueError):
    """A game sequence violates the round-robin invariants.

    ``index`` is the 1-based position of the first offending game, when one
    can be pinned down (None for aggregate errors such as a wrong length).
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class ParseError(ValueError):
    """Schedule input is malformed; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class GamePair:
    """An unordered pair of distinct teams.

    The stored (a, b) orientation is preserved for serialization, but equality
    and hashing treat {a, b} and {b, a} as the same game.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ScheduleValidationError(f"self-pair ({self.a}, {self.a})")

    def __eq__(self, other):
        if not isinstance(other, GamePair):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple[int, int]:
        """Orientation-free identity: (min, max)."""
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)

    def involves(self, team: int) -> bool:
        return team == self.a or team == self.b

    def opponent_of(self, team: int) -> int:
        if team == self.a:
            return self.b
        if team == self.b:
            return self.a
        raise ValueError(f"team {team} does not play in game ({self.a}, {self.b})")


@dataclass(frozen=True)
class Schedule:
    """A validated total order on the games of an m-fold round robin.

    Construct through :func:`make_schedule` (or the parsers), which enforce
    the invariants; instances are immutable after construction.
    """

    team_count: int
    multiplicity: int
    games: tuple[GamePair, ...]

    def __len__(self) -> int:
        return len(self.games)

    @property
    def teams(self) -> range:
        return range(1, self.team_count + 1)


@dataclass(frozen=True)
class RoundStructure:
    """Derived per-``n`` quantities: g games per round over r rounds."""

    n: int
    g: int
    r: int


def expected_length(n: int, m: int = 1) -> int:
    """Number of games in an m-fold round robin on n teams."""
    return m * n * (n - 1) // 2


def round_structure(n: int) -> RoundStructure:
    """Games-per-round and round count for ``n`` teams.

    g = floor(n/2) and r = 2*ceil(n/2) - 1, so r*g = n(n-1)/2: rounds are
    consecutive blocks of g games and a single round robin fills r of them.
    """
    if n < 2:
        raise ValueError(f"need at least 2 teams, got {n}")
    g = n // 2
    r = 2 * ((n + 1) // 2) - 1
    return RoundStructure(n=n, g=g, r=r)


def _check_index(index: int, n: int, multiplicity: int) -> int:
    top = expected_length(n, multiplicity)
    if not 1 <= index <= top:
        raise ValueError(f"game index {index} out of range 1..{top} for n={n}, m={multiplicity}")
    return round_structure(n).g


def round_of(index: int, n: int, multiplicity: int = 1) -> int:
    """Round number (1-based) of the game at ``index``; counts past r when m > 1."""
    g = _check_index(index, n, multiplicity)
    return (index + g - 1) // g


def slot_of(index: int, n: int, multiplicity: int = 1) -> int:
    """Slot (position within its round, 1-based) of the game at ``index``."""
    g = _check_index(index, n, multiplicity)
    return (index - 1) % g + 1


def make_schedule(n: int, m: int, games: Sequence[GameLike]) -> Schedule:
    """Validate a game sequence and return the Schedule.

    Rejects wrong length, out-of-range teams, self-pairs, and pair
    multiplicity other than ``m``; the error names the first offending game.
    """
    if n < 2:
        raise ValueError(f"need at least 2 teams, got {n}")
    if m < 1:
        raise ValueError(f"multiplicity must be >= 1, got {m}")
    if not games:
        raise ScheduleValidationError("empty game sequence")

    want = expected_length(n, m)
    if len(games) != want:
        raise ScheduleValidationError(
            f"wrong number of games: expected {want} for n={n}, m={m}, got {len(games)}"
        )

    normalized: list[GamePair] = []
    counts: dict[tuple[int, int], int] = {}
    for idx, game in enumerate(games, start=1):
        if isinstance(game, GamePair):
            a, b = game.a, game.b
        else:
            a, b = game
        if a == b:
            raise ScheduleValidationError(f"self-pair ({a}, {b}) at game {idx}", index=idx)
        for team in (a, b):
            if not 1 <= team <= n:
                raise ScheduleValidationError(
                    f"team {team} out of range 1..{n} at game {idx}", index=idx
                )
        pair = GamePair(a, b)
        key = pair.key()
        counts[key] = counts.get(key, 0) + 1
        if counts[key] > m:
            missing = _first_missing_pair(n, counts, m)
            extra = f"; pair {missing} never occurs" if missing else ""
            raise ScheduleValidationError(
                f"pair {key} occurs more than {m} time(s) at game {idx}{extra}", index=idx
            )
        normalized.append(pair)

    # Length and per-pair caps together force every pair to appear exactly m times.
    return Schedule(team_count=n, multiplicity=m, games=tuple(normalized))


def _first_missing_pair(n: int, counts: dict, m: int) -> tuple[int, int] | None:
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            if counts.get((a, b), 0) < m:
                return (a, b)
    return None


def serialize_schedule(s: Schedule) -> str:
    """Text form: header line ``n <teams>``, ``m <mult>`` when m > 1, one game per line."""
    lines = [f"n {s.team_count}"]
    if s.multiplicity != 1:
        lines.append(f"m {s.multiplicity}")
    lines.extend(f"{g.a} {g.b}" for g in s.games)
    return "\n".join(lines) + "\n"


def parse_schedule(data: str | bytes) -> Schedule:
    """Parse the text form; inverse of :func:`serialize_schedule`.

    Comment lines start with ``#`` and blank lines are ignored.  Raises
    :class:`ParseError` with the 1-based line number on malformed input, and
    maps schedule-validation failures back to the offending game line.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")

    n: int | None = None
    m = 1
    saw_m = False
    games: list[tuple[int, int]] = []
    game_lines: list[int] = []

    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise ParseError(f"duplicate 'n' header at line {lineno}", line=lineno)
            if games:
                raise ParseError(f"'n' header after games at line {lineno}", line=lineno)
            n = _parse_header_value(tokens, "n", lineno)
            continue
        if tokens[0] == "m":
            if n is None or saw_m or games:
                raise ParseError(f"misplaced 'm' header at line {lineno}", line=lineno)
            m = _parse_header_value(tokens, "m", lineno)
            saw_m = True
            continue
        if n is None:
            raise ParseError(
                f"expected header 'n <team_count>' before games at line {lineno}", line=lineno
            )
        if len(tokens) != 2:
            raise ParseError(
                f"expected two team numbers at line {lineno}, got {line!r}", line=lineno
            )
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer team at line {lineno}: {line!r}", line=lineno) from None
        if a == b:
            raise ParseError(f"self-pair at line {lineno}: team {a} against itself", line=lineno)
        games.append((a, b))
        game_lines.append(lineno)

    if n is None:
        raise ParseError("missing 'n <team_count>' header")
    try:
        return make_schedule(n, m, games)
    except ScheduleValidationError as exc:
        if exc.index is not None:
            raise ParseError(f"{exc} (line {game_lines[exc.index - 1]})",
                             line=game_lines[exc.index - 1]) from exc
        raise ParseError(str(exc)) from exc


def _parse_header_value(tokens: list[str], name: str, lineno: int) -> int:
    if len(tokens) != 2:
        raise ParseError(f"malformed '{name}' header at line {lineno}", line=lineno)
    try:
        value = int(tokens[1])
    except ValueError:
        raise ParseError(f"non-integer '{name}' value at line {lineno}", line=lineno) from None
    return value


def schedule_to_json(s: Schedule, indent: int | None = None) -> str:
    """Structured form: one document with fields n, m, and games."""
    doc = {
        "n": s.team_count,
        "m": s.multiplicity,
        "games": [[g.a, g.b] for g in s.games],
    }
    return json.dumps(doc, indent=indent) + "\n"


def schedule_from_json(data: str | bytes) -> Schedule:
    """Parse the structured form; inverse of :func:`schedule_to_json`."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("structured schedule must be a JSON object")
    for field in ("n", "games"):
        if field not in doc:
            raise ParseError(f"structured schedule missing field {field!r}")
    n = doc["n"]
    m = doc.get("m", 1)
    games = doc["games"]
    if not isinstance(n, int) or not isinstance(m, int):
        raise ParseError("fields 'n' and 'm' must be integers")
    if not isinstance(games, list):
        raise ParseError("field 'games' must be an array of [a, b] pairs")
    pairs: list[tuple[int, int]] = []
    for i, entry in enumerate(games, start=1):
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(x, int) for x in entry)):
            raise ParseError(f"game {i} must be a 2-element integer array, got {entry!r}")
        pairs.append((entry[0], entry[1]))
    try:
        return make_schedule(n, m, pairs)
    except (ScheduleValidationError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def load_schedule(data: str | bytes) -> Schedule:
    """Parse either accepted format, sniffing JSON by a leading ``{``."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if text.lstrip().startswith("{"):
        return schedule_from_json(text)
    return parse_schedule(text)
