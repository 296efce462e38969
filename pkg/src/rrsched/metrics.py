"""Schedule quality and fairness measures.

Three per-schedule numbers plus per-team diagnostics:

* guaranteed rest time b: the largest b such that any two games of the same
  team are separated by at least b games not involving it;
* games-played difference index p: the largest spread, after any completed
  game, between the number of games any two teams have played;
* rest difference index d: the largest gap, over all games, between the two
  participants' rests since their previous games.  Debuts are anchored to a
  virtual game one position before the schedule starts, shared by all teams.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .model import ParseError, Schedule


@dataclass(frozen=True)
class MetricsReport:
    """Bundled measures for one schedule.

    ``guaranteed_rest_time`` is None when no team plays twice (that happens
    only for a single game between two teams); both difference indices are at
    least 1 whenever there are three or more teams.
    """

    team_count: int
    multiplicity: int
    guaranteed_rest_time: int | None
    games_played_difference_index: int
    rest_difference_index: int
    rest_profiles: dict[int, tuple[int, ...]]
    always_longer_rest_teams: frozenset[int]


def _appearances(s: Schedule) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {t: [] for t in s.teams}
    for idx, game in enumerate(s.games, start=1):
        out[game.a].append(idx)
        out[game.b].append(idx)
    return out


def rest_profile(s: Schedule, team: int) -> list[int]:
    """Rests between the team's consecutive games: v - u - 1 per adjacent pair."""
    if team not in s.teams:
        raise ValueError(f"team {team} out of range 1..{s.team_count}")
    idxs = _appearances(s)[team]
    return [v - u - 1 for u, v in zip(idxs, idxs[1:])]


def guaranteed_rest_time(s: Schedule) -> int | None:
    """Minimum rest over all teams and consecutive-game pairs; None if no team plays twice."""
    best: int | None = None
    for idxs in _appearances(s).values():
        for u, v in zip(idxs, idxs[1:]):
            rest = v - u - 1
            if best is None or rest < best:
                best = rest
    return best


def games_played_difference_index(s: Schedule) -> int:
    """Largest max-min spread of per-team game counts after any completed game."""
    counts = [0] * (s.team_count + 1)
    worst = 0
    for game in s.games:
        counts[game.a] += 1
        counts[game.b] += 1
        active = counts[1:]
        worst = max(worst, max(active) - min(active))
    return worst


def _rest_pairs(s: Schedule):
    """Yield (index, game, rest_a, rest_b) with debuts resting since index 0."""
    last = [0] * (s.team_count + 1)
    for idx, game in enumerate(s.games, start=1):
        yield idx, game, idx - last[game.a] - 1, idx - last[game.b] - 1
        last[game.a] = idx
        last[game.b] = idx


def rest_difference_index(s: Schedule) -> int:
    """Largest |rest_a - rest_b| over all games."""
    return max(abs(ra - rb) for _, _, ra, rb in _rest_pairs(s))


def always_longer_rest_teams(s: Schedule) -> set[int]:
    """Teams strictly better rested than the opponent in every game after their first.

    A team with no game after its first (possible only with two teams) does
    not qualify; the comparison uses the same debut convention as the rest
    difference index.
    """
    seen = [False] * (s.team_count + 1)
    candidate = [True] * (s.team_count + 1)
    post_first = [False] * (s.team_count + 1)
    for _, game, ra, rb in _rest_pairs(s):
        for team, mine, theirs in ((game.a, ra, rb), (game.b, rb, ra)):
            if seen[team]:
                post_first[team] = True
                if mine <= theirs:
                    candidate[team] = False
            seen[team] = True
    return {t for t in s.teams if candidate[t] and post_first[t]}


def evaluate(s: Schedule) -> MetricsReport:
    """Compute every measure for the schedule."""
    profiles = {t: tuple(v - u - 1 for u, v in zip(idxs, idxs[1:]))
                for t, idxs in _appearances(s).items()}
    rests = [rest for profile in profiles.values() for rest in profile]
    return MetricsReport(
        team_count=s.team_count,
        multiplicity=s.multiplicity,
        guaranteed_rest_time=min(rests) if rests else None,
        games_played_difference_index=games_played_difference_index(s),
        rest_difference_index=rest_difference_index(s),
        rest_profiles=profiles,
        always_longer_rest_teams=frozenset(always_longer_rest_teams(s)),
    )


def report_to_json(report: MetricsReport, indent: int | None = None) -> str:
    """Structured form of a report; round-trips through :func:`report_from_json`."""
    doc = {
        "n": report.team_count,
        "m": report.multiplicity,
        "guaranteed_rest_time": report.guaranteed_rest_time,
        "games_played_difference_index": report.games_played_difference_index,
        "rest_difference_index": report.rest_difference_index,
        "always_longer_rest_teams": sorted(report.always_longer_rest_teams),
        "rest_profiles": {str(t): list(p) for t, p in sorted(report.rest_profiles.items())},
    }
    return json.dumps(doc, indent=indent) + "\n"


def report_from_json(data: str | bytes) -> MetricsReport:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        return MetricsReport(
            team_count=doc["n"],
            multiplicity=doc["m"],
            guaranteed_rest_time=doc["guaranteed_rest_time"],
            games_played_difference_index=doc["games_played_difference_index"],
            rest_difference_index=doc["rest_difference_index"],
            rest_profiles={int(t): tuple(p) for t, p in doc["rest_profiles"].items()},
            always_longer_rest_teams=frozenset(doc["always_longer_rest_teams"]),
        )
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed metrics report: {exc}") from exc
