"""Verification fixtures: refined commentary paired with synthetic logs.

Seven good cases must yield zero contradicted verdicts; four bad cases
must each yield their expected non-supported verdict (three score/count
contradictions and one unverifiable hallucinated statistic).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime

from pitchside.clock import Clock
from pitchside.events import (
    EventKind,
    MatchEvent,
    MatchLog,
    MatchMeta,
    PlayerRef,
    Position,
    Side,
    TeamSide,
)
from pitchside.evalkit import Claim, ClaimKind, VerdictStatus, external_claim

_FILLER_POSITIONS = (
    [Position.GOALKEEPER]
    + [Position.DEFENDER] * 4
    + [Position.MIDFIELDER] * 4
    + [Position.FORWARD] * 2
)


def lineup_with(prefix: str, named: list[tuple[str, int, Position]]):
    players = [PlayerRef(name, number, position) for name, number, position in named]
    used = {p.number for p in players}
    filler_number = 30
    while len(players) < 11:
        while filler_number in used:
            filler_number += 1
        players.append(PlayerRef(f"{prefix} Fill {filler_number}", filler_number,
                                 _FILLER_POSITIONS[len(players)]))
        used.add(filler_number)
    return tuple(players)


@dataclass
class VerificationCase:
    name: str
    log: MatchLog
    clock: Clock
    body: str
    external_claims: list[Claim] = field(default_factory=list)
    # (claim kind, expected status) that MUST appear among the verdicts
    expected: list[tuple[ClaimKind, VerdictStatus]] = field(default_factory=list)
    good: bool = True


def _log(home, away, home_named, away_named, events):
    meta = MatchMeta(
        home=TeamSide(Side.HOME, home, "red"),
        away=TeamSide(Side.AWAY, away, "blue"),
        league="Continental Cup",
        season="2015-2016",
        kickoff=datetime(2015, 11, 8, 18, 0),
    )
    return MatchLog(
        meta=meta,
        lineup_home=lineup_with("H", home_named),
        lineup_away=lineup_with("A", away_named),
        coach_home="Home Coach",
        coach_away="Away Coach",
        events=tuple(events),
    )


def _ev(half, mm, ss, kind, team, actor=None, assist=None):
    return MatchEvent(clock=Clock(half, mm * 60 + ss), kind=kind, team=team,
                      actor=actor, assist=assist)


def good_cases() -> list[VerificationCase]:
    cases = []

    # offside call while trailing 2-1 away
    cavani = PlayerRef("Edinson Cavani", 9, Position.FORWARD)
    striker = PlayerRef("Home Striker", 14, Position.FORWARD)
    log = _log("Arsenal", "Paris SG",
               [("Home Striker", 14, Position.FORWARD)],
               [("Edinson Cavani", 9, Position.FORWARD)],
               [
                   _ev(1, 10, 0, EventKind.GOAL, Side.HOME, striker),
                   _ev(1, 30, 0, EventKind.GOAL, Side.HOME, striker),
                   _ev(2, 2, 0, EventKind.GOAL, Side.AWAY, cavani),
                   _ev(2, 7, 0, EventKind.OFFSIDE, Side.AWAY, cavani),
               ])
    cases.append(VerificationCase(
        name="cavani_offside",
        log=log,
        clock=Clock(2, 7 * 60),
        body=(
            "In the 52nd minute of the match, Edinson Cavani times his run too "
            "early, and the linesman raises his flag for offside. It's a "
            "frustrating moment for the Paris SG forward, who has already found "
            "the net twice in this UEFA Champions League season. The away team "
            "will be hoping to capitalize on their attacking efforts as they "
            "trail 2-1 against Arsenal here at the Emirates Stadium."
        ),
        expected=[(ClaimKind.SCORELINE, VerdictStatus.SUPPORTED)],
    ))

    # free kick against the crossbar at 1-1
    lucas = PlayerRef("Lucas Moura", 7, Position.FORWARD)
    log = _log("Arsenal", "Paris SG",
               [("Home Striker", 14, Position.FORWARD)],
               [("Lucas Moura", 7, Position.FORWARD)],
               [
                   _ev(1, 18, 0, EventKind.GOAL, Side.HOME, striker),
                   _ev(1, 40, 0, EventKind.GOAL, Side.AWAY, lucas),
                   _ev(2, 10, 0, EventKind.FREE_KICK, Side.AWAY, lucas),
               ])
    cases.append(VerificationCase(
        name="lucas_freekick",
        log=log,
        clock=Clock(2, 600),
        body=(
            "Lucas Moura steps up for a mid-range free kick, showcasing his "
            "trademark technique! He strikes it brilliantly, but it crashes "
            "against the crossbar, sending shockwaves through the Emirates "
            "Stadium. Paris SG is putting the pressure on Arsenal, as Lucas "
            "looks to add to his three goals this season. The score remains "
            "1-1 here in the second half!"
        ),
        expected=[(ClaimKind.SCORELINE, VerdictStatus.SUPPORTED)],
    ))

    # corner for the visitors leading 2-1 away from home
    willian = PlayerRef("Willian", 22, Position.MIDFIELDER)
    norwich = PlayerRef("Norwich Striker", 14, Position.FORWARD)
    log = _log("Norwich", "Chelsea",
               [("Norwich Striker", 14, Position.FORWARD)],
               [("Willian", 22, Position.MIDFIELDER)],
               [
                   _ev(1, 12, 0, EventKind.GOAL, Side.AWAY, willian),
                   _ev(1, 25, 0, EventKind.GOAL, Side.HOME, norwich),
                   _ev(2, 5, 0, EventKind.GOAL, Side.AWAY, willian),
                   _ev(2, 20, 0, EventKind.CORNER, Side.AWAY, willian),
                   _ev(2, 30, 0, EventKind.CORNER, Side.AWAY, willian),
               ])
    cases.append(VerificationCase(
        name="willian_corner",
        log=log,
        clock=Clock(2, 30 * 60),
        body=(
            "Willian steps up to take the corner for Chelsea after a "
            "well-defended sequence. They've been pressing hard, looking to "
            "extend their lead. The current score stands at 2-1 in favor of "
            "the visitors. The last corner was also for Chelsea, but they'll "
            "look to make this one count at Carrow Road. Let's see how "
            "Norwich's defense responds!"
        ),
        expected=[(ClaimKind.SCORELINE, VerdictStatus.SUPPORTED)],
    ))

    # strategic foul while trailing 1-3
    krychowiak = PlayerRef("Grzegorz Krychowiak", 4, Position.MIDFIELDER)
    city = PlayerRef("City Striker", 10, Position.FORWARD)
    sevilla_striker = PlayerRef("Sevilla Striker", 14, Position.FORWARD)
    log = _log("Sevilla", "Manchester City",
               [("Grzegorz Krychowiak", 4, Position.MIDFIELDER),
                ("Sevilla Striker", 14, Position.FORWARD)],
               [("City Striker", 10, Position.FORWARD)],
               [
                   _ev(1, 8, 0, EventKind.GOAL, Side.AWAY, city),
                   _ev(1, 20, 0, EventKind.YELLOW_CARD, Side.HOME, krychowiak),
                   _ev(1, 36, 0, EventKind.GOAL, Side.AWAY, city),
                   _ev(2, 4, 0, EventKind.GOAL, Side.HOME, sevilla_striker),
                   _ev(2, 15, 0, EventKind.GOAL, Side.AWAY, city),
                   _ev(2, 33, 38, EventKind.FOUL, Side.HOME, krychowiak),
               ])
    cases.append(VerificationCase(
        name="krychowiak_foul",
        log=log,
        clock=Clock(2, 33 * 60 + 38),
        body=(
            "Grzegorz Krychowiak brings down an opponent, and referee Svein "
            "Moen swiftly halts play. It's a strategic foul from the Sevilla "
            "midfielder as they look to regain control of the game. We're now "
            "at 33 minutes and 38 seconds into the second half, with Sevilla "
            "trailing 1-3 against Manchester City. Krychowiak, who has already "
            "received a yellow card earlier, will need to be cautious for the "
            "remainder of the match."
        ),
        expected=[(ClaimKind.SCORELINE, VerdictStatus.SUPPORTED)],
    ))

    # booking with the opponents on two yellows
    ramires = PlayerRef("Ramires", 7, Position.MIDFIELDER)
    willian_ch = PlayerRef("Willian", 22, Position.MIDFIELDER)
    bertrand = PlayerRef("Ryan Bertrand", 21, Position.DEFENDER)
    mane = PlayerRef("Sadio Mane", 10, Position.FORWARD)
    log = _log("Chelsea", "Southampton",
               [("Ramires", 7, Position.MIDFIELDER),
                ("Willian", 22, Position.MIDFIELDER)],
               [("Ryan Bertrand", 21, Position.DEFENDER),
                ("Sadio Mane", 10, Position.FORWARD)],
               [
                   _ev(1, 6, 0, EventKind.GOAL, Side.HOME, willian_ch),
                   _ev(1, 15, 0, EventKind.YELLOW_CARD, Side.AWAY, bertrand),
                   _ev(1, 28, 0, EventKind.YELLOW_CARD, Side.AWAY, mane),
                   _ev(1, 41, 0, EventKind.YELLOW_CARD, Side.HOME, ramires),
               ])
    cases.append(VerificationCase(
        name="ramires_yellow",
        log=log,
        clock=Clock(1, 41 * 60),
        body=(
            "As we approach the closing stages of the first half, Ramires from "
            "Chelsea commits a foul, much to his dismay, and is issued a "
            "yellow card by the referee. The Brazilian midfielder clearly "
            "disagrees with the decision as he gestures his frustration. "
            "Meanwhile, Southampton has already received two yellow cards in "
            "this match, with Ryan Bertrand and Sadio Mane already cautioned. "
            "The tension is palpable as Chelsea leads 1-0 following Willian's "
            "early free-kick goal."
        ),
        expected=[
            (ClaimKind.SCORELINE, VerdictStatus.SUPPORTED),
            (ClaimKind.ORDINAL_EVENT_COUNT, VerdictStatus.SUPPORTED),
        ],
    ))

    # third yellow card of the match
    ribery = PlayerRef("Franck Ribery", 7, Position.MIDFIELDER)
    aubameyang = PlayerRef("Pierre-Emerick Aubameyang", 17, Position.FORWARD)
    ramos = PlayerRef("Adrian Ramos", 20, Position.FORWARD)
    bartra = PlayerRef("Marc Bartra", 5, Position.DEFENDER)
    log = _log("Dortmund", "Bayern Munich",
               [("Pierre-Emerick Aubameyang", 17, Position.FORWARD),
                ("Adrian Ramos", 20, Position.FORWARD),
                ("Marc Bartra", 5, Position.DEFENDER)],
               [("Franck Ribery", 7, Position.MIDFIELDER)],
               [
                   _ev(1, 23, 0, EventKind.GOAL, Side.HOME, aubameyang),
                   _ev(1, 39, 0, EventKind.YELLOW_CARD, Side.HOME, ramos),
                   _ev(2, 9, 0, EventKind.YELLOW_CARD, Side.HOME, bartra),
                   _ev(2, 25, 0, EventKind.YELLOW_CARD, Side.AWAY, ribery),
               ])
    cases.append(VerificationCase(
        name="ribery_yellow",
        log=log,
        clock=Clock(2, 25 * 60),
        body=(
            "As we approach the midway point of the second half, Franck Ribery "
            "has just received a yellow card for Bayern Munich after a late "
            "challenge. This adds to the growing tension in this highly "
            "contested match at Signal Iduna Park, with Dortmund leading 1-0 "
            "following Pierre-Emerick Aubameyang's opening goal in the first "
            "half. Ribery's booking could have significant implications as "
            "both teams battle for control. This marks the third yellow card "
            "of the match, with Adrian Ramos and Marc Bartra already cautioned "
            "for Dortmund. The stakes are high as we inch closer to the final "
            "whistle."
        ),
        expected=[
            (ClaimKind.SCORELINE, VerdictStatus.SUPPORTED),
            (ClaimKind.ORDINAL_EVENT_COUNT, VerdictStatus.SUPPORTED),
        ],
    ))

    # header goal bringing the score to 2-1
    juanmi = PlayerRef("Juanmi", 9, Position.FORWARD)
    real = PlayerRef("Real Striker", 14, Position.FORWARD)
    log = _log("Real Madrid", "Malaga",
               [("Real Striker", 14, Position.FORWARD)],
               [("Juanmi", 9, Position.FORWARD)],
               [
                   _ev(1, 11, 0, EventKind.GOAL, Side.HOME, real),
                   _ev(1, 33, 0, EventKind.GOAL, Side.HOME, real),
                   _ev(2, 25, 0, EventKind.HEADER_GOAL, Side.AWAY, juanmi),
               ])
    cases.append(VerificationCase(
        name="juanmi_goal",
        log=log,
        clock=Clock(2, 25 * 60),
        body=(
            "Juanmi has found the back of the net for Malaga! At the 70th "
            "minute, a perfectly timed cross allows him to break free "
            "one-on-one with Iker Casillas. The young forward rises above the "
            "defenders to deliver a brilliant header down into the center of "
            "the goal, leaving the Real Madrid keeper with no chance. This "
            "goal comes as Malaga seeks to fight back after being two goals "
            "down. The score now stands at 2-1, and the home crowd at the "
            "Santiago Bernabeu is stunned!"
        ),
        expected=[(ClaimKind.SCORELINE, VerdictStatus.SUPPORTED)],
    ))
    return cases


def bad_cases() -> list[VerificationCase]:
    cases = []

    # the claimed three opposition yellows are really two: this card is the
    # match's fourth, not evidence of a Leverkusen hat-trick of bookings
    ginter = PlayerRef("Matthias Ginter", 28, Position.DEFENDER)
    lev_one = PlayerRef("Lev Midfielder", 8, Position.MIDFIELDER)
    lev_two = PlayerRef("Lev Defender", 3, Position.DEFENDER)
    dort_mid = PlayerRef("Dort Midfielder", 6, Position.MIDFIELDER)
    lev_striker = PlayerRef("Lev Striker", 14, Position.FORWARD)
    log = _log("Leverkusen", "Dortmund",
               [("Lev Midfielder", 8, Position.MIDFIELDER),
                ("Lev Defender", 3, Position.DEFENDER),
                ("Lev Striker", 14, Position.FORWARD)],
               [("Matthias Ginter", 28, Position.DEFENDER),
                ("Dort Midfielder", 6, Position.MIDFIELDER)],
               [
                   _ev(1, 9, 0, EventKind.GOAL, Side.HOME, lev_striker),
                   _ev(1, 14, 0, EventKind.YELLOW_CARD, Side.HOME, lev_one),
                   _ev(1, 22, 0, EventKind.YELLOW_CARD, Side.AWAY, dort_mid),
                   _ev(1, 31, 0, EventKind.YELLOW_CARD, Side.HOME, lev_two),
                   _ev(1, 43, 0, EventKind.YELLOW_CARD, Side.AWAY, ginter),
               ])
    cases.append(VerificationCase(
        name="ginter_fourth_yellow",
        log=log,
        clock=Clock(1, 43 * 60),
        body=(
            "Matthias Ginter of Dortmund has been booked, receiving a yellow "
            "card for a robust challenge. Referee Manuel Grafe didn't hesitate "
            "to brandish the card, a clear indication of the game's growing "
            "physicality. This marks another disciplinary action in what has "
            "been a fiercely contested encounter, with Leverkusen already "
            "having three yellow cards to their name. The score remains 1-0 "
            "to Bayer Leverkusen as we approach the half-time mark."
        ),
        expected=[(ClaimKind.ORDINAL_EVENT_COUNT, VerdictStatus.CONTRADICTED)],
        good=False,
    ))

    # ball possession is not in the store schema: hallucinated statistic
    ronaldo = PlayerRef("Cristiano Ronaldo", 7, Position.FORWARD)
    granada = PlayerRef("Granada Striker", 14, Position.FORWARD)
    log = _log("Real Madrid", "Granada",
               [("Cristiano Ronaldo", 7, Position.FORWARD)],
               [("Granada Striker", 14, Position.FORWARD)],
               [
                   _ev(1, 7, 0, EventKind.GOAL, Side.HOME, ronaldo),
                   _ev(1, 18, 0, EventKind.GOAL, Side.HOME, ronaldo),
                   _ev(1, 25, 0, EventKind.GOAL, Side.AWAY, granada),
                   _ev(1, 30, 0, EventKind.GOAL, Side.HOME, ronaldo),
                   _ev(1, 38, 0, EventKind.GOAL, Side.HOME, ronaldo),
                   _ev(1, 44, 0, EventKind.OFFSIDE, Side.HOME, ronaldo),
               ])
    cases.append(VerificationCase(
        name="ronaldo_possession",
        log=log,
        clock=Clock(1, 44 * 60),
        body=(
            "The game takes a brief pause as Cristiano Ronaldo is caught "
            "offside, just as Real Madrid was looking to capitalize on their "
            "significant lead here at the Santiago Bernabeu. With the score "
            "at 4-1 and about a minute to go until halftime, the home side "
            "has controlled the play and maintains 62% possession. This "
            "offside decision serves as a reminder for Madrid to be mindful "
            "of their positioning as they continue to push for more goals."
        ),
        external_claims=[
            external_claim('COUNT possession TEAM "Real Madrid" BEFORE 2015-11-08',
                           "62", text="maintains 62% possession"),
        ],
        expected=[(ClaimKind.EXTERNAL_STAT, VerdictStatus.UNVERIFIABLE)],
        good=False,
    ))

    # "their fifth of the match" when the log holds six
    robben = PlayerRef("Arjen Robben", 10, Position.FORWARD)
    bayern_striker = PlayerRef("Bayern Striker", 14, Position.FORWARD)
    log = _log("Bayern Munich", "FC Koln",
               [("Arjen Robben", 10, Position.FORWARD),
                ("Bayern Striker", 14, Position.FORWARD)],
               [("Koln Defender", 14, Position.DEFENDER)],
               [
                   _ev(1, 5, 0, EventKind.CORNER, Side.HOME, robben),
                   _ev(1, 16, 0, EventKind.GOAL, Side.HOME, bayern_striker),
                   _ev(1, 21, 0, EventKind.CORNER, Side.HOME, robben),
                   _ev(1, 33, 0, EventKind.CORNER, Side.HOME, robben),
                   _ev(2, 3, 0, EventKind.CORNER, Side.HOME, robben),
                   _ev(2, 14, 0, EventKind.CORNER, Side.HOME, robben),
                   _ev(2, 22, 0, EventKind.CORNER, Side.HOME, robben),
               ])
    cases.append(VerificationCase(
        name="robben_sixth_corner",
        log=log,
        clock=Clock(2, 22 * 60),
        body=(
            "Arjen Robben weaves into the box and delivers a low pass towards "
            "the goal, but it's intercepted by the FC Koln defense. However, "
            "the referee swiftly points to the corner flag. Bayern Munich "
            "will have a corner kick, their fifth of the match so far. With "
            "the score at 1-0, Bayern is looking to further capitalize on "
            "their attacking momentum here at the Allianz Arena."
        ),
        expected=[(ClaimKind.ORDINAL_EVENT_COUNT, VerdictStatus.CONTRADICTED)],
        good=False,
    ))

    # penalty makes it 5-1, but the text still says 4-1
    neymar = PlayerRef("Neymar", 11, Position.FORWARD)
    barca = PlayerRef("Barca Striker", 14, Position.FORWARD)
    psg = PlayerRef("PSG Striker", 29, Position.FORWARD)
    log = _log("Barcelona", "Paris SG",
               [("Neymar", 11, Position.FORWARD),
                ("Barca Striker", 14, Position.FORWARD)],
               [("PSG Striker", 29, Position.FORWARD)],
               [
                   _ev(1, 3, 0, EventKind.GOAL, Side.HOME, barca),
                   _ev(1, 40, 0, EventKind.GOAL, Side.HOME, barca),
                   _ev(2, 5, 0, EventKind.GOAL, Side.AWAY, psg),
                   _ev(2, 17, 0, EventKind.GOAL, Side.HOME, neymar),
                   _ev(2, 43, 0, EventKind.GOAL, Side.HOME, barca),
                   _ev(2, 46, 0, EventKind.PENALTY_GOAL, Side.HOME, neymar),
               ])
    cases.append(VerificationCase(
        name="neymar_score_update",
        log=log,
        clock=Clock(2, 46 * 60),
        body=(
            "And there it is! Goal! Neymar steps up to take the penalty and "
            "finishes with tremendous precision, slamming the ball home just "
            "inside the right post. That's a crucial strike for Barcelona as "
            "they extend their lead to 4-1 against Paris SG. The home crowd "
            "at Camp Nou erupts! This is Neymar's second goal of the match, "
            "following his earlier stunning free kick. Just what Barcelona "
            "needed as they push for a commanding victory in this Champions "
            "League clash!"
        ),
        expected=[(ClaimKind.SCORELINE, VerdictStatus.CONTRADICTED)],
        good=False,
    ))
    return cases


def all_cases() -> list[VerificationCase]:
    return good_cases() + bad_cases()
