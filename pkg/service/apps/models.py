"""
데모 결과 타입

각 결과는 key=value 요약 한 줄(summary_line)과 사람이 읽는 기록(transcript_lines)을 제공한다.
"""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


def _summary(pairs: List[Tuple[str, object]]) -> str:
    return " ".join(f"{key}={value}" for key, value in pairs)


class ElectionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    voters: int = Field(ge=0)
    tally_yes: int = Field(ge=0)
    tally_no: int
    r: int

    @model_validator(mode="after")
    def _check(self) -> "ElectionResult":
        if self.tally_yes + self.tally_no != self.voters:
            raise ValueError("tally_yes + tally_no must equal voters")
        return self

    def summary_line(self) -> str:
        return _summary([("voters", self.voters), ("tally_yes", self.tally_yes), ("tally_no", self.tally_no), ("r", self.r)])

    def transcript_lines(self) -> List[str]:
        return [
            f"ballots cast: {self.voters}",
            f"candidate A: {self.tally_yes}",
            f"candidate B: {self.tally_no}",
        ]


class TrustShareSet(BaseModel):
    """t = s_1 + ... + s_k mod r"""

    model_config = ConfigDict(frozen=True)

    trust: int
    shares: Tuple[int, ...]
    modulus: int = Field(gt=1)

    @model_validator(mode="after")
    def _check(self) -> "TrustShareSet":
        if not all(0 <= value < self.modulus for value in (self.trust, *self.shares)):
            raise ValueError("trust and shares must be residues mod r")
        if sum(self.shares) % self.modulus != self.trust:
            raise ValueError("shares must sum to the trust value mod r")
        return self


class TrustScenario(str, Enum):
    RANDOM = "random"
    EXTREME = "extreme"
    LATENT = "latent"


class TrustDemoResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario: TrustScenario
    r: int
    actual_space: int
    faulty_node: Optional[int] = None
    trusts: Tuple[int, ...]
    intended_partials: Tuple[int, ...]
    reported_partials: Tuple[int, ...]
    apparent_total: int
    true_total: int

    @property
    def faulty_contribution(self) -> Optional[int]:
        if self.faulty_node is None:
            return None
        return self.reported_partials[self.faulty_node]

    @property
    def honest_total(self) -> Optional[int]:
        # faulty 노드가 있으면 apparent_total = faulty_contribution + honest_total (mod r)
        if self.faulty_node is None:
            return None
        honest = sum(p for node, p in enumerate(self.reported_partials) if node != self.faulty_node)
        return honest % self.r

    @property
    def inflated(self) -> bool:
        return self.apparent_total != self.true_total

    def summary_line(self) -> str:
        return _summary(
            [
                ("scenario", self.scenario.value),
                ("nodes", len(self.trusts)),
                ("r", self.r),
                ("actual_space", self.actual_space),
                ("faulty_node", "none" if self.faulty_node is None else self.faulty_node),
                ("faulty_contribution", "none" if self.faulty_node is None else self.faulty_contribution),
                ("honest_total", "none" if self.faulty_node is None else self.honest_total),
                ("apparent_total", self.apparent_total),
                ("true_total", self.true_total),
            ]
        )

    def transcript_lines(self) -> List[str]:
        lines = []
        for node, (intended, reported) in enumerate(zip(self.intended_partials, self.reported_partials)):
            marker = " (faulty key)" if node == self.faulty_node else ""
            lines.append(f"node {node}: trust={self.trusts[node]} partial intended={intended} reported={reported}{marker}")
        lines.append(f"apparent total: {self.apparent_total} (true total {self.true_total}, mod {self.r})")
        return lines


class CardMode(str, Enum):
    FLAWED = "flawed"
    FIXED = "fixed"


class CardRound(BaseModel):
    """
    한 라운드의 공개 기록

    difference 는 E(m1)/E(m2), disclosed[i] 는 참가자 i 가 공개한 E(m)^alpha_i 이다.
    """

    model_config = ConfigDict(frozen=True)

    difference: int
    alphas: Tuple[int, ...]
    disclosed: Tuple[int, ...]
    rerandomized: bool
    joint_result: int

    @model_validator(mode="after")
    def _check(self) -> "CardRound":
        if len(self.alphas) != len(self.disclosed):
            raise ValueError("one disclosed element per player")
        return self


class CardEqualityTranscript(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: CardMode
    n: int
    r: int
    rounds: Tuple[CardRound, ...]
    verdict_equal: bool

    @model_validator(mode="after")
    def _check(self) -> "CardEqualityTranscript":
        if not self.rounds:
            raise ValueError("at least one round is required")
        if self.verdict_equal != all(round_.joint_result == 0 for round_ in self.rounds):
            raise ValueError("verdict equal must hold exactly when every round returned 0")
        if self.mode is CardMode.FIXED and not all(round_.rerandomized for round_ in self.rounds):
            raise ValueError("fixed mode must rerandomize every disclosed element")
        return self

    def summary_line(self) -> str:
        return _summary(
            [
                ("mode", self.mode.value),
                ("r", self.r),
                ("rounds", len(self.rounds)),
                ("results", ",".join(str(round_.joint_result) for round_ in self.rounds)),
                ("verdict", "equal" if self.verdict_equal else "unequal"),
            ]
        )

    def transcript_lines(self) -> List[str]:
        lines = []
        for index, round_ in enumerate(self.rounds, start=1):
            lines.append(f"round {index}: E(m) = {round_.difference}")
            for player, element in enumerate(round_.disclosed, start=1):
                lines.append(f"  player {player} discloses {element}")
            lines.append(f"  joint decryption: m*alpha mod r = {round_.joint_result}")
        lines.append(f"verdict: {'equal' if self.verdict_equal else 'unequal'}")
        return lines
