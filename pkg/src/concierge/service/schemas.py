"""Request/response models for the HTTP session service."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class CreateSessionRequest(BaseModel):
    person_id: str | None = None


class CreateSessionResponse(BaseModel):
    session_id: str
    mood: str
    person_id: str | None = None


class FlagsModel(BaseModel):
    target: str = "self"
    other_fortune: str = "none"
    prospect: str = "none"
    agent: str = "none"
    approval: str = "none"

    @model_validator(mode="after")
    def _check(self):
        allowed = {
            "target": {"self", "other"},
            "other_fortune": {"none", "desirable", "undesirable"},
            "prospect": {"none", "prospective", "confirmed", "disconfirmed"},
            "agent": {"none", "self", "other"},
            "approval": {"none", "approved", "disapproved"},
        }
        for name, values in allowed.items():
            if getattr(self, name) not in values:
                raise ValueError(f"{name} must be one of {sorted(values)}")
        if self.other_fortune != "none" and self.target != "other":
            raise ValueError("other_fortune requires target = other")
        return self


class UtteranceRequest(BaseModel):
    text: str
    flags: FlagsModel | None = None


class EmotionModel(BaseModel):
    emotion: str | None
    valence: str
    intensity: float


class RecommendationModel(BaseModel):
    kind: str
    id: str
    name: str
    strength: float
    fired_rules: list[str] = Field(default_factory=list)
    rationale: str = ""


class TurnResponse(BaseModel):
    reply: str
    directive: str
    case_route: str
    emotion: EmotionModel
    profile: list[float]
    mood: str
    recommendations: list[RecommendationModel]
    taboo: list[str]
    fired_rules: list[str]


class TurnSummaryModel(BaseModel):
    utterance: str
    case_route: str
    emotion: str | None
    valence: str
    intensity: float
    mood_after: str
    reply: str
    fired_rules: list[str]
    recommendations: list[RecommendationModel]


class SessionView(BaseModel):
    session_id: str
    person_id: str | None
    mood: str
    profile: list[float]
    taboo: list[str]
    turns: int
    history: list[TurnSummaryModel]


class CatalogItemModel(BaseModel):
    id: str
    name: str
    nearby: list[str] = Field(default_factory=list)


class CatalogSpotModel(CatalogItemModel):
    area: str = ""


class CatalogResponse(BaseModel):
    spots: list[CatalogSpotModel]
    foods: list[CatalogItemModel]
    gifts: list[CatalogItemModel]


class ErrorModel(BaseModel):
    code: str
    message: str
    detail: str | None = None
