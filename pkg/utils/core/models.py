from typing import Optional, Sequence
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from utils.core.enums import ViolationKind


# --- Problem input ---


class Instance(BaseModel):
    """
    A lay-planning problem: the cutting bed limits, the fabric length of each
    garment figure's template, and the g×f demand matrix of SKUs.

    Only types are enforced here. Value checks (negative entries, ragged rows,
    templates longer than the bed) are reported by validate_instance so that a
    broken instance file can still be loaded and diagnosed.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    name: str
    bed_length: int = Field(alias="l_ub")
    bed_height: int = Field(alias="h_ub")
    lengths: tuple[int, ...]
    demand: tuple[tuple[int, ...], ...]

    @property
    def g(self) -> int:
        return len(self.demand)

    @property
    def f(self) -> int:
        return len(self.demand[0]) if self.demand else 0

    @property
    def bed_volume(self) -> int:
        return self.bed_length * self.bed_height

    def demand_matrix(self) -> np.ndarray:
        return np.array(self.demand, dtype=np.int64).reshape(self.g, self.f)

    def lengths_vector(self) -> np.ndarray:
        return np.array(self.lengths, dtype=np.int64)


# --- Solution ---


class Lay(BaseModel):
    """One spread-and-cut: layers per fabric type and templates per figure."""
    model_config = ConfigDict(frozen=True)

    heights: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.heights)

    def pattern_length(self, lengths: Sequence[int]) -> int:
        return sum(l * q for l, q in zip(lengths, self.counts))

    def volume(self, lengths: Sequence[int]) -> int:
        return self.pattern_length(lengths) * self.height

    def production(self) -> np.ndarray:
        """g×f matrix of SKUs cut by this lay: counts[i]·heights[j]."""
        return np.outer(
            np.array(self.counts, dtype=np.int64),
            np.array(self.heights, dtype=np.int64),
        )


class CuttingPlan(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: str
    lays: tuple[Lay, ...]
    k: int
    mean_ur: float

    @classmethod
    def from_lays(cls, inst: Instance, lays: Sequence[Lay]) -> "CuttingPlan":
        """Builds a plan whose k and mean_ur are derived from the lays."""
        lays = tuple(lays)
        if lays:
            mean_ur = sum(lay.volume(inst.lengths) for lay in lays) / (
                inst.bed_volume * len(lays)
            )
        else:
            mean_ur = 0.0
        return cls(instance=inst.name, lays=lays, k=len(lays), mean_ur=mean_ur)


# --- Validation results ---


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    location: tuple[int, ...] = ()
    observed: Optional[float] = None
    required: Optional[float] = None
    message: str = ""

    def __str__(self) -> str:
        where = f"[{','.join(str(i) for i in self.location)}]" if self.location else ""
        values = ""
        if self.observed is not None or self.required is not None:
            values = f" observed={_fmt(self.observed)} required={_fmt(self.required)}"
        return f"{self.kind.value}{where}:{values} {self.message}".rstrip()


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    valid: bool
    violations: tuple[Violation, ...] = ()

    @model_validator(mode="after")
    def check_consistency(self) -> "ValidationReport":
        if self.valid != (not self.violations):
            raise ValueError("valid must be True exactly when there are no violations")
        return self

    @classmethod
    def from_violations(cls, violations: Sequence[Violation]) -> "ValidationReport":
        return cls(valid=not violations, violations=tuple(violations))

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}

    def summary(self, limit: int = 5) -> str:
        if self.valid:
            return "valid"
        shown = "; ".join(str(v) for v in self.violations[:limit])
        if len(self.violations) > limit:
            shown += f"; (+{len(self.violations) - limit} more)"
        return shown


def _fmt(value: Optional[float]) -> str:
    if value is None:
        return "-"
    return str(int(value)) if float(value).is_integer() else f"{value:g}"
