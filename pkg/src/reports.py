# src/reports.py
"""JSON wire models. Dump with model_dump(by_alias=True)."""
from __future__ import annotations

from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from src.abhyankar import CriterionTrace, GenNewtonPolygon
from src.bipoly import BiPoly, is_infinite
from src.canon import CanonicalElement, GenericForm
from src.config import FAILURE_LABELS
from src.numsg import SemigroupData, ValidationReport, puiseux_pairs


class _Model(BaseModel):
    model_config = ConfigDict(populate_by_name=True)


class TermOut(_Model):
    c: str
    x: int = Field(ge=0)
    y: int = Field(ge=0)


class PolyOut(_Model):
    terms: List[TermOut] = Field(default_factory=list)


class SemigroupOut(_Model):
    generators: List[int]
    d: List[int]
    e: List[int]
    m: List[int]
    h: int
    conductor: Optional[int] = None
    puiseux_pairs: List[List[int]] = Field(default_factory=list, alias="puiseuxPairs")


class FailureOut(_Model):
    tag: str
    k: Optional[int] = None
    text: str
    label: str


class ValidationOut(_Model):
    valid: bool
    generators: List[int]
    failures: List[FailureOut] = Field(default_factory=list)
    semigroup: Optional[SemigroupOut] = None


class CanonicalOut(_Model):
    generators: List[int]
    thetas: List[List[int]]
    levels: List[str]
    nested: str
    equation: str


class ConstraintOut(_Model):
    i: int
    rhs: int
    coeffs: List[int]


class ForcedOut(_Model):
    theta: List[int]


class GenericLevelOut(_Model):
    e: int
    forced: ForcedOut
    constraints: List[ConstraintOut] = Field(default_factory=list)
    members: List[List[int]] = Field(default_factory=list)


class GenericOut(_Model):
    generators: List[int]
    text: str
    xdeg_bound: int = Field(alias="xdegBound")
    levels: List[GenericLevelOut]


class SampleOut(_Model):
    generators: List[int]
    seed: int
    terms: int
    member: str
    poly: PolyOut


class PolygonOut(_Model):
    points: List[List[int]]
    hull: List[List[int]]


class StageOut(_Model):
    k: int
    e: int
    target: int
    fint_top: Optional[int] = Field(default=None, alias="fintTop")
    fint_checks: str = Field(alias="fintChecks")
    polygon: Optional[PolygonOut] = None


class TraceOut(_Model):
    verdict: str
    r: List[int]
    d: List[int]
    roots: List[str] = Field(default_factory=list)
    stages: List[StageOut] = Field(default_factory=list)
    reason: Optional[str] = None
    stage: Optional[int] = None
    shifted: bool = False


class MilnorOut(_Model):
    milnor: int
    generators: List[int]


class IntersectOut(_Model):
    multiplicity: Union[int, str]
    resultant: str


class ClassOut(_Model):
    generators: List[int]
    conductor: int
    canonical: Optional[str] = None
    puiseux_pairs: List[List[int]] = Field(default_factory=list, alias="puiseuxPairs")


class EnumerationOut(_Model):
    milnor: int
    classes: List[ClassOut] = Field(default_factory=list)


class ErrorOut(_Model):
    error: str
    kind: str
    position: Optional[int] = None
    exit_code: int = Field(alias="exitCode")


def poly_out(p: BiPoly) -> PolyOut:
    return PolyOut(terms=[TermOut(c=str(c), x=i, y=j) for i, j, c in p.sorted_terms()])


def semigroup_out(s: SemigroupData) -> SemigroupOut:
    pairs = [list(pair) for pair in puiseux_pairs(s)] if s.is_valid else []
    return SemigroupOut(
        generators=list(s.r), d=list(s.d), e=list(s.e), m=list(s.m), h=s.h,
        conductor=s.conductor, puiseux_pairs=pairs,
    )


def validation_out(report: ValidationReport, s: SemigroupData | None) -> ValidationOut:
    failures = [
        FailureOut(tag=f.tag, k=f.k, text=str(f), label=FAILURE_LABELS.get(f.tag, f.tag))
        for f in report.failures
    ]
    return ValidationOut(
        valid=report.valid, generators=list(report.generators), failures=failures,
        semigroup=semigroup_out(s) if s is not None and s.is_valid else None,
    )


def canonical_out(element: CanonicalElement) -> CanonicalOut:
    return CanonicalOut(
        generators=list(element.semigroup.r),
        thetas=[list(t) for t in element.thetas],
        levels=[str(g) for g in element.G],
        nested=element.nested(),
        equation=str(element.equation),
    )


def generic_out(form: GenericForm, xdeg_bound: int, members: dict[int, list[tuple[int, ...]]]) -> GenericOut:
    levels = [
        GenericLevelOut(
            e=level.e,
            forced=ForcedOut(theta=list(level.forced)),
            constraints=[ConstraintOut(i=c.i, rhs=c.rhs, coeffs=list(c.coeffs)) for c in level.constraints],
            members=[list(t) for t in members.get(level.k, [])],
        )
        for level in form.levels
    ]
    return GenericOut(generators=list(form.semigroup.r), text=form.text(), xdeg_bound=xdeg_bound, levels=levels)


def _polygon_out(polygon: GenNewtonPolygon | None) -> PolygonOut | None:
    if polygon is None:
        return None
    return PolygonOut(points=[list(p) for p in polygon.points], hull=[list(p) for p in polygon.hull])


def trace_out(trace: CriterionTrace) -> TraceOut:
    stages = [
        StageOut(
            k=st.k, e=st.e, target=st.target,
            fint_top=None if is_infinite(st.fint_top) else st.fint_top,
            fint_checks=st.fint_checks, polygon=_polygon_out(st.polygon),
        )
        for st in trace.stages
    ]
    return TraceOut(
        verdict=trace.verdict, r=list(trace.r), d=list(trace.d),
        roots=[str(g) for g in trace.roots], stages=stages,
        reason=trace.reason, stage=trace.stage, shifted=trace.shifted,
    )


def class_out(s: SemigroupData, canonical: str | None = None) -> ClassOut:
    return ClassOut(
        generators=list(s.r), conductor=s.conductor, canonical=canonical,
        puiseux_pairs=[list(pair) for pair in puiseux_pairs(s)],
    )
