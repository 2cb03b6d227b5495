"""JSON report schemas

The models validate every record before it is written, and AtlasRecord's
JSON schema is the documented format of ``sol-sapphire atlas --format json``.
"""
from pydantic import BaseModel, ConfigDict, Field, conlist

from .covers import CoverDescriptor, HomPartition
from .intlinalg import AbelianGroup
from .involutions import BUVerdict, InvolutionReport

# [[r, s], [t, u]]
MatrixRows = conlist(conlist(int, min_length=2, max_length=2), min_length=2, max_length=2)


class H1Record(BaseModel):
    model_config = ConfigDict(frozen=True)

    invariant_factors: list[int] = Field(..., description="d1 | d2 | ..., each >= 2")
    free_rank: int = Field(0, ge=0)

    @classmethod
    def of(cls, group: AbelianGroup) -> "H1Record":
        return cls(invariant_factors=list(group.invariant_factors), free_rank=group.free_rank)

    def flat(self) -> str:
        """Dot separated factors, e.g. ``4.4``; free summands as leading ``0``s"""
        return ".".join(str(d) for d in [0] * self.free_rank + self.invariant_factors)


class HomImages(BaseModel):
    a: int = Field(..., ge=0, le=1)
    b: int = Field(..., ge=0, le=1)
    c: int = Field(..., ge=0, le=1)


class CoverRecord(BaseModel):
    case: str
    hom: HomImages
    kind: str = Field(..., pattern="^(sapphire|torus-bundle)$")
    matrix: MatrixRows
    h1: H1Record

    @classmethod
    def of(cls, cover: CoverDescriptor) -> "CoverRecord":
        return cls.model_validate(cover.to_dict())


class HomClassRecord(BaseModel):
    cases: list[str]
    status: str = Field(..., pattern="^(proven-distinct|proven-equivalent|unknown)$")


class InvolutionRecord(BaseModel):
    count: str = Field(..., pattern="^(none|exactly-one|exactly-three|three-to-five)$")
    quotients: list[MatrixRows]
    canonical_quotients: list[MatrixRows]
    notes: list[str] = []

    @classmethod
    def of(cls, report: InvolutionReport) -> "InvolutionRecord":
        return cls(
            count=report.count.value,
            quotients=[q.matrix.rows() for q in report.quotients],
            canonical_quotients=[q.matrix.rows() for q in report.canonical_quotients],
            notes=list(report.notes),
        )


class BURecord(BaseModel):
    n: int = Field(..., ge=1)
    verdict: str = Field(..., pattern="^(holds|fails|vacuous-no-involution)$")
    rationale: str

    @classmethod
    def of(cls, verdict: BUVerdict) -> "BURecord":
        return cls(n=verdict.n, verdict=verdict.outcome.value, rationale=verdict.rationale)


class AtlasRecord(BaseModel):
    """One atlas row; every field is recomputable from ``matrix``"""

    matrix: MatrixRows
    canonical: MatrixRows
    det: int = Field(..., description="+1 or -1")
    h1: H1Record
    covers: list[CoverRecord]
    hom_partition: list[HomClassRecord]
    involutions: InvolutionRecord
    bu: dict[str, BURecord] = Field(..., description="keys n1, n2, n3, n>=4")


def hom_partition_records(partition: HomPartition) -> list[HomClassRecord]:
    return [HomClassRecord(cases=list(c.cases), status=c.status.value) for c in partition.classes]
