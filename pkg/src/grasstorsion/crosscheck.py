"""Compare the formula-side report against the Schubert-cell oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .schubert import DegreeHomology
from .torsion import HomologyReport


@dataclass(frozen=True)
class DegreeCheck:
    d: int
    formula: str
    oracle: str
    match: bool


@dataclass(frozen=True)
class OracleCheck:
    degrees: tuple[DegreeCheck, ...]

    @property
    def match(self) -> bool:
        return all(c.match for c in self.degrees)

    def as_dict(self) -> dict:
        return {
            "checked": True,
            "match": self.match,
            "detail": [
                {"d": c.d, "formula": c.formula, "oracle": c.oracle, "match": c.match}
                for c in self.degrees
            ],
        }


def compare(report: HomologyReport, homology: list[DegreeHomology]) -> OracleCheck:
    """
    Degree-by-degree agreement of free rank and torsion.

    The formula side only ever predicts Z2 summands, so any oracle torsion of
    another order is a mismatch.
    """
    if len(homology) != len(report.rows):
        raise ValueError(f"degree ranges differ: {len(report.rows)} vs {len(homology)}")
    checks = []
    for row, h in zip(report.rows, homology):
        ok = h.free == row.free and h.torsion == (2,) * row.torsion
        checks.append(DegreeCheck(row.d, row.homology, str(h), ok))
    return OracleCheck(tuple(checks))
