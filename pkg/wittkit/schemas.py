"""
JSON payload models for CLI input and output.

Every payload carries ``schema_version``; coefficients travel as exact
strings ("3", "-1/2", "1+z^2") so that no value ever passes through a float.
"""

import itertools
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from .errors import ParseError
from .exactring import ring_from_text, ring_to_text
from .grouplambda import FgAbelianGroup, GroupRingElement
from .kummercoh import Cocycle, CohomologyGroup
from .textio import parse_element, polynomial_from_json, polynomial_to_json
from .wittrat import RationalWittVector, wr_normalize
from .wittvec import GhostVector, TruncatedWittVector

SCHEMA_VERSION = "1"


class Payload(BaseModel):
    schema_version: str = SCHEMA_VERSION


class WittVectorPayload(Payload):
    ring: str
    N: int = Field(..., ge=1)
    tail: List[str]


class GhostPayload(Payload):
    ring: str
    N: int
    components: List[str]


class RationalWittPayload(Payload):
    ring: str
    num: List[str]
    den: List[str]


class GroupPayload(Payload):
    rank: int = Field(0, ge=0)
    torsion: List[int] = Field(default_factory=list)


class GroupRingTerm(BaseModel):
    exp: List[int]
    coeff: int


class GroupRingPayload(GroupPayload):
    terms: List[GroupRingTerm] = Field(default_factory=list)


class MatrixPayload(Payload):
    rows: List[List[int]]


class SmithPayload(Payload):
    diagonal: List[int]
    U: List[List[int]]
    V: List[List[int]]


class OverlatticePayload(Payload):
    rank: int
    index: int
    basis: List[List[str]]
    deck_group: GroupPayload


class CoversPayload(Payload):
    rank: int
    index: int
    count: int
    lattices: List[OverlatticePayload]


class DeckRestrictionPayload(Payload):
    source: GroupPayload
    target: GroupPayload
    inclusion: List[List[int]]
    index: int
    surjective: bool


class SolenoidStagePayload(BaseModel):
    denominator: int
    order: int
    surjective: bool
    kernel_order: int


class SolenoidPayload(Payload):
    stages: List[SolenoidStagePayload]


class CocycleEntry(BaseModel):
    args: List[List[int]]
    value: List[int]


class CocyclePayload(Payload):
    degree: int
    is_cocycle: bool
    values: List[CocycleEntry]


class CohomologyPayload(Payload):
    degree: int
    acting_group: GroupPayload
    module: GroupPayload
    cohomology: GroupPayload
    representatives: List[CocyclePayload]


class KummerPairingPayload(Payload):
    conductor: int
    n: int
    sigma: List[int]
    alpha: str
    exponent: int


class ResolventPayload(Payload):
    conductor: int
    zeta: str
    sigma: List[int]
    alpha: str
    verified: bool


class PhiPayload(Payload):
    prime: int
    check: str
    value: Optional[RationalWittPayload] = None
    ghosts: List[GhostPayload] = Field(default_factory=list)
    holds: bool = True


class TowittPayload(Payload):
    value: RationalWittPayload
    prime: Optional[int] = None
    compatible: Optional[bool] = None


class CongruencePayload(Payload):
    p: int
    difference: GroupRingPayload
    divisible: bool


class ErrorPayload(Payload):
    error: str
    message: str
    details: Dict[str, str] = Field(default_factory=dict)


class SuiteResult(BaseModel):
    name: str
    checks: int
    passed: int
    failed: int
    first_failure: Optional[str] = None


class VerifyReport(Payload):
    seed: int
    suites: List[SuiteResult]
    ok: bool


def load_payload(model: type, text: str) -> Any:
    """
    Validate JSON text against a payload model

    Raises:
        ParseError: if the JSON is malformed or does not match the model
    """
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        raise ParseError(f"Invalid {model.__name__} JSON", {"reason": str(exc)}) from exc


def dump_payload(payload: BaseModel) -> str:
    return payload.model_dump_json()


# ---------------------------------------------------------------------------
# Conversions between payloads and domain values
# ---------------------------------------------------------------------------

def witt_to_payload(u: TruncatedWittVector) -> WittVectorPayload:
    return WittVectorPayload(ring=ring_to_text(u.ring), N=u.N, tail=[u.ring.format(a) for a in u.tail])


def witt_from_payload(payload: WittVectorPayload) -> TruncatedWittVector:
    ring = ring_from_text(payload.ring)
    if len(payload.tail) != payload.N:
        raise ParseError(f"Tail has {len(payload.tail)} entries, expected {payload.N}")
    return TruncatedWittVector(ring, payload.N, tuple(parse_element(a, ring) for a in payload.tail))


def ghost_to_payload(g: GhostVector) -> GhostPayload:
    return GhostPayload(ring=ring_to_text(g.ring), N=g.N, components=[g.ring.format(c) for c in g.components])


def wr_to_payload(u: RationalWittVector) -> RationalWittPayload:
    return RationalWittPayload(ring=ring_to_text(u.ring), num=polynomial_to_json(u.num), den=polynomial_to_json(u.den))


def wr_from_payload(payload: RationalWittPayload) -> RationalWittVector:
    ring = ring_from_text(payload.ring)
    return wr_normalize(polynomial_from_json(payload.num, ring), polynomial_from_json(payload.den, ring))


def group_to_payload(group: FgAbelianGroup) -> GroupPayload:
    return GroupPayload(rank=group.rank, torsion=list(group.torsion))


def group_from_payload(payload: GroupPayload) -> FgAbelianGroup:
    return FgAbelianGroup(rank=payload.rank, torsion=tuple(payload.torsion))


def group_ring_to_payload(x: GroupRingElement) -> GroupRingPayload:
    return GroupRingPayload(
        rank=x.group.rank,
        torsion=list(x.group.torsion),
        terms=[GroupRingTerm(exp=list(exp), coeff=coeff) for exp, coeff in x.terms],
    )


def group_ring_from_payload(payload: GroupRingPayload) -> GroupRingElement:
    group = FgAbelianGroup(rank=payload.rank, torsion=tuple(payload.torsion))
    terms: Dict[Tuple[int, ...], int] = {}
    for term in payload.terms:
        key = group.reduce(term.exp)
        terms[key] = terms.get(key, 0) + term.coeff
    return GroupRingElement.from_mapping(group, terms)



def cocycle_to_payload(c: Cocycle) -> CocyclePayload:
    """Dense table in product order of G^p, the order of ``Cocycle.values``."""
    elements = list(c.gmodule.group.elements())
    entries = [
        CocycleEntry(args=[list(g) for g in args], value=list(value))
        for args, value in zip(itertools.product(elements, repeat=c.degree), c.values)
    ]
    return CocyclePayload(degree=c.degree, is_cocycle=c.is_cocycle, values=entries)


def cohomology_to_payload(H: CohomologyGroup) -> CohomologyPayload:
    return CohomologyPayload(
        degree=H.degree,
        acting_group=group_to_payload(H.gmodule.group),
        module=group_to_payload(H.gmodule.module),
        cohomology=group_to_payload(H.group),
        representatives=[cocycle_to_payload(c) for c in H.representatives],
    )
