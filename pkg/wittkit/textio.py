"""
Text forms of exact values.

Polynomials are written in ascending powers of ``t`` (``1-2t+3t^2``), rational
fractions as ``(<poly>)/(<poly>)``, cyclotomic coefficients as polynomials in
``z`` = zeta_N, groups as ``rank=r;torsion=d1,d2``. Parsing goes through sympy so
that users may write any expression that expands to a polynomial.
"""

import json
import logging
import re
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from sympy import Poly, Symbol, fraction, together
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from .errors import ParseError
from .exactring import (
    CyclotomicField,
    CyclotomicNumber,
    FractionField,
    Polynomial,
    RingDescriptor,
)
from .grouplambda import FgAbelianGroup, GroupRingElement
from .kummercoh import KummerElement, KummerExtension

logger = logging.getLogger(__name__)

T = Symbol("t")
Z = Symbol("z")

_TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application, convert_xor)
_RADICAL = re.compile(r"^\s*\(?\s*(-?\d+(?:/\d+)?)\s*\)?\s*\^\s*\(\s*1\s*/\s*(\d+)\s*\)\s*$")
_GROUP = re.compile(r"^\s*(?:rank\s*=\s*(\d+)\s*;?)?\s*(?:torsion\s*=\s*([\d,\s]*))?\s*$")


def _parse(text: str, names: Dict[str, Symbol]):
    try:
        return parse_expr(text, local_dict=dict(names), transformations=_TRANSFORMATIONS)
    except Exception as exc:  # sympy raises a zoo of exception types on bad input
        raise ParseError(f"Cannot parse {text!r}", {"reason": str(exc)}) from exc


def _rational(value) -> Fraction:
    try:
        return Fraction(int(value.p), int(value.q))
    except AttributeError:
        raise ParseError(f"Coefficient {value} is not rational") from None


def _is_cyclotomic(ring: RingDescriptor) -> bool:
    if isinstance(ring, FractionField):
        return _is_cyclotomic(ring.base)
    return isinstance(ring, CyclotomicField)


def _conductor(ring: RingDescriptor) -> int:
    return ring.base.conductor if isinstance(ring, FractionField) else ring.conductor


def _to_poly(expr, gens: Sequence[Symbol], text: str) -> Poly:
    try:
        return Poly(expr.expand(), *gens, domain="QQ")
    except Exception as exc:
        raise ParseError(f"{text!r} is not a polynomial in {', '.join(map(str, gens))}") from exc


def _coefficients_by_degree(expr, ring: RingDescriptor, text: str) -> Dict[int, Any]:
    """Collect t-degree -> ring element from a sympy expression in t (and z)."""
    cyclotomic = _is_cyclotomic(ring)
    gens = (T, Z) if cyclotomic else (T,)
    poly = _to_poly(expr, gens, text)
    buckets: Dict[int, Dict[int, Fraction]] = {}
    for monomial, coeff in poly.terms():
        t_degree = monomial[0]
        z_degree = monomial[1] if cyclotomic else 0
        buckets.setdefault(t_degree, {})[z_degree] = _rational(coeff)
    out: Dict[int, Any] = {}
    for degree, parts in buckets.items():
        if cyclotomic:
            width = max(parts) + 1
            value = CyclotomicNumber(_conductor(ring), tuple(parts.get(j, Fraction(0)) for j in range(width)))
            out[degree] = ring.coerce(value)
        else:
            out[degree] = ring.coerce(parts[0])
    return out


def _polynomial_from_expr(expr, ring: RingDescriptor, text: str) -> Polynomial:
    coeffs = _coefficients_by_degree(expr, ring, text)
    if not coeffs:
        return Polynomial.zero(ring)
    top = max(coeffs)
    return Polynomial(ring, tuple(coeffs.get(k, ring.zero()) for k in range(top + 1)))


def parse_polynomial(text: str, ring: RingDescriptor) -> Polynomial:
    """
    Parse a polynomial in ``t``, e.g. ``1 - 2t + 3t^2`` or ``(1-2t)(1-3t)``

    Raises:
        ParseError: if the text is not a polynomial in t (and z over Qzeta)
    """
    names = {"t": T, "z": Z} if _is_cyclotomic(ring) else {"t": T}
    return _polynomial_from_expr(_parse(text, names), ring, text)


def parse_fraction(text: str, ring: RingDescriptor) -> Tuple[Polynomial, Polynomial]:
    """Parse ``(<poly>)/(<poly>)`` (or a bare polynomial) into numerator and denominator."""
    names = {"t": T, "z": Z} if _is_cyclotomic(ring) else {"t": T}
    expr = _parse(text, names)
    num, den = fraction(together(expr))
    if den.has(T):
        return _polynomial_from_expr(num, ring, text), _polynomial_from_expr(den, ring, text)
    # constant denominators are folded into the numerator
    return _polynomial_from_expr(num / den, ring, text), Polynomial.one(ring)


def parse_element(text: str, ring: RingDescriptor):
    """Parse a single ring element such as ``-3``, ``1/2`` or ``1+z^2``."""
    names = {"z": Z} if _is_cyclotomic(ring) else {}
    expr = _parse(text, names)
    if expr.has(T):
        raise ParseError(f"Ring element {text!r} must not contain t")
    return _coefficients_by_degree(expr, ring, text).get(0, ring.zero())


def format_element(ring: RingDescriptor, value) -> str:
    return ring.format(value)


def polynomial_to_json(f: Polynomial) -> List[str]:
    """Ascending coefficient strings; the zero polynomial is the empty list."""
    return [f.ring.format(c) for c in f.coeffs]


def polynomial_from_json(items: Sequence[Any], ring: RingDescriptor) -> Polynomial:
    return Polynomial(ring, tuple(parse_element(str(item), ring) for item in items))


def parse_radical(text: str) -> Tuple[Fraction, int]:
    """Parse ``a^(1/m)`` into (a, m)."""
    match = _RADICAL.match(text)
    if not match:
        raise ParseError(f"Radical must look like 'a^(1/m)', got {text!r}")
    return Fraction(match.group(1)), int(match.group(2))


def parse_group(text: str) -> Tuple[int, List[int]]:
    """
    Parse ``rank=r;torsion=d1,d2,...``

    Either part may be omitted. A bare comma list such as ``6`` or ``2,2`` is
    read as torsion with rank 0.
    """
    match = _GROUP.match(text or "")
    if match and (match.group(1) is not None or match.group(2) is not None):
        rank = int(match.group(1) or 0)
        torsion_text = (match.group(2) or "").strip()
    elif re.fullmatch(r"[\d,\s]+", text or ""):
        rank, torsion_text = 0, text
    else:
        raise ParseError(f"Group must look like 'rank=r;torsion=d1,d2', got {text!r}")
    torsion = [int(part) for part in torsion_text.split(",") if part.strip()]
    return rank, torsion


def format_group(rank: int, torsion: Sequence[int]) -> str:
    parts = []
    if rank or not torsion:
        parts.append(f"rank={rank}")
    if torsion:
        parts.append(f"torsion={','.join(str(d) for d in torsion)}")
    return ";".join(parts)


def parse_int_matrix(text: str) -> List[List[int]]:
    """Row-major integer matrix in JSON form, e.g. ``[[2,4],[6,8]]``."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Matrix must be a JSON array of integer rows, got {text!r}") from exc
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("Matrix must be a list of rows")
    if rows and len({len(r) for r in rows}) != 1:
        raise ParseError("Matrix rows have different lengths")
    try:
        return [[int(x) for x in r] for r in rows]
    except (TypeError, ValueError) as exc:
        raise ParseError("Matrix entries must be integers") from exc


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError(f"Expected a comma separated list of integers, got {text!r}") from exc


_GROUP_RING_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*\[([-\d,\s]*)\]\s*")


def parse_group_ring(text: str, group: FgAbelianGroup) -> GroupRingElement:
    """
    Parse ``2[1,0]-[0,3]+[0,0]``: integer multiples of bracketed group elements

    A leading ``{`` switches to the JSON payload form, whose group must agree
    with ``group``.
    """
    text = (text or "").strip()
    if text in ("", "0"):
        return GroupRingElement(group)
    terms: Dict[Tuple[int, ...], int] = {}
    position = 0
    while position < len(text):
        match = _GROUP_RING_TERM.match(text, position)
        if not match or match.end() == position:
            raise ParseError(f"Cannot parse group ring element {text!r} at position {position}")
        sign, count, body = match.groups()
        if position and not sign:
            raise ParseError(f"Missing '+' or '-' between terms of {text!r}")
        coeff = int(count) if count else 1
        if sign == "-":
            coeff = -coeff
        try:
            exp = tuple(int(part) for part in body.split(",") if part.strip())
        except ValueError as exc:
            raise ParseError(f"Group element [{body}] must list integers") from exc
        key = group.reduce(exp)
        terms[key] = terms.get(key, 0) + coeff
        position = match.end()
    return GroupRingElement.from_mapping(group, terms)


def _radical_symbols(count: int) -> List[Symbol]:
    if count == 1:
        return [Symbol("y")]
    return [Symbol(f"y{i + 1}") for i in range(count)]


def parse_kummer_element(text: str, ext: KummerExtension) -> KummerElement:
    """
    Parse a polynomial in the radicals (``y``, or ``y1``, ``y2``, ... for several)
    with coefficients in ``z`` = zeta_N, e.g. ``y^2 + (1+z)y``
    """
    ys = _radical_symbols(len(ext.radicals))
    names = {str(y): y for y in ys}
    names["z"] = Z
    expr = _parse(text, names)
    poly = _to_poly(expr, tuple(ys) + (Z,), text)
    N = ext.conductor
    total = ext.zero()
    for monomial, coeff in poly.terms():
        term = ext.from_base(CyclotomicNumber.zeta(N, monomial[-1]) * _rational(coeff))
        for i, e in enumerate(monomial[:-1]):
            if e:
                term = ext.mul(term, ext.pow(ext.generator(i), e))
        total = ext.add(total, term)
    return total


def parse_rational_matrix(text: str) -> List[List[Fraction]]:
    """JSON rows of integers or fraction strings, e.g. ``[["1/2", 0], [0, 1]]``."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Matrix must be a JSON array of rows, got {text!r}") from exc
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("Matrix must be a non-empty list of rows")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("Matrix rows have different lengths")
    try:
        return [[Fraction(str(x)) for x in r] for r in rows]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"Matrix entries must be rationals, got {text!r}") from exc


def parse_int_matrices(text: str) -> List[List[List[int]]]:
    """A JSON list of integer matrices, e.g. ``[[[-1]], [[1]]]``."""
    try:
        items = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Expected a JSON list of matrices, got {text!r}") from exc
    if not isinstance(items, list):
        raise ParseError("Expected a JSON list of matrices")
    return [parse_int_matrix(json.dumps(item)) for item in items]
