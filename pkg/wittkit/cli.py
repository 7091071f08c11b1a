"""
Command-line entry point.

``wittkit <group> <operation> [flags] VALUE...`` with groups witt, wrat,
groupring, abelian, cohom and verify. Text results go to stdout; with
``--json`` the versioned payload is printed instead.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence, Tuple

from pydantic import BaseModel

from . import instructions
from .config import get_settings
from .dualtop import (
    Overlattice,
    covering_deck_group,
    deck_restriction,
    enumerate_overlattices,
    ext_to_Z,
    group_from_relations,
    pi0_path_dual,
    pi0_spec_group_algebra,
    smith_normal_form,
    solenoid_stage_chain,
    stage_order,
)
from .errors import KummerError, ParseError, WittKitError
from .exactring import (
    CyclotomicField,
    CyclotomicNumber,
    RingDescriptor,
    format_fraction,
    format_polynomial,
    ring_from_text,
)
from .grouplambda import (
    FgAbelianGroup,
    GroupRingElement,
    WittAssignment,
    divisible_by,
    frobenius_compat_check,
    frobenius_congruence_check,
    gr_frobenius_lift,
    gr_mul,
    to_witt,
)
from .kummercoh import (
    GaloisElement,
    KummerExtension,
    galois_symbol,
    group_cohomology,
    hilbert90_resolvent,
    kummer_pairing,
)
from .schemas import (
    CongruencePayload,
    CoversPayload,
    DeckRestrictionPayload,
    ErrorPayload,
    GroupRingPayload,
    KummerPairingPayload,
    OverlatticePayload,
    PhiPayload,
    ResolventPayload,
    SmithPayload,
    SolenoidPayload,
    SolenoidStagePayload,
    TowittPayload,
    cocycle_to_payload,
    cohomology_to_payload,
    ghost_to_payload,
    group_ring_from_payload,
    group_ring_to_payload,
    group_to_payload,
    load_payload,
    witt_to_payload,
    wr_to_payload,
)
from .textio import (
    format_group,
    parse_element,
    parse_fraction,
    parse_group,
    parse_group_ring,
    parse_int_list,
    parse_int_matrices,
    parse_int_matrix,
    parse_kummer_element,
    parse_polynomial,
    parse_radical,
    parse_rational_matrix,
)
from .verify import SUITES, format_report, run_verify
from .wittrat import (
    RationalWittVector,
    phi_p,
    phi_p_minus_scalar_check,
    phi_p_teichmuller_sum,
    vanishing_pattern,
    wr_add,
    wr_base_change,
    wr_frobenius,
    wr_ghost,
    wr_mul,
    wr_neg,
    wr_normalize,
    wr_verschiebung,
    zeta_minus_one_check,
)
from .wittvec import (
    GhostVector,
    TruncatedWittVector,
    frobenius,
    ghost,
    ghost_inverse,
    teichmuller,
    verschiebung,
    witt_add,
    witt_from_series,
    witt_mul,
    witt_neg,
)

logger = logging.getLogger(__name__)

Result = Tuple[str, BaseModel]


# ---------------------------------------------------------------------------
# Argument types (ValueError subclasses become usage errors naming the flag)
# ---------------------------------------------------------------------------

def ring_descriptor(text: str) -> RingDescriptor:
    return ring_from_text(text)


def abelian_group(text: str) -> FgAbelianGroup:
    """Any torsion list is accepted and brought to invariant-factor form."""
    rank, torsion = parse_group(text)
    if any(d < 1 for d in torsion):
        raise ParseError(f"Torsion orders must be positive, got {torsion}")
    relations = [[d if i == j else 0 for j in range(len(torsion))] for i, d in enumerate(torsion)]
    finite = group_from_relations(relations, len(torsion)) if torsion else FgAbelianGroup()
    return FgAbelianGroup(rank=rank + finite.rank, torsion=finite.torsion)


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {text}")
    return value


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(f"expected a non-negative integer, got {text}")
    return value


# ---------------------------------------------------------------------------
# witt
# ---------------------------------------------------------------------------

def _witt(text: str, ring: RingDescriptor, N: int) -> TruncatedWittVector:
    return witt_from_series(parse_polynomial(text, ring), N)


def _witt_result(u: TruncatedWittVector) -> Result:
    return format_polynomial(u.series()), witt_to_payload(u)


def _ghost_result(g: GhostVector) -> Result:
    return str(g), ghost_to_payload(g)


def handle_witt(args: argparse.Namespace) -> Result:
    ring, N, values = args.ring, args.depth, args.values
    if args.op == "teich":
        return _witt_result(teichmuller(parse_element(values[0], ring), ring, N))
    if args.op == "ghostinv":
        parts = [part for part in values[0].split(",") if part.strip()]
        g = GhostVector(ring, N, tuple(parse_element(part, ring) for part in parts))
        return _witt_result(ghost_inverse(g))
    operands = [_witt(text, ring, N) for text in values]
    if args.op == "add":
        return _witt_result(witt_add(*operands))
    if args.op == "mul":
        return _witt_result(witt_mul(*operands))
    if args.op == "neg":
        return _witt_result(witt_neg(operands[0]))
    if args.op == "ghost":
        return _ghost_result(ghost(operands[0]))
    if args.op == "frob":
        return _witt_result(frobenius(args.index, operands[0]))
    return _witt_result(verschiebung(args.index, operands[0]))


# ---------------------------------------------------------------------------
# wrat
# ---------------------------------------------------------------------------

def _wrat(text: str, ring: RingDescriptor) -> RationalWittVector:
    return wr_normalize(*parse_fraction(text, ring))


def _wrat_result(u: RationalWittVector) -> Result:
    return format_fraction(u.num, u.den), wr_to_payload(u)


def _handle_phi(args: argparse.Namespace) -> Result:
    p = args.prime
    if args.check == "none":
        value = phi_p(p)
        return format_fraction(value.num, value.den), PhiPayload(prime=p, check="none", value=wr_to_payload(value))
    if args.check == "scalar":
        g = phi_p_minus_scalar_check(p, args.depth)
        holds = all(c in (0, -p) for c in g.components)
        payload = PhiPayload(prime=p, check="scalar", ghosts=[ghost_to_payload(g)], holds=holds)
        return f"{g}\nholds={str(holds).lower()}", payload
    if args.check == "teich":
        total = phi_p_teichmuller_sum(p)
        holds = total == wr_base_change(phi_p(p), CyclotomicField(p))
        payload = PhiPayload(prime=p, check="teich", value=wr_to_payload(total), holds=holds)
        return f"{format_fraction(total.num, total.den)}\nholds={str(holds).lower()}", payload
    difference, shifted = zeta_minus_one_check(p, args.depth)
    holds = vanishing_pattern(difference) == vanishing_pattern(shifted)
    payload = PhiPayload(
        prime=p, check="zeta", ghosts=[ghost_to_payload(difference), ghost_to_payload(shifted)], holds=holds
    )
    return f"{difference}\n{shifted}\nholds={str(holds).lower()}", payload


def handle_wrat(args: argparse.Namespace) -> Result:
    if args.op == "phi":
        return _handle_phi(args)
    operands = [_wrat(text, args.ring) for text in args.values]
    if args.op == "add":
        return _wrat_result(wr_add(*operands))
    if args.op == "mul":
        return _wrat_result(wr_mul(*operands))
    if args.op == "neg":
        return _wrat_result(wr_neg(operands[0]))
    if args.op == "frob":
        return _wrat_result(wr_frobenius(args.index, operands[0]))
    if args.op == "versch":
        return _wrat_result(wr_verschiebung(args.index, operands[0]))
    return _ghost_result(wr_ghost(operands[0], args.depth))


# ---------------------------------------------------------------------------
# groupring
# ---------------------------------------------------------------------------

def _group_ring(text: str, group: FgAbelianGroup) -> GroupRingElement:
    if text.lstrip().startswith("{"):
        x = group_ring_from_payload(load_payload(GroupRingPayload, text))
        if x.group != group:
            raise ParseError(f"JSON element lives in {x.group}, expected {group}")
        return x
    return parse_group_ring(text, group)


def _group_ring_result(x: GroupRingElement) -> Result:
    return str(x), group_ring_to_payload(x)


def handle_groupring(args: argparse.Namespace) -> Result:
    group = args.group
    operands = [_group_ring(text, group) for text in args.values]
    if args.op == "mul":
        return _group_ring_result(gr_mul(*operands))
    if args.op == "frob":
        return _group_ring_result(gr_frobenius_lift(args.prime, operands[0]))
    if args.op == "congruence":
        difference = frobenius_congruence_check(args.prime, operands[0])
        divisible = divisible_by(difference, args.prime)
        payload = CongruencePayload(p=args.prime, difference=group_ring_to_payload(difference), divisible=divisible)
        return f"{difference}\ndivisible={str(divisible).lower()}", payload
    ring = args.ring
    images = tuple(parse_element(part, ring) for part in args.images.split(",") if part.strip())
    assignment = WittAssignment(group, ring, images, bad_prime=args.bad_prime)
    value = to_witt(operands[0], assignment)
    text = format_fraction(value.num, value.den)
    if args.prime is None:
        return text, TowittPayload(value=wr_to_payload(value))
    compatible = frobenius_compat_check(args.prime, operands[0], assignment)
    payload = TowittPayload(value=wr_to_payload(value), prime=args.prime, compatible=compatible)
    return f"{text}\ncompatible={str(compatible).lower()}", payload


# ---------------------------------------------------------------------------
# abelian
# ---------------------------------------------------------------------------

def _group_result(group: FgAbelianGroup) -> Result:
    return format_group(group.rank, group.torsion), group_to_payload(group)


def _overlattice_payload(N: Overlattice) -> OverlatticePayload:
    return OverlatticePayload(
        rank=N.rank,
        index=N.index,
        basis=[[str(x) for x in row] for row in N.basis],
        deck_group=group_to_payload(covering_deck_group(N)),
    )


def handle_abelian(args: argparse.Namespace) -> Result:
    op = args.op
    if op == "snf":
        smith = smith_normal_form(parse_int_matrix(args.matrix))
        diagonal = list(smith.diagonal)
        payload = SmithPayload(diagonal=diagonal, U=[list(r) for r in smith.U], V=[list(r) for r in smith.V])
        return "diagonal=" + ",".join(str(d) for d in diagonal), payload
    if op == "ext":
        return _group_result(ext_to_Z(args.group))
    if op == "pi0dual":
        return _group_result(pi0_path_dual(args.group))
    if op == "pi0spec":
        return _group_result(pi0_spec_group_algebra(args.group))
    if op == "covers":
        lattices = enumerate_overlattices(args.rank, args.index)
        lines = [f"count={len(lattices)}"]
        for N in lattices:
            deck = covering_deck_group(N)
            lines.append(f"{N} deck={format_group(deck.rank, deck.torsion)}")
        payload = CoversPayload(
            rank=args.rank, index=args.index, count=len(lattices),
            lattices=[_overlattice_payload(N) for N in lattices],
        )
        return "\n".join(lines), payload
    if op == "deck":
        N = Overlattice.from_basis(parse_rational_matrix(args.basis))
        if args.within is None:
            deck = covering_deck_group(N)
            return f"{N} deck={format_group(deck.rank, deck.torsion)}", _overlattice_payload(N)
        restriction = deck_restriction(N, Overlattice.from_basis(parse_rational_matrix(args.within)))
        payload = DeckRestrictionPayload(
            source=group_to_payload(restriction.source),
            target=group_to_payload(restriction.target),
            inclusion=[list(r) for r in restriction.inclusion],
            index=restriction.index,
            surjective=restriction.surjective,
        )
        text = (
            f"source={format_group(restriction.source.rank, restriction.source.torsion)} "
            f"target={format_group(restriction.target.rank, restriction.target.torsion)} "
            f"index={restriction.index} surjective={str(restriction.surjective).lower()}"
        )
        return text, payload
    stages = solenoid_stage_chain(parse_int_list(args.chain))
    rows = [
        SolenoidStagePayload(
            denominator=s.denominator, order=stage_order(s), surjective=s.surjective, kernel_order=s.kernel_order
        )
        for s in stages
    ]
    lines = [
        f"n={r.denominator} order={r.order} surjective={str(r.surjective).lower()} kernel={r.kernel_order}"
        for r in rows
    ]
    return "\n".join(lines), SolenoidPayload(stages=rows)


# ---------------------------------------------------------------------------
# cohom
# ---------------------------------------------------------------------------

def _extension(args: argparse.Namespace) -> KummerExtension:
    N = args.base_conductor
    radicals = []
    for text in args.radical:
        a, m = parse_radical(text)
        radicals.append((CyclotomicNumber.constant(N, a), m))
    return KummerExtension(N, tuple(radicals))


def _sigma(text: Optional[str], ext: KummerExtension) -> Optional[GaloisElement]:
    if text is None:
        return None
    exponents = parse_int_list(text)
    if len(exponents) != len(ext.radicals):
        raise ParseError(f"--sigma needs {len(ext.radicals)} exponents, got {len(exponents)}")
    return ext.galois_element(exponents)


def _common_exponent(ext: KummerExtension) -> int:
    moduli = set(ext.moduli)
    if len(moduli) != 1:
        raise KummerError(f"Radicals have different exponents {ext.moduli}; pass --n")
    return moduli.pop()


def handle_cohom(args: argparse.Namespace) -> Result:
    op = args.op
    if op == "table":
        action = parse_int_matrices(args.action) if args.action else None
        H = group_cohomology(args.group, args.module, args.degree, action)
        return format_group(H.group.rank, H.group.torsion), cohomology_to_payload(H)
    if op == "symbol":
        radicands = []
        for text in args.radical:
            a, m = parse_radical(text)
            if m != args.n:
                raise KummerError(f"Radical {text} does not have exponent {args.n}")
            radicands.append(a)
        ext = KummerExtension.from_radicands(args.base_conductor, args.n, radicands)
        symbol = galois_symbol(parse_element(args.alpha, CyclotomicField(args.base_conductor)), ext, args.n)
        lines = [
            f"({','.join(str(k) for k in g)}) -> {value[0]}"
            for g, value in zip(symbol.gmodule.group.elements(), symbol.values)
        ]
        return "\n".join(lines), cocycle_to_payload(symbol)
    ext = _extension(args)
    sigma = _sigma(args.sigma, ext)
    if op == "kummer":
        n = args.n or _common_exponent(ext)
        if sigma is None:
            sigma = ext.galois_element([1] * len(ext.radicals))
        alpha = parse_kummer_element(args.alpha, ext)
        exponent = kummer_pairing(sigma, alpha, n)
        payload = KummerPairingPayload(
            conductor=ext.conductor, n=n, sigma=list(sigma.exponents), alpha=str(alpha), exponent=exponent
        )
        return str(exponent), payload
    zeta = parse_element(args.zeta, ext.field)
    alpha = hilbert90_resolvent(ext, zeta, sigma, seed=args.seed)
    used = sigma or ext.galois_element([1] * len(ext.radicals))
    verified = ext.apply(used, alpha) == ext.scale(zeta, alpha)
    payload = ResolventPayload(
        conductor=ext.conductor, zeta=str(zeta), sigma=list(used.exponents), alpha=str(alpha), verified=verified
    )
    return f"{alpha}\nverified={str(verified).lower()}", payload


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def handle_verify(args: argparse.Namespace) -> Result:
    seed = get_settings().seed if args.seed is None else args.seed
    report = run_verify(args.suite, seed, trials=args.trials)
    return format_report(report), report


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _leaf(ops, name: str, common: argparse.ArgumentParser, help_text: str) -> argparse.ArgumentParser:
    return ops.add_parser(name, parents=[common], help=help_text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the versioned JSON payload")

    parser = argparse.ArgumentParser(
        prog="wittkit",
        description=instructions.program_description,
        epilog=instructions.grammar_epilog,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--log-level", type=str.upper, choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        default=None, help="override WITTKIT_LOG_LEVEL for this run",
    )
    groups = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    witt = groups.add_parser("witt", help="truncated big Witt vectors", description=instructions.witt_description)
    witt_ops = witt.add_subparsers(dest="op", required=True, metavar="OP")
    for name, arity, help_text in (
        ("add", 2, "Witt sum (series product)"),
        ("mul", 2, "Witt product"),
        ("neg", 1, "additive inverse"),
        ("ghost", 1, "ghost components"),
        ("ghostinv", 1, "Witt vector from comma separated ghost components (Q-algebras)"),
        ("teich", 1, "Teichmuller lift [a] = 1 - a t"),
        ("frob", 1, "Frobenius F_m, depth N // m"),
        ("versch", 1, "Verschiebung V_m"),
    ):
        leaf = _leaf(witt_ops, name, common, help_text)
        leaf.add_argument("--ring", type=ring_descriptor, required=True)
        leaf.add_argument("--depth", type=positive_int, required=True)
        if name in ("frob", "versch"):
            leaf.add_argument("--index", type=positive_int, required=True)
        leaf.add_argument("values", nargs=arity, metavar="VALUE")
    witt.set_defaults(handler=handle_witt)

    wrat = groups.add_parser("wrat", help="rational Witt vectors", description=instructions.wrat_description)
    wrat_ops = wrat.add_subparsers(dest="op", required=True, metavar="OP")
    for name, arity, help_text in (
        ("add", 2, "sum of fractions"),
        ("mul", 2, "product by resultants"),
        ("neg", 1, "additive inverse"),
        ("frob", 1, "Frobenius, roots raised to the m-th power"),
        ("versch", 1, "Verschiebung t -> t^m"),
        ("ghost", 1, "ghost components to the given depth"),
    ):
        leaf = _leaf(wrat_ops, name, common, help_text)
        leaf.add_argument("--ring", type=ring_descriptor, required=True)
        if name in ("frob", "versch"):
            leaf.add_argument("--index", type=positive_int, required=True)
        if name == "ghost":
            leaf.add_argument("--depth", type=positive_int, required=True)
        leaf.add_argument("values", nargs=arity, metavar="FRACTION")
    phi = _leaf(wrat_ops, "phi", common, "the element Phi_p and its identities")
    phi.add_argument("--prime", type=positive_int, required=True)
    phi.add_argument("--check", choices=("none", "scalar", "teich", "zeta"), default="none")
    phi.add_argument("--depth", type=non_negative_int, default=0, help="ghost depth, 0 means 2p")
    wrat.set_defaults(handler=handle_wrat)

    groupring = groups.add_parser(
        "groupring", help="group rings and Frobenius lifts", description=instructions.groupring_description
    )
    gr_ops = groupring.add_subparsers(dest="op", required=True, metavar="OP")
    for name, arity, help_text in (
        ("mul", 2, "convolution product"),
        ("frob", 1, "Frobenius lift [m] -> [p m]"),
        ("congruence", 1, "x^p - phi_p(x) and its divisibility by p"),
        ("towitt", 1, "image in the rational Witt vectors"),
    ):
        leaf = _leaf(gr_ops, name, common, help_text)
        leaf.add_argument("--group", type=abelian_group, required=True)
        if name in ("frob", "congruence"):
            leaf.add_argument("--prime", type=positive_int, required=True)
        if name == "towitt":
            leaf.add_argument("--ring", type=ring_descriptor, required=True)
            leaf.add_argument("--images", required=True, help="comma separated generator images")
            leaf.add_argument("--bad-prime", type=positive_int, default=None)
            leaf.add_argument("--prime", type=positive_int, default=None, help="also check Frobenius compatibility")
        leaf.add_argument("values", nargs=arity, metavar="ELEMENT")
    groupring.set_defaults(handler=handle_groupring)

    abelian = groups.add_parser(
        "abelian", help="finitely generated abelian groups and covers", description=instructions.abelian_description
    )
    ab_ops = abelian.add_subparsers(dest="op", required=True, metavar="OP")
    _leaf(ab_ops, "snf", common, "Smith normal form").add_argument("--matrix", required=True)
    for name, help_text in (
        ("ext", "Ext(M, Z)"),
        ("pi0dual", "path components of the Pontryagin dual"),
        ("pi0spec", "components of Spec of the group algebra"),
    ):
        _leaf(ab_ops, name, common, help_text).add_argument("--group", type=abelian_group, required=True)
    covers = _leaf(ab_ops, "covers", common, "connected covers of the torus of degree n")
    covers.add_argument("--rank", type=positive_int, required=True)
    covers.add_argument("--index", type=positive_int, required=True)
    deck = _leaf(ab_ops, "deck", common, "deck group of an overlattice, or the restriction to a larger one")
    deck.add_argument("--basis", required=True, help="rational basis rows as JSON")
    deck.add_argument("--within", default=None, help="basis of a larger overlattice")
    _leaf(ab_ops, "solenoid", common, "finite solenoid stages").add_argument("--chain", required=True)
    abelian.set_defaults(handler=handle_abelian)

    cohom = groups.add_parser(
        "cohom", help="Kummer theory and group cohomology", description=instructions.cohom_description
    )
    co_ops = cohom.add_subparsers(dest="op", required=True, metavar="OP")
    table = _leaf(co_ops, "table", common, "H^p(G, A) with representative cocycles")
    table.add_argument("--group", type=abelian_group, required=True)
    table.add_argument("--module", type=abelian_group, required=True)
    table.add_argument("--degree", type=non_negative_int, required=True)
    table.add_argument("--action", default=None, help="JSON list of one matrix per generator of G")
    for name, help_text in (("kummer", "Kummer pairing exponent"), ("hilbert90", "Lagrange resolvent")):
        leaf = _leaf(co_ops, name, common, help_text)
        leaf.add_argument("--base-conductor", type=positive_int, required=True)
        leaf.add_argument("--radical", action="append", required=True, help="a^(1/m), repeatable")
        leaf.add_argument("--sigma", default=None, help="comma separated exponents, default all 1")
        if name == "kummer":
            leaf.add_argument("--alpha", required=True)
            leaf.add_argument("--n", type=positive_int, default=None)
        else:
            leaf.add_argument("--zeta", required=True, help="root of unity in z = zeta_N")
            leaf.add_argument("--seed", type=int, default=None, help="seed for randomized trial elements")
    symbol = _leaf(co_ops, "symbol", common, "Galois symbol of a rational number")
    symbol.add_argument("--base-conductor", type=positive_int, required=True)
    symbol.add_argument("--radical", action="append", required=True)
    symbol.add_argument("--alpha", required=True)
    symbol.add_argument("--n", type=positive_int, required=True)
    cohom.set_defaults(handler=handle_cohom)

    verify = groups.add_parser("verify", parents=[common], help="property battery",
                               description=instructions.verify_description)
    verify.add_argument("--suite", choices=SUITES, default="all")
    verify.add_argument("--seed", type=int, default=None, help="default WITTKIT_SEED")
    verify.add_argument(
        "--trials", type=positive_int, default=None,
        help="cases for every randomized check, overriding the per-check defaults",
    )
    verify.set_defaults(handler=handle_verify, op=None)
    return parser


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

def configure_logging(level: str) -> None:
    root = logging.getLogger("wittkit")
    for handler in list(root.handlers):
        if getattr(handler, "_wittkit_cli", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler._wittkit_cli = True
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(level.upper())


def _emit_error(exc: WittKitError) -> None:
    print(ErrorPayload(**exc.to_payload()).model_dump_json(), file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Execute one command

    Returns:
        int: 0 on success, 1 on a domain error or failed verification, 2 on a usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        settings = get_settings()
        configure_logging(args.log_level or settings.log_level)
        logger.debug("Running %s %s", args.command, args.op or "")
        text, payload = args.handler(args)
    except WittKitError as exc:
        _emit_error(exc)
        return 1
    print(payload.model_dump_json() if args.json else text)
    if args.command == "verify" and not payload.ok:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
