# -*- coding: utf-8 -*-
#
# The ``dgt`` console script: JSON on stdout, diagnostics on stderr,
# exit 0 on success, 2 on bad input, 3 when the constant field or the
# problem size is out of reach.

from __future__ import print_function

import argparse
import json
import logging
import sys
from collections import OrderedDict

from .context import ExecutionContext
from .diffsys import companion_form, minor_index_order, minor_map, relation_space_dimension, sym_power, \
    MonomialBasis, system_dimension
from .field import TowerField, render
from .galois import criterion_check, galois_group_diagonal
from .multlattice import (
    MULTIPLICATIVE,
    FGSubgroupData,
    radical_subgroup,
    shift_orbit_decompose,
    z_lattice,
)
from .ore import (
    coefficient_bound,
    hyper_bound,
    hyper_certificates,
    polynomial_solutions,
    sigma_bar_form,
    verify_certificate,
)
from .parser import load_system, parse_expr, parse_operator
from .specialize import (
    SpecializationMap,
    apply_spec,
    basic_open_membership,
    criterion_report,
    preservation_report,
)
from .utils import DgtException, InputError, UnsupportedError

logger = logging.getLogger("dgt")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3


def _params(args):
    if not args.params:
        return ()
    return tuple(p.strip() for p in args.params.split(",") if p.strip())


def _field(args):
    return TowerField(_params(args), args.variable)


def _operator(args):
    if args.op:
        return parse_operator(args.op, _field(args))
    if args.system:
        return companion_form(load_system(args.system).system).operator
    raise InputError("give an operator with --op or a system with --system")


def _system(args):
    if not args.system:
        raise InputError("--system is required")
    return load_system(args.system)


def _vector(args, field):
    if not args.vector:
        return None
    return [parse_expr(v, field) for v in args.vector.split(",")]


def _matrix_strings(matrix):
    return [list(row) for row in matrix.to_strings()]


def _certificate_dict(certificate):
    result = OrderedDict([("certificate", str(certificate))])
    if certificate.is_algebraic:
        result["minimal_polynomial"] = certificate.minimal_polynomial
    return result


def cmd_hyper(args):
    operator = _operator(args)
    result = hyper_certificates(operator)
    output = OrderedDict([("certificates", [str(c) for c in result.certificates])])
    algebraic = [_certificate_dict(c) for c in result.certificates if c.is_algebraic]
    if algebraic:
        output["algebraic"] = algebraic
    if result.extension_classes:
        output["extension_classes"] = [
            OrderedDict([("p", render(e.p.as_expr())), ("q", render(e.q.as_expr())),
                         ("factor", render(e.factor.as_expr()))])
            for e in result.extension_classes
        ]
    return output


def cmd_polysols(args):
    operator = _operator(args)
    solutions = polynomial_solutions(operator, args.degree)
    return OrderedDict([("solutions", [str(s) for s in solutions])])


def cmd_indicial(args):
    data = sigma_bar_form(_operator(args))
    return OrderedDict([
        ("indicial", render(data.indicial.as_expr())),
        ("rho", data.rho),
        ("integer_roots", data.integer_roots),
        ("sigma_bar", [str(a) for a in data.sigma_bar_coeffs]),
    ])


def cmd_dim(args):
    return OrderedDict([("dim", system_dimension(_system(args).system))])


def cmd_sym(args):
    system = _system(args).system
    basis = MonomialBasis(system.n, args.nu)
    return OrderedDict([("basis", basis.names()), ("matrix", _matrix_strings(sym_power(system, args.nu)))])


def cmd_minor(args):
    system = _system(args).system
    order = minor_index_order(system.n, args.size)
    return OrderedDict([
        ("order", [[i + 1 for i in I] for I in order]),
        ("matrix", _matrix_strings(minor_map(system, args.size))),
    ])


def cmd_companion(args):
    loaded = _system(args)
    form = companion_form(loaded.system, _vector(args, loaded.field))
    return OrderedDict([
        ("operator", str(form.operator)),
        ("vector", [str(v) for v in form.vector]),
        ("transform", _matrix_strings(form.transform)),
    ])


def _values(args):
    field = _field(args)
    return [parse_expr(v, field) for v in args.values]


def cmd_zlattice(args):
    lattice = z_lattice(_values(args), args.ell)
    output = OrderedDict([("lattice", lattice.basis_list()), ("dim", lattice.rank)])
    if args.witnesses and lattice.rank:
        output["witnesses"] = [str(f) for _, f in lattice.witnesses()]
    return output


def cmd_galois_diag(args):
    if args.system:
        values = _system(args).system.diagonal()
    else:
        values = _values(args)
    group = galois_group_diagonal(values)
    return OrderedDict([("lattice", group.lattice.basis_list()), ("torus_dim", group.dimension)])


def cmd_criterion(args):
    loaded = _system(args)
    if loaded.group is None:
        raise InputError("system file has no group block")
    return criterion_check(loaded.group, loaded.system).to_dict()


def cmd_radical(args):
    group = FGSubgroupData(MULTIPLICATIVE, _values(args), _field(args))
    return OrderedDict([("generators", [str(g) for g in radical_subgroup(group).generators])])


def _phi(args, field):
    return SpecializationMap.from_strings(args.assign or (), field)


def cmd_specialize(args):
    loaded = _system(args)
    specialized = apply_spec(loaded.system, _phi(args, loaded.field))
    return OrderedDict([("matrix", _matrix_strings(specialized.A)), ("det", str(specialized.A.det))])


def cmd_report(args):
    loaded = _system(args)
    phi = _phi(args, loaded.field)
    if loaded.system.is_diagonal:
        output = preservation_report(loaded.system, phi).to_dict()
    elif loaded.group is not None:
        output = criterion_report(loaded.system, loaded.group, phi).to_dict()
    else:
        raise InputError("reports need a diagonal system or a group block")
    if loaded.gammas:
        output["gammas"] = basic_open_membership(phi, loaded.gammas).to_dict()
    return output


def cmd_verify(args):
    operator = _operator(args)
    rate = parse_expr(args.rate, operator.field)
    return OrderedDict([("verified", verify_certificate(operator, rate))])


def cmd_bound(args):
    if args.op:
        return OrderedDict([("hyper_bound", hyper_bound(_operator(args)))])
    bound = coefficient_bound(_system(args).system, args.nu)
    return OrderedDict([
        ("N", bound.N),
        ("size", bound.size),
        ("mu", bound.mu),
        ("steps", [OrderedDict([("l", s.l), ("size", s.size), ("t", s.t), ("N", s.N), ("blocks", list(s.blocks))])
                   for s in bound.steps]),
    ])


def cmd_relspace(args):
    system = _system(args).system
    return OrderedDict([("dim", relation_space_dimension(system, args.nu, args.m))])


def cmd_orbit(args):
    value = parse_expr(args.value, _field(args))
    decomposition = shift_orbit_decompose(value, args.ell)
    return OrderedDict([
        ("constant", str(decomposition.constant)),
        ("orbits", [[str(rep), e] for rep, e in decomposition.orbit_terms]),
        ("witness", str(decomposition.witness)),
        ("verified", decomposition.reconstruct() == value),
    ])


def _common(parser):
    parser.add_argument("--params", default="", help="comma separated tower parameters, e.g. t,s")
    parser.add_argument("--variable", default="x", help="the shifted variable")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)")
    parser.add_argument("--seed", type=int, default=None, help="seed of the cyclic vector search")
    parser.add_argument("--allow-algebraic", action="store_true", help="solve over algebraic extensions")
    parser.add_argument("--progress", action="store_true", help="show progress bars")


def build_parser():
    parser = argparse.ArgumentParser(prog="dgt", description="Exact difference Galois computations.")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    def command(name, func, help_text, op=False, system=False, nu=False):
        p = sub.add_parser(name, help=help_text)
        _common(p)
        if op:
            p.add_argument("--op", help='operator in s, e.g. "s^2-5*s+6"')
        if op or system:
            p.add_argument("--system", help="JSON system file")
        if nu:
            p.add_argument("--nu", type=int, default=1, help="symmetric power degree")
        p.set_defaults(func=func)
        return p

    command("hyper", cmd_hyper, "hypergeometric certificates", op=True)
    p = command("polysols", cmd_polysols, "polynomial solutions", op=True)
    p.add_argument("--degree", type=int, default=None)
    command("indicial", cmd_indicial, "indicial polynomial", op=True)
    command("dim", cmd_dim, "dimension of the module generated by the iterates", system=True)
    command("sym", cmd_sym, "symmetric power", system=True, nu=True)
    p = command("minor", cmd_minor, "matrix of l x l minors", system=True)
    p.add_argument("-k", "--size", type=int, required=True)
    p = command("companion", cmd_companion, "companion form", system=True)
    p.add_argument("--vector", default=None, help="cyclic vector, comma separated")
    for name, func, help_text in (("zlattice", cmd_zlattice, "relation lattice Z(a; l)"),
                                  ("galois-diag", cmd_galois_diag, "Galois group of a diagonal system")):
        p = command(name, func, help_text, system=(name == "galois-diag"))
        p.add_argument("values", nargs="*")
        p.add_argument("-l", "--ell", type=int, default=1)
        p.add_argument("--witnesses", action="store_true")
    command("criterion", cmd_criterion, "Galois group criterion", system=True)
    p = command("radical", cmd_radical, "radical of a subgroup of Q*")
    p.add_argument("values", nargs="+")
    for name, func, help_text in (("specialize", cmd_specialize, "specialized system"),
                                  ("report", cmd_report, "preservation report")):
        p = command(name, func, help_text, system=True)
        p.add_argument("--assign", action="append", help="parameter=value, repeatable")
    p = command("verify", cmd_verify, "check a certificate", op=True)
    p.add_argument("--rate", required=True)
    p = command("bound", cmd_bound, "hyper-bound of an operator or coefficient bound of a system", op=True, nu=True)
    p = command("relspace", cmd_relspace, "dimension of the relation space", system=True, nu=True)
    p.add_argument("-m", type=int, default=0)
    p = command("orbit", cmd_orbit, "shift orbit decomposition")
    p.add_argument("value")
    p.add_argument("-l", "--ell", type=int, default=1)
    return parser


def _configure_logging(verbose):
    level = logging.WARNING if not verbose else (logging.INFO if verbose == 1 else logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    context = ExecutionContext(seed=args.seed, allow_algebraic=args.allow_algebraic, progress=args.progress)
    try:
        with context:
            output = args.func(args)
    except InputError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_INPUT
    except (UnsupportedError, DgtException) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_UNSUPPORTED
    print(json.dumps(output), file=stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
