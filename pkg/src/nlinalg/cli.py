"""Command-line workbench: one verb per analysis, text or JSON output.

Exit codes: 0 on success, 1 on domain errors (singular component, not
diagonalizable, stochasticity violations, ...), 2 on usage and parse errors.
JSON output carries a top-level ``"v": 1`` and sorted keys, so identical
invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import formats, inner, leontief, markov, spectral
from .errors import DomainError, ParseError
from .fields import DEFAULT_REAL_TOLERANCE, FieldDescriptor
from .foundations import nfield_classify, ngroup_order
from .markov import Convention, MarkovNChain, StateNVector, WalkKind
from .nmatrix import NMatrix, n_det, ortho_classify
from .nspace import NDims, NSubset, NVector, NVectorSpace
from .ntransform import ComponentAssignment, hom_dimension


def _bool_flag(text: str) -> bool:
    if text.lower() in ("true", "1", "yes"):
        return True
    if text.lower() in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")


def _fraction_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in text.split(",") if x]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected fractions, got {text!r}")


def _scalar(field, x) -> str:
    return field.format_scalar(x)


def _json_scalar(field, x):
    if field.exact:
        return field.format_scalar(x)
    return float(x.v)


def _vector_text(field, comp) -> str:
    return "(" + ", ".join(_scalar(field, x) for x in comp) + ")"


def _vector_json(field, comp):
    return [_json_scalar(field, x) for x in comp]


def _grid_json(field, grid):
    return [[_json_scalar(field, x) for x in row] for row in grid]


def _grid_lines(field, grid, indent="  "):
    return [indent + " ".join(_scalar(field, x) for x in row) for row in grid]


def _float_grid_lines(grid, indent="  "):
    return [indent + " ".join(repr(x) for x in row) for row in grid]


# -- input loading -------------------------------------------------------------

def _load(args, path):
    return formats.parse_file(path, args.tolerance, args.strict_dims)


def _load_matrix(args, path) -> NMatrix:
    value = _load(args, path)
    if isinstance(value, MarkovNChain):
        return value.p
    if isinstance(value, NMatrix):
        return value
    raise ParseError(f"{path}: expected a matrix file")


def _load_chain(args, path) -> MarkovNChain:
    convention = (
        Convention(args.convention) if args.convention else Convention.ROW
    )
    value = formats.parse_file(
        path, args.tolerance, args.strict_dims, default_convention=convention
    )
    if not isinstance(value, MarkovNChain):
        raise ParseError(f"{path}: expected a chain file")
    return value


def _load_vector(args, path, strict=None) -> NVector:
    strict = args.strict_dims if strict is None else strict
    value = formats.parse_file(path, args.tolerance, strict)
    if not isinstance(value, NVector):
        raise ParseError(f"{path}: expected a vector file")
    return value


def _subset_from_matrix(m: NMatrix, strict: bool) -> NSubset:
    """Rows of each component are the vectors of that component's set."""
    dims = NDims([len(grid[0]) for grid in m.components], strict=strict)
    space = NVectorSpace(m.field, dims)
    return NSubset(space, tuple(tuple(grid) for grid in m.components))


# -- verbs ---------------------------------------------------------------------

def cmd_check(args):
    value = _load(args, args.file)
    kind = type(value).__name__
    lines = [f"ok: {kind}"]
    payload = {"type": kind}
    if isinstance(value, MarkovNChain):
        lines.append(f"convention: {value.convention.value}")
        lines.append(f"sizes: {value.sizes()}")
        payload["convention"] = value.convention.value
        payload["sizes"] = list(value.sizes())
    elif isinstance(value, NMatrix):
        lines.append(f"shapes: {value.shapes()}")
        payload["shapes"] = [list(s) for s in value.shapes()]
    elif isinstance(value, NVector):
        lines.append(f"dims: {tuple(value.space.dims)}")
        payload["dims"] = list(value.space.dims)
    elif isinstance(value, (leontief.ExchangeNMatrix, leontief.ConsumptionNMatrix)):
        lines.append(f"sizes: {value.sizes()}")
        lines.append(f"relaxed: {str(value.relaxed).lower()}")
        payload["sizes"] = list(value.sizes())
        payload["relaxed"] = value.relaxed
    else:
        lines.append(f"kind: {value.kind.value}")
        payload["kind"] = value.kind.value
    return lines, payload


def cmd_charpoly(args):
    m = _load_matrix(args, args.file)
    poly = spectral.char_npoly(m, parallel=args.parallel)
    rendered = poly.factored_strs()
    lines = [
        f"component {i + 1}: {text}" for i, text in enumerate(rendered)
    ]
    return lines, {"charpoly": list(rendered)}


def cmd_minpoly(args):
    m = _load_matrix(args, args.file)
    poly = spectral.min_npoly(m, parallel=args.parallel)
    rendered = poly.factored_strs()
    lines = [
        f"component {i + 1}: {text}" for i, text in enumerate(rendered)
    ]
    return lines, {"minpoly": list(rendered)}


def cmd_eigen(args):
    m = _load_matrix(args, args.file)
    report = spectral.eigen(m, parallel=args.parallel)
    lines = []
    payload = []
    for i, comp in enumerate(report.components):
        parts = [
            f"{_scalar(m.field, p.value)} (alg {p.algebraic}, geom {p.geometric})"
            for p in comp.pairs
        ]
        text = ", ".join(parts) if parts else "none in field"
        if comp.cofactor.degree > 0:
            text += f"; unfactored {comp.cofactor.factored_str()}"
        lines.append(f"component {i + 1}: {text}")
        payload.append(
            {
                "values": [_json_scalar(m.field, p.value) for p in comp.pairs],
                "algebraic": [p.algebraic for p in comp.pairs],
                "geometric": [p.geometric for p in comp.pairs],
                "cofactor_degree": max(comp.cofactor.degree, 0),
            }
        )
    combos = spectral.eigen_combinations(report)
    lines.append(f"eigenvalue tuples: {combos}")
    return lines, {"components": payload, "combinations": combos}


def cmd_diagonalize(args):
    m = _load_matrix(args, args.file)
    char = spectral.char_npoly(m, parallel=args.parallel)
    minimal = spectral.min_npoly(m, parallel=args.parallel)
    report = spectral.is_n_diagonalizable(m)
    lines = [
        "characteristic: " + " u ".join(char.factored_strs()),
        "minimal: " + " u ".join(minimal.factored_strs()),
        f"diagonalizable: {str(report.diagonalizable).lower()}",
    ]
    payload = {
        "charpoly": list(char.factored_strs()),
        "minpoly": list(minimal.factored_strs()),
        "diagonalizable": report.diagonalizable,
        "reasons": list(report.reasons),
    }
    if report.diagonalizable:
        diagonal_entries = [
            [grid[i][i] for i in range(len(grid))]
            for grid in report.diagonal.components
        ]
        for i, entries in enumerate(diagonal_entries):
            lines.append(
                f"diagonal {i + 1}: diag("
                + ", ".join(_scalar(m.field, x) for x in entries)
                + ")"
            )
        payload["diagonal"] = [
            [_json_scalar(m.field, x) for x in entries]
            for entries in diagonal_entries
        ]
    else:
        lines.append("reasons: " + ", ".join(report.reasons))
    return lines, payload


def cmd_projections(args):
    m = _load_matrix(args, args.file)
    projections = spectral.eigen_projections(m)
    lines = []
    payload = []
    for i, (values, grids) in enumerate(
        zip(projections.eigenvalues, projections.projections)
    ):
        entry = []
        for value, grid in zip(values, grids):
            lines.append(f"component {i + 1}, eigenvalue {_scalar(m.field, value)}:")
            lines.extend(_grid_lines(m.field, grid))
            entry.append(
                {
                    "value": _json_scalar(m.field, value),
                    "projection": _grid_json(m.field, grid),
                }
            )
        payload.append(entry)
    return lines, {"components": payload}


def cmd_primary(args):
    m = _load_matrix(args, args.file)
    decomposition = spectral.primary_decomposition(m)
    lines = []
    payload = []
    for i, pieces in enumerate(decomposition):
        descriptions = [
            f"{piece.factor.factored_str()}^{piece.exponent} (dim {len(piece.basis)})"
            for piece in pieces
        ]
        lines.append(f"component {i + 1}: " + " + ".join(descriptions))
        payload.append(
            [
                {
                    "factor": piece.factor.factored_str(),
                    "exponent": piece.exponent,
                    "dimension": len(piece.basis),
                }
                for piece in pieces
            ]
        )
    return lines, {"components": payload}


def cmd_dn(args):
    m = _load_matrix(args, args.file)
    pair = spectral.dn_decompose(m)
    lines = [f"nilpotency indices: {pair.nilpotency_indices}"]
    for i, (d_grid, n_grid) in enumerate(
        zip(pair.d.components, pair.n_part.components)
    ):
        lines.append(f"component {i + 1} diagonalizable part:")
        lines.extend(_grid_lines(m.field, d_grid))
        lines.append(f"component {i + 1} nilpotent part:")
        lines.extend(_grid_lines(m.field, n_grid))
    payload = {
        "indices": list(pair.nilpotency_indices),
        "diagonalizable": [
            _grid_json(m.field, g) for g in pair.d.components
        ],
        "nilpotent": [
            _grid_json(m.field, g) for g in pair.n_part.components
        ],
    }
    return lines, payload


def cmd_cayley(args):
    m = _load_matrix(args, args.file)
    report = spectral.cayley_hamilton_check(m, parallel=args.parallel)
    lines = [
        f"component {i + 1}: {'zero' if ok else 'NONZERO'}"
        for i, ok in enumerate(report.per_component)
    ]
    lines.append(f"all components annihilate: {str(report.all_zero).lower()}")
    return lines, {
        "per_component": list(report.per_component),
        "all_zero": report.all_zero,
    }


def cmd_gram_schmidt(args):
    m = _load_matrix(args, args.file)
    subset = _subset_from_matrix(m, args.strict_dims)
    result = inner.gram_schmidt(subset)
    lines = []
    payload = {"orthogonal": [], "norms_sq": []}
    for i, (group, norms) in enumerate(
        zip(result.orthogonal.sets, result.norms_sq)
    ):
        lines.append(f"component {i + 1}:")
        for vec, norm in zip(group, norms):
            lines.append(
                f"  {_vector_text(m.field, vec)}  norm_sq {_scalar(m.field, norm)}"
            )
        payload["orthogonal"].append(
            [_vector_json(m.field, vec) for vec in group]
        )
        payload["norms_sq"].append([_json_scalar(m.field, x) for x in norms])
    if result.orthonormal is not None:
        payload["orthonormal"] = [
            [_vector_json(m.field, vec) for vec in group]
            for group in result.orthonormal.sets
        ]
        lines.append("orthonormal:")
        for i, group in enumerate(result.orthonormal.sets):
            for vec in group:
                lines.append(f"  {_vector_text(m.field, vec)}")
    return lines, payload


def cmd_approx(args):
    basis_matrix = _load_matrix(args, args.basis)
    beta = _load_vector(args, args.vector)
    subset = NSubset(beta.space, tuple(tuple(g) for g in basis_matrix.components))
    approx = inner.best_approximation(subset, beta)
    residual = beta - approx
    field = beta.space.field
    lines = ["best approximation:"]
    lines += [
        "  " + _vector_text(field, comp) for comp in approx.components
    ]
    lines.append("residual:")
    lines += [
        "  " + _vector_text(field, comp) for comp in residual.components
    ]
    payload = {
        "approximation": [
            _vector_json(field, comp) for comp in approx.components
        ],
        "residual": [
            _vector_json(field, comp) for comp in residual.components
        ],
    }
    return lines, payload


def cmd_ortho_class(args):
    m = _load_matrix(args, args.file)
    result = ortho_classify(m)
    lines = [f"verdict: {result.verdict.value}"]
    lines += [
        f"component {i + 1}: {v.value}"
        for i, v in enumerate(result.per_component)
    ]
    return lines, {
        "verdict": result.verdict.value,
        "per_component": [v.value for v in result.per_component],
    }


def cmd_markov_classify(args):
    chain = _load_chain(args, args.file)
    result = markov.classify_states(chain, parallel=args.parallel)
    lines = []
    payload = {"components": []}
    for i, comp in enumerate(result.per_component):
        labels = chain.state_labels[i]
        classes = [
            "{" + ", ".join(labels[s] for s in members) + "}"
            for members in comp.classes
        ]
        lines.append(f"component {i + 1}: classes " + ", ".join(classes))
        lines.append(
            f"  absorbing: "
            + (", ".join(labels[s] for s in comp.absorbing) or "none")
            + f"; irreducible: {str(comp.irreducible).lower()}"
        )
        payload["components"].append(
            {
                "classes": [
                    [labels[s] for s in members] for members in comp.classes
                ],
                "essential": list(comp.essential),
                "closed_sets": [
                    [labels[s] for s in members] for members in comp.closed_sets
                ],
                "absorbing": [labels[s] for s in comp.absorbing],
                "irreducible": comp.irreducible,
            }
        )
    lines.append(f"n-irreducible: {str(result.n_irreducible).lower()}")
    payload["n_irreducible"] = result.n_irreducible
    if result.n_absorbing is not None:
        lines.append(
            "n-absorbing state: (" + ", ".join(result.n_absorbing) + ")"
        )
        payload["n_absorbing"] = list(result.n_absorbing)
    payload["semi"] = {
        key: {"count": entry.count, "label": entry.label}
        for key, entry in result.semi.items()
    }
    return lines, payload


def cmd_markov_stationary(args):
    chain = _load_chain(args, args.file)
    result = markov.stationary_distribution(chain)
    field = chain.field
    lines = []
    for i, comp in enumerate(result.distribution.components):
        tag = "unique" if result.unique[i] else "non-unique"
        lines.append(
            f"component {i + 1}: {_vector_text(field, comp)} ({tag})"
        )
    payload = {
        "distribution": [
            _vector_json(field, comp)
            for comp in result.distribution.components
        ],
        "unique": list(result.unique),
        "fixed_space_dimensions": list(result.fixed_space_dimensions),
    }
    return lines, payload


def cmd_markov_evolve(args):
    chain = _load_chain(args, args.file)
    x = _load_vector(args, args.vector, strict=False)
    state = StateNVector(chain, x.components)
    result = markov.evolve(chain, state, args.steps)
    field = chain.field
    lines = [
        f"component {i + 1}: {_vector_text(field, comp)}"
        for i, comp in enumerate(result.components)
    ]
    payload = {
        "state": [
            _vector_json(field, comp) for comp in result.components
        ],
        "steps": args.steps,
    }
    return lines, payload


def cmd_markov_spectral(args):
    chain = _load_chain(args, args.file)
    decomposition = markov.spectral_decompose(chain)
    lines = []
    payload = {"components": []}
    for i, comp in enumerate(decomposition.components):
        lines.append(
            f"component {i + 1}: eigenvalues "
            + ", ".join(repr(v) for v in comp.eigenvalues)
            + f"; residual {comp.residual:.3e}"
        )
        payload["components"].append(
            {
                "eigenvalues": list(comp.eigenvalues),
                "matrices": [
                    [list(row) for row in matrix] for matrix in comp.matrices
                ],
                "residual": comp.residual,
            }
        )
    if args.power is not None:
        reconstructed = markov.power_via_spectral(decomposition, args.power)
        lines.append(f"power {args.power} via the decomposition:")
        for i, grid in enumerate(reconstructed.components):
            lines.append(f"component {i + 1}:")
            lines.extend(
                _float_grid_lines([[x.v for x in row] for row in grid])
            )
        payload["power"] = {
            "k": args.power,
            "matrices": [
                [[x.v for x in row] for row in grid]
                for grid in reconstructed.components
            ],
        }
    return lines, payload


def cmd_markov_walk(args):
    kind = (
        WalkKind.ABSORBING_BARRIERS
        if args.kind == "absorbing"
        else WalkKind.REFLECTING_BARRIERS
    )
    chain = markov.random_walk(kind, args.barriers, args.p)
    text = formats.emit_chain(chain)
    return text.splitlines(), {"chain": text}


def cmd_leontief_closed(args):
    model = _load(args, args.file)
    if not isinstance(model, leontief.ExchangeNMatrix):
        raise ParseError(f"{args.file}: expected an exchange model file")
    result = leontief.closed_solve(model)
    field = model.a.field
    lines = []
    for i, comp in enumerate(result.prices.components):
        tag = "unique" if result.unique[i] else "non-unique"
        lines.append(f"component {i + 1}: {_vector_text(field, comp)} ({tag})")
    payload = {
        "prices": [
            _vector_json(field, comp) for comp in result.prices.components
        ],
        "unique": list(result.unique),
        "nullities": list(result.nullities),
        "positivity_witnesses": list(result.positivity_witnesses),
    }
    return lines, payload


def cmd_leontief_s_closed(args):
    model = _load(args, args.file)
    if not isinstance(model, leontief.ExchangeNMatrix):
        raise ParseError(f"{args.file}: expected an exchange model file")
    result = leontief.s_closed_solve(model, rounds=args.rounds)
    field = model.a.field
    lines = []
    payload = {"components": []}
    for i, comp in enumerate(result.per_component):
        if comp.empty:
            lines.append(f"component {i + 1}: no equilibrium (empty null space)")
        else:
            lines.append(
                f"component {i + 1}: chosen {_vector_text(field, comp.chosen)} "
                f"from {len(comp.candidates)} candidates"
            )
        payload["components"].append(
            {
                "empty": comp.empty,
                "chosen": (
                    _vector_json(field, comp.chosen)
                    if comp.chosen is not None
                    else None
                ),
                "candidates": [
                    _vector_json(field, c) for c in comp.candidates
                ],
            }
        )
    return lines, payload


def cmd_leontief_open(args):
    model = _load(args, args.file)
    if not isinstance(model, leontief.ConsumptionNMatrix):
        raise ParseError(f"{args.file}: expected a consumption model file")
    demand = _load_vector(args, args.vector, strict=False)
    production = leontief.open_solve(model, demand)
    field = model.c.field
    lines = [
        f"component {i + 1}: {_vector_text(field, comp)}"
        for i, comp in enumerate(production.components)
    ]
    payload = {
        "production": [
            _vector_json(field, comp) for comp in production.components
        ]
    }
    return lines, payload


def cmd_leontief_s_open(args):
    model = _load(args, args.file)
    if not isinstance(model, leontief.ConsumptionNMatrix):
        raise ParseError(f"{args.file}: expected a consumption model file")
    demand = _load_vector(args, args.vector, strict=False)
    result = leontief.s_open_solve(model, demand)
    field = model.c.field
    lines = [
        f"component {i + 1}: {_vector_text(field, comp)} ({verdict})"
        for i, (comp, verdict) in enumerate(
            zip(result.production.components, result.verdicts)
        )
    ]
    payload = {
        "production": [
            _vector_json(field, comp)
            for comp in result.production.components
        ],
        "verdicts": list(result.verdicts),
    }
    return lines, payload


def cmd_hom_dim(args):
    source = NDims(args.source_dims, strict=args.strict_dims)
    target = NDims(args.target_dims, strict=args.strict_dims)
    assignment = ComponentAssignment(
        len(args.source_dims), len(args.target_dims), args.assignment
    )
    dims = hom_dimension(source, target, assignment)
    return [f"hom dimension: {dims}"], {"dimension": list(dims)}


_FIELD_TOKENS = {"Q": FieldDescriptor.rational, "R": FieldDescriptor.real}


def _field_token(token: str) -> FieldDescriptor:
    if token in _FIELD_TOKENS:
        return _FIELD_TOKENS[token]()
    if token.startswith("Z") and token[1:].isdigit():
        return FieldDescriptor.prime(int(token[1:]))
    raise ParseError(f"unrecognized field token {token!r} (use Q, R or Z<p>)")


def cmd_nfield_classify(args):
    components = [_field_token(t) for t in args.fields]
    verdict = nfield_classify(components)
    return [f"classification: {verdict.value}"], {"classification": verdict.value}


def cmd_ngroup_order(args):
    order = ngroup_order(args.orders)
    return [f"order: {order}"], {"order": order}


# -- parser ------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--tolerance", type=float, default=None)
    common.add_argument("--convention", choices=("row", "column"), default=None)
    common.add_argument("--strict-dims", type=_bool_flag, default=True,
                        dest="strict_dims")
    common.add_argument("--parallel", action="store_true")

    parser = argparse.ArgumentParser(
        prog="nla",
        description="componentwise linear algebra workbench",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, handler, **files):
        p = sub.add_parser(name, parents=[common])
        for arg, help_text in files.items():
            p.add_argument(arg, help=help_text)
        p.set_defaults(handler=handler)
        return p

    verb("check", cmd_check, file="input file")
    verb("charpoly", cmd_charpoly, file="matrix file")
    verb("minpoly", cmd_minpoly, file="matrix file")
    verb("eigen", cmd_eigen, file="matrix file")
    verb("diagonalize", cmd_diagonalize, file="matrix file")
    verb("projections", cmd_projections, file="matrix file")
    verb("primary", cmd_primary, file="matrix file")
    verb("dn", cmd_dn, file="matrix file")
    verb("cayley", cmd_cayley, file="matrix file")
    verb("gram-schmidt", cmd_gram_schmidt, file="matrix file (rows = vectors)")
    approx = verb("approx", cmd_approx, basis="basis matrix (rows = vectors)")
    approx.add_argument("vector", help="vector file")
    verb("ortho-class", cmd_ortho_class, file="matrix file")
    verb("markov-classify", cmd_markov_classify, file="chain file")
    verb("markov-stationary", cmd_markov_stationary, file="chain file")
    evolve = verb("markov-evolve", cmd_markov_evolve, file="chain file")
    evolve.add_argument("vector", help="state vector file")
    evolve.add_argument("--steps", type=int, default=1)
    spectral_verb = verb("markov-spectral", cmd_markov_spectral, file="chain file")
    spectral_verb.add_argument("--power", type=int, default=None)
    walk = sub.add_parser("markov-walk", parents=[common])
    walk.add_argument("--kind", choices=("absorbing", "reflecting"),
                      required=True)
    walk.add_argument("--barriers", type=_int_list, required=True,
                      help="comma-separated barrier positions, one per component")
    walk.add_argument("--p", type=_fraction_list, required=True,
                      help="comma-separated step probabilities")
    walk.set_defaults(handler=cmd_markov_walk)
    verb("leontief-closed", cmd_leontief_closed, file="exchange model file")
    s_closed = verb("leontief-s-closed", cmd_leontief_s_closed,
                    file="relaxed exchange model file")
    s_closed.add_argument("--rounds", type=int, default=1)
    open_verb = verb("leontief-open", cmd_leontief_open,
                     file="consumption model file")
    open_verb.add_argument("vector", help="demand vector file")
    s_open = verb("leontief-s-open", cmd_leontief_s_open,
                  file="relaxed consumption model file")
    s_open.add_argument("vector", help="demand vector file")
    hom = sub.add_parser("hom-dim", parents=[common])
    hom.add_argument("--source-dims", type=_int_list, required=True)
    hom.add_argument("--target-dims", type=_int_list, required=True)
    hom.add_argument("--assignment", type=_int_list, required=True)
    hom.set_defaults(handler=cmd_hom_dim)
    nfield = sub.add_parser("nfield-classify", parents=[common])
    nfield.add_argument("fields", nargs="+",
                        help="field tokens: Q, R, Z7, Z23, ...")
    nfield.set_defaults(handler=cmd_nfield_classify)
    ngroup = sub.add_parser("ngroup-order", parents=[common])
    ngroup.add_argument("orders", nargs="+", type=int)
    ngroup.set_defaults(handler=cmd_ngroup_order)
    return parser


def _report_error(args, exc: Exception, out) -> None:
    name = type(exc).__name__
    if getattr(args, "format", "text") == "json":
        print(
            json.dumps(
                {"v": 1, "error": {"name": name, "message": str(exc)}},
                sort_keys=True,
            ),
            file=out,
        )
    else:
        print(f"error: {name}: {exc}", file=sys.stderr)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if args.tolerance is None:
        env = os.environ.get("NLA_TOLERANCE")
        args.tolerance = float(env) if env else DEFAULT_REAL_TOLERANCE
    try:
        lines, payload = args.handler(args)
    except ParseError as exc:
        _report_error(args, exc, sys.stdout)
        return 2
    except OSError as exc:
        _report_error(args, exc, sys.stdout)
        return 2
    except DomainError as exc:
        _report_error(args, exc, sys.stdout)
        return 1
    if args.format == "json":
        print(json.dumps({"v": 1, "command": args.verb, **payload},
                         sort_keys=True))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
