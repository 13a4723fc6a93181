"""Command-line front end.

Every command reads JSON, computes exactly, and emits a deterministic JSON
report: byte-identical output for identical inputs and configuration. Each
numeric claim carries a stable provenance anchor string. Decimal
approximations appear only under "approx" keys and are never consumed by
any downstream command.

Exit codes: 0 success, 1 invalid input or failed validation, 2 a configured
degree cap or step budget was exceeded.
"""

import argparse
import hashlib
import json
import sys

from .config import DEFAULT, load_config
from .errors import DegreeLimitExceeded, FlatFieldsError
from .fieldops import field_intersect
from .generic import generic_verdict, is_typical
from .holonomy import (
    field_of_definition_subspace, holonomy_field, k_of_M_from_samples,
)
from .monodromy import (
    dimension_inequality_check, isotypic_decomposition, perron_root,
    relative_block_structure,
)
from .poly import format_poly
from .serialize import (
    dumps_canonical, elem_to_json, field_from_json, field_to_json, load_json,
    periods_from_json, rat_str, representation_from_json, subspace_from_json,
    surface_from_json, ambient_from_json,
)
from .surface import (
    SquareTiled, absolute_periods, homology, periods, singularity_angles,
    square_tiled_to_polygon, validate,
)


def _digest(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _field_report(K):
    rep = {"minpoly": format_poly(K.minpoly),
           "degree": K.degree,
           "field": field_to_json(K)}
    gen = K.gen()
    rep["approx"] = {"root": gen.approx_str(8) + " (approx, non-normative)"}
    return rep


def _load_surface(path, config):
    obj = load_json(path)
    S = surface_from_json(obj, config)
    if isinstance(S, SquareTiled):
        S = square_tiled_to_polygon(S)
    return S


def cmd_surface_info(args, config):
    S = _load_surface(args.file, config)
    st = validate(S)
    H = homology(S)
    pv = periods(S, H)
    result = {
        "stratum": st.label(),
        "genus": st.genus,
        "zero_orders": list(st.zero_orders),
        "marked_points": st.marked_points,
        "cone_angle_multiples": singularity_angles(S),
        "homology": {
            "relative_rank": len(H.rel_basis),
            "absolute_rank": len(H.abs_basis),
            "ker_p_rank": H.ker_p_basis.dim,
            "marked_classes": H.s,
        },
        "field": field_to_json(S.field),
        "periods": [[elem_to_json(z.re), elem_to_json(z.im)]
                    for z in pv.entries],
    }
    citations = ["stratum-is-partition-of-2g-minus-2",
                 "relative-rank-2g-plus-s-minus-1",
                 "periods-are-exact-edge-sums"]
    return result, citations


def cmd_holonomy(args, config):
    S = _load_surface(args.file, config)
    rep = holonomy_field(S, config=config)
    result = {
        "holonomy_field": _field_report(rep.field),
        "frame": {
            "e1": [elem_to_json(rep.e1.re), elem_to_json(rep.e1.im)],
            "e2": [elem_to_json(rep.e2.re), elem_to_json(rep.e2.im)],
            "indices": list(rep.frame_indices),
        },
        "coordinates": [[elem_to_json(x), elem_to_json(y)]
                        for x, y in rep.coords],
        "normalizer": [[elem_to_json(e) for e in row]
                       for row in rep.normalizer],
    }
    citations = ["holonomy-field-frame-independent",
                 "normalizer-moves-frame-to-1-and-i"]
    return result, citations


def cmd_fod(args, config):
    obj = load_json(args.file)
    V, K, is_complex = subspace_from_json(obj, config)
    rep = field_of_definition_subspace(V, config=config)
    result = {
        "field_of_definition": _field_report(rep.field),
        "imaginary_parts_present": rep.imaginary,
        "subspace_dimension": V.dim,
        "ambient_dimension": V.ambient_dim,
    }
    return result, ["fod-equals-rref-coefficient-field"]


def cmd_intersect_fields(args, config):
    fields = [field_from_json(load_json(p), config) for p in args.files]
    acc = fields[0]
    for K in fields[1:]:
        acc = field_intersect(acc, K, config)
    result = {
        "inputs": [format_poly(K.minpoly) for K in fields],
        "intersection": _field_report(acc),
    }
    return result, ["subfield-intersection-via-compositum-subspaces"]


def cmd_k_of_m(args, config):
    samples = [_load_surface(p, config) for p in args.files]
    per_sample = [holonomy_field(S, config=config) for S in samples]
    k = k_of_M_from_samples(samples, config)
    result = {
        "sample_holonomy_fields": [format_poly(r.field.minpoly)
                                   for r in per_sample],
        "field_upper_bound": _field_report(k),
        "exactness": "upper bound; exact when the samples generate the locus",
    }
    citations = ["field-of-definition-is-intersection-of-holonomy-fields",
                 "degree-at-most-genus",
                 "sample-intersection-is-an-upper-bound"]
    return result, citations


def cmd_monodromy(args, config):
    obj = load_json(args.file)
    R, pa = representation_from_json(obj)
    if args.pa:
        if pa is None:
            raise FlatFieldsError("representation file carries no pa matrix")
        pd = perron_root(pa, config)
        result = {
            "dominant_eigenvalue": {
                "minpoly": format_poly(pd.factor),
                "field": field_to_json(pd.field),
                "approx": pd.lam.approx_str(8) + " (approx, non-normative)",
            },
            "eigenvector": [elem_to_json(x) for x in pd.eigvec],
        }
        return result, ["dominant-eigenvalue-simple-and-certified"]
    if args.blocks:
        if args.surface is None:
            raise FlatFieldsError("--blocks needs --surface for homology data")
        S = _load_surface(args.surface, config)
        H = homology(S)
        target = pa if pa is not None else R.generators[0]
        rep = relative_block_structure(target, H, config)
        result = {
            "power": rep.power,
            "absolute_block": [[str(c) for c in row]
                               for row in rep.absolute_block],
            "off_diagonal": [[rat_str(c) for c in row]
                             for row in rep.off_diagonal],
            "charpoly_identity": rep.charpoly_identity,
        }
        return result, ["relative-action-block-triangular-over-ker-p"]
    # default: --decompose
    if pa is None:
        raise FlatFieldsError("decomposition needs a pa matrix in the file")
    dec = isotypic_decomposition(R, pa, config, verify=args.verify)
    genus = R.dim // 2 if R.dim % 2 == 0 else None
    conj_sum = dec.V_list[0][0]
    for V, _ in dec.V_list[1:]:
        conj_sum = conj_sum.sum(V)
    result = {
        "field_of_definition": _field_report(dec.k),
        "piece_dimension": dec.v_dim,
        "pieces": [{"label": label, "dimension": V.dim}
                   for V, label in dec.V_list],
        "conjugate_sum_rref": [[rat_str(e.re.rational_value()) for e in row]
                               for row in conj_sum.rows],
        "complement_rref": [[rat_str(c) for c in row] for row in dec.W.rows],
        "rational_complement_dimension": dec.W.dim,
        "ambient_dimension": dec.ambient_dim,
    }
    if genus is not None:
        result["dimension_inequality"] = {
            "genus": genus,
            "holds": dimension_inequality_check(dec, genus),
        }
    citations = ["isotypic-splitting-conjugates-plus-rational-complement",
                 "conjugate-sum-and-complement-are-rational",
                 "dim-times-degree-at-most-2g"]
    return result, citations


def cmd_typical(args, config):
    obj = load_json(args.file)
    ambient = ambient_from_json(load_json(args.ambient), config)
    if "entries" in obj:
        zs, K0 = periods_from_json(obj, config)
        from .fieldops import field_generated_by
        parts = []
        for z in zs:
            parts.append(z.alg.re)
            parts.append(z.alg.im)
        hol_sub = field_generated_by(parts, K0, config)
        source = "chart coordinates; holonomy surrogate from the parts"
    else:
        S = surface_from_json(obj, config)
        if isinstance(S, SquareTiled):
            S = square_tiled_to_polygon(S)
        H = homology(S)
        pv = periods(S, H)
        from .generic import ExtendedPeriod
        zs = [ExtendedPeriod(alg=z) for z in pv.entries]
        rep = holonomy_field(S, config=config)
        hol_sub = rep.subfield
        source = "surface periods with the computed holonomy field"
    verdict = is_typical(zs, ambient, hol_sub, config)
    result = generic_verdict(verdict)
    result["input_interpretation"] = source
    citations = list(result.pop("anchors"))
    return result, citations


def build_parser():
    p = argparse.ArgumentParser(
        prog="flatfields",
        description="exact field-theoretic invariants of translation "
                    "surfaces")
    p.add_argument("--config", help="JSON file of limit overrides")
    p.add_argument("--verify", action="store_true",
                   help="re-check all exact postconditions")
    p.add_argument("--out", help="write the report to this file")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("surface-info", help="stratum, homology and periods")
    s.add_argument("file")
    s.set_defaults(fn=cmd_surface_info)

    s = sub.add_parser("holonomy", help="holonomy field of a surface")
    s.add_argument("file")
    s.set_defaults(fn=cmd_holonomy)

    s = sub.add_parser("fod", help="field of definition of a subspace")
    s.add_argument("file")
    s.set_defaults(fn=cmd_fod)

    s = sub.add_parser("intersect-fields", help="intersect number fields")
    s.add_argument("files", nargs="+")
    s.set_defaults(fn=cmd_intersect_fields)

    s = sub.add_parser("k-of-m",
                       help="field of definition bound from sample surfaces")
    s.add_argument("files", nargs="+")
    s.set_defaults(fn=cmd_k_of_m)

    s = sub.add_parser("monodromy", help="representation analysis")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--decompose", action="store_true")
    g.add_argument("--pa", action="store_true")
    g.add_argument("--blocks", action="store_true")
    s.add_argument("--surface", help="surface file for --blocks")
    s.set_defaults(fn=cmd_monodromy)

    s = sub.add_parser("typical", help="typical-vs-special verdict")
    s.add_argument("file", help="periods file or surface file")
    s.add_argument("--ambient", required=True)
    s.set_defaults(fn=cmd_typical)
    return p


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = load_config(args.config) if args.config else DEFAULT
    inputs = {}
    for attr in ("file", "surface", "ambient"):
        path = getattr(args, attr, None)
        if path:
            inputs[path] = _digest(path)
    for path in getattr(args, "files", []) or []:
        inputs[path] = _digest(path)
    try:
        result, citations = args.fn(args, config)
    except DegreeLimitExceeded as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 2
    except FlatFieldsError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1
    report = {
        "command": args.command,
        "inputs": inputs,
        "result": result,
        "citations": citations,
    }
    text = dumps_canonical(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"run complete: {args.command}", file=sys.stderr)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
