"""Typical-versus-special period coordinates and the genericity verdict.

A period vector is special when some admissible field (a subfield of the
holonomy field, of degree at most the genus, containing the ambient locus's
field of definition) supports a linear relation among the periods that does
not already hold on the ambient locus. Typical periods certify that the
orbit closure is the whole ambient locus; special ones are inconclusive.

Periods may carry formal transcendental symbols; these are treated as
algebraically independent over the algebraic parts, so their coefficient
blocks enter the relation system as independent coordinates.
"""

import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .config import DEFAULT
from .errors import FieldMismatch, InvalidInput
from .fieldops import Subfield, _locate_root_in_field, subfields
from .linalg import MatF, Subspace, kernel
from .numfield import QQ, ComplexAlg, NumberField


@dataclass
class AmbientModel:
    """Linear model of an invariant locus inside one period chart."""
    n: int
    k_M: NumberField
    relations: Subspace      # functionals vanishing on the locus, over k_M
    genus: int

    def __post_init__(self):
        if self.relations.ambient_dim != self.n:
            raise InvalidInput("relation space has wrong ambient dimension")
        if self.k_M.degree > self.genus:
            warnings.warn("field of definition degree exceeds the genus "
                          "bound; the model is inconsistent")


@dataclass
class ExtendedPeriod:
    """One period coordinate: algebraic part plus formal symbol terms with
    Gaussian-rational coefficients."""
    alg: ComplexAlg
    trans: dict = dc_field(default_factory=dict)


@dataclass
class TypicalVerdict:
    fields_checked: list


@dataclass
class SpecialVerdict:
    witness_field: NumberField
    witness: list            # coefficients over witness_field
    witness_embedding: Subfield


def _symbols_of(zs):
    syms = set()
    for z in zs:
        syms.update(z.trans)
    return sorted(syms)


def _ambient_field_of(zs):
    K0 = None
    for z in zs:
        f = z.alg.field
        if K0 is None:
            K0 = f
        elif not (f is K0 or (f.minpoly == K0.minpoly
                              and f.interval0 == K0.interval0)):
            raise FieldMismatch("period entries over different fields")
    return K0 or QQ


def relation_space_over(zs, k_sub, config=DEFAULT):
    """All vectors c over the subfield with sum c_j z_j = 0, exactly.

    k_sub is a subfield (with embedding) of the field containing the
    algebraic parts. The result is a Subspace over k_sub.field.
    """
    K0 = _ambient_field_of(zs)
    if k_sub.ambient is not K0 and k_sub.ambient.minpoly != K0.minpoly:
        raise FieldMismatch("subfield does not embed in the period field")
    syms = _symbols_of(zs)
    d0 = K0.degree
    e = k_sub.degree
    n = len(zs)
    ncols = n * e
    nrows = 2 * d0 * (1 + len(syms))
    betas = [K0.element(r) for r in k_sub.power_rows]
    cols = []
    for j, z in enumerate(zs):
        for m in range(e):
            b = betas[m]
            col = []
            alg = z.alg * b
            col.extend(alg.re.coords)
            col.extend(alg.im.coords)
            for sym in syms:
                qre, qim = z.trans.get(sym, (Fraction(0), Fraction(0)))
                term_re = b * Fraction(qre)
                term_im = b * Fraction(qim)
                col.extend(term_re.coords)
                col.extend(term_im.coords)
            cols.append(col)
    M = MatF([[cols[c][r] for c in range(ncols)] for r in range(nrows)])
    ker = kernel(M)
    rows = []
    for x in ker.rows:
        row = [k_sub.field.element(x[j * e:(j + 1) * e]) for j in range(n)]
        rows.append(row)
    return Subspace(n, rows)


def _map_relations_into(relations, k_M, gen_img):
    """Push the ambient relation rows through the embedding of k_M whose
    generator maps to gen_img (an element of the target field)."""
    target = gen_img.field
    rows = []
    for r in relations.rows:
        row = []
        for entry in r:
            if isinstance(entry, Fraction):
                row.append(target.from_rational(entry))
                continue
            acc = target.zero()
            cur = target.one()
            for c in entry.coords:
                if c:
                    acc = acc + cur * c
                cur = cur * gen_img
            row.append(acc)
        rows.append(row)
    return Subspace(relations.ambient_dim, rows)


def is_typical(zs, ambient, hol_subfield, config=DEFAULT):
    """Decide typical versus special for period coordinates.

    hol_subfield: the holonomy field as a Subfield of the period coordinate
    field (from a HolonomyReport, or the chart surrogate generated by the
    coordinate parts when no surface is available).
    """
    if len(zs) != ambient.n:
        raise InvalidInput("period count differs from the chart dimension")
    K0 = _ambient_field_of(zs)
    hol_field = hol_subfield.field
    # the ambient field of definition must sit inside the holonomy field
    if ambient.k_M.degree == 1:
        m0 = hol_field.zero()
    else:
        m0 = _locate_root_in_field(ambient.k_M.minpoly, ambient.k_M._iv,
                                   hol_field, config)
    checked = []
    for k in subfields(hol_field, config):
        if k.degree > ambient.genus:
            continue
        if m0 is None or not k.contains(m0):
            continue
        k_in_K0 = hol_subfield.compose(k)
        R_k = relation_space_over(zs, k_in_K0, config)
        gen_img = k.from_ambient(m0) if ambient.k_M.degree > 1 \
            else k.field.zero()
        M_k = _map_relations_into(ambient.relations, ambient.k_M, gen_img)
        if not M_k.contains(R_k):
            witness = next(list(r) for r in R_k.rows
                           if not M_k.contains_vector(list(r)))
            _verify_witness(zs, witness, k_in_K0)
            return SpecialVerdict(witness_field=k.field, witness=witness,
                                  witness_embedding=k_in_K0)
        checked.append(k.field)
    return TypicalVerdict(fields_checked=checked)


def _verify_witness(zs, witness, k_in_K0):
    """A witness must substitute to exactly zero against the periods."""
    K0 = _ambient_field_of(zs)
    acc = ComplexAlg(K0.zero())
    sym_acc = {s: ComplexAlg(K0.zero()) for s in _symbols_of(zs)}
    for c, z in zip(witness, zs):
        ca = k_in_K0.to_ambient(c)
        acc = acc + z.alg * ca
        for sym, (qre, qim) in z.trans.items():
            sym_acc[sym] = sym_acc[sym] + \
                ComplexAlg(ca * Fraction(qre), ca * Fraction(qim))
    assert acc.is_zero(), "witness does not annihilate the algebraic part"
    for sym, val in sym_acc.items():
        assert val.is_zero(), f"witness does not annihilate {sym}"


def generic_verdict(v):
    """Report for a typicality verdict; special inputs stay inconclusive."""
    if isinstance(v, TypicalVerdict):
        return {
            "verdict": "M-generic",
            "meaning": "the orbit closure is the full ambient locus "
                       "(unit-area normalization)",
            "fields_checked": [
                _poly_str(f.minpoly) for f in v.fields_checked],
            "anchors": ["typical-periods-imply-generic"],
        }
    if isinstance(v, SpecialVerdict):
        return {
            "verdict": "inconclusive",
            "meaning": "special periods: a proper invariant locus over the "
                       "witness field may (but need not) contain the orbit "
                       "closure",
            "witness_field": _poly_str(v.witness_field.minpoly),
            "witness": [[str(c) for c in e.coords] for e in v.witness],
            "anchors": ["special-periods-are-inconclusive"],
        }
    raise InvalidInput("unknown verdict type")


def _poly_str(p):
    from .poly import format_poly
    return format_poly(p)
