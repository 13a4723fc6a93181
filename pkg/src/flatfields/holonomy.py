"""Holonomy fields, fields of definition of subspaces, and the
intersection-over-samples calculator.

The holonomy field of a surface is computed by decomposing every absolute
basis period over a frame of two R-independent absolute periods and taking
the field generated by the coordinates. The frame is the first two
R-independent periods in scan order; the result does not depend on this
choice, which the tests exercise through the frame override parameter.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT
from .errors import DegeneratePeriods, InvalidInput
from .fieldops import Subfield, field_generated_by, field_intersect
from .linalg import Subspace
from .numfield import ComplexAlg, NFElement, NumberField, QQ
from .surface import (
    PolygonSurface, absolute_periods, homology, periods, validate,
)


@dataclass
class HolonomyReport:
    field: NumberField        # abstract holonomy field
    subfield: Subfield        # the same field embedded in the surface's field
    e1: ComplexAlg
    e2: ComplexAlg
    coords: list              # (x, y) per absolute basis period, in field
    normalizer: list          # 2x2 with entries in the surface's field
    frame_indices: tuple
    genus: int


def _decompose(z, e1, e2):
    """Solve z = x e1 + y e2 with x, y real, exactly."""
    det = e1.re * e2.im - e1.im * e2.re
    x = (z.re * e2.im - z.im * e2.re) / det
    y = (e1.re * z.im - e1.im * z.re) / det
    return x, y


def holonomy_field(S, frame=None, config=DEFAULT):
    """Holonomy data of a validated surface.

    frame optionally forces the two absolute-basis indices used as (e1, e2);
    it exists so tests can check frame independence.
    """
    H = homology(S)
    if H.genus < 1:
        raise InvalidInput("holonomy needs genus at least 1")
    pv = periods(S, H)
    aps = absolute_periods(pv)
    if frame is None:
        i = next((k for k, z in enumerate(aps) if not z.is_zero()), None)
        if i is None:
            raise DegeneratePeriods("all absolute periods vanish")
        j = None
        for k in range(len(aps)):
            if k == i:
                continue
            cr = aps[i].re * aps[k].im - aps[i].im * aps[k].re
            if not cr.is_zero():
                j = k
                break
        if j is None:
            raise DegeneratePeriods("absolute periods are R-collinear")
    else:
        i, j = frame
    e1, e2 = aps[i], aps[j]
    det = e1.re * e2.im - e1.im * e2.re
    if det.is_zero():
        raise DegeneratePeriods("chosen frame is R-collinear")
    if det.sign() < 0:
        e2 = -e2  # keep the normalizer orientation-preserving
        det = -det
    parts = []
    raw_coords = []
    for z in aps:
        x, y = _decompose(z, e1, e2)
        raw_coords.append((x, y))
        parts.extend((x, y))
    sub = field_generated_by(parts, S.field, config)
    coords = [(sub.from_ambient(x), sub.from_ambient(y)) for x, y in raw_coords]
    inv = det.inverse()
    normalizer = [[e2.im * inv, -(e2.re * inv)],
                  [-(e1.im * inv), e1.re * inv]]
    return HolonomyReport(field=sub.field, subfield=sub, e1=e1, e2=e2,
                          coords=coords, normalizer=normalizer,
                          frame_indices=(i, j), genus=H.genus)


@dataclass
class FodReport:
    field: NumberField
    imaginary: bool           # some RREF entry had a nonzero imaginary part
    subfield: Subfield        # embedding into the coefficient field


def field_of_definition_subspace(V, ambient_field=None, config=DEFAULT):
    """Field generated by the RREF coefficients of a subspace.

    Entries may be rational, real field elements, or K[i] values; the result
    is the real field generated by all real and imaginary parts, with a flag
    recording whether any imaginary part was nonzero.
    """
    if V.is_zero_space():
        raise InvalidInput("field of definition of the zero subspace")
    sample = V.rows[0][0]
    if isinstance(sample, Fraction):
        amb = ambient_field or QQ
        from .fieldops import trivial_subfield
        return FodReport(field=QQ, imaginary=False,
                         subfield=trivial_subfield(amb))
    if isinstance(sample, NFElement):
        amb = sample.field
        parts = [e for row in V.rows for e in row]
        imaginary = False
    else:
        amb = sample.field
        parts = []
        imaginary = False
        for row in V.rows:
            for e in row:
                parts.append(e.re)
                parts.append(e.im)
                if not e.im.is_zero():
                    imaginary = True
    sub = field_generated_by(parts, amb, config)
    return FodReport(field=sub.field, imaginary=imaginary, subfield=sub)


def k_of_M_from_samples(samples, config=DEFAULT):
    """Fold of field_intersect over the holonomy fields of the samples.

    The result is an upper bound for the field of definition of the smallest
    invariant locus containing the samples; it is exact when the samples
    suffice. A degree above the genus bound triggers a warning, not an
    error, since it can only come from inconsistent inputs.
    """
    if not samples:
        raise InvalidInput("need at least one sample surface")
    reports = [holonomy_field(S, config=config) for S in samples]
    genus = reports[0].genus
    if any(r.genus != genus for r in reports):
        warnings.warn("samples have different genera; they cannot lie in "
                      "one invariant submanifold")
    acc = reports[0].field
    for r in reports[1:]:
        acc = field_intersect(acc, r.field, config)
    if acc.degree > genus:
        warnings.warn(
            f"intersection field degree {acc.degree} exceeds the genus bound "
            f"{genus}; the samples are inconsistent")
    return acc


def normalize_to_ki(S, config=DEFAULT):
    """Apply the 2x2 frame normalizer to all vertices.

    The image surface has absolute periods with real and imaginary parts in
    the holonomy field, and the same stratum.
    """
    hol = holonomy_field(S, config=config)
    (a, b), (c, d) = hol.normalizer
    new_polys = []
    for poly in S.polygons:
        new_polys.append([ComplexAlg(a * z.re + b * z.im,
                                     c * z.re + d * z.im) for z in poly])
    out = PolygonSurface(S.field, new_polys, S.gluings)
    validate(out)
    return out
