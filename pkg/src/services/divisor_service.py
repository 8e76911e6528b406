from collections import OrderedDict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import special

from src.domain.divisor import DivisorFamily, DivisorPoint, LabeledDivisor
from src.domain.results import SuperzetaResult
from src.exceptions import AdmissibilityError, NoClosedFormError, PoleError
from src.numerics.context import EvalContext, resolve_context
from src.numerics.special_functions import hurwitz_zeta_with_error, p_poly

LABELS = ("nontrivial", "trivial", "poles")


def _progression_superzeta(family: DivisorFamily, s: complex, z: complex) -> Tuple[complex, float]:
    """order * zeta_H(s, z - start), or order * zeta_m(s, z - start) for multiple weights."""
    w = z - family.start
    if family.multiple is None:
        value, error = hurwitz_zeta_with_error(s, w)
        return family.order * value, abs(family.order) * error
    value, error = 0j, 0.0
    m = family.multiple
    if s.imag == 0.0 and float(s.real).is_integer() and 1 <= s.real <= m:
        raise PoleError("multiple Hurwitz zeta has a pole at s in {1..m}", location=s, m=m)
    for j in range(m):
        weight = p_poly(m, j, w)
        part, part_error = hurwitz_zeta_with_error(s - j, w)
        value += weight * part
        error += abs(weight) * part_error
    return family.order * value, abs(family.order) * error


def _finite_superzeta(family: DivisorFamily, s: complex, z: complex) -> complex:
    if not family.points:
        return 0j
    locations = np.array([p.location for p in family.points], dtype=complex)
    orders = np.array([p.order for p in family.points], dtype=float)
    return complex(np.sum(orders * np.power(z - locations, -s)))


def divisor_superzeta(
    families: Iterable[DivisorFamily],
    s: complex,
    z: complex,
    kappa: Optional[float] = None,
    context: EvalContext = None,
) -> SuperzetaResult:
    """Sum of ord(rho) (z - rho)^(-s) over the given families.

    Finite families are summed directly and progressions through their Hurwitz
    closed forms. When `kappa` is given the finite families are read as a
    truncation of an infinite divisor and are refused for Re(s) <= kappa.
    """
    s, z = complex(s), complex(z)
    families = tuple(families)
    for family in families:
        if not family.admits(z):
            raise AdmissibilityError("z - rho lies on the cut (-inf, 0]", z=z, family=family.kind)
    if kappa is not None and s.real <= kappa and any(f.kind == "finite" and f.points for f in families):
        raise NoClosedFormError("finite families have no continuation to Re(s) <= kappa", s=s, kappa=kappa)

    value, error = 0j, 0.0
    for family in families:
        if family.kind == "finite":
            value += _finite_superzeta(family, s, z)
        else:
            part, part_error = _progression_superzeta(family, s, z)
            value += part
            error += part_error
    error += 1e-16 * abs(value)
    return SuperzetaResult(value, error, {"families": len(families)})


def progression_direct_sum(family: DivisorFamily, s: complex, z: complex, terms: int) -> SuperzetaResult:
    """Truncated direct sum over the first `terms` points of a progression with a tail bound.

    Used to check the closed forms; needs Re(s) > 1 (constant) or Re(s) > m (multiple).
    """
    s, z = complex(s), complex(z)
    m = 1 if family.multiple is None else family.multiple
    if s.real <= m:
        raise NoClosedFormError("direct progression sums need Re(s) above the weight degree", s=s, m=m)
    l = np.arange(terms, dtype=float)
    weights = np.ones(terms) if family.multiple is None else special.comb(m + l - 1, l)
    w = z - family.start
    value = family.order * complex(np.sum(weights * np.power(w + l, -s)))
    last = abs(w + terms)
    first_weight = 1.0 if family.multiple is None else float(special.comb(m + terms - 1, terms))
    tail = abs(family.order) * first_weight * last ** (-s.real) * (last / (s.real - m) + 1.0)
    return SuperzetaResult(value, tail, {"terms": terms})


def admissible(divisor: LabeledDivisor, z: complex) -> bool:
    return all(family.admits(z) for family in divisor.families())


def _merge_families(families: Sequence[DivisorFamily]) -> Tuple[DivisorFamily, ...]:
    points: "OrderedDict[complex, float]" = OrderedDict()
    progressions: "OrderedDict[Tuple[complex, Optional[int]], float]" = OrderedDict()
    for family in families:
        if family.kind == "finite":
            for point in family.points:
                points[point.location] = points.get(point.location, 0.0) + point.order
        else:
            key = (family.start, family.multiple)
            progressions[key] = progressions.get(key, 0.0) + family.order

    merged: List[DivisorFamily] = []
    kept = [DivisorPoint(location, order) for location, order in points.items() if order != 0]
    if kept:
        merged.append(DivisorFamily.finite(kept))
    for (start, multiple), order in progressions.items():
        if order != 0:
            merged.append(DivisorFamily.progression(start, order, multiple))
    return tuple(merged)


def normalize(divisor: LabeledDivisor) -> LabeledDivisor:
    """Add the orders of coincident points within each label and drop the zero-order ones."""
    return LabeledDivisor(**{label: _merge_families(getattr(divisor, label)) for label in LABELS})


def merge(first: LabeledDivisor, second: LabeledDivisor) -> LabeledDivisor:
    """Label-wise sum of two divisors.

    Orders cancel only inside a label: a zero and a pole at the same point keep
    their own entries, and cancel in the signed total of labeled_superzeta.
    """
    return LabeledDivisor(**{
        label: _merge_families(getattr(first, label) + getattr(second, label)) for label in LABELS
    })


def labeled_superzeta(
    divisor: LabeledDivisor,
    s: complex,
    z: complex,
    kappa: Optional[float] = None,
    context: EvalContext = None,
) -> Dict[str, SuperzetaResult]:
    """Split Z = Z^NT + Z^T - Z^P; pole families carry positive multiplicities."""
    context = resolve_context(context)
    if not admissible(divisor, z):
        raise AdmissibilityError("z is not admissible for the labeled divisor", z=complex(z))
    parts = {
        label: divisor_superzeta(getattr(divisor, label), s, z, kappa, context) for label in LABELS
    }
    total = parts["nontrivial"].value + parts["trivial"].value - parts["poles"].value
    error = sum(part.est_error for part in parts.values())
    parts["total"] = SuperzetaResult(total, error, {"labels": list(LABELS)})
    return parts
