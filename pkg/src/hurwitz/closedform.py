"""Genus-closed forms: the finite data that evaluates to any-genus counts.

A closed form is a list of terms (k, i, coeff) plus a normalization; with
b = 2g + b_offset the value at genus g is

    normalization * sum over terms of coeff * b^{i-1} * k^b.

Monotone forms come from partial fractions of the factored generating
function (negative-k poles folded into positive k by parity); simple forms
scale the exponential-sum coefficients to integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import npoint
from .exactarith import (
    Poly,
    format_rational,
    parse_rational,
    partial_fractions,
    recombine,
)
from .partitions import Partition

__all__ = [
    "GenusClosedForm",
    "StructureReport",
    "AsymptoticTerm",
    "monotone_closed_form",
    "simple_closed_form",
    "evaluate",
    "structure_checks",
    "asymptotics",
    "monotone_leading_coefficient",
    "to_json_dict",
    "from_json_dict",
    "csv_rows",
]

KIND_MONOTONE = "monotone"
KIND_SIMPLE = "simple"


@dataclass(frozen=True)
class GenusClosedForm:
    """Terms (k, i, coeff) in dominance order (k desc, then i desc)."""

    kind: str
    mu: Partition
    b_offset: int
    normalization: Fraction
    terms: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self) -> None:
        if self.kind not in (KIND_MONOTONE, KIND_SIMPLE):
            raise ValueError(f"unknown kind {self.kind!r}")
        ordered = tuple(
            sorted(
                ((int(k), int(i), Fraction(c)) for k, i, c in self.terms),
                key=lambda t: (-t[0], -t[1]),
            )
        )
        object.__setattr__(self, "normalization", Fraction(self.normalization))
        object.__setattr__(self, "terms", ordered)

    def coefficient(self, k: int, i: int = 1) -> Fraction:
        for tk, ti, c in self.terms:
            if tk == k and ti == i:
                return c
        return Fraction(0)

    def evaluate(self, g: int) -> Fraction:
        return evaluate(self, g)


@dataclass(frozen=True)
class StructureReport:
    """Observed vs expected leading coefficients of a closed form.

    For simple forms the gap flag covers the vanishing window
    (d-1 choose 2) < k < (d choose 2); for monotone forms it covers the
    absence of (d-1, i>=2) and (d-2, i>=2) terms.  The second-coefficient
    fields are None where the top/second statement does not apply
    (monotone forms, and simple forms with d = 2 whose would-be second
    index (d-1 choose 2) = 0 lies outside the stored range k >= 1).
    """

    kind: str
    top_coefficient: Fraction
    expected_top: Fraction
    gap_all_zero: bool
    second_coefficient: Fraction | None
    expected_second: Fraction | None

    @property
    def passed(self) -> bool:
        if self.top_coefficient != self.expected_top or not self.gap_all_zero:
            return False
        return self.second_coefficient == self.expected_second


@dataclass(frozen=True)
class AsymptoticTerm:
    k: int
    i: int
    coeff: Fraction
    leading: bool


def _product_of_parts(mu: Partition) -> int:
    out = 1
    for p in mu.parts:
        out *= p
    return out


def _falling_basis(i: int) -> Poly:
    """prod_{s=1}^{i-1} (x + s) / (i-1)! in the monomial basis."""
    out = Poly.constant(1)
    for s in range(1, i):
        out = out * Poly((Fraction(s), Fraction(1)))
    return out.scale(Fraction(1, factorial(i - 1)))


def monotone_closed_form(mu: Partition) -> GenusClosedForm:
    """Closed form with mu_1...mu_l * vecH_{g;mu} = sum coeff * b^{i-1} * k^b."""
    generating = npoint.monotone_generating(mu)
    decomposition = partial_fractions(generating)
    if recombine(decomposition) != generating:
        raise ArithmeticError("partial-fraction recombination mismatch")
    d, l = mu.size, mu.length
    sign = -1 if (d + l) % 2 else 1
    by_pole: dict[int, dict[int, Fraction]] = {}
    for (k, i), coeff in decomposition.terms.items():
        mirror = decomposition.terms.get((-k, i), Fraction(0))
        if mirror != sign * coeff:
            raise ArithmeticError("pole data violates hbar -> -hbar parity")
        if k > 0:
            by_pole.setdefault(k, {})[i] = coeff
    terms: list[tuple[int, int, Fraction]] = []
    for k in sorted(by_pole, reverse=True):
        # Sum_i C(k,i) x^{i-1} = 2 Sum_i D(k,i) prod_{s=1}^{i-1}(x+s)/(i-1)!
        # as polynomials in x = b; convert basis and read off monomials.
        combined = Poly()
        for i, coeff in by_pole[k].items():
            combined = combined + _falling_basis(i).scale(2 * coeff)
        for power, c in enumerate(combined.coeffs):
            if c:
                terms.append((k, power + 1, c))
    return GenusClosedForm(
        kind=KIND_MONOTONE,
        mu=mu,
        b_offset=d + l - 2,
        normalization=Fraction(1, _product_of_parts(mu)),
        terms=tuple(terms),
    )


def simple_closed_form(mu: Partition) -> GenusClosedForm:
    """Closed form with H_{g;mu} = 2/(d! mu_1...mu_l) * sum C(k) * k^b."""
    exponential = npoint.simple_generating(mu)
    d, l = mu.size, mu.length
    sign = -1 if (d + l) % 2 else 1
    scale = factorial(d) * _product_of_parts(mu)
    terms: list[tuple[int, int, Fraction]] = []
    for k, coeff in exponential.terms.items():
        if exponential.coefficient(-k) != sign * coeff:
            raise ArithmeticError("exponential data violates hbar -> -hbar parity")
        if k <= 0:
            continue
        c = scale * coeff
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient C({mu};{k}) = {c}")
        terms.append((k, 1, c))
    return GenusClosedForm(
        kind=KIND_SIMPLE,
        mu=mu,
        b_offset=d + l - 2,
        normalization=Fraction(2, scale),
        terms=tuple(terms),
    )


def evaluate(form: GenusClosedForm, g: int) -> Fraction:
    """Exact H_{g;mu} or vecH_{g;mu} at any genus g >= 0."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    b = 2 * g + form.b_offset
    total = Fraction(0)
    for k, i, coeff in form.terms:
        total += coeff * b ** (i - 1) * k**b
    return form.normalization * total


def monotone_leading_coefficient(d: int) -> Fraction:
    """The genus-leading coefficient 2 (d-1)^{d-2} / (d! (d-2)!)."""
    if d < 2:
        raise ValueError("degree must be >= 2")
    return Fraction(2 * (d - 1) ** (d - 2), factorial(d) * factorial(d - 2))


def structure_checks(form: GenusClosedForm) -> StructureReport:
    """Compare a closed form's leading data against its structure theorem."""
    d = form.mu.size
    if form.kind == KIND_SIMPLE:
        top_k = d * (d - 1) // 2
        second_k = (d - 1) * (d - 2) // 2
        gap = all(not (second_k < k < top_k) for k, _, _ in form.terms)
        if second_k >= 1:
            second = form.coefficient(second_k)
            ones = sum(1 for p in form.mu.parts if p == 1)
            expected_second = Fraction(-d * ones)
        else:
            second = None
            expected_second = None
        return StructureReport(
            kind=form.kind,
            top_coefficient=form.coefficient(top_k),
            expected_top=Fraction(1),
            gap_all_zero=gap,
            second_coefficient=second,
            expected_second=expected_second,
        )
    gap = all(
        not (k in (d - 1, d - 2) and i >= 2) for k, i, _ in form.terms
    )
    return StructureReport(
        kind=form.kind,
        top_coefficient=form.coefficient(d - 1),
        expected_top=monotone_leading_coefficient(d),
        gap_all_zero=gap,
        second_coefficient=None,
        expected_second=None,
    )


def asymptotics(form: GenusClosedForm) -> tuple[AsymptoticTerm, ...]:
    """Terms in dominance order; the structure-theorem heads are flagged.

    Simple forms flag every term with k >= (d-1 choose 2) (the two-term
    large-genus expansion); monotone forms flag the k = d-1 term.
    """
    d = form.mu.size
    cutoff = (d - 1) * (d - 2) // 2
    out = []
    for k, i, coeff in form.terms:
        if form.kind == KIND_SIMPLE:
            leading = k >= cutoff
        else:
            leading = k == d - 1
        out.append(AsymptoticTerm(k, i, coeff, leading))
    return tuple(out)


def to_json_dict(form: GenusClosedForm) -> dict:
    return {
        "kind": form.kind,
        "mu": list(form.mu.parts),
        "b_offset": form.b_offset,
        "normalization": format_rational(form.normalization),
        "terms": [
            {"k": k, "i": i, "coeff": format_rational(c)} for k, i, c in form.terms
        ],
    }


def from_json_dict(data: dict) -> GenusClosedForm:
    form = GenusClosedForm(
        kind=data["kind"],
        mu=Partition(tuple(data["mu"])),
        b_offset=int(data["b_offset"]),
        normalization=parse_rational(data["normalization"]),
        terms=tuple(
            (int(t["k"]), int(t["i"]), parse_rational(t["coeff"]))
            for t in data["terms"]
        ),
    )
    expected_offset = form.mu.size + form.mu.length - 2
    if form.b_offset != expected_offset:
        raise ValueError("b_offset inconsistent with mu")
    return form


def csv_rows(form: GenusClosedForm) -> list[tuple[str, str, str]]:
    return [(str(k), str(i), format_rational(c)) for k, i, c in form.terms]
