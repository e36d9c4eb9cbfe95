"""Executable oracle suite for the standalone q-identities.

Each identity family expands both sides fully symbolically and compares
canonical forms; vanishing families compare against the zero polynomial.
Families carry their precondition ranges as data, so a single sweep can
enumerate and report every instance uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .qarith import QLaurent, q_binom, q_int


class UniPoly:
    """A polynomial in one central indeterminate with ring coefficients.

    Coefficients are QLaurent values, or UniPoly values again for the
    homogenized two-variable expansion (a polynomial in x whose
    coefficients are polynomials in y).  The indeterminate commutes with
    everything, so multiplication is the plain convolution.
    """

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs: Union[Mapping[int, object], Iterable[Tuple[int, object]], None] = None, var: str = "x"):
        data: dict[int, object] = {}
        if coeffs is not None:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for degree, coeff in items:
                if not isinstance(degree, int) or degree < 0:
                    raise ValueError("degrees must be nonnegative integers")
                if degree in data:
                    coeff = data[degree] + coeff
                if coeff:
                    data[degree] = coeff
                else:
                    data.pop(degree, None)
        self._coeffs = data
        self.var = var

    def items(self) -> list[tuple[int, object]]:
        return sorted(self._coeffs.items())

    def coefficient(self, degree: int):
        return self._coeffs.get(degree, QLaurent.zero())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly) or other.var != self.var:
            return NotImplemented
        data = dict(self._coeffs)
        for degree, coeff in other._coeffs.items():
            merged = data[degree] + coeff if degree in data else coeff
            if merged:
                data[degree] = merged
            else:
                data.pop(degree, None)
        return self._raw(data, self.var)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly) or other.var != self.var:
            return NotImplemented
        data: dict[int, object] = {}
        for da, ca in self._coeffs.items():
            for db, cb in other._coeffs.items():
                degree = da + db
                contrib = ca * cb
                merged = data[degree] + contrib if degree in data else contrib
                if merged:
                    data[degree] = merged
                else:
                    data.pop(degree, None)
        return self._raw(data, self.var)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.var == other.var and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.var, frozenset((d, hash(c)) for d, c in self._coeffs.items())))

    @classmethod
    def _raw(cls, data: dict[int, object], var: str) -> "UniPoly":
        out = cls.__new__(cls)
        out._coeffs = data
        out.var = var
        return out

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for degree, coeff in self.items():
            coeff_text = str(coeff)
            if isinstance(coeff, QLaurent) and coeff.term_count() > 1:
                coeff_text = f"({coeff_text})"
            elif isinstance(coeff, UniPoly) and len(coeff._coeffs) > 1:
                coeff_text = f"({coeff_text})"
            if degree == 0:
                pieces.append(coeff_text)
            else:
                power = self.var if degree == 1 else f"{self.var}^{degree}"
                pieces.append(f"{coeff_text}*{power}")
        return " + ".join(pieces)

    __repr__ = __str__


@dataclass(frozen=True)
class IdentityReport:
    """One identity check: the family tag, its parameters, both rendered
    sides, and the verdict (pass iff the sides canonicalize equal)."""

    family: str
    params: tuple[int, ...]
    lhs: str
    rhs: str
    verdict: bool

    def render(self) -> str:
        names = FAMILIES[self.family].param_names
        inner = ",".join(f"{n}={v}" for n, v in zip(names, self.params))
        return f"{self.family}({inner}) = {'PASS' if self.verdict else 'FAIL'}"


# -- the expansions ----------------------------------------------------------


def _alternating_binom_sum(top: int, shift: int) -> QLaurent:
    """sum_r (-1)^r q^(r(r-1)/2 - shift*r) [top, r]."""
    total = QLaurent.zero()
    for r in range(top + 1):
        term = QLaurent.q_power(r * (r - 1) - 2 * shift * r) * q_binom(top, r)
        total = total + (-term if r % 2 else term)
    return total


def _vanishing(d: int) -> tuple[QLaurent, QLaurent]:
    return _alternating_binom_sum(d, 0), QLaurent.zero()


def _shifted_vanishing(d: int, c: int) -> tuple[QLaurent, QLaurent]:
    return _alternating_binom_sum(d, c), QLaurent.zero()


def _product_expansion(n: int) -> tuple[UniPoly, UniPoly]:
    one = QLaurent.one()
    lhs = UniPoly({0: one})
    for r in range(1, n + 1):
        lhs = lhs * UniPoly({0: one, 1: QLaurent.q_power(2 * r)})
    rhs = UniPoly(
        {k: q_binom(n, k) * QLaurent.q_power(k * (k + 1)) for k in range(n + 1)}
    )
    return lhs, rhs


def _product_expansion_bivar(n: int) -> tuple[UniPoly, UniPoly]:
    # x-polynomial with y-polynomial coefficients; x and y commute.
    one = QLaurent.one()
    y_unit = UniPoly({1: one}, var="y")
    lhs = UniPoly({0: UniPoly({0: one}, var="y")})
    for r in range(1, n + 1):
        factor = UniPoly({0: y_unit, 1: UniPoly({0: QLaurent.q_power(2 * r)}, var="y")})
        lhs = lhs * factor
    rhs = UniPoly(
        {
            k: UniPoly({n - k: q_binom(n, k) * QLaurent.q_power(k * (k + 1))}, var="y")
            for k in range(n + 1)
        }
    )
    return lhs, rhs


def _vandermonde(n: int, d: int, k: int) -> tuple[QLaurent, QLaurent]:
    lhs = q_binom(n, k)
    rhs = QLaurent.zero()
    for r in range(k + 1):
        rhs = rhs + QLaurent.q_power(2 * (d - r) * (k - r)) * q_binom(d, r) * q_binom(n - d, k - r)
    return lhs, rhs


def _double_sum_neg(n: int, k: int) -> tuple[QLaurent, QLaurent]:
    total = QLaurent.zero()
    inner = QLaurent.zero()
    for t in range(n + 1):
        r_term = QLaurent.q_power(t * (t - 1)) * q_binom(n + 1, t)
        inner = inner + (-r_term if t % 2 else r_term)
        total = total + QLaurent.q_power(-2 * t * k) * inner
    return total, QLaurent.zero()


def _double_sum_pos(n: int, v: int, k: int) -> tuple[QLaurent, QLaurent]:
    total = QLaurent.zero()
    inner = QLaurent.zero()
    for t in range(n + 1):
        r_term = QLaurent.q_power(t * (t - 1) - 2 * n * t) * q_binom(n + 1, t)
        inner = inner + (-r_term if t % 2 else r_term)
        total = total + QLaurent.q_power(2 * t * (v - k)) * inner
    return total, QLaurent.zero()


def _pascal(n: int, r: int, d: int) -> tuple[QLaurent, QLaurent]:
    lhs = q_binom(n + 1, r, d)
    first = q_binom(n, r, d) + QLaurent.q_power(2 * d * (n + 1 - r)) * q_binom(n, r - 1, d)
    second = QLaurent.q_power(2 * d * r) * q_binom(n, r, d) + q_binom(n, r - 1, d)
    if first != second:
        # Render an unequal pair so the report shows the broken recurrence.
        return first, second
    return lhs, first


def _reversal(n: int, d: int) -> tuple[QLaurent, QLaurent]:
    lhs = q_int(n, d)
    rhs = QLaurent.q_power(2 * d * (n - 1)) * q_int(n, d).bar()
    return lhs, rhs


def _symmetry(n: int, r: int, d: int) -> tuple[QLaurent, QLaurent]:
    lhs = q_binom(n, r, d)
    rhs = QLaurent.q_power(2 * d * r * (n - r)) * q_binom(n, r, d).bar()
    return lhs, rhs


def _base_change(n: int, r: int, d: int) -> tuple[QLaurent, QLaurent]:
    # Cross-multiplied: [n]_{q^(rd)} * [r]_{q^d} = [n]_{q^d} * [r]_{q^(dn)}.
    lhs = q_int(n, r * d) * q_int(r, d)
    rhs = q_int(n, d) * q_int(r, d * n)
    return lhs, rhs


# -- the family registry -----------------------------------------------------


@dataclass(frozen=True)
class IdentityFamily:
    name: str
    param_names: tuple[str, ...]
    precondition: str
    validate: Callable[..., bool]
    expand: Callable[..., tuple[object, object]]
    sweep: Callable[[], Iterator[tuple[int, ...]]]


def _sweep_vanishing() -> Iterator[tuple[int, ...]]:
    for d in range(1, 11):
        yield (d,)


def _sweep_shifted() -> Iterator[tuple[int, ...]]:
    for d in range(1, 11):
        for c in range(d):
            yield (d, c)


def _sweep_n(top: int) -> Callable[[], Iterator[tuple[int, ...]]]:
    def gen() -> Iterator[tuple[int, ...]]:
        for n in range(1, top + 1):
            yield (n,)

    return gen


def _sweep_vandermonde() -> Iterator[tuple[int, ...]]:
    for n in range(9):
        for d in range(n + 1):
            for k in range(9):
                yield (n, d, k)


def _sweep_double_neg() -> Iterator[tuple[int, ...]]:
    for n in range(1, 9):
        for k in range(1, n + 1):
            yield (n, k)


def _sweep_double_pos() -> Iterator[tuple[int, ...]]:
    for n in range(1, 9):
        for v in range(1, n + 1):
            for k in range(v):
                yield (n, v, k)


def _sweep_pascal() -> Iterator[tuple[int, ...]]:
    for n in range(12):
        for r in range(n + 2):
            for d in range(1, 4):
                yield (n, r, d)


def _sweep_reversal() -> Iterator[tuple[int, ...]]:
    for n in range(13):
        for d in range(1, 4):
            yield (n, d)


def _sweep_symmetry() -> Iterator[tuple[int, ...]]:
    for n in range(11):
        for r in range(n + 1):
            for d in range(1, 4):
                yield (n, r, d)


def _sweep_base_change() -> Iterator[tuple[int, ...]]:
    for n in range(1, 9):
        for r in range(1, 9):
            for d in range(1, 4):
                yield (n, r, d)


FAMILIES: dict[str, IdentityFamily] = {
    family.name: family
    for family in (
        IdentityFamily(
            "VANISHING",
            ("d",),
            "d >= 1",
            lambda d: d >= 1,
            _vanishing,
            _sweep_vanishing,
        ),
        IdentityFamily(
            "SHIFTED_VANISHING",
            ("d", "c"),
            "d >= 1 and 0 <= c <= d-1",
            lambda d, c: d >= 1 and 0 <= c <= d - 1,
            _shifted_vanishing,
            _sweep_shifted,
        ),
        IdentityFamily(
            "PRODUCT_EXPANSION",
            ("n",),
            "n >= 1",
            lambda n: n >= 1,
            _product_expansion,
            _sweep_n(10),
        ),
        IdentityFamily(
            "PRODUCT_EXPANSION_BIVAR",
            ("n",),
            "n >= 1",
            lambda n: n >= 1,
            _product_expansion_bivar,
            _sweep_n(10),
        ),
        IdentityFamily(
            "VANDERMONDE",
            ("n", "d", "k"),
            "k >= 0 and 0 <= d <= n",
            lambda n, d, k: k >= 0 and 0 <= d <= n,
            _vandermonde,
            _sweep_vandermonde,
        ),
        IdentityFamily(
            "DOUBLE_SUM_NEG",
            ("n", "k"),
            "1 <= k <= n",
            lambda n, k: 1 <= k <= n,
            _double_sum_neg,
            _sweep_double_neg,
        ),
        IdentityFamily(
            "DOUBLE_SUM_POS",
            ("n", "v", "k"),
            "v <= n and 0 <= k <= v-1",
            lambda n, v, k: v <= n and 0 <= k <= v - 1,
            _double_sum_pos,
            _sweep_double_pos,
        ),
        IdentityFamily(
            "PASCAL",
            ("n", "r", "d"),
            "n >= 0 and r >= 0 and d >= 1",
            lambda n, r, d: n >= 0 and r >= 0 and d >= 1,
            _pascal,
            _sweep_pascal,
        ),
        IdentityFamily(
            "REVERSAL",
            ("n", "d"),
            "n >= 0 and d >= 1",
            lambda n, d: n >= 0 and d >= 1,
            _reversal,
            _sweep_reversal,
        ),
        IdentityFamily(
            "SYMMETRY",
            ("n", "r", "d"),
            "0 <= r <= n and d >= 1",
            lambda n, r, d: 0 <= r <= n and d >= 1,
            _symmetry,
            _sweep_symmetry,
        ),
        IdentityFamily(
            "BASE_CHANGE",
            ("n", "r", "d"),
            "n >= 1 and r >= 1 and d >= 1",
            lambda n, r, d: n >= 1 and r >= 1 and d >= 1,
            _base_change,
            _sweep_base_change,
        ),
    )
}


def check_identity(family: str, params: Sequence[int]) -> IdentityReport:
    """Expand both sides of one identity instance and compare exactly.

    Rejects unknown families and out-of-range parameters with a message
    naming the family's precondition.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown identity family {family!r}")
    spec = FAMILIES[family]
    params = tuple(int(v) for v in params)
    if len(params) != len(spec.param_names):
        raise ValueError(
            f"{family} takes parameters ({', '.join(spec.param_names)}), got {params}"
        )
    if not spec.validate(*params):
        shown = ", ".join(f"{n}={v}" for n, v in zip(spec.param_names, params))
        raise ValueError(f"{family} requires {spec.precondition}; got {shown}")
    lhs, rhs = spec.expand(*params)
    return IdentityReport(
        family=family,
        params=params,
        lhs=str(lhs),
        rhs=str(rhs),
        verdict=lhs == rhs,
    )


def sweep_reports(families: Sequence[str] | None = None) -> list[IdentityReport]:
    """Run every family over its stated ranges, ordered by family then
    lexicographic parameters."""
    chosen = sorted(families) if families is not None else sorted(FAMILIES)
    reports = []
    for name in chosen:
        if name not in FAMILIES:
            raise ValueError(f"unknown identity family {name!r}")
        for params in sorted(FAMILIES[name].sweep()):
            reports.append(check_identity(name, params))
    return reports
