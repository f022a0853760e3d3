from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable

from .errors import UsageError
from .power_series import TruncatedSeries, require_normalized


@dataclass(frozen=True)
class CatalogueFunction:
    name: str
    series: TruncatedSeries
    univalence_verified: bool = True


def koebe(order: int) -> TruncatedSeries:
    """z/(1-z)^2, a_n = n."""
    return TruncatedSeries.from_coefficients(range(order + 1), order)


def identity(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_coefficients([0, 1], order)


def geometric(order: int) -> TruncatedSeries:
    """z/(1-z), a_n = 1."""
    return TruncatedSeries.from_coefficients([0] + [1] * order, order)


CATALOGUE: Dict[str, Callable[[int], TruncatedSeries]] = {
    "koebe": koebe,
    "identity": identity,
    "geometric": geometric,
}


def parse_coefficients(text: str) -> list[Fraction]:
    items = [item.strip() for item in text.split(",")]
    if not text.strip() or any(not item for item in items):
        raise UsageError(f"Coefficient list `{text}` has an empty entry. Use e.g. `0,1,2,3`.")
    values: list[Fraction] = []
    for item in items:
        if "." in item:
            raise UsageError(f"Coefficient `{item}` must be an integer or `p/q`")
        try:
            values.append(Fraction(item))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"Coefficient `{item}` must be an integer or `p/q`") from None
    return values


def custom(coeffs: Iterable[Fraction], order: int) -> CatalogueFunction:
    values = list(coeffs)
    if len(values) > order + 1:
        raise UsageError(f"Coefficient list has {len(values)} entries; order {order} allows at most {order + 1}")
    if len(values) < 2 or values[0] != 0 or values[1] != 1:
        raise UsageError("Custom coefficient lists must begin `0, 1`")
    series = TruncatedSeries.from_coefficients(values, order)
    require_normalized(series)
    return CatalogueFunction("custom", series, univalence_verified=False)


def catalogue_function(name: str, order: int) -> CatalogueFunction:
    try:
        build = CATALOGUE[name]
    except KeyError:
        raise UsageError(f"Unknown function `{name}`. Use one of: {', '.join(CATALOGUE)}") from None
    return CatalogueFunction(name, build(order))


def catalogue(order: int) -> list[CatalogueFunction]:
    return [catalogue_function(name, order) for name in CATALOGUE]


def select_functions(name: str, order: int, coeffs: list[Fraction] | None = None) -> list[CatalogueFunction]:
    if name == "all":
        return catalogue(order)
    if name == "custom":
        return [custom(coeffs or [], order)]
    return [catalogue_function(name, order)]
