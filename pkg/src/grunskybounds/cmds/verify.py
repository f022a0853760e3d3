from __future__ import annotations

import argparse
from typing import Any

from ..core import (
    CatalogueFunction,
    build_run_config,
    compute_odd_grunsky,
    fmt_float,
    fmt_rational,
    functional_reports,
    moduli_bounds,
    omega35_bound,
    render,
    require_format,
    select_functions,
    verify_lebedev_identities,
    verify_text,
    write_output,
)
from .series import warn_if_unverified


def function_payload(item: CatalogueFunction, cap: int) -> dict[str, Any]:
    lebedev = verify_lebedev_identities(item.series, item.name)
    table = compute_odd_grunsky(item.series, cap, item.name)
    reports = functional_reports(item.series, table)
    checks = moduli_bounds(table) + omega35_bound(table)
    return {
        "function": item.name,
        "univalence_verified": item.univalence_verified,
        "identities": [{"name": r.name, "residual": fmt_rational(r.residual)} for r in lebedev.residuals],
        "functionals": [
            {
                "name": r.name,
                "direct": fmt_rational(r.direct),
                "via_omega": fmt_rational(r.via_omega),
                "agreement": r.agreement,
                "matches": r.matches,
            }
            for r in reports
        ],
        "moduli": [
            {"name": c.name, "value": fmt_float(c.value), "bound": fmt_float(c.bound), "holds": c.holds}
            for c in checks
        ],
        "ok": lebedev.ok and all(r.matches for r in reports),
    }


def command_verify(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    fmt = require_format(config, ["json", "text"])
    items = select_functions(config.fn, config.order, config.coeffs)
    functions = []
    for item in items:
        warn_if_unverified(item)
        functions.append(function_payload(item, config.cap))
    payload = {
        "order": config.order,
        "functions": functions,
        "identities_checked": sum(len(item["identities"]) for item in functions),
        "ok": all(item["ok"] for item in functions),
    }
    write_output(render(payload, fmt, verify_text(payload)), config.output)
    return 0 if payload["ok"] else 1
