from __future__ import annotations

from .app_constants import (
    BOX_CAP_ENV,
    DEFAULT_SETTINGS,
    FUNCTION_CHOICES,
    GRID_TARGET_CHOICES,
    METHOD_CHOICES,
    OUTPUT_FORMATS,
    PROG_NAME,
    PUBLISHED_BOUNDS,
    TARGET_CHOICES,
    TARGET_FUNCTIONS,
)
from .bound_optimizer import (
    enclosure_matches,
    global_max,
    grid_search,
    prefix_matches,
    region_grid,
    theorem_h31_bound,
)
from .catalogue import CatalogueFunction, select_functions
from .certify import certified_max
from .config_ops import RunConfig, build_run_config, require_format
from .functionals import functional_reports
from .grunsky import compute_odd_grunsky, moduli_bounds, omega35_bound, verify_lebedev_identities
from .mapping_io import dump_json, write_output
from .objectives import get_bound_function
from .power_series import sqrt_transform
from .report_io import (
    SUMMARY_HEADER,
    bound_text,
    csv_text,
    fmt_float,
    fmt_rational,
    json_float,
    render,
    series_csv,
    series_payload,
    series_text,
    summary_rows,
    summary_text,
    verify_text,
)
