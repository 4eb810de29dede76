"""Python access to the macroatlas engine."""

from ._core import (
    EconState,
    IoError,
    MacroatlasError,
    NotFoundError,
    Params,
    ScenarioStore,
    SolverError,
    ValidationError,
    ad_output,
    consumption,
    export_dot,
    full_employment_output,
    graph,
    is_output,
    islm,
    labor_demand,
    labor_market,
    labor_supply,
    leisure_choice,
    lm_rate,
    long_run,
    money_demand,
    mpk,
    mpl,
    panel,
    production,
    propagate,
    provenance_paths,
    render_svg,
    residuals,
    short_run,
    slutsky,
    solow,
    topological_order,
)

__version__ = "0.1.0"
