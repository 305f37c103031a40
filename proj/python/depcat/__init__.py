"""Finite-category engine for family-arrow, Sigma-object and dependent-arrow
structures, with exhaustive law checking on concrete finite instances.

The heavy lifting lives in the C++ extension ``depcat._core``; this package
re-exports its surface.
"""

from depcat._core import (
    Document,
    DepcatError,
    applicable_suites,
    check,
    generate,
    load,
    loads,
    mutable_laws,
    mutate_for_law,
    report_text,
    run_suites,
    save,
)

__all__ = [
    "Document",
    "DepcatError",
    "applicable_suites",
    "check",
    "generate",
    "load",
    "loads",
    "mutable_laws",
    "mutate_for_law",
    "report_text",
    "run_suites",
    "save",
]
