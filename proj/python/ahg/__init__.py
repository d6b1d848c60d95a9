"""Python bindings for the almost Hermitian curvature identity engine."""

import json

from ._core import (  # noqa: F401
    EngineError,
    ParseError,
    __version__,
    catalog,
    eval_expr,
    export_manifold,
    ledger_hash,
)
from . import _core


def verify(manifold="", spec="", points=20, seed=1, t=(), tol_abs=1e-8, tol_rel=1e-6):
    """Run the pointwise identity suite; returns the report as a dict."""
    return json.loads(
        _core.verify_report(manifold, spec, points, seed, list(t), tol_abs, tol_rel)
    )


def scalars(manifold="", spec="", points=4, seed=1, t=()):
    """Scalar curvature tables (contraction and closed-form values)."""
    return json.loads(_core.scalars_report(manifold, spec, points, seed, list(t)))


def classify(manifold="", spec="", points=8, seed=1):
    """Gray-Hervella class label with per-component max norms."""
    return json.loads(_core.classify_report(manifold, spec, points, seed))


def integrate(manifold, integrand, spec="", points=16, seed=1, t=()):
    """Integral estimates for named theorem integrands or scalar expressions."""
    return json.loads(
        _core.integrate_report(manifold, integrand, spec, points, seed, list(t))
    )
