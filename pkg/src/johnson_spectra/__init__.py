"""Exact spectral toolkit and percolation harness for Johnson graphs G(n, r, s)."""

from .exactmath import BigRational, binom, binom_row
from .oracle import (
    DisjointSet,
    ExplicitGraph,
    build_graph,
    components,
    spectrum_consistency,
    trace_moments,
)
from .percolation import (
    PercolationConfig,
    PercolationSummary,
    alpha_bar,
    predicted_fraction,
    run_percolation,
    sample_subgraph,
    threshold_scan,
    trial_rng,
)
from .spectrum import (
    BoundReport,
    DegenerateGraphError,
    GraphParams,
    Spectrum,
    SpectrumEntry,
    canonicalize,
    degree,
    eigenvalue_formula_a,
    eigenvalue_formula_b,
    full_spectrum,
    lemma6_residual,
    scan_bounds,
    verify_bound,
)

__version__ = "0.1.0"
