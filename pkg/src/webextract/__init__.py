"""Extracting induced subdivisions of complete graphs from webs.

Graphs, webs, a Ramsey engine, the extraction pipeline that turns a web into
an induced K_t, an induced K_{t,t} or a clean branch set, and independent
checkers for what it emits.
"""

from .bounds import BigBound, bound_chain, rho_upper
from .budget import Budget, SearchResult
from .certificates import (
    CleanSet,
    Inconclusive,
    InducedBiclique,
    InducedClique,
    PinnedPair,
    TouchingFamilies,
)
from .certify import verify_certificate
from .extraction import (
    ExtractionParams,
    lemma_clean_interior,
    lemma_pinned,
    lemma_touching_sets,
    main_extract,
    theorem_combined,
)
from .graph_core import Graph, parse_graph
from .ramsey import ColoringTable, find_monochromatic
from .web_model import Web, find_web, plant_subdivision, validate_web

__version__ = "0.1.0"
