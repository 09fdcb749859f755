"""Split matroids: certificate-based recognition, excluded minors S0-S4,
and exhaustive verification over small matroid catalogs."""

from .canonical import CanonicalForm, canonical_form, canonical_matroid, is_isomorphic
from .core import (
    Matroid,
    circuits,
    closure,
    components,
    contract,
    cyclic_flats,
    delete,
    direct_sum,
    dual,
    elements,
    is_connected,
    is_cyclic,
    is_uniform,
    mask_of,
    minor,
    proper_cyclic_flats,
    rank,
    restrict,
    uniform,
    validate,
)
from .enumeration import CatalogShard, catalog_shards, extend_by_one, ingest
from .minors import MinorWitness, apply_witness, has_minor, verify_excluded_minor
from .named import catalog
from .polytope import crosscheck_flacets, flat_face_dim, is_facet_flat, polytope_dim
from .split import Certificate, SplitReport, certificates, flacets, is_split, is_split_via_corollary
from .theorem import verify_theorem

__version__ = "0.1.0"
