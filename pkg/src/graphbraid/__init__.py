"""Configuration complexes of graphs and decompositions of their braid groups.

The package builds the discrete n-particle complex of a finite graph,
identifies and cuts along its hyperplanes, and reads off structural facts
about the braid group: graph-of-groups decompositions, free-product
splittings, presentations, and exact integral homology.
"""

from .complexes import (
    CubeComplex,
    build_uc,
    closed_complement_components,
    complement_isomorphism,
    components,
    component_subcomplex,
    cut_along,
    euler_characteristic,
)
from .decomposition import (
    Decomposition,
    GroupDescriptor,
    decompose,
    direct_product,
    find_free_splitting,
    free,
    free_abelian,
    free_product,
    free_product_criterion_1,
    free_product_criterion_2,
    fundamental_group,
    is_trivial,
    modified_radial_rank,
    normalize,
    predicted_link_counts,
    radial_rank,
    render_group,
    resolve_braid_descriptor,
    resolve_by_decomposition,
    trivial_group,
    verify_link_counts,
)
from .graphs import (
    FiniteGraph,
    InternalCheckError,
    check_subdivision,
    classify,
    canonical_form,
    graph_to_json,
    is_isomorphic,
    parse_graph,
    sufficient_subdivision,
    triviality_criterion,
    z2_witness,
)
from .homology import betti_numbers, homology, smith_normal_form
from .hyperplanes import (
    Hyperplane,
    check_special,
    count_capped_partitions,
    expected_hyperplane_count,
    hyperplanes,
    hyperplanes_by_propagation,
)
from .presentation import (
    Presentation,
    abelianization,
    pi1_presentation,
    presentation_to_text,
    tietze_simplify,
)

__version__ = "0.1.0"

__all__ = [
    "CubeComplex",
    "Decomposition",
    "FiniteGraph",
    "GroupDescriptor",
    "Hyperplane",
    "InternalCheckError",
    "Presentation",
    "abelianization",
    "betti_numbers",
    "build_uc",
    "canonical_form",
    "check_special",
    "check_subdivision",
    "classify",
    "closed_complement_components",
    "complement_isomorphism",
    "component_subcomplex",
    "components",
    "count_capped_partitions",
    "cut_along",
    "decompose",
    "direct_product",
    "euler_characteristic",
    "expected_hyperplane_count",
    "find_free_splitting",
    "free",
    "free_abelian",
    "free_product",
    "free_product_criterion_1",
    "free_product_criterion_2",
    "fundamental_group",
    "graph_to_json",
    "homology",
    "hyperplanes",
    "hyperplanes_by_propagation",
    "is_trivial",
    "is_isomorphic",
    "modified_radial_rank",
    "normalize",
    "parse_graph",
    "pi1_presentation",
    "predicted_link_counts",
    "presentation_to_text",
    "radial_rank",
    "render_group",
    "resolve_braid_descriptor",
    "resolve_by_decomposition",
    "smith_normal_form",
    "sufficient_subdivision",
    "tietze_simplify",
    "trivial_group",
    "verify_link_counts",
    "triviality_criterion",
    "z2_witness",
]
