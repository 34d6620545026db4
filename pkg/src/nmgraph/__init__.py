"""Exact computation toolkit for (n,m)-colored mixed graphs."""

from .core import (GraphInputError, NMGraph, NMParams, ParseError, label_of,
                   neighbors_with_label, parse, relabel, serialize)
from .seeing import SeeWitness, SeeingGraph, agree, is_special_2path, sees, \
    seeing_graph
from .cliques import (CliqueCertificate, absolute_clique_number,
                      relative_clique_number, verify_absolute_clique,
                      verify_relative_clique)
from .homomorphism import (ChromaticResult, HomomorphismWitness,
                           chromatic_number, homomorphism_exists)
from .structure import (girth, is_planar, is_triangle_free,
                        validate_embedding, find_Fk,
                        find_exceptional_configuration)
from .constructions import generate_Fk, generate_exceptional, generate_tight

__all__ = [
    "GraphInputError", "NMGraph", "NMParams", "ParseError",
    "label_of", "neighbors_with_label", "parse", "relabel", "serialize",
    "SeeWitness", "SeeingGraph", "agree", "is_special_2path", "sees",
    "seeing_graph",
    "CliqueCertificate", "absolute_clique_number", "relative_clique_number",
    "verify_absolute_clique", "verify_relative_clique",
    "ChromaticResult", "HomomorphismWitness", "chromatic_number",
    "homomorphism_exists",
    "girth", "is_planar", "is_triangle_free", "validate_embedding",
    "find_Fk", "find_exceptional_configuration",
    "generate_Fk", "generate_exceptional", "generate_tight",
]
