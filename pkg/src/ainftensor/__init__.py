"""Exact tensor products of A-infinity categories.

The library builds the product of two A-infinity categories by
homotopy transfer through the tensor of their word categories, extends
pairs of functors to the products, and verifies every claimed identity
with exact arithmetic over Q or a prime field.
"""

from .rings import Rationals, PrimeField, ring_from_name
from .elements import Bm
from .category import DgCat, AinfCat, composable_chains
from .defects import relation_defect, functor_defect
from .functor import Functor, identity_functor, compose_functors, pushforward
from .prenat import Prenat, m1, m2, unit_prenat
from .barcobar import UnCat, alpha_functor, xi_functor
from .dgtensor import DgTensorCat
from .transfer import hpt_transfer, dc_extend_inverse, build_tensor
from .homotopy import solve_homotopy, homotopy_defect
from .functors_tensor import (un_of_functor, dg_tensor_functors,
                              tensor_functors_quoted, tensor_functors,
                              swap_functor, associator_functor,
                              unit_strand_functor, strand_prenat,
                              build_stupidone_witness,
                              build_stupidonzio_witness)

__all__ = [
    "Rationals", "PrimeField", "ring_from_name", "Bm",
    "DgCat", "AinfCat", "composable_chains",
    "relation_defect", "functor_defect",
    "Functor", "identity_functor", "compose_functors", "pushforward",
    "Prenat", "m1", "m2", "unit_prenat",
    "UnCat", "alpha_functor", "xi_functor", "DgTensorCat",
    "hpt_transfer", "dc_extend_inverse", "build_tensor",
    "solve_homotopy", "homotopy_defect",
    "un_of_functor", "dg_tensor_functors", "tensor_functors_quoted",
    "tensor_functors", "swap_functor", "associator_functor",
    "unit_strand_functor", "strand_prenat",
    "build_stupidone_witness", "build_stupidonzio_witness",
]

__version__ = "0.1.0"
