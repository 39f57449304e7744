"""Sortable elements of Coxeter groups and their Cambrian fans."""
from .cartan import (CartanError, CoxeterMatrix, DeltaConflict, NotCartan, NotSymmetrizable,
                     UnsupportedLabel, standard_crystallographic_cartan, validate_cartan)
from .coxeter import CoxeterGroup, Element
from .fan import cone_of, face_descriptor, fan_check_in_tits, star_of_face, tits_membership, verify_star
from .forms import compatible_reflection_sequence, euler_form, omega, zeta
from .groups import CATALOG, load_group
from .render import RenderSpec, render_svg
from .sortable import (cc_data, enumerate_sortables, is_sortable, nc, pidown, reflection_functor,
                       sorting_word)

__all__ = [
    "CartanError", "CoxeterMatrix", "DeltaConflict", "NotCartan", "NotSymmetrizable",
    "UnsupportedLabel", "standard_crystallographic_cartan", "validate_cartan",
    "CoxeterGroup", "Element",
    "cone_of", "face_descriptor", "fan_check_in_tits", "star_of_face", "tits_membership", "verify_star",
    "compatible_reflection_sequence", "euler_form", "omega", "zeta",
    "CATALOG", "load_group", "RenderSpec", "render_svg",
    "cc_data", "enumerate_sortables", "is_sortable", "nc", "pidown", "reflection_functor", "sorting_word",
]
