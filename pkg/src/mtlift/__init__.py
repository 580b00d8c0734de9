"""Root-system model of Mumford-Tate data and their weak lifts."""
from .datum import (MTFactorDatum, SubtypeVerdict, classify_D, is_essentially_unliftable,
                    make_datum, normalize_hodge_nodes, validate)
from .isogeny import CoverDescriptor, centre, h_maximal_cover, rep_kernel
from .liftbuilder import (LiftDescriptor, abelianized_hodge, assemble, dkh_lift,
                          general_weak_lift, unliftable_lift)
from .rootsys import (QuasiCocharacter, RootDatum, fundamental_coweight, fundamental_weight,
                      irrep_weights, is_self_dual, pairing_values, simple_roots, weyl_orbit)
from .twoweight import (faithful_fundamental_requires_spin, spin_three_weight_obstruction,
                        two_weight_fundamentals)

__version__ = "0.1.0"

__all__ = [
    "CoverDescriptor", "LiftDescriptor", "MTFactorDatum", "QuasiCocharacter", "RootDatum",
    "SubtypeVerdict", "abelianized_hodge", "assemble", "centre", "classify_D", "dkh_lift",
    "faithful_fundamental_requires_spin", "fundamental_coweight", "fundamental_weight",
    "general_weak_lift", "h_maximal_cover", "irrep_weights", "is_essentially_unliftable",
    "is_self_dual", "make_datum", "normalize_hodge_nodes", "pairing_values", "rep_kernel",
    "simple_roots", "spin_three_weight_obstruction", "two_weight_fundamentals",
    "unliftable_lift", "validate", "weyl_orbit",
]
