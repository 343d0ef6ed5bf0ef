from agnostic_hexagon.fbst.surprise import *
from agnostic_hexagon.fbst.evalue import *
from agnostic_hexagon.fbst.gfbst import *
from agnostic_hexagon.fbst.hybrid import *

__all__ = [
    "SurpriseProfile",
    "surprise",
    "tangent_set",
    "tangent_set_star",
    "EValue",
    "ev",
    "ev_via_sup",
    "singleton_evalues",
    "GfbstConfig",
    "fbst",
    "gfbst",
    "gfbst_region",
    "FbstTest",
    "GfbstTest",
    "check_ev_prob_bridge",
    "HybridRecord",
    "hybrid_relations",
    "check_hybrid_hexagon",
    "SweepRow",
    "cutoff_sweep",
]
