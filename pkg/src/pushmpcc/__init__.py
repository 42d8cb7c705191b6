"""Planar-pushing trajectory optimization and MPC with complementarity constraints."""

__version__ = "0.1.0"

from .model import (
    ContactMode,
    ControlInput,
    FrictionConeEdges,
    ModeInfeasibleError,
    PusherSliderModel,
    SliderState,
    classify_mode,
    contact_jacobian,
    contact_point,
    dynamics,
    dynamics_jacobians,
    friction_cone_edges,
    limit_surface_matrix,
    rotation_matrix,
)
