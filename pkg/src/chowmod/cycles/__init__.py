"""Modulus pairs, cycles given by points and parametrized curves, and operations on them."""
from .curves import ParamCurve
from .modulus import NAIVE, STAR, ContainedInBoundary, ModulusCertificate, check_faces, check_modulus, meets_support
from .operations import (
    Cylinder,
    WConditionViolated,
    boundary,
    generic_translation_H,
    homotopy_chain_tilde,
    phi_shift,
    powered_translation,
    moebius_rotation,
    translation_bound,
    verify_phi_homotopy,
    witt_action,
)
from .pairs import A1, P1, Component, ModulusPair
from .points import ClosedPoint, FaceContainment, NotRepresentable, PointCycle, canonical_point

__all__ = [
    "ParamCurve",
    "NAIVE",
    "STAR",
    "ContainedInBoundary",
    "ModulusCertificate",
    "check_faces",
    "check_modulus",
    "meets_support",
    "Cylinder",
    "WConditionViolated",
    "boundary",
    "generic_translation_H",
    "homotopy_chain_tilde",
    "phi_shift",
    "powered_translation",
    "moebius_rotation",
    "translation_bound",
    "verify_phi_homotopy",
    "witt_action",
    "A1",
    "P1",
    "Component",
    "ModulusPair",
    "ClosedPoint",
    "FaceContainment",
    "NotRepresentable",
    "PointCycle",
    "canonical_point",
]
