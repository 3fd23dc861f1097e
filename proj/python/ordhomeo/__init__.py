"""Ordinals below epsilon_0 and piecewise homeomorphisms of countable ordinals."""

from ._ordhomeo import (
    ContractError,
    DomainError,
    Error,
    Ordinal,
    ParseError,
    PreconditionError,
    PwHomeo,
    ResourceError,
    ValidationError,
    common_fixed_points,
    dense_approx,
    extend_to_permutation,
    find_fixed_point_above,
    fixed_points,
    in_baire_T,
    baire_density_witness,
    invariant_point,
    invariant_prefix,
    make_transitive,
    roelcke_decompose,
    run_cli,
    satisfiable,
    sup_image,
    swap_points,
)

__all__ = [name for name in dir() if not name.startswith("_")]
