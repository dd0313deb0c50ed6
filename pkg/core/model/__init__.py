"""Combinatorial cube-complex model of graph configuration spaces."""

from .cells import (
    CombConfig,
    Cube,
    Location,
    Move,
    MoveKind,
    at_vertex,
    face,
    on_edge,
    resolve,
    validate_config,
    validate_cube,
)
from .chains import Chain, boundary, cube_boundary, project_config, project_cycle, star_cycle
from .complex import CubeComplex, build_model, components, dimension_bound

__all__ = [
    'CombConfig', 'Cube', 'Location', 'Move', 'MoveKind',
    'at_vertex', 'face', 'on_edge', 'resolve', 'validate_config', 'validate_cube',
    'Chain', 'boundary', 'cube_boundary', 'project_config', 'project_cycle', 'star_cycle',
    'CubeComplex', 'build_model', 'components', 'dimension_bound',
]
