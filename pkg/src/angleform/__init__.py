"""Planar angle-rigidity analysis and angle-constrained formation
simulation.

Submodules
----------
geometry     planar rotation/reflection/projection operators
graph        graphs, incidence operators, Laman constructions
rigidity     rigidity functions, matrices, and verdicts
index_sets   angle index set constructors
formation    formation cost, control laws, gradient-flow simulation
cli          scenario files and the command-line interface
"""

__version__ = "0.1.0"

from . import formation, geometry, graph, index_sets, rigidity
from ._kernels import backend_name
from .errors import (
    AngleformError,
    BlowUp,
    CoincidentPoints,
    DegenerateAllCoincident,
    InvalidStep,
    NoManeuverTarget,
    NonPositiveSeries,
    NonUnitVector,
    NotAnEdge,
    NotAnEquilibrium,
    NotInfinitesimallyAngleRigid,
    ParseError,
    ValidationError,
    VertexOutOfRange,
)
from .formation import (
    FormationSpec,
    IntegratorConfig,
    Maneuver,
    PerturbationSpec,
    SimulationResult,
    simulate,
)
from .graph import Graph, LamanConstruction, LeaderPair
from .rigidity import AngleIndexSet, Configuration, RigidityReport
