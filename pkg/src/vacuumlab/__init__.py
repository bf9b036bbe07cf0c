"""Numerical laboratory for a vacuum mass-spring lattice and its wave phenomenology."""

from . import complex_space, double_slit, lattice, lorentz, wavepacket
from .complex_space import ComplexScalarField, InternalComplexPoint, Rectangle, RotationAngles
from .double_slit import ModeExpansion, SlitScenario
from .errors import (ConfigurationError, DomainError, MeasurementError, SingularityError,
                     VacuumLabError)
from .lattice import LatticeConfig, LatticeState, WaveTrainSpec
from .lorentz import Boost, FourVector
from .wavepacket import (DispersionRelation, MomentumWaveFunction, PositionWaveFunction,
                         SpectralWavePacket)

__version__ = "0.1.0"

__all__ = [
    "Boost", "ComplexScalarField", "ConfigurationError", "DispersionRelation", "DomainError",
    "FourVector", "InternalComplexPoint", "LatticeConfig", "LatticeState", "MeasurementError",
    "ModeExpansion", "MomentumWaveFunction", "PositionWaveFunction", "Rectangle", "RotationAngles",
    "SingularityError", "SlitScenario", "SpectralWavePacket", "VacuumLabError", "WaveTrainSpec",
    "complex_space", "double_slit", "lattice", "lorentz", "wavepacket",
]
