from ._version import __version__, __version_info__

version = __version__

from . import pipeline

from .utilities import (Logger, Budget, CoxautError, ProblemParseError, ShapeMismatch, GradingError,
                        NonEffectiveGrading, NonPointedGrading, NotHomogeneous, BlockDimMismatch,
                        NonPointedMonoid, BudgetExceeded, EmptyChamber)
from .abelian import AbelianGroup, GroupElement, GroupHom, FiniteGroup
from .cones import RationalCone
from .polyring import CoefficientField, GradedPolyRing, Ideal, HomogeneousComponent
from .groebner import GroebnerBasis, MonomialOrder, groebner
from .autgraded import MatrixGroupDescription, Coset, RepBasis, QuotientRep, ComponentCount
from .mds import CoxInput, AFace, HopfAlgebraPresentation, VeronesePresentation, AutHatX, AutXResult
from .configuration import ProblemFile, ConfigField, read_yaml
from .results import ResultDocument
