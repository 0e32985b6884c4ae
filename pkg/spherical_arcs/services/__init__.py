"""Spherical Arcs - Services Package"""
from spherical_arcs.services.arc_core import Arc, Weight, InadmissibleArcError, MalformedArcError
from spherical_arcs.services.configurations import ConfigurationService, Diagram, DiagramError, CrossingError
from spherical_arcs.services.ptolemy_closure import ClosureService, PreconditionError
from spherical_arcs.services.mutation import MutationService, MutationError
from spherical_arcs.services.approximation import ApproximationService
