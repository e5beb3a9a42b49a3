"""Exact computations with cohomogeneity one group diagrams in S^3 x S^3.

Group elements live over Q(sqrt 2), so every membership test, Weyl group
and Smith normal form is exact.  The main entry points:

>>> from cohomone import parse, validate, weyl_group, run_pipeline
>>> d = parse("K-=C(i,1,1)*H; K+=C(j,1,3)*H; H=gen{(i,i),(j,-j)}")
>>> weyl_group(d).type
'D6'
>>> run_pipeline(d).overall
'Survives'
"""

from .catalog import CatalogEntry, lookup
from .diagram import Diagram, IsotropySubgroup, ValidationReport, slope_diagram, validate
from .equivalence import canonical_form, equivalent
from .errors import CohomOneError
from .grammar import parse
from .groups import FiniteSubgroup, SlopeCircle, closure
from .hitchin import identify, konishi_slopes
from .obstruct import ObstructionReport, run_pipeline
from .qfield import FieldElem, GroupElement, Quaternion
from .scan import ScanReport, scan
from .topology import TopologyInvariants, family_invariants, invariants, smith_normal_form
from .verdict import Verdict
from .weyl import WeylResult, weyl_group

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry",
    "CohomOneError",
    "Diagram",
    "FieldElem",
    "FiniteSubgroup",
    "GroupElement",
    "IsotropySubgroup",
    "ObstructionReport",
    "Quaternion",
    "ScanReport",
    "SlopeCircle",
    "TopologyInvariants",
    "ValidationReport",
    "Verdict",
    "WeylResult",
    "canonical_form",
    "closure",
    "equivalent",
    "family_invariants",
    "identify",
    "invariants",
    "konishi_slopes",
    "lookup",
    "parse",
    "run_pipeline",
    "scan",
    "slope_diagram",
    "smith_normal_form",
    "validate",
    "weyl_group",
]
