"""Spectra of sums of Hermitian matrices via honeycombs.

Decides the spectral-sum relation by exact linear programming over the
honeycomb cone, counts tensor-product multiplicities as integral
honeycombs (with an independent tableaux oracle), generates Horn's
recursive inequality list, analyzes clockwise overlays, and validates
everything against random Hermitian matrices.
"""

from .counting import (count_integral_triple, decide_quantum,
                       enumerate_integral, lr_oracle, tensor_multiplicity)
from .diagram import (Diagram, diagram_boundary, diagram_from_json,
                      diagram_to_json, make_diagram, overlay, to_diagram)
from .errors import (DimensionMismatchError, HoneycombError,
                     InfeasibleProgramError, InfeasibleTripleError,
                     InvariantError, NonTransverseError, NotClockwiseError,
                     NotHermitianError, OutOfConeError, TooLargeError,
                     UnboundedDirectionError)
from .fibers import (FiberPolytope, NOT_SIMPLY_DEGENERATE, SaturationReport,
                     Spectrum, SuperharmonicWeights, check_saturation,
                     decide_sum, decide_triple, fiber_polytope, largest_lift,
                     spectrum, superharmonic_weights, underlying_graph)
from .graph import HoneycombGraph, build_graph
from .honeycomb import (BoundaryTriple, Honeycomb, boundary, breathe,
                        breathing_vector, edge_length, honeycomb_from_boundary,
                        honeycomb_from_potential, is_integral, max_breathing,
                        standard_potential, validate, vertex_position)
from .horn import (AdmissibleTriple, HornInequality, admissible_triples,
                   decide_by_horn, evaluate, horn_inequalities)
from .lp import (LinearProgram, LPResult, bounding_box, lexicographic_max,
                 make_lp, solve)
from .overlays import (ALL_A_CW, ALL_B_CW, MIXED, NON_TRANSVERSE,
                       BoundaryInequality, OverlayAnalysis, analyze_overlay,
                       facet_inequality, northwest_clockwise_pair,
                       one_honeycomb, shrink)
from .plane import (Direction, EdgeClass, PointB, Rat, constant_slot, point,
                    project_to_screen, rat, rat_str)
from .render import render_svg, svg_elements
from .spectral import (SampleReport, eigenvalues, fiber_volume,
                       matrix_with_spectrum, monte_carlo_check,
                       sample_sum_spectra)

__version__ = "0.1.0"
