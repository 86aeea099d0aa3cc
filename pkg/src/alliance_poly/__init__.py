"""Alliance polynomials of finite simple graphs."""

from .closed_forms import (a_coeff, b_coeff, case_counts, complete_polynomial,
                           cycle_polynomial, cyclic_string_oracle, e1_polynomial,
                           wheel_polynomial, wheel_table)
from .engine import (CapExceeded, alliance_polynomial, count_connected_subsets,
                     exact_alliance_index, is_connected_subset)
from .graph import (Family, Graph, GraphFormatError, disjoint_union, encode_graph6,
                    generate, join, parse_edge_list, parse_graph6)
from .poly import (AlliancePolynomial, UnimodalityVerdict, coefficient_at_index, degrees,
                   eval_at_one, is_unimodal, poly_add, poly_sub, to_text)

__version__ = "0.1.0"
