"""Partition-ideal calculus for K-invariant polynomial ideals on r x s matrices."""
from .partitions import Partition, hat, join, leq, step_form, from_step_form, truncate
from .ideals import IdealSupport, contains_partition, ideal_sum, intersect, localize, maximal_fibre, minimal_full_set
from .determinantal import in_support, minimal_generators, order_on_stratum, step1_generators
from .poly import MatrixPolynomial, TriplePars, conical_poly, fischer_inner, minor_poly, vanishing_order
from .kernels import cconst, k_s_expansion, pochhammer

__version__ = "0.1.0"
