"""Exact enumeration and verification toolkit for matroids on small
ground sets."""

from .bigcomb import (BigCount, bell, binomial, factorial, partition_count,
                      partition_prefix_sum, stirling2)
from .core import (FlatLattice, Matroid, MatroidClass, MatroidError,
                   MatroidFormatError, classify, closure, dual, flats,
                   flats_of_rank, from_bases, from_flats, from_text,
                   independent, restriction, subset_rank, to_text, truncate,
                   uniform_matroid, validate_bases, whitney)
from .enumerate import (CanonicalForm, CountTable, build_tables,
                        canonical_form, count_labeled, count_nonisomorphic,
                        cross_validate, enumerate_matroids, sample_matroids)
from .erection import (RandomPolicy, SetFamily, TRIVIAL, erections, expand,
                       free_erection, is_erection, random_matroid, refine)
from .errors import BudgetExceededError
from .paving import (DPartition, XorFamily, complete_to_paving,
                     is_d_partition, paving_count_lower_bound,
                     xor_family_size, xor_zero_family)

__version__ = "0.1.0"
