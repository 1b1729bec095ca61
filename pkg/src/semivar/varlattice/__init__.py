"""Variety descriptors, their lattice operations and the verification reports."""
from .catalog import (
    THEOREM1_TEXT, commutative_nil, flat_nil_catalog, lemma_length_bases, prop2_basis, theorem1_system,
)
from .classify import S_SHAPES, Decomposition, WordClass, classify_word, matches_shapes, s_words, theorem1_recognize
from .descriptors import (
    SL, FlatNil, JoinOracle, SLJoin, TotalityError, Trivial, UndecidableDescriptor, fingerprint,
    holds_in, join, join_theory, meet, nil_join, theory_equal,
)
from .family import (
    ClosureError, FiniteFamily, boolean_lattice, cancellation_witnesses, chain, diamond,
    generated_sublattice, is_cancellable_in, is_distributive, is_modular_in, is_neutral_in,
    modular_violations, pentagon,
)
from .reports import (
    PreconditionError, Prop2Report, Theorem1Report, admissible_triples, prop2_family, prop2_variety,
    standard_family, variety_family, verify_prop2, verify_theorem1,
)
