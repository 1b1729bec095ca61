"""Semigroup identities, bounded decision procedures and variety-lattice checks."""
from .identities import (
    Identity, IdentitySystem, IdsSyntaxError, Plain, Zero, expand_zero, holds_in_SL,
    make_permutational, parse_identity, parse_system,
)
from .words import Word, canonical_form, content, is_linear, similar

__version__ = "0.1.0"
