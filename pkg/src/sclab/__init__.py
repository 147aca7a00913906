"""State complexity of operations on regular languages over different alphabets."""
from .automata import (
    Alphabet,
    Dfa,
    Letter,
    Nfa,
    PartialDfa,
    accepts,
    canonical,
    complete,
    determinize,
    effective_alphabet,
    equivalent,
    minimize,
    quotient_complexity,
    restrict,
)
from .errors import AlphabetError, BudgetExceeded, FormatError, PreconditionError
from .ops import BoolOp, boolean_op, concat, direct_product, product_subset_census, reverse, star
from .witnesses import PartialPermutation, dialect, universal_witness, witness, witness_pair

__version__ = "0.1.0"
