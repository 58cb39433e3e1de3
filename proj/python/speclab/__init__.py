"""Boundary-condition analysis for LTL goal specifications.

Thin Python layer over the C++ core: parsing, satisfiability with lasso
witnesses, prefix model counting, the three BC checks, witness/contrasty
filtering (PPFc), and the joint identification framework (JFc).
"""

import os

from ._speclab import (  # noqa: F401
    BudgetExceededError,
    DomUnsatError,
    Formula,
    NamedFormula,
    ParseError,
    Spec,
    SpecError,
    VocabularyTooLargeError,
    are_contrastive,
    avoid_pattern,
    check_bc,
    count_prefixes,
    evaluate,
    generality_filter,
    genetic_search,
    implies,
    is_more_general,
    is_sat,
    is_witness,
    jfc,
    likelihood,
    load_spec,
    nnf,
    parse,
    pattern_search,
    ppfc,
    render,
    termination_condition,
)

__all__ = [name for name in dir() if not name.startswith("_")]


def corpus_dir() -> str:
    """Directory holding the bundled benchmark specs.

    Honors SPECLAB_CORPUS_DIR; falls back to the corpus shipped inside the
    package.
    """
    env = os.environ.get("SPECLAB_CORPUS_DIR")
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "corpus")


def corpus_spec(name: str) -> str:
    """Path of a bundled spec file, e.g. corpus_spec('minepump')."""
    return os.path.join(corpus_dir(), name + ".spec")
