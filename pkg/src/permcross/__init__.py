"""permcross: exact crossing statistics on pattern-avoiding permutations.

A small library plus CLI that implements the crossing/nesting statistics,
dihedral symmetries, insertion operators, restricted-class enumeration, exact
polynomial arithmetic, and a registry of brute-force verification checks for
the distribution identities tying them together.
"""

from .bijections import (
    Cor43Report,
    InsertionSets,
    ResidualReport,
    adjudicate_cor43,
    check_lemma,
    check_lemma42,
    insertion_sets,
    phi,
    psi,
)
from .checks import CheckResult, available_checks, run_check, run_checks, suite_passed
from .distributions import (
    DistributionReport,
    QTableau,
    closed_form,
    dist,
    joint_dist,
    qtableau_build,
    tableau_value,
    tableau_vs_class,
)
from .patterns import (
    BoundExceededError,
    ClassSpec,
    avoids,
    class_size,
    class_spec,
    class_words,
    enumerate_class,
    occurrence_positions,
    occurrences,
    pattern_of,
)
from .perm import (
    INVOLUTIONS,
    STAT_NAMES,
    STATISTICS,
    SYMMETRIES,
    Permutation,
    StatBundle,
    apply_symmetry,
    compose_symmetries,
    crossing_count,
    crossings,
    direct_sum,
    insert,
    insert_of_inverse,
    make_permutation,
    nestings,
    parse_word,
    remove_value,
    skew_sum,
    stat_bundle,
    transients,
)
from .polynomials import QPoly, YQPoly, ZSeries, cfrac_expand, rational_expand

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "CheckResult",
    "ClassSpec",
    "Cor43Report",
    "DistributionReport",
    "InsertionSets",
    "INVOLUTIONS",
    "Permutation",
    "QPoly",
    "QTableau",
    "ResidualReport",
    "STATISTICS",
    "STAT_NAMES",
    "SYMMETRIES",
    "StatBundle",
    "YQPoly",
    "ZSeries",
    "adjudicate_cor43",
    "apply_symmetry",
    "available_checks",
    "avoids",
    "cfrac_expand",
    "check_lemma",
    "check_lemma42",
    "class_size",
    "class_spec",
    "class_words",
    "closed_form",
    "compose_symmetries",
    "crossing_count",
    "crossings",
    "direct_sum",
    "dist",
    "enumerate_class",
    "insert",
    "insert_of_inverse",
    "insertion_sets",
    "joint_dist",
    "make_permutation",
    "nestings",
    "occurrence_positions",
    "occurrences",
    "parse_word",
    "pattern_of",
    "phi",
    "psi",
    "qtableau_build",
    "rational_expand",
    "remove_value",
    "run_check",
    "run_checks",
    "skew_sum",
    "stat_bundle",
    "suite_passed",
    "tableau_value",
    "tableau_vs_class",
    "transients",
]
