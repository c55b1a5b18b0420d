"""Seven-valued rough-set classification over the Pawlak-Brouwer-Zadeh lattice."""

from .axioms import (
    AXIOMS,
    MUTATIONS,
    AxiomReport,
    LatticeOps,
    certified,
    check_all,
    check_axiom,
    mutated_ops,
    run_mutation,
    standard_ops,
)
from .logics import (
    LogicAssignment,
    LogicSpec,
    LogicValidation,
    ValueDef,
    belnap_from_arguments,
    builtin_logic,
    builtin_logics,
    evaluate_logic,
    validate_logic,
)
from .orthopair import (
    Orthopair,
    TermError,
    bottom,
    brouwer,
    eval_term,
    join,
    kleene,
    leq,
    meet,
    pawlak,
    top,
)
from .sevenvalued import (
    FORMULATIONS,
    SevenPartition,
    TruthValue,
    classify,
    downward_part,
    part,
    seven_partition,
    truth_leq,
    upward_part,
)
from .sweep import (
    all_knowledge_bases,
    all_orthopair_masks,
    all_orthopairs,
    default_universe,
    set_partitions,
)
from .universe import (
    KnowledgeBase,
    ObjectSet,
    Universe,
    UniverseMismatchError,
)

__all__ = [
    "AXIOMS",
    "MUTATIONS",
    "AxiomReport",
    "FORMULATIONS",
    "KnowledgeBase",
    "LatticeOps",
    "LogicAssignment",
    "LogicSpec",
    "LogicValidation",
    "ObjectSet",
    "Orthopair",
    "SevenPartition",
    "TermError",
    "TruthValue",
    "Universe",
    "UniverseMismatchError",
    "ValueDef",
    "all_knowledge_bases",
    "all_orthopair_masks",
    "all_orthopairs",
    "belnap_from_arguments",
    "bottom",
    "brouwer",
    "builtin_logic",
    "builtin_logics",
    "certified",
    "check_all",
    "check_axiom",
    "classify",
    "default_universe",
    "downward_part",
    "eval_term",
    "evaluate_logic",
    "join",
    "kleene",
    "leq",
    "meet",
    "mutated_ops",
    "part",
    "pawlak",
    "run_mutation",
    "set_partitions",
    "seven_partition",
    "standard_ops",
    "top",
    "truth_leq",
    "upward_part",
    "validate_logic",
]
