"""chomplab: exact solver and rule-analysis toolkit for multiplayer Chomp.

Positions are weakly decreasing tuples of row lengths; rules are score
sequences normalized to permutations.  The solver computes exact position
ordinals by volume-layered backward induction; on top of it sit bounded
isomorphism checks, a rule census, executable property suites, a CLI, a
game runner and an HTTP service for the browser explorer.
"""

from .classify import (
    ClassReport,
    CombinedClassification,
    RuleClass,
    classify_rules,
    classify_up_to,
    enumerate_rules,
)
from .iso import (
    DEFAULT_BOUND,
    ExchangeReport,
    IsoVerdict,
    ReductionResult,
    SeparationSurvey,
    StandardnessReport,
    exchange_swap,
    is_standard,
    iso_check,
    max_ordinal_witness,
    reduce_rule,
    separation_survey,
    signature,
    thin_iso,
)
from .play import GameTranscript, MoveRecord, final_scores, play_session
from .positions import (
    EMPTY,
    Cell,
    Position,
    ShapeClass,
    ShapeTag,
    canonicalize,
    cell_for_move,
    cells,
    chomp_at,
    enumerate_positions,
    format_position,
    moves,
    parse_position,
    partitions_of,
    predecessors_within,
    shape_class,
    transpose,
    volume,
)
from .rules import (
    NormalizedRule,
    Rule,
    format_rule,
    line_ordinal,
    make_rule,
    normalize,
    parse_rule,
    standard_rule,
)
from .solver import (
    BudgetExceededError,
    OrdinalTable,
    SolutionChain,
    ordinal,
    ordinal_table,
    resolvent,
    reverse_solutions_within,
    solution_chain,
    solution_representative,
    solutions,
    table_from_json,
    table_to_csv,
    table_to_json,
    thin_ordinals,
)
from .verify import VerifyReport, verify_suite

__version__ = "0.1.0"
