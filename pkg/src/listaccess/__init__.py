"""Self-organizing list accessing: MTF, lookahead IMTF, datasets and experiments."""
from .algorithms import (
    AlgorithmId,
    InstanceTooLarge,
    gain,
    lookahead_hit,
    run,
    run_bruteforce_oracle,
    run_imtf,
    run_mtf,
    run_static,
)
from .core import (
    CostModel,
    CostReport,
    ListConfiguration,
    PositionOutOfRange,
    RequestSequence,
    SymbolNotInList,
    access_cost,
    find_position,
    move_to_front,
    paid_exchange,
)
from .datagen import EmptySequence, GenSpec, build_list, gen_sequence, locality_stats

__version__ = "0.1.0"
