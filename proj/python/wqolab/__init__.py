"""Well-quasi-order laboratory: embeddings, ordinals and bounded searches."""

from ._wqolab import (
    BudgetExceeded,
    DomainError,
    ParseError,
    SearchExhausted,
    eval_exp,
    exp_to_ordinal,
    from_tuple,
    fundamental_seq,
    leq_k,
    natural_sum,
    ord_cmp,
    ord_normalize,
    run_cli,
    seq_embed,
    slow_growing,
    swo_search,
    to_tuple,
    tree_embeds,
    w_search,
    weight,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "ParseError",
    "SearchExhausted",
    "eval_exp",
    "exp_to_ordinal",
    "from_tuple",
    "fundamental_seq",
    "leq_k",
    "natural_sum",
    "ord_cmp",
    "ord_normalize",
    "run_cli",
    "seq_embed",
    "slow_growing",
    "swo_search",
    "to_tuple",
    "tree_embeds",
    "w_search",
    "weight",
]
