"""nmfo: exact first-order model checking over Nilpotent Minimum and Goedel chains."""

from .chains import Chain, ChainElement, ChainError, MembershipError
from .formula import Formula, FormulaError, ParseError, parse, pretty, schema
from .models import FiniteModel, ModelError, eval_prop, evaluate, model_value
from .omega import EventualSeq, OmegaModel, Tail, Unsafe, eval_omega
from .transform import (ChainEmbedding, Rotation, check_embedding, cut_model,
                        embed_finite, positive_collapse, rotate, star)
from .decide import (Classification, PropResult, SearchResult, classify_chain,
                     prop_valid, search_countermodel)

__all__ = [
    "Chain", "ChainElement", "ChainError", "MembershipError",
    "Formula", "FormulaError", "ParseError", "parse", "pretty", "schema",
    "FiniteModel", "ModelError", "eval_prop", "evaluate", "model_value",
    "EventualSeq", "OmegaModel", "Tail", "Unsafe", "eval_omega",
    "ChainEmbedding", "Rotation", "check_embedding", "cut_model",
    "embed_finite", "positive_collapse", "rotate", "star",
    "Classification", "PropResult", "SearchResult", "classify_chain",
    "prop_valid", "search_countermodel",
]
