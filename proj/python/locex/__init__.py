"""Local community extraction via discrete Hopfield dynamics."""

from locex._core import (
    Graph,
    brute_force_best,
    eval_q,
    eval_w_rho,
    extract,
    gnm_random,
    planted_two_communities,
    ring_of_cliques,
)

__all__ = [
    "Graph",
    "brute_force_best",
    "eval_q",
    "eval_w_rho",
    "extract",
    "gnm_random",
    "planted_two_communities",
    "ring_of_cliques",
]
