"""Marketing schedules for rebel consumers on social networks."""

from ._core import (
    ContractViolation,
    Graph,
    InstanceTooLarge,
    InvalidInput,
    IterationCapExceeded,
    algorithm4,
    algorithm5,
    algorithm5_bound,
    brute_force,
    exact_optimum,
    generate,
    independence_number,
    is_regret_proof,
    mis_to_rebel,
    schedule_n,
    schedule_y,
    simulate,
)

__all__ = [
    "ContractViolation",
    "Graph",
    "InstanceTooLarge",
    "InvalidInput",
    "IterationCapExceeded",
    "algorithm4",
    "algorithm5",
    "algorithm5_bound",
    "brute_force",
    "exact_optimum",
    "generate",
    "independence_number",
    "is_regret_proof",
    "mis_to_rebel",
    "schedule_n",
    "schedule_y",
    "simulate",
]
