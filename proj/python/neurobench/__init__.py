from ._core import (
    DomainError,
    IncomputableError,
    NeurobenchError,
    ParseError,
    Registry,
    UnknownNameError,
    ValidationError,
    cascade,
    default_data_dir,
    pareto_front,
)

__all__ = [
    "DomainError",
    "IncomputableError",
    "NeurobenchError",
    "ParseError",
    "Registry",
    "UnknownNameError",
    "ValidationError",
    "cascade",
    "default_data_dir",
    "pareto_front",
]
