"""Exact Kirillov-Reshetikhin (q,t)-character engine for type A.

Thin wrapper over the C++ extension; structured results cross the boundary
as canonical JSON.
"""

import json
from typing import Any, Dict, Optional

from . import _krqt

__all__ = [
    "character",
    "twisted_product",
    "epsilon",
    "epsilon_series",
    "t_commutation_exponent",
    "cluster_spectral",
    "verify_compat",
    "verify_tsystem",
    "verify_mutation",
    "counterexample",
    "sigma_partition",
    "a1_tables",
]


def character(rank: int, i: int, k: int, j: int) -> Dict[str, Any]:
    """The (q,t)-character of W_{k,j}^{(i)} as a dict of canonical terms."""
    return json.loads(_krqt.char_json(rank, i, k, j))


def twisted_product(rank, i1, k1, j1, i2, k2, j2, mode: str = "star_gamma") -> Dict[str, Any]:
    return json.loads(_krqt.twisted_product_json(rank, i1, k1, j1, i2, k2, j2, mode))


def epsilon(rank: int, i1: int, k1: int, i2: int, k2: int) -> int:
    """epsilon of two fundamental-cluster dominant monomials."""
    return _krqt.epsilon(rank, i1, k1, i2, k2)


def epsilon_series(rank: int, i1: int, k1: int, i2: int, k2: int) -> int:
    return _krqt.epsilon_series(rank, i1, k1, i2, k2)


def t_commutation_exponent(rank, i1, k1, j1, i2, k2, j2) -> Optional[int]:
    return _krqt.t_commutation_exponent(rank, i1, k1, j1, i2, k2, j2)


def cluster_spectral(i: int, k: int) -> int:
    return _krqt.cluster_spectral(i, k)


def verify_compat(rank: int, kmax: int) -> Dict[str, Any]:
    return json.loads(_krqt.verify_compat(rank, kmax))


def verify_tsystem(rank: int, i: int, k: int, j: int) -> Dict[str, Any]:
    return json.loads(_krqt.verify_tsystem(rank, i, k, j))


def verify_mutation(rank: int, i: int, k: int, j: int) -> Dict[str, Any]:
    return json.loads(_krqt.verify_mutation(rank, i, k, j))


def counterexample() -> Dict[str, Any]:
    return json.loads(_krqt.counterexample())


def sigma_partition(rank, i1, k1, j1, i2, k2, j2) -> Dict[str, Any]:
    return json.loads(_krqt.sigma_partition(rank, i1, k1, j1, i2, k2, j2))


def a1_tables(n: int) -> Dict[str, Any]:
    return json.loads(_krqt.a1_tables(n))
