"""Exact quasihomogeneous normal form machinery for A_k slow-fast systems.

Thin wrapper over the compiled _core module. The extension returns JSON
strings (rationals as "p/q" strings, exponent vectors as plain lists); this
layer just decodes them into dicts/lists.
"""

import json as _json

from . import _core

__all__ = [
    "version",
    "weights",
    "poly_basis",
    "vf_basis",
    "good_basis",
    "operator_matrix",
    "verify_kernel_trivial",
    "verify_decomposition",
    "structured_kernel_proof",
    "random_good_system",
    "normalize",
    "selftest",
]

__version__ = _core.version()


def version():
    return _core.version()


def weights(k):
    """Quasihomogeneous weights (r_1, ..., r_{k-1}, r_z, r_eps)."""
    return list(_core.weights(k))


def poly_basis(k, degree):
    return _json.loads(_core.poly_basis_json(k, degree))


def vf_basis(k, degree):
    return _json.loads(_core.vf_basis_json(k, degree))


def good_basis(k, degree):
    return _json.loads(_core.good_basis_json(k, degree))


def operator_matrix(k, op, degree):
    """Matrix of d (degree = domain gamma), dstar or box (degree = beta)."""
    return _json.loads(_core.operator_json(k, op, degree))


def verify_kernel_trivial(k, beta_min, beta_max):
    return _json.loads(_core.verify_kernel_trivial_json(k, beta_min, beta_max))


def verify_decomposition(k, gamma):
    return _json.loads(_core.verify_decomposition_json(k, gamma))


def structured_kernel_proof(k, beta):
    return _json.loads(_core.structured_kernel_proof_json(k, beta))


def random_good_system(k, max_degree, seed):
    """F plus a seeded random good perturbation, as a system dict."""
    return _json.loads(_core.random_good_system_json(k, max_degree, seed))


def normalize(system, order):
    """Normalize a system dict ({"k": ..., "components": [...]}) to the
    given quasidegree; returns generators, resonant parts and the conjugacy
    certificate."""
    return _json.loads(_core.normalize_json(_json.dumps(system), order))


def selftest(max_k=4, max_degree=10, seed=0):
    return _json.loads(_core.selftest_json(max_k, max_degree, seed))
