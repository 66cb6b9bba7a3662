"""Likelihood kernels with a compiled core and a pure-numpy fallback.

The compiled extension is preferred when importable; set the environment
variable ``HBRKIT_PURE_PYTHON=1`` (or call :func:`use`) to force the numpy
implementation, e.g. for benchmarking the two against each other.
"""

import os

from . import _ref

_core = None
if os.environ.get("HBRKIT_PURE_PYTHON", "0") not in ("1", "true", "yes"):
    try:
        from . import _core  # type: ignore[no-redef]
    except ImportError:
        _core = None

_active = _core if _core is not None else _ref


def available_backends():
    backends = ["python"]
    if _core is not None:
        backends.append("compiled")
    return backends


def active_backend():
    return "compiled" if _active is _core else "python"


def use(name):
    """Select the kernel backend ("compiled" or "python")."""
    global _active
    if name == "compiled":
        if _core is None:
            raise RuntimeError("compiled kernels are not available")
        _active = _core
    elif name == "python":
        _active = _ref
    else:
        raise ValueError(f"unknown backend {name!r}")


def gauss_homo_loglik_grad(D, y, batch, theta_mu, sd):
    return _active.gauss_homo_loglik_grad(D, y, batch, theta_mu, sd)


def gauss_hetero_loglik_grad(D, y, batch, V, theta_mu, theta_sigma):
    return _active.gauss_hetero_loglik_grad(D, y, batch, V, theta_mu, theta_sigma)
