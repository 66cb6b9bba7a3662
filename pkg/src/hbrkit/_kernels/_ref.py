"""Pure-numpy reference implementation of the likelihood kernels.

Used when the compiled extension is unavailable (or explicitly selected for
benchmarking). Must stay numerically equivalent to ``_core``.
"""

import numpy as np

_LOG_2PI = float(np.log(2.0 * np.pi))


def _softplus(t):
    return np.logaddexp(0.0, t)


def _sigmoid(t):
    out = np.empty_like(t)
    pos = t >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-t[pos]))
    e = np.exp(t[~pos])
    out[~pos] = e / (1.0 + e)
    return out


def gauss_homo_loglik_grad(D, y, batch, theta_mu, sd):
    """Gaussian log-likelihood with per-batch linear mean and per-batch noise sd.

    Parameters
    ----------
    D : (n, q) design matrix (covariate columns + intercept column).
    y : (n,) responses.
    batch : (n,) int64 dense batch index in [0, m).
    theta_mu : (m, q) per-batch mean coefficients.
    sd : (m,) per-batch noise standard deviation, > 0.

    Returns
    -------
    (loglik, grad_theta_mu (m, q), grad_sd (m,))
    """
    n, q = D.shape
    m = theta_mu.shape[0]
    if np.any(sd <= 0.0):
        return -np.inf, np.zeros((m, q)), np.zeros(m)
    r = y - np.einsum("nq,nq->n", D, theta_mu[batch])
    s = sd[batch]
    ll = -0.5 * n * _LOG_2PI - np.sum(np.log(sd) * np.bincount(batch, minlength=m)) \
        - 0.5 * np.sum((r / s) ** 2)
    w = r / (s * s)
    grad_theta = np.empty((m, q))
    for c in range(q):
        grad_theta[:, c] = np.bincount(batch, weights=w * D[:, c], minlength=m)
    r2_sum = np.bincount(batch, weights=r * r, minlength=m)
    counts = np.bincount(batch, minlength=m)
    grad_sd = r2_sum / sd**3 - counts / sd
    return float(ll), grad_theta, grad_sd


def gauss_hetero_loglik_grad(D, y, batch, V, theta_mu, theta_sigma):
    """Gaussian log-likelihood with per-batch linear mean and softplus noise.

    Row j noise sd is ``softplus(V[j] @ theta_sigma[batch[j]])``.

    Parameters
    ----------
    D : (n, q) mean design matrix.
    y : (n,) responses.
    batch : (n,) int64 dense batch index.
    V : (n, k) noise design matrix.
    theta_mu : (m, q) per-batch mean coefficients.
    theta_sigma : (m, k) per-batch noise coefficients.

    Returns
    -------
    (loglik, grad_theta_mu (m, q), grad_theta_sigma (m, k))
    """
    n, q = D.shape
    m, k = theta_sigma.shape
    r = y - np.einsum("nq,nq->n", D, theta_mu[batch])
    t = np.einsum("nk,nk->n", V, theta_sigma[batch])
    s = _softplus(t)
    if np.any(s <= 0.0):
        return -np.inf, np.zeros((m, q)), np.zeros((m, k))
    ll = -0.5 * n * _LOG_2PI - np.sum(np.log(s)) - 0.5 * np.sum((r / s) ** 2)
    w = r / (s * s)
    grad_theta = np.empty((m, q))
    for c in range(q):
        grad_theta[:, c] = np.bincount(batch, weights=w * D[:, c], minlength=m)
    u = (r * r / s**3 - 1.0 / s) * _sigmoid(t)
    grad_sigma = np.empty((m, k))
    for c in range(k):
        grad_sigma[:, c] = np.bincount(batch, weights=u * V[:, c], minlength=m)
    return float(ll), grad_theta, grad_sigma
