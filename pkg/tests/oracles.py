"""Independent reference computations used only by the tests."""

import itertools

import numpy as np


def jacobi_svd(A, sweeps=60, tol=1e-15):
    """One-sided (Hestenes) Jacobi SVD of a complex matrix.

    Returns singular values in decreasing order and the matching right
    singular vectors as columns.
    """
    U = np.array(A, dtype=complex, copy=True)
    m = U.shape[1]
    V = np.eye(m, dtype=complex)
    for _ in range(sweeps):
        off = 0.0
        for p, q in itertools.combinations(range(m), 2):
            alpha = np.vdot(U[:, p], U[:, p]).real
            beta = np.vdot(U[:, q], U[:, q]).real
            gamma = np.vdot(U[:, p], U[:, q])
            g = abs(gamma)
            if g <= tol * np.sqrt(alpha * beta) or g == 0:
                continue
            off = max(off, g / np.sqrt(alpha * beta))
            rot = np.conj(gamma) / g
            # Make the pair's inner product real, then apply a real rotation.
            U[:, q] *= rot
            V[:, q] *= rot
            zeta = (beta - alpha) / (2 * g)
            t = np.sign(zeta) / (abs(zeta) + np.sqrt(1 + zeta * zeta)) if zeta != 0 else 1.0
            c = 1 / np.sqrt(1 + t * t)
            s = c * t
            up, uq = U[:, p].copy(), U[:, q].copy()
            U[:, p], U[:, q] = c * up - s * uq, s * up + c * uq
            vp, vq = V[:, p].copy(), V[:, q].copy()
            V[:, p], V[:, q] = c * vp - s * vq, s * vp + c * vq
        if off < tol:
            break
    sigma = np.linalg.norm(U, axis=0)
    order = np.argsort(-sigma)
    return sigma[order], V[:, order]


def l1_grid_maximum(H, power, points=720):
    """Brute-force max of ``||H w||_1`` over ``w = sqrt(P) (cos t, sin t e^{j phi})``.

    Only valid for two-antenna channels; the global phase of w does not
    change the objective, so the first entry is taken real.
    """
    assert H.shape[1] == 2
    t = np.linspace(0, np.pi / 2, points)
    phi = np.linspace(0, 2 * np.pi, points, endpoint=False)
    c = np.cos(t)[:, None]
    s = np.sin(t)[:, None] * np.exp(1j * phi)[None, :]
    total = np.zeros((points, points))
    for n in range(H.shape[0]):
        total += np.abs(H[n, 0] * c + H[n, 1] * s)
    return float(np.sqrt(power) * total.max())
