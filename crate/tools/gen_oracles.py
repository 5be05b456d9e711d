"""Regenerate crates/core/tests/common/oracles.rs.

Reference values come from numpy/scipy/scikit dense computations that share
no code with the Rust crate. Matrices are flattened column-major; volumes use
the crate layout (pixel (i, j) of frame t at i + m*j + m*n*t).
"""

import pathlib

import numpy as np
from skimage.filters import threshold_otsu
from sklearn.metrics import f1_score, precision_score, recall_score

rng = np.random.RandomState(20240611)
out = []


def emit(name, arr):
    flat = np.asarray(arr, dtype=float).reshape(-1, order="F")
    body = ", ".join(repr(float(v)) for v in flat)
    out.append(f"pub const {name}: [f64; {flat.size}] = [{body}];")


def scalar(name, v):
    out.append(f"pub const {name}: f64 = {float(v)!r};")


def soft(v, t):
    return np.sign(v) * np.maximum(np.abs(v) - t, 0.0)


def svt(y, d):
    u, s, vt = np.linalg.svd(y, full_matrices=False)
    return (u * np.maximum(s - d, 0.0)) @ vt


def vol(flat, m, n, k):
    return np.asarray(flat).reshape((m, n, k), order="F")


def flat(v):
    return v.reshape(-1, order="F")


def grad(v):
    h = np.roll(v, -1, axis=1) - v
    ve = np.roll(v, -1, axis=0) - v
    d = np.roll(v, -1, axis=2) - v
    return h, ve, d


def diff_matrix(m, n, k):
    """Dense forward-difference operator stacked [D_h; D_v; D_d]."""
    size = m * n * k
    rows = []
    for axis in (1, 0, 2):
        block = np.zeros((size, size))
        for p in range(size):
            e = np.zeros(size)
            e[p] = 1.0
            g = np.roll(vol(e, m, n, k), -1, axis=axis) - vol(e, m, n, k)
            block[:, p] = flat(g)
        rows.append(block)
    return np.vstack(rows)


def shrink(h, v, d, t):
    mag = np.sqrt(h * h + v * v + d * d)
    s = np.where(mag > t, (mag - t) / np.where(mag > 0, mag, 1.0), 0.0)
    return h * s, v * s, d * s


# svt
y = rng.randn(5, 4)
emit("SVT_Y", y)
scalar("SVT_DELTA", 0.7)
emit("SVT_OUT", svt(y, 0.7))
scalar("SVT_NUCLEAR_OF_Y", np.linalg.svd(y, compute_uv=False).sum())

# soft threshold
st = rng.randn(3, 4)
emit("SOFT_Y", st)
emit("SOFT_OUT", soft(st, 0.4))

# shrink and tv on a 2x2x2 volume
m, n, k = 2, 2, 2
tvv = rng.rand(m * n * k)
emit("TV_VOLUME", tvv)
h, ve, d = grad(vol(tvv, m, n, k))
scalar("TV_VALUE", np.sqrt(h * h + ve * ve + d * d).sum())
sh, sv, sd = shrink(h, ve, d, 0.3)
emit("TV_SHRINK_H", flat(sh))
emit("TV_SHRINK_V", flat(sv))
emit("TV_SHRINK_D", flat(sd))

# screened poisson on 3x2x2
m, n, k = 3, 2, 2
rhs = rng.randn(m * n, k)
D = diff_matrix(m, n, k)
A = 1.3 * np.eye(m * n * k) + 0.8 * D.T @ D
emit("POISSON_RHS", rhs)
scalar("POISSON_ALPHA", 1.3)
scalar("POISSON_RHO", 0.8)
emit("POISSON_OUT", np.linalg.solve(A, flat(rhs)).reshape(m * n, k, order="F"))

# M-RPCA elementwise updates on a 4x3 problem
x = rng.rand(4, 3)
l = rng.rand(4, 3)
w = rng.rand(4, 3)
u = rng.randn(4, 3) * 0.3
rho, tau_l, tau_w, lam = 0.9, 0.5, 0.4, 0.05
for name, val in (("M_X", x), ("M_L", l), ("M_W", w), ("M_U", u)):
    emit(name, val)
scalar("M_RHO", rho)
scalar("M_TAU_L", tau_l)
scalar("M_TAU_W", tau_w)
scalar("M_LAMBDA_W", lam)
lam_l = (1 - w) * ((l - x) * (1 - w) + u / rho)
emit("M_LAMBDA_L", lam_l)
l_new = svt(l - tau_l * lam_l, tau_l / rho)
emit("M_L_NEW", l_new)
lam_w = (x - l_new) * ((l_new - x) * (1 - w) + u / rho)
emit("M_LAMBDA_W_AT_L_NEW", lam_w)
w_new = np.clip(soft(w - tau_w * lam_w, lam * tau_w / rho), 0, 1)
emit("M_W_NEW", w_new)
u_new = u + rho * (1 - w_new) * (l_new - x)
emit("M_U_NEW", u_new)
r = (1 - w) * (l - x)
scalar(
    "M_LAGRANGIAN",
    np.linalg.svd(l, compute_uv=False).sum() + lam * np.abs(w).sum() + (u * r).sum() + rho / 2 * (r * r).sum(),
)

# EM-RPCA updates on a 2x3x2 volume
m, n, k = 2, 3, 2
mn = m * n
x = rng.rand(mn, k)
l = rng.rand(mn, k)
w = rng.rand(mn, k)
e = rng.randn(mn, k) * 0.1
ux = rng.randn(mn, k) * 0.3
zh, zv, zd = (rng.randn(m, n, k) * 0.2 for _ in range(3))
uh, uv, ud = (rng.randn(m, n, k) * 0.2 for _ in range(3))
rx, rz, tl, tw, lw, lz, le = 0.9, 1.7, 0.5, 0.4, 0.05, 0.03, 0.08
for name, val in (("E_X", x), ("E_L", l), ("E_W", w), ("E_E", e), ("E_UX", ux)):
    emit(name, val)
for name, val in (("E_ZH", zh), ("E_ZV", zv), ("E_ZD", zd), ("E_UZH", uh), ("E_UZV", uv), ("E_UZD", ud)):
    emit(name, flat(val))
for name, val in (("E_RHO_X", rx), ("E_RHO_Z", rz), ("E_TAU_L", tl), ("E_TAU_W", tw),
                  ("E_LAMBDA_W", lw), ("E_LAMBDA_Z", lz), ("E_LAMBDA_E", le)):
    scalar(name, val)
psi_l = (1 - w) * ((l - x) * (1 - w) + e + ux / rx)
emit("E_PSI_L", psi_l)
l_new = svt(l - tl * psi_l, tl / rx)
emit("E_L_NEW", l_new)
psi_w = (x - l_new) * ((l_new - x) * (1 - w) + e + ux / rx)
emit("E_PSI_W", psi_w)
D = diff_matrix(m, n, k)
zvec = np.concatenate([flat(zh), flat(zv), flat(zd)])
uzvec = np.concatenate([flat(uh), flat(uv), flat(ud)])
gamma = (rx / tw) * flat(w - tw * psi_w) + rz * D.T @ (zvec + uzvec / rz)
A = (2 * lw + rx / tw) * np.eye(m * n * k) + rz * D.T @ D
w_un = np.linalg.solve(A, gamma)
emit("E_W_UNCLAMPED", w_un.reshape(mn, k, order="F"))
w_new = np.clip(w_un, 0, 1)
emit("E_W_NEW", w_new.reshape(mn, k, order="F"))
dw = D @ w_new
size = m * n * k
arg = dw - uzvec / rz
nh, nv, nd = shrink(arg[:size], arg[size:2 * size], arg[2 * size:], lz / rz)
emit("E_Z_NEW_H", nh)
emit("E_Z_NEW_V", nv)
emit("E_Z_NEW_D", nd)
w_new_m = w_new.reshape(mn, k, order="F")
e_new = soft((w_new_m - 1) * (l_new - x) - ux / rx, le / rx)
emit("E_E_NEW", e_new)
emit("E_UX_NEW", ux + rx * ((1 - w_new_m) * (l_new - x) + e_new))
z_new = np.concatenate([nh, nv, nd])
uz_new = uzvec + rz * (z_new - dw)
emit("E_UZ_NEW_H", uz_new[:size])
emit("E_UZ_NEW_V", uz_new[size:2 * size])
emit("E_UZ_NEW_D", uz_new[2 * size:])
# Lagrangian at the starting state
rxr = (1 - w) * (l - x) + e
rzr = zvec - D @ flat(w)
zmag = np.sqrt(zh ** 2 + zv ** 2 + zd ** 2).sum()
scalar(
    "E_LAGRANGIAN",
    np.linalg.svd(l, compute_uv=False).sum() + lw * (w * w).sum() + lz * zmag + le * np.abs(e).sum()
    + (ux * rxr).sum() + rx / 2 * (rxr * rxr).sum() + (uzvec * rzr).sum() + rz / 2 * (rzr * rzr).sum(),
)

# otsu against scikit-image (bin centres; the crate reports the lower edge of
# the upper class, half a bin above)
vals = np.concatenate([rng.rand(150) * 0.3, 0.55 + rng.rand(90) * 0.4])
emit("OTSU_VALUES", vals)
width = (vals.max() - vals.min()) / 256
scalar("OTSU_THRESHOLD", threshold_otsu(vals, nbins=256) + width / 2)

# metrics
pred = (rng.rand(8, 8) > 0.5).astype(float)
truth = (rng.rand(8, 8) > 0.6).astype(float)
emit("METRIC_PRED", pred)
emit("METRIC_TRUTH", truth)
scalar("METRIC_RE", recall_score(flat(truth), flat(pred)))
scalar("METRIC_PRE", precision_score(flat(truth), flat(pred)))
scalar("METRIC_F1", f1_score(flat(truth), flat(pred)))
a = rng.rand(6, 5)
b = np.clip(a + rng.randn(6, 5) * 0.05, 0, 1)
emit("PSNR_A", a)
emit("PSNR_B", b)
scalar("PSNR_DB", 10 * np.log10(1.0 / np.mean((a - b) ** 2)))

header = "// Generated by tools/gen_oracles.py; do not edit.\n#![allow(dead_code)]\n\n"
path = pathlib.Path(__file__).resolve().parents[1] / "crates/core/tests/common/oracles.rs"
path.write_text(header + "\n".join(out) + "\n")
print(f"wrote {path}")
