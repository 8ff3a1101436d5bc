"""Hot numeric kernels: control-law evaluation and the RK4 flow loop.

Two interchangeable backends implement the same contract:

* a compiled backend, loop-style kernels under numba @njit(cache=True),
* a pure-numpy backend, vectorized control evaluation with the time
  stepping loop in Python.

The active backend is chosen at import time. Setting the environment
variable ANGLEFORM_NUMBA=0 forces the numpy fallback; otherwise the
compiled backend is used whenever numba imports. Both backends stay
importable (when their dependencies exist) so they can be benchmarked
against each other in one process, see benchmarks/bench_kernels.py.

Kernel contract
---------------
eval_control(pos, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps)
    pos (n, 2) float64, tri (w, 3) int64 0-based, cstar (w,) float64.
    lead_a/lead_b are 0-based leader indices, or -1 for no maneuver;
    (dsx, dsy) is the commanded leader displacement.
    Returns (u (n, 2), cost, ok). cost is the full tracking cost
    (angle term plus leader term when active); ok flips False when a
    triple edge drops under edge_eps.

integrate(pos0, tri, cstar, edges, h, n_steps, record_every, lead_a,
          lead_b, dsx, dsy, blowup_limit, edge_eps, cost_tol, grad_tol)
    Classical fixed-step RK4 on pdot = u(p). Records a snapshot every
    record_every steps, plus the initial state and the final state.
    Returns (times, traj, n_rec, status, t_stop) with status codes
    STATUS_RAN, STATUS_CONVERGED (cost under cost_tol and |u| under
    grad_tol), STATUS_NONFINITE (a coordinate left [-blowup, blowup] or
    went non-finite), STATUS_COINCIDENT (a graph edge or a triple edge
    collapsed under edge_eps).
"""

import os
from typing import NamedTuple

import numpy as np

ENV_FLAG = "ANGLEFORM_NUMBA"

STATUS_RAN = 0
STATUS_CONVERGED = 1
STATUS_NONFINITE = 2
STATUS_COINCIDENT = 3


class Backend(NamedTuple):
    name: str
    eval_control: object
    integrate: object


# ---------------------------------------------------------------------
# compiled backend: loop-style bodies, too slow to run uncompiled
# ---------------------------------------------------------------------


def _control_loop(pos, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps):
    n = pos.shape[0]
    w = tri.shape[0]
    u = np.zeros((n, 2))
    cost = 0.0
    for t in range(w):
        a = tri[t, 0]
        b = tri[t, 1]
        c = tri[t, 2]
        eabx = pos[a, 0] - pos[b, 0]
        eaby = pos[a, 1] - pos[b, 1]
        eacx = pos[a, 0] - pos[c, 0]
        eacy = pos[a, 1] - pos[c, 1]
        lab = np.sqrt(eabx * eabx + eaby * eaby)
        lac = np.sqrt(eacx * eacx + eacy * eacy)
        if lab < edge_eps or lac < edge_eps:
            return u, cost, False
        gabx = eabx / lab
        gaby = eaby / lab
        gacx = eacx / lac
        gacy = eacy / lac
        cosv = gabx * gacx + gaby * gacy
        d = cosv - cstar[t]
        cost += 0.5 * d * d
        # projector identity: P(g_ab) g_ac = g_ac - cos * g_ab
        q1x = (gacx - cosv * gabx) / lab
        q1y = (gacy - cosv * gaby) / lab
        q2x = (gabx - cosv * gacx) / lac
        q2y = (gaby - cosv * gacy) / lac
        u[a, 0] -= d * (q1x + q2x)
        u[a, 1] -= d * (q1y + q2y)
        u[b, 0] += d * q1x
        u[b, 1] += d * q1y
        u[c, 0] += d * q2x
        u[c, 1] += d * q2y
    if lead_a >= 0:
        ex = dsx - (pos[lead_a, 0] - pos[lead_b, 0])
        ey = dsy - (pos[lead_a, 1] - pos[lead_b, 1])
        u[lead_a, 0] += ex
        u[lead_a, 1] += ey
        u[lead_b, 0] -= ex
        u[lead_b, 1] -= ey
        cost += 0.5 * (ex * ex + ey * ey)
    return u, cost, True


try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

if HAVE_NUMBA:
    _control_jit = _njit(cache=True)(_control_loop)

    @_njit(cache=True)
    def _integrate_jit(
        pos0,
        tri,
        cstar,
        edges,
        h,
        n_steps,
        record_every,
        lead_a,
        lead_b,
        dsx,
        dsy,
        blowup_limit,
        edge_eps,
        cost_tol,
        grad_tol,
    ):
        n = pos0.shape[0]
        max_rec = n_steps // record_every + 2
        times = np.zeros(max_rec)
        traj = np.zeros((max_rec, n, 2))
        pos = pos0.copy()
        traj[0] = pos
        n_rec = 1
        status = STATUS_RAN
        t_stop = n_steps * h
        for step in range(n_steps):
            t = step * h
            collapsed = False
            for r in range(edges.shape[0]):
                dx = pos[edges[r, 0], 0] - pos[edges[r, 1], 0]
                dy = pos[edges[r, 0], 1] - pos[edges[r, 1], 1]
                if np.sqrt(dx * dx + dy * dy) < edge_eps:
                    collapsed = True
            if collapsed:
                status = STATUS_COINCIDENT
                t_stop = t
                break
            k1, cost, ok1 = _control_jit(
                pos, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps
            )
            if not ok1:
                status = STATUS_COINCIDENT
                t_stop = t
                break
            gnorm = np.sqrt(np.sum(k1 * k1))
            if cost < cost_tol and gnorm < grad_tol:
                status = STATUS_CONVERGED
                t_stop = t
                break
            k2, c2, ok2 = _control_jit(
                pos + (0.5 * h) * k1, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps
            )
            k3, c3, ok3 = _control_jit(
                pos + (0.5 * h) * k2, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps
            )
            k4, c4, ok4 = _control_jit(
                pos + h * k3, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps
            )
            if not (ok2 and ok3 and ok4):
                status = STATUS_COINCIDENT
                t_stop = t
                break
            pos = pos + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            bad = False
            for i in range(n):
                # a NaN coordinate also fails these comparisons
                if not (np.abs(pos[i, 0]) <= blowup_limit):
                    bad = True
                if not (np.abs(pos[i, 1]) <= blowup_limit):
                    bad = True
            if bad:
                status = STATUS_NONFINITE
                t_stop = (step + 1) * h
                break
            if (step + 1) % record_every == 0:
                times[n_rec] = (step + 1) * h
                traj[n_rec] = pos
                n_rec += 1
        if status == STATUS_RAN or status == STATUS_CONVERGED:
            t_end = t_stop if status == STATUS_CONVERGED else n_steps * h
            if times[n_rec - 1] < t_end:
                times[n_rec] = t_end
                traj[n_rec] = pos
                n_rec += 1
        return times, traj, n_rec, status, t_stop


# ---------------------------------------------------------------------
# pure-numpy backend: vectorized control, Python stepping loop
# ---------------------------------------------------------------------


def _control_np(pos, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps):
    u = np.zeros_like(pos)
    A = pos[tri[:, 0]]
    B = pos[tri[:, 1]]
    C = pos[tri[:, 2]]
    eab = A - B
    eac = A - C
    lab = np.sqrt(np.sum(eab * eab, axis=1))
    lac = np.sqrt(np.sum(eac * eac, axis=1))
    cost = 0.0
    if lab.size and (lab.min() < edge_eps or lac.min() < edge_eps):
        return u, cost, False
    gab = eab / lab[:, None]
    gac = eac / lac[:, None]
    cosv = np.sum(gab * gac, axis=1)
    d = cosv - cstar
    cost = 0.5 * float(d @ d)
    q1 = (gac - cosv[:, None] * gab) / lab[:, None]
    q2 = (gab - cosv[:, None] * gac) / lac[:, None]
    np.add.at(u, tri[:, 0], -d[:, None] * (q1 + q2))
    np.add.at(u, tri[:, 1], d[:, None] * q1)
    np.add.at(u, tri[:, 2], d[:, None] * q2)
    if lead_a >= 0:
        err = np.array([dsx, dsy]) - (pos[lead_a] - pos[lead_b])
        u[lead_a] += err
        u[lead_b] -= err
        cost += 0.5 * float(err @ err)
    return u, cost, True


def _integrate_np(
    pos0,
    tri,
    cstar,
    edges,
    h,
    n_steps,
    record_every,
    lead_a,
    lead_b,
    dsx,
    dsy,
    blowup_limit,
    edge_eps,
    cost_tol,
    grad_tol,
):
    n = pos0.shape[0]
    max_rec = n_steps // record_every + 2
    times = np.zeros(max_rec)
    traj = np.zeros((max_rec, n, 2))
    pos = pos0.copy()
    traj[0] = pos
    n_rec = 1
    status = STATUS_RAN
    t_stop = n_steps * h
    for step in range(n_steps):
        t = step * h
        gaps = pos[edges[:, 0]] - pos[edges[:, 1]]
        if edges.size and float(
            np.min(np.sqrt(np.sum(gaps * gaps, axis=1)))
        ) < edge_eps:
            status = STATUS_COINCIDENT
            t_stop = t
            break
        k1, cost, ok1 = _control_np(
            pos, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps
        )
        if not ok1:
            status = STATUS_COINCIDENT
            t_stop = t
            break
        if cost < cost_tol and float(np.sqrt(np.sum(k1 * k1))) < grad_tol:
            status = STATUS_CONVERGED
            t_stop = t
            break
        k2, _, ok2 = _control_np(
            pos + (0.5 * h) * k1, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps
        )
        k3, _, ok3 = _control_np(
            pos + (0.5 * h) * k2, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps
        )
        k4, _, ok4 = _control_np(
            pos + h * k3, tri, cstar, lead_a, lead_b, dsx, dsy, edge_eps
        )
        if not (ok2 and ok3 and ok4):
            status = STATUS_COINCIDENT
            t_stop = t
            break
        pos = pos + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.abs(pos) <= blowup_limit):
            status = STATUS_NONFINITE
            t_stop = (step + 1) * h
            break
        if (step + 1) % record_every == 0:
            times[n_rec] = (step + 1) * h
            traj[n_rec] = pos
            n_rec += 1
    if status in (STATUS_RAN, STATUS_CONVERGED):
        t_end = t_stop if status == STATUS_CONVERGED else n_steps * h
        if times[n_rec - 1] < t_end:
            times[n_rec] = t_end
            traj[n_rec] = pos
            n_rec += 1
    return times, traj, n_rec, status, t_stop


def make_numpy_backend() -> Backend:
    return Backend("numpy", _control_np, _integrate_np)


def make_numba_backend() -> Backend:
    """The compiled backend; raises ImportError when numba is absent."""
    if not HAVE_NUMBA:
        raise ImportError("numba is not installed")
    return Backend("numba", _control_jit, _integrate_jit)


def _select() -> Backend:
    if os.environ.get(ENV_FLAG, "1") == "0" or not HAVE_NUMBA:
        return make_numpy_backend()
    return make_numba_backend()


_active = _select()

eval_control = _active.eval_control
integrate = _active.integrate


def backend_name() -> str:
    return _active.name
