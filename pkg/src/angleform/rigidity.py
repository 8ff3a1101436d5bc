"""Rigidity functions, rigidity matrices, and rigidity verdicts for
planar frameworks.

A framework is a Graph together with a Configuration of points in the
plane. Three flavors of rigidity are covered:

* distance: squared edge lengths, matrix rank test against 2n - 3,
* bearing: unit edge directions, matrix rank test against 2n - 3,
* angle: cosines of angles between pairs of incident edges taken from an
  AngleIndexSet, nullspace test against the four trivial motions
  (two translations, scaling, rotation).

Bearings follow the convention g_ij = (p_i - p_j) / |p_i - p_j|, the unit
vector pointing from j toward i.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

import numpy as np

from .errors import (
    CoincidentPoints,
    DegenerateAllCoincident,
    NotAnEdge,
    NotAnEquilibrium,
    VertexOutOfRange,
)
from .geometry import perp, rotation
from .graph import Graph, expanded_incidence

# adjacent points closer than this are treated as coincident
EDGE_EPS = 1e-9
# |sin| at or below this marks a collinear direction pair
COLLINEAR_EPS = 1e-9
# default rank cutoff: sigma_max * max(dim) * machine epsilon * this factor
RANK_TOL_FACTOR = 100.0


class Configuration:
    """Immutable set of n labeled points in the plane (labels 1..n).

    Points are held as a read-only (n, 2) float array. The stacked vector
    interleaves coordinates as (x1, y1, x2, y2, ...).
    """

    __slots__ = ("pts",)

    def __init__(self, pts):
        arr = np.array(pts, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"expected (n, 2) points, got shape {arr.shape}")
        if arr.shape[0] < 2:
            raise ValueError("need at least two points")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coordinates must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "pts", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Configuration is immutable")

    @property
    def n(self) -> int:
        return self.pts.shape[0]

    @property
    def vec(self) -> np.ndarray:
        """Stacked coordinate vector of length 2n (read-only view)."""
        return self.pts.reshape(-1)

    def point(self, i: int) -> np.ndarray:
        """Point of vertex i (1-based)."""
        if not (1 <= i <= self.n):
            raise ValueError(f"vertex {i} outside 1..{self.n}")
        return self.pts[i - 1]

    @classmethod
    def from_vec(cls, v) -> "Configuration":
        arr = np.asarray(v, dtype=float)
        return cls(arr.reshape(-1, 2))

    @classmethod
    def regular_polygon(cls, n: int, radius: float = 1.0) -> "Configuration":
        """Vertex i at radius * (cos(2 pi i / n), sin(2 pi i / n)), i = 1..n."""
        ang = 2.0 * np.pi * np.arange(1, n + 1) / n
        return cls(radius * np.column_stack([np.cos(ang), np.sin(ang)]))

    def __repr__(self):
        return f"Configuration(n={self.n})"


@dataclass(frozen=True)
class AngleIndexSet:
    """An ordered family of angle triples (apex, j, k) with j < k.

    Each triple (i, j, k) names the angle at apex i between the edges
    (i, j) and (i, k). Triples are kept sorted lexicographically without
    duplicates. `provenance` records which constructor produced the set.
    """

    triples: tuple  # tuple of (i, j, k)
    provenance: str = "explicit"

    def __post_init__(self):
        prev = None
        for t in self.triples:
            i, j, k = t
            if len({i, j, k}) != 3:
                raise ValueError(f"triple {t} repeats a vertex")
            if not j < k:
                raise ValueError(f"triple {t} must order its wings j < k")
            if prev is not None and t <= prev:
                raise ValueError("triples not sorted lexicographically")
            prev = t

    @classmethod
    def from_triples(cls, triples, provenance: str = "explicit"):
        """Canonicalize arbitrary (i, j, k) input: order wings, sort, dedupe."""
        canon = set()
        for i, j, k in triples:
            i, j, k = int(i), int(j), int(k)
            canon.add((i, min(j, k), max(j, k)))
        return cls(tuple(sorted(canon)), provenance)

    def __len__(self):
        return len(self.triples)

    def as_array(self) -> np.ndarray:
        """(w, 3) int64 array of 0-based vertex indices."""
        return np.asarray(self.triples, dtype=np.int64).reshape(-1, 3) - 1

    def validate_for(self, g: Graph) -> None:
        """Require both edges of every triple to exist in g."""
        for i, j, k in self.triples:
            for other in (j, k):
                if not (1 <= other <= g.n and 1 <= i <= g.n):
                    raise VertexOutOfRange(
                        f"triple {(i, j, k)} outside 1..{g.n}"
                    )
                if not g.has_edge(i, other):
                    raise NotAnEdge(
                        f"triple {(i, j, k)} needs edge ({i}, {other})"
                    )


@dataclass(frozen=True)
class RigidityReport:
    """Outcome of a rank-based rigidity test."""

    kind: str
    rows: int
    cols: int
    singular_values: tuple
    rank: int
    nullspace_dim: int
    verdict: bool
    tol: float

    def as_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "nullspace_dim": self.nullspace_dim,
            "verdict": self.verdict,
            "tol": self.tol,
        }
        tail = self.singular_values[-4:]
        d["singular_value_tail"] = list(tail)
        return d


class RankInfo(NamedTuple):
    rank: int
    nullspace_dim: int
    singular_values: np.ndarray
    tol: float


class NondegeneracyReport(NamedTuple):
    ok: bool
    witness: Optional[tuple]  # a collinear graph triangle, or None


class SimilarityTransform(NamedTuple):
    scale: float
    rotation: np.ndarray  # (2, 2) orthogonal
    translation: np.ndarray  # (2,)


class MembershipReport(NamedTuple):
    member: bool
    transform: SimilarityTransform
    residual: float  # relative fit residual


def bearing(p: Configuration, i: int, j: int) -> np.ndarray:
    """Unit vector from p_j toward p_i."""
    e = p.point(i) - p.point(j)
    dist = float(np.hypot(e[0], e[1]))
    if dist < EDGE_EPS:
        raise CoincidentPoints(i, j, dist)
    return e / dist


def distance_rigidity_function(g: Graph, p: Configuration) -> np.ndarray:
    """Squared edge lengths in canonical edge order, shape (m,)."""
    out = np.empty(g.m)
    for r, (i, j) in enumerate(g.edges):
        e = p.point(i) - p.point(j)
        out[r] = e @ e
    return out


def bearing_rigidity_function(g: Graph, p: Configuration) -> np.ndarray:
    """Stacked bearings g_ij per canonical edge, shape (2m,)."""
    out = np.empty(2 * g.m)
    for r, (i, j) in enumerate(g.edges):
        out[2 * r : 2 * r + 2] = bearing(p, i, j)
    return out


def angle_rigidity_function(
    g: Graph, p: Configuration, T: AngleIndexSet
) -> np.ndarray:
    """Cosine g_ij . g_ik for each triple (i, j, k) of T, shape (w,).

    Entries are clipped into [-1, 1] to absorb last-ulp rounding at
    collinear triples.
    """
    T.validate_for(g)
    out = np.empty(len(T))
    for r, (i, j, k) in enumerate(T.triples):
        out[r] = bearing(p, i, j) @ bearing(p, i, k)
    return np.clip(out, -1.0, 1.0)


def distance_rigidity_matrix(g: Graph, p: Configuration) -> np.ndarray:
    """(m, 2n) Jacobian of the squared-length function."""
    R = np.zeros((g.m, 2 * p.n))
    for r, (i, j) in enumerate(g.edges):
        e = p.point(i) - p.point(j)
        R[r, 2 * i - 2 : 2 * i] = 2.0 * e
        R[r, 2 * j - 2 : 2 * j] = -2.0 * e
    return R


def bearing_rigidity_matrix(g: Graph, p: Configuration) -> np.ndarray:
    """(2m, 2n) Jacobian of the bearing function.

    Equals blockdiag(P(g_ij) / |e_ij|) @ (H kron I_2) and is assembled as
    that literal product.
    """
    m, n = g.m, p.n
    B = np.zeros((2 * m, 2 * m))
    for r, (i, j) in enumerate(g.edges):
        e = p.point(i) - p.point(j)
        dist = float(np.hypot(e[0], e[1]))
        if dist < EDGE_EPS:
            raise CoincidentPoints(i, j, dist)
        gij = e / dist
        B[2 * r : 2 * r + 2, 2 * r : 2 * r + 2] = (
            np.eye(2) - np.outer(gij, gij)
        ) / dist
    return B @ expanded_incidence(g)


def angle_rigidity_matrix(
    g: Graph, p: Configuration, T: AngleIndexSet
) -> np.ndarray:
    """(w, 2n) Jacobian of the angle cosine function.

    Assembled as R_g @ R_B: the row for triple (i, j, k) places g_ik^T in
    the bearing block of edge (i, j) and g_ij^T in the block of edge
    (i, k), with a sign flip wherever the triple traverses a canonical
    edge against its stored orientation.
    """
    T.validate_for(g)
    idx = g.edge_index()
    Rg = np.zeros((len(T), 2 * g.m))
    for r, (i, j, k) in enumerate(T.triples):
        gij = bearing(p, i, j)
        gik = bearing(p, i, k)
        for other, vec in ((j, gik), (k, gij)):
            if i < other:
                e, sign = idx[(i, other)], 1.0
            else:
                e, sign = idx[(other, i)], -1.0
            Rg[r, 2 * e : 2 * e + 2] = sign * vec
    return Rg @ bearing_rigidity_matrix(g, p)


def trivial_motion_basis(p: Configuration) -> np.ndarray:
    """(4, 2n) rows spanning translations, scaling, and rotation at p.

    Rows are 1 kron (1, 0), 1 kron (0, 1), the stacked p itself, and the
    stacked 90-degree rotation of every point.
    """
    spread = p.pts - p.pts[0]
    if float(np.max(np.abs(spread))) < EDGE_EPS:
        raise DegenerateAllCoincident(
            "all points coincide; no scaling/rotation directions exist"
        )
    n = p.n
    rot = (p.pts @ rotation(np.pi / 2).T).reshape(-1)
    return np.vstack(
        [
            np.tile([1.0, 0.0], n),
            np.tile([0.0, 1.0], n),
            p.vec,
            rot,
        ]
    )


def numerical_rank(M: np.ndarray, tol: Optional[float] = None) -> RankInfo:
    """SVD rank with the shared default cutoff.

    The cutoff is sigma_max * max(rows, cols) * eps * RANK_TOL_FACTOR
    unless an explicit tol is given. A zero matrix has rank 0.
    """
    M = np.atleast_2d(np.asarray(M, dtype=float))
    sv = np.linalg.svd(M, compute_uv=False)
    if tol is None:
        smax = float(sv[0]) if sv.size else 0.0
        tol = smax * max(M.shape) * np.finfo(float).eps * RANK_TOL_FACTOR
    rank = int(np.sum(sv > tol))
    return RankInfo(rank, M.shape[1] - rank, sv, float(tol))


def _rank_report(kind, M, verdict_fn) -> RigidityReport:
    info = numerical_rank(M)
    return RigidityReport(
        kind=kind,
        rows=M.shape[0],
        cols=M.shape[1],
        singular_values=tuple(float(s) for s in info.singular_values),
        rank=info.rank,
        nullspace_dim=info.nullspace_dim,
        verdict=verdict_fn(info),
        tol=info.tol,
    )


def is_infinitesimally_distance_rigid(
    g: Graph, p: Configuration
) -> RigidityReport:
    """Rank of the distance rigidity matrix equals 2n - 3."""
    M = distance_rigidity_matrix(g, p)
    want = 2 * p.n - 3
    return _rank_report("distance", M, lambda info: info.rank == want)


def is_infinitesimally_bearing_rigid(
    g: Graph, p: Configuration
) -> RigidityReport:
    """Rank of the bearing rigidity matrix equals 2n - 3."""
    M = bearing_rigidity_matrix(g, p)
    want = 2 * p.n - 3
    return _rank_report("bearing", M, lambda info: info.rank == want)


def is_infinitesimally_angle_rigid(
    g: Graph, p: Configuration, T: AngleIndexSet
) -> RigidityReport:
    """Nullspace of the angle rigidity matrix is exactly the 4 trivial
    motions."""
    M = angle_rigidity_matrix(g, p, T)
    return _rank_report("angle", M, lambda info: info.nullspace_dim == 4)


def _triangles(g: Graph) -> list:
    """All vertex triangles a < b < c whose three edges exist."""
    adj = {v: set() for v in range(1, g.n + 1)}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    out = []
    for a, b in g.edges:
        for c in sorted(adj[a] & adj[b]):
            if c > b:
                out.append((a, b, c))
    return sorted(out)


def is_strongly_nondegenerate(
    g: Graph, p: Configuration
) -> NondegeneracyReport:
    """No graph triangle is embedded collinearly.

    Returns the first offending triangle as a witness when one exists.
    """
    for a, b, c in _triangles(g):
        gab = bearing(p, b, a)
        gac = bearing(p, c, a)
        if abs(gab @ perp(gac)) <= COLLINEAR_EPS:
            return NondegeneracyReport(False, (a, b, c))
    return NondegeneracyReport(True, None)


def shape_class_membership(
    p: Configuration, q: Configuration, tol: float = 1e-6
) -> MembershipReport:
    """Test whether q = c (I kron R) p + 1 kron xi for some similarity.

    Both orthogonal branches (rotation and reflection) are fitted by
    least squares; the better one is reported. Membership requires the
    relative residual |q - fit| / |p - centroid(p)| below tol and a
    nonzero scale.
    """
    if p.n != q.n:
        raise ValueError(f"point counts differ: {p.n} vs {q.n}")
    cp = p.pts.mean(axis=0)
    cq = q.pts.mean(axis=0)
    a = p.pts - cp
    b = q.pts - cq
    norm_a = float(np.linalg.norm(a))
    if norm_a == 0.0:
        raise DegenerateAllCoincident("reference points all coincide")
    M = b.T @ a
    U, _, Vt = np.linalg.svd(M)
    det_sign = float(np.sign(np.linalg.det(U @ Vt))) or 1.0
    best = None
    for branch in (1.0, -1.0):
        R = U @ np.diag([1.0, branch * det_sign]) @ Vt
        c = float(np.sum(b * (a @ R.T)) / (norm_a**2))
        res = float(np.linalg.norm(b - c * (a @ R.T))) / norm_a
        if best is None or res < best[0]:
            best = (res, c, R)
    res, c, R = best
    xi = cq - c * (R @ cp)
    member = bool(res < tol and c != 0.0)
    return MembershipReport(member, SimilarityTransform(c, R, xi), res)


def angle_congruence_check(
    p: Configuration, q: Configuration, tol: float = 1e-9
) -> bool:
    """Entrywise agreement of all complete-graph angle cosines."""
    if p.n != q.n:
        raise ValueError(f"point counts differ: {p.n} vs {q.n}")
    verts = range(1, p.n + 1)
    dev = 0.0
    for i in verts:
        for j, k in combinations([v for v in verts if v != i], 2):
            fp = bearing(p, i, j) @ bearing(p, i, k)
            fq = bearing(q, i, j) @ bearing(q, i, k)
            dev = max(dev, abs(fp - fq))
    return dev < tol


def jacobian_spectrum(
    p_eq: Configuration,
    T: AngleIndexSet,
    maneuver: Optional[np.ndarray] = None,
    target_cosines: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Eigenvalues (ascending) of the flow linearization at an equilibrium.

    The linearization is -R_T^T R_T, minus the leader coupling matrix when
    `maneuver` is given. When `target_cosines` is supplied, p_eq must meet
    them to 1e-9 (else NotAnEquilibrium); without it, p_eq is taken as its
    own reference and the linearization is exact at p_eq by construction.
    """
    tri = np.asarray(T.triples, dtype=np.int64).reshape(-1, 3)
    n = p_eq.n
    R = np.zeros((tri.shape[0], 2 * n))
    cos = np.empty(tri.shape[0])
    for r, (i, j, k) in enumerate(tri):
        gij = bearing(p_eq, int(i), int(j))
        gik = bearing(p_eq, int(i), int(k))
        lij = float(np.linalg.norm(p_eq.point(int(i)) - p_eq.point(int(j))))
        lik = float(np.linalg.norm(p_eq.point(int(i)) - p_eq.point(int(k))))
        cos[r] = gij @ gik
        qj = (gik - cos[r] * gij) / lij
        qk = (gij - cos[r] * gik) / lik
        R[r, 2 * i - 2 : 2 * i] = qj + qk
        R[r, 2 * j - 2 : 2 * j] = -qj
        R[r, 2 * k - 2 : 2 * k] = -qk
    if target_cosines is not None:
        resid = float(np.max(np.abs(cos - np.asarray(target_cosines))))
        if resid >= 1e-9:
            raise NotAnEquilibrium(
                f"angle residual {resid:.3e} exceeds 1e-9"
            )
    J = -(R.T @ R)
    if maneuver is not None:
        J = J - np.asarray(maneuver, dtype=float)
    return np.linalg.eigvalsh(J)
