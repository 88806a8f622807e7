"""Concrete quiver representations: points of the representation space,
Hom/Ext dimensions via the standard four-term exact sequence, brick and
Schur-root sampling, and orthogonal-category candidate search.

Flattening convention, fixed once: coordinates of the representation space
are ordered arrow by arrow (quiver arrow order), column-major within each
arrow block. The map c between two representations uses vertex blocks then
arrow blocks, column-major within each block; determinant signs and golden
values depend on this.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import QuiverInputError
from .fields import PrimeField
from .matrix import ExactMatrix, gf_rank
from .quiver import Quiver, check_dim, euler_form, is_positive


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dim: tuple
    mats: tuple  # one ExactMatrix of shape d_target x d_source per arrow
    field: object

    def __post_init__(self):
        d = check_dim(self.quiver, self.dim)
        object.__setattr__(self, "dim", d)
        if len(self.mats) != self.quiver.n_arrows:
            raise QuiverInputError("one matrix per arrow required")
        for (s, t), m in zip(self.quiver.arrow_indices(), self.mats):
            if m.shape != (d[t], d[s]):
                raise QuiverInputError(
                    f"arrow matrix shape {m.shape} != ({d[t]}, {d[s]})")

    def to_json(self):
        mod = self.field.p if isinstance(self.field, PrimeField) else None
        return {
            "dim": {v: int(x) for v, x in zip(self.quiver.vertices, self.dim)},
            "modulus": mod,
            "mats": {str(i): [[int(x) if mod else str(x) for x in row]
                              for row in m.rows]
                     for i, m in enumerate(self.mats)},
        }


def rep_from_json(q: Quiver, data, field) -> Representation:
    d = tuple(int(data["dim"][v]) for v in q.vertices)
    mats = []
    for i, (s, t) in enumerate(q.arrow_indices()):
        rows = data["mats"][str(i)]
        mats.append(ExactMatrix(field, rows, shape=(d[t], d[s])))
    return Representation(q, d, tuple(mats), field)


# -- coordinates of the representation space ---------------------------------------


def coord_offsets(q: Quiver, d):
    """Per-arrow offsets into the flat coordinate vector, plus total length."""
    d = check_dim(q, d)
    offs = []
    total = 0
    for s, t in q.arrow_indices():
        offs.append(total)
        total += d[s] * d[t]
    return offs, total


def rep_from_coords(q: Quiver, d, coords, field) -> Representation:
    d = check_dim(q, d)
    offs, total = coord_offsets(q, d)
    if len(coords) != total:
        raise QuiverInputError(f"expected {total} coordinates, got {len(coords)}")
    mats = []
    for (s, t), off in zip(q.arrow_indices(), offs):
        rows, cols = d[t], d[s]
        m = ExactMatrix.zeros(field, rows, cols)
        for c in range(cols):
            for r in range(rows):
                m.rows[r][c] = field.element(coords[off + c * rows + r])
        mats.append(m)
    return Representation(q, d, tuple(mats), field)


def coords_from_rep(m: Representation):
    out = []
    for mat in m.mats:
        for c in range(mat.ncols):
            for r in range(mat.nrows):
                out.append(mat.rows[r][c])
    return out


def sample_representation(q: Quiver, d, field, rng) -> Representation:
    """Uniform random point of the representation space over the field."""
    d = check_dim(q, d)
    mats = []
    for s, t in q.arrow_indices():
        mats.append(ExactMatrix(field,
                                [[field.random(rng) for _ in range(d[s])]
                                 for _ in range(d[t])],
                                shape=(d[t], d[s])))
    return Representation(q, d, tuple(mats), field)


# -- the Hom/Ext linear map ---------------------------------------------------------


def build_c_matrix(m: Representation, n: Representation) -> ExactMatrix:
    """Matrix of (phi_i) -> (phi_{t a} f_a - g_a phi_{s a}), vertexwise blocks.

    Domain: one block per vertex, Hom(V_i, W_i) flattened column-major.
    Codomain: one block per arrow, Hom(V_{s a}, W_{t a}) flattened
    column-major. Kernel dimension is Hom, cokernel dimension is Ext.
    """
    if m.quiver != n.quiver:
        raise QuiverInputError("representations live on different quivers")
    if m.field != n.field:
        raise QuiverInputError("representations live over different fields")
    q = m.quiver
    md, nd = m.dim, n.dim
    field = m.field
    col_off = []
    total_cols = 0
    for i in range(q.n_vertices):
        col_off.append(total_cols)
        total_cols += md[i] * nd[i]
    row_off = []
    total_rows = 0
    for s, t in q.arrow_indices():
        row_off.append(total_rows)
        total_rows += md[s] * nd[t]

    if isinstance(field, PrimeField):
        a = np.zeros((total_rows, total_cols), dtype=np.int64)
        for ai, (s, t) in enumerate(q.arrow_indices()):
            blk_rows = md[s] * nd[t]
            if blk_rows == 0:
                continue
            r0 = row_off[ai]
            if md[t] * nd[t]:
                f = m.mats[ai].gf_array()  # md[t] x md[s]
                a[r0:r0 + blk_rows, col_off[t]:col_off[t] + md[t] * nd[t]] += \
                    np.kron(f.T, np.eye(nd[t], dtype=np.int64))
            if md[s] * nd[s]:
                g = n.mats[ai].gf_array()  # nd[t] x nd[s]
                a[r0:r0 + blk_rows, col_off[s]:col_off[s] + md[s] * nd[s]] -= \
                    np.kron(np.eye(md[s], dtype=np.int64), g)
        return ExactMatrix.from_numpy(field, a % field.p)

    out = ExactMatrix.zeros(field, total_rows, total_cols)
    for ai, (s, t) in enumerate(q.arrow_indices()):
        f = m.mats[ai]
        g = n.mats[ai]
        r0 = row_off[ai]
        # + phi_t f: row (r, c) of the output picks up f[k][c] * phi_t[r][k]
        for c in range(md[s]):
            for r in range(nd[t]):
                row = r0 + c * nd[t] + r
                for k in range(md[t]):
                    col = col_off[t] + k * nd[t] + r
                    out.rows[row][col] += f.rows[k][c]
                for k in range(nd[s]):
                    col = col_off[s] + c * nd[s] + k
                    out.rows[row][col] -= g.rows[r][k]
    return out


@dataclass(frozen=True)
class HomExtReport:
    hom: int
    ext: int
    end: int = None  # = hom when the two sides coincide

    @property
    def euler(self):
        return self.hom - self.ext


def hom_ext(m: Representation, n: Representation) -> HomExtReport:
    c = build_c_matrix(m, n)
    if isinstance(m.field, PrimeField):
        rk = gf_rank(c.gf_array(), m.field.p)
    else:
        rk = c.rank()
    hom = c.ncols - rk
    ext = c.nrows - rk
    end = hom if (m is n or (m.dim == n.dim and m.mats == n.mats)) else None
    return HomExtReport(hom, ext, end)


def end_dim(m: Representation) -> int:
    return hom_ext(m, m).hom


def is_brick(m: Representation) -> bool:
    return end_dim(m) == 1


# -- Schur roots and orthogonal candidates -------------------------------------------


@dataclass(frozen=True)
class SchurVerdict:
    value: str          # "yes" | "inconclusive"
    trials: int
    witness: Representation = None

    def to_json(self):
        return {"verdict": self.value, "trials": self.trials}


def is_schur_root(q: Quiver, d, trials: int, field, rng) -> SchurVerdict:
    """One-sided probabilistic Schur test.

    Bricks form an open subset of the representation space, so a single
    sampled brick is a proof; absence is never certified and the verdict
    degrades to 'inconclusive' after the trial budget.
    """
    d = check_dim(q, d)
    if not is_positive(d):
        raise QuiverInputError("Schur test needs a positive dimension vector")
    for t in range(1, trials + 1):
        rep = sample_representation(q, d, field, rng)
        if is_brick(rep):
            return SchurVerdict("yes", t, rep)
    return SchurVerdict("inconclusive", trials)


@dataclass(frozen=True)
class PerpCandidate:
    vector: tuple
    side: str  # "left" | "right"


def perp_candidates(q: Quiver, d, entry_bound: int, trials: int, field, rng,
                    roots=None, brick=None):
    """Dimension vectors of candidate simple objects in the orthogonal
    categories of the generic representation of dimension d.

    A candidate e must be a positive real root (q_Q(e) = 1), Euler-orthogonal
    to d on the matching side, and a sampled generic representation of
    dimension e must have Hom = Ext = 0 against a sampled generic brick of
    dimension d (the c-matrix between them is square by orthogonality and
    must be invertible). Candidates are not certified simple; downstream
    degree-sum checks act as the filter.
    """
    from .roots import positive_real_roots

    d = check_dim(q, d)
    if roots is None:
        roots = positive_real_roots(q, entry_bound)
    if brick is None:
        sv = is_schur_root(q, d, trials, field, rng)
        if sv.value != "yes":
            return []
        brick = sv.witness
    out = []
    for e in roots:
        if e == d or not any(e):
            continue
        for side in ("left", "right"):
            ortho = euler_form(q, e, d) if side == "left" else euler_form(q, d, e)
            if ortho != 0:
                continue
            for _ in range(trials):
                probe = sample_representation(q, e, field, rng)
                rep_pair = (probe, brick) if side == "left" else (brick, probe)
                he = hom_ext(*rep_pair)
                if he.hom == 0 and he.ext == 0:
                    out.append(PerpCandidate(e, side))
                    break
    return out
