"""The discriminant machinery.

The square matrix of linear forms induced by the infinitesimal group action
on the representation space ("Saito matrix"): its determinant cuts out the
discriminant, and the divisor is linear free exactly when that determinant
is reduced of degree equal to the ambient dimension. This module builds the
matrix, evaluates and line-restricts the determinant over prime fields,
tests reducedness probabilistically, derives component degrees from
characters against the stage grading, and issues homogeneity certificates.

f is only defined up to a nonzero scalar (any complement of the scalars in
the product of general linear algebras works), so every comparison between
f and products of relative invariants is an up-to-unit test at random
points, never coefficient-exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .config import Config
from .errors import (DisconnectedQuiver, NonSquare, NotSincere,
                     PrimeTooSmall, QuiverInputError)
from .fields import GF, PrimeField
from .matrix import ExactMatrix, _gf_det
from .multipoly import MultiPoly, sym_det
from .poly import interpolate
from .quiver import (Quiver, check_dim, classify_graph, euler_form,
                     euler_matrix, is_positive, is_sincere, is_tree,
                     rep_dimension, stages, support_pair, tits_form)
from .reps import (Representation, build_c_matrix, coord_offsets,
                   coords_from_rep, hom_ext, is_schur_root, perp_candidates,
                   rep_from_coords, sample_representation)


# -- linear forms and the Saito matrix ----------------------------------------------


@dataclass(frozen=True)
class LinearForm:
    """Integer linear form in the coordinates of the representation space."""

    coeffs: tuple = ()  # ((coord index, integer coefficient), ...)
    const: int = 0

    def evaluate(self, xvec, field):
        acc = field.element(self.const)
        for idx, c in self.coeffs:
            acc = field.add(acc, field.mul(field.element(c), xvec[idx]))
        return acc

    def is_zero(self):
        return not self.coeffs and self.const == 0


class SaitoMatrix:
    """Rows: matrix-unit basis of gl(Q,d) modulo scalars; columns: coordinates.

    Entry (A, j) is the j-th coordinate of the linear vector field induced
    by the basis element A, i.e. of x -> (A_t x_a - x_a A_s)_a. The dropped
    basis element is the last diagonal unit of the last vertex; any other
    complement of the scalars changes the determinant by a nonzero constant.
    """

    def __init__(self, quiver, dim, row_labels, entries):
        self.quiver = quiver
        self.dim = dim
        self.row_labels = row_labels
        self.entries = entries
        self.n = len(entries)
        self._tables = None

    def _fast_tables(self):
        """(coeff, index) tables when every entry is 0 or a single monomial."""
        if self._tables is None:
            n = self.n
            coeff = np.zeros((n, n), dtype=np.int64)
            idx = np.full((n, n), n, dtype=np.int64)  # sentinel: extra zero slot
            simple = True
            for i in range(n):
                for j in range(n):
                    e = self.entries[i][j]
                    if e.const != 0 or len(e.coeffs) > 1:
                        simple = False
                        break
                    if e.coeffs:
                        idx[i, j], coeff[i, j] = e.coeffs[0]
                if not simple:
                    break
            self._tables = (coeff, idx, simple)
        return self._tables

    def numeric_matrix(self, xvec, field) -> ExactMatrix:
        if len(xvec) != self.n:
            raise QuiverInputError("coordinate vector has wrong length")
        if isinstance(field, PrimeField):
            coeff, idx, simple = self._fast_tables()
            if simple:
                x = np.array([int(v) for v in xvec] + [0], dtype=np.int64) % field.p
                return ExactMatrix.from_numpy(field, coeff * x[idx] % field.p)
        rows = [[e.evaluate(xvec, field) for e in row] for row in self.entries]
        return ExactMatrix(field, rows, shape=(self.n, self.n))

    def det_at(self, xvec, field):
        if isinstance(field, PrimeField):
            coeff, idx, simple = self._fast_tables()
            if simple:
                x = np.array([int(v) for v in xvec] + [0], dtype=np.int64) % field.p
                return _gf_det(coeff * x[idx] % field.p, field.p)
        return self.numeric_matrix(xvec, field).det()


def build_saito_matrix(q: Quiver, d) -> SaitoMatrix:
    """Saito matrix of (q, d); square requires q_Q(d) = 1, d sincere."""
    d = check_dim(q, d)
    if not q.is_connected():
        raise DisconnectedQuiver("Saito matrix needs a connected quiver")
    if not is_sincere(d):
        raise NotSincere("dimension vector must be sincere")
    n_rep = rep_dimension(q, d)
    n_pgl = sum(x * x for x in d) - 1
    if n_rep != n_pgl:
        raise NonSquare(
            f"dim Rep = {n_rep} but dim pgl = {n_pgl}; q_Q(d) = {tits_form(q, d)} != 1")
    offs, total = coord_offsets(q, d)
    labels = []
    for vi, v in enumerate(q.vertices):
        for c0 in range(d[vi]):
            for r0 in range(d[vi]):
                labels.append((v, r0, c0))
    labels.pop()  # drop the last diagonal unit of the last vertex
    arrows = q.arrow_indices()
    entries = []
    for (v, r0, c0) in labels:
        vi = q.vertex_index(v)
        row = [{} for _ in range(total)]
        for ai, (s, t) in enumerate(arrows):
            off = offs[ai]
            if t == vi:
                for c in range(d[s]):
                    col = off + c * d[t] + r0
                    src = off + c * d[t] + c0
                    row[col][src] = row[col].get(src, 0) + 1
            if s == vi:
                for r in range(d[t]):
                    col = off + c0 * d[t] + r
                    src = off + r0 * d[t] + r
                    row[col][src] = row[col].get(src, 0) - 1
        entries.append([LinearForm(tuple(sorted((k, v) for k, v in cell.items()
                                                if v != 0)))
                        for cell in row])
    return SaitoMatrix(q, d, tuple(labels), entries)


def evaluate_f(s: SaitoMatrix, point):
    """Exact determinant of the Saito matrix at a representation point."""
    if isinstance(point, Representation):
        if point.quiver != s.quiver or point.dim != s.dim:
            raise QuiverInputError("point does not match the Saito matrix shape")
        xvec = coords_from_rep(point)
        return s.det_at(xvec, point.field)
    raise QuiverInputError("expected a Representation")


def single_coordinate_basis_check(s: SaitoMatrix) -> bool:
    """Every entry is a scalar multiple of one coordinate with no constant,
    and no coordinate repeats within a row."""
    for row in s.entries:
        used = set()
        for e in row:
            if e.const != 0 or len(e.coeffs) > 1:
                return False
            if e.coeffs:
                idx = e.coeffs[0][0]
                if idx in used:
                    return False
                used.add(idx)
    return True


def expand_f_symbolic(s: SaitoMatrix, expand_limit: int = 8) -> MultiPoly:
    """Full symbolic expansion of det; gated to small sizes."""
    if s.n > expand_limit:
        raise ValueError(f"symbolic expansion gated to n <= {expand_limit}")
    nvars = s.n
    grid = []
    for row in s.entries:
        grid.append([])
        for e in row:
            p = MultiPoly.const(nvars, e.const)
            for idx, c in e.coeffs:
                p = p.add(MultiPoly.coordinate(idx, nvars, c))
            grid[-1].append(p)
    return sym_det(grid)


# -- reducedness ---------------------------------------------------------------------


@dataclass(frozen=True)
class ReducednessVerdict:
    value: str          # "reduced" | "not_reduced" | "identically_zero"
    trials: int
    primes: tuple
    seed: int
    witness_prime: int = None
    degree: int = None

    def to_json(self):
        out = {"verdict": self.value, "trials": self.trials,
               "primes": list(self.primes), "seed": self.seed}
        if self.witness_prime is not None:
            out["witness_prime"] = self.witness_prime
        if self.degree is not None:
            out["degree"] = self.degree
        return out


def reducedness_test(s: SaitoMatrix, trials: int = 3, primes=None,
                     seed: int = 12345) -> ReducednessVerdict:
    """Probabilistic reducedness of f via random affine lines over F_p.

    Restrict f to x(t) = a + t b, recover the univariate by interpolation
    at n+1 nodes, and test degree-n squarefreeness. The determinant has
    integer coefficients, so a single squarefree degree-n restriction is a
    sound certificate of reducedness; the negative verdict is the majority
    outcome of all trials. Returns identically_zero when every evaluation
    in every trial vanished.
    """
    if primes is None:
        primes = (2**31 - 1,)
    primes = tuple(primes)
    n = s.n
    rng = random.Random(seed)
    saw_nonzero = False
    for trial in range(trials):
        p = primes[trial % len(primes)]
        if p <= n:
            raise PrimeTooSmall(f"prime {p} <= degree {n}")
        fld = GF(p)
        if n == 0:
            # det of the empty matrix is 1: reduced of degree 0.
            return ReducednessVerdict("reduced", trial + 1, primes, seed,
                                      witness_prime=p, degree=0)
        a = [rng.randrange(p) for _ in range(n)]
        b = [rng.randrange(p) for _ in range(n)]
        if all(x == 0 for x in b):
            b[0] = 1
        vals = []
        for t in range(n + 1):
            xvec = [(ai + t * bi) % p for ai, bi in zip(a, b)]
            vals.append(s.det_at(xvec, fld))
        if all(v == 0 for v in vals):
            continue
        saw_nonzero = True
        poly = interpolate(fld, list(enumerate(vals)))
        if poly.degree == n and poly.is_squarefree():
            return ReducednessVerdict("reduced", trial + 1, primes, seed,
                                      witness_prime=p, degree=n)
    if not saw_nonzero:
        return ReducednessVerdict("identically_zero", trials, primes, seed)
    return ReducednessVerdict("not_reduced", trials, primes, seed)


# -- relative invariants and component degrees ----------------------------------------


def component_degree(q: Quiver, d, m, side: str) -> int:
    """Degree of the relative invariant attached to an orthogonal vector m.

    The character is E m (right side) or -E^t m (left side); pairing it
    against the stage grading h (normalized to min 0) through the dimension
    vector gives the degree: sum_i h(i) d_i chi_i. Shift-invariance of the
    grading is exactly the orthogonality precondition.
    """
    d = check_dim(q, d)
    m = check_dim(q, m)
    if not is_tree(q):
        raise QuiverInputError("component degrees need a tree quiver")
    if side == "right":
        if euler_form(q, d, m) != 0:
            raise QuiverInputError("<d, m> must vanish for a right invariant")
    elif side == "left":
        if euler_form(q, m, d) != 0:
            raise QuiverInputError("<m, d> must vanish for a left invariant")
    else:
        raise QuiverInputError("side must be 'left' or 'right'")
    e = euler_matrix(q)
    nv = q.n_vertices
    if side == "right":
        chi = [sum(e[i][j] * m[j] for j in range(nv)) for i in range(nv)]
    else:
        chi = [-sum(e[j][i] * m[j] for j in range(nv)) for i in range(nv)]
    h = stages(q).h
    return sum(h[v] * d[i] * chi[i] for i, v in enumerate(q.vertices))


def relative_invariant_det(q: Quiver, d, m_rep: Representation, side: str):
    """Evaluator x -> det(c between x and m_rep); degree = component_degree.

    Right side: the point occupies the first slot of the c map; left side
    the second. Squareness is forced by the Euler orthogonality and checked.
    """
    d = check_dim(q, d)
    m = m_rep.dim
    if side == "right":
        if euler_form(q, d, m) != 0:
            raise NonSquare("<d, dim M> must vanish for the right invariant")
    elif side == "left":
        if euler_form(q, m, d) != 0:
            raise NonSquare("<dim M, d> must vanish for the left invariant")
    else:
        raise QuiverInputError("side must be 'left' or 'right'")

    def evaluator(point: Representation):
        pair = (point, m_rep) if side == "right" else (m_rep, point)
        c = build_c_matrix(*pair)
        if c.nrows != c.ncols:
            raise NonSquare("c matrix is not square")
        return c.det()

    return evaluator


def _invariant_value_at_coords(q, d, m_rep, side, xvec, field):
    point = rep_from_coords(q, d, xvec, field)
    pair = (point, m_rep) if side == "right" else (m_rep, point)
    c = build_c_matrix(*pair)
    return c.det()


def _degree_matches(q, d, m_rep, side, expected, field, rng) -> bool:
    """Line-restriction degree probe: interpolate on expected+1 nodes and
    cross-check two extra nodes; also requires a nonzero leading term."""
    _, total = coord_offsets(q, d)
    p = field.p
    a = [rng.randrange(p) for _ in range(total)]
    b = [rng.randrange(p) for _ in range(total)]
    pts = []
    for t in range(expected + 3):
        xvec = [(ai + t * bi) % p for ai, bi in zip(a, b)]
        pts.append((t, _invariant_value_at_coords(q, d, m_rep, side, xvec, field)))
    poly = interpolate(field, pts[:expected + 1])
    if poly.degree != expected:
        return False
    return all(poly.evaluate(t) == v for t, v in pts[expected + 1:])


def degree_sum_check(degrees, subset_size: int, target: int, limit: int = 100000):
    """Index subsets of the given size whose degrees sum to the target."""
    order = sorted(range(len(degrees)), key=lambda i: -degrees[i])
    vals = [degrees[i] for i in order]
    n = len(vals)
    suffix_max = [0] * (n + 1)
    suffix_min = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + vals[i]
    out = []

    def rec(i, chosen, acc):
        if len(out) >= limit:
            return
        if len(chosen) == subset_size:
            if acc == target:
                out.append(tuple(sorted(order[j] for j in chosen)))
            return
        if i >= n:
            return
        need = subset_size - len(chosen)
        if n - i < need:
            return
        if acc + suffix_max[i] < target:
            return
        # smallest achievable: take the `need` smallest remaining (tail of vals)
        if acc + sum(vals[n - need:]) > target:
            return
        rec(i + 1, chosen + [i], acc + vals[i])
        rec(i + 1, chosen, acc)

    rec(0, [], 0)
    return out


def component_degrees_report(q: Quiver, d, config: Config) -> dict:
    """Certified component degrees of the discriminant of (q, d).

    Pipeline: enumerate orthogonal real-root candidates, attach degrees via
    the character/stage formula, sample a generic representation per
    candidate (validated by a line-restriction degree probe), then search
    (#vertices - 1)-subsets whose degrees sum to dim Rep and certify a
    subset by comparing the product of its relative invariants against the
    Saito determinant at shared random points, up to a unit. Non-unique
    certified degree multisets are flagged.
    """
    d = check_dim(q, d)
    report = {"certified": False, "provenance": config.provenance()}
    if not is_sincere(d):
        q, d = support_pair(q, d)
        report["support_restricted"] = True
    if not q.is_connected() or not is_tree(q):
        report["reason"] = "component degrees need a connected tree quiver"
        return report
    if tits_form(q, d) != 1:
        report["reason"] = f"q_Q(d) = {tits_form(q, d)} != 1"
        return report
    field = config.field()
    rng = config.rng()
    n = rep_dimension(q, d)
    k_target = q.n_vertices - 1
    report["dim_rep"] = n
    report["expected_components"] = k_target

    schur = is_schur_root(q, d, config.trials, field, rng)
    if schur.value != "yes":
        report["reason"] = "Schur sampling inconclusive"
        return report
    brick = schur.witness
    saito = build_saito_matrix(q, d)

    from .roots import positive_real_roots
    roots = positive_real_roots(q, config.entry_bound)
    cands = perp_candidates(q, d, config.entry_bound, config.trials, field, rng,
                            roots=roots, brick=brick)

    # Shared evaluation points with f nonzero.
    pts = []
    while len(pts) < 4:
        xvec = [rng.randrange(field.p) for _ in range(n)]
        if saito.det_at(xvec, field) != 0:
            pts.append(xvec)
    fvals = [saito.det_at(x, field) for x in pts]

    for side in ("left", "right"):
        scored = []
        for c in cands:
            if c.side != side:
                continue
            try:
                deg = component_degree(q, d, c.vector, side)
            except QuiverInputError:
                continue
            if deg <= 0:
                continue
            for _ in range(3):
                m_rep = sample_representation(q, c.vector, field, rng)
                if _degree_matches(q, d, m_rep, side, deg, field, rng):
                    vals = [_invariant_value_at_coords(q, d, m_rep, side, x, field)
                            for x in pts]
                    scored.append({"vector": c.vector, "degree": deg,
                                   "values": vals})
                    break
        if len(scored) < k_target:
            continue
        subsets = degree_sum_check([s["degree"] for s in scored], k_target, n)
        certified = []
        for ss in subsets:
            prods = [1] * len(pts)
            for i in ss:
                vals = scored[i]["values"]
                for j in range(len(pts)):
                    prods[j] = prods[j] * vals[j] % field.p
            if any(v == 0 for v in prods):
                continue
            if all(fvals[0] * prods[j] % field.p == fvals[j] * prods[0] % field.p
                   for j in range(1, len(pts))):
                certified.append(ss)
        if certified:
            multisets = {tuple(sorted(scored[i]["degree"] for i in ss))
                         for ss in certified}
            first = certified[0]
            report.update({
                "certified": True,
                "side": side,
                "degrees": sorted(scored[i]["degree"] for i in first),
                "vectors": [list(scored[i]["vector"]) for i in first],
                "subsets_certified": len(certified),
                "unique_multiset": len(multisets) == 1,
                "candidates_considered": len(scored),
            })
            return report
    report["reason"] = "no subset of candidate degrees certified against f"
    return report


# -- homogeneity certificates ----------------------------------------------------------


def euler_homogeneity_witness(q: Quiver, d, split) -> bool:
    """A split d = m + n with <m,n> != <n,m> witnesses an Euler vector field."""
    d = check_dim(q, d)
    m, n = split
    m = check_dim(q, m)
    n = check_dim(q, n)
    if tuple(a + b for a, b in zip(m, n)) != d:
        raise QuiverInputError("split does not sum to d")
    if not (is_positive(m) and is_positive(n)):
        raise QuiverInputError("both split parts must be positive")
    return euler_form(q, m, n) != euler_form(q, n, m)


@dataclass(frozen=True)
class HomogeneityCertificate:
    value: str  # "quasihomogeneous" | "weakly" | "none_found"
    ordering: tuple = None   # part indices, earliest first
    grouping: tuple = None   # (first group, second group) of part indices
    route: str = None        # "concrete" | "tube"
    note: str = None

    def to_json(self):
        out = {"certificate": self.value}
        if self.ordering is not None:
            out["ordering"] = list(self.ordering)
        if self.grouping is not None:
            out["grouping"] = [list(g) for g in self.grouping]
        if self.route:
            out["route"] = self.route
        if self.note:
            out["note"] = self.note
        return out


def _ext_digraph_certificate(ext, route) -> HomogeneityCertificate:
    """From a pairwise ext-nonvanishing table to an ordering or grouping."""
    k = len(ext)
    if any(ext[i][i] for i in range(k)):
        rigid = False
    else:
        rigid = True
    # Topological order of "i must come after j when ext[i][j] != 0".
    order = []
    state = [0] * k
    acyclic = True

    def dfs(i):
        nonlocal acyclic
        state[i] = 1
        for j in range(k):
            if j == i or not ext[i][j]:
                continue
            if state[j] == 1:
                acyclic = False
                return
            if state[j] == 0:
                dfs(j)
                if not acyclic:
                    return
        state[i] = 2
        order.append(i)

    for i in range(k):
        if state[i] == 0:
            dfs(i)
            if not acyclic:
                break
    if acyclic and rigid and route == "concrete":
        return HomogeneityCertificate("quasihomogeneous", ordering=tuple(order),
                                      route=route)
    if acyclic:
        # A sink of the ext digraph has no nonzero ext into the rest.
        for i in range(k):
            if not any(ext[i][j] for j in range(k) if j != i):
                rest = tuple(j for j in range(k) if j != i)
                return HomogeneityCertificate("weakly", grouping=(rest, (i,)),
                                              route=route)
    # Last resort: scan all 2-groupings for ext(G2, G1) = 0.
    for mask in range(1, 2 ** k - 1):
        g2 = [i for i in range(k) if mask >> i & 1]
        g1 = [i for i in range(k) if not mask >> i & 1]
        if not any(ext[b][a] for b in g2 for a in g1):
            return HomogeneityCertificate("weakly", grouping=(tuple(g1), tuple(g2)),
                                          route=route)
    return HomogeneityCertificate("none_found", route=route)


def quasihom_certificate(q: Quiver, d, parts, part_reps=None,
                         config: Config = None) -> HomogeneityCertificate:
    """Quasihomogeneity certificate for a point with the given decomposition.

    With concrete representations for the parts the pairwise extension
    dimensions are computed exactly; an ordering with vanishing ext on
    non-inverted pairs certifies quasihomogeneity and a 2-grouping with
    ext(second, first) = 0 certifies the weak form. Without representations,
    tame regular parts are located inside the exceptional tubes and the tube
    combinatorics decide nonvanishing; that route certifies at most the weak
    form.
    """
    d = check_dim(q, d)
    parts = [check_dim(q, m) for m in parts]
    total = tuple(sum(m[i] for m in parts) for i in range(q.n_vertices))
    if total != d:
        raise QuiverInputError("parts do not sum to d")
    if len(parts) < 2:
        return HomogeneityCertificate("none_found",
                                      note="need at least two parts")
    if part_reps is not None:
        if len(part_reps) != len(parts) or any(
                r.dim != m for r, m in zip(part_reps, parts)):
            raise QuiverInputError("part representations do not match parts")
        k = len(parts)
        ext = [[hom_ext(part_reps[i], part_reps[j]).ext > 0 for j in range(k)]
               for i in range(k)]
        return _ext_digraph_certificate(ext, "concrete")

    # Tube route on dimension vectors.
    from .roots import find_tubes, tube_ext_nonzero
    gc = classify_graph(q)
    if gc.kind != "tame":
        return HomogeneityCertificate(
            "none_found", note="no representations given and quiver not tame")
    tubes = find_tubes(q)
    located = []
    for m in parts:
        hits = []
        for ti, t in enumerate(tubes):
            for slot in range(t.period):
                for length in range(1, t.period):
                    if t.part_dim(slot, length) == m:
                        hits.append((ti, slot, length))
        if len(hits) != 1:
            return HomogeneityCertificate(
                "none_found",
                note=f"part {m} not uniquely a regular brick "
                     f"({len(hits)} tube matches)")
        located.append(hits[0])
    k = len(parts)
    ext = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            ti, si, ri = located[i]
            tj, sj, rj = located[j]
            if ti == tj:
                ext[i][j] = tube_ext_nonzero(tubes[ti], (si, ri), (sj, rj))
    cert = _ext_digraph_certificate(ext, "tube")
    if cert.value == "quasihomogeneous":
        # The earliest part in the ordering has no nonzero ext into the rest.
        first = cert.ordering[0]
        rest = tuple(i for i in cert.ordering[1:])
        cert = HomogeneityCertificate("weakly", grouping=(rest, (first,)),
                                      ordering=cert.ordering, route="tube",
                                      note="tube route certifies the weak form")
    return cert


# -- the top-level verdict ---------------------------------------------------------------


@dataclass(frozen=True)
class LfdReport:
    verdict: str  # "linear_free" | "not_linear_free" | "inconclusive"
    q_value: int = None
    dim_rep: int = None
    degree: int = None
    schur: object = None
    reduced: object = None
    reasons: tuple = ()
    method: tuple = ()
    provenance: dict = dc_field(default_factory=dict)
    component_degrees: tuple = None

    def to_json(self):
        out = {"verdict": self.verdict,
               "q_value": self.q_value,
               "dim_rep": self.dim_rep,
               "degree": self.degree,
               "reasons": list(self.reasons),
               "method": list(self.method),
               "provenance": dict(self.provenance)}
        out["schur"] = self.schur.to_json() if self.schur else None
        out["reduced"] = self.reduced.to_json() if self.reduced else None
        if self.component_degrees is not None:
            out["component_degrees"] = list(self.component_degrees)
        return out


def lfd_verdict(q: Quiver, d, config: Config = None) -> LfdReport:
    """Full decision pipeline: does (q, d) define a linear free divisor?

    Checks, in order: positivity, support restriction for non-sincere d,
    connectedness, the tree obstruction, q_Q(d) = 1 (squareness of the
    Saito matrix), the probabilistic Schur test, and probabilistic
    reducedness of the Saito determinant. The minimal-degeneration
    condition is discharged through reducedness of f, never enumerated;
    reports record that method.
    """
    config = config or Config()
    d0 = check_dim(q, d)
    method = ["minimal_degenerations_via_reducedness"]
    reasons = []
    prov = config.provenance()
    if not is_positive(d0):
        return LfdReport("not_linear_free", reasons=("dimension vector not positive",),
                         provenance=prov)
    if not is_sincere(d0):
        q, d = support_pair(q, d0)
        method.append("support_restriction")
    else:
        d = d0
    if not q.is_connected():
        return LfdReport("not_linear_free",
                         reasons=("support of d is disconnected",),
                         method=tuple(method), provenance=prov)
    qval = tits_form(q, d)
    n = rep_dimension(q, d)
    tree = is_tree(q)
    if not tree:
        reasons.append("quiver has a cycle (not a tree)")
    if qval != 1:
        reasons.append(f"q_Q(d) = {qval} != 1 (Saito matrix not square)")
    if reasons:
        return LfdReport("not_linear_free", q_value=qval, dim_rep=n,
                         reasons=tuple(reasons), method=tuple(method),
                         provenance=prov)
    field = config.field()
    rng = config.rng()
    schur = is_schur_root(q, d, config.trials, field, rng)
    if schur.value != "yes":
        return LfdReport("inconclusive", q_value=qval, dim_rep=n, schur=schur,
                         reasons=("Schur sampling found no brick",),
                         method=tuple(method), provenance=prov)
    s = build_saito_matrix(q, d)
    red = reducedness_test(s, trials=config.trials, primes=(config.prime,),
                           seed=config.seed)
    method.append("reducedness_via_random_line_restriction")
    if red.value == "reduced":
        return LfdReport("linear_free", q_value=qval, dim_rep=n, degree=n,
                         schur=schur, reduced=red, method=tuple(method),
                         provenance=prov)
    reason = ("Saito determinant vanishes identically"
              if red.value == "identically_zero"
              else "Saito determinant is not reduced")
    return LfdReport("not_linear_free", q_value=qval, dim_rep=n, degree=n,
                     schur=schur, reduced=red, reasons=(reason,),
                     method=tuple(method), provenance=prov)
