"""Exact rank computations on the chain complexes.

Everything is organized per weight block: the four operators and the quabla
operator are h-equivariant, so kernels, images, homology quotients and
generalized eigenspaces decompose along weights and the blocks can be
processed independently (optionally in parallel).

Homology groups of interest are H_k(nbar, W) = ker(delta*_k)/im(delta*_{k+1})
computed on Lambda^. nbar (x) W; these are the groups whose induced modules
form BGG resolutions of W.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import (
    ParabolicDecomposition,
    Weight,
    casimir_eigenvalue,
    wt_add,
    wt_sub,
)
from .chains import ChainComplex, ChainMap, get_complex
from .errors import (
    FiniteDimGuardExceeded,
    LeviNotClosed,
    NotCompletelyReducible,
    TruncationTooSmall,
)
from .modules import Module, build_irrep, restrict_adjoint

F0 = Fraction(0)
F1 = Fraction(1)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("SUPERBGG_WORKERS", "1")))
    except ValueError:
        return 1


def _map_blocks(fn, items, workers):
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _block_kernels(args):
    """Worker: (lower block, upper block, quabla block, dim) -> exact bases."""
    lower, upper, quab, dim = args
    ker = linalg.nullspace(lower, ncols=dim) if lower else _std_basis(dim)
    im_cols = []
    if upper and upper[0]:
        cand = [[upper[r][c] for r in range(len(upper))] for c in range(len(upper[0]))]
        nz = [c for c in cand if any(c)]
        im_cols = [nz[i] for i in linalg.independent_columns(nz)]
    out = {"ker": ker, "im": im_cols}
    if quab is not None:
        out["ker_quabla"] = linalg.nullspace(quab, ncols=dim) if quab else _std_basis(dim)
        # generalized zero eigenspace: kernel of quab^e for any e >= block dim
        power = quab
        e = 1
        while e < dim and power:
            power = linalg.mat_mul(power, power)
            e *= 2
        out["gen_zero"] = (linalg.nullspace(power, ncols=dim)
                           if power else _std_basis(dim))
    return out


def _std_basis(dim):
    return [[F1 if i == j else F0 for i in range(dim)] for j in range(dim)]


# ---------------------------------------------------------------------------
# report containers
# ---------------------------------------------------------------------------

@dataclass
class SubspaceBasis:
    """Block-aligned exact column basis of a subspace of a chain degree."""

    space: object
    blocks: dict                 # Weight -> list of dense columns (block coords)

    @property
    def dim(self) -> int:
        return sum(len(cols) for cols in self.blocks.values())

    def weight_dims(self) -> dict:
        return {w: len(cols) for w, cols in self.blocks.items() if cols}

    def global_columns(self) -> list:
        """Columns as sparse dicts over the ambient chain space."""
        out = []
        for w, cols in sorted(self.blocks.items(), key=lambda t: tuple(map(str, t[0]))):
            idxs = self.space.weight_blocks[w]
            for col in cols:
                out.append({idxs[i]: v for i, v in enumerate(col) if v})
        return out


@dataclass
class LDecompositionEntry:
    highest_weight: Weight
    hw_vector_count: int
    irrep_dimension: int | None
    generated_dimension: int


@dataclass
class LDecomposition:
    entries: list
    completely_reducible: bool
    total_dimension: int

    def weight_multiplicities(self) -> dict:
        return {e.highest_weight: e.hw_vector_count for e in self.entries}


@dataclass
class PredicateReport:
    degree: int
    values: dict                 # statement number (1..7) -> bool
    consistent: bool             # degreewise-equivalent pair (1)<->(2) agrees


@dataclass
class HomologyReport:
    degree: int
    dim_ker_boundary: int
    dim_im_boundary_above: int
    homology_dimension: int
    weight_multiplicities: dict
    homology_decomposition: LDecomposition | None = None
    ker_quabla_decomposition: LDecomposition | None = None
    generalized_zero_dimension: int | None = None
    predicates: PredicateReport | None = None


# ---------------------------------------------------------------------------
# Levi modules: subspaces and subquotients carrying the l-action
# ---------------------------------------------------------------------------

class LeviModule:
    """A finite l-module presented by block-aligned vectors in a chain degree.

    `reps` are sparse ambient columns, each supported in a single weight
    block.  `modulo` (optional, per weight) is a list of ambient columns to
    quotient by; the action is reduced modulo that span.
    """

    def __init__(self, cx: ChainComplex, k: int, reps: list, modulo: dict | None = None):
        self.cx = cx
        self.k = k
        self.space = cx.space(k)
        self.reps = reps
        self.modulo = modulo or {}
        self.weights = []
        for col in reps:
            ws = {self.space.weights[i] for i in col}
            assert len(ws) == 1, "representative mixes weight blocks"
            self.weights.append(ws.pop())
        self._solvers: dict = {}
        self._act_cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.reps)

    def members(self, weight: Weight) -> list:
        return [t for t, w in enumerate(self.weights) if w == weight]

    def _solver(self, weight: Weight):
        if weight in self._solvers:
            return self._solvers[weight]
        idxs = self.space.weight_blocks.get(weight, [])
        pos = {g: i for i, g in enumerate(idxs)}
        mod_cols = []
        for col in self.modulo.get(weight, []):
            dense = [F0] * len(idxs)
            for gidx, v in col.items():
                dense[pos[gidx]] = v
            mod_cols.append(dense)
        rep_cols = []
        for t in self.members(weight):
            dense = [F0] * len(idxs)
            for gidx, v in self.reps[t].items():
                dense[pos[gidx]] = v
            rep_cols.append(dense)
        self._solvers[weight] = (idxs, pos, mod_cols, rep_cols, self.members(weight))
        return self._solvers[weight]

    def express(self, weight: Weight, ambient_col: dict) -> dict:
        """Coordinates over this module's basis, reducing mod `modulo`.

        Raises LeviNotClosed when the vector is outside span(modulo + reps)."""
        idxs, pos, mod_cols, rep_cols, members = self._solver(weight)
        dense = [F0] * len(idxs)
        for gidx, v in ambient_col.items():
            if gidx not in pos:
                raise LeviNotClosed("image leaves the expected weight block")
            dense[pos[gidx]] = v
        if not any(dense):
            return {}
        allcols = mod_cols + rep_cols
        if not allcols:
            raise LeviNotClosed("nonzero image in an empty block")
        mat = [[allcols[c][r] for c in range(len(allcols))] for r in range(len(idxs))]
        sol = linalg.solve(mat, dense)
        if sol is None:
            raise LeviNotClosed("subspace is not stable under the Levi action")
        out = {}
        for i, t in enumerate(members):
            v = sol[len(mod_cols) + i]
            if v:
                out[t] = v
        return out

    def act(self, levi_index: int) -> list:
        """Columns of the Levi basis element in this module's coordinates."""
        hit = self._act_cache.get(levi_index)
        if hit is not None:
            return hit
        g = self.cx.algebra
        root = g.root(levi_index)
        cols = []
        for t, col in enumerate(self.reps):
            img: dict = {}
            for gidx, v in col.items():
                elem = self.space.basis[gidx]
                acted = self.cx.act_element({levi_index: F1}, elem)
                for e2, c in acted.items():
                    gi = self.space.index[e2]
                    new = img.get(gi, F0) + v * c
                    if new:
                        img[gi] = new
                    else:
                        del img[gi]
            target_w = wt_add(self.weights[t], root)
            cols.append(self.express(target_w, img) if img else {})
        self._act_cache[levi_index] = cols
        return cols


def full_levi_module(cx: ChainComplex, k: int) -> LeviModule:
    sp = cx.space(k)
    return LeviModule(cx, k, [{i: F1} for i in range(sp.dim)])


def subspace_levi_module(cx: ChainComplex, k: int, sub: SubspaceBasis) -> LeviModule:
    return LeviModule(cx, k, sub.global_columns())


# ---------------------------------------------------------------------------
# decomposition into irreducible l-modules
# ---------------------------------------------------------------------------

def levi_irrep_dimension(p: ParabolicDecomposition, weight: Weight,
                         max_depth: int = 64) -> int | None:
    cache = p._levi_cache.setdefault("irrep_dims", {})
    if weight in cache:
        return cache[weight]
    levi = p.levi_algebra()
    op = p._levi_cache.get("levi_op")
    if op is None:
        from .algebra import build_adjoint_operation
        parent_op = build_adjoint_operation(p.algebra, 1)
        op = restrict_adjoint(parent_op, levi, p.levi_indices)
        p._levi_cache["levi_op"] = op
    try:
        dim = build_irrep(levi, weight, op, max_depth).dim
    except FiniteDimGuardExceeded:
        dim = None
    cache[weight] = dim
    return dim


def decompose_levi(p: ParabolicDecomposition, mod, max_depth: int = 64,
                   cx: ChainComplex | None = None,
                   irrep_builder=None) -> LDecomposition:
    """Highest-weight decomposition of an l-stable space or subquotient.

    `mod` is a LeviModule, or a SubspaceBasis when `cx` names the ambient
    complex.  Highest weight vectors are the joint kernel of the raising
    operators of the Levi simple roots; each generates a submodule by closure
    under the Levi lowering operators.  Complete reducibility is certified
    when the generated submodules span and the abstract irrep dimensions add
    up (any highest-weight module of the right dimension is irreducible).
    `irrep_builder(weight) -> dimension or None` overrides the default cached
    construction of abstract Levi irreps.
    """
    if isinstance(mod, SubspaceBasis):
        if cx is None:
            raise ValueError("pass the ambient ChainComplex for a SubspaceBasis")
        mod = subspace_levi_module(cx, mod.space.degree, mod)
    if irrep_builder is None:
        def irrep_builder(weight):
            return levi_irrep_dimension(p, weight, max_depth)
    g = p.algebra
    levi = p.levi_algebra()
    raise_idx = [g.basis_index_of_root(a) for a in
                 (g.simple_roots[i] for i in p.levi_simple_roots)]
    lower_idx = [g.basis_index_of_root(tuple(-c for c in a)) for a in
                 (g.simple_roots[i] for i in p.levi_simple_roots)]

    raise_cols = {i: mod.act(i) for i in raise_idx}
    lower_cols = {i: mod.act(i) for i in lower_idx}

    hw_vectors = []   # (weight, coordinate dict over mod basis)
    weights_present = sorted(set(mod.weights), key=lambda w: tuple(map(str, w)))
    for w in weights_present:
        members = mod.members(w)
        rows = []
        for i in raise_idx:
            cols = raise_cols[i]
            targets = sorted({t for m in members for t in cols[m]})
            tpos = {t: r for r, t in enumerate(targets)}
            block = linalg.zeros(len(targets), len(members))
            for cj, m in enumerate(members):
                for t, v in cols[m].items():
                    block[tpos[t]][cj] = v
            rows.extend(block)
        if rows:
            kernel = linalg.nullspace(rows, ncols=len(members))
        else:
            kernel = _std_basis(len(members))
        for vec in kernel:
            hw_vectors.append((w, {members[i]: v for i, v in enumerate(vec) if v}))

    by_weight: dict = {}
    for w, vec in hw_vectors:
        by_weight.setdefault(w, []).append(vec)

    entries = []
    union_span: list = []
    total_generated = 0
    for w in sorted(by_weight, key=lambda t: tuple(map(str, t))):
        vecs = by_weight[w]
        gen = _lowering_closure(mod, lower_cols, vecs)
        entries.append(LDecompositionEntry(
            highest_weight=w,
            hw_vector_count=len(vecs),
            irrep_dimension=irrep_builder(w),
            generated_dimension=len(gen),
        ))
        union_span.extend(gen)
    if union_span:
        keep = linalg.independent_columns(union_span)
        union_dim = len(keep)
    else:
        union_dim = 0
    dim_sum = sum(
        e.hw_vector_count * e.irrep_dimension
        for e in entries if e.irrep_dimension is not None
    )
    unknown = any(e.irrep_dimension is None for e in entries)
    cr = (not unknown) and union_dim == mod.dim and dim_sum == mod.dim
    return LDecomposition(entries=entries, completely_reducible=cr,
                          total_dimension=mod.dim)


def _lowering_closure(mod: LeviModule, lower_cols: dict, seeds: list) -> list:
    """Basis (dense coordinate vectors) of the span closed under lowering."""
    dim = mod.dim
    basis_mat: list = []
    pivots: dict = {}

    def reduce_add(vec: list) -> bool:
        v = vec[:]
        for piv, row in pivots.items():
            if v[piv]:
                f = v[piv]
                for i in range(dim):
                    v[i] -= f * row[i]
        lead = next((i for i in range(dim) if v[i]), None)
        if lead is None:
            return False
        inv = F1 / v[lead]
        v = [x * inv for x in v]
        pivots[lead] = v
        basis_mat.append(v)
        return True

    frontier = []
    for s in seeds:
        dense = [F0] * dim
        for t, c in s.items():
            dense[t] = c
        if reduce_add(dense):
            frontier.append(dense)
    while frontier:
        nxt = []
        for vec in frontier:
            for i, cols in lower_cols.items():
                img = [F0] * dim
                nz = False
                for t, c in enumerate(vec):
                    if c:
                        for r, v in cols[t].items():
                            img[r] += c * v
                            nz = True
                if nz and reduce_add(img):
                    nxt.append(img)
        frontier = nxt
    return basis_mat


# ---------------------------------------------------------------------------
# the per-scenario analysis object
# ---------------------------------------------------------------------------

class KostantAnalysis:
    """All degree-wise data for one (parabolic, module) pair on the nbar side."""

    def __init__(self, p: ParabolicDecomposition, module: Module, k_max: int,
                 workers: int | None = None):
        self.parabolic = p
        self.module = module
        self.k_max = k_max
        self.workers = default_workers() if workers is None else workers
        self.cx = get_complex(p, module, "nbar")
        self._blockdata: dict = {}
        self._homology: dict = {}
        self._decomp: dict = {}
        self._kerq_decomp: dict = {}
        self._quabla: dict = {}

    # -- raw block data -------------------------------------------------------

    def quabla_map(self, k: int) -> ChainMap:
        if k not in self._quabla:
            self._quabla[k] = self.cx.quabla(k, "direct")
        return self._quabla[k]

    def block_data(self, k: int, with_quabla: bool = True) -> dict:
        key = (k, with_quabla)
        if key in self._blockdata:
            return self._blockdata[key]
        sp = self.cx.space(k)
        lower = self.cx.lower(k)
        upper = self.cx.lower(k + 1)
        quab = self.quabla_map(k) if with_quabla else None
        weights = sorted(sp.weight_blocks, key=lambda w: tuple(map(str, w)))
        jobs = []
        for w in weights:
            dim = len(sp.weight_blocks[w])
            lb = lower.block(w)
            ub = upper.block(w)
            qb = quab.block(w) if quab is not None else None
            jobs.append((lb, ub, qb, dim))
        results = _map_blocks(_block_kernels, jobs, self.workers)
        data = dict(zip(weights, results))
        self._blockdata[key] = data
        return data

    # -- homology ---------------------------------------------------------------

    def homology(self, k: int) -> HomologyReport:
        if k in self._homology:
            return self._homology[k]
        data = self.block_data(k)
        dim_ker = sum(len(d["ker"]) for d in data.values())
        dim_im = sum(len(d["im"]) for d in data.values())
        mult = {}
        for w, d in data.items():
            h = len(d["ker"]) - len(d["im"])
            assert h >= 0
            if h:
                mult[w] = h
        rep = HomologyReport(
            degree=k,
            dim_ker_boundary=dim_ker,
            dim_im_boundary_above=dim_im,
            homology_dimension=dim_ker - dim_im,
            weight_multiplicities=mult,
        )
        self._homology[k] = rep
        return rep

    def homology_quotient_module(self, k: int) -> LeviModule:
        """Deterministic complement of im inside ker, with reduced l-action."""
        data = self.block_data(k)
        sp = self.cx.space(k)
        reps, modulo = [], {}
        for w in sorted(data, key=lambda t: tuple(map(str, t))):
            d = data[w]
            idxs = sp.weight_blocks[w]
            im = d["im"]
            modulo[w] = [
                {idxs[i]: v for i, v in enumerate(col) if v} for col in im
            ]
            chosen = linalg.independent_columns(im + d["ker"])
            comp = [d["ker"][i - len(im)] for i in chosen if i >= len(im)]
            for col in comp:
                reps.append({idxs[i]: v for i, v in enumerate(col) if v})
        return LeviModule(self.cx, k, reps, modulo)

    def homology_decomposition(self, k: int) -> LDecomposition:
        if k not in self._decomp:
            self._decomp[k] = decompose_levi(
                self.parabolic, self.homology_quotient_module(k))
        return self._decomp[k]

    # -- quabla kernels -----------------------------------------------------------

    def ker_quabla(self, k: int) -> SubspaceBasis:
        data = self.block_data(k)
        return SubspaceBasis(self.cx.space(k), {
            w: d["ker_quabla"] for w, d in data.items() if d.get("ker_quabla")
        })

    def generalized_zero(self, k: int) -> SubspaceBasis:
        data = self.block_data(k)
        return SubspaceBasis(self.cx.space(k), {
            w: d["gen_zero"] for w, d in data.items() if d.get("gen_zero")
        })

    def ker_quabla_decomposition(self, k: int) -> LDecomposition:
        if k not in self._kerq_decomp:
            self._kerq_decomp[k] = decompose_levi(
                self.parabolic,
                subspace_levi_module(self.cx, k, self.ker_quabla(k)))
        return self._kerq_decomp[k]

    # -- predicates ---------------------------------------------------------------

    def predicates(self, k: int) -> PredicateReport:
        """The seven disjointness statements sliced at degree k.

        Only the pair (1)<->(2) is equivalent degree by degree; the seven are
        equivalent as statements about all degrees at once, which is what
        predicate_summary checks over the built window.
        """
        cx = self.cx
        sp = cx.space(k)
        data = self.block_data(k)
        lower_k = cx.lower(k)
        raise_k = cx.raise_(k)
        below = cx.raise_(k - 1) if k > 0 else None
        vals = {i: True for i in range(1, 8)}
        for w in sorted(sp.weight_blocks, key=lambda t: tuple(map(str, t))):
            idxs = sp.weight_blocks[w]
            d = data[w]
            kerq = d["ker_quabla"]
            gz = d["gen_zero"]
            im_up = d["im"]
            ker_low = d["ker"]
            lb = lower_k.block(w)
            rb = raise_k.block(w)
            ker_raise = linalg.nullspace(rb, ncols=len(idxs)) if rb else _std_basis(len(idxs))
            im_below = []
            if below is not None:
                bb = below.block(w)
                if bb and bb[0]:
                    cand = [[bb[r][c] for r in range(len(bb))]
                            for c in range(len(bb[0]))]
                    nz = [c for c in cand if any(c)]
                    im_below = [nz[i] for i in linalg.independent_columns(nz)]
            if linalg.intersect_columnspaces(im_up, kerq):
                vals[1] = False
            if linalg.intersect_columnspaces(im_up, gz):
                vals[2] = False
            for col in gz:
                img = linalg.mat_vec(lb, col) if lb else []
                if any(img):
                    vals[3] = False
                    break
            h_dim = len(ker_low) - len(im_up)
            if h_dim != len(gz):
                vals[4] = False
            if linalg.intersect_columnspaces(im_below, kerq):
                vals[5] = False
            coh_dim = len(ker_raise) - len(im_below)
            if coh_dim != len(gz):
                vals[6] = False
            if linalg.intersect_columnspaces(im_up, ker_raise):
                vals[7] = False
            if linalg.intersect_columnspaces(im_below, ker_low):
                vals[7] = False
        return PredicateReport(degree=k, values=vals,
                               consistent=(vals[1] == vals[2]))

    def predicate_summary(self) -> dict:
        """Global (window) values of the seven statements and their agreement."""
        global_vals = {i: True for i in range(1, 8)}
        per_degree = []
        for k in range(self.k_max):
            rep = self.predicates(k)
            per_degree.append(rep)
            for i in range(1, 8):
                global_vals[i] = global_vals[i] and rep.values[i]
        consistent = len(set(global_vals.values())) == 1
        return {"per_degree": per_degree, "global": global_vals,
                "consistent": consistent}

    # -- Casimir matching and Euler characteristic ----------------------------------

    def casimir_match(self, k: int) -> list:
        """Levi highest weights mu in C_k with C2(mu) = C2(lambda)."""
        g = self.parabolic.algebra
        lam = self.module.highest_weight
        target = casimir_eigenvalue(g, lam)
        full = full_levi_module(self.cx, k)
        dec = decompose_levi_hw_only(self.parabolic, full)
        return [w for w in dec if casimir_eigenvalue(g, w) == target]

    def euler_check(self, mu: Weight) -> bool:
        g = self.parabolic.algebra
        bound = _occurrence_bound(g, self.module, self.cx, mu)
        if bound is None:
            return True      # mu never occurs; both sides are zero
        if bound > self.k_max:
            raise TruncationTooSmall(
                f"weight {mu} may occur up to degree {bound} > k_max {self.k_max}")
        lhs = rhs = 0
        for k in range(bound + 1):
            sign = -1 if k % 2 else 1
            lhs += sign * len(self.cx.space(k).weight_blocks.get(mu, []))
            rep = self.homology(k)
            rhs += sign * rep.weight_multiplicities.get(mu, 0)
        return lhs == rhs


def decompose_levi_hw_only(p: ParabolicDecomposition, mod: LeviModule) -> dict:
    """Highest weights with multiplicities only (no irrep builds)."""
    g = p.algebra
    raise_idx = [g.basis_index_of_root(g.simple_roots[i]) for i in p.levi_simple_roots]
    raise_cols = {i: mod.act(i) for i in raise_idx}
    out: dict = {}
    for w in sorted(set(mod.weights), key=lambda t: tuple(map(str, t))):
        members = mod.members(w)
        rows = []
        for i in raise_idx:
            cols = raise_cols[i]
            targets = sorted({t for m in members for t in cols[m]})
            tpos = {t: r for r, t in enumerate(targets)}
            block = linalg.zeros(len(targets), len(members))
            for cj, m in enumerate(members):
                for t, v in cols[m].items():
                    block[tpos[t]][cj] = v
            rows.extend(block)
        count = (len(members) - len(linalg.rref(rows)[1])) if rows else len(members)
        if count:
            out[w] = count
    return out


def _occurrence_bound(g, module, cx, mu) -> int | None:
    """Largest degree where weight mu can occur, or None if never."""
    best = None
    for w in set(module.weights):
        diff = wt_sub(w, mu)
        coords = g.simple_coordinates(diff)
        if coords is None or any(c < 0 for c in coords):
            continue
        h = sum(coords)
        if h == int(h) and h >= 0:
            best = max(best or 0, int(h))
    return best


# ---------------------------------------------------------------------------
# functional surface
# ---------------------------------------------------------------------------

_ANALYSES: dict = {}


def get_analysis(p: ParabolicDecomposition, module: Module, k_max: int = 4,
                 workers: int | None = None) -> KostantAnalysis:
    key = (id(p), id(module))
    hit = _ANALYSES.get(key)
    if hit is None or hit[0].k_max < k_max:
        hit = (KostantAnalysis(p, module, k_max, workers), p, module)
        _ANALYSES[key] = hit
    return hit[0]


def homology_group(p: ParabolicDecomposition, module: Module, k: int,
                   k_max: int | None = None, full: bool = False) -> HomologyReport:
    """HomologyReport for degree k; with full=True also the quabla kernel
    decomposition, the generalized zero eigenspace and the predicate slice."""
    an = get_analysis(p, module, max(k + 1, k_max or 0))
    rep = an.homology(k)
    if rep.homology_decomposition is None:
        rep.homology_decomposition = an.homology_decomposition(k)
    if full:
        rep.ker_quabla_decomposition = an.ker_quabla_decomposition(k)
        rep.generalized_zero_dimension = an.generalized_zero(k).dim
        rep.predicates = an.predicates(k)
    return rep


def ker_quabla(p: ParabolicDecomposition, module: Module, k: int) -> SubspaceBasis:
    return get_analysis(p, module, max(k + 1, 1)).ker_quabla(k)


def generalized_zero(p: ParabolicDecomposition, module: Module, k: int) -> SubspaceBasis:
    return get_analysis(p, module, max(k + 1, 1)).generalized_zero(k)


def disjointness_predicates(p: ParabolicDecomposition, module: Module,
                            k: int) -> PredicateReport:
    return get_analysis(p, module, max(k + 1, 1)).predicates(k)


def multiplicity_criterion(p: ParabolicDecomposition, module: Module,
                           k_max: int) -> tuple:
    """Consecutive-degree multiplicity bound on ker quabla: no irreducible
    Levi constituent may appear with multiplicity product above one in two
    adjacent degrees.  Returns (holds, witness)."""
    an = get_analysis(p, module, k_max)
    decs = []
    for k in range(k_max + 1):
        dec = an.ker_quabla_decomposition(k)
        if not dec.completely_reducible:
            raise NotCompletelyReducible(
                f"ker quabla at degree {k} is not completely reducible")
        decs.append(dec.weight_multiplicities())
    for k in range(len(decs) - 1):
        for w, m in decs[k].items():
            m2 = decs[k + 1].get(w, 0)
            if m * m2 > 1:
                return False, (k, w)
    return True, None


def casimir_match(p: ParabolicDecomposition, module: Module, k: int) -> list:
    return get_analysis(p, module, max(k + 1, 1)).casimir_match(k)


def euler_check(p: ParabolicDecomposition, module: Module, mu: Weight,
                k_max: int = 4) -> bool:
    return get_analysis(p, module, k_max).euler_check(mu)
