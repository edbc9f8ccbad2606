"""Matrix realizations of gl(m|n) and osp(m|2n) over exact rationals.

An algebra is a list of labeled homogeneous basis elements, each realized as
a sparse matrix on the natural module C^(m|n) resp. C^(m|2n).  The Cartan
subalgebra is diagonal, every non-Cartan basis element spans a root space,
and the invariant form is C * str(XY).  All structure constants, form values
and dual bases are Fractions; nothing here ever touches floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import linalg
from .errors import DegenerateForm, PreconditionViolated, UnsupportedAlgebra

F0 = Fraction(0)
F1 = Fraction(1)

Weight = tuple  # tuple of Fractions, length r+s


# ---------------------------------------------------------------------------
# weight helpers
# ---------------------------------------------------------------------------

def wt(*coords) -> Weight:
    return tuple(Fraction(c) for c in coords)


def wt_zero(length: int) -> Weight:
    return (F0,) * length


def wt_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wt_sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wt_neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wt_scale(a: Weight, c) -> Weight:
    c = Fraction(c)
    return tuple(c * x for x in a)


def wt_str(a: Weight, r: int) -> str:
    eps = ",".join(str(x) for x in a[:r])
    dlt = ",".join(str(x) for x in a[r:])
    return f"{eps}|{dlt}"


# ---------------------------------------------------------------------------
# basis elements and the algebra container
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BasisElement:
    label: str
    parity: int            # 0 even, 1 odd
    root: Weight           # zero weight for Cartan elements
    matrix: dict           # {(row, col): Fraction} on the natural module
    is_cartan: bool = False


def _mat_mul_sparse(a: dict, b: dict, dim: int) -> dict:
    by_row = {}
    for (i, j), v in b.items():
        by_row.setdefault(i, []).append((j, v))
    out = {}
    for (i, k), u in a.items():
        for j, v in by_row.get(k, ()):
            key = (i, j)
            new = out.get(key, F0) + u * v
            if new:
                out[key] = new
            else:
                del out[key]
    return out


@dataclass
class LieSuperalgebra:
    """A basic classical matrix Lie superalgebra (or a subalgebra of one)."""

    kind: str                      # 'gl' or 'osp' (subalgebras keep the parent kind)
    m: int
    n: int
    r: int                         # number of epsilon coordinates
    s: int                         # number of delta coordinates
    basis: list
    simple_roots: list             # Weights, distinguished system
    form_normalization: Fraction
    nat_parity: list               # parity of each natural-module basis vector
    nat_weight: list               # weight of each natural-module basis vector
    coord_index: list              # natural index realizing each unit coordinate
    name: str = ""
    bracket_table: dict = field(default_factory=dict, repr=False)
    gram: list = field(default_factory=list, repr=False)
    _expand_cache: dict = field(default_factory=dict, repr=False)
    _hform: list = field(default_factory=list, repr=False)
    _coord_cache: dict = field(default_factory=dict, repr=False)

    # -- basic queries ------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def nat_dim(self) -> int:
        return len(self.nat_parity)

    @property
    def rank(self) -> int:
        return self.r + self.s

    @property
    def cartan(self) -> list:
        return [i for i, b in enumerate(self.basis) if b.is_cartan]

    def parity(self, i: int) -> int:
        return self.basis[i].parity

    def root(self, i: int) -> Weight:
        return self.basis[i].root

    def basis_index_of_root(self, root: Weight) -> int:
        for i, b in enumerate(self.basis):
            if not b.is_cartan and b.root == root:
                return i
        raise KeyError(f"no root vector with root {root}")

    # -- structure ----------------------------------------------------------

    def bracket(self, i: int, j: int) -> dict:
        """[A_i, A_j] expanded in the basis, as {k: Fraction}."""
        key = (i, j)
        hit = self.bracket_table.get(key)
        if hit is not None:
            return hit
        bi, bj = self.basis[i], self.basis[j]
        ab = _mat_mul_sparse(bi.matrix, bj.matrix, self.nat_dim)
        ba = _mat_mul_sparse(bj.matrix, bi.matrix, self.nat_dim)
        sign = -F1 if (bi.parity and bj.parity) else F1
        comm = dict(ab)
        for k, v in ba.items():
            new = comm.get(k, F0) - sign * v
            if new:
                comm[k] = new
            else:
                comm.pop(k, None)
        res = self.expand(comm)
        self.bracket_table[key] = res
        return res

    def bracket_vec(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, ci in x.items():
            for j, cj in y.items():
                linalg.vec_iadd(out, self.bracket(i, j), ci * cj)
        return out

    def expand(self, matrix: dict) -> dict:
        """Expand a natural-module matrix in the algebra basis exactly."""
        if not matrix:
            return {}
        if not self._expand_cache:
            self._build_expander()
        sel, inv = self._expand_cache["sel"], self._expand_cache["inv"]
        vec = [matrix.get(e, F0) for e in sel]
        coeffs = linalg.mat_vec(inv, vec)
        # verify the reconstruction: the input must lie in the algebra span
        recon: dict = {}
        for i, c in enumerate(coeffs):
            if c:
                for e, v in self.basis[i].matrix.items():
                    new = recon.get(e, F0) + c * v
                    if new:
                        recon[e] = new
                    else:
                        del recon[e]
        if recon != matrix:
            raise ValueError("matrix does not lie in the algebra span")
        return {i: c for i, c in enumerate(coeffs) if c}

    def _build_expander(self):
        entries = sorted({e for b in self.basis for e in b.matrix})
        mat = [[b.matrix.get(entry, F0) for b in self.basis] for entry in entries]
        _, row_pivots = linalg.rref(linalg.transpose(mat))
        if len(row_pivots) != self.dim:
            raise AssertionError("basis matrices are linearly dependent")
        sel = [entries[i] for i in row_pivots]
        sub = [mat[i] for i in row_pivots]
        self._expand_cache = {"sel": sel, "inv": linalg.inverse(sub)}

    # -- weights and the form -----------------------------------------------

    def eval_weight(self, weight: Weight, cartan_vec: dict) -> Fraction:
        """weight(H) for H given as a coefficient dict over the basis."""
        val = F0
        for i, c in cartan_vec.items():
            b = self.basis[i]
            if not b.is_cartan:
                if b.root != wt_zero(self.rank):
                    raise ValueError("element has non-Cartan components")
                continue
            for coord, p in enumerate(self.coord_index):
                w = weight[coord]
                if w:
                    val += c * w * b.matrix.get((p, p), F0)
        return val

    def form(self, x: dict, y: dict) -> Fraction:
        val = F0
        for i, ci in x.items():
            gi = self.gram[i]
            for j, cj in y.items():
                if gi[j]:
                    val += ci * cj * gi[j]
        return val

    def weight_form(self, a: Weight, b: Weight) -> Fraction:
        """Form on h* induced by the invariant form on h."""
        if not self._hform:
            hidx = self.cartan
            gram_h = [[self.gram[i][j] for j in hidx] for i in hidx]
            coords = []
            for coord in range(self.rank):
                p = self.coord_index[coord]
                coords.append([self.basis[i].matrix.get((p, p), F0) for i in hidx])
            # hform[c1][c2] = e_c1(t_{e_c2})
            hform = []
            for c1 in range(self.rank):
                row = []
                for c2 in range(self.rank):
                    tvec = linalg.solve(gram_h, coords[c2])
                    row.append(sum(x * y for x, y in zip(coords[c1], tvec)))
                hform.append(row)
            self._hform = hform
        return sum(
            (a[i] * b[j] * self._hform[i][j]
             for i in range(self.rank) for j in range(self.rank)
             if a[i] and b[j] and self._hform[i][j]),
            F0,
        )

    # -- roots --------------------------------------------------------------

    def simple_coordinates(self, weight: Weight):
        """Coefficients of a weight in the simple-root basis, or None."""
        hit = self._coord_cache.get(weight, False)
        if hit is not False:
            return hit
        mat = [[sr[c] for sr in self.simple_roots] for c in range(self.rank)]
        sol = linalg.solve(mat, list(weight))
        self._coord_cache[weight] = sol
        return sol

    def is_positive_root(self, root: Weight) -> bool:
        if root == wt_zero(self.rank):
            return False
        coords = self.simple_coordinates(root)
        if coords is None:
            return False
        return all(c >= 0 for c in coords)

    def height(self, weight: Weight):
        coords = self.simple_coordinates(weight)
        if coords is None:
            return None
        return sum(coords)

    def positive_root_indices(self) -> list:
        return [
            i for i, b in enumerate(self.basis)
            if not b.is_cartan and self.is_positive_root(b.root)
        ]

    @property
    def rho(self) -> Weight:
        acc = wt_zero(self.rank)
        for i in self.positive_root_indices():
            b = self.basis[i]
            sgn = -F1 if b.parity else F1
            acc = wt_add(acc, wt_scale(b.root, Fraction(sgn, 2)))
        return acc

    def simple_vector_indices(self) -> tuple[list, list]:
        """Basis indices of the positive/negative simple root vectors."""
        pos = [self.basis_index_of_root(a) for a in self.simple_roots]
        neg = [self.basis_index_of_root(wt_neg(a)) for a in self.simple_roots]
        return pos, neg

    # -- derived subalgebras --------------------------------------------------

    def subalgebra(self, indices: list, simple_roots: list, name: str) -> "LieSuperalgebra":
        """Subalgebra spanned by the given basis indices (must be closed)."""
        index_map = {old: new for new, old in enumerate(indices)}
        sub = LieSuperalgebra(
            kind=self.kind,
            m=self.m,
            n=self.n,
            r=self.r,
            s=self.s,
            basis=[self.basis[i] for i in indices],
            simple_roots=list(simple_roots),
            form_normalization=self.form_normalization,
            nat_parity=self.nat_parity,
            nat_weight=self.nat_weight,
            coord_index=self.coord_index,
            name=name,
        )
        sub.gram = [[self.gram[i][j] for j in indices] for i in indices]
        for (a, b) in itertools.product(range(len(indices)), repeat=2):
            bk = self.bracket(indices[a], indices[b])
            try:
                sub.bracket_table[(a, b)] = {index_map[k]: v for k, v in bk.items()}
            except KeyError:
                raise ValueError(f"{name}: basis subset is not bracket-closed")
        return sub


def casimir_eigenvalue(g: LieSuperalgebra, lam: Weight) -> Fraction:
    """Value (lam, lam + 2 rho) of the quadratic Casimir on highest weight lam."""
    if len(lam) != g.rank:
        raise PreconditionViolated(f"weight length {len(lam)} != rank {g.rank}")
    return g.weight_form(lam, wt_add(lam, wt_scale(g.rho, 2)))


def dual_basis_in(g: LieSuperalgebra, of_indices: list, in_indices: list) -> list:
    """For each basis element xi_a (a over of_indices) the vector xi_a^# in
    the span of in_indices with (xi_a^#, xi_b) = delta_ab exactly."""
    if len(of_indices) != len(in_indices):
        raise ValueError("pairing requires equidimensional spaces")
    # row a of inverse(gram) gives coefficients with sum_i c_i (A_in_i, A_of_b) = delta_ab
    gram = [[g.gram[i][j] for j in of_indices] for i in in_indices]
    inv = linalg.inverse(gram)
    return [
        {in_indices[i]: inv[a][i] for i in range(len(in_indices)) if inv[a][i]}
        for a in range(len(of_indices))
    ]


# ---------------------------------------------------------------------------
# construction of gl(m|n)
# ---------------------------------------------------------------------------

def _build_gl(m: int, n: int, C: Fraction, strict: bool = True) -> LieSuperalgebra:
    if m == n and strict:
        raise DegenerateForm("supertrace form of gl(n|n) kills the identity")
    d = m + n
    nat_parity = [0] * m + [1] * n
    rank = m + n
    nat_weight = []
    for i in range(d):
        w = [F0] * rank
        w[i] = F1
        nat_weight.append(tuple(w))
    coord_index = list(range(d))

    basis = []
    for i in range(d):
        lbl = f"E{i + 1}{i + 1}"
        basis.append(BasisElement(lbl, 0, wt_zero(rank), {(i, i): F1}, True))
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            root = wt_sub(nat_weight[i], nat_weight[j])
            par = (nat_parity[i] + nat_parity[j]) % 2
            basis.append(BasisElement(f"E{i + 1}{j + 1}", par, root, {(i, j): F1}))

    simple = []
    for i in range(d - 1):
        simple.append(wt_sub(nat_weight[i], nat_weight[i + 1]))

    g = LieSuperalgebra(
        kind="gl", m=m, n=n, r=m, s=n,
        basis=basis, simple_roots=simple,
        form_normalization=C,
        nat_parity=nat_parity, nat_weight=nat_weight, coord_index=coord_index,
        name=f"gl({m}|{n})",
    )
    _finish(g, C)
    return g


# ---------------------------------------------------------------------------
# construction of osp(m|2n)
# ---------------------------------------------------------------------------

def _build_osp(m: int, n: int, C: Fraction) -> LieSuperalgebra:
    if m < 1:
        raise UnsupportedAlgebra("osp requires m >= 1")
    d = m // 2
    odd_m = m % 2 == 1
    rank = d + n
    # natural basis order: e_1+..e_d+, e_1-..e_d-, [e_0], f_1+..f_n+, f_1-..f_n-
    nat_parity, nat_weight, pair = [], [], {}
    def unit(c, sgn=1):
        w = [F0] * rank
        w[c] = Fraction(sgn)
        return tuple(w)

    for i in range(d):
        nat_parity.append(0)
        nat_weight.append(unit(i))
    for i in range(d):
        nat_parity.append(0)
        nat_weight.append(unit(i, -1))
    if odd_m:
        nat_parity.append(0)
        nat_weight.append(wt_zero(rank))
    for j in range(n):
        nat_parity.append(1)
        nat_weight.append(unit(d + j))
    for j in range(n):
        nat_parity.append(1)
        nat_weight.append(unit(d + j, -1))
    N = len(nat_parity)
    e0 = 2 * d if odd_m else None
    fplus = 2 * d + (1 if odd_m else 0)

    # bar(p): the index paired with p by the form; B[p][bar(p)] nonzero
    bar = {}
    bval = {}
    for i in range(d):
        bar[i], bar[d + i] = d + i, i
        bval[i] = F1
        bval[d + i] = F1
    if odd_m:
        bar[e0] = e0
        bval[e0] = F1
    for j in range(n):
        p, q = fplus + j, fplus + n + j
        bar[p], bar[q] = q, p
        bval[p] = F1      # B(f_j+, f_j-) = 1
        bval[q] = -F1     # B(f_j-, f_j+) = -1

    coord_index = list(range(d)) + [fplus + j for j in range(n)]

    basis = []
    for i in range(d):
        basis.append(BasisElement(
            f"H{i + 1}", 0, wt_zero(rank), {(i, i): F1, (d + i, d + i): -F1}, True))
    for j in range(n):
        basis.append(BasisElement(
            f"K{j + 1}", 0, wt_zero(rank),
            {(fplus + j, fplus + j): F1, (fplus + n + j, fplus + n + j): -F1}, True))

    # root vectors: solve the osp condition inside each nonzero weight space
    by_weight = {}
    for p in range(N):
        for q in range(N):
            w = wt_sub(nat_weight[p], nat_weight[q])
            if w == wt_zero(rank):
                continue
            by_weight.setdefault(w, []).append((p, q))
    for w in sorted(by_weight, key=lambda t: tuple(map(str, t))):
        units = by_weight[w]
        par = {(nat_parity[p] + nat_parity[q]) % 2 for (p, q) in units}
        assert len(par) == 1, "weight space with mixed parity"
        xpar = par.pop()
        rows = []
        for q in range(N):
            for r in range(N):
                row = []
                for (p, pq) in units:
                    lhs = bval[bar[r]] if (bar[r], q) == (p, pq) else F0
                    sgn = -F1 if (xpar and nat_parity[q]) else F1
                    rhs = bval[q] if (bar[q], r) == (p, pq) else F0
                    row.append(lhs + sgn * rhs)
                if any(row):
                    rows.append(row)
        kernel = linalg.nullspace(rows, ncols=len(units)) if rows else [
            [F1 if i == j else F0 for i in range(len(units))] for j in range(len(units))
        ]
        for vecnum, vec in enumerate(kernel):
            dens = [x.denominator for x in vec if x]
            scale = Fraction(lcm(*dens)) if dens else F1
            mat = {units[i]: vec[i] * scale for i in range(len(units)) if vec[i]}
            suffix = "" if len(kernel) == 1 else f"_{vecnum}"
            lbl = "X[" + ",".join(str(c) for c in w) + "]" + suffix
            basis.append(BasisElement(lbl, xpar, w, mat))

    # distinguished simple system, eq-choicepr style
    simple = []
    def unit_w(c, sgn=1):
        w = [F0] * rank
        w[c] = Fraction(sgn)
        return tuple(w)
    for i in range(d - 1):
        simple.append(wt_sub(unit_w(i), unit_w(i + 1)))
    if d >= 1 and n >= 1:
        simple.append(wt_sub(unit_w(d - 1), unit_w(d)))
    for j in range(n - 1):
        simple.append(wt_sub(unit_w(d + j), unit_w(d + j + 1)))
    if n >= 1:
        simple.append(unit_w(d + n - 1) if odd_m else wt_scale(unit_w(d + n - 1), 2))

    g = LieSuperalgebra(
        kind="osp", m=m, n=n, r=d, s=n,
        basis=basis, simple_roots=simple,
        form_normalization=C,
        nat_parity=nat_parity, nat_weight=nat_weight, coord_index=coord_index,
        name=f"osp({m}|{2 * n})",
    )
    _finish(g, C)
    return g


def _finish(g: LieSuperalgebra, C: Fraction):
    """Gram matrix and sanity checks shared by both constructions."""
    dim = g.dim
    nd = g.nat_dim
    gram = linalg.zeros(dim, dim)
    for i in range(dim):
        for j in range(dim):
            prod = _mat_mul_sparse(g.basis[i].matrix, g.basis[j].matrix, nd)
            val = F0
            for p in range(nd):
                v = prod.get((p, p), F0)
                if v:
                    val += -v if g.nat_parity[p] else v
            gram[i][j] = C * val
    g.gram = gram
    if linalg.rank(gram) != dim:
        raise DegenerateForm(f"supertrace form degenerate on {g.name}")
    # every non-Cartan element must be a root vector for the diagonal Cartan
    for i, b in enumerate(g.basis):
        if b.is_cartan:
            continue
        for h in g.cartan:
            br = g.bracket(h, i)
            expect = g.eval_weight(b.root, {h: F1})
            if br != ({i: expect} if expect else {}):
                raise AssertionError(f"{b.label} is not a root vector")


def build_algebra(kind: str, m: int, n: int, C=1, strict: bool = True) -> LieSuperalgebra:
    """Construct gl(m|n) or osp(m|2n) with invariant form C * str(XY).

    gl(n|n) is rejected by default (sl(n|n) is not basic classical and the
    identity is isotropic); strict=False builds it anyway on the full matrix
    algebra, whose supertrace Gram matrix is still invertible.  That path
    exists for cross-checks like gl(1|1), not for the public CLI.
    """
    C = Fraction(C)
    if C == 0:
        raise PreconditionViolated("form normalization C must be nonzero")
    if kind == "gl":
        return _build_gl(m, n, C, strict)
    if kind == "osp":
        return _build_osp(m, n, C)
    raise UnsupportedAlgebra(f"unsupported algebra kind: {kind!r}")


# ---------------------------------------------------------------------------
# parabolic decompositions
# ---------------------------------------------------------------------------

@dataclass
class ParabolicDecomposition:
    """g = nbar + l + n determined by a subset of the simple roots."""

    algebra: LieSuperalgebra
    levi_simple_roots: tuple
    nbar_indices: list
    levi_indices: list
    n_indices: list
    dual_pairing: list          # for each a: xi_a^# as {nbar basis index: Fraction}
    _levi_cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_even(self) -> list:
        g = self.algebra
        return [i for i in self.n_indices if g.parity(i) == 0]

    @property
    def n_odd(self) -> list:
        g = self.algebra
        return [i for i in self.n_indices if g.parity(i) == 1]

    def dual_of_n(self) -> list:
        return self.dual_pairing

    def dual_of_nbar(self) -> list:
        key = "dual_nbar"
        if key not in self._levi_cache:
            self._levi_cache[key] = dual_basis_in(
                self.algebra, self.nbar_indices, self.n_indices)
        return self._levi_cache[key]

    def levi_algebra(self) -> LieSuperalgebra:
        if "levi" not in self._levi_cache:
            g = self.algebra
            simple = [g.simple_roots[i] for i in self.levi_simple_roots]
            self._levi_cache["levi"] = g.subalgebra(
                self.levi_indices, simple, name=f"levi{list(self.levi_simple_roots)}")
        return self._levi_cache["levi"]

    def levi_in_even_part(self) -> bool:
        g = self.algebra
        return all(g.parity(i) == 0 for i in self.levi_indices)


def build_parabolic(g: LieSuperalgebra, levi_simple_roots) -> ParabolicDecomposition:
    levi_simple_roots = tuple(sorted(set(levi_simple_roots)))
    for i in levi_simple_roots:
        if not 0 <= i < len(g.simple_roots):
            raise PreconditionViolated(f"invalid simple root index {i}")
    keep = set(levi_simple_roots)
    nbar, levi, nn = [], [], []
    for i, b in enumerate(g.basis):
        if b.is_cartan:
            levi.append(i)
            continue
        coords = g.simple_coordinates(b.root)
        assert coords is not None, f"root {b.root} outside simple span"
        support = {k for k, c in enumerate(coords) if c}
        if support <= keep:
            levi.append(i)
        elif all(c >= 0 for c in coords):
            nn.append(i)
        else:
            nbar.append(i)
    dual = dual_basis_in(g, nn, nbar)
    p = ParabolicDecomposition(g, levi_simple_roots, nbar, levi, nn, dual)
    return p


# ---------------------------------------------------------------------------
# adjoint operations
# ---------------------------------------------------------------------------

@dataclass
class AdjointOperation:
    """Exact matrix of an involutive bracket-antiautomorphism A -> A^dagger."""

    algebra: LieSuperalgebra
    images: list               # images[i] = dagger(A_i) as {j: Fraction}
    star_type: int | None      # 1, 2 or None (type-free Chevalley involution)

    def apply_basis(self, i: int) -> dict:
        return self.images[i]

    def apply(self, x: dict) -> dict:
        out: dict = {}
        for i, c in x.items():
            linalg.vec_iadd(out, self.images[i], c)
        return out


def _conjugation_images(g: LieSuperalgebra, mdiag: list) -> list:
    """dagger(X) = M^-1 X^T M for a diagonal symmetric M, expanded in basis."""
    images = []
    for b in g.basis:
        matT = {(q, p): v for (p, q), v in b.matrix.items()}
        conj = {(p, q): mdiag[q] * v / mdiag[p] for (p, q), v in matT.items()}
        images.append(g.expand(conj))
    return images


def build_adjoint_operation(g: LieSuperalgebra, star_type: int = 1) -> AdjointOperation:
    """Adjoint operation as an exact matrix on the chosen basis.

    For gl and osp(2|2n) the two star types are available; type (2) is
    type (1) composed with A -> (-1)^|A| A.  For other osp the Chevalley-type
    involution (matrix conjugate-transpose for a diagonal symmetric form) is
    returned with star_type None.
    """
    if star_type not in (1, 2):
        raise PreconditionViolated("star_type must be 1 or 2")
    typed = g.kind == "gl" or (g.kind == "osp" and g.m == 2)
    if g.kind == "gl":
        mdiag = [F1] * g.nat_dim
    else:
        # +1 on even vectors and f+, -1 on f-; keeps osp stable under
        # X -> M^-1 X^T M and fixes the diagonal Cartan
        d = g.m // 2
        fplus = 2 * d + (g.m % 2)
        mdiag = [F1] * g.nat_dim
        for j in range(g.n):
            mdiag[fplus + g.n + j] = -F1
    images = _conjugation_images(g, mdiag)
    if typed and star_type == 2:
        images = [
            linalg.vec_scale(img, -F1 if g.basis[i].parity else F1)
            for i, img in enumerate(images)
        ]
    op = AdjointOperation(g, images, star_type if typed else None)
    _check_adjoint(op)
    return op


def _check_adjoint(op: AdjointOperation):
    g = op.algebra
    for i in range(g.dim):
        twice = op.apply(op.apply_basis(i))
        if twice != {i: F1}:
            raise AssertionError("adjoint operation is not an involution")
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = op.apply(g.bracket(i, j))
            rhs = g.bracket_vec(op.apply_basis(j), op.apply_basis(i))
            if lhs != rhs:
                raise AssertionError("[A,B]^dagger != [B^dagger, A^dagger]")
            if g.form(op.apply_basis(i), op.apply_basis(j)) != g.form({j: F1}, {i: F1}):
                raise AssertionError("(A^dagger, B^dagger) != (B, A)")


def check_star_condition(g: LieSuperalgebra, p: ParabolicDecomposition,
                         op: AdjointOperation) -> bool:
    """True iff dagger(xi_a) = (-1)^|xi_a| xi_a^# for every n-basis element."""
    for a, idx in enumerate(p.n_indices):
        want = dict(p.dual_pairing[a])
        if g.parity(idx):
            want = linalg.vec_scale(want, -F1)
        if op.apply_basis(idx) != want:
            return False
    return True
