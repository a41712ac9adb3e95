#!/usr/bin/env python3
"""Generate exact structure constants for the Drinfeld double of the
4-dimensional Sweedler algebra, verify every axiom, and emit the data file
data/dsweedler16.hopf consumed by the C++ loader.

All arithmetic is exact over Q(i) (Gaussian rationals); the emitted file
records the cyclotomic order actually needed (1 if everything is rational,
4 if i appears).
"""

from fractions import Fraction
import itertools
import sys


class GR:
    """Gaussian rational a + b*i."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(s, o):
        o = coerce(o)
        return GR(s.a + o.a, s.b + o.b)

    def __sub__(s, o):
        o = coerce(o)
        return GR(s.a - o.a, s.b - o.b)

    def __neg__(s):
        return GR(-s.a, -s.b)

    def __mul__(s, o):
        o = coerce(o)
        return GR(s.a * o.a - s.b * o.b, s.a * o.b + s.b * o.a)

    __radd__ = __add__
    __rmul__ = __mul__

    def inv(s):
        n = s.a * s.a + s.b * s.b
        if n == 0:
            raise ZeroDivisionError
        return GR(s.a / n, -s.b / n)

    def __truediv__(s, o):
        return s * coerce(o).inv()

    def __eq__(s, o):
        o = coerce(o)
        return s.a == o.a and s.b == o.b

    def __hash__(s):
        return hash((s.a, s.b))

    def is_zero(s):
        return s.a == 0 and s.b == 0

    def is_rational(s):
        return s.b == 0

    def __repr__(s):
        if s.b == 0:
            return str(s.a)
        return f"({s.a}+{s.b}i)"


def coerce(x):
    if isinstance(x, GR):
        return x
    return GR(x)


ZERO, ONE, I = GR(0), GR(1), GR(0, 1)


def vec(n):
    return [GR(0) for _ in range(n)]


def mat(n, m=None):
    m = n if m is None else m
    return [vec(m) for _ in range(n)]


# ---------------------------------------------------------------- H4 (Sweedler)
# basis 1, g, x, gx
H = 4
names4 = ["1", "g", "x", "gx"]


def h4_mult():
    # multiplication table as dict (i,j) -> vector
    def v(*pairs):
        out = vec(4)
        for idx, c in pairs:
            out[idx] = out[idx] + GR(c)
        return out

    T = {}
    # 1 is the unit
    for j in range(4):
        T[(0, j)] = v((j, 1))
        T[(j, 0)] = v((j, 1))
    T[(1, 1)] = v((0, 1))        # g g = 1
    T[(1, 2)] = v((3, 1))        # g x = gx
    T[(2, 1)] = v((3, -1))       # x g = -gx
    T[(2, 2)] = v()              # x x = 0
    T[(1, 3)] = v((2, 1))        # g gx = x
    T[(3, 1)] = v((2, -1))       # gx g = g x g = -x
    T[(2, 3)] = v()              # x gx = x g x = -g x x = 0
    T[(3, 2)] = v()              # gx x = g x x = 0
    T[(3, 3)] = v()              # gx gx = g x g x = -x x = 0
    return T


def h4_coprod():
    # Δ as dict i -> list of (j,k,coeff)
    return {
        0: [(0, 0, GR(1))],
        1: [(1, 1, GR(1))],
        2: [(2, 0, GR(1)), (1, 2, GR(1))],           # Δx = x⊗1 + g⊗x
        3: [(3, 1, GR(1)), (0, 3, GR(1))],           # Δ(gx) = gx⊗g + 1⊗gx
    }


h4_counit = [GR(1), GR(1), GR(0), GR(0)]
# S(1)=1, S(g)=g, S(x)=-gx, S(gx)=x ; matrix S[i][j]: S(e_j) = sum_i S[i][j] e_i
h4_S = mat(4)
h4_S[0][0] = GR(1)
h4_S[1][1] = GR(1)
h4_S[3][2] = GR(-1)
h4_S[2][3] = GR(1)


class Algebra:
    """Finite-dimensional Hopf algebra given by dense structure tensors."""

    def __init__(self, dim, mult, unit, coprod, counit):
        self.n = dim
        self.mult = mult          # dict (i,j) -> vector
        self.unit = unit          # vector
        self.coprod = coprod      # dict i -> [(j,k,c)]
        self.counit = counit      # vector of values on basis

    def mul(self, a, b):
        out = vec(self.n)
        for i, ca in enumerate(a):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b):
                if cb.is_zero():
                    continue
                for k, c in enumerate(self.mult[(i, j)]):
                    if not c.is_zero():
                        out[k] = out[k] + ca * cb * c
        return out

    def cop(self, a):
        out = {}
        for i, ca in enumerate(a):
            if ca.is_zero():
                continue
            for (j, k, c) in self.coprod[i]:
                out[(j, k)] = out.get((j, k), GR(0)) + ca * c
        return out

    def eps(self, a):
        return sum((ca * self.counit[i] for i, ca in enumerate(a)), GR(0))

    def basis(self, i):
        v = vec(self.n)
        v[i] = GR(1)
        return v


def transpose_tensors(alg):
    """Dual Hopf algebra: multiplication dual to coproduct etc."""
    n = alg.n
    mult = {}
    for i in range(n):
        for j in range(n):
            out = vec(n)
            # (f_i f_j)(e_a) = sum over Δ(e_a) f_i(a1) f_j(a2)
            for a in range(n):
                s = GR(0)
                for (p, q, c) in alg.coprod[a]:
                    if p == i and q == j:
                        s = s + c
                out[a] = s
            mult[(i, j)] = out
    unit = list(alg.counit)  # ε is the unit of H*
    coprod = {}
    for i in range(n):
        lst = []
        for a in range(n):
            for b in range(n):
                c = alg.mult[(a, b)][i]
                if not c.is_zero():
                    lst.append((a, b, c))
        coprod[i] = lst
    counit = [alg.unit[i] for i in range(n)]  # f -> f(1)... see below
    return mult, unit, coprod, counit


def solve_linear(A, rhs):
    """Solve A x = rhs over GR; A is a list of rows. Returns one solution or None."""
    rows = [list(r) + [rhs[i]] for i, r in enumerate(A)]
    n_rows, n_cols = len(rows), len(rows[0])
    piv_cols = []
    r = 0
    for c in range(n_cols - 1):
        p = None
        for rr in range(r, n_rows):
            if not rows[rr][c].is_zero():
                p = rr
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [v * inv for v in rows[r]]
        for rr in range(n_rows):
            if rr != r and not rows[rr][c].is_zero():
                f = rows[rr][c]
                rows[rr] = [vv - f * rows[r][k] for k, vv in enumerate(rows[rr])]
        piv_cols.append(c)
        r += 1
        if r == n_rows:
            break
    # consistency
    for rr in range(r, n_rows):
        if not rows[rr][-1].is_zero():
            return None
    x = vec(n_cols - 1)
    for idx, c in enumerate(piv_cols):
        x[c] = rows[idx][-1]
    return x


def nullspace(A):
    if not A:
        return []
    n_rows, n_cols = len(A), len(A[0])
    rows = [list(r) for r in A]
    piv_cols = []
    r = 0
    for c in range(n_cols):
        p = None
        for rr in range(r, n_rows):
            if not rows[rr][c].is_zero():
                p = rr
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [v * inv for v in rows[r]]
        for rr in range(n_rows):
            if rr != r and not rows[rr][c].is_zero():
                f = rows[rr][c]
                rows[rr] = [vv - f * rows[r][k] for k, vv in enumerate(rows[rr])]
        piv_cols.append(c)
        r += 1
        if r == n_rows:
            break
    basis = []
    piv_set = set(piv_cols)
    for free in range(n_cols):
        if free in piv_set:
            continue
        v = vec(n_cols)
        v[free] = GR(1)
        for idx, c in enumerate(piv_cols):
            v[c] = -rows[idx][free]
        basis.append(v)
    return basis


def build_double():
    h4 = Algebra(4, h4_mult(), [GR(1), GR(0), GR(0), GR(0)], h4_coprod(), h4_counit)

    # sanity: Hopf axioms for H4 itself (counit/antipode)
    for i in range(4):
        a = h4.basis(i)
        # m(S⊗id)Δ = ε·1
        acc = vec(4)
        for (p, q), c in h4.cop(a).items():
            Sp = [h4_S[r][p] for r in range(4)]
            prod = h4.mul(Sp, h4.basis(q))
            acc = [acc[k] + c * prod[k] for k in range(4)]
        want = [h4.eps(a) * h4.unit[k] for k in range(4)]
        assert acc == want, f"H4 antipode axiom fails on {names4[i]}"

    ds_mult, ds_unit, ds_coprod, ds_counit = transpose_tensors(h4)
    # S inverse of H4
    # S matrix inverse: S^2(x) = gxg^{-1} so S^4 = id; compute inverse by cubing
    def matmul(A, B):
        n = len(A)
        C = mat(n)
        for i in range(n):
            for k in range(n):
                if A[i][k].is_zero():
                    continue
                for j in range(n):
                    C[i][j] = C[i][j] + A[i][k] * B[k][j]
        return C

    S2 = matmul(h4_S, h4_S)
    h4_S_inv = matmul(S2, h4_S)  # S^3 = S^{-1} since S^4 = id
    assert matmul(h4_S, h4_S_inv) == mat_identity(4)

    n = 16

    def didx(f, h):
        return f * 4 + h

    # precompute Δ^2 on H4: i -> [(a,b,c,coeff)]
    cop2 = {}
    for i in range(4):
        lst = []
        for (a, bc, c1) in h4_coprod()[i]:
            for (b, c, c2) in h4_coprod()[bc]:
                lst.append((a, b, c, c1 * c2))
        cop2[i] = lst

    H4 = h4

    # multiplication of the double: (f ⊗ h)(f' ⊗ h') = Σ f * (h1 ⇀ f' ↼ S^{-1}(h3)) ⊗ h2 h'
    # where (h ⇀ f)(a) = f(a h), (f ↼ h)(a) = f(h a)
    def functional_sandwich(fp, h3s_vec, h1):
        """functional a -> f'(S^{-1}(h3) a h1) expressed in the dual basis"""
        out = vec(4)
        for a in range(4):
            # value on e_a
            left = H4.mul(h3s_vec, H4.basis(a))
            full = H4.mul(left, h1)
            out[a] = sum((full[t] * fp[t] for t in range(4)), GR(0))
        return out

    dmult = {}
    for f in range(4):
        for h in range(4):
            for fp in range(4):
                for hp in range(4):
                    out = vec(16)
                    fpv = vec(4)
                    fpv[fp] = GR(1)
                    for (h1, h2, h3, c) in cop2[h]:
                        h3s = [h4_S_inv[r][h3] for r in range(4)]
                        sand = functional_sandwich(fpv, h3s, H4.basis(h1))
                        # f * sand in H*
                        fprod = vec(4)
                        for t, ct in enumerate(sand):
                            if ct.is_zero():
                                continue
                            for k, ck in enumerate(ds_mult[(f, t)]):
                                fprod[k] = fprod[k] + ct * ck
                        hprod = H4.mul(H4.basis(h2), H4.basis(hp))
                        for k1 in range(4):
                            if fprod[k1].is_zero():
                                continue
                            for k2 in range(4):
                                if hprod[k2].is_zero():
                                    continue
                                out[didx(k1, k2)] = out[didx(k1, k2)] + c * fprod[k1] * hprod[k2]
                    dmult[(didx(f, h), didx(fp, hp))] = out

    dunit = vec(16)
    for k in range(4):
        if not ds_unit[k].is_zero():
            dunit[didx(k, 0)] = ds_unit[k]

    # coproduct with H*^cop: Δ(f⊗h) = Σ (f2 ⊗ h1) ⊗ (f1 ⊗ h2)
    dcoprod = {}
    for f in range(4):
        for h in range(4):
            lst = []
            for (f1, f2, cf) in ds_coprod[f]:
                for (h1, h2, ch) in h4_coprod()[h]:
                    lst.append((didx(f2, h1), didx(f1, h2), cf * ch))
            dcoprod[didx(f, h)] = lst

    dcounit = vec(16)
    for f in range(4):
        for h in range(4):
            dcounit[didx(f, h)] = ds_counit[f] * h4_counit[h]

    D = Algebra(16, dmult, dunit, dcoprod, dcounit)
    return D, didx


def mat_identity(n):
    m = mat(n)
    for i in range(n):
        m[i][i] = GR(1)
    return m


def check_algebra(D):
    n = D.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ab = D.mul(D.basis(i), D.basis(j))
                left = D.mul(ab, D.basis(k))
                bc = D.mul(D.basis(j), D.basis(k))
                right = D.mul(D.basis(i), bc)
                assert left == right, f"assoc fails {i},{j},{k}"
    for i in range(n):
        assert D.mul(D.unit, D.basis(i)) == D.basis(i)
        assert D.mul(D.basis(i), D.unit) == D.basis(i)
    print("double: associativity + unit ok")


def compute_antipode(D):
    """solve m(S⊗id)Δ(a) = ε(a) 1 for the antipode matrix"""
    n = D.n
    # unknown S as n*n entries: S(e_p) = Σ_r S[r][p] e_r
    # equation per (a, k): Σ_{(p,q)} c * Σ_r S[r][p] (e_r e_q)[k] = ε(a) unit[k]
    rows = []
    rhs = []
    for a in range(n):
        cop = D.cop(D.basis(a))
        for k in range(n):
            row = vec(n * n)
            for (p, q), c in cop.items():
                for r in range(n):
                    coeff = D.mult[(r, q)][k]
                    if not coeff.is_zero():
                        row[r * n + p] = row[r * n + p] + c * coeff
            rows.append(row)
            rhs.append(D.eps(D.basis(a)) * D.unit[k])
    x = solve_linear(rows, rhs)
    assert x is not None, "no antipode"
    S = mat(n)
    for r in range(n):
        for p in range(n):
            S[r][p] = x[r * n + p]
    return S


def main():
    D, didx = build_double()
    check_algebra(D)

    n = 16
    S = compute_antipode(D)

    def apply_mat(M, v):
        out = vec(len(M))
        for j, c in enumerate(v):
            if c.is_zero():
                continue
            for i in range(len(M)):
                if not M[i][j].is_zero():
                    out[i] = out[i] + M[i][j] * c
        return out

    # verify both antipode axioms
    for a in range(n):
        acc1 = vec(n)
        acc2 = vec(n)
        for (p, q), c in D.cop(D.basis(a)).items():
            acc1 = [acc1[k] + c * t for k, t in enumerate(D.mul(apply_mat(S, D.basis(p)), D.basis(q)))]
            acc2 = [acc2[k] + c * t for k, t in enumerate(D.mul(D.basis(p), apply_mat(S, D.basis(q))))]
        want = [D.eps(D.basis(a)) * D.unit[k] for k in range(n)]
        assert acc1 == want and acc2 == want, f"antipode axiom fails on {a}"
    print("double: antipode ok")

    # coassociativity + counit
    for a in range(n):
        lhs = {}
        rhs = {}
        for (p, q), c in D.cop(D.basis(a)).items():
            for (p1, p2), c2 in D.cop(D.basis(p)).items():
                lhs[(p1, p2, q)] = lhs.get((p1, p2, q), GR(0)) + c * c2
            for (q1, q2), c2 in D.cop(D.basis(q)).items():
                rhs[(p, q1, q2)] = rhs.get((p, q1, q2), GR(0)) + c * c2
        lhs = {k: v for k, v in lhs.items() if not v.is_zero()}
        rhs = {k: v for k, v in rhs.items() if not v.is_zero()}
        assert lhs == rhs, f"coassoc fails on {a}"
    print("double: coassociativity ok")

    # R-matrix candidates; keep the one passing all quasitriangularity axioms
    def make_R(flip):
        # R = Σ_i (eps ⊗ e_i) ⊗ (δ_i ⊗ 1), optionally with the legs flipped
        terms = []
        for i in range(4):
            lega = vec(n)
            for k in range(4):
                if not h4_counit[k].is_zero():
                    lega[didx(k, i)] = lega[didx(k, i)] + h4_counit[k]
            legb = vec(n)
            legb[didx(i, 0)] = GR(1)
            terms.append((lega, legb) if not flip else (legb, lega))
        return terms

    def tensor_mul(terms1, terms2):
        out = []
        for (a1, b1) in terms1:
            for (a2, b2) in terms2:
                out.append((D.mul(a1, a2), D.mul(b1, b2)))
        return out

    def tensor_equal(t1, t2):
        # compare as elements of D⊗D: dense 256 vectors
        def dense(ts):
            v = [GR(0)] * (n * n)
            for (a, b) in ts:
                for i, ca in enumerate(a):
                    if ca.is_zero():
                        continue
                    for j, cb in enumerate(b):
                        if not cb.is_zero():
                            v[i * n + j] = v[i * n + j] + ca * cb
            return v
        return dense(t1) == dense(t2)

    def check_R(terms):
        # Δ^op(a) R = R Δ(a)
        for a in range(n):
            cop = D.cop(D.basis(a))
            lhs = []
            rhs = []
            for (p, q), c in cop.items():
                for (x, y) in terms:
                    lhs.append(([c * t for t in D.mul(D.basis(q), x)], D.mul(D.basis(p), y)))
                    rhs.append(([c * t for t in D.mul(x, D.basis(p))], D.mul(y, D.basis(q))))
            if not tensor_equal(lhs, rhs):
                return False
        # hexagons: (Δ⊗id)R = R13 R23 ; (id⊗Δ)R = R13 R12
        lhs = []
        for (x, y) in terms:
            for (p, q), c in D.cop(x).items():
                lhs.append((D.basis(p), [c * t for t in D.basis(q)], y))

        def dense3(ts):
            v = {}
            for (a, b, cdim) in ts:
                for i, ca in enumerate(a):
                    if ca.is_zero():
                        continue
                    for j, cb in enumerate(b):
                        if cb.is_zero():
                            continue
                        for k, cc in enumerate(cdim):
                            if not cc.is_zero():
                                v[(i, j, k)] = v.get((i, j, k), GR(0)) + ca * cb * cc
            return {k: val for k, val in v.items() if not val.is_zero()}

        r13r23 = []
        for (x1, y1) in terms:
            for (x2, y2) in terms:
                r13r23.append((x1, x2, D.mul(y1, y2)))
        if dense3(lhs) != dense3(r13r23):
            return False
        lhs2 = []
        for (x, y) in terms:
            for (p, q), c in D.cop(y).items():
                lhs2.append((x, [c * t for t in D.basis(p)], D.basis(q)))
        r13r12 = []
        for (x1, y1) in terms:
            for (x2, y2) in terms:
                r13r12.append((D.mul(x1, x2), y2, y1))
        if dense3(lhs2) != dense3(r13r12):
            return False
        return True

    R = None
    for flip in (False, True):
        cand = make_R(flip)
        if check_R(cand):
            R = cand
            print(f"double: R-matrix ok (flip={flip})")
            break
    assert R is not None, "no quasitriangular structure found"

    # Drinfeld element u = Σ S(b) a and ribbon search
    u = vec(n)
    for (a, b) in R:
        term = D.mul(apply_mat(S, b), a)
        u = [u[k] + term[k] for k in range(n)]
    uS = apply_mat(S, u)
    uSu = D.mul(u, uS)

    # center
    rows = []
    for gidx in range(n):
        for k in range(n):
            row = vec(n)
            for z in range(n):
                row[z] = D.mult[(gidx, z)][k] - D.mult[(z, gidx)][k]
            rows.append(row)
    center = nullspace(rows)
    print(f"double: center dimension {len(center)}")

    # ribbon element: v central, v^2 = u S(u), S(v)=v, eps(v)=1,
    # Δ(v) = (R21 R)^{-1} (v ⊗ v). Solve v^2 = uSu in the center by brute
    # parameterization over a small rational grid is hopeless; instead solve
    # the quadratic system exactly via sympy.
    import sympy as sp

    d = len(center)
    cs = sp.symbols(f"c0:{d}")

    def center_elem(coeffs):
        out = [sp.Integer(0)] * n
        for t, z in enumerate(center):
            for k in range(n):
                if not z[k].is_zero():
                    out[k] = out[k] + coeffs[t] * sp.Rational(z[k].a) + coeffs[t] * sp.Rational(z[k].b) * sp.I
        return out

    vsym = center_elem(cs)

    # v^2 in symbols
    v2 = [sp.Integer(0)] * n
    for i in range(n):
        if vsym[i] == 0:
            continue
        for j in range(n):
            if vsym[j] == 0:
                continue
            for k, c in enumerate(D.mult[(i, j)]):
                if not c.is_zero():
                    v2[k] = v2[k] + vsym[i] * vsym[j] * (sp.Rational(c.a) + sp.Rational(c.b) * sp.I)

    target = [sp.Rational(uSu[k].a) + sp.Rational(uSu[k].b) * sp.I for k in range(n)]
    eqs = [sp.expand(v2[k] - target[k]) for k in range(n)]
    sols = sp.solve(eqs, cs, dict=True)
    print(f"double: {len(sols)} central square roots of uS(u)")

    def to_gr(x):
        x = sp.nsimplify(sp.expand(x))
        re, im = x.as_real_imag()
        return GR(Fraction(str(sp.Rational(re))), Fraction(str(sp.Rational(im))))

    # Drinfeld element sanity: S^2(x) = u x u^{-1}
    rows = []
    rhs_v = []
    for k in range(n):
        row = vec(n)
        for j in range(n):
            row[j] = sum((u[i] * D.mult[(i, j)][k] for i in range(n)), GR(0))
        rows.append(row)
        rhs_v.append(D.unit[k])
    uinv = solve_linear(rows, rhs_v)
    assert uinv is not None, "u not invertible"
    S2m = [[sum((S[i][t] * S[t][j] for t in range(n)), GR(0)) for j in range(n)] for i in range(n)]
    for x in range(n):
        lhsv = [S2m[i][x] for i in range(n)]
        rhsv = D.mul(D.mul(u, D.basis(x)), uinv)
        assert lhsv == rhsv, f"S^2 != u(.)u^-1 at basis {x}"
    print("double: S^2 = u(.)u^{-1} ok")

    # calibration: Drinfeld's theorem Delta(u) = (R21 R)^{-1} (u ⊗ u) must hold;
    # if this check fails the harness itself is wrong
    def delta_axiom_holds(v):
        R21R = tensor_mul([(b, a) for (a, b) in R], R)
        lhs = []
        for (p, q), c in D.cop(v).items():
            for (x, y) in R21R:
                lhs.append((D.mul(x, [c * t for t in D.basis(p)]), D.mul(y, D.basis(q))))
        return tensor_equal(lhs, [(v, v)])

    print("calibration Delta(u) axiom:", delta_axiom_holds(u))
    print("calibration Delta(S(u)) axiom:", delta_axiom_holds(uS))

    # group-like elements: Delta(g) = g⊗g, eps(g) = 1. Every ribbon element is
    # u times the inverse of a group-like, so search there.
    gsyms = sp.symbols(f"g0:{n}")

    def sym_elem(syms):
        return list(syms)

    gz = sym_elem(gsyms)
    geqs = []
    for i in range(n):
        for j in range(n):
            expr = -gz[i] * gz[j]
            e = expr
            # coefficient of e_i ⊗ e_j in Delta(g)
            s = sp.Integer(0)
            for t in range(n):
                for (p, q, c) in D.coprod[t]:
                    if p == i and q == j:
                        s = s + gz[t] * (sp.Rational(c.a) + sp.Rational(c.b) * sp.I)
            geqs.append(sp.expand(s - gz[i] * gz[j]))
    geqs.append(sum((gz[k] * (sp.Rational(D.counit[k].a) + sp.Rational(D.counit[k].b) * sp.I)
                     for k in range(n)), sp.Integer(0)) - 1)
    gsols = sp.solve(geqs, gsyms, dict=True)
    gsols = [s for s in gsols if not any(v.free_symbols for v in s.values())]
    print(f"double: {len(gsols)} group-like elements")

    def invert(v):
        rows2 = []
        rhs2 = []
        for k in range(n):
            row = vec(n)
            for j in range(n):
                row[j] = sum((v[i] * D.mult[(i, j)][k] for i in range(n)), GR(0))
            rows2.append(row)
            rhs2.append(D.unit[k])
        return solve_linear(rows2, rhs2)

    def is_central(v):
        for gidx in range(n):
            if D.mul(v, D.basis(gidx)) != D.mul(D.basis(gidx), v):
                return False
        return True

    ribbon = None
    for si, sol in enumerate(gsols):
        gamma = vec(n)
        for k in range(n):
            val = sol.get(gsyms[k], sp.Integer(0))
            gamma[k] = to_gr(val)
        ginv = invert(gamma)
        if ginv is None:
            continue
        for vi, v in enumerate((D.mul(u, ginv), D.mul(ginv, u), D.mul(u, gamma),
                                D.mul(gamma, u))):
            epsv = sum((v[k] * D.counit[k] for k in range(n)), GR(0))
            central = is_central(v)
            sv_ok = apply_mat(S, v) == v
            v2 = D.mul(v, v)
            v2_ok = v2 == uSu
            cop_ok = delta_axiom_holds(v)
            print(f"  group-like {si} variant {vi}: central {central} S(v)=v {sv_ok} "
                  f"v^2=uS(u) {v2_ok} eps={epsv} Delta {cop_ok}")
            if central and sv_ok and v2_ok and cop_ok and epsv == ONE:
                ribbon = v
                break
        if ribbon is not None:
            break
    assert ribbon is not None, "no ribbon element"
    print("double: ribbon element found:", ribbon)

    # pivot = u v^{-1}
    # invert v: solve v * w = 1
    rows = []
    rhs = []
    for k in range(n):
        row = vec(n)
        for j in range(n):
            row[j] = sum((ribbon[i] * D.mult[(i, j)][k] for i in range(n)), GR(0))
        rows.append(row)
        rhs.append(D.unit[k])
    vinv = solve_linear(rows, rhs)
    assert vinv is not None
    pivot = D.mul(u, vinv)
    # group-like?
    copg = D.cop(pivot)
    dense = {}
    for (p, q), c in copg.items():
        dense[(p, q)] = c
    want = {}
    for i in range(n):
        if pivot[i].is_zero():
            continue
        for j in range(n):
            if not pivot[j].is_zero():
                want[(i, j)] = pivot[i] * pivot[j]
    dense = {k: v for k, v in dense.items() if not v.is_zero()}
    want = {k: v for k, v in want.items() if not v.is_zero()}
    assert dense == want, "pivot not group-like"
    print("double: pivot ok:", pivot)

    # integrals: right integral mu in D*: (mu ⊗ id)Δ(a) = mu(a) 1
    rows = []
    for a in range(n):
        cop = D.cop(D.basis(a))
        for k in range(n):
            row = vec(n)
            # Σ_(p,q) c mu(p) [q = k] - mu(a) unit[k] = 0
            for (p, q), c in cop.items():
                if q == k:
                    row[p] = row[p] + c
            row[a] = row[a] - D.unit[k]
            rows.append(row)
    mu_space = nullspace(rows)
    assert len(mu_space) == 1, f"right integral space dim {len(mu_space)}"
    mu = mu_space[0]
    print("double: right integral ok")

    # cointegral: two-sided (unimodular): e_h Λ = ε(e_h) Λ and Λ e_h likewise
    rows = []
    for hidx in range(n):
        for k in range(n):
            rowL = vec(n)
            rowR = vec(n)
            for j in range(n):
                rowL[j] = D.mult[(hidx, j)][k]
                rowR[j] = D.mult[(j, hidx)][k]
            eps_h = D.counit[hidx]
            rowL[k] = rowL[k] - eps_h
            rowR[k] = rowR[k] - eps_h
            rows.append(rowL)
            rows.append(rowR)
    coint_space = nullspace(rows)
    assert len(coint_space) == 1, f"two-sided cointegral space dim {len(coint_space)}"
    lam = coint_space[0]
    # normalize: mu(lam) should be nonzero; scale so mu(lam) = 1
    pairing = sum((mu[k] * lam[k] for k in range(n)), GR(0))
    assert not pairing.is_zero()
    lam = [c / pairing for c in lam]
    print("double: two-sided cointegral ok (unimodular)")

    # factorizable: Drinfeld map f -> (f⊗id)(R21 R) has rank n
    R21R = tensor_mul([(b, a) for (a, b) in R], R)
    dr = mat(n)  # columns indexed by dual basis f_i
    for (x, y) in R21R:
        for i in range(n):
            if x[i].is_zero():
                continue
            for k in range(n):
                if not y[k].is_zero():
                    dr[k][i] = dr[k][i] + x[i] * y[k]
    # rank
    rk = n - len(nullspace(dr))
    assert rk == n, f"Drinfeld map rank {rk}"
    print("double: factorizable ok")

    # ------------------------------------------------------------- modules
    # left regular module: rho(e_h)[r][c] = coefficient of e_r in e_h e_c
    def regular_action():
        T = {}
        for h in range(n):
            M = mat(n)
            for c in range(n):
                col = D.mult[(h, c)]
                for r in range(n):
                    M[r][c] = col[r]
            T[h] = M
        return T

    reg = regular_action()

    # radical via Dickson: J = {x : tr(L_x L_y) = 0 for all y}
    trform = mat(n)
    for i in range(n):
        for j in range(n):
            # tr(L_i L_j) = Σ_c coeff of e_c in e_i e_j e_c
            s = GR(0)
            eij = D.mult[(i, j)]
            for t in range(n):
                if eij[t].is_zero():
                    continue
                for c in range(n):
                    s = s + eij[t] * D.mult[(t, c)][c]
            trform[i][j] = s
    rad = nullspace(trform)
    print(f"double: radical dimension {len(rad)}")

    import json

    # simple 1-dim modules: characters chi with chi(e_i e_j) = chi(e_i) chi(e_j)
    # solve over the small commutative quotient: brute force via sympy
    chi_syms = sp.symbols(f"t0:{n}")
    eqs = []
    for i in range(n):
        for j in range(n):
            e = -chi_syms[i] * chi_syms[j]
            expr = e
            for k, c in enumerate(D.mult[(i, j)]):
                if not c.is_zero():
                    expr = expr + (sp.Rational(c.a) + sp.Rational(c.b) * sp.I) * chi_syms[k]
            eqs.append(sp.expand(expr))
    # unit condition
    unit_expr = sum((chi_syms[k] * (sp.Rational(D.unit[k].a)) for k in range(n)), sp.Integer(0))
    eqs.append(unit_expr - 1)
    chars = sp.solve(eqs, chi_syms, dict=True)
    chars = [c for c in chars if not any(v.free_symbols for v in c.values())]
    print(f"double: found {len(chars)} one-dimensional modules")
    for c in chars:
        print("  chi:", [sp.nsimplify(c.get(chi_syms[k], 0)) for k in range(n)])

    out = {
        "mult": {f"{i},{j}": [(k, str(c.a), str(c.b)) for k, c in enumerate(D.mult[(i, j)]) if not c.is_zero()]
                 for i in range(n) for j in range(n)},
        "unit": [(k, str(c.a), str(c.b)) for k, c in enumerate(D.unit) if not c.is_zero()],
        "coprod": {str(i): [(p, q, str(c.a), str(c.b)) for (p, q, c) in D.coprod[i]] for i in range(n)},
        "counit": [(k, str(c.a), str(c.b)) for k, c in enumerate(D.counit) if not c.is_zero()],
        "antipode": [(r, p, str(S[r][p].a), str(S[r][p].b)) for r in range(n) for p in range(n)
                      if not S[r][p].is_zero()],
        "rmatrix": [],
        "ribbon": [(k, str(ribbon[k].a), str(ribbon[k].b)) for k in range(n) if not ribbon[k].is_zero()],
        "pivot": [(k, str(pivot[k].a), str(pivot[k].b)) for k in range(n) if not pivot[k].is_zero()],
        "rintegral": [(k, str(mu[k].a), str(mu[k].b)) for k in range(n) if not mu[k].is_zero()],
        "cointegral": [(k, str(lam[k].a), str(lam[k].b)) for k in range(n) if not lam[k].is_zero()],
        "characters": [[str(sp.nsimplify(c.get(chi_syms[k], 0))) for k in range(n)] for c in chars],
        "radical_dim": len(rad),
        "center_dim": len(center),
    }
    dense_R = {}
    for (a, b) in R:
        for i, ca in enumerate(a):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b):
                if not cb.is_zero():
                    key = (i, j)
                    dense_R[key] = dense_R.get(key, GR(0)) + ca * cb
    out["rmatrix"] = [(i, j, str(c.a), str(c.b)) for (i, j), c in dense_R.items() if not c.is_zero()]

    with open("/tmp/dsweedler_stage1.json", "w") as f:
        json.dump(out, f)
    print("stage 1 written to /tmp/dsweedler_stage1.json")


if __name__ == "__main__":
    main()
