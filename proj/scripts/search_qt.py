#!/usr/bin/env python3
"""Exhaustive search for quasitriangular structures on D(Sweedler) that admit
a ribbon element. Stage 1: linear commutation + counit constraints. Stage 2:
hexagons via sympy on the reduced space. Stage 3: ribbon test per solution."""

import sys
sys.path.insert(0, "/root/proj/scripts")
from make_dsweedler import (GR, ONE, vec, mat, build_double, solve_linear,
                            nullspace, compute_antipode, mat_identity)
import sympy as sp
from fractions import Fraction

D, didx = build_double()
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


# algebra generators: grow a subalgebra from candidates until it is all of D
def find_generators():
    candidates = []
    # eps (x) g, eps (x) x
    for h in (1, 2):
        v = vec(n)
        for k in range(4):
            if not D.counit[didx(k, 0)].is_zero() or True:
                pass
        # eps in the dual basis has coordinates eps(e_k) = h4 counit
        v[didx(0, h)] = GR(1)
        v[didx(1, h)] = GR(1)
        candidates.append(v)
    # delta_g (x) 1 and delta_x (x) 1 and delta_gx (x) 1
    for f in (1, 2, 3):
        v = vec(n)
        v[didx(f, 0)] = GR(1)
        candidates.append(v)

    def closure(gens):
        basis = [D.unit] + gens
        # gaussian basis of the span
        def reduce_against(v, rowspace):
            v = list(v)
            for (lead, rv) in rowspace:
                if not v[lead].is_zero():
                    c = v[lead]
                    v = [v[k] - c * rv[k] for k in range(n)]
            return v
        rowspace = []
        def insert(v):
            v = reduce_against(v, rowspace)
            for lead in range(n):
                if not v[lead].is_zero():
                    inv = v[lead].inv()
                    v = [x * inv for x in v]
                    rowspace.append((lead, v))
                    return True
            return False
        work = list(basis)
        for v in work:
            insert(v)
        changed = True
        elems = list(basis)
        while changed:
            changed = False
            new = []
            for a in elems:
                for b in gens:
                    p = D.mul(a, b)
                    if insert(p):
                        new.append(p)
                        changed = True
            elems.extend(new)
        return len(rowspace)

    dimension = closure(candidates)
    assert dimension == n, f"generators only span {dimension}"
    return candidates


gens = find_generators()
print(f"found {len(gens)} algebra generators", flush=True)

# ---- stage 1: linear constraints on T in D (x) D -------------------------
# unknowns T[i*n+j]
rows = []
rhs = []
# Delta^op(a) T = T Delta(a) for generating a
for gen in gens:
    cop = list(D.cop(gen).items())
    for I in range(n):
        for J in range(n):
            row = vec(n * n)
            # lhs: sum over cop (p,q), T(i,j): (q i)(p j) coefficient at (I,J)
            for (p, q), c in cop:
                for i in range(n):
                    qi = D.mult[(q, i)][I]
                    if qi.is_zero():
                        continue
                    for j in range(n):
                        pj = D.mult[(p, j)][J]
                        if not pj.is_zero():
                            row[i * n + j] = row[i * n + j] + c * qi * pj
            # rhs: T(i,j) (i p)(j q)
            for (p, q), c in cop:
                for i in range(n):
                    ip = D.mult[(i, p)][I]
                    if ip.is_zero():
                        continue
                    for j in range(n):
                        jq = D.mult[(j, q)][J]
                        if not jq.is_zero():
                            row[i * n + j] = row[i * n + j] - c * ip * jq
            if any(not x.is_zero() for x in row):
                rows.append(row)

# counit constraints: (eps (x) id) T = unit, (id (x) eps) T = unit
for k in range(n):
    row = vec(n * n)
    for i in range(n):
        for j in range(n):
            if j == k and not D.counit[i].is_zero():
                row[i * n + j] = row[i * n + j] + D.counit[i]
    rows.append(row)
    rhs_val = D.unit[k]
    rhs.append(rhs_val)
# pad rhs for the homogeneous rows (added before counit rows)
rhs = [GR(0)] * (len(rows) - n) + rhs
for k in range(n):
    row = vec(n * n)
    for i in range(n):
        for j in range(n):
            if i == k and not D.counit[j].is_zero():
                row[i * n + j] = row[i * n + j] + D.counit[j]
    rows.append(row)
    rhs.append(D.unit[k])

print(f"stage1: {len(rows)} rows, solving...", flush=True)
# particular solution + homogeneous basis
part = solve_linear(rows, rhs)
assert part is not None, "no affine solutions at all"
hom = nullspace(rows)
print(f"stage1: affine space dimension {len(hom)}", flush=True)

# ---- stage 2: hexagons ----------------------------------------------------
d = len(hom)
ts = sp.symbols(f"t0:{d}")


def to_sym(x):
    return sp.Rational(x.a) + sp.Rational(x.b) * sp.I


Tsym = [to_sym(part[idx]) + sum(ts[m] * to_sym(hom[m][idx]) for m in range(d))
        for idx in range(n * n)]

# precompute coproduct tensors as sparse maps
cop_list = {i: list(D.cop(D.basis(i)).items()) for i in range(n)}

eqs = set()
# hexagon 1: (Delta (x) id) T = T13 T23  in D^3
print("building hexagon 1...", flush=True)
lhs = {}
for i in range(n):
    for j in range(n):
        t = Tsym[i * n + j]
        if t == 0:
            continue
        for (p, q), c in cop_list[i]:
            key = (p, q, j)
            lhs[key] = lhs.get(key, 0) + to_sym(c) * t
rhs3 = {}
for i1 in range(n):
    for j1 in range(n):
        t1 = Tsym[i1 * n + j1]
        if t1 == 0:
            continue
        for i2 in range(n):
            for j2 in range(n):
                t2 = Tsym[i2 * n + j2]
                if t2 == 0:
                    continue
                # T13 T23: (i1 (x) 1 (x) j1)(1 (x) i2 (x) j2) = i1 (x) i2 (x) j1 j2
                prod = D.mult[(j1, j2)]
                for k, c in enumerate(prod):
                    if not c.is_zero():
                        key = (i1, i2, k)
                        rhs3[key] = rhs3.get(key, 0) + to_sym(c) * t1 * t2
for key in set(lhs) | set(rhs3):
    e = sp.expand(lhs.get(key, 0) - rhs3.get(key, 0))
    if e != 0:
        eqs.add(e)

print(f"hexagon1 gave {len(eqs)} equations; building hexagon 2...", flush=True)
lhs2 = {}
for i in range(n):
    for j in range(n):
        t = Tsym[i * n + j]
        if t == 0:
            continue
        for (p, q), c in cop_list[j]:
            key = (i, p, q)
            lhs2[key] = lhs2.get(key, 0) + to_sym(c) * t
rhs32 = {}
for i1 in range(n):
    for j1 in range(n):
        t1 = Tsym[i1 * n + j1]
        if t1 == 0:
            continue
        for i2 in range(n):
            for j2 in range(n):
                t2 = Tsym[i2 * n + j2]
                if t2 == 0:
                    continue
                # T13 T12: (i1 (x) 1 (x) j1)(i2 (x) j2 (x) 1) = i1 i2 (x) j2 (x) j1
                prod = D.mult[(i1, i2)]
                for k, c in enumerate(prod):
                    if not c.is_zero():
                        key = (k, j2, j1)
                        rhs32[key] = rhs32.get(key, 0) + to_sym(c) * t1 * t2
for key in set(lhs2) | set(rhs32):
    e = sp.expand(lhs2.get(key, 0) - rhs32.get(key, 0))
    if e != 0:
        eqs.add(e)

print(f"total {len(eqs)} polynomial equations in {d} unknowns; solving...", flush=True)
sols = sp.solve(list(eqs), list(ts), dict=True)
print(f"{len(sols)} quasitriangular structures (possibly with parameters)", flush=True)

# ---- stage 3: ribbon test --------------------------------------------------


def from_sym(x):
    x = sp.expand(sp.nsimplify(x))
    re, im = x.as_real_imag()
    return GR(Fraction(str(sp.Rational(re))), Fraction(str(sp.Rational(im))))


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
    for g in range(n):
        if D.mul(v, D.basis(g)) != D.mul(D.basis(g), v):
            return False
    return True


# group-likes (computed once)
gsyms = sp.symbols(f"g0:{n}")
geqs = []
for i in range(n):
    for j in range(n):
        s = sp.Integer(0)
        for t in range(n):
            for (p, q, c) in D.coprod[t]:
                if p == i and q == j:
                    s = s + gsyms[t] * to_sym(c)
        geqs.append(sp.expand(s - gsyms[i] * gsyms[j]))
geqs.append(sum((gsyms[k] * to_sym(D.counit[k]) for k in range(n)), sp.Integer(0)) - 1)
gsols = sp.solve(geqs, list(gsyms), dict=True)
gsols = [s for s in gsols if not any(v.free_symbols for v in s.values())]
print(f"{len(gsols)} group-likes")
grouplikes = []
for s in gsols:
    grouplikes.append([from_sym(s.get(gsyms[k], sp.Integer(0))) for k in range(n)])

found = []
for si, sol in enumerate(sols):
    # substitute; skip parametric solutions but note them
    vals = {}
    parametric = False
    for m in range(d):
        v = sol.get(ts[m], ts[m])
        if v.free_symbols:
            parametric = True
        vals[ts[m]] = v
    if parametric:
        print(f"solution {si}: parametric family: {sol}")
        # try a couple of rational parameter values
        free = sorted({f for v in vals.values() for f in v.free_symbols}, key=str)
        samples = [0, 1, -1, sp.Rational(1, 2), 2, sp.I, -sp.I]
        import itertools
        trials = list(itertools.product(samples, repeat=len(free)))[:40]
    else:
        trials = [()]
        free = []
    for trial in trials:
        subs = dict(zip(free, trial))
        try:
            Tv = [from_sym(sp.expand(Tsym[idx].subs({**{ts[m]: vals[ts[m]].subs(subs) for m in range(d)}, **subs})))
                  for idx in range(n * n)]
        except Exception:
            continue
        # invertibility of R as element of D (x) D: use it as matrix? R must be
        # invertible in the algebra D (x) D; test via the regular rep there --
        # expensive; instead require u invertible and YBE, which follow from
        # hexagons + Delta-commutation if R is invertible. Quick proxy: compute
        # u and try to invert it.
        terms = []
        for i in range(n):
            for j in range(n):
                if not Tv[i * n + j].is_zero():
                    a = vec(n); a[i] = Tv[i * n + j]
                    b = vec(n); b[j] = GR(1)
                    terms.append((a, b))
        u = vec(n)
        for (a, b) in terms:
            tmp = D.mul(apply_mat(S, b), a)
            u = [u[k] + tmp[k] for k in range(n)]
        uinv = invert(u)
        if uinv is None:
            continue
        uS = apply_mat(S, u)
        uSu = D.mul(u, uS)
        for gi, gamma in enumerate(grouplikes):
            ginv = invert(gamma)
            if ginv is None:
                continue
            v = D.mul(u, ginv)
            if not is_central(v):
                continue
            if apply_mat(S, v) != v:
                continue
            if D.mul(v, v) != uSu:
                continue
            epsv = sum((v[k] * D.counit[k] for k in range(n)), GR(0))
            if not (epsv == ONE):
                continue
            print(f"*** RIBBON FOUND: solution {si}, trial {trial}, group-like {gi}")
            found.append((si, trial, gi, Tv))
print(f"search done; {len(found)} ribbon quasitriangular structures")
