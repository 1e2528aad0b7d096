"""Independent reference implementations used only by the tests.

Nothing here imports the package's algorithms: determinants come from
sympy and the Leibniz expansion, roots from Weyl-group orbits, characters from
sympy polynomial products, comultiplication from variable substitution, and
invariants from dense sympy nullspaces of hand-assembled matrices.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb, prod

import sympy as sp


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inv * prod(m[i][perm[i]] for i in range(n))
    return total


def binom_matrix_det_sympy(N, K):
    return int(sp.Matrix(N + 1, N + 1, lambda s, r: comb(K + N - s, r)).det())


def cartan_textbook(family, n):
    """Cartan matrix written out from the Dynkin diagram (a_ij = <alpha_j, alpha_i^vee>)."""
    a = sp.zeros(n, n)
    for i in range(n):
        a[i, i] = 2
    edges = [(i, i + 1) for i in range(n - 1)] if family != "D" else [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    for i, j in edges:
        a[i, j] = a[j, i] = -1
    if family == "B":
        a[n - 1, n - 2] = -2
    if family == "C":
        a[n - 2, n - 1] = -2
    return a


def positive_roots_by_reflection(family, n):
    """Positive roots as the positive part of the Weyl orbit of the simple roots."""
    a = cartan_textbook(family, n)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * a[i, j] for j in range(n))
                img = list(beta)
                img[i] -= pairing
                img = tuple(int(x) for x in img)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return {r for r in seen if all(x >= 0 for x in r)}


def character_product(rank, factors):
    """Multiply characters given as {weight: coeff} with sympy polynomials in x_1..x_rank."""
    xs = sp.symbols(f"x1:{rank + 1}")
    total = sp.Integer(1)
    for ch in factors:
        total *= sum(c * prod(x ** e for x, e in zip(xs, w)) for w, c in ch.items())
    poly = sp.Poly(sp.expand(total), *xs)
    return {tuple(int(e) for e in mon): int(c) for mon, c in poly.terms() if c}


def comultiply_by_substitution(t_exps, u_exps):
    """Delta(m) read off m(t' t'', u' + u'') as {(left, right): coeff}."""
    k, l = len(t_exps), len(u_exps)
    t1, t2 = sp.symbols(f"a1:{k + 1}"), sp.symbols(f"b1:{k + 1}")
    u1, u2 = sp.symbols(f"c1:{l + 1}"), sp.symbols(f"d1:{l + 1}")
    expr = sp.Integer(1)
    for s, e in enumerate(t_exps):
        expr *= (t1[s] * t2[s]) ** e
    for r, e in enumerate(u_exps):
        expr *= (u1[r] + u2[r]) ** e
    expr = sp.expand(expr)
    out = {}
    for term in sp.Add.make_args(expr):
        coeff, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        left = (tuple(int(powers.get(x, 0)) for x in t1), tuple(int(powers.get(x, 0)) for x in u1))
        right = (tuple(int(powers.get(x, 0)) for x in t2), tuple(int(powers.get(x, 0)) for x in u2))
        out[(left, right)] = out.get((left, right), 0) + sp.Rational(coeff)
    return out


# --- dense module oracle for type A ------------------------------------------

def _wedge_action(n, i, a, b):
    """Matrix of the elementary matrix E_{ab} on Lambda^i C^n (sign from sorting)."""
    basis = list(combinations(range(n), i))
    pos = {S: j for j, S in enumerate(basis)}
    m = sp.zeros(len(basis), len(basis))
    for S, col in pos.items():
        if b in S and (a == b or a not in S):
            lst = list(S)
            lst[lst.index(b)] = a
            # sign of the permutation sorting lst
            sign = 1
            for p in range(len(lst)):
                for q in range(p + 1, len(lst)):
                    if lst[p] > lst[q]:
                        sign = -sign
            m[pos[tuple(sorted(lst))], col] += sign
    return m, basis


def sl_exterior(n, i):
    """(e, f, weights) for Lambda^i of sl_n from elementary matrices."""
    es, fs = [], []
    for a in range(n - 1):
        e, basis = _wedge_action(n, i, a, a + 1)
        f, _ = _wedge_action(n, i, a + 1, a)
        es.append(e)
        fs.append(f)
    weights = [tuple(int(a in S) - int(a + 1 in S) for a in range(n - 1)) for S in basis]
    return es, fs, weights


def invariant_dim_dense(n, factors, mu):
    """dim of (V_1 (x) ... (x) V_m)_mu killed by e_a (x) u^d, d < m, for evaluation factors (node, point)."""
    mats = [sl_exterior(n, node) for node, _ in factors]
    dims = [len(w) for _, _, w in mats]
    m = len(factors)
    weights = [()]
    for _, _, w in mats:
        weights = [x + (y,) for x in weights for y in w]
    tot_w = [tuple(sum(c) for c in zip(*ws)) for ws in weights]
    cols = [j for j, w in enumerate(tot_w) if w == tuple(mu)]
    if not cols:
        return 0
    blocks = []
    for a in range(n - 1):
        for d in range(m):
            op = sp.zeros(prod(dims), prod(dims))
            for j, ((node, p), (es, _, _)) in enumerate(zip(factors, mats)):
                left = sp.eye(prod(dims[:j]))
                right = sp.eye(prod(dims[j + 1:]))
                op += sp.Rational(p) ** d * sp.kronecker_product(left, es[a], right)
            blocks.append(op[:, cols])
    big = sp.Matrix.vstack(*blocks)
    return len(cols) - big.rank()
