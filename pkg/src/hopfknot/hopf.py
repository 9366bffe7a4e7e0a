"""Finite-dimensional Hopf algebras presented by structure constants.

An algebra is a field descriptor plus sparse structure tensors on a fixed
basis e_0 .. e_{n-1}:

    mult[(i, j)] = {k: m_ijk}        e_i e_j = sum_k m_ijk e_k
    unit         = {i: c_i}          1_H     = sum_i c_i e_i
    comult[i]    = {(j, k): c_ijk}   Delta(e_i) = sum c_ijk e_j (x) e_k
    counit[i]    = eps(e_i)
    antipode[i]  = {j: s_ij}         S(e_i) = sum_j s_ij e_j
    pivot        = optional vector g with S^2(x) = g x g^-1

Elements, tensors, and functionals are sparse coefficient dicts over the raw
scalars of the field.  All operations are exact; axiom verification checks on
basis elements only, which is complete because every axiom is multilinear.

Iterated coproducts follow the convention Delta^(0) = eps, Delta^(1) = id,
Delta^(n+1) = (id^(n-1) (x) Delta) o Delta^(n)  (Delta applied to the last
tensor slot).
"""

from __future__ import annotations

from .errors import (AlgebraMismatch, AxiomFailure, HopfknotError, InputError,
                     OrderMismatch)
from .linalg import invert_matrix, solve
from .scalars import Field, field_from_json, field_to_json

__all__ = [
    "HopfAlgebra", "Elem", "TensorElem", "Func", "AxiomCheck",
    "multiply", "comultiply", "iterated_comultiply", "antipode_power",
    "apply_functional", "apply_functional_slotwise", "verify_hopf_axioms",
    "is_group_like", "algebra_from_json", "algebra_to_json",
]


class AxiomCheck:
    """One verified axiom: name, pass flag, and a witness on failure."""

    def __init__(self, name: str, ok: bool, witness=None):
        self.name = name
        self.ok = ok
        self.witness = witness

    def __repr__(self):
        tail = "" if self.ok else f" witness={self.witness!r}"
        return f"<{self.name}: {'ok' if self.ok else 'FAIL'}{tail}>"


class HopfAlgebra:
    def __init__(self, field: Field, dim: int, labels, mult, unit, comult,
                 counit, antipode, pivot=None, name: str = ""):
        self.field = field
        self.dim = dim
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]
        if len(self.labels) != dim:
            raise InputError("label count != dim")
        self.mult = {k: _clean(field, dict(v)) for k, v in mult.items()}
        self.mult = {k: v for k, v in self.mult.items() if v}
        self.unit = _clean(field, dict(unit))
        self.comult = [_clean(field, dict(r)) for r in comult]
        self.counit = list(counit)
        self.antipode = [_clean(field, dict(r)) for r in antipode]
        self.pivot = _clean(field, dict(pivot)) if pivot is not None else None
        self.name = name
        self._antipode_inv = None
        self._s_powers = {0: None, 1: self.antipode}
        self._pivot_inv = None

    def __repr__(self):
        return f"<HopfAlgebra {self.name or ''} dim={self.dim} over {self.field}>"

    # -- raw vector helpers --------------------------------------------------

    def basis_vec(self, i: int) -> dict:
        return {i: self.field.one}

    def vec_add(self, a: dict, b: dict) -> dict:
        f = self.field
        out = dict(a)
        for k, v in b.items():
            s = f.add(out.get(k, f.zero), v)
            if f.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def vec_scale(self, c, a: dict) -> dict:
        f = self.field
        if f.is_zero(c):
            return {}
        return {k: f.mul(c, v) for k, v in a.items()}

    def vec_eq(self, a: dict, b: dict) -> bool:
        return _clean(self.field, a) == _clean(self.field, b)

    def mul_vec(self, x: dict, y: dict) -> dict:
        f = self.field
        mult = self.mult
        acc: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                row = mult.get((i, j))
                if not row:
                    continue
                c = f.mul(xi, yj)
                for k, v in row.items():
                    s = f.add(acc.get(k, f.zero), f.mul(c, v))
                    if f.is_zero(s):
                        acc.pop(k, None)
                    else:
                        acc[k] = s
        return acc

    def mul_many(self, vecs) -> dict:
        acc = dict(self.unit)
        for v in vecs:
            acc = self.mul_vec(acc, v)
        return acc

    def counit_vec(self, x: dict):
        f = self.field
        return f.sum(f.mul(v, self.counit[i]) for i, v in x.items())

    def comult_vec(self, x: dict) -> dict:
        f = self.field
        acc: dict = {}
        for i, xi in x.items():
            for jk, v in self.comult[i].items():
                s = f.add(acc.get(jk, f.zero), f.mul(xi, v))
                if f.is_zero(s):
                    acc.pop(jk, None)
                else:
                    acc[jk] = s
        return acc

    def iter_comult_vec(self, x: dict, n: int) -> dict:
        """Sparse order-n tensor {index tuple: coeff}; n = 0 gives {(): eps(x)}."""
        f = self.field
        if n == 0:
            c = self.counit_vec(x)
            return {} if f.is_zero(c) else {(): c}
        terms = {(i,): v for i, v in x.items()}
        for _ in range(n - 1):
            nxt: dict = {}
            for key, c in terms.items():
                last = key[-1]
                for (j, k), v in self.comult[last].items():
                    nk = key[:-1] + (j, k)
                    s = f.add(nxt.get(nk, f.zero), f.mul(c, v))
                    if f.is_zero(s):
                        nxt.pop(nk, None)
                    else:
                        nxt[nk] = s
            terms = nxt
        return terms

    def antipode_inv_rows(self):
        if self._antipode_inv is None:
            self._antipode_inv = invert_matrix(self.field, self.antipode, self.dim)
        return self._antipode_inv

    def apply_s_power(self, x: dict, d: int) -> dict:
        if d == 0:
            return dict(x)
        rows = self.antipode if d > 0 else self.antipode_inv_rows()
        out = x
        for _ in range(abs(d)):
            out = self._apply_rows(rows, out)
        return out

    def _apply_rows(self, rows, x: dict) -> dict:
        f = self.field
        acc: dict = {}
        for i, xi in x.items():
            for j, v in rows[i].items():
                s = f.add(acc.get(j, f.zero), f.mul(xi, v))
                if f.is_zero(s):
                    acc.pop(j, None)

                else:
                    acc[j] = s
        return acc

    def left_mult_cols(self, x: dict) -> list[dict]:
        """Columns of left multiplication by x (column j = x * e_j)."""
        return [self.mul_vec(x, self.basis_vec(j)) for j in range(self.dim)]

    def element_inverse(self, x: dict) -> dict:
        """y with x y = 1 = y x; raises if x is not invertible."""
        cols = self.left_mult_cols(x)
        rows = [{} for _ in range(self.dim)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                rows[i][j] = v
        rhs = [self.unit.get(i, self.field.zero) for i in range(self.dim)]
        y = solve(self.field, rows, rhs, self.dim)
        if y is None:
            raise HopfknotError("element is not invertible")
        yv = {i: v for i, v in enumerate(y) if not self.field.is_zero(v)}
        if not self.vec_eq(self.mul_vec(yv, x), self.unit):
            raise HopfknotError("element has a right but no two-sided inverse")
        return yv

    def pivot_inverse(self) -> dict:
        if self._pivot_inv is None:
            if self.pivot is None:
                raise HopfknotError("algebra has no pivot")
            self._pivot_inv = self.element_inverse(self.pivot)
        return self._pivot_inv

    def is_group_like_vec(self, x: dict) -> bool:
        f = self.field
        want = {}
        for i, xi in x.items():
            for j, xj in x.items():
                c = f.mul(xi, xj)
                if not f.is_zero(c):
                    want[(i, j)] = c
        return self.comult_vec(x) == want and f.eq(self.counit_vec(x), f.one)

    def random_vec(self, rng) -> dict:
        return _clean(self.field, {i: self.field.random(rng)
                                   for i in range(self.dim)})

    # -- public element wrappers ---------------------------------------------

    def elem(self, coeffs) -> "Elem":
        return Elem(self, coeffs)

    def basis_elem(self, i: int) -> "Elem":
        return Elem(self, {i: self.field.one})

    def one_elem(self) -> "Elem":
        return Elem(self, dict(self.unit))

    def func(self, coeffs) -> "Func":
        return Func(self, coeffs)


def _clean(field: Field, d: dict) -> dict:
    return {k: v for k, v in d.items() if not field.is_zero(v)}


class Elem:
    """Algebra element: coefficient vector over the basis."""

    def __init__(self, algebra: HopfAlgebra, coeffs):
        self.algebra = algebra
        if isinstance(coeffs, dict):
            self.vec = _clean(algebra.field, dict(coeffs))
        else:
            if len(coeffs) != algebra.dim:
                raise InputError("coefficient length != dim")
            self.vec = _clean(algebra.field, dict(enumerate(coeffs)))

    def _same(self, other: "Elem"):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other):
        self._same(other)
        return Elem(self.algebra, self.algebra.vec_add(self.vec, other.vec))

    def __sub__(self, other):
        self._same(other)
        f = self.algebra.field
        return self + Elem(self.algebra,
                           {k: f.neg(v) for k, v in other.vec.items()})

    def __mul__(self, other):
        self._same(other)
        return Elem(self.algebra, self.algebra.mul_vec(self.vec, other.vec))

    def scale(self, c):
        return Elem(self.algebra, self.algebra.vec_scale(c, self.vec))

    def __eq__(self, other):
        return (isinstance(other, Elem) and other.algebra is self.algebra
                and other.vec == self.vec)

    def __repr__(self):
        f = self.algebra.field
        parts = [f"{f.format(v)}*{self.algebra.labels[i]}"
                 for i, v in sorted(self.vec.items())]
        return " + ".join(parts) if parts else "0"


class TensorElem:
    """Sparse element of H^(x)k: map from basis index tuples to scalars."""

    def __init__(self, algebra: HopfAlgebra, order: int, terms: dict):
        self.algebra = algebra
        self.order = order
        self.terms = _clean(algebra.field, dict(terms))
        for key in self.terms:
            if len(key) != order or any(i >= algebra.dim for i in key):
                raise InputError(f"bad tensor key {key} for order {order}")

    def __eq__(self, other):
        return (isinstance(other, TensorElem) and other.algebra is self.algebra
                and other.order == self.order and other.terms == self.terms)

    def __mul__(self, other: "TensorElem") -> "TensorElem":
        """Slotwise algebra product (a1 (x) .. (x) ak)(b1 (x) .. (x) bk)."""
        if self.order != other.order:
            raise OrderMismatch("tensor orders differ")
        A = self.algebra
        f = A.field
        acc: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                partial = [((), f.mul(ca, cb))]
                for ai, bi in zip(ka, kb):
                    row = A.mult.get((ai, bi))
                    if not row:
                        partial = []
                        break
                    partial = [(key + (k,), f.mul(c, v))
                               for key, c in partial for k, v in row.items()]
                for key, c in partial:
                    s = f.add(acc.get(key, f.zero), c)
                    if f.is_zero(s):
                        acc.pop(key, None)
                    else:
                        acc[key] = s
        return TensorElem(A, self.order, acc)

    def __repr__(self):
        return f"<tensor order={self.order} terms={len(self.terms)}>"


def tensor_of(*elems: Elem) -> TensorElem:
    A = elems[0].algebra
    f = A.field
    terms = {(): f.one}
    for e in elems:
        if e.algebra is not A:
            raise AlgebraMismatch("tensor factors from different algebras")
        terms = {key + (i,): f.mul(c, v)
                 for key, c in terms.items() for i, v in e.vec.items()}
    return TensorElem(A, len(elems), terms)


class Func:
    """Functional on H: dense covector."""

    def __init__(self, algebra: HopfAlgebra, coeffs):
        self.algebra = algebra
        if isinstance(coeffs, dict):
            co = [algebra.field.zero] * algebra.dim
            for i, v in coeffs.items():
                co[i] = v
            self.covec = co
        else:
            if len(coeffs) != algebra.dim:
                raise InputError("covector length != dim")
            self.covec = list(coeffs)

    def __call__(self, x: Elem):
        if x.algebra is not self.algebra:
            raise AlgebraMismatch("functional applied across algebras")
        f = self.algebra.field
        return f.sum(f.mul(v, self.covec[i]) for i, v in x.vec.items())

    def apply_raw(self, vec: dict):
        f = self.algebra.field
        return f.sum(f.mul(v, self.covec[i]) for i, v in vec.items())


# -- spec operations ---------------------------------------------------------

def multiply(x: Elem, y: Elem) -> Elem:
    return x * y


def comultiply(x: Elem) -> TensorElem:
    return TensorElem(x.algebra, 2, x.algebra.comult_vec(x.vec))


def iterated_comultiply(x: Elem, n: int) -> TensorElem:
    if n < 0:
        raise InputError("iterated coproduct needs n >= 0")
    return TensorElem(x.algebra, n, x.algebra.iter_comult_vec(x.vec, n))


def antipode_power(x: Elem, d: int) -> Elem:
    return Elem(x.algebra, x.algebra.apply_s_power(x.vec, d))


def apply_functional(f: Func, x: Elem):
    return f(x)


def apply_functional_slotwise(fs: list[Func], t: TensorElem):
    if len(fs) != t.order:
        raise OrderMismatch(f"{len(fs)} functionals vs order {t.order}")
    field = t.algebra.field
    total = field.zero
    for key, c in t.terms.items():
        prod = c
        for fn, idx in zip(fs, key):
            prod = field.mul(prod, fn.covec[idx])
            if field.is_zero(prod):
                break
        total = field.add(total, prod)
    return total


def is_group_like(x: Elem) -> bool:
    return x.algebra.is_group_like_vec(x.vec)


# -- axiom verification ------------------------------------------------------

def verify_hopf_axioms(H: HopfAlgebra, bialgebra_witness=None) -> list[AxiomCheck]:
    """Exhaustive structural check; failures are reported, never raised.

    ``bialgebra_witness`` may supply (gens, factors) where gens is a list of
    element vectors and factors[k] = (a, b) with e_k = gens[a] * gens[b],
    verified here.  Multiplicativity of Delta on all generator/basis pairs
    plus associativity then implies it on all basis pairs, so the shortcut
    loses no coverage while avoiding the n^2 * |Delta-row|^2 blowup.
    """
    f = H.field
    n = H.dim
    checks: list[AxiomCheck] = []

    def add(name, ok, witness=None):
        checks.append(AxiomCheck(name, ok, witness))

    # unit
    bad = None
    for i in range(n):
        e = H.basis_vec(i)
        if (not H.vec_eq(H.mul_vec(H.unit, e), e)
                or not H.vec_eq(H.mul_vec(e, H.unit), e)):
            bad = i
            break
    add("unit", bad is None, bad)

    # associativity
    bad = None
    rows = H.mult
    for i in range(n):
        if bad is not None:
            break
        for j in range(n):
            row_ij = rows.get((i, j), {})
            for k in range(n):
                lhs: dict = {}
                for a, va in row_ij.items():
                    r = rows.get((a, k))
                    if not r:
                        continue
                    for t, vt in r.items():
                        s = f.add(lhs.get(t, f.zero), f.mul(va, vt))
                        if f.is_zero(s):
                            lhs.pop(t, None)
                        else:
                            lhs[t] = s
                rhs: dict = {}
                for b, vb in rows.get((j, k), {}).items():
                    r = rows.get((i, b))
                    if not r:
                        continue
                    for t, vt in r.items():
                        s = f.add(rhs.get(t, f.zero), f.mul(vb, vt))
                        if f.is_zero(s):
                            rhs.pop(t, None)
                        else:
                            rhs[t] = s
                if lhs != rhs:
                    bad = (i, j, k)
                    break
            if bad is not None:
                break
    add("associativity", bad is None, bad)

    # counit axiom
    bad = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), v in H.comult[i].items():
            c = f.mul(H.counit[j], v)
            if not f.is_zero(c):
                left[k] = f.add(left.get(k, f.zero), c)
            c = f.mul(v, H.counit[k])
            if not f.is_zero(c):
                right[j] = f.add(right.get(j, f.zero), c)
        e = H.basis_vec(i)
        if not (H.vec_eq(left, e) and H.vec_eq(right, e)):
            bad = i
            break
    add("counit", bad is None, bad)

    # coassociativity
    bad = None
    for i in range(n):
        lhs: dict = {}
        rhs: dict = {}
        for (j, k), v in H.comult[i].items():
            for (a, b), w in H.comult[j].items():
                key = (a, b, k)
                s = f.add(lhs.get(key, f.zero), f.mul(v, w))
                if f.is_zero(s):
                    lhs.pop(key, None)
                else:
                    lhs[key] = s
            for (a, b), w in H.comult[k].items():
                key = (j, a, b)
                s = f.add(rhs.get(key, f.zero), f.mul(v, w))
                if f.is_zero(s):
                    rhs.pop(key, None)
                else:
                    rhs[key] = s
        if lhs != rhs:
            bad = i
            break
    add("coassociativity", bad is None, bad)

    # counit is an algebra map
    bad = None
    if not f.eq(H.counit_vec(H.unit), f.one):
        bad = "unit"
    else:
        for i in range(n):
            if bad is not None:
                break
            for j in range(n):
                lhs = H.counit_vec(H.mult.get((i, j), {}))
                if not f.eq(lhs, f.mul(H.counit[i], H.counit[j])):
                    bad = (i, j)
                    break
    add("counit_multiplicative", bad is None, bad)

    # comultiplication is an algebra map
    add("comult_multiplicative", *_check_comult_map(H, bialgebra_witness))

    # antipode axiom
    bad = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), v in H.comult[i].items():
            sj = H.antipode[j]
            for a, va in sj.items():
                row = H.mult.get((a, k))
                if row:
                    c = f.mul(v, va)
                    for t, vt in row.items():
                        s = f.add(left.get(t, f.zero), f.mul(c, vt))
                        if f.is_zero(s):
                            left.pop(t, None)
                        else:
                            left[t] = s
            sk = H.antipode[k]
            for b, vb in sk.items():
                row = H.mult.get((j, b))
                if row:
                    c = f.mul(v, vb)
                    for t, vt in row.items():
                        s = f.add(right.get(t, f.zero), f.mul(c, vt))
                        if f.is_zero(s):
                            right.pop(t, None)
                        else:
                            right[t] = s
        target = H.vec_scale(H.counit[i], H.unit)
        if not (H.vec_eq(left, target) and H.vec_eq(right, target)):
            bad = (i, H.labels[i])
            break
    add("antipode", bad is None, bad)

    # antipode bijective
    try:
        H.antipode_inv_rows()
        add("antipode_bijective", True)
    except HopfknotError:
        add("antipode_bijective", False, "singular antipode matrix")

    # pivot axioms
    if H.pivot is not None:
        add("pivot_group_like", H.is_group_like_vec(H.pivot))
        try:
            ginv = H.pivot_inverse()
            bad = None
            for i in range(n):
                s2 = H.apply_s_power(H.basis_vec(i), 2)
                conj = H.mul_vec(H.mul_vec(H.pivot, H.basis_vec(i)), ginv)
                if not H.vec_eq(s2, conj):
                    bad = (i, H.labels[i])
                    break
            add("pivot_conjugation", bad is None, bad)
        except HopfknotError:
            add("pivot_conjugation", False, "pivot not invertible")

    return checks


def _check_comult_map(H: HopfAlgebra, witness):
    f = H.field
    n = H.dim
    unit_cop = H.comult_vec(H.unit)
    want = {}
    for i, vi in H.unit.items():
        for j, vj in H.unit.items():
            c = f.mul(vi, vj)
            if not f.is_zero(c):
                want[(i, j)] = c
    if unit_cop != want:
        return False, "Delta(1) != 1(x)1"

    def delta_of_vec(vec):
        return H.comult_vec(vec)

    def tensor_mult_pairs(ta: dict, tb: dict) -> dict:
        acc: dict = {}
        for (a1, a2), ca in ta.items():
            for (b1, b2), cb in tb.items():
                r1 = H.mult.get((a1, b1))
                if not r1:
                    continue
                r2 = H.mult.get((a2, b2))
                if not r2:
                    continue
                c = f.mul(ca, cb)
                for k1, v1 in r1.items():
                    cv = f.mul(c, v1)
                    for k2, v2 in r2.items():
                        key = (k1, k2)
                        s = f.add(acc.get(key, f.zero), f.mul(cv, v2))
                        if f.is_zero(s):
                            acc.pop(key, None)
                        else:
                            acc[key] = s
        return acc

    if witness is None:
        for i in range(n):
            di = H.comult[i]
            for j in range(n):
                lhs = delta_of_vec(H.mult.get((i, j), {}))
                rhs = tensor_mult_pairs(di, H.comult[j])
                if lhs != rhs:
                    return False, (i, j)
        return True, None

    gens, factors = witness
    # each basis element must factor exactly through the generators
    for k, (a, b) in factors.items():
        if not H.vec_eq(H.mul_vec(gens[a], gens[b]), H.basis_vec(k)):
            return False, f"bad factorization of basis {k}"
    # multiplicativity on (generator, basis) pairs; with associativity this
    # extends to all basis pairs via the factorizations above
    gen_deltas = [delta_of_vec(g) for g in gens]
    for gi, g in enumerate(gens):
        dg = gen_deltas[gi]
        for j in range(n):
            lhs = delta_of_vec(H.mul_vec(g, H.basis_vec(j)))
            rhs = tensor_mult_pairs(dg, H.comult[j])
            if lhs != rhs:
                return False, ("gen", gi, j)
    return True, None


def all_pass(checks: list[AxiomCheck]) -> bool:
    return all(c.ok for c in checks)


def require_axioms(H: HopfAlgebra, **kw):
    checks = verify_hopf_axioms(H, **kw)
    for c in checks:
        if not c.ok:
            raise AxiomFailure(f"{c.name} failed with witness {c.witness!r}")
    return checks


# -- JSON --------------------------------------------------------------------

def algebra_from_json(obj) -> HopfAlgebra:
    try:
        field = field_from_json(obj)
        dim = int(obj["dim"])
        labels = obj.get("labels")
        mult: dict = {}
        for i, j, k, c in obj["mult"]:
            mult.setdefault((i, j), {})[k] = field.parse(c)
        unit = {i: field.parse(c) for i, c in enumerate(obj["unit"])}
        comult = [{} for _ in range(dim)]
        for i, j, k, c in obj["comult"]:
            comult[i][(j, k)] = field.parse(c)
        counit = [field.parse(c) for c in obj["counit"]]
        antipode = [{j: field.parse(c) for j, c in enumerate(row)}
                    for row in obj["antipode"]]
        pivot = None
        if obj.get("pivot") is not None:
            pivot = {i: field.parse(c) for i, c in enumerate(obj["pivot"])}
        return HopfAlgebra(field, dim, labels, mult, unit, comult, counit,
                           antipode, pivot, name=obj.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed algebra JSON: {exc}") from exc


def algebra_to_json(H: HopfAlgebra):
    f = H.field
    out = dict(field_to_json(f))
    out["dim"] = H.dim
    out["labels"] = H.labels
    out["mult"] = [[i, j, k, f.to_json(v)]
                   for (i, j), row in sorted(H.mult.items())
                   for k, v in sorted(row.items())]
    out["unit"] = [f.to_json(H.unit.get(i, f.zero)) for i in range(H.dim)]
    out["comult"] = [[i, j, k, f.to_json(v)]
                     for i in range(H.dim)
                     for (j, k), v in sorted(H.comult[i].items())]
    out["counit"] = [f.to_json(c) for c in H.counit]
    out["antipode"] = [[f.to_json(H.antipode[i].get(j, f.zero))
                        for j in range(H.dim)] for i in range(H.dim)]
    if H.pivot is not None:
        out["pivot"] = [f.to_json(H.pivot.get(i, f.zero)) for i in range(H.dim)]
    if H.name:
        out["name"] = H.name
    return out
