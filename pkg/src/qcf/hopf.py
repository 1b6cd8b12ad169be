"""Hopf algebra structures on the co-Frobenius families.

Three constructions:

* a closed-form product on the line family with offset s, on finitely
  supported elements (two branches, the second weighted by a free scalar
  alpha and only reachable when the combined x-degree overflows s);
* the same product transported to the cycle family, vertex indices mod n;
* an explicit finite-dimensional table on basis {h x^u : h in G, 0 <= u <= s}
  for a finite group G with a central element g and a character chi with
  chi(g) = q, subject to x h = chi(h) h x and x^(s+1) = alpha (g^(s+1) - 1).

Antipodes are computed recursively along the filtration by x-degree and then
verified; nothing about an antipode is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lincomb import LinComb, expand_slot, map_linear, pair_tensor
from .scalars import Cyc, RootOfUnity, cached_mul, q_binomial, q_factorial

Label = tuple  # (group element index, x-degree) for the finite tables


class HopfError(ValueError):
    pass


# ---------------------------------------------------------------------------
# finite group data


@dataclass(frozen=True)
class FiniteGroupData:
    """A finite group with a distinguished central element and a character.

    The character values are roots of unity; chi(g) must be the chosen
    primitive root q. Everything is validated before a table is built.
    """

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    identity: int
    g: int
    chi: tuple[RootOfUnity, ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        for b in range(self.order):
            if self.table[a][b] == self.identity:
                return b
        raise HopfError(f"element {self.names[a]} has no inverse")

    def element_order(self, a: int) -> int:
        k, cur = 1, a
        while cur != self.identity:
            cur = self.table[cur][a]
            k += 1
            if k > self.order:
                raise HopfError("multiplication table is not a group")
        return k

    def power(self, a: int, t: int) -> int:
        if t < 0:
            return self.power(self.inverse(a), -t)
        cur = self.identity
        for _ in range(t):
            cur = self.table[cur][a]
        return cur

    def validate(self, s: int, q: RootOfUnity, alpha: Cyc) -> None:
        n_elems = self.order
        if s < 1:
            raise HopfError(f"x-degree bound s must be >= 1, got {s}")
        if q.order != s + 1:
            raise HopfError(
                f"q must be a primitive root of order s+1 = {s + 1}, got order {q.order}"
            )
        for i, row in enumerate(self.table):
            if len(row) != n_elems or any(not 0 <= x < n_elems for x in row):
                raise HopfError(f"malformed multiplication table row {i}")
        e = self.identity
        for i in range(n_elems):
            if self.table[e][i] != i or self.table[i][e] != i:
                raise HopfError(f"identity law fails at {self.names[i]}")
        for a in range(n_elems):
            for b in range(n_elems):
                for c in range(n_elems):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise HopfError(
                            f"associativity fails at ({self.names[a]}, {self.names[b]}, {self.names[c]})"
                        )
        for a in range(n_elems):
            self.inverse(a)
        for h in range(n_elems):
            if self.table[self.g][h] != self.table[h][self.g]:
                raise HopfError(f"distinguished element is not central: fails at {self.names[h]}")
        chi_s = [r.scalar() for r in self.chi]
        for a in range(n_elems):
            for b in range(n_elems):
                if chi_s[self.table[a][b]] != chi_s[a] * chi_s[b]:
                    raise HopfError(
                        f"character is not multiplicative at ({self.names[a]}, {self.names[b]})"
                    )
        if chi_s[self.g] != q.scalar():
            raise HopfError("character does not send the distinguished element to q")
        if not alpha.is_zero():
            for a in range(n_elems):
                if (s + 1) % self.chi[a].order != 0:
                    raise HopfError(
                        "alpha may be nonzero only when the character has order dividing s+1; "
                        f"fails at {self.names[a]}"
                    )


def cyclic_table(n: int) -> tuple[tuple[int, ...], ...]:
    if n < 1:
        raise HopfError(f"cyclic group order must be >= 1, got {n}")
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def cyclic_hopf_datum(n: int, s: int, q: RootOfUnity) -> FiniteGroupData:
    """Cyclic group of order n, distinguished generator, chi(c^k) = q^k."""
    if n % (s + 1) != 0:
        raise HopfError(f"{s + 1} does not divide {n}: no such character exists")
    names = tuple("e" if k == 0 else f"c{k}" for k in range(n))
    chi = tuple(q.power(k) for k in range(n))
    return FiniteGroupData(cyclic_table(n), names, identity=0, g=1 % n, chi=chi)


def cyclic_x_c2_hopf_datum(n: int, s: int, q: RootOfUnity) -> FiniteGroupData:
    """C_n x C_2 with g = (c, e); the character ignores the second factor."""
    if n % (s + 1) != 0:
        raise HopfError(f"{s + 1} does not divide {n}: no such character exists")
    elems = [(i, f) for i in range(n) for f in range(2)]
    index = {el: k for k, el in enumerate(elems)}
    table = tuple(
        tuple(index[((i + j) % n, (f + t) % 2)] for (j, t) in elems) for (i, f) in elems
    )
    names = tuple(f"c{i}t{f}" for (i, f) in elems)
    chi = tuple(q.power(i) for (i, f) in elems)
    return FiniteGroupData(table, names, identity=index[(0, 0)], g=index[(1 % n, 0)], chi=chi)


def dihedral_table(n: int):
    """Order 2n, elements r^i s^f with s r = r^(-1) s."""
    if n < 1:
        raise HopfError(f"dihedral parameter must be >= 1, got {n}")
    elems = [(i, f) for i in range(n) for f in range(2)]
    index = {el: k for k, el in enumerate(elems)}
    table = []
    for (i, f) in elems:
        row = []
        for (j, t) in elems:
            jj = j if f == 0 else -j
            row.append(index[((i + jj) % n, (f + t) % 2)])
        table.append(tuple(row))
    names = tuple(f"r{i}s{f}" for (i, f) in elems)
    return tuple(table), names, index


def dihedral_hopf_datum(n: int, s: int, q: RootOfUnity) -> FiniteGroupData | None:
    """Dihedral group of order 2n when it has a central element of order n
    hit by some character; otherwise None. Characters send the rotation to
    a sign, so only small cases qualify."""
    table, names, index = dihedral_table(n)
    order = 2 * n
    identity = index[(0, 0)]

    def elem_order(a: int) -> int:
        k, cur = 1, a
        while cur != identity:
            cur = table[cur][a]
            k += 1
        return k

    central = [
        a
        for a in range(order)
        if all(table[a][h] == table[h][a] for h in range(order)) and elem_order(a) == n
    ]
    qs = q.scalar()
    elems = [(i, f) for i in range(n) for f in range(2)]
    one, minus = Cyc.one(), Cyc.rational(-1)
    for g in central:
        for cr in (one, minus):
            if not (cr ** n).is_one():
                continue
            for cs in (one, minus):
                chi = tuple(_as_root(cr ** i * cs ** f) for (i, f) in elems)
                if chi[g].scalar() != qs:
                    continue
                datum = FiniteGroupData(table, names, identity, g, chi)
                try:
                    datum.validate(s, q, Cyc.zero())
                except HopfError:
                    continue
                return datum
    return None


def _as_root(value: Cyc) -> RootOfUnity:
    """Recognize an exact root of unity, normalized to primitive form."""
    from math import gcd

    if value.is_one():
        return RootOfUnity(1, 0)
    if value == Cyc.rational(-1):
        return RootOfUnity(2, 1)
    m = value.m
    for k in range(m):
        if value == Cyc.root(m, k):
            d = gcd(k, m)
            return RootOfUnity(m // d, k // d)
    raise HopfError(f"{value!r} is not a root of unity")


def group_from_csv_rows(rows: list[list[int]], names: list[str] | None = None):
    """Multiplication table as a CSV-style matrix of 0-based indices."""
    n = len(rows)
    table = tuple(tuple(int(x) for x in row) for row in rows)
    if any(len(row) != n for row in table):
        raise HopfError("multiplication table must be square")
    identity = None
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise HopfError("no identity element in table")
    names = tuple(names) if names else tuple(f"g{i}" for i in range(n))
    return table, names, identity


# ---------------------------------------------------------------------------
# closed-form products on the line and cycle families


class _QTables:
    def __init__(self, s: int, q: RootOfUnity, alpha: Cyc):
        if s < 1:
            raise HopfError(f"s must be >= 1, got {s}")
        if q.order != s + 1:
            raise HopfError(
                f"q must be a primitive root of order {s + 1}, got order {q.order}"
            )
        self.s = s
        self.q = q
        self.alpha = alpha
        qs = q.scalar()
        self.q_scalar = qs
        self.qpow = [Cyc.one()]
        for _ in range(s):
            self.qpow.append(self.qpow[-1] * qs)
        self.binom = {}
        for a in range(2 * s + 1):
            for b in range(a + 1):
                self.binom[(a, b)] = q_binomial(a, b, qs)
        self.fac = [q_factorial(u, qs) for u in range(s + 1)]
        self.fac_inv = []
        for u, f in enumerate(self.fac):
            if f.is_zero():
                raise HopfError(f"q-factorial of {u} vanishes; q is not primitive")
            self.fac_inv.append(f.inv())
        self.overflow = {}
        for u in range(s + 1):
            for v in range(s + 1):
                if u + v >= s + 1:
                    coef = q_factorial(u + v - s - 1, qs) * self.fac_inv[u] * self.fac_inv[v]
                    self.overflow[(u, v)] = alpha * coef


class AinfProduct:
    """Product on labels (i, u) = the path from vertex i of length u, 0 <= u <= s."""

    def __init__(self, s: int, q: RootOfUnity, alpha: Cyc):
        self.t = _QTables(s, q, alpha)
        self.s = s

    def product(self, a: Label, b: Label) -> LinComb:
        (i, u), (j, v) = a, b
        s = self.s
        t = self.t
        c = t.qpow[(j * u) % (s + 1)]
        if u + v <= s:
            return LinComb.basis((i + j, u + v), cached_mul(c, t.binom[(u + v, u)]))
        coef = cached_mul(c, t.overflow[(u, v)])
        if coef.is_zero():
            return LinComb.zero()
        w = u + v - s - 1
        out = LinComb.basis((i + j + s + 1, w), coef)
        out.add_term((i + j, w), -coef)
        return out

    def coproduct(self, a: Label) -> LinComb:
        i, u = a
        out = LinComb()
        for h in range(u + 1):
            out.add_term(((i, h), (i + h, u - h)), Cyc.one())
        return out

    def counit(self, a: Label) -> Cyc:
        return Cyc.one() if a[1] == 0 else Cyc.zero()


class CnProduct:
    """The same product with vertex indices reduced mod n; needs s+1 | n."""

    def __init__(self, n: int, s: int, q: RootOfUnity, alpha: Cyc):
        if n % (s + 1) != 0:
            raise HopfError(f"{s + 1} does not divide {n}")
        self.t = _QTables(s, q, alpha)
        self.n = n
        self.s = s

    def labels(self) -> list[Label]:
        return [(i, u) for i in range(self.n) for u in range(self.s + 1)]

    def product(self, a: Label, b: Label) -> LinComb:
        (i, u), (j, v) = a, b
        n, s, t = self.n, self.s, self.t
        c = t.qpow[(j * u) % (s + 1)]
        if u + v <= s:
            return LinComb.basis(((i + j) % n, u + v), cached_mul(c, t.binom[(u + v, u)]))
        coef = cached_mul(c, t.overflow[(u, v)])
        if coef.is_zero():
            return LinComb.zero()
        w = u + v - s - 1
        out = LinComb.basis(((i + j + s + 1) % n, w), coef)
        out.add_term(((i + j) % n, w), -coef)
        return out

    def coproduct(self, a: Label) -> LinComb:
        i, u = a
        out = LinComb()
        for h in range(u + 1):
            out.add_term(((i, h), ((i + h) % self.n, u - h)), Cyc.one())
        return out

    def counit(self, a: Label) -> Cyc:
        return Cyc.one() if a[1] == 0 else Cyc.zero()


# ---------------------------------------------------------------------------
# finite Hopf tables


@dataclass
class HopfTable:
    """Fully materialized structure maps on a finite basis."""

    labels: tuple
    unit: Label
    degree: dict
    product: dict  # (label, label) -> LinComb
    coproduct: dict  # label -> LinComb over label pairs
    counit: dict  # label -> Cyc
    antipode: dict | None = None  # label -> LinComb
    meta: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def mul_lin_basis(self, x: LinComb, b) -> LinComb:
        out = LinComb()
        for l, c in x.items():
            for l2, c2 in self.product[(l, b)].items():
                out.add_term(l2, cached_mul(c, c2))
        return out

    def mul_basis_lin(self, a, y: LinComb) -> LinComb:
        out = LinComb()
        for l, c in y.items():
            for l2, c2 in self.product[(a, l)].items():
                out.add_term(l2, cached_mul(c, c2))
        return out

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        out = LinComb()
        for l1, c1 in x.items():
            for l2, c2 in y.items():
                for l3, c3 in self.product[(l1, l2)].items():
                    out.add_term(l3, cached_mul(cached_mul(c1, c2), c3))
        return out

    def mul_tensor2(self, x: LinComb, y: LinComb) -> LinComb:
        # componentwise product on the tensor square
        out = LinComb()
        for (a1, a2), c1 in x.items():
            for (b1, b2), c2 in y.items():
                left = self.product[(a1, b1)]
                right = self.product[(a2, b2)]
                c = cached_mul(c1, c2)
                for l1, d1 in left.items():
                    for l2, d2 in right.items():
                        out.add_term((l1, l2), cached_mul(c, cached_mul(d1, d2)))
        return out

    def grouplike_labels(self) -> list:
        out = []
        for b in self.labels:
            if self.counit[b].is_one() and self.coproduct[b] == LinComb.basis((b, b)):
                out.append(b)
        return out


def build_Hn(s: int, q: RootOfUnity, G: FiniteGroupData, alpha: Cyc) -> HopfTable:
    """Table on {h x^u}: x h = chi(h) h x, x^(s+1) = alpha (g^(s+1) - 1),
    grouplike group elements, and the skew-primitive generator pattern for x."""
    G.validate(s, q, alpha)
    order = G.order
    qs = q.scalar()
    chi_s = [r.scalar() for r in G.chi]
    chi_pow = [[Cyc.one()] for _ in range(order)]
    for h in range(order):
        for _ in range(s):
            chi_pow[h].append(chi_pow[h][-1] * chi_s[h])
    g_pows = [G.identity]
    for _ in range(s + 1):
        g_pows.append(G.mul(g_pows[-1], G.g))
    binom = {}
    for a in range(s + 1):
        for b in range(a + 1):
            binom[(a, b)] = q_binomial(a, b, qs)

    labels = tuple((h, u) for h in range(order) for u in range(s + 1))
    product: dict = {}
    for (h, u) in labels:
        for (k, v) in labels:
            c = chi_pow[k][u]
            if u + v <= s:
                product[((h, u), (k, v))] = LinComb.basis((G.mul(h, k), u + v), c)
            else:
                coef = c * alpha
                if coef.is_zero():
                    product[((h, u), (k, v))] = LinComb.zero()
                else:
                    w = u + v - s - 1
                    hk = G.mul(h, k)
                    out = LinComb.basis((G.mul(hk, g_pows[s + 1]), w), coef)
                    out.add_term((hk, w), -coef)
                    product[((h, u), (k, v))] = out
    coproduct: dict = {}
    counit: dict = {}
    degree: dict = {}
    for (h, u) in labels:
        out = LinComb()
        for j in range(u + 1):
            out.add_term(
                ((h, u - j), (G.mul(h, g_pows[u - j]), j)), binom[(u, j)]
            )
        coproduct[(h, u)] = out
        counit[(h, u)] = Cyc.one() if u == 0 else Cyc.zero()
        degree[(h, u)] = u
    return HopfTable(
        labels=labels,
        unit=(G.identity, 0),
        degree=degree,
        product=product,
        coproduct=coproduct,
        counit=counit,
        meta={
            "kind": "lifted quantum line",
            "s": s,
            "q_order": q.order,
            "q_exponent": q.exponent,
            "group_order": order,
            "g": G.names[G.g],
            "g_order": G.element_order(G.g),
            "dimension": len(labels),
        },
    )


def group_algebra(table, names, identity) -> HopfTable:
    """Group Hopf algebra: grouplike basis, inverse antipode."""
    order = len(table)
    labels = tuple(range(order))
    product = {
        (a, b): LinComb.basis(table[a][b]) for a in labels for b in labels
    }
    coproduct = {a: LinComb.basis((a, a)) for a in labels}
    counit = {a: Cyc.one() for a in labels}
    degree = {a: 0 for a in labels}
    return HopfTable(
        labels=labels,
        unit=identity,
        degree=degree,
        product=product,
        coproduct=coproduct,
        counit=counit,
        meta={"kind": "group algebra", "group_order": order, "dimension": order},
    )


def compute_antipode(table: HopfTable, order=None) -> dict:
    """Recursive antipode along increasing filtration degree.

    Grouplikes invert through the product table; any other basis element c
    must have a unique coproduct term of the shape c (x) grouplike, which is
    solved for. Both convolution identities are verified before returning.
    """
    if order is None:
        order = sorted(table.labels, key=lambda b: (table.degree[b], repr(b)))
    grouplikes = set(table.grouplike_labels())
    unit = table.unit
    inverse: dict = {}
    for a in grouplikes:
        inv = None
        for b in grouplikes:
            if table.product[(a, b)] == LinComb.basis(unit) and table.product[
                (b, a)
            ] == LinComb.basis(unit):
                inv = b
                break
        if inv is None:
            raise HopfError(f"grouplike {a!r} is not invertible")
        inverse[a] = inv

    antipode: dict = {}
    for c in order:
        if c in grouplikes:
            antipode[c] = LinComb.basis(inverse[c])
            continue
        top = [(b, coeff) for (a, b), coeff in table.coproduct[c].items() if a == c]
        if len(top) != 1 or top[0][0] not in grouplikes:
            raise HopfError(
                f"coproduct of {c!r} lacks a unique leading term with grouplike right factor"
            )
        gamma, lead = top[0]
        acc = LinComb.basis(unit, table.counit[c])
        for (a, b), coeff in table.coproduct[c].items():
            if a == c:
                continue
            if a not in antipode:
                raise HopfError(f"filtration order broken: {a!r} needed before {c!r}")
            acc = acc - table.mul_lin_basis(antipode[a], b).scale(coeff)
        antipode[c] = table.mul_lin_basis(acc, inverse[gamma]).scale(lead.inv())

    for c in table.labels:
        expect = LinComb.basis(unit, table.counit[c])
        left = LinComb()
        right = LinComb()
        for (a, b), coeff in table.coproduct[c].items():
            left = left + table.mul_lin_basis(antipode[a], b).scale(coeff)
            right = right + table.mul(LinComb.basis(a), antipode[b]).scale(coeff)
        if left != expect or right != expect:
            raise HopfError(f"computed antipode fails the convolution identity at {c!r}")
    return antipode


def with_antipode(table: HopfTable) -> HopfTable:
    table.antipode = compute_antipode(table)
    return table


@dataclass
class CheckResult:
    ok: bool
    failure: str | None = None


@dataclass
class HopfVerifyReport:
    ok: bool
    checks: dict
    dimension: int

    def first_failure(self) -> str | None:
        for name, res in self.checks.items():
            if not res.ok:
                return f"{name}: {res.failure}"
        return None


def verify_hopf(table: HopfTable) -> HopfVerifyReport:
    """Exhaustive axiom sweep over all basis tuples; failures are report
    content, never exceptions."""
    labels = table.labels
    unit = table.unit
    checks: dict[str, CheckResult] = {}

    def run(name, gen):
        for failure in gen:
            checks[name] = CheckResult(False, failure)
            return
        checks[name] = CheckResult(True)

    def unit_laws():
        if not table.counit[unit].is_one():
            yield "counit of the unit is not 1"
        if table.coproduct[unit] != LinComb.basis((unit, unit)):
            yield "coproduct of the unit is not unit (x) unit"
        for b in labels:
            if table.product[(unit, b)] != LinComb.basis(b):
                yield f"1 * {b!r}"
                return
            if table.product[(b, unit)] != LinComb.basis(b):
                yield f"{b!r} * 1"
                return

    run("unit_laws", unit_laws())

    def associativity():
        pair = table.product
        for a in labels:
            for b in labels:
                ab = pair[(a, b)]
                for c in labels:
                    if table.mul_lin_basis(ab, c) != table.mul_basis_lin(a, pair[(b, c)]):
                        yield f"({a!r} {b!r} {c!r})"
                        return

    run("associativity", associativity())

    def coassociativity():
        for b in labels:
            d = table.coproduct[b]
            lhs = expand_slot(d, 0, lambda l: table.coproduct[l])
            rhs = expand_slot(d, 1, lambda l: table.coproduct[l])
            if lhs != rhs:
                yield f"{b!r}"
                return

    run("coassociativity", coassociativity())

    def counit_laws():
        for b in labels:
            left = LinComb()
            right = LinComb()
            for (x, y), c in table.coproduct[b].items():
                left.add_term(y, cached_mul(c, table.counit[x]))
                right.add_term(x, cached_mul(c, table.counit[y]))
            if left != LinComb.basis(b) or right != LinComb.basis(b):
                yield f"{b!r}"
                return

    run("counit_laws", counit_laws())

    def coproduct_multiplicative():
        for a in labels:
            da = table.coproduct[a]
            for b in labels:
                lhs = map_linear(table.product[(a, b)], lambda l: table.coproduct[l])
                rhs = table.mul_tensor2(da, table.coproduct[b])
                if lhs != rhs:
                    yield f"({a!r}, {b!r})"
                    return

    run("coproduct_multiplicative", coproduct_multiplicative())

    def counit_multiplicative():
        for a in labels:
            for b in labels:
                lhs = Cyc.zero()
                for l, c in table.product[(a, b)].items():
                    lhs = lhs + cached_mul(c, table.counit[l])
                if not (lhs - table.counit[a] * table.counit[b]).is_zero():
                    yield f"({a!r}, {b!r})"
                    return

    run("counit_multiplicative", counit_multiplicative())

    if table.antipode is not None:
        def antipode_identities():
            for b in labels:
                expect = LinComb.basis(unit, table.counit[b])
                left = LinComb()
                right = LinComb()
                for (x, y), c in table.coproduct[b].items():
                    left = left + table.mul_lin_basis(table.antipode[x], y).scale(c)
                    right = right + table.mul(LinComb.basis(x), table.antipode[y]).scale(c)
                if left != expect:
                    yield f"left convolution at {b!r}"
                    return
                if right != expect:
                    yield f"right convolution at {b!r}"
                    return

        run("antipode_identities", antipode_identities())
    else:
        checks["antipode_identities"] = CheckResult(False, "antipode not computed")

    ok = all(res.ok for res in checks.values())
    return HopfVerifyReport(ok=ok, checks=checks, dimension=table.dimension)


# ---------------------------------------------------------------------------
# the coalgebra identification between the cycle family and the finite table


@dataclass
class CoalgIsoReport:
    ok: bool
    n: int
    s: int
    checked_pairs: int
    failure: str | None = None


def verify_coalgebra_iso_Cn(n: int, s: int, q: RootOfUnity, alpha: Cyc) -> CoalgIsoReport:
    """Identify the cycle-family basis with rescaled monomials c^i x^u / (u)_q!
    inside the cyclic-group table; check it is a bijective coalgebra map and
    that pulling the table product back gives the closed-form cycle product."""
    if n % (s + 1) != 0:
        raise HopfError(f"{s + 1} does not divide {n}")
    G = cyclic_hopf_datum(n, s, q)
    table = build_Hn(s, q, G, alpha)
    cn = CnProduct(n, s, q, alpha)
    tq = cn.t

    def phi(label: Label) -> LinComb:
        i, u = label
        return LinComb.basis((i, u), tq.fac_inv[u])

    def phi_inv_label(label: Label) -> LinComb:
        i, u = label
        return LinComb.basis((i, u), tq.fac[u])

    cn_labels = cn.labels()
    # bijectivity: distinct basis images with nonzero scale, dimensions match
    if len(cn_labels) != table.dimension:
        return CoalgIsoReport(False, n, s, 0, "dimension mismatch")

    for b in cn_labels:
        lhs = map_linear(phi(b), lambda l: table.coproduct[l])
        rhs = map_linear(
            cn.coproduct(b), lambda pair: pair_tensor(phi(pair[0]), phi(pair[1]))
        )
        if lhs != rhs:
            return CoalgIsoReport(False, n, s, 0, f"coproduct mismatch at {b!r}")
        eps = Cyc.zero()
        for l, c in phi(b).items():
            eps = eps + c * table.counit[l]
        if not (eps - cn.counit(b)).is_zero():
            return CoalgIsoReport(False, n, s, 0, f"counit mismatch at {b!r}")

    checked = 0
    for a in cn_labels:
        for b in cn_labels:
            through_table = map_linear(
                table.mul(phi(a), phi(b)), phi_inv_label
            )
            direct = cn.product(a, b)
            if through_table != direct:
                return CoalgIsoReport(
                    False, n, s, checked, f"pulled-back product mismatch at ({a!r}, {b!r})"
                )
            checked += 1
    return CoalgIsoReport(True, n, s, checked)
