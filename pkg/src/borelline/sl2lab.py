"""Finite-level rank-one laboratory.

Builds the induced module of SL_2(F_q), q = p^(a!), from a character of the
diagonal torus with a stable upper-triangular line, entirely as explicit
matrices over a tower field. Everything the rest of the library predicts
about socles, heads, irreducibility, and the transition to higher levels is
checked here by exact linear algebra: spinning vectors, intersecting fixed
spaces, and splitting by idempotents in the endomorphism ring.

Conventions: eps(t) is the upper unipotent, h(u) the diagonal torus, s the
standard Weyl representative with s^2 = h(-1). The s-action on the cell
basis is derived by folding the word

    s eps(t) s = h(-1) eps(-1/t) s h(t) eps(-1/t)

over already-defined generator actions rather than from a hand-written
closed form; the relation suite then validates the construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial

from .characters import TruncatedCharacter
from .digits import ArgumentError, expand, lucas_binom, power_sum
from .linalg import (
    DenseMap,
    MonomialMap,
    kernel,
    mat_mul,
    rref,
    rref_insert,
    span_contains,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
)
from .towers import CapabilityError, FieldTower, make_tower

SPIN_GATE = 2 ** 22
GROUP_ORDER_CAP = 64        # largest q for which modules are built


class PreconditionError(ValueError):
    """A stated hypothesis of the requested operation fails."""


class RelationError(RuntimeError):
    """The constructed matrices do not satisfy the defining relations."""


@dataclass(frozen=True)
class Subspace:
    """Canonical reduced-echelon basis of a subspace of a module."""

    module: object
    rows: tuple[tuple, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec) -> bool:
        return span_contains(self.rows, vec)

    def __le__(self, other) -> bool:
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.module is other.module and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)


class InducedModule:
    """kG_a tensor theta, with cell basis {line} + {eps(t) s line : t in F_q}."""

    def __init__(self, p, a, theta: TruncatedCharacter, coeff_level=None, tower=None):
        if theta.p != p:
            raise ArgumentError("character prime disagrees with p")
        if theta.level < a:
            raise ArgumentError(f"character needs residues up to level {a}")
        if coeff_level is None:
            coeff_level = a
        if coeff_level < a:
            raise ArgumentError("coefficient level must contain the group level")
        self.p = p
        self.a = a
        self.q = p ** factorial(a)
        if self.q > GROUP_ORDER_CAP:
            raise CapabilityError(
                f"group field order {self.q} exceeds the desk-scale cap {GROUP_ORDER_CAP}"
            )
        self.theta = theta
        self.m = theta.residue(a)
        self.coeff_level = coeff_level
        self.tower = tower if tower is not None else make_tower(p, max(coeff_level, a))
        self.dim = self.q + 1
        self.labels = tuple(self.tower.enumerate_elements(a))
        self._index = {e.coords: i + 1 for i, e in enumerate(self.labels)}
        self._theta_cache = {}
        self._eps_cache = {}
        self._h_cache = {}
        self._s_map = None
        self._check_relations()

    # index 0 is the stable line; 1 + i(t) is the cell eps(t) s line

    def cell_index(self, t) -> int:
        if t.level != self.a:
            raise ArgumentError("cell labels live at the group level")
        return self._index[t.coords]

    def zero_scalar(self):
        return self.tower.zero(self.coeff_level)

    def one_scalar(self):
        return self.tower.one(self.coeff_level)

    def zero_vector(self):
        return (self.zero_scalar(),) * self.dim

    def unit_vector(self, i):
        z, o = self.zero_scalar(), self.one_scalar()
        return tuple(o if j == i else z for j in range(self.dim))

    def theta_value(self, u):
        """theta(h(u)) = u^m, evaluated in the coefficient field."""
        hit = self._theta_cache.get(u.coords)
        if hit is None:
            hit = u.embed(self.coeff_level) ** self.m
            self._theta_cache[u.coords] = hit
        return hit

    def eps(self, x) -> MonomialMap:
        """Upper unipotent: fixes the line, translates the cells."""
        hit = self._eps_cache.get(x.coords)
        if hit is not None:
            return hit
        perm = [0] * self.dim
        one = self.one_scalar()
        scale = [one] * self.dim
        for t in self.labels:
            perm[self.cell_index(t)] = self.cell_index(x + t)
        out = MonomialMap(perm, scale)
        self._eps_cache[x.coords] = out
        return out

    def h(self, u) -> MonomialMap:
        """Torus: scales the line by theta(u), rescales and squeezes cells."""
        if u.is_zero():
            raise ArgumentError("torus points are invertible")
        hit = self._h_cache.get(u.coords)
        if hit is not None:
            return hit
        perm = [0] * self.dim
        scale = [self.theta_value(u)] * self.dim
        u_inv_theta = self.theta_value(u.inverse())
        u2 = u * u
        for t in self.labels:
            perm[self.cell_index(t)] = self.cell_index(u2 * t)
            scale[self.cell_index(t)] = u_inv_theta
        out = MonomialMap(perm, scale)
        self._h_cache[u.coords] = out
        return out

    def s(self) -> MonomialMap:
        if self._s_map is not None:
            return self._s_map
        zero_a = self.tower.zero(self.a)
        base_cell = self.cell_index(zero_a)
        perm = [0] * self.dim
        scale = [self.one_scalar()] * self.dim
        # s . line = cell at 0
        perm[0] = base_cell
        # s . (cell 0) = s^2 . line = h(-1) . line
        minus_one = -self.tower.one(self.a)
        perm[base_cell] = 0
        scale[base_cell] = self.theta_value(minus_one)
        # remaining cells by folding h(-1) eps(-1/t) s h(t) eps(-1/t) over the line
        for t in self.labels:
            if t.is_zero():
                continue
            j = self.cell_index(t)
            w = -t.inverse()
            vec = self.unit_vector(0)
            vec = self.eps(w).apply(vec)
            vec = self.h(t).apply(vec)
            # the partial s is only ever applied to a multiple of the line
            if not all(vec[i].is_zero() for i in range(1, self.dim)):
                raise RelationError("s-derivation escaped the stable line")
            folded = [self.zero_scalar()] * self.dim
            folded[base_cell] = vec[0]
            vec = self.eps(w).apply(tuple(folded))
            vec = self.h(minus_one).apply(vec)
            support = [i for i, c in enumerate(vec) if not c.is_zero()]
            if len(support) != 1:
                raise RelationError("s-derivation did not land on a single cell")
            perm[j] = support[0]
            scale[j] = vec[support[0]]
        self._s_map = MonomialMap(perm, scale)
        return self._s_map

    def generators(self):
        """eps over an F_p-basis of F_q, h at a generator of the units, and s."""
        gens = [self.eps(b) for b in self.tower.standard_basis(self.a)]
        gens.append(self.h(self.tower.multiplicative_generator(self.a)))
        gens.append(self.s())
        return tuple(gens)

    def group_element(self, word):
        """Compose generator actions named by ('eps', x) / ('h', u) / ('s',)."""
        out = MonomialMap.identity(self.dim, self.one_scalar())
        for item in word:
            if item[0] == "eps":
                g = self.eps(item[1])
            elif item[0] == "h":
                g = self.h(item[1])
            elif item[0] == "s":
                g = self.s()
            else:
                raise ArgumentError(f"unknown generator {item[0]!r}")
            out = out.compose(g)
        return out

    def line_sum_vector(self, subfield_level=None):
        """sum over u in the chosen subfield of u . s . line, one cell each."""
        if subfield_level is None:
            subfield_level = self.a
        if subfield_level > self.a:
            raise ArgumentError("subfield level exceeds the group level")
        vec = list(self.zero_vector())
        one = self.one_scalar()
        for x in self.tower.enumerate_elements(subfield_level):
            t = x.embed(self.a)
            i = self.cell_index(t)
            vec[i] = vec[i] + one
        return tuple(vec)

    def _check_relations(self):
        """All defining relations, as exact matrix identities over F_q."""
        units = [t for t in self.labels if not t.is_zero()]
        line = self.unit_vector(0)
        for x in self.labels:
            if self.eps(x).apply(line) != line:
                raise RelationError("eps must fix the stable line")
        for u in units:
            expected = vec_scale(self.theta_value(u), line)
            if self.h(u).apply(line) != expected:
                raise RelationError("h must scale the line by theta")
        for x in self.labels:
            ex = self.eps(x)
            for y in self.labels:
                if ex.compose(self.eps(y)) != self.eps(x + y):
                    raise RelationError("eps is not additive")
        for u in units:
            hu = self.h(u)
            for v in units:
                if hu.compose(self.h(v)) != self.h(u * v):
                    raise RelationError("h is not multiplicative")
            for x in self.labels:
                lhs = hu.compose(self.eps(x)).compose(self.h(u.inverse()))
                if lhs != self.eps(u * u * x):
                    raise RelationError("torus does not normalize eps correctly")
        s = self.s()
        minus_one = -self.tower.one(self.a)
        if s.compose(s) != self.h(minus_one):
            raise RelationError("s^2 must equal h(-1)")
        s_inv = self.h(minus_one).compose(s)
        for t in units:
            w = -t.inverse()
            lhs = s_inv.compose(self.eps(t)).compose(s)
            rhs = self.eps(w).compose(s).compose(self.h(t)).compose(self.eps(w))
            if lhs != rhs:
                raise RelationError("the s-conjugation relation fails")


def trivial_character(p, level) -> TruncatedCharacter:
    return TruncatedCharacter(p, (0,) * level)


def build_induced(p, a, theta, coeff_level=None) -> InducedModule:
    return InducedModule(p, a, theta, coeff_level)


# -- subspace machinery ------------------------------------------------------


def spin(module, vec) -> Subspace:
    """Smallest generator-stable subspace containing vec."""
    basis, first = rref_insert((), vec)
    if first is None:
        return Subspace(module, ())
    gens = module.generators()
    queue = [first]
    while queue:
        v = queue.pop()
        for g in gens:
            basis, residual = rref_insert(basis, g.apply(v))
            if residual is not None:
                queue.append(residual)
    return Subspace(module, basis)


def fixed_subspace(module, maps, within: Subspace | None = None) -> Subspace:
    """Common fixed space of the maps, inside the whole module or a subspace."""
    zero, one = module.zero_scalar(), module.one_scalar()
    if within is None:
        basis = tuple(module.unit_vector(i) for i in range(module.dim))
    else:
        basis = within.rows
    if not basis:
        return Subspace(module, ())
    rows = []
    for g in maps:
        images = [vec_sub(g.apply(b), b) for b in basis]
        # columns of the constraint system are the basis coefficients
        for coord in range(module.dim):
            rows.append(tuple(img[coord] for img in images))
    coeffs = kernel(rows, len(basis), one, zero)
    vecs = []
    for c in coeffs:
        v = module.zero_vector()
        for ci, b in zip(c, basis):
            if not ci.is_zero():
                v = vec_add(v, vec_scale(ci, b))
        vecs.append(v)
    return Subspace(module, rref(vecs))


def _projective_vectors(module, rows):
    """One representative per line of the span of rows: the coefficient of
    the leading row is pinned to one, later rows range over the field."""
    field = list(module.tower.enumerate_elements(module.coeff_level))
    k = len(rows)

    def walk(prefix, idx):
        if idx == k:
            yield prefix
            return
        for c in field:
            nxt = prefix if c.is_zero() else vec_add(prefix, vec_scale(c, rows[idx]))
            yield from walk(nxt, idx + 1)

    for lead in range(k):
        yield from walk(rows[lead], lead + 1)


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    mode: str                    # "exhaustive" or "randomized"
    dimension: int
    witness: tuple | None = None  # a vector spinning to a proper submodule
    trials: int = 0

    @property
    def proof(self) -> bool:
        """A randomized reducible verdict still carries an exact witness."""
        if self.mode == "exhaustive":
            return True
        return not self.irreducible and self.witness is not None


def is_irreducible(
    module,
    subspace: Subspace | None = None,
    gate=SPIN_GATE,
    randomized=False,
    seed=None,
    trials=16,
) -> IrreducibilityVerdict:
    """Spin every line of the (sub)module and compare with the whole.

    Exhaustive only under the gate |F|^dim <= gate; the randomized fallback
    samples vectors and kernels of group-algebra elements and its positive
    verdict is not a proof.
    """
    target = subspace if subspace is not None else Subspace(
        module, rref([module.unit_vector(i) for i in range(module.dim)])
    )
    d = target.dim
    if d == 0:
        return IrreducibilityVerdict(False, "exhaustive", 0, None)
    size = module.tower.order(module.coeff_level) ** d
    if size <= gate:
        for v in _projective_vectors(module, target.rows):
            if spin(module, v) != target:
                return IrreducibilityVerdict(False, "exhaustive", d, v)
        return IrreducibilityVerdict(True, "exhaustive", d)
    if not randomized:
        raise CapabilityError(
            f"|F|^dim = {size} exceeds the spin gate {gate}; "
            "pass randomized=True for a non-proof check"
        )
    rng = random.Random(seed)
    field = list(module.tower.enumerate_elements(module.coeff_level))
    gens = module.generators()
    done = 0
    for _ in range(trials):
        v = module.zero_vector()
        for row in target.rows:
            c = rng.choice(field)
            if not c.is_zero():
                v = vec_add(v, vec_scale(c, row))
        if not vec_is_zero(v) and spin(module, v) != target:
            return IrreducibilityVerdict(False, "randomized", d, v, done + 1)
        # a random group-algebra element; proper kernels expose submodules
        mat = None
        for _ in range(3):
            g = MonomialMap.identity(module.dim, module.one_scalar())
            for _ in range(rng.randrange(1, 4)):
                g = g.compose(rng.choice(gens))
            dense = g.to_dense(module.zero_scalar())
            c = rng.choice(field)
            scaled = tuple(tuple(c * x for x in row) for row in dense)
            mat = scaled if mat is None else tuple(
                tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(mat, scaled)
            )
        ker = kernel(mat, module.dim, module.one_scalar(), module.zero_scalar())
        for kv in ker:
            if target.contains(kv) and not vec_is_zero(kv):
                if spin(module, kv) != target:
                    return IrreducibilityVerdict(False, "randomized", d, kv, done + 1)
        done += 1
    return IrreducibilityVerdict(True, "randomized", d, None, done)


# -- socle and head ----------------------------------------------------------


@dataclass(frozen=True)
class SocleHeadReport:
    socle: Subspace | None
    socle_ok: bool
    socle_witness: tuple | None   # a vector whose spin misses the socle
    maximal: Subspace | None
    maximal_ok: bool
    maximal_witnesses: tuple | None
    head_dim: int | None
    head_digit_product: int


def _require_nontrivial(module):
    if module.m == 0:
        raise PreconditionError(
            "the torus character is trivial at this level; the socle and head "
            "are not unique here"
        )


def socle_head_report(module) -> SocleHeadReport:
    """One pass over all spins: unique minimal and unique maximal submodule.

    Needs theta nontrivial at the module's level. The expected head dimension
    is the product of (digit + 1) over the base-p digits of the exponent.
    """
    _require_nontrivial(module)
    size = module.tower.order(module.coeff_level) ** module.dim
    if size > SPIN_GATE:
        raise CapabilityError("module too large for exhaustive spinning")
    whole = Subspace(
        module, rref([module.unit_vector(i) for i in range(module.dim)])
    )
    socle = spin(module, module.line_sum_vector())
    socle_ok = is_irreducible(module, socle).irreducible
    socle_witness = None
    proper = {}
    for v in _projective_vectors(module, whole.rows):
        sp = spin(module, v)
        if socle_ok and not (socle <= sp):
            socle_ok = False
            socle_witness = v
        if sp != whole:
            proper[sp.rows] = sp
    union = rref([row for rows in proper for row in rows])
    digits = expand(module.m, module.p).digits
    product = 1
    for d in digits:
        product *= d + 1
    if len(union) == module.dim:
        # two proper spins already covering everything witness non-uniqueness
        wits = _cover_witnesses(module, proper.values(), whole)
        return SocleHeadReport(
            socle if socle_ok else None,
            socle_ok,
            socle_witness,
            None,
            False,
            wits,
            None,
            product,
        )
    maximal = Subspace(module, union)
    return SocleHeadReport(
        socle if socle_ok else None,
        socle_ok,
        socle_witness,
        maximal,
        True,
        None,
        module.dim - maximal.dim,
        product,
    )


def _cover_witnesses(module, spins, whole):
    spins = sorted(spins, key=lambda s: -s.dim)
    for i, s1 in enumerate(spins):
        for s2 in spins[i + 1:]:
            if len(rref(list(s1.rows) + list(s2.rows))) == whole.dim:
                return (s1, s2)
    return None


def unique_minimal_submodule(module):
    """The socle when it is simple and contained in every nonzero submodule."""
    rep = socle_head_report(module)
    return rep.socle, rep.socle_witness


def head_dimension(module):
    """Codimension of the unique maximal submodule; checked against digits."""
    rep = socle_head_report(module)
    if not rep.maximal_ok:
        raise PreconditionError("no unique maximal submodule; see witnesses")
    if rep.head_dim != rep.head_digit_product:
        raise RelationError(
            f"head dimension {rep.head_dim} disagrees with the digit product "
            f"{rep.head_digit_product}"
        )
    return rep.head_dim


# -- costandard modules ------------------------------------------------------

RELATION_WORK_CAP = 6 * 10 ** 7


class CostandardModule:
    """The (n+1)-dimensional module with basis v_0..v_n and
    eps(t) v_i = sum_(j<=i) binom(i, j) t^(i-j) v_j."""

    def __init__(self, n, p, coeff_level, check_level=None, tower=None):
        if n < 0:
            raise ArgumentError("the highest weight must be nonnegative")
        self.n = n
        self.p = p
        self.coeff_level = coeff_level
        self.check_level = coeff_level if check_level is None else check_level
        if self.check_level > coeff_level:
            raise ArgumentError("relations can only be checked inside the coefficient field")
        self.tower = tower if tower is not None else make_tower(p, coeff_level)
        self.dim = n + 1
        q_check = self.tower.order(self.check_level)
        if q_check * q_check * self.dim ** 3 > RELATION_WORK_CAP:
            raise CapabilityError(
                "relation verification at this size is beyond desk scale; "
                "lower check_level explicitly"
            )
        self._binom = tuple(
            tuple(lucas_binom(i, j, p) for j in range(self.dim)) for i in range(self.dim)
        )
        self._check_relations()

    def zero_scalar(self):
        return self.tower.zero(self.coeff_level)

    def one_scalar(self):
        return self.tower.one(self.coeff_level)

    def zero_vector(self):
        return (self.zero_scalar(),) * self.dim

    def unit_vector(self, i):
        z, o = self.zero_scalar(), self.one_scalar()
        return tuple(o if j == i else z for j in range(self.dim))

    def eps(self, t) -> DenseMap:
        tt = t.embed(self.coeff_level)
        zero = self.zero_scalar()
        powers = [self.one_scalar()]
        for _ in range(self.n):
            powers.append(powers[-1] * tt)
        rows = [[zero] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1):
                b = self._binom[i][j]
                if b:
                    rows[j][i] = self.tower.scalar(b, self.coeff_level) * powers[i - j]
        return DenseMap(rows)

    def h(self, u) -> DenseMap:
        uu = u.embed(self.coeff_level)
        if uu.is_zero():
            raise ArgumentError("torus points are invertible")
        zero = self.zero_scalar()
        rows = [[zero] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            rows[i][i] = uu ** (self.n - 2 * i)
        return DenseMap(rows)

    def s(self) -> DenseMap:
        zero = self.zero_scalar()
        rows = [[zero] * self.dim for _ in range(self.dim)]
        one = self.one_scalar()
        for i in range(self.dim):
            sign = one if (self.n - i) % 2 == 0 else -one
            rows[self.n - i][i] = sign
        return DenseMap(rows)

    def generators(self):
        gens = [self.eps(b) for b in self.tower.standard_basis(self.check_level)]
        gens.append(self.h(self.tower.multiplicative_generator(self.check_level)))
        gens.append(self.s())
        return tuple(gens)

    def _check_relations(self):
        elems = list(self.tower.enumerate_elements(self.check_level))
        units = [u for u in elems if not u.is_zero()]
        eps_of = {x.coords: self.eps(x) for x in elems}
        for x in elems:
            mx = eps_of[x.coords]
            for y in elems:
                if DenseMap(mat_mul(mx.rows, eps_of[y.coords].rows)) != eps_of[(x + y).coords]:
                    raise RelationError("eps is not additive on the costandard module")
        for u in units:
            hu = self.h(u)
            for v in units:
                if DenseMap(mat_mul(hu.rows, self.h(v).rows)) != self.h(u * v):
                    raise RelationError("h is not multiplicative on the costandard module")
            hinv = self.h(u.inverse())
            for x in elems:
                lhs = mat_mul(mat_mul(hu.rows, eps_of[x.coords].rows), hinv.rows)
                if DenseMap(lhs) != eps_of[((u * u) * x).coords]:
                    raise RelationError("torus normalization fails on the costandard module")
        s = self.s()
        minus_one = -self.tower.one(self.check_level)
        if DenseMap(mat_mul(s.rows, s.rows)) != self.h(minus_one):
            raise RelationError("s^2 must equal h(-1) on the costandard module")
        s_inv = DenseMap(mat_mul(self.h(minus_one).rows, s.rows))
        for t in units:
            w = -t.inverse()
            lhs = mat_mul(mat_mul(s_inv.rows, self.eps(t).rows), s.rows)
            rhs = mat_mul(
                mat_mul(mat_mul(self.eps(w).rows, s.rows), self.h(t).rows),
                self.eps(w).rows,
            )
            if lhs != rhs:
                raise RelationError("the s-conjugation relation fails on the costandard module")


def build_costandard(n, p, coeff_level, check_level=None) -> CostandardModule:
    return CostandardModule(n, p, coeff_level, check_level)


def l_submodule(cm: CostandardModule) -> Subspace:
    """Span of the v_i with binom(n, i) nonzero mod p; checked stable."""
    rows = [cm.unit_vector(i) for i in range(cm.dim) if lucas_binom(cm.n, i, cm.p)]
    sub = Subspace(cm, rref(rows))
    for g in cm.generators():
        for r in sub.rows:
            if not sub.contains(g.apply(r)):
                raise RelationError("digit span is not a submodule")
    return sub


# -- the level bridge --------------------------------------------------------


@dataclass(frozen=True)
class PiImageRecord:
    vector: tuple
    nonzero_indices: tuple[int, ...]
    witness_k: int | None
    m_t: int
    r: int
    t: int

    @property
    def is_zero(self) -> bool:
        return not self.nonzero_indices


def pi_image(theta: TruncatedCharacter, r, t, check_level=None) -> PiImageRecord:
    """sum over a in F_(p^(r!)) of eps(a) . v_(m_t) inside the costandard
    module of weight m_t, computed two independent ways.

    Direct route: sum the matrix actions. Closed route: binomials mod p
    times power sums, nonzero only at depths k (p^(r!) - 1). Both must agree
    entrywise; the caller reads off nonzero-ness.
    """
    if not 1 <= r < t:
        raise ArgumentError("need 1 <= r < t")
    if theta.level < t:
        raise ArgumentError(f"character needs residues up to level {t}")
    p = theta.p
    m_t = theta.residue(t)
    cm = CostandardModule(m_t, p, coeff_level=t, check_level=check_level)
    top = cm.unit_vector(m_t)
    total = cm.zero_vector()
    for a in cm.tower.enumerate_elements(r):
        total = vec_add(total, cm.eps(a).apply(top))
    qr = p ** factorial(r)
    closed = [0] * cm.dim
    for ell in range(m_t + 1):
        coeff = (lucas_binom(m_t, ell, p) * power_sum(qr, ell, include_zero=True)) % p
        closed[m_t - ell] = coeff
    closed_vec = tuple(cm.tower.scalar(c, t) for c in closed)
    if closed_vec != total:
        raise RelationError("closed form and direct summation disagree")
    nonzero = tuple(i for i, c in enumerate(total) if not c.is_zero())
    witness = None
    step = qr - 1
    for k in range(1, m_t // step + 1):
        if (lucas_binom(m_t, k * step, p) * power_sum(qr, k * step)) % p:
            witness = k
            break
    return PiImageRecord(total, nonzero, witness, m_t, r, t)


@dataclass(frozen=True)
class ChainRecord:
    p: int
    r: int
    t: int
    m_t: int
    span_is_whole: bool
    pi_nonzero: bool

    @property
    def agree(self) -> bool:
        return self.span_is_whole == self.pi_nonzero


def verify_irreducibility_chain(theta: TruncatedCharacter, r, t) -> ChainRecord:
    """Bridge check at one level pair: the subfield-averaged cell vector
    spans the whole level-t module exactly when the costandard image is
    nonzero."""
    module = InducedModule(theta.p, t, theta)
    vec = module.line_sum_vector(subfield_level=r)
    sub = spin(module, vec)
    pi = pi_image(theta, r, t)
    return ChainRecord(theta.p, r, t, pi.m_t, sub.dim == module.dim, not pi.is_zero)


def span_equality_search(theta: TruncatedCharacter, a, cap=None):
    """Smallest level b in (a, cap] where the level-a averaged vector spans
    the whole level-b module; absence is absence below the cap only."""
    if cap is None:
        cap = theta.level
    found = None
    for b in range(a + 1, cap + 1):
        module = InducedModule(theta.p, b, theta)
        sub = spin(module, module.line_sum_vector(subfield_level=a))
        if sub.dim == module.dim:
            found = b
            break
    return {"found": found is not None, "b": found, "cap": cap}


# -- endomorphisms for the trivial character ---------------------------------


class HeckeOperators:
    """The two basis endomorphisms at a level where theta is trivial."""

    def __init__(self, module: InducedModule):
        if module.m != 0:
            raise PreconditionError(
                "endomorphism basis indexed by the Weyl group needs the "
                "character trivial at this level"
            )
        self.module = module
        n = module.dim
        zero, one = module.zero_scalar(), module.one_scalar()
        self.identity_rows = tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        )
        # t_s sends the line to the sum of all cells and is extended to the
        # cell eps(t) s line by equivariance under eps(t) s
        image_of_line = module.line_sum_vector()
        cols = [image_of_line]
        for t in module.labels:
            word = module.eps(t).compose(module.s())
            cols.append(word.apply(image_of_line))
        rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        self.t_s_rows = rows
        self._assert_endomorphism(rows)
        self._assert_idempotents()

    def _assert_endomorphism(self, rows):
        zero = self.module.zero_scalar()
        for g in self.module.generators():
            g_rows = g.to_dense(zero)
            if mat_mul(rows, g_rows) != mat_mul(g_rows, rows):
                raise RelationError("the cell-averaging operator is not equivariant")

    def _assert_idempotents(self):
        e = self.e_rows()
        o = self.o_rows()
        zero_mat = tuple(
            tuple(self.module.zero_scalar() for _ in row) for row in e
        )
        if mat_mul(e, e) != e or mat_mul(o, o) != o:
            raise RelationError("the two summand projectors are not idempotent")
        if mat_mul(e, o) != zero_mat or mat_mul(o, e) != zero_mat:
            raise RelationError("the summand projectors are not orthogonal")
        total = tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(e, o)
        )
        if total != self.identity_rows:
            raise RelationError("the summand projectors do not sum to the identity")

    def e_rows(self):
        return tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.identity_rows, self.t_s_rows)
        )

    def o_rows(self):
        return tuple(tuple(-a for a in row) for row in self.t_s_rows)

    def idempotent_split(self):
        """Images of the two projectors, as submodules."""
        e_cols = rref(list(zip(*self.e_rows())))
        o_cols = rref(list(zip(*self.o_rows())))
        y_full = Subspace(self.module, e_cols)
        y_empty = Subspace(self.module, o_cols)
        if y_full.dim + y_empty.dim != self.module.dim:
            raise RelationError("projector images do not decompose the module")
        return y_full, y_empty


def hecke_operators(module) -> HeckeOperators:
    return HeckeOperators(module)
