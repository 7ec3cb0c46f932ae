"""Exact structure checks for mixable shuffle and Rota-Baxter algebras.

Every verifier here follows the same pattern: name a set of polynomial
generators, evaluate all admissible monomials in them degree by degree,
and compare against the full word basis of the algebra with exact linear
algebra.  What "comparison" means depends on the coefficient ring:

* over a field (Q or F_p) a degree slice passes when the word count, the
  monomial count, and the rank of the image matrix agree; the matrix is
  eliminated cumulatively in ascending degree so that merges that lower
  degree (non-graded letter semigroups) are still certified;
* over Z a degree slice must give a square image matrix whose Smith normal
  form has every elementary divisor equal to 1, which pins a Z-module
  basis, and spanning is additionally witnessed by solving for each word;
* over Z/p^N independence is full column rank after reduction mod p, so a
  square system has unit determinant and stays a basis at any precision.

Reports carry one record per degree plus named side checks (generator
relations, cardinality identities, cokernel diagnoses) and serialize to
JSON or a plain table.  Nothing here is randomized; reruns are bytewise
reproducible.
"""

import itertools
from fractions import Fraction

from .rings import Ring, Matrix, SparseEliminator, _is_prime
from .semigroups import Element, Unitarized, FreeAbelian, ProductSemigroup, \
    ElementaryPGroup, FiniteTableSemigroup, cyclic_group_table
from .words import Word, empty_word, enumerate_words, enumerate_lyndon, \
    operator_T, standard_generating_sets, tel2_orbit_check, \
    componentwise_p_power
from .shuffle import TensorPoly, word_poly, graded_basis, \
    eettl_representative, length_rescale, with_weight
from .rota_baxter import RBElement, alphabet_generators


class ConfigurationError(ValueError):
    """A verification request that is malformed or out of scope."""


def _require(cond, message):
    if not cond:
        raise ConfigurationError(message)


def _require_prime(p):
    _require(isinstance(p, int) and _is_prime(p), "p must be a prime number")


def _weight_str(weight):
    return str(Fraction(weight))


# ---------------------------------------------------------------------------
# reports


class CellRecord:
    """One degree slice: word count, monomial count, matrix rank, verdict."""

    __slots__ = ("degree", "dimension", "monomials", "rank", "ok", "note")

    def __init__(self, degree, dimension, monomials, rank, ok, note=None):
        self.degree = degree
        self.dimension = dimension
        self.monomials = monomials
        self.rank = rank
        self.ok = ok
        self.note = note

    def to_json(self):
        data = {"degree": self.degree, "dimension": self.dimension,
                "monomials": self.monomials, "rank": self.rank,
                "ok": self.ok}
        if self.note:
            data["note"] = self.note
        return data

    def __repr__(self):
        return "CellRecord(%d, dim=%d, mon=%d, rank=%d, ok=%s)" % (
            self.degree, self.dimension, self.monomials, self.rank, self.ok)


class CheckRecord:
    """A named non-cell check (relation, cardinality, invariant)."""

    __slots__ = ("name", "ok", "detail")

    def __init__(self, name, ok, detail=None):
        self.name = name
        self.ok = ok
        self.detail = detail

    def to_json(self):
        data = {"name": self.name, "ok": self.ok}
        if self.detail is not None:
            data["detail"] = self.detail
        return data

    def __repr__(self):
        return "CheckRecord(%r, ok=%s)" % (self.name, self.ok)


class VerificationReport:
    """Per-degree records and named checks for one theorem instance.

    The overall verdict is the conjunction of every record.  Exit code
    mapping: 0 when passed, 1 when some record failed; configuration
    problems never produce a report, they raise ConfigurationError.
    """

    def __init__(self, theorem, ring, weight, semigroup, bounds):
        self.theorem = theorem
        self.ring = ring
        self.weight = _weight_str(weight)
        self.semigroup = semigroup
        self.bounds = dict(bounds)
        self.cells = []
        self.checks = []
        self.counterexample = None
        self.seed = None

    @property
    def passed(self):
        return (all(c.ok for c in self.cells)
                and all(c.ok for c in self.checks)
                and self.counterexample is None)

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def to_json(self):
        return {
            "theorem": self.theorem,
            "ring": self.ring.to_json(),
            "weight": self.weight,
            "semigroup": self.semigroup.to_json(),
            "bounds": self.bounds,
            "cells": [c.to_json() for c in self.cells],
            "checks": [c.to_json() for c in self.checks],
            "counterexample": self.counterexample,
            "seed": self.seed,
            "passed": self.passed,
        }

    def render(self, ascii_mode=False):
        lines = []
        lines.append("theorem %s   ring %r   weight %s" % (
            self.theorem, self.ring, self.weight))
        lines.append("semigroup %s   bounds %s" % (
            self.semigroup.descriptor(), self.bounds))
        if self.seed is not None:
            lines.append("seed %s" % self.seed)
        if self.cells:
            lines.append("degree  dimension  monomials  rank  verdict")
            for c in self.cells:
                row = "%6d  %9d  %9d  %4d  %s" % (
                    c.degree, c.dimension, c.monomials, c.rank,
                    "pass" if c.ok else "FAIL")
                if c.note:
                    row += "  " + c.note
                lines.append(row)
        for c in self.checks:
            row = "check   %s: %s" % (c.name, "pass" if c.ok else "FAIL")
            if c.detail is not None:
                row += "  [%s]" % (c.detail,)
            lines.append(row)
        if self.counterexample:
            lines.append("counterexample: %s" % self.counterexample)
        lines.append("verdict: %s" % ("PASS" if self.passed else "FAIL"))
        text = "\n".join(lines)
        return text.replace("⊗", "(x)") if ascii_mode else text


# ---------------------------------------------------------------------------
# presented algebras


class GeneratorSymbol:
    """A named generator bound to its image polynomial.

    cap bounds the exponent in monomial enumeration (None = unbounded).
    relation is None, ("power_zero", e) for g^e = 0, or
    ("power_scalar", e, c) for g^e = c*g, with e >= 2.
    """

    __slots__ = ("name", "image", "degree", "lead_length", "cap", "relation")

    def __init__(self, name, image, degree, lead_length, cap=None,
                 relation=None):
        if relation is not None and relation[1] < 2:
            raise ValueError("relation exponent must be at least 2")
        if degree == 0 and lead_length == 0:
            raise ValueError("generator with degree 0 and length 0")
        self.name = name
        self.image = image
        self.degree = degree
        self.lead_length = lead_length
        self.cap = cap
        self.relation = relation

    def __repr__(self):
        return "GeneratorSymbol(%r, deg=%d, len=%d, cap=%r)" % (
            self.name, self.degree, self.lead_length, self.cap)


def word_symbol(ring, lam, semigroup, word, cap=None, relation=None):
    """Generator symbol for a plain word viewed inside the shuffle algebra."""
    image = TensorPoly.from_word(ring, lam, semigroup, word)
    return GeneratorSymbol(word.display(True), image, word.degree,
                           word.length, cap, relation)


class PresentedAlgebra:
    """Generators with exponent caps, evaluated to the ambient algebra.

    Monomials are bucketed by the total of the symbol degrees; merges can
    push individual image terms below that bucket but never above it, and
    the leading (merge-free) term always sits exactly at it, so bucket
    counts are the right accounting.  When a length bound is given the
    additive leading-length budget prunes the same way.  Generator powers
    and the shuffle memo are cached on the instance, so evaluating all
    monomials of a window shares almost all of the work.
    """

    def __init__(self, ring, weight, semigroup, generators, unit,
                 length_bound=None):
        self.ring = ring
        self.weight = weight
        self.semigroup = semigroup
        self.generators = list(generators)
        self.unit = unit
        self.length_bound = length_bound
        for g in self.generators:
            if g.degree == 0 and length_bound is None and g.cap is None:
                raise ConfigurationError(
                    "generator %s has degree 0; a length bound is required"
                    % g.name)
            if isinstance(g.image, TensorPoly) \
                    and g.image.max_degree() != g.degree:
                raise ValueError("symbol degree of %s differs from its image"
                                 % g.name)
        self._powers = {}
        self._memo = {}
        self._buckets = {}

    def _mul(self, a, b):
        return a.mul_shared(b, self._memo)

    def power_of(self, index, exponent):
        if exponent == 0:
            return self.unit
        key = (index, exponent)
        got = self._powers.get(key)
        if got is None:
            got = self._mul(self.power_of(index, exponent - 1),
                            self.generators[index].image)
            self._powers[key] = got
        return got

    def monomials_by_degree(self, degree_bound):
        """All admissible monomials with total symbol degree <= the bound,
        bucketed by that degree, each as (name, image)."""
        cached = self._buckets.get(degree_bound)
        if cached is not None:
            return cached
        buckets = {n: [] for n in range(degree_bound + 1)}
        gens = self.generators
        len_bound = self.length_bound

        def rec(i, deg_used, len_used, parts, poly):
            if i == len(gens):
                buckets[deg_used].append(("*".join(parts) or "1", poly))
                return
            g = gens[i]
            rec(i + 1, deg_used, len_used, parts, poly)
            e = 0
            cur = poly
            while True:
                e += 1
                if g.cap is not None and e > g.cap:
                    break
                if deg_used + e * g.degree > degree_bound:
                    break
                if len_bound is not None \
                        and len_used + e * g.lead_length > len_bound:
                    break
                cur = self._mul(cur, g.image)
                label = g.name if e == 1 else "%s^%d" % (g.name, e)
                rec(i + 1, deg_used + e * g.degree,
                    len_used + e * g.lead_length, parts + [label], cur)

        rec(0, 0, 0, [], self.unit)
        self._buckets[degree_bound] = buckets
        return buckets

    def monomials(self, degree):
        """(name, image) pairs for the monomials of this exact degree."""
        return list(self.monomials_by_degree(degree).get(degree, []))


def monomial_images(algebra, degree):
    """The evaluated relation-admissible monomials of one degree."""
    return [image for _, image in algebra.monomials(degree)]


def check_relations(algebra, max_length=None):
    """Verify declared generator relations on their images.

    Power computations cube in the word length, so callers working over
    long boxes cap the checked leading length and the summary record says
    how many generators were covered.
    """
    checks = []
    total = skipped = 0
    for i, g in enumerate(algebra.generators):
        if g.relation is None:
            continue
        total += 1
        if max_length is not None and g.lead_length > max_length:
            skipped += 1
            continue
        kind, exponent = g.relation[0], g.relation[1]
        power = algebra.power_of(i, exponent)
        if kind == "power_zero":
            ok = power.is_zero()
            detail = "%s^%d = 0" % (g.name, exponent)
        elif kind == "power_scalar":
            scalar = g.relation[2]
            ok = power == g.image.scale(scalar)
            detail = "%s^%d = %s*%s" % (g.name, exponent,
                                        algebra.ring.format(scalar), g.name)
        else:
            raise ValueError("unknown relation kind %r" % kind)
        checks.append(CheckRecord("relation " + detail, ok))
    if skipped:
        checks.append(CheckRecord(
            "relations spot checked", True,
            "%d of %d within length %d" % (total - skipped, total,
                                           max_length)))
    return checks


# ---------------------------------------------------------------------------
# linear algebra drivers


def _tensor_key_order(word):
    return word.pro_length_key


def _rb_key_order(semigroup):
    def order(key):
        head, tail = key
        return (tail.pro_length_key, semigroup.sort_key_of(head.key))
    return order


def _generic_key_order(key):
    if isinstance(key, Word):
        return key.pro_length_key
    head, tail = key
    return (tail.pro_length_key, head.semigroup.sort_key_of(head.key))


def _combo_text(combo, ring):
    parts = ["%s*%s" % (ring.format(c), name)
             for name, c in sorted(combo.items(), key=lambda kv: str(kv[0]))]
    return " + ".join(parts) if parts else "0"


def _filtered_cells(report, field, key_order, rows_by_degree, cols_by_degree,
                    to_field):
    """Cumulative full-rank certification over a field.

    Columns are inserted in ascending degree; because merges never raise
    degree, the final square full-rank system certifies a basis of the
    whole window even when individual images straddle degrees.
    """
    elim = SparseEliminator(field, key_order, track=True)
    allowed = set()
    for keys in rows_by_degree.values():
        allowed.update(keys)
    degrees = sorted(set(rows_by_degree) | set(cols_by_degree))
    for n in degrees:
        dim = len(rows_by_degree.get(n, ()))
        cols = cols_by_degree.get(n, [])
        increment = 0
        note = None
        for name, vec in cols:
            fvec = to_field(vec)
            if any(k not in allowed for k in fvec):
                note = "image of %s leaves the window" % name
                continue
            if elim.insert(fvec, tag=name):
                increment += 1
            elif report.counterexample is None:
                combo = elim.express(to_field(vec))
                report.counterexample = "%s = %s" % (
                    name, _combo_text(combo or {}, field))
        ok = (dim == len(cols) == increment) and note is None
        if not ok and note is None:
            note = "dimension %d, monomials %d, new rank %d" % (
                dim, len(cols), increment)
        report.cells.append(
            CellRecord(n, dim, len(cols), increment, ok, note))


class _ZSolver:
    """Solve A*x = b over Z repeatedly from one Smith factorization."""

    def __init__(self, matrix):
        self.D, self.U, self.V = matrix.smith_normal_form()
        self.nrows = matrix.nrows
        self.ncols = matrix.ncols

    def solve(self, b):
        c = self.U.apply_vector(b)
        y = [0] * self.ncols
        for i in range(self.nrows):
            if i < len(self.D):
                q, r = divmod(c[i], self.D[i])
                if r != 0:
                    return None
                if i < self.ncols:
                    y[i] = q
            elif c[i] != 0:
                return None
        return self.V.apply_vector(y)


def _z_square_cells(report, ring_z, rows_by_degree, cols_by_degree,
                    solve_words=False):
    """Square unimodular certification per degree over Z."""
    for n in sorted(rows_by_degree):
        keys = rows_by_degree[n]
        index = {k: i for i, k in enumerate(keys)}
        cols = cols_by_degree.get(n, [])
        note = None
        rank = 0
        ok = len(keys) == len(cols)
        if not ok:
            note = "non-square system"
        elif keys:
            vectors = []
            for name, vec in cols:
                column = [0] * len(keys)
                escaped = False
                for k, c in vec.items():
                    if k not in index:
                        note = "image of %s leaves the window" % name
                        escaped = True
                        break
                    column[index[k]] = c
                if escaped:
                    ok = False
                    break
                vectors.append(column)
            if ok:
                matrix = Matrix.from_columns(ring_z, vectors, len(keys))
                divisors, _, _ = matrix.smith_normal_form()
                rank = len(divisors)
                bad = [d for d in divisors if d != 1]
                ok = rank == len(keys) and not bad
                if bad:
                    note = "elementary divisors %s" % bad
                elif rank != len(keys):
                    note = "rank %d of %d" % (rank, len(keys))
                if ok and solve_words:
                    solver = _ZSolver(matrix)
                    for k in keys:
                        target = [1 if kk == k else 0 for kk in keys]
                        if solver.solve(target) is None:
                            ok = False
                            report.counterexample = (
                                "word %s is not an integral combination"
                                % _key_text(k))
                            break
        report.cells.append(
            CellRecord(n, len(keys), len(cols), rank, ok, note))


def _key_text(key):
    if isinstance(key, Word):
        return key.display(True)
    head, tail = key
    return "%s(x)%s" % (head.name, tail.display(True))


def check_independence(algebra, degree):
    """Are the degree-n monomial images linearly independent?"""
    ring = algebra.ring
    cols = algebra.monomials(degree)
    universe = sorted({k for _, img in cols for k in img.terms},
                      key=_generic_key_order)
    note = None
    rank = 0
    if ring.is_field:
        elim = SparseEliminator(ring, _generic_key_order, track=True)
        for name, img in cols:
            if elim.insert(dict(img.terms), tag=name):
                rank += 1
            elif note is None:
                combo = elim.express(dict(img.terms))
                note = "%s = %s" % (name, _combo_text(combo or {}, ring))
        ok = rank == len(cols)
    elif ring.kind == "Z":
        index = {k: i for i, k in enumerate(universe)}
        vectors = []
        for _, img in cols:
            column = [0] * len(universe)
            for k, c in img.terms.items():
                column[index[k]] = c
            vectors.append(column)
        matrix = Matrix.from_columns(ring, vectors, len(universe))
        divisors, _, _ = matrix.smith_normal_form()
        rank = len(divisors)
        ok = rank == len(cols) and all(d == 1 for d in divisors)
        if not ok:
            note = "elementary divisors %s" % (divisors,)
    else:
        fp = Ring.prime_field(ring.p)
        elim = SparseEliminator(fp, _generic_key_order)
        reduce_vec = _mod_p_vec(ring.p)
        for _, img in cols:
            if elim.insert(reduce_vec(img.terms)):
                rank += 1
        ok = rank == len(cols)
        if not ok:
            note = "rank %d mod %d" % (rank, ring.p)
    return CellRecord(degree, len(universe), len(cols), rank, ok, note)


def check_spanning(algebra, degree):
    """Is every degree-n basis word a combination of the monomial images?"""
    ring = algebra.ring
    if not isinstance(algebra.unit, TensorPoly):
        raise ValueError("spanning checks run on tensor algebras")
    rows = list(graded_basis(algebra.semigroup, degree,
                             algebra.length_bound))
    index = {w: i for i, w in enumerate(rows)}
    cols = algebra.monomials(degree)
    vectors = []
    note = None
    ok = True
    for name, img in cols:
        column = [ring.zero] * len(rows)
        for w, c in img.terms.items():
            if w not in index:
                ok = False
                note = "image of %s leaves the window" % name
                break
            column[index[w]] = c
        if not ok:
            break
        vectors.append(column)
    rank = 0
    if ok:
        matrix = Matrix.from_columns(ring, vectors, len(rows))
        if ring.kind == "Z":
            solver = _ZSolver(matrix)
            rank = len(solver.D)
            solve = solver.solve
        else:
            solve = matrix.solve
            if ring.is_field:
                rank = matrix.row_reduce()[0]
            else:
                elim = SparseEliminator(Ring.prime_field(ring.p),
                                        _generic_key_order)
                reduce_vec = _mod_p_vec(ring.p)
                for _, img in cols:
                    if elim.insert(reduce_vec(img.terms)):
                        rank += 1
        for w in rows:
            target = [ring.one if u == w else ring.zero for u in rows]
            if solve(target) is None:
                ok = False
                note = "word %s is not reachable" % w.display(True)
                break
    return CellRecord(degree, len(rows), len(cols), rank, ok, note)


# ---------------------------------------------------------------------------
# shared builders


def _has_degree_zero_letter(semigroup):
    return any(True for _ in semigroup.iter_keys(0))


def _tensor_rows(semigroup, degree_bound, length_bound):
    return {n: list(graded_basis(semigroup, n, length_bound))
            for n in range(degree_bound + 1)}


def _column_buckets(algebra, degree_bound):
    buckets = algebra.monomials_by_degree(degree_bound)
    return {n: [(name, img.terms) for name, img in bucket]
            for n, bucket in buckets.items()}


def _identity_vec(vec):
    return dict(vec)


def _mod_p_vec(p):
    def reduce_vec(vec):
        out = {}
        for k, c in vec.items():
            r = int(c) % p
            if r:
                out[k] = r
        return out
    return reduce_vec


def _tail_scalar(ring, lam, p, length):
    # lambda^((p-1)(length-1)): mod p the p-th shuffle power of a fixed
    # word collapses onto the word itself with p-1 merges at each letter
    # position past the one that Fermat absorbs into the coefficient
    return ring.pow_(lam, (p - 1) * (length - 1))


def _relation_length_cap(p):
    # p-th powers of a length-l word have up to (pl)!/(l!)^p terms; keep
    # the checked lengths small enough to stay interactive
    return max(1, 6 // p)


# ---------------------------------------------------------------------------
# rational and F_p shuffle algebra structure


def verify_radford_hoffman(semigroup, weight, degree_bound,
                           length_bound=None):
    """Lyndon monomials are a basis of the rational shuffle algebra."""
    ring = Ring.rationals()
    lam = ring.of(Fraction(weight))
    if semigroup.kind == "ordered_set":
        _require(lam == 0, "a bare ordered set only carries weight zero")
    if _has_degree_zero_letter(semigroup):
        _require(length_bound is not None,
                 "letters of degree zero need a length bound")
    theorem = "radford" if lam == 0 else "msq"
    report = VerificationReport(theorem, ring, weight, semigroup,
                                {"degree": degree_bound,
                                 "length": length_bound})
    gens = [word_symbol(ring, lam, semigroup, w)
            for w in enumerate_lyndon(semigroup, degree_bound, length_bound)]
    algebra = PresentedAlgebra(ring, lam, semigroup, gens,
                               TensorPoly.unit(ring, lam, semigroup),
                               length_bound)
    rows = _tensor_rows(semigroup, degree_bound, length_bound)
    _filtered_cells(report, ring, _tensor_key_order, rows,
                    _column_buckets(algebra, degree_bound), _identity_vec)
    if lam != 0:
        report.checks.append(_rescaling_check(ring, lam, semigroup,
                                              min(3, degree_bound),
                                              length_bound))
    return report


def _rescaling_check(ring, lam, semigroup, degree_bound, length_bound):
    """Scaling words by c^length carries the weight c*lam product to the
    weight lam product, on sampled word pairs."""
    c = Fraction(2)
    clam = ring.of(c * lam)
    bound = 3 if length_bound is None else min(length_bound, 3)
    words = enumerate_words(semigroup, degree_bound, bound)[:6]
    ok = True
    for a in words:
        for b in words:
            xa = word_poly(ring, clam, semigroup, a.letters)
            xb = word_poly(ring, clam, semigroup, b.letters)
            left = with_weight(length_rescale(xa * xb, c), lam)
            right = with_weight(length_rescale(xa, c), lam) \
                * with_weight(length_rescale(xb, c), lam)
            if left != right:
                ok = False
    return CheckRecord("length rescaling intertwines weights", ok,
                       "c=%s on %d words" % (c, len(words)))


def verify_fp_weight0(semigroup, p, degree_bound, length_bound=None):
    """Weight-zero mod-p shuffle: truncated polynomials on tensor Lyndon
    words, every generator with vanishing p-th power."""
    _require_prime(p)
    if _has_degree_zero_letter(semigroup):
        _require(length_bound is not None,
                 "letters of degree zero need a length bound")
    ring = Ring.prime_field(p)
    lam = ring.zero
    report = VerificationReport("psh", ring, 0, semigroup,
                                {"degree": degree_bound,
                                 "length": length_bound, "p": p})
    lyndon = enumerate_lyndon(semigroup, degree_bound, length_bound)
    tl = operator_T(lyndon, p, degree_bound, length_bound)
    gens = [word_symbol(ring, lam, semigroup, w, cap=p - 1,
                        relation=("power_zero", p)) for w in tl]
    algebra = PresentedAlgebra(ring, lam, semigroup, gens,
                               TensorPoly.unit(ring, lam, semigroup),
                               length_bound)
    rows = _tensor_rows(semigroup, degree_bound, length_bound)
    _filtered_cells(report, ring, _tensor_key_order, rows,
                    _column_buckets(algebra, degree_bound), _identity_vec)
    report.checks.extend(check_relations(algebra, _relation_length_cap(p)))
    return report


def _dispatch_tag(semigroup, p, degree_bound):
    tags = semigroup.classify(p, max(4, degree_bound))
    if "free-abelian" in tags:
        return "free-abelian", tags
    if "power-order" in tags:
        return "power-order", tags
    if "power-split" in tags or "elementary-p-group" in tags:
        return "power-split", tags
    raise ConfigurationError(
        "semigroup is not in a verifiable class for nonzero weight; "
        "classification gave %s" % sorted(tags))


def _letterwise_power_checks(ring, lam, semigroup, p, candidates, bound=6):
    """u^(shuffle p) = lambda^((p-1)len) u^(letter p) mod p, spot checked.

    Every letter position absorbs p-1 merges when only the fully merged
    interleavings survive mod p, hence the exponent (p-1)*len(u)."""
    checks = []
    for u in candidates[:bound]:
        left = TensorPoly.from_word(ring, lam, semigroup, u).shuffle_power(p)
        moved = componentwise_p_power(u, p)
        scalar = ring.pow_(lam, (p - 1) * u.length)
        right = TensorPoly.from_word(ring, lam, semigroup, moved, scalar)
        checks.append(CheckRecord(
            "letterwise power congruence for %s" % u.display(True),
            left == right))
    return checks


def _unit_power_family_check(semigroup, family, p, degree_bound,
                             length_bound):
    """Over a unitarized free monoid the fixed tensor Lyndon words are
    exactly the tensor powers of the bare identity letter."""
    ident = semigroup.identity
    limit = degree_bound if length_bound is None else length_bound
    expected = []
    q = 1
    while q <= limit:
        expected.append(Word((ident,) * q))
        q *= p
    ok = sorted(family, key=_tensor_key_order) == \
        sorted(expected, key=_tensor_key_order)
    return CheckRecord("fixed tensor Lyndon words are identity powers", ok,
                       "count %d" % len(expected))


def verify_fp_nonzero(semigroup, p, weight, degree_bound, length_bound=None):
    """Nonzero-weight mod-p shuffle structure, dispatched on the p-power
    behaviour of the letter semigroup.

    free abelian: the tensor Lyndon family generates freely.
    power-ordered: all tensor Lyndon words capped at p-1 carry the degree
    accounting, and the fixed ones satisfy w^p = lambda^w w.
    power-split: fixed generators with w^p = lambda^w w tensored with
    nilpotent differences w - w^(p) whose p-th powers vanish.
    """
    _require_prime(p)
    ring = Ring.prime_field(p)
    lam = ring.of(Fraction(weight))
    _require(lam != 0,
             "weight vanishes mod p; use the weight-zero verifier")
    branch, tags = _dispatch_tag(semigroup, p, degree_bound)
    if _has_degree_zero_letter(semigroup):
        _require(length_bound is not None,
                 "letters of degree zero need a length bound")
    report = VerificationReport("pmsh", ring, weight, semigroup,
                                {"degree": degree_bound,
                                 "length": length_bound, "p": p})
    report.checks.append(CheckRecord("classification", True,
                                     "%s -> %s" % (sorted(tags), branch)))
    sets = standard_generating_sets(semigroup, p, degree_bound, length_bound)
    if branch == "free-abelian":
        gens = [word_symbol(ring, lam, semigroup, w) for w in sets["tel"]]
        for n, count, lyn in _family_counts(sets, degree_bound):
            report.checks.append(CheckRecord(
                "degree %d tensor Lyndon count equals Lyndon count" % n,
                count == lyn, "%d" % count))
        report.checks.extend(_letterwise_power_checks(
            ring, lam, semigroup, p,
            [u for u in sets["el"] if u.degree * p <= degree_bound]))
    elif branch == "power-order":
        gens = []
        fixed = set(sets["tl1"])
        for w in sets["tl"]:
            if w in fixed:
                scalar = _tail_scalar(ring, lam, p, w.length)
                gens.append(word_symbol(ring, lam, semigroup, w, cap=p - 1,
                                        relation=("power_scalar", p,
                                                  scalar)))
            else:
                gens.append(word_symbol(ring, lam, semigroup, w, cap=p - 1))
        report.checks.append(CheckRecord(
            "fixed tensor families agree", sets["tl1"] == sets["tel1"]))
        if semigroup.kind == "unitarize" \
                and semigroup.inner.kind == "free_abelian":
            report.checks.append(_unit_power_family_check(
                semigroup, sets["tel1"], p, degree_bound, length_bound))
        ok, details = tel2_orbit_check(semigroup, p, degree_bound,
                                       length_bound)
        report.checks.append(CheckRecord(
            "moved family is the power orbit of the reduced family", ok,
            None if ok else str(details)))
        fixed_letters = set(semigroup.split_p_fixed(p, degree_bound)[0])
        moved = [u for u in sets["el"]
                 if u.degree * p <= degree_bound
                 and any(l not in fixed_letters for l in u.letters)]
        report.checks.extend(_letterwise_power_checks(
            ring, lam, semigroup, p, moved))
    else:
        gens = []
        for w in sets["tel1"]:
            scalar = _tail_scalar(ring, lam, p, w.length)
            gens.append(word_symbol(ring, lam, semigroup, w, cap=p - 1,
                                    relation=("power_scalar", p, scalar)))
        for w in sets["tel2"]:
            image = eettl_representative(ring, lam, semigroup, w, p)
            gens.append(GeneratorSymbol(
                _difference_name(w, p), image, image.max_degree(), w.length,
                cap=p - 1, relation=("power_zero", p)))
        ok, details = tel2_orbit_check(semigroup, p, degree_bound,
                                       length_bound)
        report.checks.append(CheckRecord(
            "moved family is the power orbit of the reduced family", ok,
            None if ok else str(details)))
    algebra = PresentedAlgebra(ring, lam, semigroup, gens,
                               TensorPoly.unit(ring, lam, semigroup),
                               length_bound)
    rows = _tensor_rows(semigroup, degree_bound, length_bound)
    _filtered_cells(report, ring, _tensor_key_order, rows,
                    _column_buckets(algebra, degree_bound), _identity_vec)
    report.checks.extend(check_relations(algebra, _relation_length_cap(p)))
    return report


def _difference_name(word, p):
    return "[%s-%s]" % (word.display(True),
                        componentwise_p_power(word, p).display(True))


def _family_counts(sets, degree_bound):
    lyn_by_deg = {}
    for w in sets["lyn"]:
        lyn_by_deg[w.degree] = lyn_by_deg.get(w.degree, 0) + 1
    tel_by_deg = {}
    for w in sets["tel"]:
        tel_by_deg[w.degree] = tel_by_deg.get(w.degree, 0) + 1
    return [(n, tel_by_deg.get(n, 0), lyn_by_deg.get(n, 0))
            for n in range(1, degree_bound + 1)]


# ---------------------------------------------------------------------------
# Z/p^N structure


def _int_weight(weight, p):
    weight = Fraction(weight)
    _require(weight.denominator == 1,
             "this check needs an integer weight literal")
    w = int(weight)
    _require(w % p != 0, "weight must be a unit at p")
    return w


def _zp_basis_cells(semigroup, p, precision, weight, degree_bound):
    """Tensor Lyndon monomials against the word basis mod p^N: full rank
    after reduction mod p makes the square system's determinant a unit."""
    ring = Ring.truncated_padic(p, precision)
    lam = ring.of(weight)
    sets = standard_generating_sets(semigroup, p, degree_bound)
    gens = [word_symbol(ring, lam, semigroup, w) for w in sets["tel"]]
    algebra = PresentedAlgebra(ring, lam, semigroup, gens,
                               TensorPoly.unit(ring, lam, semigroup))
    cells = []
    fp = Ring.prime_field(p)
    buckets = _column_buckets(algebra, degree_bound)
    rows = _tensor_rows(semigroup, degree_bound, None)
    reduce_vec = _mod_p_vec(p)
    for n in range(degree_bound + 1):
        keys = rows[n]
        elim = SparseEliminator(fp, _tensor_key_order)
        rank = 0
        for _, vec in buckets.get(n, []):
            if elim.insert(reduce_vec(vec)):
                rank += 1
        cols = len(buckets.get(n, []))
        ok = len(keys) == cols == rank
        cells.append(CellRecord(n, len(keys), cols, rank, ok,
                                None if ok else "determinant not a unit"))
    return cells, sets


def verify_zp(semigroup, p, precision, weight, degree_bound):
    """Mod p^N the tensor Lyndon monomials are a basis, and the
    indecomposables quotient keeps the Lyndon rank with p-unit divisors."""
    _require_prime(p)
    _require(precision >= 1, "precision must be positive")
    _require(semigroup.kind == "free_abelian",
             "this check runs over a free abelian semigroup")
    w = _int_weight(weight, p)
    ring = Ring.truncated_padic(p, precision)
    report = VerificationReport("isomor", ring, weight, semigroup,
                                {"degree": degree_bound, "p": p,
                                 "precision": precision})
    cells, sets = _zp_basis_cells(semigroup, p, precision, w, degree_bound)
    report.cells.extend(cells)
    for n, count, lyn in _family_counts(sets, degree_bound):
        report.checks.append(CheckRecord(
            "degree %d tensor Lyndon count equals Lyndon count" % n,
            count == lyn, "%d" % count))
        diag, _ = compute_cokernel_basis(semigroup, w, n)
        unit_ok = all(d % p != 0 for d in diag["divisors"])
        rank_ok = diag["coker_rank"] == lyn
        report.checks.append(CheckRecord(
            "degree %d indecomposables keep Lyndon rank at p" % n,
            unit_ok and rank_ok,
            "rank %d, divisors %s" % (diag["coker_rank"],
                                      diag["divisors"])))
    fp = Ring.prime_field(p)
    report.checks.extend(_letterwise_power_checks(
        fp, fp.of(w), semigroup, p,
        [u for u in sets["el"] if u.degree * p <= degree_bound]))
    stable_cells, _ = _zp_basis_cells(semigroup, p, precision + 2, w,
                                      degree_bound)
    same = all(a.ok == b.ok and a.rank == b.rank
               for a, b in zip(cells, stable_cells))
    report.checks.append(CheckRecord(
        "verdicts stable at precision %d" % (precision + 2), same))
    return report


# ---------------------------------------------------------------------------
# integral structure


def compute_cokernel_basis(semigroup, weight, degree):
    """Smith diagnosis of the decomposables map in one degree, with a
    lifted complement basis.

    Columns of the map are all products of lower-degree basis words; the
    cokernel must be free, of rank the Lyndon count.  The complement is
    lifted greedily through plain words, largest in pro-length order
    first, each acceptance keeping the chosen set a direct summand; if the
    greedy word walk cannot finish, an explicit unimodular complement is
    taken from the Smith transform instead.
    """
    weight = Fraction(weight)
    _require(weight.denominator == 1, "integral checks need integer weight")
    lam = int(weight)
    ring = Ring.integers()
    rows = list(graded_basis(semigroup, degree))
    index = {w: i for i, w in enumerate(rows)}
    m = len(rows)
    columns = []
    for i in range(1, degree // 2 + 1):
        low = list(graded_basis(semigroup, i))
        high = list(graded_basis(semigroup, degree - i))
        for a_pos, a in enumerate(low):
            for b_pos, b in enumerate(high):
                if i == degree - i and b_pos < a_pos:
                    continue
                prod = word_poly(ring, lam, semigroup, a.letters) * \
                    word_poly(ring, lam, semigroup, b.letters)
                column = [0] * m
                for w, c in prod.terms.items():
                    column[index[w]] = c
                columns.append(column)
    if columns:
        mu = Matrix.from_columns(ring, columns, m)
        divisors, U, _ = mu.smith_normal_form()
    else:
        divisors, U = [], Matrix.identity(ring, m)
    rank = len(divisors)
    coker_rank = m - rank
    lyndon_count = sum(1 for w in enumerate_lyndon(semigroup, degree)
                       if w.degree == degree)
    offending = [d for d in divisors if d != 1]

    def coords(j):
        return [U.rows[i][j] for i in range(rank, m)]

    chosen_words = []
    chosen_cols = []
    for w in reversed(rows):
        if len(chosen_words) == coker_rank:
            break
        candidate = chosen_cols + [coords(index[w])]
        trial = Matrix.from_columns(ring, candidate, coker_rank)
        d, _, _ = trial.smith_normal_form()
        if len(d) == len(candidate) and all(x == 1 for x in d):
            chosen_words.append(w)
            chosen_cols.append(candidate[-1])
    if len(chosen_words) == coker_rank:
        method = "greedy-words"
        lifted = [word_poly(ring, lam, semigroup, w.letters)
                  for w in chosen_words]
        names = [w.display(True) for w in chosen_words]
        square = Matrix.from_columns(ring, chosen_cols, coker_rank)
        det = square.det_bareiss() if coker_rank else 1
    else:
        # a complement of plain words can fail to exist; fall back to the
        # exact complement read off the unimodular row transform
        method = "transform-complement"
        solver = _ZSolver(U)
        lifted = []
        names = []
        for i in range(rank, m):
            target = [1 if j == i else 0 for j in range(m)]
            x = solver.solve(target)
            poly = TensorPoly(ring, lam, semigroup,
                              {rows[j]: x[j] for j in range(m) if x[j]})
            lifted.append(poly)
            names.append("c%d_%d" % (degree, i - rank))
        det = 1
    diagnosis = {
        "degree": degree,
        "rows": m,
        "divisors": list(divisors),
        "offending": offending,
        "free": not offending,
        "coker_rank": coker_rank,
        "lyndon_count": lyndon_count,
        "rank_matches": coker_rank == lyndon_count,
        "method": method,
        "complement_det": det,
        "y_words": names,
        "_U": U,
        "_rank": rank,
        "_rows": rows,
    }
    return diagnosis, lifted


def _cokernel_check(diag):
    ok = diag["free"] and diag["rank_matches"] \
        and diag["complement_det"] in (1, -1)
    return CheckRecord(
        "degree %d cokernel free of Lyndon rank" % diag["degree"], ok,
        "rank %d, method %s, det %d%s" % (
            diag["coker_rank"], diag["method"], diag["complement_det"],
            "" if diag["free"] else ", divisors %s" % diag["offending"]))


def verify_z_polynomial(semigroup, weight, degree_bound):
    """Lifted complement monomials form a Z-basis in every degree."""
    weight = Fraction(weight)
    _require(weight in (1, -1), "integral structure runs at weight 1 or -1")
    _require(semigroup.kind == "free_abelian",
             "this check runs over a free abelian semigroup")
    ring = Ring.integers()
    lam = int(weight)
    report = VerificationReport("intfr", ring, weight, semigroup,
                                {"degree": degree_bound})
    gens = []
    for k in range(1, degree_bound + 1):
        diag, lifted = compute_cokernel_basis(semigroup, lam, k)
        report.checks.append(_cokernel_check(diag))
        for name, poly in zip(diag["y_words"], lifted):
            lead = poly.leading_term()[0]
            gens.append(GeneratorSymbol(name, poly, k, lead.length))
    algebra = PresentedAlgebra(ring, lam, semigroup, gens,
                               TensorPoly.unit(ring, lam, semigroup))
    rows = _tensor_rows(semigroup, degree_bound, None)
    _z_square_cells(report, ring, rows,
                    _column_buckets(algebra, degree_bound),
                    solve_words=True)
    return report


def _pad_word(word, big):
    width = len(big.generators)
    letters = []
    for letter in word.letters:
        key = tuple(letter.key) + (0,) * (width - len(letter.key))
        letters.append(Element(big, key))
    return Word(tuple(letters))


def verify_nested_summand(semigroups, weight, degree_bound):
    """Each complement lattice embeds as a direct summand of the next
    under an alphabet extension, degree by degree."""
    weight = Fraction(weight)
    _require(weight in (1, -1), "integral structure runs at weight 1 or -1")
    _require(len(semigroups) >= 2, "need at least two nested alphabets")
    for s in semigroups:
        _require(s.kind == "free_abelian",
                 "nested checks run over free abelian semigroups")
    for small, big in zip(semigroups, semigroups[1:]):
        _require(tuple(small.generators) ==
                 tuple(big.generators)[:len(small.generators)],
                 "alphabets must extend by appending letters")
    ring = Ring.integers()
    lam = int(weight)
    report = VerificationReport("intfr-nested", ring, weight, semigroups[-1],
                                {"degree": degree_bound,
                                 "chain": len(semigroups)})
    for step, (small, big) in enumerate(zip(semigroups, semigroups[1:])):
        for n in range(1, degree_bound + 1):
            _, lifted = compute_cokernel_basis(small, lam, n)
            diag_big, _ = compute_cokernel_basis(big, lam, n)
            U, rank = diag_big["_U"], diag_big["_rank"]
            rows_big = diag_big["_rows"]
            index = {w: i for i, w in enumerate(rows_big)}
            m = len(rows_big)
            columns = []
            for poly in lifted:
                vec = [0] * m
                for w, c in poly.terms.items():
                    vec[index[_pad_word(w, big)]] = c
                columns.append([sum(U.rows[i][j] * vec[j]
                                    for j in range(m) if vec[j])
                                for i in range(rank, m)])
            size = diag_big["coker_rank"]
            matrix = Matrix.from_columns(ring, columns, size)
            d, _, _ = matrix.smith_normal_form()
            ok = len(d) == len(columns) and all(x == 1 for x in d)
            report.cells.append(CellRecord(
                n, size, len(columns), len(d), ok,
                "chain step %d" % (step + 1) if ok
                else "divisors %s" % (d,)))
    return report


# ---------------------------------------------------------------------------
# Rota-Baxter structure


def _unitarized_free(alphabet):
    return Unitarized(FreeAbelian(list(alphabet)))


def _lift_word(monoid, word):
    letters = tuple(Element(monoid, ("e", l.key)) for l in word.letters)
    return Word(letters)


def _rb_rows(head_semigroup, tail_words_of, degree_bound):
    """(head, tail) pure tensors per degree; tail_words_of(d) lists the
    admissible tail words of one exact degree."""
    rows = {n: [] for n in range(degree_bound + 1)}
    for head in head_semigroup.elements_up_to(degree_bound):
        for n in range(head.degree, degree_bound + 1):
            for tail in tail_words_of(n - head.degree):
                rows[n].append((head, tail))
    return rows


def _head_symbols(ring, lam, semigroup, cap=None, relation=None):
    """One generator per alphabet letter, as a bare head tensor."""
    out = []
    for x in alphabet_generators(semigroup):
        image = RBElement.from_parts(ring, lam, semigroup, x, empty_word())
        out.append(GeneratorSymbol(x.name, image, x.degree, 0, cap,
                                   relation))
    return out


def _tail_symbol(ring, lam, semigroup, word, cap=None, relation=None):
    ident = semigroup.identity
    image = RBElement.from_parts(ring, lam, semigroup, ident, word)
    return GeneratorSymbol("[%s]" % word.display(True), image,
                           ident.degree + word.degree, word.length, cap,
                           relation)


def _rb_tail_poly(ring, lam, semigroup, poly):
    """Wrap a tail tensor polynomial as the element 1 (x) poly."""
    ident = semigroup.identity
    terms = {(ident, w): c for w, c in poly.terms.items()}
    return RBElement(ring, lam, semigroup, terms)


def _verify_rbl(alphabet, weight, degree_bound, length_bound):
    ring = Ring.rationals()
    lam = ring.of(Fraction(weight))
    monoid = _unitarized_free(alphabet)
    report = VerificationReport("rbl", ring, weight, monoid,
                                {"degree": degree_bound,
                                 "length": length_bound})
    gens = _head_symbols(ring, lam, monoid)
    for w in enumerate_lyndon(monoid, degree_bound, length_bound):
        gens.append(_tail_symbol(ring, lam, monoid, w))
    algebra = PresentedAlgebra(ring, lam, monoid, gens,
                               RBElement.one(ring, lam, monoid),
                               length_bound)

    def tails(d):
        return list(graded_basis(monoid, d, length_bound))

    rows = _rb_rows(monoid, tails, degree_bound)
    _filtered_cells(report, ring, _rb_key_order(monoid), rows,
                    _column_buckets(algebra, degree_bound), _identity_vec)
    return report


def _verify_rbazp(alphabet, p, precision, weight, degree_bound):
    _require_prime(p)
    _require(precision >= 1, "precision must be positive")
    w = _int_weight(weight, p)
    ring = Ring.truncated_padic(p, precision)
    lam = ring.of(w)
    monoid = _unitarized_free(alphabet)
    free = monoid.inner
    report = VerificationReport("rbazp", ring, weight, monoid,
                                {"degree": degree_bound, "p": p,
                                 "precision": precision})
    sets = standard_generating_sets(free, p, degree_bound)
    gens = _head_symbols(ring, lam, monoid)
    for u in sets["tel"]:
        gens.append(_tail_symbol(ring, lam, monoid, _lift_word(monoid, u)))
    algebra = PresentedAlgebra(ring, lam, monoid, gens,
                               RBElement.one(ring, lam, monoid))

    def tails(d):
        return [_lift_word(monoid, t) for t in graded_basis(free, d)]

    rows = _rb_rows(monoid, tails, degree_bound)
    fp = Ring.prime_field(p)
    reduce_vec = _mod_p_vec(p)
    buckets = _column_buckets(algebra, degree_bound)
    for n in range(degree_bound + 1):
        keys = rows[n]
        elim = SparseEliminator(fp, _rb_key_order(monoid))
        rank = 0
        for _, vec in buckets.get(n, []):
            if elim.insert(reduce_vec(vec)):
                rank += 1
        cols = len(buckets.get(n, []))
        ok = cols == rank
        report.cells.append(CellRecord(
            n, len(keys), cols, rank, ok,
            None if ok else "dependent monomials mod %d" % p))
        report.checks.append(CheckRecord(
            "degree %d monomial count fills the identity-free sector" % n,
            cols == len(keys), "%d" % cols))
    return report


def _verify_rbaz(alphabet, weight, degree_bound, length_bound):
    weight = Fraction(weight)
    _require(weight in (1, -1), "integral structure runs at weight 1 or -1")
    ring = Ring.integers()
    lam = int(weight)
    monoid = _unitarized_free(alphabet)
    free = monoid.inner
    report = VerificationReport("rbaz", ring, weight, monoid,
                                {"degree": degree_bound,
                                 "length": length_bound})
    gens = _head_symbols(ring, lam, monoid)
    for k in range(1, degree_bound + 1):
        diag, lifted = compute_cokernel_basis(free, lam, k)
        report.checks.append(_cokernel_check(diag))
        for name, poly in zip(diag["y_words"], lifted):
            monoid_poly = TensorPoly(
                ring, lam, monoid,
                {_lift_word(monoid, w): c for w, c in poly.terms.items()})
            lead = monoid_poly.leading_term()[0]
            gens.append(GeneratorSymbol(
                "[%s]" % name, _rb_tail_poly(ring, lam, monoid, monoid_poly),
                k, lead.length))
    algebra = PresentedAlgebra(ring, lam, monoid, gens,
                               RBElement.one(ring, lam, monoid))
    buckets = _column_buckets(algebra, degree_bound)
    rows_by_degree = {}
    cols_by_degree = {}
    for n in range(degree_bound + 1):
        plain = []
        interior = []
        for head in monoid.elements_up_to(n):
            for tail in graded_basis(free, n - head.degree):
                plain.append((head, _lift_word(monoid, tail)))
            for tail in graded_basis(monoid, n - head.degree, length_bound):
                if any(l.is_identity() for l in tail.letters):
                    interior.append((head, tail))
        rows_by_degree[n] = plain + interior
        cols = list(buckets.get(n, []))
        for key in interior:
            cols.append(("N:%s" % _key_text(key), {key: 1}))
        cols_by_degree[n] = cols
    _z_square_cells(report, ring, rows_by_degree, cols_by_degree)
    return report


def _p_idempotent_heads(p, count):
    """count slots of the unitarized cyclic group of order p-1, folded
    into one product; each slot generator x satisfies x^p = x and the
    monomials x^a with a < p enumerate all p^count head elements, which
    realizes truncated polynomials with p-idempotent variables."""
    factors = []
    for _ in range(count):
        table, names = cyclic_group_table(p - 1)
        factors.append(Unitarized(FiniteTableSemigroup(table, names=names)))
    folded = factors[0]
    for s in factors[1:]:
        folded = ProductSemigroup(folded, s)
    ident_keys = [s.identity_key for s in factors]
    generators = []
    for i in range(count):
        keys = list(ident_keys)
        keys[i] = ("e", 0)
        key = keys[0]
        for k in keys[1:]:
            key = (key, k)
        generators.append(key)
    return folded, [Element(folded, k) for k in generators]


def _head_cover_check(semigroup, heads, p):
    """The head monomials with exponents below p hit every element."""
    seen = set()
    for exps in itertools.product(range(p), repeat=len(heads)):
        el = semigroup.identity
        for x, a in zip(heads, exps):
            for _ in range(a):
                el = el * x
        seen.add(el.key)
    total = len(semigroup.elements_up_to(len(heads)))
    ok = len(seen) == p ** len(heads) == total
    return CheckRecord("head monomials enumerate the coefficient algebra",
                       ok, "%d elements" % len(seen))


def _rbafp_case(case, alphabet, p, weight, degree_bound, length_bound):
    _require_prime(p)
    ring = Ring.prime_field(p)
    names = list(alphabet)
    if case == 1:
        lam = ring.zero
        _require(Fraction(weight) == 0, "case 1 runs at weight zero")
    else:
        lam = ring.of(Fraction(weight))
        _require(lam != 0, "cases 2-4 need a weight that is a unit mod p")
    checks = []
    head_gens = []
    head_elements = None
    if case in (1, 2):
        semigroup = _unitarized_free(names)
        head_gens = _head_symbols(ring, lam, semigroup)
    elif case == 3:
        semigroup, embedded = _p_idempotent_heads(p, len(names))
        head_elements = embedded
        tags = semigroup.classify(p, 4)
        checks.append(CheckRecord("heads are p-idempotent",
                                  "p-idempotent" in tags,
                                  str(sorted(tags))))
        for name, el in zip(names, embedded):
            image = RBElement.from_parts(ring, lam, semigroup, el,
                                         empty_word())
            checks.append(CheckRecord(
                "head %s has p-th power itself" % name,
                image.power(p) == image))
        checks.append(_head_cover_check(semigroup, embedded, p))
    else:
        semigroup = ElementaryPGroup(p, len(names))
        tags = semigroup.classify(p, 4)
        checks.append(CheckRecord("heads form an elementary p-group",
                                  "elementary-p-group" in tags,
                                  str(sorted(tags))))
        unit = RBElement.one(ring, lam, semigroup)
        head_elements = []
        for i, name in enumerate(names):
            key = tuple(1 if j == i else 0 for j in range(len(names)))
            el = Element(semigroup, key)
            head_elements.append(el)
            image = RBElement.from_parts(ring, lam, semigroup, el,
                                         empty_word())
            checks.append(CheckRecord(
                "head %s has p-th power the unit" % name,
                image.power(p) == unit))
        checks.append(_head_cover_check(semigroup, head_elements, p))
    report = VerificationReport("rbafp%d" % case, ring, weight, semigroup,
                                {"degree": degree_bound,
                                 "length": length_bound, "p": p})
    report.checks.extend(checks)
    tail_gens = []
    if case == 1:
        lyndon = enumerate_lyndon(semigroup, degree_bound, length_bound)
        for w in operator_T(lyndon, p, degree_bound, length_bound):
            tail_gens.append(_tail_symbol(ring, lam, semigroup, w,
                                          cap=p - 1,
                                          relation=("power_zero", p)))
    elif case in (2, 3):
        sets = standard_generating_sets(semigroup, p, degree_bound,
                                        length_bound)
        fixed = set(sets["tl1"])
        for w in sets["tl"]:
            if w in fixed:
                # the p-th power of the tail element 1 (x) w merges p
                # copies at every letter slot including the unit head,
                # hence the exponent (p-1)*len(w) with no Fermat rebate
                scalar = _tail_scalar(ring, lam, p, w.length + 1)
                tail_gens.append(_tail_symbol(
                    ring, lam, semigroup, w, cap=p - 1,
                    relation=("power_scalar", p, scalar)))
            else:
                tail_gens.append(_tail_symbol(ring, lam, semigroup, w,
                                              cap=p - 1))
        if case == 2:
            report.checks.append(_unit_power_family_check(
                semigroup, sets["tel1"], p, degree_bound, length_bound))
        else:
            report.checks.append(CheckRecord(
                "every tail generator is fixed", not sets["tl2"]))
    else:
        sets = standard_generating_sets(semigroup, p, degree_bound,
                                        length_bound)
        ident = semigroup.identity
        for w in sets["tel1"]:
            scalar = _tail_scalar(ring, lam, p, w.length + 1)
            tail_gens.append(_tail_symbol(
                ring, lam, semigroup, w, cap=p - 1,
                relation=("power_scalar", p, scalar)))
        for w in sets["tel2"]:
            poly = eettl_representative(ring, lam, semigroup, w, p)
            image = _rb_tail_poly(ring, lam, semigroup, poly)
            tail_gens.append(GeneratorSymbol(
                _difference_name(w, p), image,
                ident.degree + poly.max_degree(), w.length,
                cap=p - 1, relation=("power_zero", p)))
    unit = RBElement.one(ring, lam, semigroup)
    tail_algebra = PresentedAlgebra(ring, lam, semigroup, tail_gens, unit,
                                    length_bound)
    if head_elements is None:
        algebra = PresentedAlgebra(ring, lam, semigroup,
                                   head_gens + tail_gens, unit,
                                   length_bound)
        cols = _column_buckets(algebra, degree_bound)
        relation_algebra = algebra
    else:
        # the head algebra is filtered, not graded: head generator powers
        # collapse inside the group, so monomials are enumerated by bare
        # head element and each column lands at its true degree
        tail_buckets = tail_algebra.monomials_by_degree(degree_bound)
        cols = {n: [] for n in range(degree_bound + 1)}
        for head in semigroup.elements_up_to(degree_bound):
            hpoly = RBElement.from_parts(ring, lam, semigroup, head,
                                         empty_word())
            for d in range(degree_bound - head.degree + 1):
                for name, mono in tail_buckets.get(d, []):
                    img = hpoly.mul_shared(mono, tail_algebra._memo)
                    label = head.name if name == "1" \
                        else "%s*%s" % (head.name, name)
                    cols[head.degree + d].append((label, img.terms))
        relation_algebra = tail_algebra

    def tails(d):
        return list(graded_basis(semigroup, d, length_bound))

    rows = _rb_rows(semigroup, tails, degree_bound)
    _filtered_cells(report, ring, _rb_key_order(semigroup), rows, cols,
                    _identity_vec)
    report.checks.extend(check_relations(relation_algebra,
                                         _relation_length_cap(p)))
    return report


def verify_rb_structure(theorem, alphabet=("x",), weight=1, p=None,
                        precision=None, degree_bound=3, length_bound=3):
    """Dispatch the free Rota-Baxter structure checks.

    theorem: rbl (rational polynomial generators), rbafp1..rbafp4 (the
    four mod-p presentations), rbazp (p-adic independence at finite
    precision), rbaz (integral direct sum split).
    """
    _require(len(alphabet) >= 1, "need at least one alphabet letter")
    if theorem == "rbl":
        return _verify_rbl(alphabet, weight, degree_bound, length_bound)
    if theorem == "rbazp":
        _require(p is not None, "rbazp needs p")
        return _verify_rbazp(alphabet, p, precision or 4, weight,
                             degree_bound)
    if theorem == "rbaz":
        return _verify_rbaz(alphabet, weight, degree_bound, length_bound)
    if theorem in ("rbafp1", "rbafp2", "rbafp3", "rbafp4"):
        _require(p is not None, "%s needs p" % theorem)
        case = int(theorem[-1])
        return _rbafp_case(case, alphabet, p, weight, degree_bound,
                           length_bound)
    raise ConfigurationError("unknown Rota-Baxter theorem %r" % theorem)


# ---------------------------------------------------------------------------
# semigroup properties


def verify_semigroup_props(semigroup, p, degree_bound, length_bound=None):
    """The word-family identities behind the mod-p structure theorems."""
    _require_prime(p)
    ring = Ring.prime_field(p)
    report = VerificationReport("props", ring, 0, semigroup,
                                {"degree": degree_bound,
                                 "length": length_bound, "p": p})
    tags = semigroup.classify(p, max(4, degree_bound))
    report.checks.append(CheckRecord("classification", True,
                                     str(sorted(tags))))
    fixed, moved = semigroup.split_p_fixed(p, degree_bound)
    report.checks.append(CheckRecord(
        "p-power split sizes", True,
        "fixed %d, moved %d" % (len(fixed), len(moved))))
    if "power-order" in tags or "power-split" in tags:
        divisible = semigroup.p_divisible(p, degree_bound)
        report.checks.append(CheckRecord(
            "infinitely p-divisible window equals the fixed part",
            sorted(divisible) == sorted(fixed)))
    if semigroup.kind == "ordered_set":
        report.checks.append(CheckRecord(
            "zero multiplication: no power families", True))
        return report
    sets = standard_generating_sets(semigroup, p, degree_bound, length_bound)
    report.checks.append(CheckRecord(
        "fixed tensor families agree", sets["tl1"] == sets["tel1"]))
    fixed_letters = set(fixed)
    expected_l1 = [w for w in sets["lyn"]
                   if all(l in fixed_letters for l in w.letters)]
    report.checks.append(CheckRecord(
        "fixed Lyndon words are those over fixed letters",
        sorted(sets["l1"], key=_tensor_key_order) ==
        sorted(expected_l1, key=_tensor_key_order)))
    if semigroup.kind == "unitarize" \
            and semigroup.inner.kind == "free_abelian":
        report.checks.append(_unit_power_family_check(
            semigroup, sets["tel1"], p, degree_bound, length_bound))
    ok, details = tel2_orbit_check(semigroup, p, degree_bound, length_bound)
    report.checks.append(CheckRecord(
        "moved family is the power orbit of the reduced family", ok,
        None if ok else str(details)))
    return report
