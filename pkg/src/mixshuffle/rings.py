"""Exact coefficient rings and exact linear algebra.

Four coefficient rings are supported: the rationals, the integers, prime
fields, and truncated p-adic rings Z/p^N (a finite stand-in for the p-adic
integers at working precision N).  Values are kept in canonical form as
plain ints or Fractions; a Ring object does the arithmetic, so nothing
here ever touches floating point.

The linear algebra is exact as well: fraction-free determinants, row
reduction over the two fields, Smith normal form over the integers, and
linear solving over every ring including Z/p^N (where elimination has to
respect p-valuations).
"""

from fractions import Fraction
import json

Q = "Q"
Z = "Z"
FP = "Fp"
ZP = "Zp"


class Ring:
    """A coefficient ring tag plus arithmetic on canonical raw values.

    Canonical values: Fraction for Q, int for Z, int in [0, p) for Fp,
    int in [0, p^N) for Zp.
    """

    __slots__ = ("kind", "p", "precision", "modulus")

    def __init__(self, kind, p=None, precision=None):
        if kind not in (Q, Z, FP, ZP):
            raise ValueError("unknown ring kind: %r" % (kind,))
        if kind in (FP, ZP):
            if p is None or p < 2 or not _is_prime(p):
                raise ValueError("ring %s needs a prime p, got %r" % (kind, p))
        if kind == ZP:
            if precision is None or precision < 1:
                raise ValueError("ring Zp needs precision >= 1")
        self.kind = kind
        self.p = p
        self.precision = precision if kind == ZP else None
        if kind == FP:
            self.modulus = p
        elif kind == ZP:
            self.modulus = p ** precision
        else:
            self.modulus = None

    # constructors

    @staticmethod
    def rationals():
        return Ring(Q)

    @staticmethod
    def integers():
        return Ring(Z)

    @staticmethod
    def prime_field(p):
        return Ring(FP, p=p)

    @staticmethod
    def truncated_padic(p, precision):
        return Ring(ZP, p=p, precision=precision)

    # canonicalization

    def of(self, x):
        """Coerce x (int, Fraction, RingElement, or string) to canonical form."""
        if isinstance(x, RingElement):
            if x.ring != self:
                raise ValueError("mixed-ring operand: %r into %r" % (x.ring, self))
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if self.kind == Q:
                return x
            if x.denominator == 1:
                return self.of(int(x))
            if self.modulus is not None:
                den = self.inverse(x.denominator % self.modulus)
                return (x.numerator * den) % self.modulus
            raise ValueError("non-integer value %s in ring %s" % (x, self.kind))
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError("cannot coerce %r into ring %s" % (x, self.kind))
        if self.kind == Q:
            return Fraction(x)
        if self.modulus is not None:
            return x % self.modulus
        return x

    def parse(self, s):
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return self.of(Fraction(int(num), int(den)))
        return self.of(int(s))

    def format(self, v):
        return str(v)

    @property
    def zero(self):
        return Fraction(0) if self.kind == Q else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == Q else 1

    # arithmetic on canonical values

    def add(self, a, b):
        if self.modulus is not None:
            return (a + b) % self.modulus
        return a + b

    def sub(self, a, b):
        if self.modulus is not None:
            return (a - b) % self.modulus
        return a - b

    def neg(self, a):
        if self.modulus is not None:
            return (-a) % self.modulus
        return -a

    def mul(self, a, b):
        if self.modulus is not None:
            return (a * b) % self.modulus
        return a * b

    def pow_(self, a, e):
        if e < 0:
            return self.pow_(self.inverse(a), -e)
        if self.modulus is not None:
            return pow(a, e, self.modulus)
        return a ** e

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        if self.kind == Q:
            return a != 0
        if self.kind == Z:
            return a in (1, -1)
        if self.kind == FP:
            return a % self.p != 0
        return a % self.p != 0

    def inverse(self, a):
        """Multiplicative inverse; raises ZeroDivisionError when a is not a unit."""
        if self.kind == Q:
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return Fraction(1) / a
        if self.kind == Z:
            if a in (1, -1):
                return a
            raise ZeroDivisionError("%d is not a unit in Z" % a)
        return pow(a, -1, self.modulus)

    def divide(self, a, b):
        """Exact division a / b; raises when the quotient leaves the ring."""
        if self.kind == Z:
            if b == 0:
                raise ZeroDivisionError("division by 0")
            q, r = divmod(a, b)
            if r != 0:
                raise ZeroDivisionError("%d does not divide %d in Z" % (b, a))
            return q
        return self.mul(a, self.inverse(b))

    def elem(self, x):
        return RingElement(self, self.of(x))

    @property
    def is_field(self):
        return self.kind in (Q, FP)

    # serialization

    def to_json(self):
        if self.kind == Q:
            return {"kind": "rationals"}
        if self.kind == Z:
            return {"kind": "integers"}
        if self.kind == FP:
            return {"kind": "prime_field", "p": self.p}
        return {"kind": "truncated_padic", "p": self.p, "precision": self.precision}

    @staticmethod
    def from_json(data):
        if isinstance(data, str):
            data = json.loads(data)
        kind = data["kind"]
        if kind == "rationals":
            return Ring.rationals()
        if kind == "integers":
            return Ring.integers()
        if kind == "prime_field":
            return Ring.prime_field(data["p"])
        if kind == "truncated_padic":
            return Ring.truncated_padic(data["p"], data["precision"])
        raise ValueError("unknown ring kind %r" % kind)

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.kind == other.kind
                and self.p == other.p and self.precision == other.precision)

    def __hash__(self):
        return hash((self.kind, self.p, self.precision))

    def __repr__(self):
        if self.kind == FP:
            return "F%d" % self.p
        if self.kind == ZP:
            return "Z/%d^%d" % (self.p, self.precision)
        return self.kind


class RingElement:
    """A canonical value tagged with its ring.  Mixed-ring arithmetic raises."""

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = ring.of(value)

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError("mixed-ring arithmetic: %r vs %r" % (self.ring, other.ring))
            return other.value
        return self.ring.of(other)

    def __add__(self, other):
        return RingElement(self.ring, self.ring.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return RingElement(self.ring, self.ring.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return RingElement(self.ring, self.ring.divide(self.value, self._coerce(other)))

    def __pow__(self, e):
        return RingElement(self.ring, self.ring.pow_(self.value, e))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def inverse(self):
        return RingElement(self.ring, self.ring.inverse(self.value))

    def is_unit(self):
        return self.ring.is_unit(self.value)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        try:
            return self.value == self.ring.of(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return "%s(%s)" % (self.ring, self.value)


# p-adic utilities


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def p_adic_valuation(n, p):
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_p_adic_unit(n, p):
    return n != 0 and n % p != 0


def base_p_digits(n, p):
    """Digits of n in base p, least significant first.  base_p_digits(0) == []."""
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    return digits


def base_power_multinomial(n, p):
    """n! / prod_j (p^j !)^{a_j} where n = sum_j a_j p^j in base p.

    The multinomial coefficient of n things split into blocks whose sizes
    are the base-p power parts of n.  Always a p-adic unit, which the
    leading-term analysis of p-th shuffle powers relies on.
    """
    import math
    num = math.factorial(n)
    den = 1
    for j, a in enumerate(base_p_digits(n, p)):
        if a:
            den *= math.factorial(p ** j) ** a
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError("multinomial is not integral, n=%d p=%d" % (n, p))
    return q


# matrices


class Matrix:
    """Dense matrix over a Ring, stored as raw canonical values."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring, rows, nrows=None, ncols=None):
        self.ring = ring
        self.rows = [[ring.of(x) for x in row] for row in rows]
        self.nrows = len(self.rows) if nrows is None else nrows
        self.ncols = (len(self.rows[0]) if self.rows else 0) if ncols is None else ncols
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, ring, n):
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)],
                   nrows=n, ncols=n)

    @classmethod
    def zero(cls, ring, m, n):
        z = ring.zero
        return cls(ring, [[z] * n for _ in range(m)], nrows=m, ncols=n)

    @classmethod
    def from_columns(cls, ring, cols, nrows):
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]
        return cls(ring, rows, nrows=nrows, ncols=len(cols))

    def copy(self):
        return Matrix(self.ring, [row[:] for row in self.rows],
                      nrows=self.nrows, ncols=self.ncols)

    def column(self, j):
        return [row[j] for row in self.rows]

    def transpose(self):
        return Matrix(self.ring, [[self.rows[i][j] for i in range(self.nrows)]
                                  for j in range(self.ncols)],
                      nrows=self.ncols, ncols=self.nrows)

    def mul(self, other):
        if self.ring != other.ring:
            raise ValueError("mixed-ring matrix product")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        R = self.ring
        out = []
        for i in range(self.nrows):
            row = []
            arow = self.rows[i]
            for j in range(other.ncols):
                acc = R.zero
                for k in range(self.ncols):
                    if arow[k] != 0:
                        acc = R.add(acc, R.mul(arow[k], other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(R, out, nrows=self.nrows, ncols=other.ncols)

    def apply_vector(self, v):
        R = self.ring
        out = []
        for i in range(self.nrows):
            acc = R.zero
            row = self.rows[i]
            for j in range(self.ncols):
                if v[j] != 0 and row[j] != 0:
                    acc = R.add(acc, R.mul(row[j], v[j]))
            out.append(acc)
        return out

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ring == other.ring
                and self.rows == other.rows and self.nrows == other.nrows
                and self.ncols == other.ncols)

    def __repr__(self):
        return "Matrix(%r, %dx%d)" % (self.ring, self.nrows, self.ncols)

    def to_json(self):
        return {"ring": self.ring.to_json(), "rows": self.nrows, "cols": self.ncols,
                "entries": [[self.ring.format(x) for x in row] for row in self.rows]}

    @staticmethod
    def from_json(data):
        ring = Ring.from_json(data["ring"])
        rows = [[ring.parse(x) for x in row] for row in data["entries"]]
        return Matrix(ring, rows, nrows=data["rows"], ncols=data["cols"])

    # determinants

    def det_bareiss(self):
        """Fraction-free determinant (Bareiss) for square matrices over Z or Q."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of non-square matrix")
        n = self.nrows
        if n == 0:
            return self.ring.one
        a = [row[:] for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return self.ring.zero
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                    if self.ring.kind == Z:
                        a[i][j] = num // prev
                    else:
                        a[i][j] = num / prev
                a[i][k] = self.ring.zero
            prev = a[k][k]
        return self.ring.of(sign) * a[n - 1][n - 1] if self.ring.kind == Q \
            else self.ring.of(sign * a[n - 1][n - 1])

    # row reduction over a field

    def row_reduce(self):
        """Reduced row echelon form over Q or Fp.

        Returns (rank, pivot_columns, kernel_basis, rref_rows).  Pivots are
        chosen deterministically: leftmost column first, topmost usable row.
        Kernel vectors are indexed by the free columns.
        """
        R = self.ring
        if not R.is_field:
            raise ValueError("row_reduce needs a field, got %r" % R)
        a = [row[:] for row in self.rows]
        m, n = self.nrows, self.ncols
        pivots = []
        r = 0
        for col in range(n):
            piv = None
            for i in range(r, m):
                if a[i][col] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = R.inverse(a[r][col])
            if a[r][col] != R.one:
                a[r] = [R.mul(inv, x) for x in a[r]]
            for i in range(m):
                if i != r and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [R.sub(a[i][j], R.mul(f, a[r][j])) for j in range(n)]
            pivots.append(col)
            r += 1
            if r == m:
                break
        free = [j for j in range(n) if j not in pivots]
        kernel = []
        for fcol in free:
            v = [R.zero] * n
            v[fcol] = R.one
            for i, pcol in enumerate(pivots):
                v[pcol] = R.neg(a[i][fcol])
            kernel.append(v)
        return r, tuple(pivots), kernel, a

    # Smith normal form over Z

    def smith_normal_form(self):
        """Smith normal form over Z.

        Returns (D, U, V) with U * self * V = diag(D) (padded with zeros to
        this matrix's shape), U and V unimodular, and D the nonzero
        elementary divisors: all positive, each dividing the next.  Pivots
        are chosen by smallest absolute value, which keeps the intermediate
        entries from exploding at these sizes.
        """
        if self.ring.kind != Z:
            raise ValueError("smith_normal_form is defined over Z")
        m, n = self.nrows, self.ncols
        a = [row[:] for row in self.rows]
        u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

        def row_sub(i, k, q):
            # row i -= q * row k
            a[i] = [x - q * y for x, y in zip(a[i], a[k])]
            u[i] = [x - q * y for x, y in zip(u[i], u[k])]

        def col_sub(j, k, q):
            for row in a:
                row[j] -= q * row[k]
            for row in v:
                row[j] -= q * row[k]

        def row_swap(i, k):
            a[i], a[k] = a[k], a[i]
            u[i], u[k] = u[k], u[i]

        def col_swap(j, k):
            for row in a:
                row[j], row[k] = row[k], row[j]
            for row in v:
                row[j], row[k] = row[k], row[j]

        def pivot_position(t):
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            return best

        t = 0
        while True:
            pos = pivot_position(t)
            if pos is None:
                break
            row_swap(t, pos[0])
            col_swap(t, pos[1])
            while True:
                # clear column t, restarting if a smaller remainder shows up
                moved = False
                for i in range(t + 1, m):
                    if a[i][t] != 0:
                        q = a[i][t] // a[t][t]
                        row_sub(i, t, q)
                        if a[i][t] != 0:
                            row_swap(t, i)
                            moved = True
                if moved:
                    continue
                for j in range(t + 1, n):
                    if a[t][j] != 0:
                        q = a[t][j] // a[t][t]
                        col_sub(j, t, q)
                        if a[t][j] != 0:
                            col_swap(t, j)
                            moved = True
                if not moved:
                    break
            # divisibility: the pivot must divide everything to the south-east
            fixed = True
            d = a[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % d != 0:
                        # fold row i into row t and redo this pivot
                        row_sub(t, i, -1)
                        fixed = False
                        break
                if not fixed:
                    break
            if not fixed:
                continue
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            t += 1
            if t == min(m, n):
                break
        D = [a[i][i] for i in range(min(m, n)) if a[i][i] != 0]
        ringz = self.ring
        return D, Matrix(ringz, u, nrows=m, ncols=m), Matrix(ringz, v, nrows=n, ncols=n)

    # solving

    def solve(self, b):
        """One solution x of self * x = b, or None when none exists.

        Over Q and Fp this is elimination; over Z it goes through the Smith
        normal form; over Z/p^N it lifts to an integer system solved at
        modulus p^N, where a diagonal equation d*y = c is solvable exactly
        when p^min(val(d), N) divides c.
        """
        R = self.ring
        if len(b) != self.nrows:
            raise ValueError("length mismatch")
        b = [R.of(x) for x in b]
        if R.is_field:
            return self._solve_field(b)
        if R.kind == Z:
            return self._solve_integer(b)
        return self._solve_truncated(b)

    def _solve_field(self, b):
        R = self.ring
        m, n = self.nrows, self.ncols
        aug = Matrix(R, [self.rows[i] + [b[i]] for i in range(m)],
                     nrows=m, ncols=n + 1)
        rank, pivots, _, rref = aug.row_reduce()
        if n in pivots:
            return None
        x = [R.zero] * n
        for i, col in enumerate(pivots):
            x[col] = rref[i][n]
        return x

    def _solve_integer(self, b):
        R = self.ring
        D, U, V = self.smith_normal_form()
        c = U.apply_vector(b)
        n = self.ncols
        y = [0] * n
        for i in range(self.nrows):
            if i < len(D):
                q, r = divmod(c[i], D[i])
                if r != 0:
                    return None
                y[i] = q
            elif c[i] != 0:
                return None
        return V.apply_vector(y)

    def _solve_truncated(self, b):
        R = self.ring
        p, N = R.p, R.precision
        lifted = Matrix(Ring.integers(), self.rows, nrows=self.nrows, ncols=self.ncols)
        D, U, V = lifted.smith_normal_form()
        c = U.apply_vector([int(x) for x in b])
        modulus = p ** N
        n = self.ncols
        y = [0] * n
        for i in range(self.nrows):
            ci = c[i] % modulus
            if i < len(D):
                g = p ** min(p_adic_valuation(D[i], p) if D[i] else N, N)
                if ci % g != 0:
                    return None
                rest = modulus // g
                if rest == 1:
                    y[i] = 0
                else:
                    unit = (D[i] // g) % rest
                    y[i] = (ci // g) * pow(unit, -1, rest) % rest
            elif ci != 0:
                return None
        x = V.apply_vector(y)
        return [R.of(xi) for xi in x]


class SparseEliminator:
    """Incremental Gaussian elimination over a field, on sparse vectors.

    Vectors are dicts mapping hashable keys to nonzero field values.  Keys
    are ordered by the key_sort function (largest pivot first).  Supports
    rank queries, membership of a vector in the accumulated span, and
    optional tracking of the expressing combination.
    """

    def __init__(self, ring, key_order=None, track=False):
        if not ring.is_field:
            raise ValueError("SparseEliminator needs a field")
        self.ring = ring
        self.key_order = key_order or (lambda k: k)
        self.track = track
        self.pivots = {}
        self.combos = {}
        self.count = 0

    def _leading(self, vec):
        return max(vec, key=self.key_order)

    def _reduce(self, vec, combo=None):
        R = self.ring
        vec = dict(vec)
        while vec:
            lead = self._leading(vec)
            if lead not in self.pivots:
                return vec, lead, combo
            f = vec[lead]
            piv = self.pivots[lead]
            for k, v in piv.items():
                nv = R.sub(vec.get(k, R.zero), R.mul(f, v))
                if nv == 0:
                    vec.pop(k, None)
                else:
                    vec[k] = nv
            if combo is not None:
                for idx, v in self.combos[lead].items():
                    nv = R.sub(combo.get(idx, R.zero), R.mul(f, v))
                    if nv == 0:
                        combo.pop(idx, None)
                    else:
                        combo[idx] = nv
        return vec, None, combo

    def insert(self, vec, tag=None):
        """Insert a vector; returns True when it enlarged the span."""
        R = self.ring
        vec = {k: R.of(v) for k, v in vec.items() if v != 0}
        combo = {tag: R.one} if self.track else None
        vec, lead, combo = self._reduce(vec, combo)
        if not vec:
            return False
        inv = R.inverse(vec[lead])
        self.pivots[lead] = {k: R.mul(inv, v) for k, v in vec.items()}
        if self.track:
            self.combos[lead] = {k: R.mul(inv, v) for k, v in combo.items()}
        self.count += 1
        return True

    def contains(self, vec):
        vec = {k: self.ring.of(v) for k, v in vec.items() if v != 0}
        vec, _, _ = self._reduce(vec)
        return not vec

    def express(self, vec):
        """Combination of inserted tags yielding vec, or None if outside the span."""
        if not self.track:
            raise ValueError("eliminator built without combination tracking")
        R = self.ring
        vec = {k: R.of(v) for k, v in vec.items() if v != 0}
        combo = {}
        vec, _, combo = self._reduce(vec, combo)
        if vec:
            return None
        return {k: R.neg(v) for k, v in combo.items()}

    @property
    def rank(self):
        return self.count
