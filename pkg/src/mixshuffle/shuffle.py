"""Mixable shuffle products on tensor words.

A TensorPoly is a finite linear combination of tensor words with
coefficients in an exact ring, multiplied by the mixable shuffle with
mixing weight lambda: interleave two words in every order-preserving
way, optionally merging a pair of slots into the semigroup product of
their letters, each merged slot contributing one factor of lambda.
Weight zero is the plain shuffle.

Two independent implementations of the product live here.  The working
one recurses on first letters (three branches: take from the left word,
take from the right word, merge both heads).  The oracle enumerates all
pairs of order-preserving slot injections whose images cover the result
word and is used only to cross-check the recursion.

Powers are not computed by repeated binary products.  A k-fold shuffle
collapses to a walk over tuples of consumed-prefix lengths, and factors
that are equal words at equal positions are interchangeable, so states
are canonicalized to multisets and branches weighted by binomials.
This keeps p-th powers of small polynomials tractable for p = 5.
"""

import itertools
import math

from .words import Word, empty_word


def _accumulate(acc, ring, letters, coeff):
    cur = acc.get(letters)
    if cur is None:
        acc[letters] = coeff
    else:
        s = ring.add(cur, coeff)
        if ring.is_zero(s):
            del acc[letters]
        else:
            acc[letters] = s


def _binary_shuffle(u, v, ring, lam, memo):
    """Mixable shuffle of letter tuples, as a dict letters -> coeff."""
    key = (u, v)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not u:
        res = {v: ring.one}
    elif not v:
        res = {u: ring.one}
    else:
        a, ru = u[0], u[1:]
        b, rv = v[0], v[1:]
        acc = {}
        for tail, c in _binary_shuffle(ru, v, ring, lam, memo).items():
            _accumulate(acc, ring, (a,) + tail, c)
        for tail, c in _binary_shuffle(u, rv, ring, lam, memo).items():
            _accumulate(acc, ring, (b,) + tail, c)
        if not ring.is_zero(lam):
            ab = a * b
            if ab is None:
                raise ValueError(
                    "letters %r and %r do not multiply; only weight zero "
                    "works over a bare ordered set" % (a, b))
            for tail, c in _binary_shuffle(ru, rv, ring, lam, memo).items():
                _accumulate(acc, ring, (ab,) + tail, ring.mul(lam, c))
        res = acc
    memo[key] = res
    return res


def shuffle_letters_oracle(u, v, ring, lam):
    """Same product by brute enumeration of slot injections.

    For each result length, place the letters of u and v on slots by
    order-preserving injections covering every slot; doubly covered
    slots hold the product of the two letters and cost one lambda each.
    """
    m, n = len(u), len(v)
    acc = {}
    lam_zero = ring.is_zero(lam)
    for ell in range(max(m, n), m + n + 1):
        merged = m + n - ell
        if merged > 0 and lam_zero:
            continue
        weight = ring.pow_(lam, merged) if merged else ring.one
        for pos_u in itertools.combinations(range(ell), m):
            su = set(pos_u)
            for pos_v in itertools.combinations(range(ell), n):
                sv = set(pos_v)
                if len(su | sv) != ell:
                    continue
                letters = []
                iu = {pos: u[i] for i, pos in enumerate(pos_u)}
                iv = {pos: v[i] for i, pos in enumerate(pos_v)}
                for slot in range(ell):
                    if slot in iu and slot in iv:
                        prod = iu[slot] * iv[slot]
                        if prod is None:
                            raise ValueError(
                                "letters do not multiply; only weight zero "
                                "works over a bare ordered set")
                        letters.append(prod)
                    elif slot in iu:
                        letters.append(iu[slot])
                    else:
                        letters.append(iv[slot])
                _accumulate(acc, ring, tuple(letters), weight)
    return acc


def _multi_shuffle(letter_tuples, ring, lam, memo):
    """Shuffle of k words at once as dict letters -> coeff.

    States are sorted multisets of (remaining word, consumed length);
    factors at the same word and position are interchangeable, so a
    branch taking j of the c such factors carries a binomial weight.
    Keying states by the words themselves keeps one memo valid across
    every factor multiset of the same power expansion.  Tails accumulate
    as tuples of raw letter keys rather than elements: the long tails of
    high powers get hashed constantly, and raw keys keep that in C.  The
    key-to-letter registry lives in the memo's None slot so memoized
    states stay decodable across calls sharing the memo.
    """
    state = tuple(sorted((lt, 0) for lt in letter_tuples if len(lt) > 0))
    lam_zero = ring.is_zero(lam)
    reg = memo.setdefault(None, {})

    def walk(st):
        hit = memo.get(st)
        if hit is not None:
            return hit
        if not st:
            return {(): ring.one}
        classes = []
        for key, group in itertools.groupby(st):
            classes.append((key, len(tuple(group))))
        acc = {}
        ranges = [range(cnt + 1) for _, cnt in classes]
        for take in itertools.product(*ranges):
            total = sum(take)
            if total == 0:
                continue
            if lam_zero and total != 1:
                continue
            letter = None
            choose = 1
            for (cls, cnt), j in zip(classes, take):
                if j == 0:
                    continue
                choose *= math.comb(cnt, j)
                head = cls[0][cls[1]]
                for _ in range(j):
                    letter = head if letter is None else letter * head
                    if letter is None:
                        raise ValueError(
                            "letters do not multiply; only weight zero "
                            "works over a bare ordered set")
            lk = letter.key
            reg.setdefault(lk, letter)
            weight = ring.of(choose)
            if total > 1:
                weight = ring.mul(weight, ring.pow_(lam, total - 1))
            nxt = []
            for (cls, cnt), j in zip(classes, take):
                word, pos = cls
                if j and pos + 1 < len(word):
                    nxt.extend([(word, pos + 1)] * j)
                nxt.extend([cls] * (cnt - j))
            sub = walk(tuple(sorted(nxt)))
            for tail, c in sub.items():
                _accumulate(acc, ring, (lk,) + tail,
                            ring.mul(weight, c))
        memo[st] = acc
        return acc

    out = walk(state)
    return {tuple(reg[k] for k in kt): c for kt, c in out.items()}


class TensorPoly:
    """Linear combination of tensor words under the mixable shuffle."""

    __slots__ = ("ring", "lam", "semigroup", "terms")

    def __init__(self, ring, lam, semigroup, terms=None):
        self.ring = ring
        self.lam = ring.of(lam)
        self.semigroup = semigroup
        clean = {}
        if terms:
            for word, coeff in terms.items():
                c = ring.of(coeff)
                if not ring.is_zero(c):
                    clean[word] = c
        self.terms = clean

    @classmethod
    def zero(cls, ring, lam, semigroup):
        return cls(ring, lam, semigroup, {})

    @classmethod
    def unit(cls, ring, lam, semigroup):
        return cls(ring, lam, semigroup, {empty_word(): ring.one})

    @classmethod
    def from_word(cls, ring, lam, semigroup, word, coeff=1):
        return cls(ring, lam, semigroup, {word: ring.of(coeff)})

    def _check(self, other):
        if (self.ring != other.ring or self.lam != other.lam
                or self.semigroup != other.semigroup):
            raise ValueError("incompatible tensor polynomials")

    def is_zero(self):
        return not self.terms

    def coefficient(self, word):
        return self.terms.get(word, self.ring.zero)

    def support(self):
        return sorted(self.terms, key=lambda w: w.pro_length_key)

    def leading_term(self):
        """(word, coeff) at the pro-length-largest word, or None."""
        if not self.terms:
            return None
        word = max(self.terms, key=lambda w: w.pro_length_key)
        return word, self.terms[word]

    def max_degree(self):
        return max((w.degree for w in self.terms), default=0)

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        R = self.ring
        for w, c in other.terms.items():
            _accumulate(acc, R, w, c)
        return TensorPoly(R, self.lam, self.semigroup, acc)

    def __neg__(self):
        R = self.ring
        return TensorPoly(R, self.lam, self.semigroup,
                          {w: R.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        R = self.ring
        cv = R.of(c)
        return TensorPoly(R, self.lam, self.semigroup,
                          {w: R.mul(cv, x) for w, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorPoly):
            return self.scale(other)
        return self.mul_shared(other, {})

    def mul_shared(self, other, memo):
        """Product reusing a caller-held shuffle memo across many calls."""
        self._check(other)
        R = self.ring
        acc = {}
        for wu, cu in self.terms.items():
            for wv, cv in other.terms.items():
                c = R.mul(cu, cv)
                prods = _binary_shuffle(wu.letters, wv.letters,
                                        R, self.lam, memo)
                for letters, k in prods.items():
                    _accumulate(acc, R, letters, R.mul(c, k))
        return TensorPoly(R, self.lam, self.semigroup,
                          {Word(l): c for l, c in acc.items()})

    __rmul__ = scale

    def shuffle_power(self, k):
        """k-th power, expanded multinomially into joint shuffles."""
        R = self.ring
        if k == 0:
            return TensorPoly.unit(R, self.lam, self.semigroup)
        items = sorted(self.terms.items(),
                       key=lambda it: it[0].pro_length_key)
        acc = {}
        memo = {}
        t = len(items)
        if t == 0:
            return TensorPoly.zero(R, self.lam, self.semigroup)
        for alpha in _compositions(k, t):
            coeff = R.of(_multinomial(k, alpha))
            factors = []
            for (word, c), e in zip(items, alpha):
                if e:
                    coeff = R.mul(coeff, R.pow_(c, e))
                    factors.extend([word.letters] * e)
            prods = _multi_shuffle(factors, R, self.lam, memo)
            for letters, c in prods.items():
                _accumulate(acc, R, letters, R.mul(coeff, c))
        return TensorPoly(R, self.lam, self.semigroup,
                          {Word(l): c for l, c in acc.items()})

    def __eq__(self, other):
        return (isinstance(other, TensorPoly) and self.ring == other.ring
                and self.lam == other.lam
                and self.semigroup == other.semigroup
                and self.terms == other.terms)

    def render(self, ascii_mode=False):
        if not self.terms:
            return "0"
        R = self.ring
        dot = "*" if ascii_mode else "·"
        parts = []
        for w in sorted(self.terms, key=lambda x: x.pro_length_key,
                        reverse=True):
            c = R.format(self.terms[w])
            body = w.display(ascii_mode)
            if c == "1":
                parts.append(body)
            elif c == "-1":
                parts.append("-" + body)
            else:
                parts.append(f"{c}{dot}{body}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return self.render(ascii_mode=True)

    def to_json(self):
        # terms sorted descending, leading term first
        return {
            "ring": self.ring.to_json(),
            "lambda": self.ring.format(self.lam),
            "semigroup": self.semigroup.to_json(),
            "terms": [
                {"word": [l.name for l in w.letters],
                 "coeff": self.ring.format(self.terms[w])}
                for w in reversed(self.support())
            ],
        }

    @classmethod
    def from_json(cls, data):
        from .rings import Ring
        from .semigroups import OrderedSemigroup
        ring = Ring.from_json(data["ring"])
        sg = OrderedSemigroup.from_json(data["semigroup"])
        lam = ring.parse(data["lambda"])
        terms = {}
        for entry in data["terms"]:
            word = Word(tuple(sg.parse(t) for t in entry["word"]))
            terms[word] = ring.parse(entry["coeff"])
        return cls(ring, lam, sg, terms)


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _multinomial(k, alpha):
    out = 1
    rem = k
    for e in alpha:
        out *= math.comb(rem, e)
        rem -= e
    return out


def word_poly(ring, lam, semigroup, letters, coeff=1):
    """Convenience: the polynomial with a single given word."""
    return TensorPoly.from_word(ring, lam, semigroup, Word(letters), coeff)


def shuffle_oracle(x, y):
    """Product of two polynomials computed by the enumeration oracle."""
    x._check(y)
    R = x.ring
    acc = {}
    for wu, cu in x.terms.items():
        for wv, cv in y.terms.items():
            c = R.mul(cu, cv)
            prods = shuffle_letters_oracle(wu.letters, wv.letters, R, x.lam)
            for letters, k in prods.items():
                _accumulate(acc, R, letters, R.mul(c, k))
    return TensorPoly(R, x.lam, x.semigroup,
                      {Word(l): c for l, c in acc.items()})


def length_rescale(x, c):
    """Multiply each word by c to the power of its length.

    With c invertible this is the map that identifies the product at
    weight lambda with the product at weight c*lambda.
    """
    R = x.ring
    cv = R.of(c)
    terms = {w: R.mul(R.pow_(cv, w.length), coeff)
             for w, coeff in x.terms.items()}
    return TensorPoly(R, x.lam, x.semigroup, terms)


def with_weight(x, lam):
    """The same combination of words, re-tagged with another weight."""
    return TensorPoly(x.ring, lam, x.semigroup, dict(x.terms))


class GradedComponent:
    """The words of one degree (within a length bound), sorted ascending.

    Over any coefficient ring these words are a basis of the degree-n
    slice of the word space, so dimension is just their count.
    """

    __slots__ = ("degree", "max_length", "basis", "dimension")

    def __init__(self, degree, max_length, basis):
        self.degree = degree
        self.max_length = max_length
        self.basis = tuple(basis)
        self.dimension = len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        bound = "" if self.max_length is None else ", len<=%d" % self.max_length
        return "<GradedComponent deg %d%s, dim %d>" % (
            self.degree, bound, self.dimension)


def graded_basis(semigroup, degree, max_length=None):
    """All words of exactly the given degree, ascending pro-length order.

    Alphabets with an identity letter have infinitely many words per
    degree and need the length bound.
    """
    from .words import enumerate_words
    words = [w for w in enumerate_words(semigroup, degree, max_length)
             if w.degree == degree]
    if degree == 0:
        # enumerate_words lists nonempty words only
        words = [empty_word()] + words
    return GradedComponent(degree, max_length, words)


def eettl_representative(ring, lam, semigroup, word, p):
    """The combination w - w^(p) with the letterwise p-th power.

    Only words that are tensor powers u^(p^k) of a Lyndon word u and are
    moved by the letterwise power map qualify; these differences generate
    the nilpotent factor in the split structure over F_p.
    """
    from .words import cfl_factorize, componentwise_p_power, is_lyndon
    factors = cfl_factorize(word)
    if len(factors) != 1:
        raise ValueError("not a tensor power of a single Lyndon word")
    base, mult = factors[0]
    k = mult
    while k % p == 0:
        k //= p
    if k != 1:
        raise ValueError("tensor multiplicity %d is not a power of %d"
                         % (mult, p))
    moved = componentwise_p_power(word, p)
    if moved == word:
        raise ValueError("word is fixed by the letterwise power map")
    poly = TensorPoly.from_word(ring, lam, semigroup, word)
    return poly - TensorPoly.from_word(ring, lam, semigroup, moved)
