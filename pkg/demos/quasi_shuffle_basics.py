"""
Words, weights, and the mixable shuffle product
===============================================

"""

from fractions import Fraction

from mixshuffle import FreeAbelian, Ring, TensorPoly, Word, cfl_factorize, \
    word_poly

# letters live in a commutative monoid; words are tensor strings over it
f = FreeAbelian(["x", "y"])
Q = Ring.rationals()


def word(*names):
    return Word(tuple(f.parse(n) for n in names))


# weight 0 is the classical shuffle: letters interleave, never merge
x = word_poly(Q, 0, f, [f.parse("x")])
y = word_poly(Q, 0, f, [f.parse("y")])
print("x * y  at weight 0 :", (x * y).render())

# nonzero weight adds merge terms, scaled by the weight
for lam in (1, -1, Fraction(5, 3)):
    xl = word_poly(Q, lam, f, [f.parse("x")])
    yl = word_poly(Q, lam, f, [f.parse("y")])
    print("x * y  at weight %s :" % lam, (xl * yl).render())

# squares pick up the letter product x*x = x^2
x1 = word_poly(Q, 1, f, [f.parse("x")])
print("x * x  at weight 1 :", (x1 * x1).render())

# every word factors into a weakly decreasing product of Lyndon words
w = word("x", "y", "x", "y", "x")
print("factors of", w.display(), ":",
      ", ".join("%s^%d" % (u.display(), m) for u, m in cfl_factorize(w)))

# the product of those Lyndon powers leads back to the original word
poly = TensorPoly.unit(Q, 1, f)
for u, m in cfl_factorize(w):
    poly = poly * TensorPoly.from_word(Q, 1, f, u).shuffle_power(m)
lead, coeff = poly.leading_term()
print("leading term of the factor product:", coeff, "*", lead.display())
