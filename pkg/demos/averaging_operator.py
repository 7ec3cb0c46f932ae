"""
The averaging operator and its product rule
===========================================

"""

from mixshuffle import FreeAbelian, RBElement, Ring, Unitarized, Word, \
    verify_rb_structure

# the operator algebra needs an identity letter to record applications
m = Unitarized(FreeAbelian(["x"]))
Z = Ring.integers()
x = m.parse("x")

# each basis term is a head letter times a word tail; the operator
# prepends the identity letter, so nesting depth is visible in the word
a = RBElement.from_parts(Z, 1, m, x, Word(()))
print("a        =", a.render())
print("P(a)     =", a.operator_p().render())
print("P(P(a))  =", a.operator_p().operator_p().render())
print()

# the defining identity: P(a) P(b) = P(a P(b)) + P(P(a) b) + w P(a b)
b = RBElement.from_parts(Z, 1, m, x, Word((x,)), 2)
pa, pb = a.operator_p(), b.operator_p()
left = pa * pb
right = ((a * pb).operator_p() + (pa * b).operator_p()
         + (a * b).operator_p().scale(1))
print("P(a)P(b) =", left.render())
print("identity holds:", left == right)
print()

# the exponent-capped monomials in x, P(x), P(x P(x)), ... fill every
# graded piece with no relations over the rationals
report = verify_rb_structure("rbl", weight=1, degree_bound=3,
                             length_bound=3)
print(report.render())
