"""
Verifying polynomial structure degree by degree
===============================================

"""

from mixshuffle import ElementaryPGroup, FreeAbelian, \
    verify_fp_nonzero, verify_radford_hoffman, verify_zp

f = FreeAbelian(["x"])

# over the rationals, Lyndon monomials are a basis in every degree;
# at weight zero the grading is the classical one
report = verify_radford_hoffman(f, 0, 6)
print(report.render())
print()

# a nonzero weight changes nothing over a field of characteristic zero,
# because rescaling word lengths moves any weight to any other
report = verify_radford_hoffman(f, 1, 6)
print("weight 1 verdict:", "PASS" if report.passed else "FAIL")
print()

# mod p the story depends on the alphabet; for a group of exponent p the
# generators split into a moved family and its power orbit
report = verify_fp_nonzero(ElementaryPGroup(2, 1), 2, 1, 5, 5)
print(report.render())
print()

# over Z/p^N the repetition-pruned Lyndon families index the basis, and
# the verdict is checked again at higher precision before it is trusted
report = verify_zp(f, 2, 6, 1, 5)
print(report.render())
