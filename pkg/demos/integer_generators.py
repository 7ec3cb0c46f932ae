"""
Integer coefficients: where Lyndon monomials stop spanning
==========================================================

"""

from mixshuffle import FreeAbelian, PresentedAlgebra, Ring, TensorPoly, \
    check_spanning, compute_cokernel_basis, enumerate_lyndon, word_symbol

Z = Ring.integers()
f = FreeAbelian(["x"])

# over the integers the Lyndon monomials are independent but do NOT span:
# already in degree 2, x*x = 2 x(x)x + x^2 only reaches 2 x(x)x
gens = [word_symbol(Z, 1, f, w) for w in enumerate_lyndon(f, 6)]
algebra = PresentedAlgebra(Z, 1, f, gens, TensorPoly.unit(Z, 1, f))
for d in (1, 2):
    cell = check_spanning(algebra, d)
    print("degree %d spanning: %s%s" % (
        d, "ok" if cell.ok else "fails",
        "" if cell.ok else "  (" + cell.note + ")"))
print()

# the fix is degreewise: quotient by products of lower degrees and pick
# word representatives whose classes are a basis of the quotient
for d in range(1, 7):
    info, basis = compute_cokernel_basis(f, 1, d)
    words = ", ".join(p.render(True) for p in basis)
    print("degree %d: cokernel free of rank %d, generators %s" % (
        d, info["coker_rank"], words))
print()

# the invariant factors certify freeness: no divisor exceeds 1
info, _ = compute_cokernel_basis(f, 1, 6)
print("degree 6 divisors:", info["divisors"])
print("complement determinant:", info["complement_det"])
