"""The rank-6 lattice, its endomorphism X, and the units of Z[X] acting on it."""

from icosamono import a5
from icosamono.lattice import identity, mat_mul

lat = a5.eo_lattice()
print("group elements:", len(lat.elements))
print("X(e) =", lat.apply_x(lat.basis_vector("e")))

rep = a5.verify_endo_ring()
print("commutant rank:", rep.commutant_rank, "spanned by Id and X:", rep.commutant_is_span_id_x)

# a*X + b is invertible exactly when b^2 - 5a^2 = +-1
for a, b in rep.units_in_box:
    print(f"  unit {b:+d} {a:+d}*X, det = {b * b - 5 * a * a}")
print("(X+2)(X-2) == Id:", mat_mul(a5.endo(1, 2), a5.endo(1, -2)) == identity(6))

# only +-1 also preserve the inner product
print("isometric units:", rep.isometric_units)
print("orbit of e:", len(a5.orbit(lat.basis_vector("e"))))
