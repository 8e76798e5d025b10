"""The element E and the kernel of the tensor representation."""
import time

from brauerkit.algebra import ideal_span, ideal_membership, AlgebraElement, element
from brauerkit.diagram import generator_e
from brauerkit.relations import kernel_element, kernel_generator, KernelCatalog, quasi_idempotent_constant, is_plus_minus_one
from brauerkit.tensorrep import kernel_nu, nu_matrix
from brauerkit.exactalg import subspace_equal

# %% n = 1: E is 1 - e_1
print(kernel_element(1, 1, 2))

# %% n = 2, r = 3: six terms, all coefficients +-1
E = kernel_generator(2, 3)
for d, c in E.sorted_terms():
    print(f"{str(c):>3}  {d}")
print("integral:", is_plus_minus_one(E))
print("E^2 == 2E:", E * E == E.scale(quasi_idempotent_constant(1, 2)))

# every arc generator kills it from both sides
for j in (1, 2):
    ej = element(generator_e(j, j + 1, 3), E.ring)
    print(f"e_{j}E = 0: {ej * E == 0},  Ee_{j} = 0: {E * ej == 0}")

# %% it acts as zero on (K^2)^(x)3
print("nu(E) = 0:", nu_matrix(E, 2).is_zero())

# %% and generates the whole kernel
for n, r in [(2, 3), (2, 4), (3, 4)]:
    t = time.perf_counter()
    ideal = ideal_span([kernel_generator(n, r)])
    ker = kernel_nu(n, r)
    print(f"n={n} r={r}: dim <E> = {ideal.dim}, dim ker = {ker.dim}, equal: {subspace_equal(ideal, ker)}"
          f"  ({time.perf_counter() - t:.2f}s)")

# %% the smaller E_i sit inside the ideal of the larger ones
cat = KernelCatalog(3, 4)
print([ideal_membership(cat.E_i(i - 1), cat.E_i(i)) for i in (1, 2)])
print("1 in <E>:", ideal_membership(AlgebraElement.one(3, E.ring), E))
