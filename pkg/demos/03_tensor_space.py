"""Diagrams as operators on tensor space, and the two routes to the rank."""
from brauerkit.algebra import element
from brauerkit.diagram import generator_e, generator_s, all_diagrams
from brauerkit.exactalg import QQ
from brauerkit.tensorrep import (
    nu_diagram, tau_vector, operator_from_tensor, check_fft_commute, rank_nu, rank_tau, check_equivariance,
)

n = 2
# %% e_1 becomes the contraction, s_1 the flip
print(nu_diagram(generator_e(1, 2, 2), n).to_json())
print(nu_diagram(generator_s(1, 2), n).to_json())

# %% a diagram as an invariant tensor of rank 2r, then back to an operator
d = all_diagrams(3)[4]
t = tau_vector(element(d, QQ(n)), n)
print(d, "->", len(t), "nonzero entries")
print(operator_from_tensor(t, n, 3) == nu_diagram(d, n))
print([check_fft_commute(n, r) for r in (2, 3, 4)])

# %% signed permutations commute with every nu(D)
print(check_equivariance(2, 3), check_equivariance(3, 3))

# %% rank of nu from the operators and from the Gram matrix of the tensors
for n, r in [(2, 3), (2, 4), (3, 3), (3, 4), (4, 4)]:
    print(n, r, rank_nu(n, r), rank_tau(n, r))
