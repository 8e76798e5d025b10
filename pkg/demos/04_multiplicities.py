"""Cell modules, their radicals, and multiplicities in (K^n)^(x)r."""
from brauerkit.cellular import (
    Partition, lambda_set, lambda0_set, cell_module, radical, ideal_image, multiplicity_report,
)
from brauerkit.tensorrep import rank_nu

n, r = 2, 4
print("labels:", [str(l) for l in lambda_set(r)])
print("column-restricted:", [str(l) for l in lambda0_set(n, r)])

# %% a small module in full
M = cell_module(Partition((2,)), n, r)
for k, (d, T) in enumerate(M.basis):
    print(k, d, T)
G = M.gram()
for row in G.rows:
    print(" ".join(f"{str(x):>3}" for x in row))

# %% radical of the form vs the submodule generated by E
for lam in lambda_set(r):
    print(f"{str(lam):>10}  dimW={cell_module(lam, n, r).dim:2d}  rad={radical(lam, n, r).dim}"
          f"  <E>W={ideal_image(lam, n, r).dim}")

# %% multiplicities; the squares add up to the rank of nu
for n, r in [(2, 4), (2, 5), (3, 5)]:
    rep = multiplicity_report(n, r)
    print(rep.to_csv(), "sum of squares", rep.checksum, "rank", rank_nu(n, r))
