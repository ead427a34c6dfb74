"""Norms of truncated sums of conjugated generators.

Sum_i lambda(x0^i x1 x0^-i), cut down to a Cayley ball and to one sector,
is a sparse 0/1 matrix. Power iteration gives its largest singular value.
These are lower bounds for the infinite operators, so they can probe but
never prove non-amenability. This demo uses a small ball; the CLI command
`thompsonf spectra` runs the full grid.
"""

from thompsonf import ExperimentConfig, run_experiment

report = run_experiment(ExperimentConfig(n_max=5, radii=[6, 8]))
print(f"{'R':>3} {'n':>2}  " + "  ".join(f"{s:>11}" for s in
      ("F1", "F2", "F3", "F4", "F5", "PComplement", "Full")))
for R in (6, 8):
    for n in range(1, 6):
        norms = [report.lookup(R, n, s)["norm"] for s in
                 ("F1", "F2", "F3", "F4", "F5", "PComplement", "Full")]
        print(f"{R:>3} {n:>2}  " + "  ".join(f"{v:11.5f}" for v in norms))

# the proven sectors stay within sqrt(n); Full/n is the averaged norm
print("\nFull/n at R=8:", [report.lookup(8, n, "Full")["full_lower_bound"] for n in range(1, 6)])
print("F2 averages:", report.header["p2_average_profile"])
