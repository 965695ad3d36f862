"""Oscillator representations: exact fermionic, truncated bosonic.

Builds the fermionic rep of B1 (matrices over the exact scalar field),
checks the bracket homomorphism, and shows the quadratic Casimir acting
as 3/4 times the identity. Then the bosonic rep of C1 at a finite
cutoff, where the homomorphism holds to float precision on the columns
the truncation protects.

    python3 demos/oscillator_reps.py
"""

from drinfeld_forge import (Scalar, bosonic_rep, build_series, casimir_matrix,
                            casimir_quadratic, fermionic_rep, parse_label,
                            verify_casimir_commutes, verify_rep_homomorphism)

SEP = "-" * 60


def print_exact(mat, indent="    "):
    for row in range(mat.dim):
        cells = [str(mat.entries.get((row, col), Scalar(0)))
                 for col in range(mat.dim)]
        print(indent + "[" + ", ".join(cells) + "]")


def main() -> None:
    alg = build_series("B", 1)
    rep = fermionic_rep(alg)
    print(f"fermionic rep of B1: "
          f"{rep.space_dim} x {rep.space_dim} exact matrices")
    for label in ("H1", "U1", "V1"):
        gid = parse_label(label)
        print(f"  rho({label}):")
        print_exact(rep.matrix(gid))
    print(" ", verify_rep_homomorphism(alg, rep).summary())

    cas = casimir_quadratic(alg)
    print("  quadratic Casimir in this rep:")
    print_exact(casimir_matrix(rep, cas))
    print(" ", verify_casimir_commutes(alg, rep, cas).summary())
    print(SEP)

    alg = build_series("C", 1)
    rep = bosonic_rep(alg, cutoff=6)
    print(f"bosonic rep of C1 at cutoff 6: {rep.space_dim} states")
    report = verify_rep_homomorphism(alg, rep)
    print(" ", report.summary())
    print(f"  worst float residual on protected columns: "
          f"{report.details['max_abs_error']:.3e}")


if __name__ == "__main__":
    main()
