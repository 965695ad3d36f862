"""Build one algebra of every series and run the core verifiers.

    python3 demos/build_and_verify.py
"""

from drinfeld_forge import (build_series, canonical_triple, verify_closure,
                            verify_compatibility, verify_jacobi,
                            verify_pairing, verify_reconstruction,
                            verify_self_duality)

GRID = (("A", 2), ("B", 2), ("C", 2), ("D", 2))


def main() -> None:
    for series, rank in GRID:
        alg = build_series(series, rank)
        jac = verify_jacobi(alg)
        print(f"{series}{rank}: dim {alg.dim}, "
              f"jacobi {'ok' if jac.passed else 'FAIL'} "
              f"({jac.checked} triples)")

        triple = canonical_triple(series, rank)
        for check in (verify_closure, verify_pairing, verify_reconstruction,
                      verify_compatibility, verify_self_duality):
            report = check(triple)
            status = "ok" if report.passed else "FAIL"
            print(f"  {report.check}: {status}")


if __name__ == "__main__":
    main()
