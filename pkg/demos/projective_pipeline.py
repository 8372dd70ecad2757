"""Cut a pentagon orbifold into one orbifold projective space per vertex and
check the resulting certificate from scratch."""

from torocob import CharFunction, cobordism_to_projective_spaces, verify_certificate
from torocob.corners import polygon


def main() -> None:
    base = polygon(5)
    f = CharFunction(2, {"E0": (1, 0), "E1": (0, 1), "E2": (-1, 2), "E3": (-1, -1), "E4": (1, -3)})
    cert = cobordism_to_projective_spaces(base, f)
    print("vectors on the unmarked facets:", [cert.rs[g] for g in cert.marked.remaining])
    for piece in cert.boundary:
        groups = [s.local_group.invariant_factors for s in piece.strata if not s.local_group.is_trivial]
        print(f"  {piece.family_tag}: {piece.fixed_points} fixed points, singular groups {groups}")
    print("relation:", len(cert.relation.lhs), "=", len(cert.relation.rhs), "summands")
    print("verifier:", "valid" if verify_certificate(cert).valid else verify_certificate(cert))


if __name__ == "__main__":
    main()
