"""Cut every vertex of the 3-cube and print the cobordism relation among the
resulting boundary pieces."""

from torocob import verify_certificate, vertex_cut_certificate
from torocob.corners import cube


def main() -> None:
    cert = vertex_cut_certificate(cube(3))
    print(len(cert.boundary), "boundary pieces:")
    for piece in cert.boundary:
        print(f"  {piece.family_tag}  smooth={piece.smooth}")
    print("relation sides:", len(cert.relation.lhs), "|", len(cert.relation.rhs))
    print("verifier:", verify_certificate(cert).valid)


if __name__ == "__main__":
    main()
