"""A disc orbifold has no fixed points, so it bounds; the certificate also
names the lens space over the boundary circle."""

from torocob import CharFunction, null_cobordism, verify_certificate
from torocob.corners import build_surface_with_corners
from torocob.families import lens_from_interval


def main() -> None:
    disc = build_surface_with_corners(0, [0])
    cert = null_cobordism(disc, CharFunction(2, {"C": (2, 3)}))
    for piece in cert.lens_pieces:
        print(f"circle {piece.circle}: u={piece.u} lambda0={piece.v} -> L({piece.lens.p}, {piece.lens.q})")
    print("verifier:", verify_certificate(cert).valid)
    for p, q in [(5, 2), (7, 3)]:
        print(f"interval (1,0),({-q},{p}) ->", lens_from_interval((1, 0), (-q, p)))


if __name__ == "__main__":
    main()
