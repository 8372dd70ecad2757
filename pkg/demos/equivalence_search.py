"""Relabel and transform a hexagon orbifold, recover the witness, then show
that a one-entry perturbation is refuted."""

from torocob import CharFunction
from torocob.corners import polygon
from torocob.equivalence import check_witness, data_equivalent, invariant_screen
from torocob.families import make_orbifold

VECS = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
DELTA = ((2, 1), (1, 1))


def apply(m, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def main() -> None:
    base = polygon(6)
    d1 = make_orbifold(base, CharFunction(2, {f"E{i}": v for i, v in enumerate(VECS)}))
    # rotate the labels by two and negate every other vector
    moved = {f"E{(i + 2) % 6}": tuple((-1) ** i * x for x in apply(DELTA, v)) for i, v in enumerate(VECS)}
    d2 = make_orbifold(base, CharFunction(2, moved))
    w = data_equivalent(d1, d2)
    print("psi:", w.psi)
    print("delta:", w.delta)
    print("witness checks:", check_witness(d1, d2, w).valid)

    bumped = dict(moved, E0=(1, 2))
    d3 = make_orbifold(base, CharFunction(2, bumped))
    print("perturbed:", invariant_screen(d1, d3) or data_equivalent(d1, d3) or "not equivalent")


if __name__ == "__main__":
    main()
