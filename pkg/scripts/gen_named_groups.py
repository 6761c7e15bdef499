"""Regenerate the bundled generator files in src/sqfchar/data/groups/.

Groups over PSL2(9) come from the projective-line construction in
``sqfchar.constructors``. Sz(8) and Aut(Sz(8)) act on the 65 points of the
Tits ovoid {(0,0,0,1)} u {(1, x, y, xy + x^(t+2) + y^t)} in PG(3, 8), t: x -> x^4.

Usage: python scripts/gen_named_groups.py
"""

from functools import reduce
from pathlib import Path

from sqfchar.constructors import projective_line_group
from sqfchar.fields import field
from sqfchar.perm import Permutation
from sqfchar.group import PermutationGroup

OUT = Path(__file__).resolve().parents[1] / "src" / "sqfchar" / "data" / "groups"

PSL2_9_FAMILY = {
    "A6": ("PSL2(9) = Alt(6)", dict()),
    "PGL2_9": ("PGL2(9) = PSL2(9).<delta>", dict(delta=True)),
    "S6": ("PSL2(9).<phi> = Sym(6), phi: x -> x^3", dict(field_power=1)),
    "M10": ("PSL2(9).<delta*phi> = M10, x -> w*x^3", dict(field_power=1, twisted=True)),
    "AutA6": ("PSL2(9).<delta, phi> = Aut(Alt(6))", dict(delta=True, field_power=1)),
}


def ovoid_generators(with_frobenius=False):
    F = field(8)
    mul, add, inv = F.mul, F.add, F.inv
    theta = 4

    def zf(x, y):
        return int(add[add[mul[x, y], F.pow(x, theta + 2)], F.pow(y, theta)])

    pts = [(0, 0, 0, 1)] + [(1, x, y, zf(x, y)) for x in range(8) for y in range(8)]
    index = {p: i for i, p in enumerate(pts)}

    def normalize(v):
        lead = next(c for c in v if c)
        i = inv[lead]
        return tuple(int(mul[i, c]) for c in v)

    def as_perm(mat=None, frob=False):
        images = []
        for p in pts:
            v = tuple(F.frobenius(c) for c in p) if frob else p
            if mat is not None:
                v = tuple(reduce(lambda s, t: int(add[s, t]), (int(mul[mat[r][c], v[c]]) for c in range(4)), 0) for r in range(4))
            images.append(index[normalize(v)])
        return Permutation(tuple(images))

    w = F.primitive
    mats = [
        [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
        [[1, 0, 0, 0], [0, w, 0, 0], [0, 0, F.pow(w, 1 + theta), 0], [0, 0, 0, F.pow(w, 2 + theta)]],
        [[1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [1, 1, 1, 1]],
        [[1, 0, 0, 0], [0, 1, 0, 0], [1, 0, 1, 0], [1, 1, 0, 1]],
    ]
    gens = [as_perm(m) for m in mats]
    if with_frobenius:
        gens.append(as_perm(frob=True))
    return gens


def write(name, title, group, provenance):
    lines = [
        f"# {title}",
        f"# provenance: {provenance}",
        "# regenerate with scripts/gen_named_groups.py",
        f"degree: {group.degree}",
        f"order: {group.order}",
    ]
    lines += [f"gen: {g.to_cycles()}" for g in group.generators]
    (OUT / f"{name}.txt").write_text("\n".join(lines) + "\n")
    print(f"{name}: degree {group.degree}, order {group.order}")


def main():
    for name, (title, kwargs) in PSL2_9_FAMILY.items():
        g = projective_line_group(9, **kwargs)
        write(name, title, g, "projective line over F_9 (points 1..9 are field codes 0..8, point 10 is infinity)")
    prov = "Tits ovoid in PG(3,8); generators are the antidiagonal swap, a torus element, two unipotent elements"
    write("Sz8", "Suzuki group Sz(8) = 2B2(8)", PermutationGroup(65, ovoid_generators()), prov)
    write("AutSz8", "Aut(Sz(8)) = Sz(8).3", PermutationGroup(65, ovoid_generators(True)), prov + ", plus the Frobenius x -> x^2")


if __name__ == "__main__":
    main()
