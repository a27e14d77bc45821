"""Geometric Goppa codes C(D, E) and the permutation action of curve automorphisms on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import Matrix, row_space_contains
from .config import RunConfig
from .curve import Divisor, HyperellipticModel, Place, divisor_image, evaluate, place_image, rational_points
from .curve.places import base_change_divisor
from .errors import BoundExceeded, NoCodewords, NotStable, SupportOverlap
from .rrspace import RRBasis, action_on_rr, rr_basis


@dataclass(frozen=True)
class GoppaCode:
    model: HyperellipticModel
    divisor: Divisor
    points: tuple[Place, ...]
    basis: RRBasis
    generator: Matrix
    k: int

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def field(self):
        return self.model.field

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "q": self.field.q,
            "points": [P.id for P in self.points],
            "generator": self.generator.to_lists(),
        }

    def to_alist(self) -> str:
        """Plain-text export: a header line "n k q", then one generator row per line."""
        lines = [f"{self.n} {self.k} {self.field.q}"]
        lines.extend(" ".join(str(c) for c in row) for row in self.generator.rows)
        return "\n".join(lines) + "\n"


def goppa_build(model: HyperellipticModel, D: Divisor, E, config: RunConfig | None = None) -> GoppaCode:
    """Evaluate the basis of L(D) at the points of E (in the given order)."""
    E = tuple(E)
    if len(set(E)) != len(E):
        raise ValueError("evaluation points must be distinct")
    supp = set(D.support())
    for P in E:
        if P.degree != 1:
            raise ValueError(f"{P} is not a rational point")
        if P in supp:
            raise SupportOverlap(f"{P.id} lies in the support of D")
    rr = rr_basis(model, D, config)
    rows = [[evaluate(model, u, P).code for P in E] for u in rr.basis]
    gen = Matrix(model.field, rows, len(E))
    k = gen.rank() if rows else 0
    return GoppaCode(model, D, E, rr, gen, k)


def points_off_support(model: HyperellipticModel, D: Divisor) -> list[Place]:
    supp = set(D.support())
    _, pts = rational_points(model, 1)
    return [P for P in pts if P not in supp]


def auto_points(model: HyperellipticModel, D: Divisor, ext: int | None = None, max_ext: int = 6):
    """Smallest extension (from ``ext`` upwards) with more rational points off supp D than deg D.

    Returns (model over the extension, D over it, points, extension degree).
    """
    start = ext or 1
    for d in range(start, max_ext + 1):
        if d == 1:
            big, bD = model, D
        else:
            big, emb = model.base_change(d)
            bD = base_change_divisor(D, model, big, emb)
        pts = points_off_support(big, bD)
        if len(pts) > bD.degree:
            return big, bD, pts, d
    raise BoundExceeded(f"no extension of degree <= {max_ext} has more than deg D points off supp D")


@dataclass(frozen=True)
class PermutationAction:
    generators: tuple
    permutations: tuple[tuple[int, ...], ...]
    stable: bool
    permutations_distinct: bool
    code_action_faithful: bool
    lemma_applies: bool

    def to_json(self) -> dict:
        return {
            "permutations": [list(p) for p in self.permutations],
            "stable": self.stable,
            "permutations_distinct": self.permutations_distinct,
            "code_action_faithful": self.code_action_faithful,
            "evaluation_injective": self.lemma_applies,
        }


def code_action(model: HyperellipticModel, group, code: GoppaCode) -> PermutationAction:
    """Permutation of E induced by each automorphism, with the checks that the
    code is mapped to itself and whether the induced action on C is faithful."""
    group = tuple(group)
    E = code.points
    index = {P: i for i, P in enumerate(E)}
    D = code.divisor
    perms = []
    for phi in group:
        if divisor_image(model, phi, D) != D:
            raise NotStable(f"D is not stable under {phi}")
        try:
            perm = tuple(index[place_image(model, phi, P)] for P in E)
        except KeyError:
            raise NotStable(f"E is not stable under {phi}") from None
        perms.append(perm)
    stable = all(
        row_space_contains(code.generator, [row[perm[i]] for i in range(code.n)])
        for perm in perms
        for row in code.generator.rows
    )
    # the map on C: codeword of u -> codeword of phi^* u; compare images of the generator rows
    distinct_images = {tuple(tuple(row[perm[i]] for i in range(code.n)) for row in code.generator.rows) for perm in perms}
    faithful = len(distinct_images) == len(group)
    lemma = code.n > D.degree
    return PermutationAction(group, tuple(perms), stable, len(set(perms)) == len(perms), faithful, lemma)


def rr_action_faithful(model: HyperellipticModel, group, code: GoppaCode) -> bool:
    """Whether the group acts faithfully on L(D) (distinct matrices for distinct elements)."""
    act = action_on_rr(model, group, code.basis)
    return len(set(act.matrices)) == len(act.matrices)


def min_distance_bruteforce(code: GoppaCode, max_codewords: int | None = None) -> int:
    """Exact minimum weight, enumerating messages up to scalar multiples."""
    F = code.field
    k = code.k
    if k == 0:
        raise NoCodewords("the code is zero-dimensional")
    limit = max_codewords if max_codewords is not None else RunConfig().max_codewords
    if F.q**k > limit:
        raise BoundExceeded(f"q^k = {F.q ** k} exceeds the codeword bound {limit}")
    # a basis of the row space
    from .algebra import rref

    red, piv = rref(code.generator)
    rows = red.rows[: len(piv)]
    best = code.n
    for lead in range(k):
        # messages whose first non-zero coordinate is position lead and equals 1
        for tail in product(range(F.q), repeat=k - lead - 1):
            word = list(rows[lead])
            for coef, row in zip(tail, rows[lead + 1 :]):
                if coef:
                    word = [F.add(w, F.mul(coef, r)) for w, r in zip(word, row)]
            wt = sum(1 for c in word if c)
            if wt < best:
                best = wt
    return best
