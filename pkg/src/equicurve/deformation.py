"""Equivariant deformation dimension and the invariants/coinvariants comparison
it depends on."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FieldSpec, Matrix, hstack, nullity, vstack
from .errors import EquicurveError, GenusTooSmall
from .ramification import RamificationProfile
from .rrspace import invariant_dim_polydiff


@dataclass(frozen=True)
class GroupRepresentation:
    field: FieldSpec
    dim: int
    generators: tuple[Matrix, ...]
    order: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for M in self.generators:
            if M.nrows != self.dim or M.ncols != self.dim:
                raise EquicurveError(f"generator of shape {M.nrows}x{M.ncols} in a rep of dim {self.dim}")
            if M.rank() != self.dim:
                raise EquicurveError("generator matrices must be invertible")

    @classmethod
    def from_ints(cls, field: FieldSpec, mats, order: int | None = None) -> "GroupRepresentation":
        ms = tuple(Matrix.from_ints(field, m) for m in mats)
        return cls(field, ms[0].nrows if ms else 0, ms, order)

    def dual(self) -> "GroupRepresentation":
        """The contragredient representation g -> (g^{-1})^T."""
        return GroupRepresentation(
            self.field, self.dim, tuple(M.inverse().transpose() for M in self.generators), self.order
        )

    def check_relation(self, word: list[int], power: int = 1) -> bool:
        """Whether the product of the generators indexed by ``word``, raised to ``power``, is the identity."""
        acc = Matrix.identity(self.field, self.dim)
        for i in word:
            acc = acc @ self.generators[i]
        return (acc**power).is_identity()


def inv_coinv_dims(rep: GroupRepresentation) -> tuple[int, int]:
    """(dim M^G, dim M_G)."""
    if rep.dim == 0:
        return 0, 0
    if not rep.generators:
        return rep.dim, rep.dim
    ident = Matrix.identity(rep.field, rep.dim)
    diffs = [M - ident for M in rep.generators]
    inv = nullity(vstack(diffs))
    # M_G = M / sum_g (g - 1) M; the span of the images is the column space of the stacked blocks
    coinv = rep.dim - hstack(diffs).rank()
    return inv, coinv


def check_duality(rep: GroupRepresentation) -> bool:
    """dim M_G = dim (M^*)^G."""
    return inv_coinv_dims(rep)[1] == inv_coinv_dims(rep.dual())[0]


def deformation_dim(profile: RamificationProfile) -> dict:
    """3 g_Y - 3 + sum_Q floor(2 delta_Q / e_Q), with the quadratic-differential cross-check."""
    if profile.g_X < 2:
        raise GenusTooSmall(f"g_X = {profile.g_X} < 2")
    dim = 3 * profile.g_Y - 3 + sum((2 * b.delta) // b.e for b in profile.branch)
    cross = invariant_dim_polydiff(profile, 2)
    return {"dim": dim, "crosscheck": cross}


def group_shape_condition(p: int | None, normal_order: int, cyclic_quotient: int) -> bool:
    """A normal subgroup N of order prime to p with cyclic quotient G/N guarantees
    dim M^G = dim M_G for every module.  The caller asserts that G/N is cyclic
    of the given order; without a characteristic only N = 1 qualifies."""
    if normal_order < 1 or cyclic_quotient < 1:
        raise EquicurveError("group shape orders must be positive")
    if p is None:
        return normal_order == 1
    return normal_order % p != 0


def check_groups_hypothesis(reps, p: int | None = None, group_shape: dict | None = None) -> dict:
    """Compare invariants and coinvariants on sample modules, and apply the
    group-shape sufficient condition when metadata is supplied."""
    samples = []
    for rep in reps:
        inv, coinv = inv_coinv_dims(rep)
        samples.append({"dim": rep.dim, "invariants": inv, "coinvariants": coinv, "equal": inv == coinv})
    all_equal = all(s["equal"] for s in samples)
    proved = False
    if group_shape is not None:
        proved = group_shape_condition(p, int(group_shape["N"]), int(group_shape["cyclicQuotient"]))
    if not all_equal:
        status = "fails"
    elif proved:
        status = "proved"
    elif samples:
        status = "sampled"
    else:
        status = "assumed"
    return {"samples": samples, "all_equal": all_equal, "group_shape_proves": proved, "hypothesis": status}


def z3_squared_example() -> GroupRepresentation:
    """The elementary abelian group of order 9 acting on GF(3)^3 by two commuting
    unipotent matrices, where invariants and coinvariants differ."""
    from .algebra import field_make

    F = field_make(3)
    a = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    b = [[1, 0, 1], [0, 1, 0], [0, 0, 1]]
    return GroupRepresentation.from_ints(F, [a, b], order=9)
