"""Places of a hyperelliptic function field and divisors supported on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from ..algebra import FieldElement
from ..config import max_field_size
from ..errors import BoundExceeded, EquicurveError, NeedsExtension
from .model import HyperellipticModel

FIN_RAM = "fin_ram"
FIN_SPLIT = "fin_split"
FIN_INERT = "fin_inert"
INF_RAM = "inf_ram"
INF_SPLIT = "inf_split"
INF_INERT = "inf_inert"

_KIND_ORDER = {FIN_RAM: 0, FIN_SPLIT: 0, FIN_INERT: 0, INF_RAM: 1, INF_SPLIT: 1, INF_INERT: 1}
_BRANCH_ORDER = {"+": 0, "-": 1}


@dataclass(frozen=True)
class Place:
    """A place of k(x, y).

    ``a`` is the code of the x-coordinate (finite places); ``y`` the code of
    y(P) for finite split/ramified places, or of lim y/x^(g+1) at infinity.
    Inert places (residue degree 2) carry no y-value.
    """

    kind: str
    a: int | None = None
    y: int | None = None
    branch: str | None = None

    @property
    def is_finite(self) -> bool:
        return self.kind.startswith("fin")

    @property
    def is_infinite(self) -> bool:
        return not self.is_finite

    @property
    def e(self) -> int:
        return 2 if self.kind in (FIN_RAM, INF_RAM) else 1

    @property
    def degree(self) -> int:
        return 2 if self.kind in (FIN_INERT, INF_INERT) else 1

    @property
    def is_ramified(self) -> bool:
        return self.e == 2

    @property
    def is_split(self) -> bool:
        return self.kind in (FIN_SPLIT, INF_SPLIT)

    @property
    def id(self) -> str:
        if self.kind == FIN_INERT:
            return f"fin:a={self.a}:inert"
        if self.is_finite:
            return f"fin:a={self.a}:y={self.y}"
        if self.kind == INF_RAM:
            return "inf:ram"
        if self.kind == INF_INERT:
            return "inf:inert"
        return f"inf:{self.branch}"

    def sort_key(self):
        return (
            _KIND_ORDER[self.kind],
            -1 if self.a is None else self.a,
            -1 if self.y is None else self.y,
            _BRANCH_ORDER.get(self.branch, -1),
        )

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Place({self.id})"


def places_over(model: HyperellipticModel, a) -> list[Place]:
    """Places above x = a (a a field element or code), or above infinity when a is None."""
    if a is None:
        kind = model.infinity_type
        if kind == "ramified":
            roots = model.infinity_roots()
            return [Place(INF_RAM, None, roots[0] if roots else 0)]
        if kind == "inert":
            return [Place(INF_INERT)]
        w = model.infinity_roots()
        return [Place(INF_SPLIT, None, w[0], "+"), Place(INF_SPLIT, None, w[1], "-")]
    code = a.code if isinstance(a, FieldElement) else int(a)
    elt = model.field.from_code(code)
    if model.is_branch_point(elt):
        return [Place(FIN_RAM, code, model.residue_roots(elt)[0])]
    roots = model.residue_roots(elt)
    if not roots:
        return [Place(FIN_INERT, code)]
    return [Place(FIN_SPLIT, code, r) for r in roots]


def place_from_id(model: HyperellipticModel, pid: str) -> Place:
    """Parse a canonical place id and check that it is a place of ``model``."""
    parts = str(pid).strip().split(":")
    if parts[0] == "inf" and len(parts) == 2:
        cands = places_over(model, None)
    elif parts[0] == "fin" and len(parts) == 3 and parts[1].startswith("a=") and parts[1][2:].isdigit():
        a = int(parts[1][2:])
        if a >= model.field.q:
            raise EquicurveError(f"x-coordinate code {a} is outside {model.field}")
        cands = places_over(model, a)
    else:
        raise EquicurveError(f"malformed place id {pid!r}")
    for P in cands:
        if P.id == pid:
            return P
    raise EquicurveError(f"{pid!r} is not a place of {model}")


def rational_points(model: HyperellipticModel, extension_degree: int = 1) -> tuple[HyperellipticModel, list[Place]]:
    """All degree-1 places over GF(q^ext), sorted, infinite places last.

    Returns the (possibly base-changed) model together with the points.
    """
    q_big = model.field.q ** extension_degree
    if q_big > max_field_size():
        raise BoundExceeded(f"q^ext = {q_big} exceeds the configured bound")
    big = model if extension_degree == 1 else model.base_change(extension_degree)[0]
    pts = []
    for a in range(big.field.q):
        pts.extend(P for P in places_over(big, a) if P.degree == 1)
    pts.extend(P for P in places_over(big, None) if P.degree == 1)
    return big, sorted(pts)


class Divisor:
    """Finite formal sum of places with integer coefficients (zero entries dropped)."""

    __slots__ = ("_c",)

    def __init__(self, entries: Mapping[Place, int] | Iterable[tuple[Place, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[Place, int] = {}
        for P, n in items:
            acc[P] = acc.get(P, 0) + int(n)
        self._c = {P: n for P, n in sorted(acc.items(), key=lambda kv: kv[0].sort_key()) if n}

    @classmethod
    def single(cls, P: Place, n: int = 1) -> "Divisor":
        return cls({P: n})

    def items(self):
        return self._c.items()

    def support(self) -> list[Place]:
        return list(self._c)

    def coeff(self, P: Place) -> int:
        return self._c.get(P, 0)

    def __getitem__(self, P: Place) -> int:
        return self.coeff(P)

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    @property
    def degree(self) -> int:
        return sum(n * P.degree for P, n in self._c.items())

    def is_effective(self) -> bool:
        return all(n >= 0 for n in self._c.values())

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self._c.items()) + list(other._c.items()))

    def __neg__(self) -> "Divisor":
        return Divisor({P: -n for P, n in self._c.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor({P: k * n for P, n in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "Divisor(0)"
        return "Divisor(" + " + ".join(f"{n}*[{P.id}]" for P, n in self._c.items()) + ")"

    def to_json(self) -> list[dict]:
        return [{"place": P.id, "coeff": n} for P, n in self._c.items()]

    @classmethod
    def from_json(cls, model: HyperellipticModel, data) -> "Divisor":
        if not isinstance(data, list):
            raise EquicurveError("divisor JSON must be a list of {place, coeff} entries")
        out = []
        for entry in data:
            if not isinstance(entry, dict) or "place" not in entry or "coeff" not in entry:
                raise EquicurveError(f"bad divisor entry {entry!r}")
            out.append((place_from_id(model, entry["place"]), int(entry["coeff"])))
        return cls(out)


def pullback_point(model: HyperellipticModel, a) -> Divisor:
    """x^*([a]) = sum of e_P [P] over the places above a (a None for infinity)."""
    return Divisor({P: P.e for P in places_over(model, a)})


def infinity_divisor(model: HyperellipticModel) -> Divisor:
    """D_inf = x^*([infinity]), of degree 2."""
    return pullback_point(model, None)


def zero_divisor_of_x(model: HyperellipticModel) -> Divisor:
    return pullback_point(model, 0)


def branch_places(model: HyperellipticModel) -> list[Place]:
    """Ramified places of x over the ground field (only rational branch points)."""
    pts = [Place(FIN_RAM, r.code, model.residue_roots(r)[0]) for r, _ in model.branch_poly.roots()]
    pts.extend(P for P in places_over(model, None) if P.is_ramified)
    return sorted(pts)


def ramification_of_x(model: HyperellipticModel) -> Divisor:
    """The different of x: sum of delta_P [P] over ramified places, with delta_P
    computed from v_P(h) in characteristic 2 and equal to 1 otherwise."""
    from .local import valuation  # noqa: PLC0415 (cyclic import)
    from .functions import FunctionRep  # noqa: PLC0415

    d = model.branch_poly.splitting_degree()
    if d > 1:
        raise NeedsExtension("branch points are not all rational", d)
    if model.h is None:
        return Divisor({P: 1 for P in branch_places(model)})
    g = model.genus
    out = {}
    hx = FunctionRep.from_poly(model, model.h)
    for P in branch_places(model):
        if P.is_finite:
            out[P] = valuation(model, hx, P)
        else:
            # the coefficient of D_inf in div(h) + (g+1) D_inf
            out[P] = valuation(model, hx, P) + 2 * (g + 1)
    return Divisor(out)


def base_change_divisor(D: Divisor, small: HyperellipticModel, big: HyperellipticModel, emb) -> Divisor:
    """Image of D under the base change small -> big (inert places may split)."""
    out = []
    for P, n in D.items():
        if P.kind in (FIN_INERT, INF_INERT):
            over = places_over(big, None if P.is_infinite else emb(P.a))
            out.extend((Q, n) for Q in over)
        elif P.is_finite:
            out.append((Place(P.kind, emb(P.a), emb(P.y)), n))
        elif P.kind == INF_RAM:
            out.append((places_over(big, None)[0], n))
        else:
            target = emb(P.y)
            Q = next(Q for Q in places_over(big, None) if Q.y == target)
            out.append((Q, n))
    return Divisor(out)
