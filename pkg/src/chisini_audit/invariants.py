"""Invariant types and the closed-form formulas tying them together.

Three coordinate systems describe the same generic projection ``f: S -> P^2``:

* the projected surface model in ``P^3`` (:class:`SurfaceModel`),
* the branch curve ``B`` (:class:`BranchInvariants`),
* the Chern numbers of ``S`` (:class:`ChernPair`).

Every function here is exact integer arithmetic. Nothing rounds.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


class InvalidModelError(ValueError):
    """A surface model violates one of its structural constraints.

    ``constraint`` names the violated inequality so that callers (the CLI in
    particular) can report it verbatim.
    """

    def __init__(self, constraint: str, message: str):
        super().__init__(message)
        self.constraint = constraint


def max_double_curve_degree(m: int) -> int:
    """Largest double-curve degree allowed for a degree-``m`` surface."""
    return (m - 1) * (m - 2) // 2


def max_component_genus(dbar: int, u: int) -> int:
    """Upper bound for the genus sum of ``u`` components of total degree ``dbar``.

    The maximum of ``sum (d_i - 1)(d_i - 2)/2`` over ``d_1 + ... + d_u = dbar``
    with every ``d_i >= 1`` is reached by one component of degree
    ``dbar - u + 1`` and ``u - 1`` lines.
    """
    if u == 0:
        return 0
    k = dbar - u
    return k * (k - 1) // 2


@dataclass(frozen=True, order=True)
class SurfaceModel:
    """Degree-``m`` surface in ``P^3`` with ordinary singularities.

    ``dbar`` is the degree of the double curve, ``u`` its number of
    irreducible components, ``gbar`` the sum of their genera and ``t`` the
    number of triple points. Pinch points are not recorded.
    """

    m: int
    dbar: int
    u: int
    gbar: int
    t: int

    def __post_init__(self) -> None:
        for name in ("m", "dbar", "u", "gbar", "t"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an int")
        m, dbar, u, gbar, t = self.astuple()
        if m < 3:
            raise InvalidModelError("m >= 3", f"degree m={m} is below 3")
        if dbar < 0:
            raise InvalidModelError("dbar >= 0", f"dbar={dbar} is negative")
        if t < 0:
            raise InvalidModelError("t >= 0", f"t={t} is negative")
        if gbar < 0:
            raise InvalidModelError("gbar >= 0", f"gbar={gbar} is negative")
        if not 0 <= u <= dbar:
            raise InvalidModelError("0 <= u <= dbar", f"u={u} outside [0, dbar={dbar}]")
        if (u == 0) != (dbar == 0):
            raise InvalidModelError("u = 0 iff dbar = 0", f"u={u} with dbar={dbar}")
        top = max_double_curve_degree(m)
        if dbar > top:
            raise InvalidModelError(
                "dbar <= (m-1)(m-2)/2", f"dbar={dbar} exceeds {top} for m={m}"
            )
        gmax = max_component_genus(dbar, u)
        if gbar > gmax:
            raise InvalidModelError(
                "gbar <= (dbar-u)(dbar-u-1)/2",
                f"gbar={gbar} exceeds {gmax} for dbar={dbar}, u={u}",
            )

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.m, self.dbar, self.u, self.gbar, self.t)

    def __str__(self) -> str:
        return f"({self.m};{self.dbar},{self.u},{self.gbar},{self.t})"


@dataclass(frozen=True)
class BranchInvariants:
    """Half-degree ``d``, genus ``g``, cusps ``c`` and nodes ``n`` of ``B``.

    Derived values may be negative; :meth:`feasibility_failure` tells which
    one breaks realizability. :meth:`validate` is for user-supplied data.
    """

    d: int
    g: int
    c: int
    n: int

    @property
    def degree(self) -> int:
        return 2 * self.d

    def closes(self) -> bool:
        """Whether ``d(2d-3) = c + n + g - 1`` holds."""
        return self.d * (2 * self.d - 3) == self.c + self.n + self.g - 1

    def feasibility_failure(self) -> str | None:
        if self.g < 0:
            return "genus"
        if self.c < 0:
            return "cusps"
        if self.n < 0:
            return "nodes"
        return None

    def validate(self) -> None:
        if self.d < 1:
            raise ValueError(f"d={self.d} must be at least 1")
        failure = self.feasibility_failure()
        if failure is not None:
            raise ValueError(f"{failure} count must be non-negative: {self}")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ChernPair:
    """``K_S^2`` and the topological Euler number ``e(S)``."""

    k2: int
    e: int

    @property
    def satisfies_bmy(self) -> bool:
        return self.k2 <= 3 * self.e

    def to_dict(self) -> dict:
        return asdict(self)


def chern_from_model(model: SurfaceModel) -> ChernPair:
    m, dbar, u, gbar, t = model.astuple()
    k2 = m * (m - 4) ** 2 - (5 * m - 24) * dbar - 4 * (u - gbar) + 9 * t
    e = m * m * (m - 4) + 6 * m - (7 * m - 24) * dbar - 8 * (u - gbar) + 15 * t
    return ChernPair(k2, e)


def derive_branch(model: SurfaceModel) -> BranchInvariants:
    """Branch-curve invariants of the projection of ``model`` to ``P^2``.

    Negative genus, cusp or node counts are returned as-is; judging them is
    the caller's job.
    """
    m, dbar, u, gbar, t = model.astuple()
    # m(m-1) is even, so d is integral for every dbar.
    d = (m * (m - 1) - 2 * dbar) // 2
    # (2m^2 - 7m + 5) = (2m - 5)(m - 1), so the halving is exact.
    g_minus_1 = m * (2 * m * m - 7 * m + 5) // 2 - 5 * (m - 3) * dbar - 4 * (u - gbar) + 9 * t
    c = m * (m - 1) * (m - 2) - 3 * (m - 2) * dbar + 3 * t
    n = d * (2 * d - 3) - c - g_minus_1
    branch = BranchInvariants(d=d, g=g_minus_1 + 1, c=c, n=n)
    assert branch.closes()
    return branch


def chern_from_branch(m: int, b: BranchInvariants) -> ChernPair:
    if m < 3:
        raise ValueError(f"degree m={m} is below 3")
    return ChernPair(k2=9 * m - 9 * b.d + b.g - 1, e=3 * m + 2 * (b.g - 1) - b.c)


def dual_degree(b: BranchInvariants) -> int:
    """Plucker class of ``B``: ``2d(2d-1) - 3c - 2n``."""
    return 2 * b.d * (2 * b.d - 1) - 3 * b.c - 2 * b.n


def line_preimage_genus(deg_f: int, d: int) -> int:
    """Genus of the preimage of a generic line by Hurwitz.

    The line meets ``B`` in ``2d`` simple branch points, so
    ``2 genus - 2 = -2 deg_f + 2d``.
    """
    if deg_f < 1:
        raise ValueError(f"deg_f={deg_f} must be positive")
    return 1 - deg_f + d


def plane_section_genus(model: SurfaceModel) -> int:
    """Genus of the plane section of ``model``: a degree-``m`` curve with ``dbar`` nodes."""
    return max_double_curve_degree(model.m) - model.dbar
