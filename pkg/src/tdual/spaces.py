"""Graded integral cohomology tables for the base-space catalog.

A `GradedCohomology` holds the groups H^0..H^max_degree with named
generators and, when ring data is available, the cup products with
degree-two classes.  The ring is stored only through those cup maps: one
matrix per degree-two generator and per degree, which is exactly the data
the Gysin sequence consumes.

Catalog spaces: point, S^n (1 <= n <= 8), T^2, Sigma_g (orientable genus-g
surface, 2 <= g <= 8), RP^n (2 <= n <= 8), CP^2, and a degree-truncated
K(Z,2).  Coordinates of elements are always with respect to the listed
generator order of each degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .abelian import (
    FgGroup,
    GroupElement,
    Hom,
    IntMatrix,
    ZERO_GROUP,
    direct_sum,
)


# ---------------------------------------------------------------------------
# graded cohomology with cup-by-degree-2 data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedCohomology:
    label: str
    max_degree: int
    groups: tuple  # FgGroup per degree 0..max_degree
    names: tuple   # tuple of generator-name tuples per degree
    # cup_gens[i][k]: matrix of cup with the i-th H^2 generator,
    # H^k -> H^(k+2); None marks missing ring data for that generator.
    cup_gens: Optional[tuple] = None
    simply_connected: Optional[bool] = None

    def __post_init__(self):
        if len(self.groups) != self.max_degree + 1:
            raise ValueError("one group per degree 0..max_degree required")
        if len(self.names) != len(self.groups):
            raise ValueError("one name tuple per degree required")
        for g, ns in zip(self.groups, self.names):
            if len(ns) != g.ngens:
                raise ValueError(f"{len(ns)} names for {g.ngens} generators")

    def group(self, k: int) -> FgGroup:
        if k < 0 or k > self.max_degree:
            return ZERO_GROUP
        return self.groups[k]

    def element(self, k: int, coords: Sequence[int]) -> GroupElement:
        return self.group(k).element(coords)

    def generator_index(self, k: int, name: str) -> int:
        return self.names[k].index(name)

    def named_element(self, k: int, name: str) -> GroupElement:
        return self.group(k).generator(self.generator_index(k, name))

    def has_ring_data(self) -> bool:
        return self.cup_gens is not None

    def cup_by(self, e: GroupElement, k: int) -> Hom:
        """The map (cup with e): H^k -> H^(k+2), for e in H^2."""
        if e.group != self.group(2):
            raise ValueError("cup class must live in H^2")
        src = self.group(k) if k >= 0 else ZERO_GROUP
        dst = self.group(k + 2)
        if k < 0 or k > self.max_degree:
            return Hom.zero(src, dst)
        if k + 2 > self.max_degree:
            if dst.is_zero():
                return Hom.zero(src, dst)
            raise ValueError(f"no cup data into degree {k + 2}")
        if self.cup_gens is None:
            raise ValueError(f"{self.label} carries no ring data")
        total = IntMatrix.zeros(dst.ngens, src.ngens)
        for i, coeff in enumerate(e.coords):
            if coeff == 0:
                continue
            m = self.cup_gens[i][k]
            if m is None:
                raise ValueError(
                    f"no cup data for H^2 generator {self.names[2][i]!r}")
            total = total.add(m.scale(coeff))
        return Hom(src, dst, total)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * g.free_rank for k, g in enumerate(self.groups))


def _zero_cup_table(groups, max_degree):
    """All-zero cup matrices for each H^2 generator and degree."""
    n2 = groups[2].ngens if max_degree >= 2 else 0
    table = []
    for _ in range(n2):
        row = []
        for k in range(max_degree - 1):
            dst = groups[k + 2]
            row.append(IntMatrix.zeros(dst.ngens, groups[k].ngens))
        row.extend([None, None])  # degrees max-1, max have no target in range
        table.append(tuple(row[: max_degree + 1]))
    return table


def _build(label, max_degree, data, cup_entries=(), simply_connected=None):
    """Assemble a GradedCohomology from sparse degree data.

    data: dict degree -> (FgGroup, names); missing degrees are zero.
    cup_entries: list of (gen_index, degree, matrix_rows) for nonzero cup
    maps; everything else defaults to the zero map.
    """
    groups = []
    names = []
    for k in range(max_degree + 1):
        g, ns = data.get(k, (ZERO_GROUP, ()))
        groups.append(g)
        names.append(tuple(ns))
    table = _zero_cup_table(groups, max_degree)
    for i, k, rows in cup_entries:
        if k + 2 > max_degree:
            continue
        src = groups[k]
        table[i] = tuple(
            IntMatrix.from_rows(rows, src.ngens) if kk == k else m
            for kk, m in enumerate(table[i]))
    return GradedCohomology(
        label=label,
        max_degree=max_degree,
        groups=tuple(groups),
        names=tuple(names),
        cup_gens=tuple(table),
        simply_connected=simply_connected,
    )


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogSpace:
    kind: str   # point | sphere | torus | surface | rp | cp2 | kz2
    param: int = 0

    def dimension(self) -> Optional[int]:
        return {
            "point": 0,
            "sphere": self.param,
            "torus": 2,
            "surface": 2,
            "rp": self.param,
            "cp2": 4,
            "kz2": None,
        }[self.kind]

    def display(self) -> str:
        return {
            "point": "point",
            "sphere": f"S{self.param}",
            "torus": "T2",
            "surface": f"Sigma{self.param}",
            "rp": f"RP{self.param}",
            "cp2": "CP2",
            "kz2": "KZ2",
        }[self.kind]


class UnknownSpaceError(ValueError):
    pass


_SPACE_RE = re.compile(
    r"^(?:(point)|s\^?([1-8])|(t\^?2)|sigma[_^]?([2-8])|rp\^?([2-8])|"
    r"(cp\^?2)|(kz2|k\(z,2\)))$")


def parse_space(name: str) -> CatalogSpace:
    m = _SPACE_RE.match(name.strip().lower())
    if not m:
        raise UnknownSpaceError(f"unknown catalog space {name!r}")
    if m.group(1):
        return CatalogSpace("point")
    if m.group(2):
        return CatalogSpace("sphere", int(m.group(2)))
    if m.group(3):
        return CatalogSpace("torus")
    if m.group(4):
        return CatalogSpace("surface", int(m.group(4)))
    if m.group(5):
        return CatalogSpace("rp", int(m.group(5)))
    if m.group(6):
        return CatalogSpace("cp2")
    return CatalogSpace("kz2")


Z = FgGroup(1)
Z2 = FgGroup(0, (2,))


def cohomology_of(space: CatalogSpace, max_degree: int) -> GradedCohomology:
    """Integral cohomology of a catalog space up to max_degree."""
    if max_degree < 0 or max_degree > 12:
        raise ValueError("max_degree out of range")
    label = space.display()
    if space.kind == "point":
        return _build(label, max_degree, {0: (Z, ("1",))}, simply_connected=True)

    if space.kind == "sphere":
        n = space.param
        data = {0: (Z, ("1",))}
        if n <= max_degree:
            data[n] = (Z, ("vol",))
        cups = []
        if n == 2 and max_degree >= 2:
            cups.append((0, 0, [[1]]))  # 1 cup vol = vol
        return _build(label, max_degree, data, cups, simply_connected=(n >= 2))

    if space.kind in ("torus", "surface"):
        g = 1 if space.kind == "torus" else space.param
        ones = [f"a{i}" for i in range(1, g + 1)] + [f"b{i}" for i in range(1, g + 1)]
        if space.kind == "torus":
            ones = ["a", "b"]
        data = {0: (Z, ("1",))}
        if max_degree >= 1:
            data[1] = (FgGroup(2 * g), tuple(ones))
        if max_degree >= 2:
            data[2] = (Z, ("vol",))
        cups = [(0, 0, [[1]])] if max_degree >= 2 else []
        return _build(label, max_degree, data, cups, simply_connected=False)

    if space.kind == "rp":
        n = space.param
        data = {0: (Z, ("1",))}
        for k in range(2, min(n, max_degree) + 1, 2):
            data[k] = (Z2, (f"a^{k // 2}" if k > 2 else "a",))
        if n % 2 == 1 and n <= max_degree:
            data[n] = (Z, ("vol",))
        cups = []
        if max_degree >= 2:
            cups.append((0, 0, [[1]]))  # Z -> Z/2 reduction
            for k in range(2, n - 1, 2):
                if k + 2 <= max_degree and k + 2 <= n and data.get(k + 2, (ZERO_GROUP,))[0] == Z2:
                    cups.append((0, k, [[1]]))
        return _build(label, max_degree, data, cups, simply_connected=False)

    if space.kind == "cp2":
        data = {0: (Z, ("1",))}
        if max_degree >= 2:
            data[2] = (Z, ("a",))
        if max_degree >= 4:
            data[4] = (Z, ("a^2",))
        cups = []
        if max_degree >= 2:
            cups.append((0, 0, [[1]]))
        if max_degree >= 4:
            cups.append((0, 2, [[1]]))
        return _build(label, max_degree, data, cups, simply_connected=True)

    if space.kind == "kz2":
        data = {0: (Z, ("1",))}
        for k in range(2, max_degree + 1, 2):
            data[k] = (Z, ("c" if k == 2 else f"c^{k // 2}",))
        cups = [(0, k, [[1]]) for k in range(0, max_degree - 1, 2)]
        return _build(label, max_degree, data, cups, simply_connected=True)

    raise UnknownSpaceError(space.kind)


# ---------------------------------------------------------------------------
# sums with generator names
# ---------------------------------------------------------------------------

def sum_named(parts):
    """Direct sum of (group, names) pairs, tracking generator labels.

    Returns (group, names, inclusions, projections).  A canonical
    generator inherits a label when it projects to exactly one original
    generator with coefficient +-1 and to zero elsewhere; otherwise it
    gets a synthetic label.
    """
    groups = [g for g, _ in parts]
    total, incls, projs = direct_sum(groups)
    names = []
    for i in range(total.ngens):
        gen = total.generator(i)
        hits = []
        clean = True
        for (g, ns), p in zip(parts, projs):
            img = p(gen)
            for j, c in enumerate(img.coords):
                if c == 0:
                    continue
                order = g.torsion[j - g.free_rank] if j >= g.free_rank else 0
                unit = c in (1, -1) or (order and c == order - 1)
                hits.append((ns[j], unit))
        if len(hits) == 1 and hits[0][1]:
            names.append(hits[0][0])
        else:
            names.append(f"u{i}")
    return total, tuple(names), incls, projs


def kunneth_with_circle(w: GradedCohomology) -> GradedCohomology:
    """Cohomology of W x S^1: H^k = H^k(W) + H^(k-1)(W).

    Generators from H^k(W) keep their names with suffix '.1'; the ones
    coming from H^(k-1)(W) (times the circle class) get suffix '.z'.
    Cup products are defined for classes pulled back from W and act
    blockwise; the circle-factor degree-one classes carry no ring data.
    """
    D = w.max_degree
    groups = []
    names = []
    incls_1 = []
    incls_z = []
    projs_1 = []
    projs_z = []
    for k in range(D + 1):
        wk = w.group(k)
        wk1 = w.group(k - 1)
        nk = tuple(f"{n}.1" for n in w.names[k])
        nk1 = tuple(f"{n}.z" for n in (w.names[k - 1] if k >= 1 else ()))
        total, ns, incls, projs = sum_named([(wk, nk), (wk1, nk1)])
        groups.append(total)
        names.append(ns)
        incls_1.append(incls[0])
        incls_z.append(incls[1])
        projs_1.append(projs[0])
        projs_z.append(projs[1])

    cup_table = None
    if w.has_ring_data() and D >= 2:
        n2 = groups[2].ngens
        table = []
        for i in range(n2):
            # which original generator does product generator i come from?
            src_w = projs_1[2](groups[2].generator(i))
            src_z = projs_z[2](groups[2].generator(i))
            if not src_z.is_zero() or sum(1 for c in src_w.coords if c) != 1:
                table.append(tuple(None for _ in range(D + 1)))
                continue
            j = next(idx for idx, c in enumerate(src_w.coords) if c)
            if src_w.coords[j] not in (1, -1):
                table.append(tuple(None for _ in range(D + 1)))
                continue
            sign = src_w.coords[j]
            base_gen = w.group(2).generator(j)
            row = []
            for k in range(D + 1):
                if k + 2 > D:
                    row.append(None)
                    continue
                cw_k = w.cup_by(base_gen, k)
                cw_k1 = w.cup_by(base_gen, k - 1) if k >= 1 else Hom.zero(
                    ZERO_GROUP, w.group(k + 1))
                part1 = incls_1[k + 2].compose(cw_k).compose(projs_1[k]).matrix
                partz = incls_z[k + 2].compose(cw_k1).compose(projs_z[k]).matrix
                row.append(part1.add(partz).scale(sign))
            table.append(tuple(row))
        cup_table = tuple(table)

    return GradedCohomology(
        label=f"{w.label}xS1",
        max_degree=D,
        groups=tuple(groups),
        names=tuple(names),
        cup_gens=cup_table,
        simply_connected=False,
    )
