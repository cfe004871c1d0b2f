"""Finite groups as multiplication tables, and validated projective unitary reps.

Groups are always materialized as full n x n tables (desk scale, n <= 256);
the feasibility machinery downstream is O(n^2) anyway. All types are
immutable after construction and all operations are pure.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    AxiomViolation,
    DimensionMismatch,
    DomainError,
    NotAState,
    NotProjective,
    NotUnitary,
    UnknownGroupName,
)

TOL_UNITARY = 1e-10
TOL_NORM = 1e-10

MAX_ORDER = 256


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    mult: np.ndarray  # (n, n) element indices
    identity: int
    inv: np.ndarray  # (n,) element indices
    name: str | None = None

    def op(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = int(self.mult[x, g])
            k += 1
        return k

    def power(self, g: int, k: int) -> int:
        x = self.identity
        for _ in range(k % self.element_order(g) if k >= 0 else 0):
            x = int(self.mult[x, g])
        return x

    def same_as(self, other: "FiniteGroup") -> bool:
        return self is other or (
            self.order == other.order and np.array_equal(self.mult, other.mult)
        )


@dataclass(frozen=True, eq=False)
class PureState:
    dim: int
    amplitudes: np.ndarray  # (dim,) complex

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        if amp.shape != (self.dim,):
            raise NotAState(f"expected {self.dim} amplitudes, got shape {amp.shape}")
        nrm = np.linalg.norm(amp)
        if abs(nrm - 1.0) > TOL_NORM:
            raise NotAState(f"state norm {nrm!r} deviates from 1 beyond tolerance")
        object.__setattr__(self, "amplitudes", amp)


@dataclass(frozen=True, eq=False)
class ProjectiveRep:
    group: FiniteGroup
    dim: int
    matrices: np.ndarray  # (n, d, d) complex
    cocycle: np.ndarray  # (n, n) phases in radians


def build_group(mult_table, name: str | None = None) -> FiniteGroup:
    """Validate a multiplication table and derive identity and inverses.

    Raises AxiomViolation naming the failed axiom together with a witness.
    """
    mult = np.asarray(mult_table, dtype=np.intp)
    if mult.ndim != 2 or mult.shape[0] != mult.shape[1] or mult.shape[0] == 0:
        raise AxiomViolation("closure", witness=f"table shape {mult.shape}")
    n = mult.shape[0]
    if n > MAX_ORDER:
        raise AxiomViolation("closure", witness=f"order {n} exceeds cap {MAX_ORDER}")
    if mult.min() < 0 or mult.max() >= n:
        bad = np.argwhere((mult < 0) | (mult >= n))[0]
        raise AxiomViolation("closure", witness=tuple(int(x) for x in bad))

    rng = np.arange(n)
    id_rows = np.where((mult == rng[None, :]).all(axis=1) & (mult.T == rng[None, :]).all(axis=1))[0]
    if id_rows.size == 0:
        raise AxiomViolation("identity")
    e = int(id_rows[0])

    # mult[mult[a,b],c] vs mult[a,mult[b,c]], fully vectorized
    left = mult[mult, :]
    right = mult[np.arange(n)[:, None, None], mult[None, :, :]]
    if not np.array_equal(left, right):
        a, b, c = np.argwhere(left != right)[0]
        raise AxiomViolation("associativity", witness=(int(a), int(b), int(c)))

    inv = np.full(n, -1, dtype=np.intp)
    for a in range(n):
        bs = np.where(mult[a] == e)[0]
        if bs.size != 1 or mult[bs[0], a] != e:
            raise AxiomViolation("inverses", witness=int(a))
        inv[a] = bs[0]
    if not np.array_equal(inv[inv], rng):
        raise AxiomViolation("inverses", witness="inv is not an involution")

    return FiniteGroup(order=n, mult=mult, identity=e, inv=inv, name=name)


def _cyclic_table(n: int) -> np.ndarray:
    a = np.arange(n)
    return (a[:, None] + a[None, :]) % n


def _product_table(shape: tuple[int, ...]) -> np.ndarray:
    labels = list(itertools.product(*[range(m) for m in shape]))
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    mult = np.empty((n, n), dtype=np.intp)
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            mult[i, j] = index[tuple((x + y) % m for x, y, m in zip(a, b, shape))]
    return mult


def _s3_table() -> np.ndarray:
    perms = sorted(itertools.permutations(range(3)))  # identity first
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mult = np.empty((n, n), dtype=np.intp)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mult[i, j] = index[tuple(p[q[k]] for k in range(3))]
    return mult


def _d4_table() -> np.ndarray:
    # elements r^i s^j indexed i + 4j; s r = r^{-1} s
    def idx(i, j):
        return i % 4 + 4 * (j % 2)

    mult = np.empty((8, 8), dtype=np.intp)
    for i in range(4):
        for j in range(2):
            for k in range(4):
                for l in range(2):
                    ii = (i + (-k if j else k)) % 4
                    mult[idx(i, j), idx(k, l)] = idx(ii, j + l)
    return mult


def quaternion_matrices() -> np.ndarray:
    """The faithful 2-dim rep of Q_8 in element order (1,-1,i,-i,j,-j,k,-k)."""
    I2 = np.eye(2, dtype=complex)
    qi = np.array([[1j, 0], [0, -1j]])
    qj = np.array([[0, 1], [-1, 0]], dtype=complex)
    qk = qi @ qj
    return np.array([I2, -I2, qi, -qi, qj, -qj, qk, -qk])


def _q8_table() -> np.ndarray:
    mats = quaternion_matrices()
    n = len(mats)
    mult = np.empty((n, n), dtype=np.intp)
    for a in range(n):
        for b in range(n):
            prod = mats[a] @ mats[b]
            hits = [c for c in range(n) if np.allclose(prod, mats[c])]
            assert len(hits) == 1
            mult[a, b] = hits[0]
    return mult


_CYCLIC_RE = re.compile(r"^Z_(\d+)$")


def named_group(name: str) -> FiniteGroup:
    """Standard multiplication tables: Z_n, Z_n1x...xZ_nk, S_3, D_4, Q_8.

    Product names accept either 'x' or the multiplication-sign separator.
    """
    clean = name.replace("×", "x").strip()
    if clean == "S_3":
        return build_group(_s3_table(), name=name)
    if clean == "D_4":
        return build_group(_d4_table(), name=name)
    if clean == "Q_8":
        return build_group(_q8_table(), name=name)
    parts = clean.split("x")
    moduli = []
    for part in parts:
        m = _CYCLIC_RE.match(part.strip())
        if not m:
            raise UnknownGroupName(f"cannot parse group name {name!r}")
        k = int(m.group(1))
        if k < 1:
            raise UnknownGroupName(f"modulus must be >= 1 in {name!r}")
        moduli.append(k)
    if len(moduli) == 1:
        return build_group(_cyclic_table(moduli[0]), name=name)
    return build_group(_product_table(tuple(moduli)), name=name)


def validate_projective_rep(group: FiniteGroup, matrices) -> ProjectiveRep:
    """Check unitarity and the projective group law; extract the cocycle table.

    omega(g, g') is read off the (0, 0) entry of U(g)U(g')U(gg')^+, which must
    be a phase multiple of the identity within TOL_UNITARY.
    """
    mats = np.asarray(matrices, dtype=complex)
    n = group.order
    if mats.ndim != 3 or mats.shape[0] != n or mats.shape[1] != mats.shape[2]:
        raise DimensionMismatch(f"expected {n} square matrices, got shape {mats.shape}")
    d = mats.shape[1]
    eye = np.eye(d)
    for g in range(n):
        dev = np.abs(mats[g] @ mats[g].conj().T - eye).max()
        if dev > TOL_UNITARY:
            raise NotUnitary(g, float(dev))

    cocycle = np.zeros((n, n))
    for g in range(n):
        for h in range(n):
            prod = mats[g] @ mats[h] @ mats[group.mult[g, h]].conj().T
            z = prod[0, 0]
            if abs(abs(z) - 1.0) > 1e-6:
                raise NotProjective(g, h, float(np.abs(prod - prod[0, 0] * eye).max()))
            phase = z / abs(z)
            dev = np.abs(prod - phase * eye).max()
            if dev > TOL_UNITARY * max(1.0, d):
                raise NotProjective(g, h, float(dev))
            cocycle[g, h] = np.angle(phase)
    return ProjectiveRep(group=group, dim=d, matrices=mats, cocycle=cocycle)


def subgroup_closure(group: FiniteGroup, seed) -> frozenset[int]:
    """Smallest subgroup containing the seed elements; always contains e."""
    n = group.order
    for s in seed:
        if not 0 <= int(s) < n:
            raise DomainError(f"element index {s} out of range [0, {n})")
    closed = {group.identity}
    frontier = list(set(int(s) for s in seed))
    closed.update(group.inv[g] for g in frontier)
    closed.update(frontier)
    changed = True
    while changed:
        changed = False
        for a in list(closed):
            for b in list(closed):
                c = int(group.mult[a, b])
                if c not in closed:
                    closed.add(c)
                    changed = True
    return frozenset(closed)
