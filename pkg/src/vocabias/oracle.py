"""Brute-force references used to check the analytic and incremental routes.

Nothing here reuses the flesh, mutation or delta code: probabilities come from
a materialised joint table and the cost from ``-lambda I + (1 - lambda) H(S)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BudgetError, DomainError, UndefinedDistributionError
from .skeleton import Skeleton, SkeletonClass

MAX_SIDE = 8


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    m: int
    cls: SkeletonClass = SkeletonClass.GENERAL
    unlinked_form: int | None = None

    def __post_init__(self):
        if not (1 <= self.n <= MAX_SIDE and 1 <= self.m <= MAX_SIDE):
            raise BudgetError(f"enumeration limited to 1 <= n, m <= {MAX_SIDE}, got {self.n}x{self.m}")
        if self.unlinked_form is not None and not 1 <= self.unlinked_form <= self.n:
            raise BudgetError(f"unlinked_form {self.unlinked_form} out of range 1..{self.n}")


def _shannon(p: np.ndarray) -> float:
    p = p[p > 0]
    return float(-(p * np.log(p)).sum())


def joint_table(sk: Skeleton, phi: float) -> np.ndarray:
    a = sk.adjacency().astype(float)
    if not a.any():
        raise UndefinedDistributionError("skeleton has no edges")
    mu = a.sum(axis=1)
    om = a.sum(axis=0)
    w = a * np.outer(mu, om) ** phi
    return w / w.sum()


def brute_entropies(sk: Skeleton, fp) -> tuple[float, float, float]:
    """``(H(S), H(R), H(S,R))`` summed directly over the joint table.

    ``fp`` is a FleshParams or a bare ``phi``.
    """
    p = joint_table(sk, getattr(fp, "phi", fp))
    return _shannon(p.sum(axis=1)), _shannon(p.sum(axis=0)), _shannon(p.ravel())


def brute_omega(sk: Skeleton, phi: float, lam: float) -> float:
    """``-lambda I(S,R) + (1 - lambda) H(S)`` from the joint table."""
    return _omega(brute_entropies(sk, phi), lam)


def _check_cells(a: np.ndarray, i: int, j_a: int, j_b: int) -> None:
    n, m = a.shape
    if not (1 <= i <= n and 1 <= j_a <= m and 1 <= j_b <= m):
        raise DomainError("strategy indices out of range")
    if a[i - 1].any():
        raise DomainError(f"form {i} must be unlinked")
    if a[:, j_a - 1].any():
        raise DomainError(f"strategy a counterpart {j_a} must be unlinked")
    if not a[:, j_b - 1].any():
        raise DomainError(f"strategy b counterpart {j_b} must already be linked")


def brute_delta(sk: Skeleton, fp, cp, i: int, j_a: int, j_b: int) -> float:
    """Build both successor skeleta and difference their costs."""
    return brute_delta_many(sk, fp.phi, [cp.lam], i, j_a, j_b)[0]


def brute_delta_many(sk: Skeleton, phi: float, lams, i: int, j_a: int, j_b: int) -> list[float]:
    """``brute_delta`` at several ``lambda`` values, sharing the two successor tables."""
    _check_cells(sk.adjacency(), i, j_a, j_b)
    ent_a = brute_entropies(Skeleton(sk.n, sk.m, sk.edges | {(i, j_a)}), phi)
    ent_b = brute_entropies(Skeleton(sk.n, sk.m, sk.edges | {(i, j_b)}), phi)
    return [_omega(ent_a, lam) - _omega(ent_b, lam) for lam in lams]


def _omega(ent: tuple[float, float, float], lam: float) -> float:
    h_s, h_r, h_sr = ent
    return -lam * (h_s + h_r - h_sr) + (1 - lam) * h_s


def _block_choices(n: int, cls: SkeletonClass, banned: int) -> list[int]:
    if cls is SkeletonClass.GENERAL:
        return [c for c in range(1 << n) if not c & banned]
    return [0] + [1 << k for k in range(n) if not (1 << k) & banned]


def enumerate_masks(spec: EnumerationSpec) -> Iterator[int]:
    """Edge bitmasks of every skeleton in the class, in increasing order.

    Bit ``(j - 1) * n + (i - 1)`` encodes edge ``(i, j)``, so each counterpart
    owns a contiguous block of ``n`` bits.
    """
    n, m = spec.n, spec.m
    banned = 0 if spec.unlinked_form is None else 1 << (spec.unlinked_form - 1)
    choices = _block_choices(n, spec.cls, banned)
    matching = spec.cls is SkeletonClass.VERTEX_CAPPED

    def rec(j: int, prefix: int, used: int) -> Iterator[int]:
        # j runs from the most significant block down to 0
        if j < 0:
            yield prefix
            return
        for c in choices:
            if matching and c & used:
                continue
            yield from rec(j - 1, prefix | (c << (j * n)), used | c)

    yield from rec(m - 1, 0, 0)


def mask_to_skeleton(mask: int, n: int, m: int) -> Skeleton:
    edges = [
        (b % n + 1, b // n + 1)
        for b in range(n * m)
        if mask >> b & 1
    ]
    return Skeleton(n, m, edges)


def enumerate_skeleta(spec: EnumerationSpec) -> Iterator[Skeleton]:
    for mask in enumerate_masks(spec):
        yield mask_to_skeleton(mask, spec.n, spec.m)


def strategy_cells(sk: Skeleton) -> Iterator[tuple[int, int, int]]:
    """Every valid ``(i, j_a, j_b)``: unlinked form, unlinked and linked counterpart."""
    a = sk.adjacency()
    forms = [i + 1 for i in range(sk.n) if not a[i].any()]
    col = a.any(axis=0)
    free = [j + 1 for j in range(sk.m) if not col[j]]
    taken = [j + 1 for j in range(sk.m) if col[j]]
    for i in forms:
        for ja in free:
            for jb in taken:
                yield i, ja, jb
