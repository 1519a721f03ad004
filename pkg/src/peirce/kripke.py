"""Finite Kripke models: forcing, persistence, and countermodel search.

Models are enumerated up to isomorphism (countermodel existence is
isomorphism-invariant): posets are generated as transitive subrelations of
a fixed linear order and deduplicated by a canonical signature, and
valuations range over up-sets so persistence holds by construction.  The
search evaluates forcing with per-world bitmasks; any model returned is
re-checked with the plain recursive forcing relation, which is the
independent half of the pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from . import formulas as fm
from .semantics import _strip_not

MAX_WORLDS = 5


@dataclass(frozen=True)
class KripkeModel:
    """A reflexive-transitive order on worlds 0..n-1 with a monotone
    valuation (forced atoms persist upward)."""

    worlds: int
    order: frozenset[tuple[int, int]]
    valuation: tuple[frozenset[str], ...]

    def leq(self, a: int, b: int) -> bool:
        return (a, b) in self.order

    def __str__(self) -> str:
        pairs = sorted((a, b) for a, b in self.order if a != b)
        order = ", ".join(f"{a}<={b}" for a, b in pairs)
        val = "; ".join(
            f"{w}:{{{','.join(sorted(self.valuation[w]))}}}" for w in range(self.worlds)
        )
        return f"worlds: {self.worlds}; order: {order}; val: {val}"


def forces(model: KripkeModel, world: int, f: fm.Formula) -> bool:
    """The standard forcing clauses, evaluated directly."""
    if isinstance(f, fm.Atom):
        return f.name in model.valuation[world]
    if isinstance(f, fm.Top):
        return True
    if isinstance(f, fm.Bot):
        return False
    if isinstance(f, fm.And):
        return forces(model, world, f.left) and forces(model, world, f.right)
    if isinstance(f, fm.Or):
        return forces(model, world, f.left) or forces(model, world, f.right)
    if isinstance(f, fm.Not):
        return all(not forces(model, v, f.body)
                   for v in range(model.worlds) if model.leq(world, v))
    return all(forces(model, v, f.right)
               for v in range(model.worlds)
               if model.leq(world, v) and forces(model, v, f.left))


def persistent(model: KripkeModel) -> bool:
    return all(model.valuation[a] <= model.valuation[b]
               for (a, b) in model.order)


# ---------------------------------------------------------------------------
# Poset enumeration (up to isomorphism)
# ---------------------------------------------------------------------------

_POSET_CACHE: dict[int, list[tuple[tuple[int, ...], list[int]]]] = {}


def _posets(n: int) -> list[tuple[tuple[int, ...], list[int]]]:
    """Non-isomorphic reflexive-transitive orders on n worlds.

    Each entry is (up-masks per world, list of up-set masks).  Every finite
    poset admits a linear extension, so generating only relations contained
    in 0 < 1 < ... < n-1 loses nothing up to isomorphism.
    """
    if n in _POSET_CACHE:
        return _POSET_CACHE[n]
    pairs = list(combinations(range(n), 2))
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[tuple[int, ...], list[int]]] = []
    for bits in range(1 << len(pairs)):
        rel = {(i, i) for i in range(n)}
        for idx, (a, b) in enumerate(pairs):
            if bits >> idx & 1:
                rel.add((a, b))
        if not _transitive(rel):
            continue
        signature = _canonical_signature(rel, n)
        if signature in seen:
            continue
        seen.add(signature)
        up = tuple(sum(1 << b for b in range(n) if (a, b) in rel) for a in range(n))
        upsets = [mask for mask in range(1 << n) if _is_upset(mask, up, n)]
        out.append((up, upsets))
    _POSET_CACHE[n] = out
    return out


def _transitive(rel: set[tuple[int, int]]) -> bool:
    return all((a, d) in rel
               for (a, b) in rel for (c, d) in rel if b == c)


def _canonical_signature(rel: set[tuple[int, int]], n: int) -> tuple[int, ...]:
    best = None
    for perm in permutations(range(n)):
        masks = []
        for a in range(n):
            mask = 0
            for b in range(n):
                if (a, b) in rel:
                    mask |= 1 << perm[b]
            masks.append(mask)
        masks = tuple(masks[p] for p in _inverse(perm))
        if best is None or masks < best:
            best = masks
    return best


def _inverse(perm: tuple[int, ...]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def _is_upset(mask: int, up: tuple[int, ...], n: int) -> bool:
    return all(not (mask >> w & 1) or (up[w] & ~mask & ((1 << n) - 1)) == 0
               for w in range(n))


# ---------------------------------------------------------------------------
# Countermodel search
# ---------------------------------------------------------------------------


def _eval_mask(f: fm.Formula, atom_masks: dict[str, int], up: tuple[int, ...],
               full: int, n: int) -> int:
    if isinstance(f, fm.Atom):
        return atom_masks[f.name]
    if isinstance(f, fm.Top):
        return full
    if isinstance(f, fm.Bot):
        return 0
    if isinstance(f, fm.And):
        return (_eval_mask(f.left, atom_masks, up, full, n)
                & _eval_mask(f.right, atom_masks, up, full, n))
    if isinstance(f, fm.Or):
        return (_eval_mask(f.left, atom_masks, up, full, n)
                | _eval_mask(f.right, atom_masks, up, full, n))
    left = _eval_mask(f.left, atom_masks, up, full, n)
    right = _eval_mask(f.right, atom_masks, up, full, n)
    bad = left & ~right
    mask = 0
    for w in range(n):
        if up[w] & bad == 0:
            mask |= 1 << w
    return mask


def kripke_countermodel(f: fm.Formula, max_worlds: int) -> KripkeModel | None:
    """A model with at most ``max_worlds`` worlds in which ``f`` fails
    somewhere, or None.  Any returned model is verified against the
    recursive forcing relation before being handed back."""
    if not 1 <= max_worlds <= MAX_WORLDS:
        raise ValueError(f"max_worlds must be in 1..{MAX_WORLDS}")
    stripped = _strip_not(f)
    names = sorted(fm.atoms(stripped))
    for n in range(1, max_worlds + 1):
        full = (1 << n) - 1
        for up, upsets in _posets(n):
            for choice in product(upsets, repeat=len(names)):
                atom_masks = dict(zip(names, choice))
                if _eval_mask(stripped, atom_masks, up, full, n) != full:
                    model = _build_model(n, up, names, choice)
                    assert persistent(model)
                    assert any(not forces(model, w, f) for w in range(n))
                    return model
    return None


def _build_model(n: int, up: tuple[int, ...], names: list[str],
                 choice: tuple[int, ...]) -> KripkeModel:
    order = frozenset((a, b) for a in range(n) for b in range(n) if up[a] >> b & 1)
    valuation = tuple(
        frozenset(name for name, mask in zip(names, choice) if mask >> w & 1)
        for w in range(n)
    )
    return KripkeModel(n, order, valuation)
