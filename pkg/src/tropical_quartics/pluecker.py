"""Real bitangent counts from sign vectors (the two sweep algorithms).

A sign condition holds for a sign vector s in {+1,-1}^15 when the product
of the listed coefficient signs (times -1 for a leading token) is positive,
for both of its sets.  Each satisfied deformation class contributes four
real bitangents.  Sweeping all sign vectors standardized to s_0 = +1 gives
the achievable counts; every derived condition set has an even number of
indices (asserted at catalog load), so the global flip loses nothing.
"""

from __future__ import annotations

import numpy as np

from . import motifs as motif_mod

SWEEP_BITS = 14


class NonGenericError(ValueError):
    """Real lifting conditions are not understood for non-generic types."""


def evaluate_condition(cond, signs) -> bool:
    """cond is a pair of index sets (optionally led by -1); signs has 15
    entries in {+1,-1}.  Both set products must be positive; empty is true."""
    for part in cond:
        prod = 1
        for i in part:
            prod *= -1 if i == -1 else signs[i]
        if prod < 0:
            return False
    return True


def _require_generic(catalog, cells):
    if not catalog.is_generic(cells):
        raise NonGenericError(
            "triangulation is not generic: class (C) lifting conditions "
            "are not understood"
        )


def give_pluecker(cells, signs, catalog) -> int:
    """Number of real bitangents: 4 per satisfied deformation class."""
    _require_generic(catalog, cells)
    signs = tuple(signs)
    if len(signs) != 15 or any(s not in (1, -1) for s in signs):
        raise ValueError("sign vector needs 15 entries of +-1")
    found = catalog.find_all_motifs(cells)
    if len(found) != 7:
        raise ValueError(f"expected 7 motifs, found {len(found)}")
    return 4 * sum(
        1 for m in found if evaluate_condition(m.sign_conditions, signs)
    )


def _condition_masks(found):
    """Per motif, the two (bitmask, negate) parts of its condition."""
    compiled = []
    for m in found:
        parts = []
        for part in m.sign_conditions:
            mask = 0
            neg = False
            for i in part:
                if i == -1:
                    neg = not neg
                else:
                    mask |= 1 << i
            parts.append((mask, neg))
        compiled.append(parts)
    return compiled


class PlueckerResult:
    __slots__ = ("achievable_counts", "representatives")

    def __init__(self, achievable_counts, representatives):
        self.achievable_counts = achievable_counts
        self.representatives = representatives

    def __repr__(self):
        return f"PlueckerResult(counts={sorted(self.achievable_counts)})"


def _vector_of_bits(v: int):
    """Standardized sign vector for a 14-bit integer (bit i -> entry i+1)."""
    return tuple(
        [1] + [-1 if (v >> i) & 1 else 1 for i in range(SWEEP_BITS)]
    )


def pluecker_sweep(cells, catalog) -> PlueckerResult:
    """All achievable real bitangent counts over the 2^14 standardized sign
    vectors, with the first witness of each count."""
    _require_generic(catalog, cells)
    found = catalog.find_all_motifs(cells)
    if len(found) != 7:
        raise ValueError(f"expected 7 motifs, found {len(found)}")
    compiled = _condition_masks(found)
    vecs = np.arange(1 << SWEEP_BITS, dtype=np.uint32)
    counts = np.zeros(1 << SWEEP_BITS, dtype=np.uint8)
    for parts in compiled:
        ok = np.ones(1 << SWEEP_BITS, dtype=bool)
        for mask, neg in parts:
            mask14 = (mask >> 1) & ((1 << SWEEP_BITS) - 1)
            parity = np.bitwise_count(vecs & np.uint32(mask14)) & 1
            if neg:
                parity ^= 1
            ok &= parity == 0
        counts += ok
    values, first = np.unique(counts, return_index=True)
    representatives = {
        int(val) * 4: _vector_of_bits(int(idx)) for val, idx in zip(values, first)
    }
    return PlueckerResult(set(representatives), representatives)
