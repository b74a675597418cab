"""Three decoders over length classes.

Nearest neighbour works on any class. Coset decoding builds a standard array
and needs the words to form a subspace. Projection decoding sums basis words
against the mod-2 pairing and can fail outright; callers that want a second
chance get a bounded deterministic retry.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .core import LengthClass, pseudo_inner
from .errors import (
    CapExceeded,
    EmptyBasis,
    LengthMismatch,
    NotLinear,
    TieUnresolvable,
)
from .gf2 import Matrix, Word

ACCEPTED = "Accepted"
CORRECTED = "Corrected"
FAILED = "Failed"

METHOD_NN = "NN"
METHOD_COSET = "Coset"
METHOD_PBA = "PBA"


@dataclass(frozen=True)
class DecodeOutcome:
    """What a decoder did: its verdict, the chosen word, and a short trace."""

    status: str
    word: Word | None
    method: str
    trace: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.status != FAILED


def nn_decode(cls: LengthClass, received: Word) -> DecodeOutcome:
    """Nearest neighbour with message-symbol tie break.

    Full-word distance decides first. Ties fall back to distance over the
    first k coordinates, which needs the class to know its message length.
    Any tie still left picks the lexicographically smallest candidate and
    says so in the trace.
    """
    received = tuple(received)
    if len(received) != cls.length:
        raise LengthMismatch(
            f"received length {len(received)}, class length {cls.length}"
        )
    if cls.contains(received):
        return DecodeOutcome(ACCEPTED, received, METHOD_NN)
    best = min(gf2.distance(received, w) for w in cls.words)
    candidates = [w for w in cls.words if gf2.distance(received, w) == best]
    trace = [f"distance {best}"]
    if len(candidates) > 1:
        k = cls.message_length
        if k is None:
            raise TieUnresolvable(
                f"{len(candidates)} words at distance {best} and no message length"
            )
        msg_best = min(gf2.distance(received[:k], w[:k]) for w in candidates)
        candidates = [
            w for w in candidates if gf2.distance(received[:k], w[:k]) == msg_best
        ]
        trace.append(f"message tie break over {k} symbols, distance {msg_best}")
        if len(candidates) > 1:
            trace.append(f"ambiguous among {len(candidates)}, smallest kept")
    return DecodeOutcome(CORRECTED, min(candidates), METHOD_NN, tuple(trace))


@dataclass(frozen=True)
class StandardArray:
    """Cosets of a linear class inside its whole word space.

    check is derived internally from the words, so its syndromes separate
    exactly the cosets. leaders maps each syndrome to the chosen minimum
    weight coset member; weight ties break toward the lexicographically
    largest word.
    """

    length: int
    words: tuple[Word, ...]
    check: Matrix
    leaders: dict[Word, Word]
    cosets: dict[Word, tuple[Word, ...]]

    @property
    def coset_count(self) -> int:
        return len(self.cosets)

    @property
    def coset_size(self) -> int:
        return len(self.words)

    def leader_weights(self) -> tuple[int, ...]:
        return tuple(sorted(gf2.weight(l) for l in self.leaders.values()))

    def expected_correction_rate(self, p: float) -> float:
        """Chance a memoryless bit-flip pattern is exactly a chosen leader."""
        n = self.length
        return sum(
            p ** gf2.weight(l) * (1 - p) ** (n - gf2.weight(l))
            for l in self.leaders.values()
        )

    def decode(self, received: Word) -> DecodeOutcome:
        received = tuple(received)
        if len(received) != self.length:
            raise LengthMismatch(
                f"received length {len(received)}, array length {self.length}"
            )
        syn = gf2.matvec(self.check, received)
        leader = self.leaders[syn]
        if not any(leader):
            return DecodeOutcome(ACCEPTED, received, METHOD_COSET)
        return DecodeOutcome(
            CORRECTED,
            gf2.xor(received, leader),
            METHOD_COSET,
            (f"leader {gf2.render(leader)}",),
        )


def build_standard_array(words, cap: int = gf2.SPAN_CAP) -> StandardArray:
    """Partition the whole length-n space into cosets of the given words."""
    ws = tuple(sorted(set(tuple(w) for w in words)))
    if not ws:
        raise NotLinear("no words")
    n = len(ws[0])
    zero = gf2.zeros(n)
    word_set = set(ws)
    if zero not in word_set or any(
        gf2.xor(a, b) not in word_set for a in ws for b in ws
    ):
        raise NotLinear("standard array needs words closed under addition with zero")
    if n > cap:
        raise CapExceeded(f"standard array over 2**{n} words exceeds 2**{cap}")
    basis = gf2.row_basis(ws)
    check = gf2.nullspace_basis(basis, ncols=n)
    leaders: dict[Word, Word] = {}
    cosets: dict[Word, list[Word]] = {}
    for w in gf2.all_words(n, cap=cap):
        syn = gf2.matvec(check, w)
        cosets.setdefault(syn, []).append(w)
        cur = leaders.get(syn)
        if (
            cur is None
            or gf2.weight(w) < gf2.weight(cur)
            or (gf2.weight(w) == gf2.weight(cur) and w > cur)
        ):
            leaders[syn] = w
    return StandardArray(
        length=n,
        words=ws,
        check=check,
        leaders=leaders,
        cosets={s: tuple(members) for s, members in cosets.items()},
    )


# One array per distinct word set; concurrent builders may race but produce
# identical values, so a plain dict stays safe under the interpreter lock.
_ARRAY_CACHE: dict[frozenset[Word], StandardArray] = {}


def standard_array(words, cap: int = gf2.SPAN_CAP) -> StandardArray:
    key = frozenset(tuple(w) for w in words)
    hit = _ARRAY_CACHE.get(key)
    if hit is None:
        hit = build_standard_array(words, cap=cap)
        _ARRAY_CACHE[key] = hit
    return hit


def clear_array_cache() -> None:
    _ARRAY_CACHE.clear()


def coset_decode(cls: LengthClass, received: Word) -> DecodeOutcome:
    """Decode against the cached standard array of the class words."""
    return standard_array(cls.words).decode(received)


def pba_decode(received: Word, basis: Matrix) -> DecodeOutcome:
    """Project the received word onto the span of basis via the mod-2 pairing.

    The projection of a nonzero word can collapse to zero because the pairing
    is not definite; that is reported as Failed rather than decoded.
    """
    received = tuple(received)
    basis = tuple(tuple(b) for b in basis)
    if not basis:
        raise EmptyBasis("projection needs at least one basis word")
    for b in basis:
        if len(b) != len(received):
            raise LengthMismatch(
                f"basis word length {len(b)}, received length {len(received)}"
            )
    out = gf2.zeros(len(received))
    picked = []
    for b in basis:
        if pseudo_inner(received, b):
            out = gf2.xor(out, b)
            picked.append(gf2.render(b))
    trace = (f"summed {len(picked)} basis words",)
    if not any(out) and any(received):
        return DecodeOutcome(FAILED, None, METHOD_PBA, trace)
    if out == received:
        return DecodeOutcome(ACCEPTED, received, METHOD_PBA, trace)
    return DecodeOutcome(CORRECTED, out, METHOD_PBA, trace)


def pba_decode_with_retry(
    received: Word, basis: Matrix, budget: int = 8
) -> DecodeOutcome:
    """Retry a failed projection with deterministic basis changes.

    Each retry adds one basis word into another, which keeps the span while
    moving the projection. Gives up after budget attempts.
    """
    basis = [tuple(b) for b in basis]
    outcome = pba_decode(received, tuple(basis))
    attempt = 1
    while outcome.status == FAILED and attempt < budget and len(basis) > 1:
        i = (attempt - 1) % len(basis)
        j = attempt % len(basis)
        if i != j:
            basis[i] = gf2.xor(basis[i], basis[j])
        outcome = pba_decode(received, tuple(basis))
        attempt += 1
    if outcome.status == FAILED:
        return DecodeOutcome(
            FAILED, None, METHOD_PBA, outcome.trace + (f"gave up after {attempt}",)
        )
    if attempt > 1:
        return DecodeOutcome(
            outcome.status,
            outcome.word,
            METHOD_PBA,
            outcome.trace + (f"succeeded on attempt {attempt}",),
        )
    return outcome
