"""Memoryless bit-flip channel over an n-code with decoy components.

A key names which components carry payload; every other component is filled
with a random valid codeword each frame so all components look alike on the
wire. Every random draw comes from a stream seeded by (seed, frame, purpose),
so results do not depend on execution order or thread count.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import gf2
from .core import SetCode
from .decoding import (
    DecodeOutcome,
    coset_decode,
    nn_decode,
    pba_decode_with_retry,
    standard_array,
)
from .errors import KeyOutOfRange, NoSuchLength, NotACodeword, PatternMismatch
from .gf2 import Word
from .ncode import NWord, SetNCode


@dataclass(frozen=True)
class ChannelConfig:
    """Flip probability, stream seed, and how many frames to push through."""

    flip_probability: float
    seed: int
    frames: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.flip_probability < 1.0:
            raise ValueError("flip probability must sit in [0, 1)")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        if self.frames <= 0:
            raise ValueError("need at least one frame")


@dataclass(frozen=True)
class ObfuscationKey:
    """1-based component indices that carry real payload."""

    carrier_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = tuple(self.carrier_indices)
        if not idx:
            raise KeyOutOfRange("key needs at least one carrier")
        if any(i < 1 for i in idx) or any(a >= b for a, b in zip(idx, idx[1:])):
            raise KeyOutOfRange("carrier indices must be strictly increasing from 1")
        object.__setattr__(self, "carrier_indices", idx)

    def validate_for(self, arity: int) -> None:
        if self.carrier_indices[-1] > arity:
            raise KeyOutOfRange(
                f"carrier {self.carrier_indices[-1]} outside 1..{arity}"
            )


def _stream(seed: int, frame: int, purpose: str) -> random.Random:
    # String seeding hashes the bytes, so streams stay stable across runs.
    return random.Random(f"{seed}:{frame}:{purpose}")


def _component_words(comp: SetCode) -> tuple[Word, ...]:
    return tuple(sorted(comp.all_words()))


def build_frame(
    ncode: SetNCode,
    key: ObfuscationKey,
    payload: tuple[Word, ...],
    seed: int,
    frame: int,
) -> NWord:
    """Place payload at the carriers and a random codeword at every decoy."""
    key.validate_for(ncode.arity)
    if len(payload) != len(key.carrier_indices):
        raise PatternMismatch(
            f"{len(payload)} payload parts for {len(key.carrier_indices)} carriers"
        )
    carriers = dict(zip(key.carrier_indices, payload))
    rng = _stream(seed, frame, "decoys")
    parts: list[Word | None] = []
    for i, comp in enumerate(ncode.components, start=1):
        if i in carriers:
            w = tuple(carriers[i])
            try:
                member = comp.class_of(len(w)).contains(w)
            except NoSuchLength:
                member = False
            if not member:
                raise NotACodeword(
                    f"payload {gf2.render(w)} is not a codeword of component {i}"
                )
            parts.append(w)
        else:
            parts.append(rng.choice(_component_words(comp)))
    return NWord(tuple(parts))


def corrupt(nw: NWord, p: float, seed: int, frame: int) -> NWord:
    """Flip each present bit independently with probability p."""
    parts: list[Word | None] = []
    for i, part in enumerate(nw.parts, start=1):
        if part is None:
            parts.append(None)
            continue
        rng = _stream(seed, frame, f"{i}:noise")
        parts.append(tuple(b ^ (rng.random() < p) for b in part))
    return NWord(tuple(parts))


def receive(
    ncode: SetNCode, key: ObfuscationKey, frame: NWord, method: str = "coset"
) -> tuple[DecodeOutcome, ...]:
    """Decode only the carrier parts, in carrier order."""
    key.validate_for(ncode.arity)
    if frame.arity != ncode.arity:
        raise PatternMismatch(
            f"frame has {frame.arity} parts, code has {ncode.arity} components"
        )
    picked = []
    for i in key.carrier_indices:
        part = frame.parts[i - 1]
        if part is None:
            raise PatternMismatch(f"carrier {i} is absent from the frame")
        picked.append(_decode_part(ncode.components[i - 1], part, method))
    return tuple(picked)


def expected_correction_rate(words, p: float) -> float:
    """Exact chance that coset decoding undoes a memoryless corruption."""
    return standard_array(words).expected_correction_rate(p)


@dataclass(frozen=True)
class ComponentStats:
    """Exact counters for one component across a run."""

    component: int
    carrier: bool
    frames: int
    corrupted: int
    detected: int
    undetected: int
    corrected: int | None

    @property
    def detection_rate(self) -> float:
        # Vacuously perfect when nothing was corrupted.
        return self.detected / self.corrupted if self.corrupted else 1.0

    @property
    def undetected_rate(self) -> float:
        return self.undetected / self.frames

    @property
    def correction_rate(self) -> float | None:
        if self.corrected is None:
            return None
        return self.corrected / self.frames


@dataclass(frozen=True)
class SimulationResult:
    flip_probability: float
    seed: int
    frames: int
    method: str
    carrier_indices: tuple[int, ...]
    components: tuple[ComponentStats, ...]


def _decode_part(comp: SetCode, part: Word, method: str) -> DecodeOutcome:
    cls = comp.class_of(len(part))
    if method == "nn":
        return nn_decode(cls, part)
    if method == "coset":
        return coset_decode(cls, part)
    if method == "pba":
        return pba_decode_with_retry(part, cls.basis())
    raise ValueError(f"unknown method {method!r}")


def _run_chunk(
    ncode: SetNCode,
    key: ObfuscationKey,
    config: ChannelConfig,
    method: str,
    start: int,
    stop: int,
) -> list[list[int]]:
    # counters per component: corrupted, detected, undetected, corrected
    counts = [[0, 0, 0, 0] for _ in ncode.components]
    carrier_set = set(key.carrier_indices)
    comp_words = [_component_words(c) for c in ncode.components]
    for frame in range(start, stop):
        rng = _stream(config.seed, frame, "payload")
        payload = tuple(
            rng.choice(comp_words[i - 1]) for i in key.carrier_indices
        )
        sent = build_frame(ncode, key, payload, config.seed, frame)
        got = corrupt(sent, config.flip_probability, config.seed, frame)
        flags = ncode.detect(got)
        for idx, (sent_part, got_part) in enumerate(zip(sent.parts, got.parts)):
            c = counts[idx]
            if got_part != sent_part:
                c[0] += 1
                if flags[idx]:
                    c[2] += 1
                else:
                    c[1] += 1
            if idx + 1 in carrier_set:
                out = _decode_part(ncode.components[idx], got_part, method)
                if out.ok and out.word == sent_part:
                    c[3] += 1
    return counts


def run_simulation(
    ncode: SetNCode,
    key: ObfuscationKey,
    config: ChannelConfig,
    method: str = "coset",
    threads: int = 1,
) -> SimulationResult:
    """Push frames through the channel and tally exact counters.

    Frame streams are independent, so splitting the range across threads
    cannot change any count.
    """
    key.validate_for(ncode.arity)
    if threads < 1:
        raise ValueError("need at least one thread")
    if method == "coset":
        # Warm the shared arrays before fanning out.
        for comp in ncode.components:
            for cls in comp.classes:
                standard_array(cls.words)
    chunks = []
    step = (config.frames + threads - 1) // threads
    for start in range(0, config.frames, step):
        chunks.append((start, min(start + step, config.frames)))
    if threads == 1:
        results = [
            _run_chunk(ncode, key, config, method, a, b) for a, b in chunks
        ]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(
                    lambda ab: _run_chunk(ncode, key, config, method, *ab), chunks
                )
            )
    totals = [[0, 0, 0, 0] for _ in ncode.components]
    for chunk in results:
        for idx, c in enumerate(chunk):
            for f in range(4):
                totals[idx][f] += c[f]
    carrier_set = set(key.carrier_indices)
    stats = tuple(
        ComponentStats(
            component=idx + 1,
            carrier=idx + 1 in carrier_set,
            frames=config.frames,
            corrupted=c[0],
            detected=c[1],
            undetected=c[2],
            corrected=c[3] if idx + 1 in carrier_set else None,
        )
        for idx, c in enumerate(totals)
    )
    return SimulationResult(
        flip_probability=config.flip_probability,
        seed=config.seed,
        frames=config.frames,
        method=method,
        carrier_indices=key.carrier_indices,
        components=stats,
    )


def format_simulation(result: SimulationResult) -> str:
    """Fixed-format text block with six decimal places on every rate."""
    lines = [
        f"frames {result.frames}",
        f"seed {result.seed}",
        f"flip_probability {result.flip_probability:.6f}",
        f"method {result.method}",
        "carriers " + ",".join(str(i) for i in result.carrier_indices),
    ]
    for comp in result.components:
        role = "carrier" if comp.carrier else "decoy"
        lines.append(f"component {comp.component} {role}")
        lines.append(f"  corrupted {comp.corrupted}")
        lines.append(f"  detected {comp.detected}")
        lines.append(f"  undetected {comp.undetected}")
        lines.append(f"  detection_rate {comp.detection_rate:.6f}")
        lines.append(f"  undetected_rate {comp.undetected_rate:.6f}")
        if comp.corrected is not None:
            lines.append(f"  corrected {comp.corrected}")
            lines.append(f"  correction_rate {comp.correction_rate:.6f}")
    return "\n".join(lines)
