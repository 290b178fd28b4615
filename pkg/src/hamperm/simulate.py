"""
End-to-end channel model: a codeword from a minimum-distance permutation code
is sent over several channels, each introducing at most r Hamming errors,
all channel outputs are distinct, and an intersection decoder recovers the
codeword from the outputs.

One more channel than the largest two-ball intersection guarantees unique
decoding; :func:`adversarial_witness` materializes the matching tight
instance where that many outputs still leave two consistent codewords.

Randomness: every draw comes from a PCG64 generator seeded through
``SeedSequence((seed, channel))``, so transcripts depend only on the seed
and channel index, never on execution order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .counting import ball_size, sphere_size
from .oracle import (
    DEFAULT_BALL_CAP,
    RESAMPLE_LIMIT,
    CapExceededError,
    canonical_of_type,
    capacity_fast,
    witness_intersection,
)
from .perms import Perm, hamming_distance, identity, validate


@dataclass(frozen=True)
class Codebook:
    """Permutations of {1..n} with pairwise Hamming distance >= d."""

    n: int
    d: int
    words: tuple[Perm, ...]

    def __post_init__(self):
        ok, pair = validate_code(self.words, self.d)
        if not ok:
            raise ValueError(f"codebook violates minimum distance {self.d}: {pair}")


@dataclass(frozen=True)
class ChannelTranscript:
    codeword: Perm
    r: int
    seed: int
    outputs: tuple[Perm, ...]
    attempts: tuple[int, ...]  # draws needed per channel, collisions included


@dataclass(frozen=True)
class DecodeResult:
    candidates: tuple[Perm, ...]
    unique: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "unique", len(self.candidates) == 1)


def validate_code(words, d: int) -> tuple[bool, tuple[Perm, Perm] | None]:
    """True iff all pairwise distances are >= d; else the first bad pair."""
    words = [tuple(w) for w in words]
    sizes = {len(w) for w in words}
    if len(sizes) > 1:
        raise ValueError(f"codewords of mixed sizes: {sorted(sizes)}")
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            if hamming_distance(words[a], words[b]) < d:
                return False, (words[a], words[b])
    return True, None


def greedy_code(n: int, d: int, cap: int | None = DEFAULT_BALL_CAP) -> Codebook:
    """
    Lexicographic greedy code: scan all permutations of {1..n} in one-line
    lexicographic order and keep each one at distance >= d from everything
    kept so far.  Deterministic, and always contains the identity.
    """
    if not 2 <= d <= n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    total = ball_size(n, n)
    if cap is not None and total > cap:
        raise CapExceededError(f"greedy scan over Sym_{n}", total, cap)
    kept: list[Perm] = []
    threshold = n - d  # accept iff no kept word agrees in more than this many positions
    for candidate in permutations(range(1, n + 1)):
        if all(_agreements_at_most(candidate, w, threshold) for w in kept):
            kept.append(candidate)
    return Codebook(n=n, d=d, words=tuple(kept))


def _agreements_at_most(p: Perm, q: Perm, limit: int) -> bool:
    agree = 0
    for a, b in zip(p, q):
        if a == b:
            agree += 1
            if agree > limit:
                return False
    return True


def load_codebook(path) -> Codebook:
    """Read "n d" on the first line, then one permutation per line."""
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError("first line must be 'n d'")
        n, d = int(header[0]), int(header[1])
        words = []
        for line_no, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            word = validate([int(tok) for tok in line.split()])
            if len(word) != n:
                raise ValueError(f"line {line_no}: expected {n} labels")
            words.append(word)
    return Codebook(n=n, d=d, words=tuple(words))


def save_codebook(code: Codebook, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{code.n} {code.d}\n")
        for word in code.words:
            fh.write(" ".join(str(v) for v in word) + "\n")


def channel_rng(seed: int, channel: int) -> np.random.Generator:
    """The substream for one channel; depends only on (seed, channel)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, channel))))


def derived_seed(seed: int, index: int) -> int:
    """A follow-on 64-bit seed for trial number ``index`` under a master seed."""
    return int(np.random.SeedSequence((seed, index)).generate_state(1, np.uint64)[0])


def sample_in_ball(center: Perm, r: int, rng: np.random.Generator) -> Perm:
    """
    One permutation drawn uniformly from the radius-r ball around ``center``:
    pick the error weight in proportion to sphere sizes, the moved labels
    uniformly, and the fixed-point-free image by rejection.
    """
    n = len(center)
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    total = ball_size(n, r)
    pick = _uniform_index(rng, total)
    weight = 0
    acc = 1
    while pick >= acc:
        weight += 1
        acc += sphere_size(n, weight)
    if weight == 0:
        return center
    moved = np.sort(rng.choice(n, size=weight, replace=False))
    while True:
        image = rng.permutation(weight)
        if not np.any(image == np.arange(weight)):
            break
    out = list(center)
    for slot, target in zip(moved, image):
        out[slot] = center[moved[target]]
    return tuple(out)


def _uniform_index(rng: np.random.Generator, total: int) -> int:
    if total <= 1 << 62:
        return int(rng.integers(total))
    # past int64 range, fall back to a double; the bias is ~2^-52
    return min(int(rng.random() * total), total - 1)


def transmit(codeword: Perm, channels: int, r: int, seed: int) -> ChannelTranscript:
    """
    Send ``codeword`` over ``channels`` independent channels with at most r
    errors each.  Outputs are pairwise distinct: a channel that collides with
    an earlier one redraws from its own substream (zero errors are allowed,
    so the codeword itself can be an output).
    """
    n = len(codeword)
    capacity = ball_size(n, r)
    if channels > capacity:
        raise ValueError(f"{channels} distinct outputs impossible: ball has {capacity} elements")
    outputs: list[Perm] = []
    attempts: list[int] = []
    taken: set[Perm] = set()
    for channel in range(channels):
        rng = channel_rng(seed, channel)
        for attempt in range(1, RESAMPLE_LIMIT + 1):
            draw = sample_in_ball(codeword, r, rng)
            if draw not in taken:
                break
        else:
            raise RuntimeError(f"channel {channel}: no fresh output after {RESAMPLE_LIMIT} draws")
        taken.add(draw)
        outputs.append(draw)
        attempts.append(attempt)
    return ChannelTranscript(
        codeword=tuple(codeword),
        r=r,
        seed=seed,
        outputs=tuple(outputs),
        attempts=tuple(attempts),
    )


def decode(outputs, code: Codebook, r: int) -> DecodeResult:
    """
    Intersection decoding: keep every codeword whose radius-r ball contains
    all outputs.  An empty candidate list signals inconsistent inputs and is
    returned, not raised.
    """
    outputs = [tuple(o) for o in outputs]
    if not outputs:
        raise ValueError("need at least one channel output")
    candidates = tuple(
        word
        for word in code.words
        if all(hamming_distance(word, out) <= r for out in outputs)
    )
    return DecodeResult(candidates=candidates)


def adversarial_witness(r: int, parity: str) -> tuple[Perm, Perm, list[Perm]]:
    """
    A tight instance for center distance d = 2r ("even") or 2r-1 ("odd"):
    the identity, a second center of the intersection-maximizing cycle type,
    and the full list of permutations lying in both radius-r balls.  Feeding
    exactly these outputs to the decoder leaves both centers as candidates,
    so that many channels cannot suffice.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if r < 4:
        raise ValueError(f"witness construction needs r >= 4, got {r}")
    d = 2 * r if parity == "even" else 2 * r - 1
    n = 2 * r
    best = capacity_fast(r, d)
    c1 = identity(n)
    c2 = canonical_of_type(best.witness_type, n)
    outputs = witness_intersection(c1, c2, r)
    assert len(outputs) == best.value
    return c1, c2, outputs


def transcript_to_json_dict(transcript: ChannelTranscript, result: DecodeResult | None = None) -> dict:
    """Stable JSON shape for one transmission, with the decode outcome if given."""
    doc = {
        "seed": transcript.seed,
        "codeword": list(transcript.codeword),
        "r": transcript.r,
        "outputs": [list(o) for o in transcript.outputs],
        "attempts": list(transcript.attempts),
    }
    if result is not None:
        doc["candidates"] = [list(c) for c in result.candidates]
        doc["unique"] = result.unique
    return doc


def run_trials(
    code: Codebook, channels: int, r: int, trials: int, seed: int, keep_transcripts: bool = False
) -> dict:
    """
    Seeded decoding trials: trial k transmits codeword k mod |code| with its
    own derived seed, then decodes against the whole codebook.  Raises if a
    transmitted codeword ever fails to appear among the candidates.
    """
    unique = 0
    correct = 0
    max_attempts = 0
    transcripts: list[dict] = []
    for trial in range(trials):
        word = code.words[trial % len(code.words)]
        transcript = transmit(word, channels, r, derived_seed(seed, trial))
        max_attempts = max(max_attempts, max(transcript.attempts))
        result = decode(transcript.outputs, code, r)
        if word not in result.candidates:
            raise AssertionError(
                f"soundness violation at trial {trial}: {word} not among candidates"
            )
        if keep_transcripts:
            transcripts.append(transcript_to_json_dict(transcript, result))
        if result.unique:
            unique += 1
            if result.candidates[0] == word:
                correct += 1
    summary = {
        "trials": trials,
        "channels": channels,
        "unique": unique,
        "correct": correct,
        "max_attempts": max_attempts,
        "codebook_size": len(code.words),
    }
    if keep_transcripts:
        summary["transcripts"] = transcripts
    return summary
