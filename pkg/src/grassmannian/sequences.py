"""Positive roots, the Ψ-weighted order and iterated sequences for Gr(k, n)."""
import itertools
import json
import logging
import random
from functools import cmp_to_key
from typing import Iterable, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..errors import InvalidInputError, InvalidSequenceError

logger = logging.getLogger(__name__)

ExponentVector = Tuple[int, ...]
Step = Tuple[int, ...]


class PositiveRoot(BaseModel):
    """The positive root ε_i − ε_j (i < j); also labels the operator f_{i,j}."""
    model_config = ConfigDict(frozen=True)

    i: int = Field(..., ge=1, description="Index whose basis vector is lowered")
    j: int = Field(..., ge=2, description="Index the basis vector is lowered to")

    def __str__(self):
        return f"e{self.i}-e{self.j}"


class IteratedSequence(BaseModel):
    """An iterated birational sequence S = (β_1, ..., β_d) for Gr(k, n).

    ``steps`` lists one index tuple per level, from level n down to k+1.
    ``roots`` is the concatenation of the level blocks in the same order.
    Build instances with :func:`build_iterated_sequence`.
    """
    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    steps: Tuple[Step, ...]
    roots: Tuple[PositiveRoot, ...]

    @property
    def d(self) -> int:
        return len(self.roots)

    def levels(self) -> List[int]:
        """Levels in step order (n, n-1, ..., k+1)."""
        return list(range(self.n, self.k, -1))

    def block(self, level: int) -> Tuple[PositiveRoot, ...]:
        """Roots contributed by the given level."""
        offset = (self.n - level) * self.k
        return self.roots[offset:offset + self.k]

    def heights(self) -> Tuple[int, ...]:
        return tuple(height(root) for root in self.roots)

    def __str__(self):
        return format_sequence(self)


def height(root: PositiveRoot) -> int:
    """height(ε_i − ε_j) = j − i."""
    return root.j - root.i


def _check_length(m: Sequence[int], S: IteratedSequence):
    if len(m) != S.d:
        raise InvalidInputError(
            f"exponent vector has length {len(m)}, sequence has d={S.d}"
        )


def psi_weight(m: Sequence[int], S: IteratedSequence) -> int:
    """Ψ_S(m) = Σ m_t · height(β_t)."""
    _check_length(m, S)
    return sum(mt * height(root) for mt, root in zip(m, S.roots))


def psi_key(m: Sequence[int], S: IteratedSequence) -> Tuple:
    """Sort key realising ≺_Ψ: smaller Ψ first, ties broken by larger lex first."""
    return (psi_weight(m, S), tuple(-x for x in m))


def psi_compare(a: Sequence[int], b: Sequence[int], S: IteratedSequence) -> int:
    """Compare two exponent vectors under ≺_Ψ.

    Returns -1 when a ≺_Ψ b, 0 when a = b and 1 when b ≺_Ψ a.
    """
    _check_length(b, S)
    key_a, key_b = psi_key(a, S), psi_key(b, S)
    if key_a < key_b:
        return -1
    if key_a > key_b:
        return 1
    return 0


def psi_min(vectors: Iterable[Sequence[int]], S: IteratedSequence) -> ExponentVector:
    """≺_Ψ-minimum of a nonempty collection of exponent vectors."""
    candidates = [tuple(v) for v in vectors]
    if not candidates:
        raise InvalidInputError("cannot take the minimum of an empty set")
    return min(candidates, key=lambda v: psi_key(v, S))


def psi_sorted(vectors: Iterable[Sequence[int]], S: IteratedSequence) -> List[ExponentVector]:
    """Vectors sorted ascending under ≺_Ψ."""
    return sorted((tuple(v) for v in vectors), key=cmp_to_key(lambda a, b: psi_compare(a, b, S)))


def _validate_steps(k: int, n: int, steps: Sequence[Sequence[int]]) -> Tuple[Step, ...]:
    if k < 1 or n <= k:
        raise InvalidSequenceError(f"need n > k >= 1, got k={k}, n={n}")
    if len(steps) != n - k:
        raise InvalidSequenceError(
            f"expected {n - k} steps for levels {n}..{k + 1}, got {len(steps)}"
        )

    normalized = []
    for level, step in zip(range(n, k, -1), steps):
        step = tuple(int(x) for x in step)
        if len(step) != k:
            raise InvalidSequenceError(f"step at level {level} must have {k} indices: {step}")
        if len(set(step)) != k:
            raise InvalidSequenceError(f"repeated index in step at level {level}: {step}")
        for index in step:
            if not 1 <= index <= level - 1:
                raise InvalidSequenceError(
                    f"index {index} at level {level} outside [1, {level - 1}]"
                )
        normalized.append(step)

    base = normalized[-1]
    if sorted(base) != list(range(1, k + 1)):
        raise InvalidSequenceError(f"base step {base} is not a permutation of [{k}]")
    return tuple(normalized)


def build_iterated_sequence(k: int, n: int, steps: Sequence[Sequence[int]]) -> IteratedSequence:
    """Validate level steps and assemble the root sequence block by block."""
    normalized = _validate_steps(k, n, steps)
    roots = tuple(
        PositiveRoot(i=index, j=level)
        for level, step in zip(range(n, k, -1), normalized)
        for index in step
    )
    return IteratedSequence(k=k, n=n, steps=normalized, roots=roots)


def extend_sequence(S: IteratedSequence, step: Sequence[int]) -> IteratedSequence:
    """Prepend a level-(n+1) block, giving an iterated sequence for Gr(k, n+1)."""
    return build_iterated_sequence(S.k, S.n + 1, (tuple(step),) + S.steps)


def truncate_sequence(S: IteratedSequence) -> IteratedSequence:
    """Drop the top level block, giving the sequence for Gr(k, n-1)."""
    if S.n - 1 <= S.k:
        raise InvalidSequenceError("the base sequence cannot be truncated further")
    return build_iterated_sequence(S.k, S.n - 1, S.steps[1:])


def enumerate_iterated_sequences(k: int = 2, n: int = 3) -> Iterator[IteratedSequence]:
    """Every iterated sequence for Gr(2, n) with a PBW-type base block."""
    if k != 2:
        raise InvalidInputError("enumeration is only supported for k=2")
    if n < 3:
        raise InvalidInputError(f"enumeration needs n >= 3, got {n}")

    # at level 3 the ordered pairs from [2] are exactly the PBW base blocks
    per_level = [list(itertools.permutations(range(1, level), 2)) for level in range(n, 2, -1)]
    for steps in itertools.product(*per_level):
        yield build_iterated_sequence(2, n, steps)


def count_iterated_sequences(n: int) -> int:
    """Π_{l=3}^{n} (l-1)(l-2): the number of k=2 iterated sequences."""
    total = 1
    for level in range(3, n + 1):
        total *= (level - 1) * (level - 2)
    return total


def sample_iterated_sequences(k: int, n: int, count: int, seed: int) -> List[IteratedSequence]:
    """Draw ``count`` iterated sequences uniformly per level with a seeded generator."""
    if count < 0:
        raise InvalidInputError("sample size must be non-negative")
    rng = random.Random(seed)
    logger.debug(f"Sampling {count} sequences for Gr({k},{n}) with seed {seed}")

    samples = []
    for _ in range(count):
        steps = [tuple(rng.sample(range(1, level), k)) for level in range(n, k + 1, -1)]
        steps.append(tuple(rng.sample(range(1, k + 1), k)))
        samples.append(build_iterated_sequence(k, n, steps))
    return samples


def format_sequence(S: IteratedSequence) -> str:
    """Text form ``k=2 n=6 steps=4.5;2.3;2.3;1.2``."""
    steps = ";".join(".".join(str(i) for i in step) for step in S.steps)
    return f"k={S.k} n={S.n} steps={steps}"


def format_roots(S: IteratedSequence) -> str:
    return " ".join(str(root) for root in S.roots)


def sequence_to_dict(S: IteratedSequence) -> dict:
    return {"k": S.k, "n": S.n, "steps": [list(step) for step in S.steps]}


def parse_steps(text: str) -> List[Step]:
    """Parse ``4.5;2.3;2.3;1.2`` into index tuples."""
    try:
        return [tuple(int(x) for x in chunk.split(".")) for chunk in text.strip().split(";") if chunk]
    except ValueError as e:
        raise InvalidSequenceError(f"cannot parse steps '{text}': {e}") from e


def parse_sequence(text: str) -> IteratedSequence:
    """Parse either the text form or the JSON form of an iterated sequence."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
            return build_iterated_sequence(int(data["k"]), int(data["n"]), data["steps"])
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise InvalidSequenceError(f"malformed sequence JSON: {e}") from e

    fields = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep:
            raise InvalidSequenceError(f"expected key=value, got '{token}'")
        fields[key] = value
    if "steps" not in fields:
        raise InvalidSequenceError("sequence text needs a steps= field")

    steps = parse_steps(fields["steps"])
    try:
        k = int(fields.get("k", len(steps[0]) if steps else 2))
        n = int(fields.get("n", k + len(steps)))
    except ValueError as e:
        raise InvalidSequenceError(f"k and n must be integers: {e}") from e
    return build_iterated_sequence(k, n, steps)
