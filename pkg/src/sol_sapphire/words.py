"""Free group words and finitely presented groups

Generators are referenced by index; a letter is a pair (generator, sign) with
sign +1 or -1. Labels only live on Presentation and are used for text output.
"""
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, MatrixParseError

Letter = tuple[int, int]

_TOKEN = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise DomainError(f"letter exponent must be +1 or -1, got {sign}")
        if gen < 0:
            raise DomainError(f"generator index must be non-negative, got {gen}")
        if stack and stack[-1] == (gen, -sign):
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """Freely reduced word; the empty word is the identity"""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @classmethod
    def generator(cls, gen: int) -> "Word":
        return cls(((gen, 1),))

    @classmethod
    def power(cls, gen: int, exponent: int) -> "Word":
        """
        Build gen^exponent.

        Args:
            gen: Generator index
            exponent: Any integer; 0 gives the identity

        Returns:
            Reduced word
        """
        sign = 1 if exponent >= 0 else -1
        return cls(((gen, sign),) * abs(exponent))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else invert(self)
        return Word(base.letters * abs(exponent))


def reduce(letters: Iterable[Letter]) -> Word:
    """Free reduction of a raw letter sequence"""
    return Word(tuple(letters))


def concat(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def invert(u: Word) -> Word:
    return Word(tuple((gen, -sign) for gen, sign in reversed(u.letters)))


def conjugate(u: Word, by: Word) -> Word:
    """Return by * u * by^-1"""
    return Word(by.letters + u.letters + invert(by).letters)


def exponent_sums(w: Word, generator_count: int) -> np.ndarray:
    """
    Signed count of each generator in a word.

    Args:
        w: Word
        generator_count: Length of the returned vector

    Returns:
        Object-dtype integer vector; entry g is the exponent sum of generator g
    """
    sums = np.zeros(generator_count, dtype=object)
    for gen, sign in w.letters:
        if gen >= generator_count:
            raise DomainError(f"generator {gen} outside alphabet of size {generator_count}")
        sums[gen] += sign
    return sums


def format_word(w: Word, names: Sequence[str]) -> str:
    """
    Render a word as juxtaposed tokens, e.g. ``a b^-1 c^2``.

    Args:
        w: Word
        names: Generator labels

    Returns:
        Text form; the identity renders as ``1``
    """
    if w.is_identity:
        return "1"
    tokens = []
    runs: list[list[int]] = []
    for gen, sign in w.letters:
        if runs and runs[-1][0] == gen:
            runs[-1][1] += sign
        else:
            runs.append([gen, sign])
    for gen, exponent in runs:
        tokens.append(names[gen] if exponent == 1 else f"{names[gen]}^{exponent}")
    return " ".join(tokens)


def parse_word(text: str, names: Sequence[str]) -> Word:
    """
    Parse the text form produced by format_word.

    Args:
        text: Whitespace separated tokens ``name`` or ``name^k``; ``1`` is the identity
        names: Generator labels

    Returns:
        Reduced word
    """
    index = {name: i for i, name in enumerate(names)}
    letters: list[Letter] = []
    for token in text.split():
        if token == "1":
            continue
        match = _TOKEN.match(token)
        if match is None or match.group(1) not in index:
            raise MatrixParseError(f"cannot parse word token {token!r}")
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        letters.extend(Word.power(index[match.group(1)], exponent).letters)
    return Word(tuple(letters))


@dataclass(frozen=True)
class Presentation:
    """Finitely presented group <generators | relators>"""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        object.__setattr__(self, "relators", tuple(self.relators))
        for relator in self.relators:
            for gen, _ in relator.letters:
                if gen >= self.generator_count:
                    raise DomainError(
                        f"relator uses generator {gen} but only "
                        f"{self.generator_count} generators exist"
                    )

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def relation_matrix(self) -> np.ndarray:
        """Rows are the exponent sums of the relators (abelianisation)"""
        rows = [list(exponent_sums(r, self.generator_count)) for r in self.relators]
        return np.array(rows, dtype=object).reshape(len(rows), self.generator_count)

    def format(self) -> str:
        gens = ", ".join(self.generator_names)
        rels = ", ".join(format_word(r, self.generator_names) for r in self.relators)
        return f"< {gens} | {rels} >"
