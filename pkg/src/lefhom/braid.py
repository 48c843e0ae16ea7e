"""Braid words, the Artin action on the free group, and quasipositive factorizations.

Letters are nonzero ints: ``i`` is the Artin generator sigma_i, ``-i`` its inverse.
Words are read left to right with the LEFTMOST letter acting first. Every
map attached to a word (the free-group action here, the homology
representation in :mod:`lefhom.milnor`) is an anti-homomorphism in this
sense: ``act(u * v) = act(v) o act(u)``.
"""

from __future__ import annotations

import os
import warnings
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exceptions import (
    IndexRangeError,
    InvalidInputError,
    ResourceLimitError,
    StrandMismatchError,
)

DEFAULT_ARTIN_CAP = 10**6
DEFAULT_ORBIT_CAP = 100_000

FreeWord = tuple[int, ...]


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def artin_length_cap() -> int:
    return _env_int("LEFHOM_ARTIN_CAP", DEFAULT_ARTIN_CAP)


def orbit_node_cap() -> int:
    return _env_int("LEFHOM_ORBIT_CAP", DEFAULT_ORBIT_CAP)


def free_reduce(letters: Iterable[int]) -> FreeWord:
    """Cancel adjacent ``x x^-1`` pairs."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise InvalidInputError("a braid needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise InvalidInputError(f"letter {x} out of range for B_{self.strands}")

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        try:
            letters = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise InvalidInputError(f"bad braid word {text!r}") from exc
        return cls(strands, letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def _check(self, other: BraidWord) -> None:
        if self.strands != other.strands:
            raise StrandMismatchError(f"B_{self.strands} vs B_{other.strands}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, p: int) -> BraidWord:
        base = self if p >= 0 else inverse(self)
        return BraidWord(self.strands, base.letters * abs(p))

    def lift(self, strands: int) -> BraidWord:
        """The same word under the inclusion B_m -> B_strands."""
        if strands < self.strands:
            raise StrandMismatchError(f"cannot push B_{self.strands} into B_{strands}")
        return BraidWord(strands, self.letters)


def sigma(i: int, strands: int) -> BraidWord:
    return BraidWord(strands, (i,))


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    u._check(v)
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-x for x in reversed(u.letters)))


def conjugate(u: BraidWord, gamma: BraidWord) -> BraidWord:
    """``gamma^-1 u gamma``."""
    u._check(gamma)
    return BraidWord(u.strands, inverse(gamma).letters + u.letters + gamma.letters)


# --- Artin action -----------------------------------------------------------


@dataclass(frozen=True)
class FreeAutomorphism:
    """Automorphism of the free group on x_1..x_m given by the images of the generators.

    Free letters use the same signed-int encoding as braid letters.
    """

    strands: int
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, strands: int) -> FreeAutomorphism:
        return cls(strands, tuple((i,) for i in range(1, strands + 1)))

    def __call__(self, word: Sequence[int], cap: int | None = None) -> FreeWord:
        return _substitute(self.images, word, cap or artin_length_cap())

    def then(self, other: FreeAutomorphism) -> FreeAutomorphism:
        """Apply ``self`` first, then ``other``."""
        if self.strands != other.strands:
            raise StrandMismatchError("automorphisms on different free groups")
        cap = artin_length_cap()
        return FreeAutomorphism(self.strands, tuple(other(img, cap) for img in self.images))

    @property
    def is_identity(self) -> bool:
        return self == FreeAutomorphism.identity(self.strands)


def _substitute(images: Sequence[FreeWord], word: Sequence[int], cap: int) -> FreeWord:
    out: list[int] = []
    for x in word:
        piece = images[x - 1] if x > 0 else tuple(-y for y in reversed(images[-x - 1]))
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
        if len(out) > cap:
            raise ResourceLimitError(f"free-group image exceeded {cap} letters")
    return tuple(out)


def _letter_images(letter: int, strands: int) -> tuple[FreeWord, ...]:
    imgs = [(j,) for j in range(1, strands + 1)]
    i = abs(letter)
    if letter > 0:
        imgs[i - 1] = (i, i + 1, -i)
        imgs[i] = (i,)
    else:
        imgs[i - 1] = (i + 1,)
        imgs[i] = (-(i + 1), i, i + 1)
    return tuple(imgs)


@lru_cache(maxsize=4096)
def _artin_images(strands: int, letters: tuple[int, ...], cap: int) -> tuple[FreeWord, ...]:
    images = tuple((j,) for j in range(1, strands + 1))
    for x in letters:
        step = _letter_images(x, strands)
        images = tuple(_substitute(step, img, cap) for img in images)
    return images


def artin_action(w: BraidWord, cap: int | None = None) -> FreeAutomorphism:
    """Faithful action of ``w`` on the free group F_m.

    sigma_i sends ``x_i -> x_i x_{i+1} x_i^-1`` and ``x_{i+1} -> x_i``. The letter
    maps are composed with the leftmost letter applied first. Raises
    :class:`ResourceLimitError` if any reduced image exceeds ``cap`` letters.
    """
    letters = free_reduce(w.letters)
    return FreeAutomorphism(w.strands, _artin_images(w.strands, letters, cap or artin_length_cap()))


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    u._check(v)
    return artin_action(u) == artin_action(v)


def is_trivial(u: BraidWord) -> bool:
    return artin_action(u).is_identity


def quasipositive_split(w: BraidWord) -> tuple[BraidWord, int] | None:
    """Return ``(gamma, i)`` if ``w`` freely reduces to ``gamma^-1 sigma_i gamma``, else ``None``."""
    red = free_reduce(w.letters)
    if len(red) % 2 == 0:
        return None
    r = len(red) // 2
    if red[r] < 0:
        return None
    if any(red[j] != -red[-1 - j] for j in range(r)):
        return None
    return BraidWord(w.strands, red[r + 1:]), red[r]


def is_syntactically_quasipositive(w: BraidWord) -> bool:
    """Literal-shape test ``gamma^-1 sigma_i gamma``. Sound but incomplete for quasipositivity."""
    return quasipositive_split(w) is not None


# --- factorizations ---------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    strands: int
    entries: tuple[BraidWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if e.strands != self.strands:
                raise StrandMismatchError(f"entry in B_{e.strands} inside a B_{self.strands} factorization")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @classmethod
    def parse(cls, text: str, strands: int) -> Factorization:
        """Entries separated by ``;``. An all-blank string is the empty factorization."""
        if not text.strip():
            return cls(strands, ())
        return cls(strands, tuple(BraidWord.parse(chunk, strands) for chunk in text.split(";")))

    def __str__(self) -> str:
        return "; ".join(str(e) for e in self.entries)

    def lift(self, strands: int) -> Factorization:
        return Factorization(strands, tuple(e.lift(strands) for e in self.entries))

    def append(self, *words: BraidWord) -> Factorization:
        return Factorization(self.strands, self.entries + tuple(words))

    def key(self) -> tuple[tuple[FreeWord, ...], ...]:
        """Identifies factorizations that agree entrywise as braids."""
        return tuple(artin_action(e).images for e in self.entries)


def product(f: Factorization) -> BraidWord:
    return BraidWord(f.strands, tuple(x for e in f.entries for x in e.letters))


def _check_move_index(f: Factorization, j: int) -> None:
    if not 1 <= j < len(f):
        raise IndexRangeError(f"Hurwitz index {j} outside 1..{len(f) - 1}")


def hurwitz_move(f: Factorization, j: int) -> Factorization:
    """``(.., a, b, ..) -> (.., a b a^-1, a, ..)`` at positions j, j+1 (1-based)."""
    _check_move_index(f, j)
    e = list(f.entries)
    a, b = e[j - 1], e[j]
    e[j - 1], e[j] = conjugate(b, inverse(a)), a
    return Factorization(f.strands, tuple(e))


def hurwitz_move_inverse(f: Factorization, j: int) -> Factorization:
    """``(.., a, b, ..) -> (.., b, b^-1 a b, ..)``."""
    _check_move_index(f, j)
    e = list(f.entries)
    a, b = e[j - 1], e[j]
    e[j - 1], e[j] = b, conjugate(a, b)
    return Factorization(f.strands, tuple(e))


def global_conjugate(f: Factorization, gamma: BraidWord) -> Factorization:
    return Factorization(f.strands, tuple(conjugate(e, gamma) for e in f.entries))


def partial_twist(f: Factorization, first: int, last: int, gamma: BraidWord) -> Factorization:
    """Conjugate entries ``first..last`` (1-based, inclusive) by ``gamma``.

    ``last == first - 1`` denotes the empty range.
    """
    if not (1 <= first <= last + 1 <= len(f) + 1):
        raise IndexRangeError(f"invalid range {first}..{last} for {len(f)} entries")
    e = list(f.entries)
    for i in range(first - 1, last):
        e[i] = conjugate(e[i], gamma)
    return Factorization(f.strands, tuple(e))


def hurwitz_orbit(f: Factorization, depth: int, max_nodes: int | None = None) -> set:
    """Keys reachable from ``f`` by at most ``depth`` Hurwitz moves or inverse moves.

    Nodes are deduplicated by :meth:`Factorization.key`. Exceeding ``max_nodes``
    distinct keys raises :class:`ResourceLimitError`.
    """
    if depth < 0:
        raise InvalidInputError("depth must be non-negative")
    cap = max_nodes or orbit_node_cap()
    seen = {f.key()}
    frontier = deque([(f, 0)])
    while frontier:
        g, d = frontier.popleft()
        if d == depth:
            continue
        for j in range(1, len(g)):
            for move in (hurwitz_move, hurwitz_move_inverse):
                h = move(g, j)
                k = h.key()
                if k in seen:
                    continue
                seen.add(k)
                if len(seen) > cap:
                    raise ResourceLimitError(f"Hurwitz orbit exceeded {cap} nodes")
                frontier.append((h, d + 1))
    return seen


# --- the 4-braids used for the exotic fillings -------------------------------


def beta_generators() -> tuple[BraidWord, BraidWord, BraidWord, BraidWord]:
    """Return ``(beta_1, beta_2, beta_3, beta)`` in B_4.

    beta_1 = s3^-2 s1^-1 s2 s1 s3^2, beta_2 = s2, beta_3 = s3^2 s1 s2 s1^-1 s3^-2,
    beta = s3. The half twist beta commutes with beta_1 beta_2 beta_3.
    """
    b1 = BraidWord(4, (-3, -3, -1, 2, 1, 3, 3))
    b2 = BraidWord(4, (2,))
    b3 = BraidWord(4, (3, 3, 1, 2, -1, -3, -3))
    return b1, b2, b3, BraidWord(4, (3,))


def beta_kl(k: int, l: int) -> Factorization:
    """Factorization ``(b^-k b1 b^k, b^-k b2 b^k, b^-k b3 b^k, b2, ..., b2)`` with l copies of b2."""
    if k < 0 or l < 1:
        warnings.warn(f"beta_kl({k}, {l}) is outside k >= 0, l >= 1", stacklevel=2)
    b1, b2, b3, b = beta_generators()
    base = Factorization(4, (b1, b2, b3) + (b2,) * max(l, 0))
    return partial_twist(base, 1, 3, b ** k)
