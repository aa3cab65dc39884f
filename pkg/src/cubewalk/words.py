"""Signed words over a finite ordered alphabet.

A letter is a nonzero int: +(i+1) is the i-th generator, -(i+1) its inverse.
A word is a tuple of letters. Serialization uses the space-separated form
"a b a^-1 c" with generator names supplied by the complex.
"""

from __future__ import annotations

from .errors import UsageError

Letter = int
Word = tuple[int, ...]

EMPTY: Word = ()


def gen_index(letter: Letter) -> int:
    return abs(letter) - 1


def inverse_word(word) -> Word:
    return tuple(-x for x in reversed(word))


def parse_word(text: str, names: tuple[str, ...]) -> Word:
    """Parse "a b^-1 c" into signed letters; empty/"e" means the identity."""
    index = {name: i + 1 for i, name in enumerate(names)}
    out = []
    text = text.strip()
    if not text or text == "e":
        return EMPTY
    for tok in text.split():
        name, _, power = tok.partition("^")
        if name not in index:
            raise UsageError(f"unknown generator {name!r} (alphabet: {', '.join(names)})")
        if power in ("", "1"):
            exp = 1
        else:
            try:
                exp = int(power)
            except ValueError as err:
                raise UsageError(f"bad exponent in token {tok!r}") from err
        if exp == 0:
            continue
        sign = 1 if exp > 0 else -1
        out.extend([sign * index[name]] * abs(exp))
    return tuple(out)


def format_word(word, names: tuple[str, ...]) -> str:
    """Inverse of parse_word; the identity renders as "e"."""
    if not word:
        return "e"
    toks = []
    for letter in word:
        name = names[gen_index(letter)]
        toks.append(name if letter > 0 else name + "^-1")
    return " ".join(toks)
