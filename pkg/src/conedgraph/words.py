"""Free-group word arithmetic over the basis {a, b, c}.

Words are plain Python strings: lowercase letters are generators and
uppercase letters are their inverses, so ``"aBc"`` is a * b^-1 * c.
Every function here that returns a word returns it freely reduced.
"""

from __future__ import annotations

from typing import NamedTuple

ALPHABET = "abcABC"
IDENTITY = ""

_INVERSE = str.maketrans("abcABC", "ABCabc")


class WordParseError(ValueError):
    """Raised for text that is not a word over a, b, c and their inverses."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(
            f"invalid character {text[position]!r} at position {position} in {text!r}"
        )


class CyclicWord(NamedTuple):
    """A cyclically reduced core together with the conjugator: word = conj * core * conj^-1."""

    core: str
    conjugator: str


def letter_inverse(x: str) -> str:
    return x.swapcase()


def reduce(text: str) -> str:
    """Freely reduce a string of letters (no validation)."""
    stack: list[str] = []
    for x in text:
        if stack and stack[-1] == x.swapcase():
            stack.pop()
        else:
            stack.append(x)
    return "".join(stack)


def is_reduced(w: str) -> bool:
    return all(w[i] != w[i + 1].swapcase() for i in range(len(w) - 1))


def parse(text: str) -> str:
    """Parse word text, rejecting anything outside ``abcABC``, and freely reduce it.

    >>> parse("abBc")
    'ac'
    """
    for i, x in enumerate(text):
        if x not in ALPHABET:
            raise WordParseError(text, i)
    return reduce(text)


def invert(x: str) -> str:
    return x[::-1].translate(_INVERSE)


def multiply(x: str, y: str) -> str:
    # x and y are reduced, so cancellation only happens at the junction
    k = 0
    n = min(len(x), len(y))
    while k < n and x[len(x) - 1 - k] == y[k].swapcase():
        k += 1
    return x[: len(x) - k] + y[k:]


def product(*words: str) -> str:
    result = IDENTITY
    for w in words:
        result = multiply(result, w)
    return result


def conjugate(g: str, h: str) -> str:
    """Return h^-1 g h."""
    return multiply(multiply(invert(h), g), h)


def cyclic_reduce(x: str) -> CyclicWord:
    k = 0
    while 2 * k + 1 < len(x) and x[k] == x[len(x) - 1 - k].swapcase():
        k += 1
    return CyclicWord(x[k : len(x) - k], x[:k])


def power(x: str, n: int) -> str:
    if n == 0 or not x:
        return IDENTITY
    if n < 0:
        x, n = invert(x), -n
    core, conj = cyclic_reduce(x)
    return conj + core * n + invert(conj)


def is_c_free(w: str) -> bool:
    return "c" not in w and "C" not in w


def is_positive(w: str) -> bool:
    return w.islower() or not w


def smallest_period(s: str) -> int:
    """Smallest period of ``s`` from the failure function (KMP border array)."""
    n = len(s)
    if n == 0:
        return 0
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = border[k - 1]
        if s[i] == s[k]:
            k += 1
        border[i] = k
    return n - border[-1]


def primitive_root(x: str) -> tuple[str, int]:
    """Return ``(root, e)`` with ``x == power(root, e)``, ``root`` not a proper power, e >= 1."""
    if not x:
        raise ValueError("no root of identity")
    core, conj = cyclic_reduce(x)
    p = smallest_period(core)
    if len(core) % p:
        p = len(core)
    return conj + core[:p] + invert(conj), len(core) // p


def common_root(u1: str, u2: str) -> tuple[str, int, int] | None:
    """Common root-free ``u0`` with u1 = u0^r and u2 = u0^s (r, s >= 1), if any.

    Both inputs must be nontrivial and cyclically reduced.
    """
    for u in (u1, u2):
        if not u or cyclic_reduce(u).conjugator:
            raise ValueError(f"expected a nontrivial cyclically reduced word, got {u!r}")
    r0, r = primitive_root(u1)
    s0, s = primitive_root(u2)
    if r0 != s0:
        return None
    return r0, r, s


def common_prefix_length(x: str, y: str) -> int:
    n = min(len(x), len(y))
    i = 0
    while i < n and x[i] == y[i]:
        i += 1
    return i
