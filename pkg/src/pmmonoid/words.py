"""Generator tokens shared by the r-monoid and the braid monoid: ``s1``, ``s1'``, ``e[2]``, ``e[1,3]``."""
from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class S:
    i: int
    sign: int = 1

    def __str__(self):
        return f"s{self.i}" + ("'" if self.sign < 0 else "")


@dataclass(frozen=True, slots=True)
class E:
    cuts: tuple[int, ...] = ()

    def __str__(self):
        return "e[" + ",".join(map(str, self.cuts)) + "]"


Letter = S | E

_TOKEN = re.compile(r"s(\d+)('?)|e\[([0-9,\s]*)\]")


class WordParseError(ValueError):
    pass


def parse_letters(text: str) -> tuple[Letter, ...]:
    """
    >>> [str(x) for x in parse_letters("e[2] s1 s2' e[]")]
    ['e[2]', 's1', "s2'", 'e[]']
    """
    out = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise WordParseError(f"bad token {tok!r}")
        if m.group(1) is not None:
            out.append(S(int(m.group(1)), -1 if m.group(2) else 1))
        else:
            out.append(E(tuple(int(x) for x in m.group(3).replace(" ", "").split(",") if x)))
    return tuple(out)


def check_letters(letters, n: int):
    for x in letters:
        if isinstance(x, S):
            if not 1 <= x.i <= n - 1:
                raise WordParseError(f"{x} out of range for n={n}")
        else:
            prev = 0
            for k in x.cuts:
                if not prev < k < n:
                    raise WordParseError(f"{x} has invalid cuts for n={n}")
                prev = k


def format_letters(letters) -> str:
    return " ".join(map(str, letters))
