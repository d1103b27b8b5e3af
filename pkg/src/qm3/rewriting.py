"""Linear rewriting of noncommutative words to normal form.

Words are strings, one character per generator.  A linear combination of
words is a ``dict`` mapping word -> ``CycNum``.  A rule replaces an
occurrence of its left-hand side by a linear combination of words.
"""

from __future__ import annotations

import random
import zlib
from functools import lru_cache
from typing import Mapping, Union

from .scalars import ONE, CycNum

Combo = dict  # word -> CycNum
Strategy = Union[str, random.Random]


class RewriteError(RuntimeError):
    pass


def add_into(target: dict, key, coef: CycNum) -> None:
    new = target.get(key)
    new = coef if new is None else new + coef
    if new.is_zero():
        target.pop(key, None)
    else:
        target[key] = new


class RewriteSystem:
    """A set of linear rewrite rules on words.

    ``rules`` maps a left-hand side word to its replacement combination.  The
    empty word is the unit.
    """

    def __init__(self, rules: Mapping[str, Mapping[str, CycNum]], max_steps: int = 200_000):
        self.rules = {lhs: {w: CycNum.coerce(c) for w, c in rhs.items()} for lhs, rhs in rules.items()}
        self.lengths = sorted({len(lhs) for lhs in self.rules})
        self.max_steps = max_steps
        self._nf_cache: dict[str, Combo] = {}

    def redexes(self, word: str) -> list[tuple[int, str]]:
        out = []
        for pos in range(len(word)):
            for L in self.lengths:
                lhs = word[pos:pos + L]
                if len(lhs) == L and lhs in self.rules:
                    out.append((pos, lhs))
        return out

    def _pick(self, word: str, strategy: Strategy):
        if strategy == "leftmost":
            for pos in range(len(word)):
                for L in self.lengths:
                    lhs = word[pos:pos + L]
                    if len(lhs) == L and lhs in self.rules:
                        return pos, lhs
            return None
        if strategy == "rightmost":
            for pos in range(len(word) - 1, -1, -1):
                for L in self.lengths:
                    lhs = word[pos:pos + L]
                    if len(lhs) == L and lhs in self.rules:
                        return pos, lhs
            return None
        if isinstance(strategy, random.Random):
            found = self.redexes(word)
            return strategy.choice(found) if found else None
        raise ValueError(f"unknown rewriting strategy {strategy!r}")

    def is_normal(self, word: str) -> bool:
        return self._pick(word, "leftmost") is None

    def reduce(self, combo: Mapping[str, CycNum], strategy: Strategy = "leftmost") -> Combo:
        """Rewrite ``combo`` until no rule applies."""
        todo: dict[str, CycNum] = {}
        for w, c in combo.items():
            add_into(todo, w, CycNum.coerce(c))
        done: dict[str, CycNum] = {}
        steps = 0
        while todo:
            word, coef = todo.popitem()
            red = self._pick(word, strategy)
            if red is None:
                add_into(done, word, coef)
                continue
            steps += 1
            if steps > self.max_steps:
                raise RewriteError(f"rewriting did not terminate within {self.max_steps} steps")
            pos, lhs = red
            head, tail = word[:pos], word[pos + len(lhs):]
            for rw, rc in self.rules[lhs].items():
                add_into(todo, head + rw + tail, coef * rc)
        return done

    def normal_form(self, word: str) -> Combo:
        """Cached leftmost normal form of a single word."""
        nf = self._nf_cache.get(word)
        if nf is None:
            nf = self.reduce({word: ONE})
            self._nf_cache[word] = nf
        return dict(nf)

    def reduce_cached(self, combo: Mapping[str, CycNum]) -> Combo:
        out: dict[str, CycNum] = {}
        for w, c in combo.items():
            for nw, nc in self.normal_form(w).items():
                add_into(out, nw, c * nc)
        return out


def check_confluence(system: RewriteSystem, words, seeds=(0, 1, 2)) -> list[str]:
    """Words whose normal form depends on the reduction order.

    Each word is reduced leftmost-first, rightmost-first and with a few
    seeded random redex choices.
    """
    bad = []
    for w in words:
        ref = system.reduce({w: ONE}, "leftmost")
        others = [system.reduce({w: ONE}, "rightmost")]
        others += [system.reduce({w: ONE}, random.Random(zlib.crc32(w.encode()) * 7919 + s)) for s in seeds]
        if any(o != ref for o in others):
            bad.append(w)
    return bad


@lru_cache(maxsize=None)
def all_words(alphabet: str, max_len: int) -> tuple[str, ...]:
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + a for w in frontier for a in alphabet]
        out.extend(frontier)
    return tuple(out)
