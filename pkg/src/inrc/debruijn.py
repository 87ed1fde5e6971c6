"""de Bruijn sequences, prefix-preserving extension, and the two streams built from them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .words import GenerationBudgetExceeded, Word, WordStream


class ExtensionError(ValueError):
    pass


@dataclass(frozen=True)
class DeBruijnWord:
    q: int
    n: int
    letters: Word
    cyclic: bool

    def __str__(self) -> str:
        return str(self.letters)


def _check(q: int, n: int) -> None:
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")


def lyndon_concatenation(q: int, n: int) -> list[int]:
    """Concatenate, in lexicographic order, the Lyndon words over ``range(q)``
    whose length divides ``n`` (Fredricksen-Maiorana). The result is the
    lexicographically least cyclic de Bruijn sequence and starts with ``0**n``."""
    out: list[int] = []
    # Duval's successor: Lyndon words of length <= n in lexicographic order
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if n % m == 0:
            out.extend(w)
        while len(w) < n:
            w.append(w[-m])
        while w and w[-1] == q - 1:
            w.pop()
    return out


def de_bruijn(q: int, n: int, cyclic: bool = True) -> DeBruijnWord:
    """Lexicographically least q-ary de Bruijn sequence of order ``n``.

    The cyclic form has length ``q**n``; the linear form appends the first
    ``n-1`` letters (all zeros) and has length ``q**n + n - 1``.
    """
    _check(q, n)
    seq = lyndon_concatenation(q, n)
    if not cyclic:
        seq = seq + seq[:n - 1]
    return DeBruijnWord(q, n, Word(seq), cyclic)


def is_de_bruijn(letters: Sequence[int], q: int, n: int, cyclic: bool) -> bool:
    """Check by enumeration that every q-ary n-word occurs exactly once."""
    s = list(letters)
    if any(not 0 <= a < q for a in s):
        return False
    if cyclic:
        if len(s) != q ** n:
            return False
        s = s + s[:n - 1]
    elif len(s) != q ** n + n - 1:
        return False
    seen = {tuple(s[i:i + n]) for i in range(len(s) - n + 1)}
    return len(seen) == q ** n


class _Completion:
    """Lexicographically least Eulerian trail in the order-``m`` de Bruijn graph
    continuing a fixed prefix.

    Nodes are (m-1)-words encoded base q, edges are m-words. At every step the
    smallest letter is taken whose edge leaves the remaining edge set
    completable: balanced degrees hold automatically, so completable means
    the remaining edges stay weakly connected to the current node.
    """

    def __init__(self, q: int, m: int, prefix: Sequence[int]):
        self.q, self.m = q, m
        self.size = q ** (m - 1)
        self.used = bytearray(q * self.size)
        self.remaining = q * self.size
        self.seq = list(prefix)
        if m >= 2 and len(prefix) >= m - 1:
            node = 0
            for a in prefix[:m - 1]:
                node = node * q + a
            for a in prefix[m - 1:]:
                e = node * q + a
                if self.used[e]:
                    raise ExtensionError("prefix repeats an order-%d factor" % m)
                self.used[e] = 1
                self.remaining -= 1
                node = e % self.size
            self.node = node
        elif m == 1:
            for a in prefix:
                if self.used[a]:
                    raise ExtensionError("prefix repeats a letter")
                self.used[a] = 1
                self.remaining -= 1
            self.node = 0
        else:
            raise ExtensionError(f"prefix too short to fix a start node in the order-{m} graph")

    def _connected_from(self, start: int) -> bool:
        """Every unused edge is reachable from ``start`` ignoring direction."""
        if self.remaining == 0:
            return True
        q, size, used = self.q, self.size, self.used
        seen = {start}
        todo = deque([start])
        reached = 0
        while todo:
            v = todo.popleft()
            for a in range(q):
                e = v * q + a  # out-edge
                if not used[e]:
                    reached += 1
                    w = e % size
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            for b in range(q):
                e = b * size + v  # in-edge from node (b, v[:-1])
                src = e // q
                if not used[e] and src not in seen:
                    seen.add(src)
                    todo.append(src)
        return reached == self.remaining

    def run(self) -> list[int]:
        q, size, used = self.q, self.size, self.used
        if not self._connected_from(self.node):
            raise ExtensionError(
                f"no de Bruijn sequence of order {self.m} over {q} letters extends this prefix"
            )
        while self.remaining:
            for a in range(q):
                e = self.node * q + a
                if used[e]:
                    continue
                used[e] = 1
                self.remaining -= 1
                nxt = e % size if self.m > 1 else 0
                if self._connected_from(nxt):
                    self.seq.append(a)
                    self.node = nxt
                    break
                used[e] = 0
                self.remaining += 1
            else:
                raise ExtensionError(f"completion stuck at length {len(self.seq)}")
        return self.seq


def complete_de_bruijn(q: int, m: int, prefix: Sequence[int]) -> list[int]:
    """Lexicographically least linear de Bruijn sequence of order ``m`` starting with ``prefix``."""
    _check(q, m)
    return _Completion(q, m, prefix).run()


def extend_de_bruijn(b: DeBruijnWord, order: int | None = None) -> DeBruijnWord:
    """Extend a linear de Bruijn sequence to a higher order, keeping it as a prefix.

    The default target is ``n+1`` for ``q >= 3`` and ``n+2`` for binary
    sequences, which cannot be extended by one order once ``n >= 2``.
    """
    if b.cyclic:
        raise ValueError("extension works on linear (non-cyclic) de Bruijn sequences")
    if not is_de_bruijn(b.letters, b.q, b.n, cyclic=False):
        raise ValueError("input is not a linear de Bruijn sequence of the stated order")
    if order is None:
        order = b.n + (2 if b.q == 2 else 1)
    if order <= b.n:
        raise ValueError(f"target order {order} must exceed {b.n}")
    if b.q == 2 and order == b.n + 1 and b.n >= 2:
        raise ExtensionError(
            f"binary de Bruijn sequences of order {b.n} cannot be extended to order {b.n + 1}; "
            f"extend to order {b.n + 2} instead"
        )
    seq = complete_de_bruijn(b.q, order, b.letters)
    return DeBruijnWord(b.q, order, Word(seq, b.letters.symbols), cyclic=False)


class MaximalInrcStream(WordStream):
    """Limit of repeated prefix-preserving de Bruijn extensions.

    Starts from ``0 1 ... q-1`` (order 1) and extends one order at a time for
    ``q >= 3``. For ``q = 2`` it starts from the order-2 sequence ``00110``
    and extends two orders at a time, so every even order appears as a prefix.
    """

    def __init__(self, q: int):
        if q < 2:
            raise ValueError("alphabet size must be at least 2")
        super().__init__(f"debruijn-limit:{q}")
        self.q = q
        self.current = de_bruijn(2, 2, cyclic=False) if q == 2 else DeBruijnWord(q, 1, Word(range(q)), False)
        self.orders = [self.current.n]
        self._buf = list(self.current.letters)

    def _grow(self, target: int) -> None:
        while len(self._buf) < target:
            self.current = extend_de_bruijn(self.current)
            self.orders.append(self.current.n)
            self._buf.extend(self.current.letters[len(self._buf):])

    def order_prefix(self, order: int) -> Word:
        """Prefix that is a linear de Bruijn sequence of the given order."""
        step = 2 if self.q == 2 else 1
        if (order - self.orders[0]) % step or order < self.orders[0]:
            raise ValueError(f"order {order} is not realized by this stream")
        return self.prefix(self.q ** order + order - 1)

    def fresh(self) -> "MaximalInrcStream":
        return MaximalInrcStream(self.q)


def maximal_inrc_stream(q: int) -> MaximalInrcStream:
    return MaximalInrcStream(q)


@dataclass(frozen=True)
class Block:
    kind: str  # "zeros" or "debruijn"
    k: int
    offset: int
    length: int


class SparseWordStream(WordStream):
    """``0^(q^(q^1)) B_1 0^(q^(q^2)) B_2 ...`` with ``B_k`` the least cyclic de Bruijn word of order k.

    Blocks longer than ``max_block`` letters are refused with
    ``GenerationBudgetExceeded`` carrying the longest safe prefix length.
    """

    def __init__(self, q: int, max_block: int = 1 << 16):
        if q < 2:
            raise ValueError("alphabet size must be at least 2")
        super().__init__(f"sparse:{q}")
        self.q = q
        self.max_block = max_block
        self._k = 0
        self._blocks: list[Block] = []

    def blocks(self) -> Iterator[Block]:
        """The block schedule, lazily; block lengths are not limited by the budget here."""
        offset = 0
        k = 1
        while True:
            zeros = self.q ** (self.q ** k)
            yield Block("zeros", k, offset, zeros)
            offset += zeros
            yield Block("debruijn", k, offset, self.q ** k)
            offset += self.q ** k
            k += 1

    def _grow(self, target: int) -> None:
        while len(self._buf) < target:
            k = self._k + 1
            zeros = self.q ** (self.q ** k)
            if zeros > self.max_block:
                raise GenerationBudgetExceeded(
                    f"sparse word block 0^{zeros} exceeds the generation budget of {self.max_block}",
                    safe_length=len(self._buf),
                )
            b = lyndon_concatenation(self.q, k)
            assert b[:k] == [0] * k
            self._buf.extend([0] * zeros)
            self._buf.extend(b)
            self._k = k

    def fresh(self) -> "SparseWordStream":
        return SparseWordStream(self.q, self.max_block)


def sparse_word_stream(q: int, max_block: int = 1 << 16) -> SparseWordStream:
    return SparseWordStream(q, max_block)
