"""Finite groups stored as full multiplication tables.

Every constructor reduces to a table over element ids ``0..order-1`` with
``0`` as the identity.  Constructors also record a coordinate map so that
generators can be written the way the group was built, e.g. ``(1,0)`` in a
semidirect product or ``a^5b`` in a dicyclic group.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 20160
MAX_SYM_DEGREE = 8
SUBGROUP_GUARD = 128


class GroupError(ValueError):
    """Invalid group data or an unsupported request."""


class GroupSpecError(GroupError):
    """A group spec string that does not parse; ``pos`` is the offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


class GuardExceeded(GroupError):
    """Input exceeds a documented size guard."""


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``coords`` maps a constructor coordinate tuple to an element id and
    ``words`` maps single-letter generator names to element ids (used to parse
    words such as ``a^5b``).
    """

    def __init__(
        self,
        table: np.ndarray,
        names: Sequence[str] | None = None,
        coords: dict[tuple, int] | None = None,
        words: dict[str, int] | None = None,
        label: str = "",
        perm_degree: int | None = None,
        check: bool = True,
    ):
        table = np.asarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("multiplication table must be a non-empty square array")
        self.table = table
        self.table.setflags(write=False)
        self.order = int(table.shape[0])
        self.names = list(names) if names is not None else [str(i) for i in range(self.order)]
        self.coords = dict(coords or {})
        self.words = dict(words or {})
        self.label = label
        self.perm_degree = perm_degree
        self.dih_base: FiniteGroup | None = None
        if check:
            validate_table(self.table)
        inv = np.empty(self.order, dtype=np.int32)
        rows, cols = np.nonzero(self.table == 0)
        inv[rows] = cols
        self.inverse = inv
        self.inverse.setflags(write=False)

    identity = 0

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or 'order ' + str(self.order)})"

    def __len__(self) -> int:
        return self.order

    @cached_property
    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    @cached_property
    def inv(self) -> list[int]:
        return self.inverse.tolist()

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        r = 0
        for _ in range(k):
            r = self.rows[r][a]
        return r

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.rows[x][a]
            k += 1
        return k

    def commutator(self, x: int, y: int) -> int:
        r, inv = self.rows, self.inv
        return r[r[r[x][y]][inv[x]]][inv[y]]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def name(self, x: int) -> str:
        return self.names[x]

    def parse_element(self, token: str) -> int:
        """Resolve an element written as an id, a coordinate tuple, a name,
        a generator word (``a^3b``) or, for symmetric groups, cycle notation."""
        tok = token.strip()
        if re.fullmatch(r"-?\d+", tok):
            x = int(tok)
            if not 0 <= x < self.order:
                raise GroupError(f"element id {x} out of range for order {self.order}")
            return x
        if tok in self._name_index:
            return self._name_index[tok]
        m = re.fullmatch(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)", tok)
        if m and "," in tok:
            key = tuple(int(p) for p in m.group(1).split(","))
            if key in self.coords:
                return self.coords[key]
            raise GroupError(f"no element with coordinates {key} in {self!r}")
        if self.perm_degree is not None and re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\))+", tok):
            return self._parse_cycles(tok)
        if self.words and re.fullmatch(r"([a-z](\^-?\d+)?)+", tok):
            x = 0
            for letter, exp in re.findall(r"([a-z])(?:\^(-?\d+))?", tok):
                if letter not in self.words:
                    raise GroupError(f"unknown generator letter {letter!r} in {tok!r}")
                x = self.rows[x][self.power(self.words[letter], int(exp) if exp else 1)]
            return x
        raise GroupError(f"cannot parse element {token!r} for {self!r}")

    def _parse_cycles(self, tok: str) -> int:
        n = self.perm_degree
        img = list(range(n))
        for cyc in re.findall(r"\(([^)]*)\)", tok):
            pts = [int(p) - 1 for p in cyc.split()]
            if any(not 0 <= p < n for p in pts) or len(set(pts)) != len(pts):
                raise GroupError(f"bad cycle {cyc!r} for degree {n}")
            cur = list(range(n))
            for i, p in enumerate(pts):
                cur[p] = pts[(i + 1) % len(pts)]
            # apply img first, then this cycle
            img = [cur[img[i]] for i in range(n)]
        return self.coords[tuple(img)]

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.names)}


def validate_table(table: np.ndarray) -> None:
    """Reject tables that do not define a group with identity 0."""
    n = table.shape[0]
    idx = np.arange(n)
    if table.min() < 0 or table.max() >= n:
        raise GroupError("table entries must lie in 0..n-1")
    if not (np.array_equal(table[0], idx) and np.array_equal(table[:, 0], idx)):
        raise GroupError("element 0 is not the identity")
    srt = np.sort(table, axis=1)
    if not (srt == idx).all():
        raise GroupError("some row of the table is not a permutation")
    srt = np.sort(table, axis=0)
    if not (srt == idx[:, None]).all():
        raise GroupError("some column of the table is not a permutation")
    for g in _magma_generators(table):
        # Light's test: (x g) y == x (g y) for all x, y and all g in a generating set
        left = table[table[:, g], :]
        right = table[:, table[g, :]]
        if not np.array_equal(left, right):
            raise GroupError("operation is not associative")


def _magma_generators(table: np.ndarray) -> list[int]:
    n = table.shape[0]
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    gens: list[int] = []
    for g in range(1, n):
        if reached[g]:
            continue
        gens.append(g)
        # close under products on both sides (a latin square with identity)
        frontier = np.array([g])
        reached[g] = True
        while True:
            members = np.nonzero(reached)[0]
            prods = np.concatenate(
                [table[np.ix_(members, frontier)].ravel(), table[np.ix_(frontier, members)].ravel()]
            )
            new = np.unique(prods[~reached[prods]])
            if new.size == 0:
                break
            reached[new] = True
            frontier = new
        if reached.all():
            break
    return gens


def is_associative_bruteforce(table: np.ndarray) -> bool:
    """Check every triple; used as an oracle for small tables."""
    for a in range(table.shape[0]):
        if not np.array_equal(table[table[a, :], :], table[a][table]):
            return False
    return True


# ---------------------------------------------------------------- constructors


def cyclic(n: int) -> FiniteGroup:
    _order_guard(n)
    i = np.arange(n)
    table = (i[:, None] + i[None, :]) % n
    names = [str(k) for k in range(n)]
    return FiniteGroup(table, names, {(k,): k for k in range(n)}, {"a": 1 % n} if n > 1 else {}, f"cyclic:{n}", check=False)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on ``{1..n}``; the product ``p*q`` applies ``p`` first."""
    if not 1 <= n <= MAX_SYM_DEGREE:
        raise GuardExceeded(f"sym:{n} outside 1..{MAX_SYM_DEGREE}")
    _order_guard(math.factorial(n))
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    base = n ** np.arange(n - 1, -1, -1)
    keys = perms @ base
    order = np.argsort(keys)
    m = len(perms)
    table = np.empty((m, m), dtype=np.int32)
    for i in range(m):
        # (p*q)(x) = q(p(x))
        comp = perms[:, perms[i]]
        table[i] = order[np.searchsorted(keys[order], comp @ base)]
    names = [_cycle_name(p) for p in perms.tolist()]
    coords = {tuple(p): i for i, p in enumerate(perms.tolist())}
    return FiniteGroup(table, names, coords, {}, f"sym:{n}", perm_degree=n, check=False)


def _cycle_name(p: Sequence[int]) -> str:
    seen, parts = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order ``n`` (``n % 4 == 0``): ``a^(n/2)=1, b^2=a^(n/4), b^-1 a b = a^-1``.

    Element ``a^i b^j`` has coordinates ``(i, j)`` and id ``i + (n/2) j``.
    """
    if n < 4 or n % 4:
        raise GroupError(f"dicyclic order must be a positive multiple of 4, got {n}")
    _order_guard(n)
    h, q = n // 2, n // 4
    table = np.empty((n, n), dtype=np.int32)
    for j in range(2):
        for i in range(h):
            for j2 in range(2):
                for i2 in range(h):
                    if j == 0:
                        r = ((i + i2) % h, j2)
                    elif j2 == 0:
                        r = ((i - i2) % h, 1)
                    else:
                        r = ((i - i2 + q) % h, 0)
                    table[i + h * j, i2 + h * j2] = r[0] + h * r[1]
    names = []
    for j in range(2):
        for i in range(h):
            a = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            names.append((a + ("b" if j else "")) or "e")
    coords = {(i, j): i + h * j for j in range(2) for i in range(h)}
    return FiniteGroup(table, names, coords, {"a": 1, "b": h}, f"dicyclic:{n}", check=False)


def semidirect(m: int, n: int, k: int) -> FiniteGroup:
    """``Z_m ⋊ Z_n`` with ``(x,t)(x',t') = (x + k^t x', t + t')``; id ``x + m t``."""
    if m < 1 or n < 1:
        raise GroupError("sdp factors must be positive")
    if pow(k, n, m) != 1 % m:
        raise GroupError(f"sdp:{m},{n},{k} requires k^n = 1 mod m")
    _order_guard(m * n)
    x = np.arange(m)
    t = np.arange(n)
    kt = np.array([pow(k, int(s), m) for s in t])
    X, T = np.meshgrid(x, t)  # element id = X + m T
    X, T = X.ravel(), T.ravel()
    px = (X[:, None] + kt[T][:, None] * X[None, :]) % m
    pt = (T[:, None] + T[None, :]) % n
    table = px + m * pt
    names = [f"({a},{b})" for a, b in zip(X.tolist(), T.tolist())]
    coords = {(a, b): a + m * b for a, b in zip(X.tolist(), T.tolist())}
    return FiniteGroup(table, names, coords, {}, f"sdp:{m},{n},{k}", check=False)


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """``A × B`` with element ``(a, b)`` at id ``a |B| + b``."""
    _order_guard(A.order * B.order)
    nb = B.order
    table = (A.table[:, None, :, None] * nb + B.table[None, :, None, :]).reshape(A.order * nb, A.order * nb)
    ca, cb = _coord_of(A), _coord_of(B)
    names = [f"({A.names[a]},{B.names[b]})" for a in range(A.order) for b in range(nb)]
    coords = {ca[a] + cb[b]: a * nb + b for a in range(A.order) for b in range(nb)}
    return FiniteGroup(table, names, coords, {}, f"prod:({A.label})x({B.label})", check=False)


def generalized_dihedral(A: FiniteGroup) -> FiniteGroup:
    """``Dih(A) = A ⋊ Z2`` with ``Z2`` acting by inversion.

    ``(g,t)`` has id ``g + |A| t``, so the base copy ``A × {0}`` keeps A's ids.
    """
    if not A.is_abelian():
        raise GroupError(f"gdih requires an abelian argument, {A.label} is not abelian")
    _order_guard(2 * A.order)
    n = A.order
    inv = A.inverse
    table = np.empty((2 * n, 2 * n), dtype=np.int32)
    table[:n, :n] = A.table
    table[:n, n:] = A.table + n
    table[n:, :n] = A.table[:, inv] + n
    table[n:, n:] = A.table[:, inv]
    ca = _coord_of(A)
    names = [f"({A.names[g]},{t})" for t in range(2) for g in range(n)]
    coords = {ca[g] + (t,): g + n * t for t in range(2) for g in range(n)}
    D = FiniteGroup(table, names, coords, {}, f"gdih:({A.label})", check=False)
    D.dih_base = A
    return D


def _coord_of(G: FiniteGroup) -> list[tuple]:
    out: list[tuple] = [(x,) for x in range(G.order)]
    if G.coords and G.perm_degree is None:
        for key, x in G.coords.items():
            out[x] = key
    return out


def from_table_file(path: str | Path) -> FiniteGroup:
    """Read ``n`` then ``n`` rows of ``n`` integers; identity must be 0."""
    path = Path(path)
    try:
        lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
    except OSError as exc:
        raise GroupError(f"cannot read table file {path}: {exc}") from exc
    if not lines:
        raise GroupError(f"{path}: empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise GroupError(f"{path}:1: expected the group order, got {lines[0]!r}") from None
    if n < 1:
        raise GroupError(f"{path}:1: order must be positive")
    _order_guard(n)
    if len(lines) != n + 1:
        raise GroupError(f"{path}: expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for ln, text in enumerate(lines[1:], start=2):
        try:
            row = [int(v) for v in text.split()]
        except ValueError:
            raise GroupError(f"{path}:{ln}: non-integer entry") from None
        if len(row) != n:
            raise GroupError(f"{path}:{ln}: expected {n} entries, found {len(row)}")
        rows.append(row)
    try:
        return FiniteGroup(np.array(rows), label=f"table:{path}")
    except GroupError as exc:
        raise GroupError(f"{path}: {exc}") from None


def _order_guard(n: int) -> None:
    if n > MAX_ORDER:
        raise GuardExceeded(f"group order {n} exceeds the limit {MAX_ORDER}")


# ---------------------------------------------------------------- spec parser

_SPEC_GRAMMAR = "cyclic:<n> | sym:<n> | dicyclic:<n> | gdih:(<spec>) | sdp:<m>,<n>,<k> | prod:(<spec>)x(<spec>) | table:<path>"


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, msg: str, pos: int | None = None):
        raise GroupSpecError(msg, self.text, self.pos if pos is None else pos)

    def expect(self, s: str) -> None:
        if not self.text.startswith(s, self.pos):
            self.fail(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.fail("expected a non-negative integer")
        self.pos = m.end()
        return int(m.group())

    def spec(self) -> FiniteGroup:
        start = self.pos
        m = re.compile(r"[a-z]+").match(self.text, self.pos)
        if not m:
            self.fail(f"expected a constructor name ({_SPEC_GRAMMAR})")
        kind = m.group()
        self.pos = m.end()
        self.expect(":")
        try:
            if kind == "cyclic":
                n = self.integer()
                if n < 1:
                    self.fail("cyclic order must be >= 1", start)
                return cyclic(n)
            if kind == "sym":
                return symmetric(self.integer())
            if kind == "dicyclic":
                return dicyclic(self.integer())
            if kind == "sdp":
                m_ = self.integer()
                self.expect(",")
                n_ = self.integer()
                self.expect(",")
                k_ = self.integer()
                return semidirect(m_, n_, k_)
            if kind == "gdih":
                self.expect("(")
                inner = self.spec()
                self.expect(")")
                return generalized_dihedral(inner)
            if kind == "prod":
                self.expect("(")
                a = self.spec()
                self.expect(")x(")
                b = self.spec()
                self.expect(")")
                return direct_product(a, b)
            if kind == "table":
                path = self.text[self.pos:]
                if not path:
                    self.fail("expected a file path")
                self.pos = len(self.text)
                return from_table_file(path)
        except GroupSpecError:
            raise
        except GroupError as exc:
            raise GroupSpecError(str(exc), self.text, start) from None
        self.fail(f"unknown constructor {kind!r}", start)


def make_group(spec: str) -> FiniteGroup:
    """Build a group from a spec string such as ``sdp:7,3,2`` or ``prod:(cyclic:2)x(cyclic:4)``."""
    p = _SpecParser(spec.strip())
    G = p.spec()
    if p.pos != len(p.text):
        p.fail("unexpected trailing input")
    G.label = spec.strip()
    return G


# ---------------------------------------------------------------- subgroups


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` given by its sorted element ids."""

    parent: FiniteGroup = field(repr=False, compare=False, hash=False)
    elements: tuple[int, ...]
    # set by constructors that produce subgroups by closure
    closed: bool = field(default=False, repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.elements)

    def issubset(self, other: "Subgroup") -> bool:
        return self.members <= other.members


def closure_set(G: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    """Elements of the subgroup generated by ``gens`` (breadth-first)."""
    rows = G.rows
    gens = [g for g in dict.fromkeys(gens) if g != 0]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = rows[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def subgroup_closure(G: FiniteGroup, S: Iterable[int]) -> Subgroup:
    S = list(S)
    for s in S:
        if not 0 <= s < G.order:
            raise GroupError(f"element {s} not in group of order {G.order}")
    return Subgroup(G, tuple(sorted(closure_set(G, S))), closed=True)


def make_subgroup(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """Wrap an element set, checking that it is a subgroup."""
    els = frozenset(elements)
    if 0 not in els:
        raise GroupError("subset does not contain the identity")
    rows = G.rows
    for a in els:
        if G.inv[a] not in els:
            raise GroupError("subset is not closed under inverses")
        row = rows[a]
        for b in els:
            if row[b] not in els:
                raise GroupError("subset is not closed under multiplication")
    return Subgroup(G, tuple(sorted(els)), closed=True)


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Left cosets ``xH`` ordered by smallest element; the first block is H."""
    if not H.closed:
        make_subgroup(G, H.elements)
    rows = G.rows
    block = [-1] * G.order
    out: list[tuple[int, ...]] = []
    for x in range(G.order):
        if block[x] >= 0:
            continue
        coset = tuple(sorted(rows[x][h] for h in H.elements))
        for y in coset:
            block[y] = len(out)
        out.append(coset)
    return out


def coset_index(G: FiniteGroup, H: Subgroup) -> list[int]:
    """Map each element to the index of its left coset in :func:`left_cosets` order."""
    if not H.closed:
        make_subgroup(G, H.elements)
    rows = G.rows
    idx = [-1] * G.order
    count = 0
    for x in range(G.order):
        if idx[x] < 0:
            row = rows[x]
            for h in H.elements:
                idx[row[h]] = count
            count += 1
    return idx


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    rows, inv = G.rows, G.inv
    mem = H.members
    for g in range(G.order):
        row, gi = rows[g], inv[g]
        for h in H.elements:
            if rows[row[h]][gi] not in mem:
                return False
    return True


@dataclass(frozen=True)
class Quotient:
    group: FiniteGroup
    projection: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]


def quotient(G: FiniteGroup, N: Subgroup) -> Quotient:
    """``G/N`` on coset ids (ordered by smallest element) and the canonical projection."""
    if not is_normal(G, N):
        raise GroupError("quotient requires a normal subgroup")
    cosets = left_cosets(G, N)
    proj = [0] * G.order
    for i, block in enumerate(cosets):
        for x in block:
            proj[x] = i
    reps = [block[0] for block in cosets]
    rows = G.rows
    table = np.array([[proj[rows[a][b]] for b in reps] for a in reps], dtype=np.int32)
    names = [G.names[r] + ("" if len(N) == 1 else "N") for r in reps]
    Q = FiniteGroup(table, names, label=f"{G.label or 'G'}/N{len(N)}", check=False)
    return Quotient(Q, tuple(proj), tuple(cosets))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    comms = {G.commutator(x, y) for x in range(G.order) for y in range(G.order)}
    return subgroup_closure(G, comms)


def _subgroup_guard(G: FiniteGroup) -> None:
    if G.order > SUBGROUP_GUARD:
        raise GuardExceeded(f"subgroup enumeration limited to order <= {SUBGROUP_GUARD}, got {G.order}")


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, found by joining cyclic subgroups pairwise until nothing new appears."""
    _subgroup_guard(G)
    found: dict[frozenset[int], tuple[int, ...]] = {}
    for x in range(G.order):
        s = closure_set(G, [x])
        found.setdefault(s, (x,) if x else ())
    layer = list(found)
    everything = list(found)
    while layer:
        new = []
        for a in layer:
            for b in everything:
                if a <= b or b <= a:
                    continue
                gens = found[a] + found[b]
                s = closure_set(G, gens)
                if s not in found:
                    found[s] = gens
                    new.append(s)
        everything.extend(new)
        layer = new
    subs = sorted(found, key=lambda s: (len(s), sorted(s)))
    return [Subgroup(G, tuple(sorted(s)), closed=True) for s in subs]


def maximal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    subs = [H for H in all_subgroups(G) if len(H) < G.order]
    return [H for H in subs if not any(len(K) > len(H) and H.members < K.members for K in subs)]


def frattini_subgroup(G: FiniteGroup) -> Subgroup:
    """Intersection of the maximal proper subgroups (``{0}`` for the trivial group)."""
    maxes = maximal_subgroups(G)
    if not maxes:
        return Subgroup(G, (0,))
    common = set(maxes[0].elements)
    for H in maxes[1:]:
        common &= H.members
    return Subgroup(G, tuple(sorted(common)), closed=True)


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    """``G = γ1 ≥ γ2 ≥ ...`` until it stabilises; ``γ(i+1) = [G, γi]``."""
    series = [Subgroup(G, tuple(range(G.order)), closed=True)]
    while True:
        cur = series[-1]
        comms = {G.commutator(g, h) for g in range(G.order) for h in cur.elements}
        nxt = subgroup_closure(G, comms)
        if nxt.elements == cur.elements:
            return series
        series.append(nxt)


def is_nilpotent_lcs(G: FiniteGroup) -> bool:
    return lower_central_series(G)[-1].elements == (0,)


@dataclass(frozen=True)
class GroupClass:
    abelian: bool
    dedekind: bool
    nilpotent: bool
    has_index_two_subgroup: bool


def has_index_two_subgroup(G: FiniteGroup) -> bool:
    gens = {G.mul(g, g) for g in range(G.order)}
    gens |= {G.commutator(x, y) for x in range(G.order) for y in range(G.order)}
    return len(closure_set(G, gens)) < G.order


def classify_group(G: FiniteGroup) -> GroupClass:
    cached = G.__dict__.get("_classification")
    if cached is None:
        cached = G.__dict__["_classification"] = _classify(G)
    return cached


def _classify(G: FiniteGroup) -> GroupClass:
    abelian = G.is_abelian()
    if abelian:
        dedekind = True
    else:
        dedekind = all(is_normal(G, H) for H in all_subgroups(G))
    if abelian:
        nilpotent = True
    else:
        nilpotent = commutator_subgroup(G).issubset(frattini_subgroup(G))
    return GroupClass(abelian, dedekind, nilpotent, has_index_two_subgroup(G))


def trivial_group() -> FiniteGroup:
    return cyclic(1)
