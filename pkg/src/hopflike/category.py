"""The category of compositions with merge, split and shuffle generators.

Objects are canonical compositions.  Three generator families:

* ``Merge(t, i)`` adds adjacent parts i, i+1 of a length-t composition
  (length -1, sum unchanged);
* ``Split(t, i, a)`` cuts part i into (a, part-a) (length +1);
* ``Shuffle(K)`` rearranges the row-order refinement of a margin matrix
  K into its column-order refinement (length and sum unchanged).

Morphisms are words: a source composition plus a chain of generator
steps.  Equality of words is decided semantically, by evaluating both
sides through a realization on a spanning set of basis elements; the
generator relations enumerated here are checked that way, never by
rewriting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import Composition, refines
from .contingency import ContingencyMatrix, block_decompose, kappa
from .errors import ChainError, GeneratorDomainError, UsageError


@dataclass(frozen=True)
class Merge:
    """Add parts i and i+1 of a length-t composition (1-based i < t)."""

    t: int
    i: int

    def __str__(self):
        return f"d[{self.t},{self.i}]"


@dataclass(frozen=True)
class Split:
    """Cut part i of a length-t composition into (a, part - a)."""

    t: int
    i: int
    a: int

    def __str__(self):
        return f"s[{self.t},{self.i},{self.a}]"


@dataclass(frozen=True)
class Shuffle:
    """Row-order to column-order rearrangement along a margin matrix."""

    K: ContingencyMatrix

    def __str__(self):
        return f"tau[{self.K}]"


def apply_generator(g, domain: Composition) -> Composition:
    """Codomain of ``g`` on ``domain``; raises if ``g`` is inadmissible."""
    parts = domain.parts
    if isinstance(g, Merge):
        if g.t != len(parts):
            raise GeneratorDomainError(
                f"{g} needs a length-{g.t} domain, got {domain}"
            )
        if not 1 <= g.i <= g.t - 1:
            raise GeneratorDomainError(f"{g} index out of range")
        i = g.i - 1
        return Composition(parts[:i] + (parts[i] + parts[i + 1],) + parts[i + 2:])
    if isinstance(g, Split):
        if g.t != len(parts):
            raise GeneratorDomainError(
                f"{g} needs a length-{g.t} domain, got {domain}"
            )
        if not 1 <= g.i <= g.t:
            raise GeneratorDomainError(f"{g} index out of range")
        i = g.i - 1
        if not 0 < g.a < parts[i]:
            raise GeneratorDomainError(
                f"{g} cannot cut part {parts[i]} at {g.a}"
            )
        return Composition(parts[:i] + (g.a, parts[i] - g.a) + parts[i + 1:])
    if isinstance(g, Shuffle):
        kap = kappa(g.K)
        if kap.row != domain:
            raise GeneratorDomainError(
                f"{g} needs domain {kap.row}, got {domain}"
            )
        return kap.col
    raise GeneratorDomainError(f"unknown generator {g!r}")


class MorphismWord:
    """A source composition and a chain of generator steps."""

    __slots__ = ("source", "steps", "target")

    def __init__(self, source: Composition, steps=()):
        if not isinstance(source, Composition):
            source = Composition(source)
        steps = tuple(steps)
        current = source
        for idx, g in enumerate(steps):
            try:
                current = apply_generator(g, current)
            except GeneratorDomainError as exc:
                raise ChainError(
                    f"step {idx + 1} ({g}) breaks the chain: {exc}",
                    step_index=idx + 1,
                ) from exc
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "target", current)

    def __setattr__(self, name, value):
        raise AttributeError("MorphismWord is immutable")

    def domains(self) -> list:
        """Composition before each step (length = len(steps))."""
        out = []
        current = self.source
        for g in self.steps:
            out.append(current)
            current = apply_generator(g, current)
        return out

    def then(self, other: "MorphismWord") -> "MorphismWord":
        return compose(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, MorphismWord)
            and self.source == other.source
            and self.steps == other.steps
        )

    def __hash__(self):
        return hash((self.source, self.steps))

    def __repr__(self):
        return f"MorphismWord({self.source}, {self.steps!r})"

    def __str__(self):
        return print_word(self)


def compose(w1: MorphismWord, w2: MorphismWord) -> MorphismWord:
    """Concatenate words; ``w2`` follows ``w1``."""
    if w1.target != w2.source:
        raise ChainError(
            f"cannot compose: first word ends at {w1.target}, "
            f"second starts at {w2.source}"
        )
    return MorphismWord(w1.source, w1.steps + w2.steps)


def identity_word(comp) -> MorphismWord:
    return MorphismWord(Composition(comp) if not isinstance(comp, Composition) else comp)


def split_chain(source: Composition, target: Composition) -> MorphismWord:
    """Word of splits from ``source`` to a refinement ``target``.

    Pieces are cut off left to right inside each part, matching the
    two-part worked examples exactly.
    """
    grouping = refines(source, target)
    if grouping is None:
        raise GeneratorDomainError(f"{target} does not refine {source}")
    steps = []
    current = list(source.parts)
    pos = 0  # 0-based position in current
    tpos = 0
    for run in grouping:
        run_parts = target.parts[tpos:tpos + run]
        tpos += run
        for piece in run_parts[:-1]:
            steps.append(Split(len(current), pos + 1, piece))
            rest = current[pos] - piece
            current[pos:pos + 1] = [piece, rest]
            pos += 1
        pos += 1
    return MorphismWord(source, steps)


def merge_chain(source: Composition, target: Composition) -> MorphismWord:
    """Word of merges from ``source`` to a coarsening ``target``."""
    grouping = refines(target, source)
    if grouping is None:
        raise GeneratorDomainError(f"{target} does not coarsen {source}")
    steps = []
    length = len(source.parts)
    pos = 1  # 1-based merge position
    for run in grouping:
        for _ in range(run - 1):
            steps.append(Merge(length, pos))
            length -= 1
        pos += 1
    return MorphismWord(source, steps)


def gamma_of(K: ContingencyMatrix) -> Composition:
    """Composition of diagonal-block totals of ``K``.

    The coarsening through which a shuffle's mixed relation factors:
    ``(n)`` for an indecomposable matrix, one part per block otherwise.
    """
    return Composition(block.total for block in block_decompose(K))


@dataclass(frozen=True)
class RelationInstance:
    left: MorphismWord
    right: MorphismWord
    family: str
    description: str

    def __post_init__(self):
        if self.left.source != self.right.source or self.left.target != self.right.target:
            raise ChainError(
                f"relation sides disagree: {self.left.source}->{self.left.target}"
                f" vs {self.right.source}->{self.right.target}"
            )


def enumerate_relation_instances(family: str, max_sum: int, max_len: int) -> list:
    """All admissible instances of one relation family within bounds.

    Families: ``dd`` (merge-merge), ``ss`` (split-split), ``tautau``
    (shuffle chains with equal underlying permutations), ``mixed``
    (split-chain; shuffle; merge-chain against the coarsening route).
    """
    if max_sum < 1 or max_len < 1:
        raise UsageError("bounds must be >= 1")
    if family == "dd":
        return _dd_instances(max_sum, max_len)
    if family == "ss":
        return _ss_instances(max_sum, max_len)
    if family == "tautau":
        return _tautau_instances(max_sum, max_len)
    if family == "mixed":
        return _mixed_instances(max_sum, max_len)
    raise UsageError(f"unknown relation family {family!r}")


def _all_compositions(max_sum, max_len):
    from .compositions import enumerate_compositions

    out = []
    for n in range(max_sum + 1):
        out.extend(enumerate_compositions(n, max_len))
    return out


def _dd_instances(max_sum, max_len):
    out = []
    for comp in _all_compositions(max_sum, max_len):
        t = comp.length
        if t < 3:
            continue
        mk = lambda steps: MorphismWord(comp, steps)
        for i in range(1, t):
            for j in range(1, i - 1):
                # d[t-1,j] . d[t,i] = d[t-1,i-1] . d[t,j]   (j <= i-2)
                out.append(RelationInstance(
                    mk([Merge(t, i), Merge(t - 1, j)]),
                    mk([Merge(t, j), Merge(t - 1, i - 1)]),
                    "dd", f"dd:far-apart {comp} i={i} j={j}",
                ))
        for i in range(2, t):
            # d[t-1,i-1] . d[t,i] = d[t-1,i-1] . d[t,i-1]
            out.append(RelationInstance(
                mk([Merge(t, i), Merge(t - 1, i - 1)]),
                mk([Merge(t, i - 1), Merge(t - 1, i - 1)]),
                "dd", f"dd:adjacent-left {comp} i={i}",
            ))
        for i in range(1, t - 1):
            # d[t-1,i] . d[t,i] = d[t-1,i] . d[t,i+1]
            out.append(RelationInstance(
                mk([Merge(t, i), Merge(t - 1, i)]),
                mk([Merge(t, i + 1), Merge(t - 1, i)]),
                "dd", f"dd:adjacent-right {comp} i={i}",
            ))
        for i in range(1, t):
            for j in range(i + 1, t):
                # d[t-1,j-1] . d[t,i] = d[t-1,i] . d[t,j]   (j >= i+1)
                out.append(RelationInstance(
                    mk([Merge(t, i), Merge(t - 1, j - 1)]),
                    mk([Merge(t, j), Merge(t - 1, i)]),
                    "dd", f"dd:ordered {comp} i={i} j={j}",
                ))
    return out


def _ss_instances(max_sum, max_len):
    out = []
    for comp in _all_compositions(max_sum, max_len):
        t = comp.length
        if t == 0:
            continue
        parts = comp.parts
        mk = lambda steps: MorphismWord(comp, steps)
        for i in range(1, t + 1):
            ni = parts[i - 1]
            for j in range(1, i):
                nj = parts[j - 1]
                if min(ni, nj) < 2:
                    continue
                for a in range(1, ni):
                    for b in range(1, nj):
                        # s[t+1,j,b] . s[t,i,a] = s[t+1,i+1,a] . s[t,j,b]
                        out.append(RelationInstance(
                            mk([Split(t, i, a), Split(t + 1, j, b)]),
                            mk([Split(t, j, b), Split(t + 1, i + 1, a)]),
                            "ss", f"ss:left-of {comp} i={i} j={j} a={a} b={b}",
                        ))
            for a in range(1, ni):
                for b in range(1, a):
                    # s[t+1,i,b] . s[t,i,a] = s[t+1,i+1,a-b] . s[t,i,b]
                    out.append(RelationInstance(
                        mk([Split(t, i, a), Split(t + 1, i, b)]),
                        mk([Split(t, i, b), Split(t + 1, i + 1, a - b)]),
                        "ss", f"ss:same-part {comp} i={i} a={a} b={b}",
                    ))
            for a in range(2, ni):
                for b in range(1, ni - a):
                    # s[t+1,i+1,b] . s[t,i,a] = s[t+1,i,a] . s[t,i,a+b]
                    out.append(RelationInstance(
                        mk([Split(t, i, a), Split(t + 1, i + 1, b)]),
                        mk([Split(t, i, a + b), Split(t + 1, i, a)]),
                        "ss", f"ss:right-piece {comp} i={i} a={a} b={b}",
                    ))
            for j in range(i + 2, t + 1):
                nj = parts[j - 1]
                if min(ni, nj) < 2:
                    continue
                for a in range(1, ni):
                    for b in range(1, nj):
                        # s[t+1,j+1,b] . s[t,i,a] = s[t+1,i,a] . s[t,j,b]
                        out.append(RelationInstance(
                            mk([Split(t, i, a), Split(t + 1, j + 1, b)]),
                            mk([Split(t, j, b), Split(t + 1, i, a)]),
                            "ss", f"ss:right-of {comp} i={i} j={j} a={a} b={b}",
                        ))
    return out


def _shuffles_by_source(max_sum, max_len):
    """All shuffle generators within bounds, grouped by canonical source."""
    from .contingency import enumerate_matrices

    comps = _all_compositions(max_sum, max_len)
    by_source = {}
    for alpha in comps:
        if alpha.length == 0:
            continue
        for beta in comps:
            if beta.sum != alpha.sum or beta.length == 0:
                continue
            for K in enumerate_matrices(alpha, beta):
                kap = kappa(K)
                by_source.setdefault(kap.row, []).append(K)
    return by_source


def _tautau_instances(max_sum, max_len):
    from .contingency import sigma_K

    by_source = _shuffles_by_source(max_sum, max_len)
    annotated = {
        source: [(K, kappa(K).col, sigma_K(K).images) for K in group]
        for source, group in by_source.items()
    }
    out = []
    for source in sorted(by_source):
        singles = {}
        for K3, target, images in annotated[source]:
            singles.setdefault((target, images), K3)
        chains = {}
        for K1, mid, images1 in annotated[source]:
            for K2, target, images2 in annotated.get(mid, ()):
                composite = tuple(images2[v - 1] for v in images1)
                chains.setdefault((target, composite), []).append((K1, K2))
        for (target, composite), pairs in sorted(chains.items()):
            first = MorphismWord(
                source, [Shuffle(pairs[0][0]), Shuffle(pairs[0][1])]
            )
            K3 = singles.get((target, composite))
            if K3 is not None:
                # the chain collapses to a single shuffle
                out.append(RelationInstance(
                    first, MorphismWord(source, [Shuffle(K3)]), "tautau",
                    f"tautau:chain-vs-step {source}->{target} K3={K3}",
                ))
            for K1, K2 in pairs[1:]:
                out.append(RelationInstance(
                    first,
                    MorphismWord(source, [Shuffle(K1), Shuffle(K2)]),
                    "tautau",
                    f"tautau:equal-chains {source}->{target}",
                ))
    return out


def _mixed_instances(max_sum, max_len):
    from .contingency import enumerate_matrices

    comps = _all_compositions(max_sum, max_len)
    out = []
    for alpha in comps:
        if alpha.length == 0:
            continue
        for beta in comps:
            if beta.sum != alpha.sum or beta.length == 0:
                continue
            for K in enumerate_matrices(alpha, beta):
                kap = kappa(K)
                gamma = gamma_of(K)
                left = split_chain(alpha, kap.row).then(
                    MorphismWord(kap.row, [Shuffle(K)])
                ).then(merge_chain(kap.col, beta))
                right = merge_chain(alpha, gamma).then(split_chain(gamma, beta))
                out.append(RelationInstance(
                    left, right, "mixed",
                    f"mixed alpha={alpha} beta={beta} gamma={gamma} K={K}",
                ))
    return out


def semantic_equal(left: MorphismWord, right: MorphismWord, realization=None):
    """Compare two parallel words through a realization.

    Returns ``(True, None)`` or ``(False, (basis_label, left_value,
    right_value))`` with the first differing basis element of the
    target's realization (a word alpha -> beta realizes as a map
    A(beta) -> A(alpha), so evaluation runs over the basis of A(beta)).
    """
    if left.source != right.source or left.target != right.target:
        raise ChainError(
            f"words are not parallel: {left.source}->{left.target} vs "
            f"{right.source}->{right.target}"
        )
    if realization is None:
        from .symfunc import default_realization

        realization = default_realization()
    lmap = realization.realize_word(left)
    rmap = realization.realize_word(right)
    for basis_el in realization.tensor_basis(left.target):
        lv = lmap(basis_el).canonical()
        rv = rmap(basis_el).canonical()
        if lv != rv:
            label = next(iter(basis_el.coeffs))
            return False, (label, lv, rv)
    return True, None


def parse_word(text: str) -> MorphismWord:
    """Parse the word grammar; see :mod:`hopflike.parsing`."""
    from .parsing import parse_word as _parse

    return _parse(text)


def print_word(word: MorphismWord) -> str:
    """Inverse of :func:`parse_word`."""
    pieces = [str(word.source)]
    pieces.extend(str(g) for g in word.steps)
    return " ; ".join(pieces)
