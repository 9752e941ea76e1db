"""Graded symmetric functions over the integers, and tensor spaces on them.

The degree-n piece R(n) has three bases indexed by partitions of n:
complete homogeneous (h), monomial (m) and Schur (s).  Everything is
exact integer arithmetic on sparse coefficient dictionaries; no floats
anywhere.

The algebra is the realization substrate for the composition category:
a word alpha -> beta acts contravariantly as a linear map
A(beta) -> A(alpha) between tensor spaces A(n1, ..., nt) =
R(n1) (x) ... (x) R(nt), with merges acting by graded comultiplication
components, splits by multiplication, and shuffles by slot
permutations.  The realization sits behind :class:`PshRealization` so a
different self-adjoint graded algebra can be substituted later.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import threading
from fractions import Fraction
from functools import lru_cache

from .compositions import Composition
from .contingency import count_matrices, slot_sources
from .category import Merge, Shuffle, Split, apply_generator
from .errors import (
    BasisMismatchError,
    DegreeMismatchError,
    RealizationError,
    UsageError,
)

# ---------------------------------------------------------------------------
# partitions


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """Partitions of n as weakly decreasing tuples, (n) first, (1,..,1) last."""
    if n < 0:
        raise UsageError("partitions_of needs n >= 0")
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def sort_parts(parts) -> tuple:
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def _merge_labels(lam, mu):
    return tuple(sorted(lam + mu, reverse=True))


@lru_cache(maxsize=None)
def _comult_table(lam: tuple) -> tuple:
    """All splittings of h_lam: ((mu, nu, coeff), ...).

    Multiplicative extension of h_n |-> sum_i h_i (x) h_(n-i).
    """
    table = {((), ()): 1}
    for part in lam:
        new = {}
        for (mu, nu), c in table.items():
            for i in range(part + 1):
                left = mu if i == 0 else _merge_labels(mu, (i,))
                right = nu if i == part else _merge_labels(nu, (part - i,))
                key = (left, right)
                new[key] = new.get(key, 0) + c
        table = new
    return tuple(sorted((mu, nu, c) for (mu, nu), c in table.items()))


def comult_splittings(lam) -> tuple:
    """Public view of the splitting table of h_lam."""
    return _comult_table(tuple(lam))


# ---------------------------------------------------------------------------
# elements of one graded piece


class SymElement:
    """Homogeneous integer combination of basis vectors of one degree."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: dict):
        if basis not in ("h", "m", "s"):
            raise BasisMismatchError(f"unknown basis {basis!r}")
        cleaned = {}
        for lam, c in coeffs.items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise DegreeMismatchError(
                    f"label {lam} has weight {sum(lam)}, element degree {degree}"
                )
            if list(lam) != sorted(lam, reverse=True) or (lam and lam[-1] < 1):
                raise UsageError(f"label {lam} is not a partition")
            if c:
                cleaned[lam] = cleaned.get(lam, 0) + int(c)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coeffs", {k: v for k, v in cleaned.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("SymElement is immutable")

    @classmethod
    def basis_element(cls, basis: str, lam) -> "SymElement":
        lam = tuple(lam)
        return cls(sum(lam), basis, {lam: 1})

    @classmethod
    def h(cls, *parts) -> "SymElement":
        return cls.basis_element("h", sort_parts(parts))

    @classmethod
    def one(cls, basis: str = "h") -> "SymElement":
        return cls(0, basis, {(): 1})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _like(self, coeffs):
        return SymElement(self.degree, self.basis, coeffs)

    def __add__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        if other.basis != self.basis:
            raise BasisMismatchError(f"{self.basis} + {other.basis}")
        if other.degree != self.degree and not (self.is_zero or other.is_zero):
            raise DegreeMismatchError("SymElement is homogeneous")
        if self.is_zero and other.degree != self.degree:
            return other
        merged = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            merged[lam] = merged.get(lam, 0) + c
        return self._like(merged)

    def __neg__(self):
        return self._like({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, int):
            return self._like({k: scalar * v for k, v in self.coeffs.items()})
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if isinstance(other, SymElement):
            return h_mult(self, other)
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, SymElement)
            and self.basis == other.basis
            and self.coeffs == other.coeffs
            and (self.degree == other.degree or self.is_zero)
        )

    def __repr__(self):
        return f"SymElement({self.degree}, {self.basis!r}, {self.coeffs!r})"

    def __str__(self):
        return format_sym(self)


def h_mult(x: SymElement, y: SymElement) -> SymElement:
    """Product in the h basis: labels concatenate and re-sort."""
    if x.basis != "h" or y.basis != "h":
        raise BasisMismatchError("h_mult needs both factors in the h basis")
    coeffs = {}
    for lam, c in x.coeffs.items():
        for mu, d in y.coeffs.items():
            key = _merge_labels(lam, mu)
            coeffs[key] = coeffs.get(key, 0) + c * d
    return SymElement(x.degree + y.degree, "h", coeffs)


def h_comult(x: SymElement) -> list:
    """All graded splittings of x: [((u, a-u), TensorElement), ...]."""
    if x.basis != "h":
        raise BasisMismatchError("h_comult needs the h basis")
    a = x.degree
    buckets = {u: {} for u in range(a + 1)}
    for lam, c in x.coeffs.items():
        for mu, nu, d in _comult_table(lam):
            bucket = buckets[sum(mu)]
            key = (mu, nu)
            bucket[key] = bucket.get(key, 0) + c * d
    return [
        ((u, a - u), TensorElement((u, a - u), buckets[u])) for u in range(a + 1)
    ]


def comult_component(x: SymElement, d1: int, d2: int) -> "TensorElement":
    """The (d1, d2) graded piece of the comultiplication of x."""
    if x.degree != d1 + d2:
        raise DegreeMismatchError(f"({d1},{d2}) does not split degree {x.degree}")
    coeffs = {}
    for lam, c in x.coeffs.items():
        for mu, nu, d in _comult_table(lam):
            if sum(mu) == d1:
                coeffs[(mu, nu)] = coeffs.get((mu, nu), 0) + c * d
    return TensorElement((d1, d2), coeffs)


# ---------------------------------------------------------------------------
# basis transitions and the Hall pairing


class TransitionCache:
    """Per-degree h -> m transition matrices, optionally persisted.

    The matrix entry at (lam, mu) is the number of non-negative integer
    matrices with row margins lam and column margins mu.  The file is
    JSON with one checksummed block per degree; a block whose checksum
    does not match is silently recomputed.  Thread-safe: concurrent
    reads, idempotent fill.
    """

    FORMAT_VERSION = 1

    def __init__(self, path=None):
        self._lock = threading.Lock()
        self._degrees = {}
        self._path = path
        self._loaded = path is None

    @property
    def path(self):
        return self._path

    def set_path(self, path):
        with self._lock:
            self._path = path
            self._degrees = {}
            self._loaded = path is None

    @staticmethod
    def _key(lam, mu):
        return ",".join(map(str, lam)) + "|" + ",".join(map(str, mu))

    @staticmethod
    def _unkey(text):
        lam_s, mu_s = text.split("|")
        lam = tuple(int(v) for v in lam_s.split(",") if v)
        mu = tuple(int(v) for v in mu_s.split(",") if v)
        return lam, mu

    @staticmethod
    def _checksum(counts: dict) -> str:
        canon = json.dumps(
            {k: counts[k] for k in sorted(counts)}, separators=(",", ":")
        )
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()

    def _load(self):
        if self._loaded:
            return
        self._loaded = True
        try:
            with open(self._path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return
        if data.get("format_version") != self.FORMAT_VERSION:
            return
        for deg_s, block in data.get("degrees", {}).items():
            counts = block.get("counts", {})
            if block.get("sha256") != self._checksum(counts):
                continue  # corrupted block: recompute later
            self._degrees[int(deg_s)] = {
                self._unkey(k): v for k, v in counts.items()
            }

    def _save(self):
        if self._path is None:
            return
        payload = {
            "format_version": self.FORMAT_VERSION,
            "degrees": {},
        }
        for deg in sorted(self._degrees):
            counts = {
                self._key(lam, mu): v
                for (lam, mu), v in self._degrees[deg].items()
            }
            payload["degrees"][str(deg)] = {
                "counts": {k: counts[k] for k in sorted(counts)},
                "sha256": self._checksum(counts),
            }
        tmp = self._path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
        os.replace(tmp, self._path)

    def degree_matrix(self, degree: int) -> dict:
        """Mapping (lam, mu) -> margin count, for all partition pairs."""
        with self._lock:
            self._load()
            if degree not in self._degrees:
                parts = partitions_of(degree)
                self._degrees[degree] = {
                    (lam, mu): count_matrices(lam, mu)
                    for lam in parts
                    for mu in parts
                }
                self._save()
            return self._degrees[degree]

    def stats(self) -> dict:
        with self._lock:
            self._load()
            return {
                "path": self._path or "(memory only)",
                "degrees": sorted(self._degrees),
                "entries": sum(len(v) for v in self._degrees.values()),
            }

    def clear(self):
        with self._lock:
            self._degrees = {}
            if self._path is not None and os.path.exists(self._path):
                os.remove(self._path)
            self._loaded = self._path is None


_default_cache = TransitionCache()


def transition_cache() -> TransitionCache:
    return _default_cache


def h_to_m(x: SymElement) -> SymElement:
    """Expand an h element in the monomial basis."""
    if x.basis != "h":
        raise BasisMismatchError("h_to_m needs the h basis")
    matrix = transition_cache().degree_matrix(x.degree)
    coeffs = {}
    for lam, c in x.coeffs.items():
        for mu in partitions_of(x.degree):
            n = matrix[(lam, mu)]
            if n:
                coeffs[mu] = coeffs.get(mu, 0) + c * n
    return SymElement(x.degree, "m", coeffs)


@lru_cache(maxsize=None)
def _inverse_transition(degree: int) -> tuple:
    """Inverse of the transposed h->m matrix, as integer row tuples."""
    parts = partitions_of(degree)
    k = len(parts)
    matrix = transition_cache().degree_matrix(degree)
    # Gauss-Jordan over exact rationals; the matrix is unimodular, so
    # the inverse is integral and the int() casts below cannot lose.
    aug = [
        [Fraction(matrix[(parts[j], parts[i])]) for j in range(k)]
        + [Fraction(1 if i == j else 0) for j in range(k)]
        for i in range(k)
    ]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    rows = []
    for r in range(k):
        row = []
        for v in aug[r][k:]:
            if v.denominator != 1:
                raise UsageError("transition matrix is not unimodular")
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def m_to_h(x: SymElement) -> SymElement:
    """Expand a monomial element in the h basis (exact integer inverse)."""
    if x.basis != "m":
        raise BasisMismatchError("m_to_h needs the m basis")
    parts = partitions_of(x.degree)
    index = {lam: i for i, lam in enumerate(parts)}
    inverse = _inverse_transition(x.degree)
    vec = [0] * len(parts)
    for mu, c in x.coeffs.items():
        vec[index[mu]] = c
    coeffs = {}
    for i, lam in enumerate(parts):
        total = sum(inverse[i][j] * vec[j] for j in range(len(parts)))
        if total:
            coeffs[lam] = total
    return SymElement(x.degree, "h", coeffs)


def schur(lam) -> SymElement:
    """Schur function as an h combination (Jacobi-Trudi determinant)."""
    lam = tuple(lam)
    rows = len(lam)
    if rows == 0:
        return SymElement.one()
    coeffs = {}
    for perm in itertools.permutations(range(rows)):
        degrees = []
        dead = False
        for i in range(rows):
            d = lam[i] - i + perm[i]
            if d < 0:
                dead = True
                break
            if d > 0:
                degrees.append(d)
        if dead:
            continue
        inversions = sum(
            1
            for i in range(rows)
            for j in range(i + 1, rows)
            if perm[i] > perm[j]
        )
        sign = -1 if inversions % 2 else 1
        key = tuple(sorted(degrees, reverse=True))
        coeffs[key] = coeffs.get(key, 0) + sign
    return SymElement(sum(lam), "h", coeffs)


def to_h(x: SymElement) -> SymElement:
    if x.basis == "h":
        return x
    if x.basis == "m":
        return m_to_h(x)
    total = SymElement(x.degree, "h", {})
    for lam, c in x.coeffs.items():
        total = total + c * schur(lam)
    return total


def hall_inner(x: SymElement, y: SymElement) -> int:
    """Pairing with <h_lam, m_mu> = delta; Schur basis orthonormal."""
    if x.degree != y.degree:
        raise DegreeMismatchError(
            f"pairing needs equal degrees, got {x.degree} and {y.degree}"
        )
    xh = to_h(x)
    yh = to_h(y)
    matrix = transition_cache().degree_matrix(x.degree)
    total = 0
    for lam, c in xh.coeffs.items():
        for mu, d in yh.coeffs.items():
            total += c * d * matrix[(lam, mu)]
    return total


# ---------------------------------------------------------------------------
# tensor spaces


class TensorElement:
    """Integer combination of h-basis tensors over a raw shape.

    The shape is a tuple of non-negative slot degrees (zeros appear in
    intermediate padded states); each label is a tuple of partitions
    whose weights match the shape slotwise.
    """

    __slots__ = ("shape", "coeffs")

    def __init__(self, shape, coeffs: dict):
        shape = tuple(int(v) for v in shape)
        cleaned = {}
        for label, c in coeffs.items():
            label = tuple(tuple(p) for p in label)
            if len(label) != len(shape):
                raise RealizationError(
                    f"label {label} has {len(label)} slots, shape {shape}"
                )
            for lam, d in zip(label, shape):
                if sum(lam) != d:
                    raise RealizationError(
                        f"label {label} does not match shape {shape}"
                    )
            if c:
                cleaned[label] = cleaned.get(label, 0) + int(c)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(
            self, "coeffs", {k: v for k, v in cleaned.items() if v}
        )

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    @classmethod
    def zero(cls, shape) -> "TensorElement":
        return cls(shape, {})

    @classmethod
    def basis(cls, label) -> "TensorElement":
        label = tuple(tuple(p) for p in label)
        return cls(tuple(sum(p) for p in label), {label: 1})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.shape != self.shape:
            if self.is_zero and not other.is_zero:
                return other
            if other.is_zero:
                return self
            raise RealizationError(f"shape mismatch {self.shape} vs {other.shape}")
        merged = dict(self.coeffs)
        for label, c in other.coeffs.items():
            merged[label] = merged.get(label, 0) + c
        return TensorElement(self.shape, merged)

    def __neg__(self):
        return TensorElement(self.shape, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, int):
            return TensorElement(
                self.shape, {k: scalar * v for k, v in self.coeffs.items()}
            )
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.shape == other.shape and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TensorElement({self.shape!r}, {self.coeffs!r})"

    def __str__(self):
        return format_tensor(self)

    def tensor(self, other: "TensorElement") -> "TensorElement":
        coeffs = {}
        for l1, c in self.coeffs.items():
            for l2, d in other.coeffs.items():
                coeffs[l1 + l2] = c * d
        return TensorElement(self.shape + other.shape, coeffs)

    def canonical(self) -> "TensorElement":
        """Strip zero-degree slots from the shape and every label."""
        keep = [i for i, d in enumerate(self.shape) if d > 0]
        if len(keep) == len(self.shape):
            return self
        shape = tuple(self.shape[i] for i in keep)
        coeffs = {}
        for label, c in self.coeffs.items():
            key = tuple(label[i] for i in keep)
            coeffs[key] = coeffs.get(key, 0) + c
        return TensorElement(shape, coeffs)


def tensor_comult_component(
    el: TensorElement, slot: int, d1: int, d2: int
) -> TensorElement:
    """Split ``slot`` into degrees (d1, d2) by comultiplication."""
    shape = el.shape
    if not 0 <= slot < len(shape) or shape[slot] != d1 + d2:
        raise RealizationError(
            f"cannot split slot {slot} of shape {shape} into ({d1},{d2})"
        )
    out_shape = shape[:slot] + (d1, d2) + shape[slot + 1:]
    coeffs = {}
    for label, c in el.coeffs.items():
        for mu, nu, d in _comult_table(label[slot]):
            if sum(mu) == d1:
                key = label[:slot] + (mu, nu) + label[slot + 1:]
                coeffs[key] = coeffs.get(key, 0) + c * d
    return TensorElement(out_shape, coeffs)


def tensor_mult_slots(el: TensorElement, slot: int) -> TensorElement:
    """Multiply ``slot`` and ``slot + 1`` into a single slot."""
    shape = el.shape
    if not 0 <= slot < len(shape) - 1:
        raise RealizationError(f"cannot join slot {slot} of shape {shape}")
    out_shape = shape[:slot] + (shape[slot] + shape[slot + 1],) + shape[slot + 2:]
    coeffs = {}
    for label, c in el.coeffs.items():
        merged = _merge_labels(label[slot], label[slot + 1])
        key = label[:slot] + (merged,) + label[slot + 2:]
        coeffs[key] = coeffs.get(key, 0) + c
    return TensorElement(out_shape, coeffs)


def tensor_permute(el: TensorElement, sources) -> TensorElement:
    """Reorder slots: output slot p is input slot ``sources[p]``."""
    sources = tuple(sources)
    if sorted(sources) != list(range(len(el.shape))):
        raise RealizationError(f"bad slot permutation {sources}")
    shape = tuple(el.shape[s] for s in sources)
    coeffs = {}
    for label, c in el.coeffs.items():
        key = tuple(label[s] for s in sources)
        coeffs[key] = coeffs.get(key, 0) + c
    return TensorElement(shape, coeffs)


# ---------------------------------------------------------------------------
# the contravariant realization


class RealizedMap:
    """Linear map between tensor spaces, evaluated lazily per element."""

    __slots__ = ("domain_shape", "codomain_shape", "_fn")

    def __init__(self, domain_shape, codomain_shape, fn):
        object.__setattr__(self, "domain_shape", tuple(domain_shape))
        object.__setattr__(self, "codomain_shape", tuple(codomain_shape))
        object.__setattr__(self, "_fn", fn)

    def __setattr__(self, name, value):
        raise AttributeError("RealizedMap is immutable")

    def __call__(self, el: TensorElement) -> TensorElement:
        if el.shape != self.domain_shape:
            raise RealizationError(
                f"element shape {el.shape} does not match map domain "
                f"{self.domain_shape}"
            )
        return self._fn(el)

    def after(self, other: "RealizedMap") -> "RealizedMap":
        if other.codomain_shape != self.domain_shape:
            raise RealizationError("maps do not compose")
        return RealizedMap(
            other.domain_shape, self.codomain_shape,
            lambda el: self._fn(other(el)),
        )


class PshRealization:
    """Realize category words on the symmetric-functions tensor spaces.

    Contravariant: a word alpha -> beta becomes a map
    A(beta) -> A(alpha).
    """

    def tensor_basis(self, comp) -> list:
        """h-tensor basis of A(comp), in per-slot partition order."""
        parts = comp.parts if isinstance(comp, Composition) else tuple(comp)
        labels = itertools.product(*(partitions_of(d) for d in parts))
        return [TensorElement(parts, {label: 1}) for label in labels]

    def realize_generator(self, g, domain: Composition) -> RealizedMap:
        codomain = apply_generator(g, domain)
        if isinstance(g, Merge):
            slot = g.i - 1
            d1, d2 = domain.parts[slot], domain.parts[slot + 1]
            return RealizedMap(
                codomain.parts, domain.parts,
                lambda el: tensor_comult_component(el, slot, d1, d2),
            )
        if isinstance(g, Split):
            slot = g.i - 1
            return RealizedMap(
                codomain.parts, domain.parts,
                lambda el: tensor_mult_slots(el, slot),
            )
        if isinstance(g, Shuffle):
            sources = slot_sources(g.K)
            return RealizedMap(
                codomain.parts, domain.parts,
                lambda el: tensor_permute(el, sources),
            )
        raise RealizationError(f"unknown generator {g!r}")

    def realize_word(self, word) -> RealizedMap:
        maps = [
            self.realize_generator(g, dom)
            for g, dom in zip(word.steps, word.domains())
        ]

        def fn(el):
            for m in reversed(maps):
                el = m(el)
            return el

        return RealizedMap(word.target.parts, word.source.parts, fn)


_default_realization = PshRealization()


def default_realization() -> PshRealization:
    return _default_realization


# ---------------------------------------------------------------------------
# the big graded sum over all compositions


class DirectSumElement:
    """Finitely supported family of tensor elements, one per composition."""

    __slots__ = ("components",)

    def __init__(self, components: dict = ()):
        cleaned = {}
        for comp, el in dict(components).items():
            if not isinstance(comp, Composition):
                comp = Composition(comp)
            if el.shape != comp.parts:
                raise RealizationError(
                    f"component {comp} holds an element of shape {el.shape}"
                )
            if not el.is_zero:
                cleaned[comp] = cleaned.get(comp, TensorElement.zero(comp.parts)) + el
        object.__setattr__(
            self, "components", {k: v for k, v in cleaned.items() if not v.is_zero}
        )

    def __setattr__(self, name, value):
        raise AttributeError("DirectSumElement is immutable")

    @classmethod
    def from_tensor(cls, el: TensorElement) -> "DirectSumElement":
        el = el.canonical()
        return cls({Composition(el.shape): el})

    @classmethod
    def unit(cls) -> "DirectSumElement":
        return cls({Composition(): TensorElement((), {(): 1})})

    @property
    def is_zero(self) -> bool:
        return not self.components

    def items(self):
        return sorted(self.components.items(), key=lambda kv: kv[0])

    def __add__(self, other):
        merged = dict(self.components)
        for comp, el in other.components.items():
            merged[comp] = merged.get(comp, TensorElement.zero(comp.parts)) + el
        return DirectSumElement(merged)

    def __eq__(self, other):
        return (
            isinstance(other, DirectSumElement)
            and self.components == other.components
        )

    def __repr__(self):
        return f"DirectSumElement({self.components!r})"


def _slotwise_product(shape_a, label_a, shape_b, label_b):
    shape = tuple(a + b for a, b in zip(shape_a, shape_b))
    label = tuple(
        _merge_labels(pa, pb) for pa, pb in zip(label_a, label_b)
    )
    return shape, label


def big_product(x: DirectSumElement, y: DirectSumElement) -> DirectSumElement:
    """Padded slotwise product.

    For each component pair the shorter shape is padded with zero slots
    to the longer length in every order-preserving way; a zero slot
    multiplies as the unit.  Components of equal length multiply
    slotwise with no padding.
    """
    total = {}
    for comp_x, el_x in x.items():
        for comp_y, el_y in y.items():
            p, q = len(comp_x.parts), len(comp_y.parts)
            if p <= q:
                short_shape, short_el = comp_x.parts, el_x
                long_shape, long_el = comp_y.parts, el_y
            else:
                short_shape, short_el = comp_y.parts, el_y
                long_shape, long_el = comp_x.parts, el_x
            length = len(long_shape)
            for positions in itertools.combinations(range(length), len(short_shape)):
                padded_shape = [0] * length
                for pos, d in zip(positions, short_shape):
                    padded_shape[pos] = d
                for label_s, c in short_el.coeffs.items():
                    padded_label = [()] * length
                    for pos, lam in zip(positions, label_s):
                        padded_label[pos] = lam
                    for label_l, d in long_el.coeffs.items():
                        shape, label = _slotwise_product(
                            tuple(padded_shape), tuple(padded_label),
                            long_shape, label_l,
                        )
                        comp = Composition(shape)
                        bucket = total.setdefault(comp, {})
                        bucket[label] = bucket.get(label, 0) + c * d
    return DirectSumElement(
        {comp: TensorElement(comp.parts, coeffs) for comp, coeffs in total.items()}
    )


def big_coproduct(x: TensorElement) -> list:
    """All single-slot splittings of x, keyed by (slot, left degree).

    Slots are 1-based; each component keeps its raw shape, so zero
    degrees appear at the ends of the ranges.  A degree-0 element has
    one trivial component.
    """
    if not x.shape:
        return [((1, 0), x)]
    out = []
    for i, d in enumerate(x.shape, start=1):
        for a in range(d + 1):
            out.append(((i, a), tensor_comult_component(x, i - 1, a, d - a)))
    return out


# ---------------------------------------------------------------------------
# formatting (the element syntax used by the CLI and reports)


def _format_label(basis: str, lam) -> str:
    return f"{basis}[{','.join(str(p) for p in lam)}]"


def _joined_terms(terms) -> str:
    if not terms:
        return "0"
    out = []
    for i, (coeff, body) in enumerate(terms):
        mag = abs(coeff)
        piece = body if mag == 1 and body else (
            f"{mag}*{body}" if body else str(mag)
        )
        if i == 0:
            out.append(piece if coeff > 0 else f"-{piece}")
        else:
            out.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
    return " ".join(out)


def format_sym(x: SymElement) -> str:
    terms = [
        (x.coeffs[lam], _format_label(x.basis, lam))
        for lam in sorted(x.coeffs, reverse=True)
    ]
    return _joined_terms(terms)


def format_tensor(el: TensorElement) -> str:
    terms = []
    for label in sorted(el.coeffs, reverse=True):
        body = " (x) ".join(_format_label("h", lam) for lam in label)
        terms.append((el.coeffs[label], body))
    return _joined_terms(terms)


def format_graded(components: dict) -> str:
    """Render a {(i, j): TensorElement} sum, degree-sorted."""
    pieces = []
    for key in sorted(components):
        el = components[key]
        if not el.is_zero:
            pieces.append(f"deg{key}: {format_tensor(el)}")
    return "; ".join(pieces) if pieces else "0"
