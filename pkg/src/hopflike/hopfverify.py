"""Identity sweeps on the realized composition category.

Four layers of checks, all exact:

* Hopf compatibility of the graded multiplication and comultiplication;
* the square condition: split-shuffle-merge towers against the
  merge-then-split route, in a summed and a per-matrix reading (the
  per-matrix reading is false and the recorded counterexample is kept
  as a fixture);
* the worked two-margin diagrams, including the block-diagonal case;
* the bidegree-(1,2) machinery: the modified multiplication that kills
  triple products, its Hopf defect, and the six-term expansion that
  equals the defect.

The six-term expansion follows the displayed six maps, with one
correction: each of the six index lines meets two neighbouring lines in
a corner term, and summing all six closed ranges would count every
corner twice.  Corners are assigned to the lowest-numbered map that
covers them, which makes the expansion equal the defect exactly.
"""

from __future__ import annotations

from .compositions import Composition, common_coarsenings, refines
from .contingency import (
    ContingencyMatrix,
    enumerate_matrices,
    transpose,
)
from .category import (
    MorphismWord,
    Shuffle,
    gamma_of,
    merge_chain,
    semantic_equal,
    split_chain,
)
from .errors import SumMismatchError, UsageError
from .reports import VerificationReport
from .symfunc import (
    SymElement,
    TensorElement,
    comult_splittings,
    big_coproduct,
    big_product,
    DirectSumElement,
    default_realization,
    format_graded,
    format_tensor,
    partitions_of,
    _merge_labels,
    tensor_permute,
)


# ---------------------------------------------------------------------------
# Hopf compatibility of one graded piece


def check_hopf_compat(max_degree: int) -> VerificationReport:
    """Compare comult(x*y) with the shuffled product of comults.

    Componentwise over the (u, v) rectangle: the (j, a+b-j) piece of
    comult(x*y) must equal the sum over u+v = j of
    (x_u * y_v) (x) (x_rest * y_rest).
    """
    if max_degree < 1:
        raise UsageError("max_degree must be >= 1")
    report = VerificationReport("hopf-compat", {"max_degree": max_degree})
    for a in range(max_degree + 1):
        for b in range(max_degree - a + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    report.checked += 1
                    left = {}
                    for m1, n1, c in comult_splittings(_merge_labels(lam, mu)):
                        bucket = left.setdefault(sum(m1), {})
                        bucket[(m1, n1)] = bucket.get((m1, n1), 0) + c
                    right = {}
                    for m1, n1, c1 in comult_splittings(lam):
                        for m2, n2, c2 in comult_splittings(mu):
                            j = sum(m1) + sum(m2)
                            key = (_merge_labels(m1, m2), _merge_labels(n1, n2))
                            bucket = right.setdefault(j, {})
                            bucket[key] = bucket.get(key, 0) + c1 * c2
                    for j in range(a + b + 1):
                        lv = TensorElement((j, a + b - j), left.get(j, {}))
                        rv = TensorElement((j, a + b - j), right.get(j, {}))
                        if lv != rv:
                            report.record(
                                f"degrees a={a} b={b} component j={j}",
                                f"h{list(lam)} (x) h{list(mu)}",
                                format_tensor(lv),
                                format_tensor(rv),
                            )
    return report


# ---------------------------------------------------------------------------
# square condition (towers through a margin matrix)


def _tower_word(alpha, beta, K) -> MorphismWord:
    """Word beta -> alpha realizing the forward tower A(alpha) -> A(beta).

    Comultiply along alpha into the row refinement, shuffle row order to
    column order, multiply out to beta.  Realized contravariantly, a
    word from beta gives a map out of A(alpha), so the shuffle step uses
    the transposed matrix.
    """
    from .contingency import kappa

    kap = kappa(K)
    return (
        split_chain(beta, kap.col)
        .then(MorphismWord(kap.col, [Shuffle(transpose(K))]))
        .then(merge_chain(kap.row, alpha))
    )


def _coarse_route_word(alpha, beta, gamma) -> MorphismWord:
    """Word beta -> alpha realizing multiply-to-gamma then comultiply."""
    return merge_chain(beta, gamma).then(split_chain(gamma, alpha))


def check_square_condition(alpha, beta, reading: str = "summed") -> VerificationReport:
    """Towers through every margin matrix against the coarse route.

    The route multiplies alpha down to ``(n)`` and comultiplies out to
    beta.  In the ``summed`` reading the towers are added over all
    matrices with the given margins before comparing; in the ``per-k``
    reading every matrix is compared alone, which records genuine
    counterexamples (kept as fixtures).
    """
    if reading not in ("summed", "per-k"):
        raise UsageError(f"unknown reading {reading!r}")
    alpha = alpha if isinstance(alpha, Composition) else Composition(alpha)
    beta = beta if isinstance(beta, Composition) else Composition(beta)
    if alpha.sum != beta.sum:
        raise SumMismatchError(f"margins {alpha} and {beta} have different sums")
    report = VerificationReport(
        "square-condition",
        {"alpha": str(alpha), "beta": str(beta), "reading": reading},
    )
    real = default_realization()
    gamma = Composition([alpha.sum]) if alpha.sum else Composition()
    route = real.realize_word(_coarse_route_word(alpha, beta, gamma))
    matrices = enumerate_matrices(alpha, beta)
    towers = [
        (K, real.realize_word(_tower_word(alpha, beta, K))) for K in matrices
    ]
    basis = real.tensor_basis(alpha)
    if reading == "summed":
        report.checked += len(basis)
        for el in basis:
            total = TensorElement.zero(beta.parts)
            for _, tower in towers:
                total = total + tower(el)
            want = route(el)
            if total.canonical() != want.canonical():
                report.record(
                    f"alpha={alpha} beta={beta} gamma={gamma} "
                    f"#K={len(matrices)} reading=summed",
                    format_tensor(el),
                    format_tensor(total.canonical()),
                    format_tensor(want.canonical()),
                )
    else:
        for K, tower in towers:
            report.checked += 1
            for el in basis:
                got = tower(el).canonical()
                want = route(el).canonical()
                if got != want:
                    report.record(
                        f"alpha={alpha} beta={beta} gamma={gamma} "
                        f"K={K} reading=per-k",
                        format_tensor(el),
                        format_tensor(got),
                        format_tensor(want),
                    )
                    break
    return report


# ---------------------------------------------------------------------------
# relation families through the realization


def check_relation_family(family: str, max_sum: int, max_len: int) -> VerificationReport:
    """Run semantic equality over every enumerated instance of a family."""
    from .category import enumerate_relation_instances

    if family == "mixed":
        return check_mixed_relations(max_sum, max_len)
    report = VerificationReport(
        f"relations-{family}", {"max_sum": max_sum, "max_len": max_len}
    )
    for instance in enumerate_relation_instances(family, max_sum, max_len):
        report.checked += 1
        equal, witness = semantic_equal(instance.left, instance.right)
        if not equal:
            label, lv, rv = witness
            report.record(
                instance.description,
                format_tensor(TensorElement.basis(label)),
                format_tensor(lv),
                format_tensor(rv),
            )
    return report


def check_mixed_relations(max_sum: int, max_len: int) -> VerificationReport:
    """Summed reading of the mixed family, grouped by coarsening.

    For margins (alpha, beta) and a common coarsening gamma, the towers
    of all matrices supported inside gamma's diagonal blocks add up to
    the gamma route.  The per-matrix reading is handled (and refuted) by
    :func:`check_square_condition`.
    """
    from .compositions import enumerate_compositions

    report = VerificationReport(
        "mixed-relations",
        {"max_sum": max_sum, "max_len": max_len, "reading": "summed"},
    )
    real = default_realization()
    comps = [
        c
        for n in range(1, max_sum + 1)
        for c in enumerate_compositions(n, max_len)
    ]
    for alpha in comps:
        for beta in comps:
            if beta.sum != alpha.sum:
                continue
            matrices = [
                (K, gamma_of(K)) for K in enumerate_matrices(alpha, beta)
            ]
            for gamma in common_coarsenings(alpha, beta):
                group = [
                    K
                    for K, fine in matrices
                    if refines(gamma, fine) is not None
                ]
                report.checked += 1
                route = real.realize_word(_coarse_route_word(alpha, beta, gamma))
                towers = [
                    real.realize_word(_tower_word(alpha, beta, K)) for K in group
                ]
                for el in real.tensor_basis(alpha):
                    total = TensorElement.zero(beta.parts)
                    for tower in towers:
                        total = total + tower(el)
                    want = route(el)
                    if total.canonical() != want.canonical():
                        report.record(
                            f"mixed alpha={alpha} beta={beta} gamma={gamma} "
                            f"#K={len(group)}",
                            format_tensor(el),
                            format_tensor(total.canonical()),
                            format_tensor(want.canonical()),
                        )
                        break
    return report


def check_worked_examples(max_n: int) -> VerificationReport:
    """The three two-margin diagram shapes, in the summed reading.

    Shapes: 2x2 and 2x3 margin matrices against the route through (n),
    and block-diagonal 4x5 matrices against the route through the
    two-part coarsening located by :func:`gamma_of`.
    """
    from .compositions import enumerate_compositions

    report = VerificationReport("worked-examples", {"max_n": max_n})
    real = default_realization()

    def run_case(alpha, beta, gamma, matrices, tag):
        report.checked += 1
        route = real.realize_word(_coarse_route_word(alpha, beta, gamma))
        towers = [
            real.realize_word(_tower_word(alpha, beta, K)) for K in matrices
        ]
        for el in real.tensor_basis(alpha):
            total = TensorElement.zero(beta.parts)
            for tower in towers:
                total = total + tower(el)
            want = route(el)
            if total.canonical() != want.canonical():
                report.record(
                    f"{tag} alpha={alpha} beta={beta} gamma={gamma}",
                    format_tensor(el),
                    format_tensor(total.canonical()),
                    format_tensor(want.canonical()),
                )
                return

    for n in range(2, max_n + 1):
        gamma = Composition([n])
        for r in (2, 3):
            for alpha in enumerate_compositions(n, 2):
                if alpha.length != 2:
                    continue
                for beta in enumerate_compositions(n, r):
                    if beta.length != r:
                        continue
                    run_case(
                        alpha, beta, gamma,
                        enumerate_matrices(alpha, beta),
                        f"2x{r}",
                    )

    for n1 in range(3, max_n - 1):
        for n2 in range(2, max_n - n1 + 1):
            gamma = Composition([n1, n2])
            for a_top in enumerate_compositions(n1, 2):
                if a_top.length != 2:
                    continue
                for b_top in enumerate_compositions(n1, 3):
                    if b_top.length != 3:
                        continue
                    for a_bot in enumerate_compositions(n2, 2):
                        if a_bot.length != 2:
                            continue
                        for b_bot in enumerate_compositions(n2, 2):
                            if b_bot.length != 2:
                                continue
                            alpha = Composition(a_top.parts + a_bot.parts)
                            beta = Composition(b_top.parts + b_bot.parts)
                            matrices = [
                                _block_diag(K1, K2)
                                for K1 in enumerate_matrices(a_top, b_top)
                                for K2 in enumerate_matrices(a_bot, b_bot)
                            ]
                            for K in matrices:
                                # every block matrix factors through gamma
                                assert refines(gamma, gamma_of(K)) is not None
                            run_case(alpha, beta, gamma, matrices, "block-diagonal")
    return report


def _block_diag(K1: ContingencyMatrix, K2: ContingencyMatrix) -> ContingencyMatrix:
    rows = []
    for row in K1.entries:
        rows.append(row + (0,) * K2.ncols)
    for row in K2.entries:
        rows.append((0,) * K1.ncols + row)
    return ContingencyMatrix(rows)


# ---------------------------------------------------------------------------
# bidegree (1, 2): modified multiplication, defect, six-term expansion


def _require_triple(x: TensorElement):
    if len(x.shape) != 3:
        raise UsageError(f"need a three-slot element, got shape {x.shape}")


def modified_mult_12(x: TensorElement) -> SymElement:
    """Multiplication of one factor against a pair: zero on triple support.

    Vanishes when all three slot degrees are positive; otherwise the
    two surviving factors multiply.
    """
    _require_triple(x)
    a, b, c = x.shape
    total = a + b + c
    if a > 0 and b > 0 and c > 0:
        return SymElement(total, "h", {})
    if a == 0:
        i, j = 1, 2
    elif b == 0:
        i, j = 0, 2
    else:
        i, j = 0, 1
    coeffs = {}
    for label, co in x.coeffs.items():
        key = _merge_labels(label[i], label[j])
        coeffs[key] = coeffs.get(key, 0) + co
    return SymElement(total, "h", coeffs)


def _modified_product_label(labels, degrees):
    """Merged label of a modified triple product, or None when it dies."""
    d1, d2, d3 = degrees
    if d1 > 0 and d2 > 0 and d3 > 0:
        return None
    if d1 == 0:
        return _merge_labels(labels[1], labels[2])
    if d2 == 0:
        return _merge_labels(labels[0], labels[2])
    return _merge_labels(labels[0], labels[1])


def _normalize_graded(buckets: dict) -> dict:
    out = {}
    for key, coeffs in buckets.items():
        el = TensorElement(key, coeffs)
        if not el.is_zero:
            out[key] = el
    return out


def hopf_defect_12(x: TensorElement) -> dict:
    """Difference of the two Hopf composites on a three-slot element.

    Expands comultiplication on every slot, regroups first halves
    against second halves, applies the modified multiplication to both
    triples, and subtracts comult(modified product).  Keys of the result
    are output bidegrees (i, j).
    """
    _require_triple(x)
    buckets = {}
    for label, co in x.coeffs.items():
        l1, l2, l3 = label
        for m1, n1, c1 in comult_splittings(l1):
            for m2, n2, c2 in comult_splittings(l2):
                for m3, n3, c3 in comult_splittings(l3):
                    left_degrees = (sum(m1), sum(m2), sum(m3))
                    right_degrees = (sum(n1), sum(n2), sum(n3))
                    left = _modified_product_label((m1, m2, m3), left_degrees)
                    if left is None:
                        continue
                    right = _modified_product_label((n1, n2, n3), right_degrees)
                    if right is None:
                        continue
                    key = (sum(left_degrees), sum(right_degrees))
                    bucket = buckets.setdefault(key, {})
                    lab = (left, right)
                    bucket[lab] = bucket.get(lab, 0) + co * c1 * c2 * c3
    product = modified_mult_12(x)
    for lam, co in product.coeffs.items():
        for mu, nu, c in comult_splittings(lam):
            key = (sum(mu), sum(nu))
            bucket = buckets.setdefault(key, {})
            bucket[(mu, nu)] = bucket.get((mu, nu), 0) - co * c
    return _normalize_graded(buckets)


def six_term_12(x: TensorElement) -> dict:
    """The six-map expansion of the Hopf defect on positive tridegrees.

    Each map comultiplies one slot, permutes the middle factors and
    multiplies pairwise; the six index ranges are half-opened at shared
    corners (lowest-numbered map wins) so the total counts every
    surviving term exactly once.
    """
    _require_triple(x)
    a, b, c = x.shape
    if a == 0 or b == 0 or c == 0:
        raise UsageError(
            "six_term_12 needs positive degrees in all three slots; "
            "zero tridegrees satisfy the Hopf axiom instead"
        )
    buckets = {}

    def add(i, j, label, coeff):
        bucket = buckets.setdefault((i, j), {})
        bucket[label] = bucket.get(label, 0) + coeff

    for (lx, ly, lz), co in x.coeffs.items():
        for z1, z2, cz in comult_splittings(lz):
            w = sum(z1)
            # (1): x z1 (x) y z2, full range
            add(a + w, b + c - w,
                (_merge_labels(lx, z1), _merge_labels(ly, z2)), co * cz)
            # (2): y z1 (x) x z2, full range
            add(b + w, a + c - w,
                (_merge_labels(ly, z1), _merge_labels(lx, z2)), co * cz)
        for y1, y2, cy in comult_splittings(ly):
            v = sum(y1)
            if v >= 1:
                # (3): x y1 (x) z y2; v=0 corner already in (1)
                add(a + v, c + b - v,
                    (_merge_labels(lx, y1), _merge_labels(lz, y2)), co * cy)
                # (4): z y2 (x) y1 x; the |y1|=0 corner already in (2)
                add(c + b - v, v + a,
                    (_merge_labels(lz, y2), _merge_labels(y1, lx)), co * cy)
        for x1, x2, cx in comult_splittings(lx):
            u = sum(x1)
            if 1 <= u <= a - 1:
                # (5): x1 y (x) x2 z; u=0 corner in (2), u=a corner in (3)
                add(u + b, a - u + c,
                    (_merge_labels(x1, ly), _merge_labels(x2, lz)), co * cx)
                # (6): x1 z (x) x2 y; u=0 corner in (4), u=a corner in (1)
                add(u + c, a - u + b,
                    (_merge_labels(x1, lz), _merge_labels(x2, ly)), co * cx)
    return _normalize_graded(buckets)


def six_term_21(x: TensorElement) -> dict:
    """Mirror-image expansion for the pair-then-single bracketing.

    Obtained by reversing the slots, applying the (1,2) expansion and
    mirroring the output pair.
    """
    _require_triple(x)
    mirrored = tensor_permute(x, (2, 1, 0))
    out = {}
    for (i, j), el in six_term_12(mirrored).items():
        out[(j, i)] = tensor_permute(el, (1, 0))
    return out


def check_six_cases(a: int, b: int, c: int) -> VerificationReport:
    """Survival pattern of the shuffled triple-comult expansion.

    For positive degrees (a, b, c) the (u, v, w) summand survives
    exactly when one of the six patterns holds: u=0 with v=b, u=0 with
    w=c, v=0 with u=a, v=0 with w=c, w=0 with u=a, or w=0 with v=b.
    """
    if min(a, b, c) <= 0:
        raise UsageError("check_six_cases needs positive degrees")
    report = VerificationReport("six-cases", {"a": a, "b": b, "c": c})
    expected = {
        (u, v, w)
        for u in range(a + 1)
        for v in range(b + 1)
        for w in range(c + 1)
        if (u == 0 and v == b) or (u == 0 and w == c)
        or (v == 0 and u == a) or (v == 0 and w == c)
        or (w == 0 and u == a) or (w == 0 and v == b)
    }
    for lam in partitions_of(a):
        for mu in partitions_of(b):
            for nu in partitions_of(c):
                report.checked += 1
                surviving = set()
                for m1, n1, c1 in comult_splittings(lam):
                    for m2, n2, c2 in comult_splittings(mu):
                        for m3, n3, c3 in comult_splittings(nu):
                            degrees = (sum(m1), sum(m2), sum(m3))
                            left = _modified_product_label(
                                (m1, m2, m3), degrees
                            )
                            if left is None:
                                continue
                            right = _modified_product_label(
                                (n1, n2, n3), (sum(n1), sum(n2), sum(n3))
                            )
                            if right is None:
                                continue
                            surviving.add(degrees)
                if surviving != expected:
                    report.record(
                        f"tridegree ({a},{b},{c}) "
                        f"input h{list(lam)} (x) h{list(mu)} (x) h{list(nu)}",
                        "survival pattern",
                        str(sorted(surviving)),
                        str(sorted(expected)),
                    )
    return report


def check_bidegree12(max_total: int) -> list:
    """Defect-vs-expansion sweep and survival patterns, all tridegrees.

    Returns two reports: the first compares the Hopf defect with the
    six-term expansion (and its mirrored form) on every h-basis input
    with a + b + c <= max_total, checking the defect vanishes when some
    degree is zero; the second aggregates the survival patterns.
    """
    if max_total < 1:
        raise UsageError("max_total must be >= 1")
    defect_report = VerificationReport("bidegree12-defect", {"max_total": max_total})
    cases_report = VerificationReport("bidegree12-six-cases", {"max_total": max_total})
    for a in range(max_total + 1):
        for b in range(max_total - a + 1):
            for c in range(max_total - a - b + 1):
                positive = min(a, b, c) > 0
                if positive:
                    sub = check_six_cases(a, b, c)
                    cases_report.checked += sub.checked
                    cases_report.failures.extend(sub.failures)
                for lam in partitions_of(a):
                    for mu in partitions_of(b):
                        for nu in partitions_of(c):
                            el = TensorElement(
                                (a, b, c), {(lam, mu, nu): 1}
                            )
                            defect_report.checked += 1
                            defect = hopf_defect_12(el)
                            if positive:
                                expansion = six_term_12(el)
                                mirrored = six_term_21(el)
                                if defect != expansion:
                                    defect_report.record(
                                        f"tridegree ({a},{b},{c}) bracket (1,2)",
                                        format_tensor(el),
                                        format_graded(defect),
                                        format_graded(expansion),
                                    )
                                if defect != mirrored:
                                    defect_report.record(
                                        f"tridegree ({a},{b},{c}) bracket (2,1)",
                                        format_tensor(el),
                                        format_graded(defect),
                                        format_graded(mirrored),
                                    )
                            elif defect:
                                defect_report.record(
                                    f"tridegree ({a},{b},{c}) zero branch",
                                    format_tensor(el),
                                    format_graded(defect),
                                    "0",
                                )
    return [defect_report, cases_report]


# ---------------------------------------------------------------------------
# the exploratory mixed-bidegree computation


def _strip_zero_slots(shape, label):
    keep = [k for k, d in enumerate(shape) if d > 0]
    return (
        tuple(shape[k] for k in keep),
        tuple(label[k] for k in keep),
    )


def _pair_key(lshape, rshape) -> str:
    return f"{Composition(lshape)}|{Composition(rshape)}"


def explore_mixed_bidegree(a: int, beta, x_parts=None, y_parts=None) -> dict:
    """Both Hopf-square routes on A(a) (x) A(b1, b2), reported per split.

    The upper route multiplies then comultiplies; the lower route
    comultiplies both factors, regroups first halves against second
    halves and multiplies the groups.  Values are collected per pair of
    canonical half-shapes.  No verdict is attached: the computation is
    a structured comparison, not a pass/fail check.
    """
    if a < 0:
        raise UsageError("a must be >= 0")
    beta = beta if isinstance(beta, Composition) else Composition(beta)
    if beta.length != 2:
        raise UsageError("beta must have exactly two parts")
    x_label = tuple(x_parts) if x_parts is not None else ((a,) if a else ())
    y_label = tuple(
        tuple(p) for p in y_parts
    ) if y_parts is not None else tuple((b,) for b in beta.parts)
    x_el = TensorElement((a,), {(x_label,): 1})
    y_el = TensorElement(beta.parts, {y_label: 1})

    upper = {}
    product = big_product(
        DirectSumElement.from_tensor(x_el), DirectSumElement.from_tensor(y_el)
    )
    for comp, el in product.items():
        for (i, _), piece in big_coproduct(el):
            for label, coeff in piece.coeffs.items():
                lshape, llab = _strip_zero_slots(piece.shape[:i], label[:i])
                rshape, rlab = _strip_zero_slots(piece.shape[i:], label[i:])
                key = (lshape, rshape)
                bucket = upper.setdefault(key, {})
                lab = llab + rlab
                bucket[lab] = bucket.get(lab, 0) + coeff

    lower = {}
    for (_, u), xpiece in big_coproduct(x_el):
        for xlabel, xc in xpiece.coeffs.items():
            xl_shape, xl_lab = _strip_zero_slots(xpiece.shape[:1], xlabel[:1])
            xr_shape, xr_lab = _strip_zero_slots(xpiece.shape[1:], xlabel[1:])
            for (i, _), ypiece in big_coproduct(y_el):
                for ylabel, yc in ypiece.coeffs.items():
                    yl_shape, yl_lab = _strip_zero_slots(
                        ypiece.shape[:i], ylabel[:i]
                    )
                    yr_shape, yr_lab = _strip_zero_slots(
                        ypiece.shape[i:], ylabel[i:]
                    )
                    left = big_product(
                        DirectSumElement.from_tensor(
                            TensorElement(xl_shape, {xl_lab: 1})
                        ),
                        DirectSumElement.from_tensor(
                            TensorElement(yl_shape, {yl_lab: 1})
                        ),
                    )
                    right = big_product(
                        DirectSumElement.from_tensor(
                            TensorElement(xr_shape, {xr_lab: 1})
                        ),
                        DirectSumElement.from_tensor(
                            TensorElement(yr_shape, {yr_lab: 1})
                        ),
                    )
                    for lcomp, lel in left.items():
                        for rcomp, rel in right.items():
                            key = (lcomp.parts, rcomp.parts)
                            bucket = lower.setdefault(key, {})
                            for llab, c1 in lel.coeffs.items():
                                for rlab, c2 in rel.coeffs.items():
                                    lab = llab + rlab
                                    bucket[lab] = (
                                        bucket.get(lab, 0) + xc * yc * c1 * c2
                                    )

    def render(pairs):
        out = {}
        for (lshape, rshape), coeffs in pairs.items():
            el = TensorElement(lshape + rshape, coeffs)
            if not el.is_zero:
                out[_pair_key(lshape, rshape)] = format_tensor(el)
        return dict(sorted(out.items()))

    difference = {}
    for key in set(upper) | set(lower):
        shape = key[0] + key[1]
        diff = TensorElement(shape, upper.get(key, {})) - TensorElement(
            shape, lower.get(key, {})
        )
        if not diff.is_zero:
            difference[_pair_key(*key)] = format_tensor(diff)

    return {
        "suite": "explore-mixed",
        "a": a,
        "beta": str(beta),
        "element": format_tensor(x_el.canonical())
        + " (x) "
        + format_tensor(y_el),
        "upper": render(upper),
        "lower": render(lower),
        "difference": dict(sorted(difference.items())),
    }
