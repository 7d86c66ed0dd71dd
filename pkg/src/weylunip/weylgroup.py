"""Classical Weyl groups as (signed) permutations.

Elements are tuples of images: ``w[i-1] = w(i)`` for i = 1..n, extended
to negative arguments by w(-i) = -w(i).  Types BC and D use signed
images; types A and twisted A use plain permutations.  For the twisted
A family an element tuple stores the permutation part w, and the group
element it names is w composed with delta, the longest element; for the
twisted component of the even orthogonal model the coset elements are
honest signed permutations with an odd number of sign changes, so no
extra bookkeeping is needed.

Composition is (xy)(i) = x(y(i)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .partitions import Partition, as_partition

SignedPermutation = tuple[int, ...]

DEFAULT_CAP = 10**6

FAMILIES = ("A", "BC", "D", "2A")

IDENTITY_COMPONENT = "id"
TWISTED_COMPONENT = "twisted"


class CapExceeded(RuntimeError):
    """Raised when a brute-force enumeration would exceed its cap."""


@dataclass(frozen=True)
class GroupContext:
    """A classical Weyl group (or extended group component).

    family: "A" (S_n on n letters), "BC" (hyperoctahedral), "D"
    (even-signed; the O(2n) model when the twisted component is used),
    or "2A" (S_n twisted by the longest element).  "O2n" is accepted as
    an alias for "D".  rank n is the permutation degree for A/2A and
    the signed rank otherwise.
    """

    family: str
    n: int
    component: str = IDENTITY_COMPONENT


def context(family: str, n: int, component: str | None = None) -> GroupContext:
    fam = "D" if family == "O2n" else family
    if fam not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1 or (fam in ("D", "2A") and n < 2):
        raise ValueError(f"rank {n} out of range for family {family}")
    if fam == "2A":
        if component not in (None, TWISTED_COMPONENT):
            raise ValueError("family 2A is a twisted coset; component must be 'twisted'")
        comp = TWISTED_COMPONENT
    elif fam in ("A", "BC"):
        if component not in (None, IDENTITY_COMPONENT):
            raise ValueError(f"family {fam} has no twisted component")
        comp = IDENTITY_COMPONENT
    else:
        comp = component or IDENTITY_COMPONENT
        if comp not in (IDENTITY_COMPONENT, TWISTED_COMPONENT):
            raise ValueError(f"unknown component {component!r}")
    return GroupContext(fam, n, comp)


# ---------------------------------------------------------------------------
# element arithmetic


def apply(w: SignedPermutation, i: int) -> int:
    """w(i) for i in {±1..±n}, using w(-i) = -w(i)."""
    return w[i - 1] if i > 0 else -w[-i - 1]


def multiply(x: SignedPermutation, y: SignedPermutation) -> SignedPermutation:
    if len(x) != len(y):
        raise ValueError(f"rank mismatch: {len(x)} vs {len(y)}")
    return tuple(apply(x, yi) for yi in y)


def inverse(w: SignedPermutation) -> SignedPermutation:
    r = [0] * len(w)
    for i, wi in enumerate(w, 1):
        if wi > 0:
            r[wi - 1] = i
        else:
            r[-wi - 1] = -i
    return tuple(r)


def identity(n: int) -> SignedPermutation:
    return tuple(range(1, n + 1))


def _check_element(ctx: GroupContext, w: SignedPermutation) -> None:
    if len(w) != ctx.n:
        raise ValueError(f"element of rank {len(w)} passed to {ctx}")
    if sorted(abs(v) for v in w) != list(range(1, ctx.n + 1)):
        raise ValueError(f"{w} is not a signed permutation window")
    neg = sum(1 for v in w if v < 0)
    if ctx.family in ("A", "2A") and neg:
        raise ValueError(f"{w} has signs; family {ctx.family} stores plain permutations")
    if ctx.family == "D":
        want = 0 if ctx.component == IDENTITY_COMPONENT else 1
        if neg % 2 != want:
            raise ValueError(
                f"{w} has {neg} sign changes; wrong parity for the "
                f"{ctx.component} component of D({ctx.n})"
            )


def delta(ctx: GroupContext) -> SignedPermutation:
    """The length-zero representative of the twisted coset."""
    if ctx.family == "2A":
        return tuple(range(ctx.n, 0, -1))
    if ctx.family == "D":
        return (-1,) + tuple(range(2, ctx.n + 1))
    raise ValueError(f"family {ctx.family} carries no diagram automorphism here")


# ---------------------------------------------------------------------------
# simple reflections and length


def simple_reflection(ctx: GroupContext, i: int) -> SignedPermutation:
    n = ctx.n
    top = n - 1 if ctx.family in ("A", "2A") else n
    if not 1 <= i <= top:
        raise ValueError(f"simple reflection index {i} out of range for {ctx.family}({n})")
    w = list(range(1, n + 1))
    if ctx.family == "BC":
        if i == 1:
            w[0] = -1
        else:
            w[i - 2], w[i - 1] = w[i - 1], w[i - 2]
    elif ctx.family == "D":
        if i == 1:
            w[0], w[1] = 2, 1
        elif i == 2:
            w[0], w[1] = -2, -1
        else:
            w[i - 2], w[i - 1] = w[i - 1], w[i - 2]
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def simples(ctx: GroupContext) -> tuple[SignedPermutation, ...]:
    top = ctx.n - 1 if ctx.family in ("A", "2A") else ctx.n
    return tuple(simple_reflection(ctx, i) for i in range(1, top + 1))


def s_interval(ctx: GroupContext, a: int, b: int) -> SignedPermutation:
    """The product s_a s_{a+1} ... s_b, or the identity when a > b."""
    w = identity(ctx.n)
    for i in range(a, b + 1):
        w = multiply(w, simple_reflection(ctx, i))
    return w


def _inv_count(w: SignedPermutation) -> int:
    n = len(w)
    c = 0
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if wi > w[j]:
                c += 1
    return c


def length(ctx: GroupContext, w: SignedPermutation) -> int:
    """Coxeter length.  For the twisted cosets this is the length of the
    W0 part: twisted A elements store that part directly, and for D the
    uniform formula already assigns length 0 to delta."""
    _check_element(ctx, w)
    if ctx.family in ("A", "2A"):
        return _inv_count(w)
    if ctx.family == "BC":
        return _inv_count(w) + sum(-v for v in w if v < 0)
    return _inv_count(w) + sum(-v - 1 for v in w if v < 0)


# ---------------------------------------------------------------------------
# Bruhat order: count-matrix criterion and generic descent recursion


@dataclass(frozen=True)
class CountMatrix:
    """Entries w[i,j] = |{k <= i : w(k) >= j}| over the family's index set.

    For signed families the index set is {-n..-1, 1..n} in both
    coordinates; for type A it is {1..n}.
    """

    n: int
    signed: bool
    rows: tuple[tuple[int, ...], ...]

    def indices(self) -> list[int]:
        if self.signed:
            return [k for k in range(-self.n, self.n + 1) if k != 0]
        return list(range(1, self.n + 1))

    def entry(self, i: int, j: int) -> int:
        idx = self.indices()
        return self.rows[idx.index(i)][idx.index(j)]


def count_entry(w: SignedPermutation, i: int, j: int) -> int:
    """The literal count |{k in {-n..-1,1..n} : k <= i, w(k) >= j}| for
    arbitrary integers i, j (out-of-range values are fine; plain
    permutations are extended by w(-k) = -w(k))."""
    n = len(w)
    c = 0
    for k in range(-n, 0):
        if k <= i and -w[-k - 1] >= j:
            c += 1
    for k in range(1, n + 1):
        if k <= i and w[k - 1] >= j:
            c += 1
    return c


def count_matrix(ctx: GroupContext, w: SignedPermutation) -> CountMatrix:
    _check_element(ctx, w)
    n = ctx.n
    if ctx.family in ("A", "2A"):
        rows = tuple(
            tuple(sum(1 for k in range(1, i + 1) if w[k - 1] >= j) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )
        return CountMatrix(n, False, rows)
    idx = [k for k in range(-n, n + 1) if k != 0]
    rows = tuple(tuple(count_entry(w, i, j) for j in idx) for i in idx)
    return CountMatrix(n, True, rows)


def bruhat_leq_counts(ctx: GroupContext, x: SignedPermutation, y: SignedPermutation) -> bool:
    """Entrywise count-matrix comparison.  Exact Bruhat order for A and
    BC only; for D it is a necessary condition, so this op refuses and
    bruhat_leq_generic must be used there."""
    if ctx.family not in ("A", "BC"):
        raise ValueError(
            f"count-matrix criterion is exact only for A and BC, not {ctx.family}; "
            "use bruhat_leq_generic"
        )
    mx = count_matrix(ctx, x).rows
    my = count_matrix(ctx, y).rows
    return all(a <= b for ra, rb in zip(mx, my) for a, b in zip(ra, rb))


def _first_descent(fam: str, w: SignedPermutation, top: int) -> int:
    """Index of a right descent of w, or 0 if there is none.  Constant
    work per candidate index: right multiplication by s_i shortens w iff
    the stated window condition holds."""
    if fam == "BC":
        if w[0] < 0:
            return 1
        for i in range(2, top + 1):
            if w[i - 2] > w[i - 1]:
                return i
        return 0
    if fam == "D":
        if w[0] > w[1]:
            return 1
        if w[0] + w[1] < 0:
            return 2
        for i in range(3, top + 1):
            if w[i - 2] > w[i - 1]:
                return i
        return 0
    for i in range(1, top + 1):
        if w[i - 1] > w[i]:
            return i
    return 0


def _is_descent(fam: str, w: SignedPermutation, i: int) -> bool:
    if fam == "BC":
        return w[0] < 0 if i == 1 else w[i - 2] > w[i - 1]
    if fam == "D":
        if i == 1:
            return w[0] > w[1]
        if i == 2:
            return w[0] + w[1] < 0
        return w[i - 2] > w[i - 1]
    return w[i - 1] > w[i]


def _apply_right(fam: str, w: SignedPermutation, i: int) -> SignedPermutation:
    v = list(w)
    if fam == "BC":
        if i == 1:
            v[0] = -v[0]
        else:
            v[i - 2], v[i - 1] = v[i - 1], v[i - 2]
    elif fam == "D":
        if i == 1:
            v[0], v[1] = v[1], v[0]
        elif i == 2:
            v[0], v[1] = -v[1], -v[0]
        else:
            v[i - 2], v[i - 1] = v[i - 1], v[i - 2]
    else:
        v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


def bruhat_leq_generic(ctx: GroupContext, x: SignedPermutation, y: SignedPermutation) -> bool:
    """Bruhat order by the descent recursion: pick a simple s with
    ys < y; descend x alongside when xs < x.  Valid in every family,
    including both components of D (delta is the unique length-zero
    coset element) and twisted A via the stored permutation parts.
    """
    fam = ctx.family
    lx, ly = length(ctx, x), length(ctx, y)
    top = ctx.n - 1 if fam in ("A", "2A") else ctx.n
    step = "A" if fam == "2A" else fam
    while ly > 0:
        if lx > ly:
            return False
        if lx == ly:
            return x == y
        i = _first_descent(step, y, top)
        y = _apply_right(step, y, i)
        ly -= 1
        if _is_descent(step, x, i):
            x = _apply_right(step, x, i)
            lx -= 1
    return x == y


def descent_walk(
    ctx: GroupContext, y: SignedPermutation
) -> tuple[list[int], list[SignedPermutation]]:
    """The walk the generic recursion takes y through: the stripped
    simple-reflection indices and the element after each strip (path[0]
    is y itself, path[-1] has length zero).  Precomputing this lets many
    x be compared against one y without rewalking y."""
    fam = "A" if ctx.family == "2A" else ctx.family
    top = ctx.n - 1 if fam == "A" else ctx.n
    ly = length(ctx, y)
    chain: list[int] = []
    path = [y]
    while ly > 0:
        i = _first_descent(fam, y, top)
        chain.append(i)
        y = _apply_right(fam, y, i)
        path.append(y)
        ly -= 1
    return chain, path


def bruhat_leq_walk(
    ctx: GroupContext,
    x: SignedPermutation,
    lx: int,
    chain: list[int],
    path: list[SignedPermutation],
) -> bool:
    """bruhat_leq_generic(ctx, x, y) where (chain, path) came from
    descent_walk(ctx, y).  lx must equal length(x)."""
    fam = "A" if ctx.family == "2A" else ctx.family
    ly = len(chain)
    for t, i in enumerate(chain):
        if lx > ly:
            return False
        if lx == ly:
            return x == path[t]
        if _is_descent(fam, x, i):
            x = _apply_right(fam, x, i)
            lx -= 1
        ly -= 1
    return x == path[-1]


# ---------------------------------------------------------------------------
# cycle types, class labels, minimal-length representatives


def signed_cycle_type(w: SignedPermutation) -> tuple[Partition, Partition]:
    """(negative, positive) cycle types: orbit sizes of w on {±1..±n},
    each orbit pair counted once; an orbit is negative when traversing
    it returns to the negated start."""
    n = len(w)
    seen = [False] * (n + 1)
    neg: list[int] = []
    pos: list[int] = []
    for a in range(1, n + 1):
        if seen[a]:
            continue
        size = 0
        x = a
        while True:
            seen[abs(x)] = True
            size += 1
            x = apply(w, x)
            if abs(x) == a:
                break
        (neg if x == -a else pos).append(size)
    return tuple(sorted(neg, reverse=True)), tuple(sorted(pos, reverse=True))


def class_label(ctx: GroupContext, w: SignedPermutation) -> Partition | None:
    """The partition naming w's elliptic conjugacy class, or None when w
    is not elliptic.

    BC: the negative cycle type when there are no positive cycles.
    D: the same, with the component read off the parity of the number of
    parts (odd number of negative cycles lies in the twisted coset).
    2A: the cycle type of w·delta when all its parts are odd.
    """
    _check_element(ctx, w)
    if ctx.family == "2A":
        u = multiply(w, delta(ctx))
        parts = _perm_cycle_type(u)
        return parts if all(p % 2 == 1 for p in parts) else None
    if ctx.family == "A":
        parts = _perm_cycle_type(w)
        return parts if parts == (ctx.n,) else None
    neg, pos = signed_cycle_type(w)
    if pos:
        return None
    return neg


def _perm_cycle_type(w: SignedPermutation) -> Partition:
    n = len(w)
    seen = [False] * (n + 1)
    out: list[int] = []
    for a in range(1, n + 1):
        if seen[a]:
            continue
        size = 0
        x = a
        while not seen[x]:
            seen[x] = True
            size += 1
            x = w[x - 1]
        out.append(size)
    return tuple(sorted(out, reverse=True))


def rep_BC(n: int, alpha: Partition) -> SignedPermutation:
    """Minimal-length element of the elliptic class alpha in BC(n):
    the product over parts a_j of s_[2, n+1-a_1-..-a_j]^{-1} s_[1, n-a_1-..-a_{j-1}].

    Concretely this makes one negative cycle per part, stacked from the
    top of the window down.
    """
    alpha = as_partition(alpha)
    if sum(alpha) != n:
        raise ValueError(f"{alpha} is not a partition of {n}")
    ctx = context("BC", n)
    w = identity(n)
    sig = 0
    for a in alpha:
        f = multiply(
            inverse(s_interval(ctx, 2, n + 1 - sig - a)),
            s_interval(ctx, 1, n - sig),
        )
        w = multiply(w, f)
        sig += a
    return w


def rep_D(n: int, alpha: Partition) -> SignedPermutation:
    """Minimal-length element of the elliptic class alpha in the even
    orthogonal model: one negative a-cycle per part a, each occupying
    the a highest positions still free, sending i to i+1 inside the
    block and the top of the block to minus its bottom.

    The element lies in the identity component iff alpha has an even
    number of parts.
    """
    alpha = as_partition(alpha)
    if sum(alpha) != n:
        raise ValueError(f"{alpha} is not a partition of {n}")
    w = list(range(1, n + 1))
    top = n
    for a in alpha:
        bottom = top - a + 1
        for i in range(bottom, top):
            w[i - 1] = i + 1
        w[top - 1] = -bottom
        top -= a
    return tuple(w)


def rep_2A(n: int, alpha: Partition) -> SignedPermutation:
    """Minimal-length element of the twisted class alpha (all parts odd)
    in the twisted A family, returned as its stored permutation part.

    The permutation part u = w·delta is built so that each part
    a = 2b+1 contributes one u-cycle through the b outermost remaining
    positions on each side plus one near-middle position; unused parts
    of size one become fixed points.  All-ones makes u the identity, so
    the stored part is the reversal window itself.
    """
    alpha = as_partition(alpha)
    if sum(alpha) != n:
        raise ValueError(f"{alpha} is not a partition of {n}")
    if any(a % 2 == 0 for a in alpha):
        raise ValueError(f"twisted A classes need all parts odd, got {alpha}")
    u = list(range(1, n + 1))
    remaining = list(range(1, n + 1))
    for a in alpha:
        b = (a - 1) // 2
        if b == 0:
            continue
        r = remaining
        ci = (len(r) - 1) // 2
        ci = max(b, min(ci, len(r) - b - 1))
        ps = r[:b]
        c = r[ci]
        qs = r[-b:][::-1]
        u[ps[0] - 1] = c
        u[c - 1] = qs[b - 1]
        for i in range(b):
            u[qs[i] - 1] = ps[i]
        for i in range(1, b):
            u[ps[i] - 1] = qs[i - 1]
        used = set(ps) | {c} | set(qs)
        remaining = [x for x in remaining if x not in used]
    ctx = context("2A", n)
    return multiply(tuple(u), delta(ctx))


def class_rep(ctx: GroupContext, alpha: Partition) -> SignedPermutation:
    """The closed-form minimal-length representative for ctx's family."""
    if ctx.family == "BC":
        return rep_BC(ctx.n, alpha)
    if ctx.family == "D":
        w = rep_D(ctx.n, alpha)
        want = IDENTITY_COMPONENT if len(alpha) % 2 == 0 else TWISTED_COMPONENT
        if want != ctx.component:
            raise ValueError(
                f"class {alpha} lives in the {want} component, not {ctx.component}"
            )
        return w
    if ctx.family == "2A":
        return rep_2A(ctx.n, alpha)
    if ctx.family == "A":
        if alpha != (ctx.n,):
            raise ValueError("the only elliptic class of type A is the Coxeter class")
        return tuple(range(2, ctx.n + 1)) + (1,)
    raise ValueError(f"no representative formula for family {ctx.family}")


# ---------------------------------------------------------------------------
# brute-force enumeration


def group_order(ctx: GroupContext) -> int:
    n = ctx.n
    if ctx.family in ("A", "2A"):
        return factorial(n)
    if ctx.family == "BC":
        return factorial(n) * 2**n
    return factorial(n) * 2 ** (n - 1)


def enumerate_group(ctx: GroupContext, cap: int = DEFAULT_CAP) -> Iterator[SignedPermutation]:
    """Every element of ctx's component exactly once, in a fixed order.
    For twisted A this streams the stored permutation parts."""
    if group_order(ctx) > cap:
        raise CapExceeded(
            f"|{ctx.family}({ctx.n}) component| = {group_order(ctx)} exceeds cap {cap}"
        )
    n = ctx.n
    if ctx.family in ("A", "2A"):
        yield from itertools.permutations(range(1, n + 1))
        return
    want = None
    if ctx.family == "D":
        want = 0 if ctx.component == IDENTITY_COMPONENT else 1
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if want is not None and signs.count(-1) % 2 != want:
                continue
            yield tuple(s * p for s, p in zip(signs, perm))


@lru_cache(maxsize=32)
def _class_table(
    ctx: GroupContext, cap: int
) -> dict[Partition, tuple[tuple[SignedPermutation, ...], tuple[int, ...]]]:
    """All elliptic classes of ctx at once: label -> (elements, lengths),
    both sorted by (length, element).  One group sweep, reused by every
    class-level query."""
    buckets: dict[Partition, list[tuple[int, SignedPermutation]]] = {}
    for w in enumerate_group(ctx, cap):
        lab = class_label(ctx, w)
        if lab is None:
            continue
        buckets.setdefault(lab, []).append((length(ctx, w), w))
    out = {}
    for lab, pairs in buckets.items():
        pairs.sort()
        out[lab] = (tuple(w for _, w in pairs), tuple(l for l, _ in pairs))
    return out


def enumerate_class(
    ctx: GroupContext, alpha: Partition, cap: int = DEFAULT_CAP
) -> tuple[SignedPermutation, ...]:
    """All elements with class_label alpha, sorted by (length, window)."""
    table = _class_table(ctx, cap)
    alpha = as_partition(alpha)
    if alpha not in table:
        raise ValueError(f"{alpha} is not an elliptic class of {ctx}")
    return table[alpha][0]


def class_lengths(
    ctx: GroupContext, alpha: Partition, cap: int = DEFAULT_CAP
) -> tuple[int, ...]:
    """Lengths aligned with enumerate_class."""
    table = _class_table(ctx, cap)
    alpha = as_partition(alpha)
    if alpha not in table:
        raise ValueError(f"{alpha} is not an elliptic class of {ctx}")
    return table[alpha][1]


def min_length_elements(
    ctx: GroupContext, alpha: Partition, cap: int = DEFAULT_CAP
) -> tuple[SignedPermutation, ...]:
    els = enumerate_class(ctx, alpha, cap)
    lens = class_lengths(ctx, alpha, cap)
    lmin = lens[0]
    return tuple(w for w, l in zip(els, lens) if l == lmin)
