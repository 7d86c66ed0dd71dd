"""Unipotent-class parameters for classical groups in good and bad
characteristic, the closure orders on them, and the transfer map from
characteristic 2 back to characteristic 0 on the relevant classes.

Good characteristic: classes are partitions (of the matrix size)
constrained by the group type, ordered by dominance.  Characteristic 2:
classes of the symplectic and orthogonal groups are pairs (partition,
epsilon) where epsilon assigns omega, 0, or 1 to every row size, free
only at even rows of positive even multiplicity (odd rows for the
twisted general linear family).  omega is a formal value below 0; it is
encoded here as -1.

Groups are named "GL", "GLd" (the extension of GL(n) by transpose
inverse), "Sp" (Sp(2n)), "O_odd" (O(2n+1)), and "O_even" (O(2n)); n is
always the Weyl-group rank.  Odd orthogonal groups in characteristic 2
borrow the symplectic parameter set through the exceptional isogeny,
written with a trailing 1 appended to the partition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import (
    Partition,
    add_psi,
    as_partition,
    dominance_leq,
    family_members,
    format_partition,
    multiplicity,
    transpose,
)

OMEGA = -1

GROUPS = ("GL", "GLd", "Sp", "O_odd", "O_even")

GOOD = "good"
CHAR2 = "2"


@dataclass(frozen=True)
class EpsilonFamily:
    """Which rule set an epsilon function follows.

    kind "minus_one": odd rows are forced to omega (symplectic and
    orthogonal groups); group "Sp" or "O" picks the value at 0.
    kind "plus_one": even rows are forced to omega (twisted GL).
    total is the size of the partitions carrying the functions.
    """

    kind: str
    total: int
    group: str | None = None


def _forced_value(fam: EpsilonFamily, alpha: Partition, i: int) -> int | None:
    """The value epsilon must take at row size i, or None when free."""
    m = multiplicity(alpha, i)
    if fam.kind == "minus_one":
        if i == 0:
            return 1 if fam.group == "Sp" else 0
        if i % 2 == 1 or m == 0:
            return OMEGA
        if m % 2 == 1:
            return 1
        return None
    if i % 2 == 0 or m == 0:
        return OMEGA
    if m % 2 == 1:
        return 1
    return None


def free_indices(fam: EpsilonFamily, alpha: Partition) -> tuple[int, ...]:
    """Row sizes where epsilon may be 0 or 1, descending."""
    return tuple(
        i for i in sorted(set(alpha), reverse=True) if _forced_value(fam, alpha, i) is None
    )


@dataclass(frozen=True)
class EpsilonFunction:
    """A total map row-size -> {omega, 0, 1}, stored sparsely: only the
    free assignments are kept, everything else is forced by the family
    rules and the partition."""

    family: EpsilonFamily
    partition: Partition
    assignments: tuple[tuple[int, int], ...]  # ((index, value), ...) descending

    def value(self, i: int) -> int:
        forced = _forced_value(self.family, self.partition, i)
        if forced is not None:
            return forced
        for idx, val in self.assignments:
            if idx == i:
                return val
        raise AssertionError(f"no value stored for free index {i}")

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignments)


def epsilon_function(
    fam: EpsilonFamily, alpha: Partition, assignments: dict[int, int]
) -> EpsilonFunction:
    """Build and validate an epsilon function from its free assignments."""
    alpha = as_partition(alpha)
    free = free_indices(fam, alpha)
    if set(assignments) != set(free):
        raise ValueError(
            f"epsilon must assign exactly the free indices {sorted(free)}, "
            f"got {sorted(assignments)}"
        )
    if any(v not in (0, 1) for v in assignments.values()):
        raise ValueError("free epsilon values must be 0 or 1")
    pairs = tuple((i, assignments[i]) for i in free)
    return EpsilonFunction(fam, alpha, pairs)


def epsilon_max(alpha: Partition, fam: EpsilonFamily) -> EpsilonFunction:
    """The epsilon choosing 1 at every free index; the unique maximum
    among the epsilons of alpha under the closure order."""
    alpha = as_partition(alpha)
    return epsilon_function(fam, alpha, {i: 1 for i in free_indices(fam, alpha)})


def all_epsilon_functions(alpha: Partition, fam: EpsilonFamily) -> list[EpsilonFunction]:
    """Every valid epsilon for alpha; the all-ones choice comes first."""
    alpha = as_partition(alpha)
    free = free_indices(fam, alpha)
    out = []
    for values in itertools.product((1, 0), repeat=len(free)):
        out.append(epsilon_function(fam, alpha, dict(zip(free, values))))
    return out


# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class UnipotentLabel:
    """A unipotent conjugacy class of a classical group.

    kind "good" carries just the partition; kind "bad" (characteristic 2)
    carries the partition and an epsilon function.  split marks the two
    members of a class that falls apart over the special orthogonal
    subgroup; split classes compare like their base class.
    """

    group: str
    n: int
    kind: str
    partition: Partition
    epsilon: EpsilonFunction | None = None
    split: str | None = None

    @property
    def so_component(self) -> str | None:
        """For even orthogonal labels: "SO" when the class lies in the
        special orthogonal group, "O\\SO" otherwise."""
        if self.group != "O_even":
            return None
        if self.kind == "good":
            return "SO"
        return "SO" if len(self.partition) % 2 == 0 else "O\\SO"

    def __str__(self) -> str:
        return format_unipotent(self)


def _dim(group: str, n: int) -> int:
    if group in ("GL", "GLd"):
        return n
    if group == "Sp":
        return 2 * n
    if group == "O_odd":
        return 2 * n + 1
    if group == "O_even":
        return 2 * n
    raise ValueError(f"unknown group {group!r}")


def epsilon_family(group: str, n: int) -> EpsilonFamily:
    if group == "GLd":
        return EpsilonFamily("plus_one", n)
    if group in ("Sp", "O_odd", "O_even"):
        return EpsilonFamily("minus_one", _dim(group, n), "Sp" if group == "Sp" else "O")
    raise ValueError(f"group {group!r} has no characteristic-2 parameter set")


def _check_good_partition(group: str, n: int, alpha: Partition) -> None:
    if sum(alpha) != _dim(group, n):
        raise ValueError(f"{alpha} is not a partition of {_dim(group, n)}")
    if group in ("GL", "GLd"):
        return
    kappa = -1 if group == "Sp" else 1
    odd_rows = kappa == -1
    for p in set(alpha):
        if (p % 2 == 1) == odd_rows and multiplicity(alpha, p) % 2 == 1:
            raise ValueError(
                f"{alpha} is not a valid {group} partition: row {p} has odd multiplicity"
            )


def _check_bad_partition(group: str, n: int, alpha: Partition) -> None:
    if sum(alpha) != _dim(group, n):
        raise ValueError(f"{alpha} is not a partition of {_dim(group, n)}")
    if group == "GLd":
        for p in set(alpha):
            if p % 2 == 0 and multiplicity(alpha, p) % 2 == 1:
                raise ValueError(f"{alpha}: even row {p} has odd multiplicity")
        return
    if group == "O_odd":
        if multiplicity(alpha, 1) % 2 != 1:
            raise ValueError(f"{alpha}: odd orthogonal labels have an odd number of 1s")
        for p in set(alpha):
            if p % 2 == 1 and p != 1 and multiplicity(alpha, p) % 2 == 1:
                raise ValueError(f"{alpha}: odd row {p} has odd multiplicity")
        return
    for p in set(alpha):
        if p % 2 == 1 and multiplicity(alpha, p) % 2 == 1:
            raise ValueError(f"{alpha}: odd row {p} has odd multiplicity")


def good_label(group: str, n: int, partition, split: str | None = None) -> UnipotentLabel:
    alpha = as_partition(partition)
    _check_good_partition(group, n, alpha)
    if split not in (None, "I", "II"):
        raise ValueError(f"bad split marker {split!r}")
    return UnipotentLabel(group, n, GOOD, alpha, None, split)


def bad_label(
    group: str,
    n: int,
    partition,
    epsilon: EpsilonFunction | dict[int, int] | None = None,
    split: str | None = None,
) -> UnipotentLabel:
    """A characteristic-2 label.  epsilon may be an EpsilonFunction, a
    dict of free assignments, or None for epsilon_max."""
    alpha = as_partition(partition)
    _check_bad_partition(group, n, alpha)
    fam = epsilon_family(group, n)
    if epsilon is None:
        eps = epsilon_max(alpha, fam)
    elif isinstance(epsilon, EpsilonFunction):
        if epsilon.family != fam or epsilon.partition != alpha:
            raise ValueError("epsilon function does not belong to this label")
        eps = epsilon
    else:
        eps = epsilon_function(fam, alpha, dict(epsilon))
    if split not in (None, "I", "II"):
        raise ValueError(f"bad split marker {split!r}")
    return UnipotentLabel(group, n, CHAR2, alpha, eps, split)


# ---------------------------------------------------------------------------
# closure orders


def good_leq(a: UnipotentLabel, b: UnipotentLabel) -> bool:
    """Closure order in good characteristic: dominance of partitions.
    Split markers are ignored (the two members of a split pair sit at
    the same place in the order)."""
    if a.kind != GOOD or b.kind != GOOD:
        raise ValueError("good_leq compares good-characteristic labels")
    if (a.group, a.n) != (b.group, b.n):
        raise ValueError(f"labels from different groups: {a} vs {b}")
    return dominance_leq(a.partition, b.partition)


def bad_leq(a: UnipotentLabel, b: UnipotentLabel) -> bool:
    """Closure order in characteristic 2.

    (alpha, eps) <= (beta, dlt) iff alpha <= beta in dominance and for
    every k >= 1, writing S_k for the k-th prefix sum of the transpose:
    S_k(beta) - max(dlt(k), 0) <= S_k(alpha) - max(eps(k), 0); and
    whenever S_k(alpha) = S_k(beta) with alpha*_{k+1} - beta*_{k+1} odd,
    dlt(k) is omega or 1.

    Even orthogonal labels compare only within the same component of the
    group.
    """
    if a.kind != CHAR2 or b.kind != CHAR2:
        raise ValueError("bad_leq compares characteristic-2 labels")
    if (a.group, a.n) != (b.group, b.n):
        raise ValueError(f"labels from different groups: {a} vs {b}")
    if a.group == "O_even" and a.so_component != b.so_component:
        raise ValueError(
            f"labels in different components of O(2n): {a} vs {b}; "
            "the closure order does not mix them"
        )
    if not dominance_leq(a.partition, b.partition):
        return False
    ta, tb = transpose(a.partition), transpose(b.partition)
    kmax = max(len(ta), len(tb), a.partition[0] if a.partition else 0)
    sa = sb = 0
    for k in range(1, kmax + 1):
        sa += ta[k - 1] if k <= len(ta) else 0
        sb += tb[k - 1] if k <= len(tb) else 0
        ea = a.epsilon.value(k)
        eb = b.epsilon.value(k)
        if sb - max(eb, 0) > sa - max(ea, 0):
            return False
        if sa == sb:
            nxt_a = ta[k] if k < len(ta) else 0
            nxt_b = tb[k] if k < len(tb) else 0
            if (nxt_a - nxt_b) % 2 == 1 and eb == 0:
                return False
    return True


def unipotent_leq(a: UnipotentLabel, b: UnipotentLabel) -> bool:
    """Dispatch to the closure order matching the labels' characteristic."""
    if a.kind != b.kind:
        raise ValueError(f"cannot compare {a.kind} with {b.kind} labels")
    return good_leq(a, b) if a.kind == GOOD else bad_leq(a, b)


# ---------------------------------------------------------------------------
# the transfer map theta_2 from characteristic 2 to characteristic 0


def theta2(label: UnipotentLabel) -> UnipotentLabel:
    """The inverse of the characteristic-0-to-2 transfer on the classes
    reached from elliptic Weyl classes: identity on symplectic
    partitions, the psi correction on orthogonal ones (with the odd
    orthogonal trailing 1 stripped and restored as the totals demand).

    Requires a characteristic-2 label whose epsilon is epsilon_max.
    """
    if label.kind != CHAR2:
        raise ValueError("theta2 transfers characteristic-2 labels")
    if label.group not in ("Sp", "O_odd", "O_even"):
        raise ValueError(f"theta2 is not defined for group {label.group}")
    fam = epsilon_family(label.group, label.n)
    if label.epsilon != epsilon_max(label.partition, fam):
        raise ValueError("theta2 is only defined at epsilon_max")
    if label.group == "Sp":
        return good_label("Sp", label.n, label.partition)
    if label.group == "O_even":
        return good_label("O_even", label.n, add_psi(label.partition))
    block = tuple(p for p in label.partition if p != 1)
    ones = multiplicity(label.partition, 1)
    if ones != 1 or any(p % 2 for p in block):
        raise ValueError(
            f"theta2 on odd orthogonal labels needs shape (even parts, 1), got {label.partition}"
        )
    gamma = add_psi(block) if block else ()
    if len(block) % 2 == 0:
        gamma = gamma + (1,)
    return good_label("O_odd", label.n, gamma)


def theta2_columns(alpha) -> tuple[int, ...]:
    """The transformed column lengths of the orthogonal transfer: column
    i gains a box when i is odd, alpha*_i is even, and alpha has a part
    of size i-1; it loses a box when i is even, alpha*_i is even, and
    alpha has a part of size i; otherwise it is unchanged.  Defined for
    partitions with all parts even.  Trailing zero columns are kept so
    the returned tuple always has alpha_1 + 1 entries.
    """
    alpha = as_partition(alpha)
    if any(p % 2 for p in alpha):
        raise ValueError(f"column recipe requires all parts even, got {alpha}")
    if not alpha:
        raise ValueError("column recipe of the empty partition is undefined")
    ta = transpose(alpha)
    out = []
    for i in range(1, alpha[0] + 2):
        ti = ta[i - 1] if i <= len(ta) else 0
        if i % 2 == 1 and ti % 2 == 0 and multiplicity(alpha, i - 1) > 0:
            out.append(ti + 1)
        elif i % 2 == 0 and ti % 2 == 0 and multiplicity(alpha, i) > 0:
            out.append(ti - 1)
        else:
            out.append(ti)
    return tuple(out)


def theta2_column_recipe(alpha) -> Partition:
    """The column-by-column form of the orthogonal transfer; agrees with
    add_psi on every partition with all parts even."""
    return transpose(as_partition(theta2_columns(alpha)))


# ---------------------------------------------------------------------------
# enumeration and display


def enumerate_unipotent(group: str, n: int, char: str) -> list[UnipotentLabel]:
    """All unipotent class labels of the group in the given
    characteristic, deterministically ordered (partitions reverse-lex,
    epsilon choices largest first, split pair I before II).  Classes
    that split over SO(2n) appear as two labels."""
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}")
    if char not in (GOOD, CHAR2):
        raise ValueError(f"characteristic must be '{GOOD}' or '{CHAR2}'")
    dim = _dim(group, n)
    out: list[UnipotentLabel] = []
    if char == GOOD or group == "GL":
        if group in ("GL", "GLd"):
            if group == "GLd" and char == GOOD:
                raise ValueError(
                    "the twisted component of GLd carries unipotents only in characteristic 2"
                )
            return [good_label("GL", n, a) for a in family_members("all", dim)]
        kappa = -1 if group == "Sp" else 1
        for a in family_members("kappa", dim, kappa):
            if group == "O_even" and a and all(p % 2 == 0 for p in a):
                out.append(good_label(group, n, a, split="I"))
                out.append(good_label(group, n, a, split="II"))
            else:
                out.append(good_label(group, n, a))
        return out
    if group == "GLd":
        for a in family_members("kappa", dim, 1):
            fam = epsilon_family(group, n)
            for eps in all_epsilon_functions(a, fam):
                out.append(UnipotentLabel(group, n, CHAR2, a, eps))
        return out
    if group == "O_odd":
        base = [a + (1,) for a in family_members("kappa", dim - 1, -1)]
    else:
        base = family_members("kappa", dim, -1)
    fam = epsilon_family(group, n)
    for a in base:
        a = as_partition(sorted(a, reverse=True))
        for eps in all_epsilon_functions(a, fam):
            if (
                group == "O_even"
                and all(p % 2 == 0 for p in a)
                and all(multiplicity(a, p) % 2 == 0 for p in set(a))
                and all(v == 0 for _, v in eps.assignments)
                and a
            ):
                out.append(UnipotentLabel(group, n, CHAR2, a, eps, "I"))
                out.append(UnipotentLabel(group, n, CHAR2, a, eps, "II"))
            else:
                out.append(UnipotentLabel(group, n, CHAR2, a, eps))
    return out


def format_unipotent(label: UnipotentLabel) -> str:
    """Bracket notation: good labels "[7,1]", characteristic-2 labels
    "([4,4],ε(4)=1)" with runs of equal values chained as
    "ε(4)=ε(2)=1" and "*" when no free index exists; split markers
    append "_I" or "_II"."""
    tail = f"_{label.split}" if label.split else ""
    if label.kind == GOOD:
        return format_partition(label.partition) + tail
    pairs = label.epsilon.assignments
    if not pairs:
        eps_text = "*"
    else:
        runs: list[tuple[list[int], int]] = []
        for idx, val in pairs:
            if runs and runs[-1][1] == val:
                runs[-1][0].append(idx)
            else:
                runs.append(([idx], val))
        eps_text = ",".join(
            "=".join(f"ε({i})" for i in idxs) + f"={val}" for idxs, val in runs
        )
    return f"({format_partition(label.partition)},{eps_text})" + tail


def label_to_json(label: UnipotentLabel) -> dict:
    """JSON form: good labels omit epsilon; the epsilon object lists the
    free assignments only."""
    group_name = "O" if label.group == "O_even" else label.group
    doc: dict = {"partition": list(label.partition), "group": group_name}
    if label.kind == CHAR2:
        doc["epsilon"] = {str(i): v for i, v in label.epsilon.assignments}
        doc["family"] = label.epsilon.family.kind
    if label.group == "O_even":
        doc["component"] = label.so_component
    if label.split:
        doc["split"] = label.split
    return doc
