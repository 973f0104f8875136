"""Shared helpers for the test suite."""

from spinsphere import GroupId, Weight, branch_down, weight_from_doubled


def random_dominant_weight(rng, group: GroupId, max_doubled: int = 7) -> Weight:
    """Random dominant weight with |entries| <= max_doubled / 2."""
    k = group.rank
    half = rng.choice([0, 1])
    vals = sorted(
        (rng.randrange(half, max_doubled + 1, 2) for _ in range(k)), reverse=True
    )
    if group.parity == "D" and vals[-1] != 0 and rng.random() < 0.5:
        vals[-1] = -vals[-1]
    return weight_from_doubled(group, vals)


def recursive_dim(w: Weight) -> int:
    """Dimension by the branching recursion down to Spin(3)/Spin(2).

    Independent of the Weyl product formula: uses only the interlacing
    rule and the base cases dim_{Spin(2)} = 1, dim_{Spin(3)}(m/2) = m + 1.
    """
    n = w.group.n
    if n == 2:
        return 1
    if n == 3:
        return w.doubled[0] + 1
    return sum(recursive_dim(lam) for lam in branch_down(w))
