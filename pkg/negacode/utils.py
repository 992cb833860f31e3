import numpy as np


def ceil_div(a: int, b: int) -> int:
    """Exact integer ceiling of a / b for b > 0

    Args:
        a (int): numerator
        b (int): positive denominator

    Returns:
        c (int): smallest integer >= a / b
    """
    return -(-a // b)


def negate_residues(residues, two_n: int) -> set:
    """Map a set of residues S to -S modulo 2n

    Args:
        residues (iterable): residues modulo 2n
        two_n (int): the modulus 2n

    Returns:
        neg (set): {(2n - s) mod 2n}
    """
    return {(two_n - s) % two_n for s in residues}


def longest_circular_run(flags: np.ndarray) -> int:
    """Length of the longest run of True values, wrapping around the end

    Args:
        flags (np.array): boolean array

    Returns:
        run (int): longest circular run, len(flags) if all are True
    """
    flags = np.asarray(flags, dtype=bool)
    if flags.all():
        return int(flags.size)
    # rotate so the array starts just after a False entry; no run then wraps
    start = int(np.flatnonzero(~flags)[0]) + 1
    rotated = np.roll(flags, -start)
    best = run = 0
    for f in rotated:
        run = run + 1 if f else 0
        best = max(best, run)
    return best


def half_plus_exponent(q: int, n: int):
    """Return ell with n = (q^ell + 1) / 2, or None"""
    ell, power = 1, q
    while power + 1 <= 2 * n:
        if power + 1 == 2 * n:
            return ell
        ell, power = ell + 1, power * q
    return None


def projective_exponent(q: int, n: int):
    """Return m with n = (q^m - 1) / (2(q - 1)), or None"""
    m, power = 1, q
    while power - 1 <= 2 * n * (q - 1):
        if power - 1 == 2 * n * (q - 1):
            return m
        m, power = m + 1, power * q
    return None


def tower_exponents(q: int, n: int):
    """Return (t, tau), t >= 2 and tau >= 2, with n = (q^(t 2^tau) - 1) / (2(q^t + 1)), or None"""
    t = 2
    while q ** (4 * t) - 1 <= 2 * n * (q**t + 1):
        tau = 2
        while q ** (t * 2**tau) - 1 <= 2 * n * (q**t + 1):
            if q ** (t * 2**tau) - 1 == 2 * n * (q**t + 1):
                return t, tau
            tau += 1
        t += 1
    return None
