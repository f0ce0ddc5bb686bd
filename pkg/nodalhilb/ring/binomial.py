from math import comb


def binom(n: int, k: int) -> int:
    """
    Binomial coefficient with the vanishing convention used by the class formulas:
    zero whenever n < 0, k < 0 or k > n, so sums may run over any index range.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)
