from .exceptions import NotPositiveError


def factorize(n: int) -> dict[int, int]:
    """
    Prime factorization by trial division, as {prime: exponent}, primes increasing.
    factorize(1) -> {}
    """
    if n < 1:
        raise NotPositiveError(n)
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_divisors(n: int) -> tuple[int, ...]:
    """
    The positive primes dividing n, increasing. prime_divisors(60) -> (2, 3, 5).
    """
    return tuple(factorize(n))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}
