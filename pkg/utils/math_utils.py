from sympy import factorint, isprime


def two_adic_valuation(value):
    """Exponente de 2 en un entero no nulo."""
    if value == 0:
        raise ValueError("2-adic valuation of 0 is undefined")
    value = abs(value)
    return (value & -value).bit_length() - 1


def factorize(value):
    """
    Factoriza |value| y devuelve una lista ordenada de (primo, exponente).
    factorint usa división por tentativa y luego Pollard rho / Miller-Rabin.
    """
    value = abs(value)
    if value <= 1:
        return []
    return sorted(factorint(value).items())


def odd_primes(value):
    """Primos impares distintos que dividen a value."""
    return [p for p, _ in factorize(value) if p != 2]


def is_square_free(value):
    return all(e == 1 for _, e in factorize(value))


def is_cube_free(value):
    return all(e <= 2 for _, e in factorize(value))


def is_odd_prime(p):
    return p > 2 and isprime(p)


def format_factorization(value):
    """
    Escribe la factorización como en el texto de referencia:
        10224 -> "10224 = 2^4 × 3^2 × 71"
        -1936 -> "-1936 = (-1) × 2^4 × 11^2"
    """
    factors = factorize(value)
    terms = [f"{p}^{e}" if e > 1 else str(p) for p, e in factors]
    if value < 0:
        terms.insert(0, "(-1)")
    if not terms:
        return str(value)
    return f"{value} = " + " × ".join(terms)
