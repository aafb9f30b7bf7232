from graypi import BigReal


def tol2(bits: int, slack: int) -> BigReal:
    """2**(slack - bits) as a BigReal comparison threshold."""
    return BigReal(1, bits).scale_2exp(slack - bits)


def tol10(bits: int, digits: int) -> BigReal:
    """10**-digits at the given working precision."""
    return BigReal(f"1e-{digits}", bits)
