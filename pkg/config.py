from fractions import Fraction


class Config:
    MAX_DEGREE = 3
    # Target constants t_g of the upper bound phi(G) <= t_g * m + r_g(G).
    TARGET = {4: Fraction(2, 9), 5: Fraction(1, 5)}
    SUPPORTED_GIRTHS = (4, 5)
    # Largest i of a generalised family F^g_{i,j,k} that the error function looks at.
    FG_MAX_I = 3
    REPORT_SCHEMA = 1
