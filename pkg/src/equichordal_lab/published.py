"""Transcriptions of the printed coefficient display.

Each printed expression is rebuilt from its printed factors, so the factored
denominators are multiplied out here rather than factored elsewhere.

Module Information:
    - Filename: published.py
    - Module: published
    - Location: src/equichordal_lab/
"""

from fractions import Fraction

from .algebra import Poly, RationalFunction

# ==== Printed factors (lowest degree first) ====
P2 = Poly.of(1, -2, 2)  # 2c^2 - 2c + 1
P4 = Poly.of(1, -4, 6, -4, 2)  # 2c^4 - 4c^3 + 6c^2 - 4c + 1
Q4 = Poly.of(1, -4, 5, -2, 1)  # c^4 - 2c^3 + 5c^2 - 4c + 1

A4_NUMERATOR = Poly.of(-1, 0, 12, -24, 12)
A6_NUMERATOR = Poly.of(1, 0, -52, 284, -712, 940, -500, -320, 680, -400, 80)

PUBLISHED_A: dict[int, RationalFunction] = {
    2: RationalFunction.from_polys(Poly.of(1), 2 * P2),
    4: RationalFunction.from_polys(-A4_NUMERATOR, 8 * P2**2 * P4),
    6: RationalFunction.from_polys(A6_NUMERATOR, 16 * P2**4 * Q4 * P4),
}

PUBLISHED_B: dict[int, RationalFunction] = {
    2: RationalFunction.from_polys(Poly.of(1), Poly.of(1, 1), "z"),
    4: RationalFunction.from_polys(-Poly.of(-1, -6, 3), Poly.of(1, 8, 14, 8, 1), "z"),
    6: RationalFunction.from_polys(
        Poly.of(2, 42, 204, -20, -110, 10),
        Poly.of(1, 24, 172, 488, 678, 488, 172, 24, 1),
        "z",
    ),
}

# a_2(1/2) from the printed a_2
A2_AT_HALF = Fraction(1)


def matches_published(kind: str, n: int, value: RationalFunction) -> bool | None:
    """Cross-multiplication equality with the printed a_n or b_n.

    Returns None when no printed form exists for (kind, n).
    """
    table = {"a": PUBLISHED_A, "b": PUBLISHED_B}[kind]
    printed = table.get(n)
    if printed is None:
        return None
    return value.num * printed.den == value.den * printed.num


__all__ = ["A2_AT_HALF", "PUBLISHED_A", "PUBLISHED_B", "matches_published"]
