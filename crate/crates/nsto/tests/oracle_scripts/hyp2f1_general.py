"""Reference values of 2F1(a, b; c; z) at 50 digits, printed as Rust tuples."""
from mpmath import mp, hyp2f1, mpf

mp.dps = 50
CASES = [
    (0.5, 1.5, 2.5, 0.9),       # c - a - b = 0.5
    (1.3, 2.2, 4.9, 0.95),      # generic connection
    (1.0, 0.5, 1.5, 0.999),     # c - a - b = 0, logarithmic
    (3.0, 0.5, 3.5, 0.98),      # c - a - b = 0, L = 2 inverse-square kernel
    (1.25, 0.75, 4.0, 0.9),     # c - a - b = 2
    (1.0, 3.5, 3.5, 0.8),       # c - a - b = -1
    (2.5, 1.5, 2.0, 0.85),      # c - a - b = -2
    (0.3, 0.4, 1.7000001, 0.9), # near-integer c - a - b
    (-2.5, 0.5, 1.5, 0.97),     # c - a - b = 3.5
    (2.0, 0.5, 2.5, 0.76),      # just past the series switch, c - a - b = 0
]
for a, b, c, z in CASES:
    v = hyp2f1(mpf(a), mpf(b), mpf(c), mpf(z))
    print(f"({a!r}, {b!r}, {c!r}, {z!r}, {mp.nstr(v, 20)}),")
