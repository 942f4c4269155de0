#!/usr/bin/env python3
"""Reference values for the complex log-Gamma tests.

Evaluates ln Gamma(z) at 50 significant digits with mpmath and prints a Rust
table literal. The output is pasted into crates/core/tests/oracle_values.rs.
"""
import mpmath as mp

mp.mp.dps = 50

POINTS = [
    (1.0, 0.0), (0.5, 0.0), (2.0, 0.0), (1.0, 1.0), (1.0, -1.0), (0.0, 1.0),
    (0.0, -1e-3), (0.0, 0.1), (0.0, 5.0), (1.0, 5.0), (501.0, 5.0),
    (3.5, 2.25), (0.7, 0.2), (1.7, 0.2), (-0.5, 0.1), (-3.7, 2.0),
    (-10.3, 0.0), (-2.5, 0.0), (-0.3, -0.7), (-12.25, 7.5), (-49.5, 0.5),
    (-50.0, 100.0), (-50.0, -100.0), (-25.0, 3.0), (50.0, 100.0), (50.0, -3.0),
    (0.25, 100.0), (0.25, -99.0), (10.0, 0.0), (7.9, 6.1), (-0.9, 30.0),
    (42.0, 0.0), (0.001, 0.0), (1e-6, 1e-6), (-7.0, 1e-3), (5.0, -50.0),
]


def main():
    print("pub const LOG_GAMMA_TABLE: &[(f64, f64, f64, f64)] = &[")
    for re, im in POINTS:
        v = mp.loggamma(mp.mpc(re, im))
        print(f"    ({re!r}, {im!r}, {mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)}),")
    print("];")


if __name__ == "__main__":
    main()
