#!/usr/bin/env python3
"""Regenerates cremona_d4_expected.txt.

Independent scan of the degree (2, 4) candidates with n <= 1000, written
directly from the arithmetic constraints rather than the C++ engine, so the
two implementations check each other.  A center of a quadro-quartic self-map
of P^N with base dimension n must satisfy:

  * (n + 2) / 4 integral, delta = (n + 2)/4 - 1
  * delta = 1 never happens at degree 4
  * delta = 2 is fine (degree is even)
  * delta >= 3 forces delta, n even, 2^r | n - delta with r = (delta-1)//2,
    and the even-degree divisor test 2^r | d(2r + 3) - 2

Only the fano-branch survivors (delta >= 1) are listed, as "n delta" lines.
"""

D = 4
N_MAX = 1000


def surviving(n: int) -> tuple[int, int] | None:
    if (n + 2) % D != 0:
        return None
    delta = (n + 2) // D - 1
    if delta == 0:
        return None  # delta-zero branch, not a fano center
    if delta == 1:
        return None  # only degree 2 admits a defect-one center
    if delta == 2:
        return (n, delta)  # degree 4 is even, branch survives
    if delta % 2 or n % 2:
        return None
    r = (delta - 1) // 2
    if (n - delta) % 2**r:
        return None
    if (D * (2 * r + 3) - 2) % 2**r:
        return None
    return (n, delta)


def main() -> None:
    for n in range(1, N_MAX + 1):
        row = surviving(n)
        if row:
            print(f"{row[0]} {row[1]}")


if __name__ == "__main__":
    main()
