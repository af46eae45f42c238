#!/usr/bin/env python3
"""Regenerate the embedded Conway polynomial table for GF(2^n), n <= 18.

A Conway polynomial C_n over GF(2) is the lexicographically least monic
primitive polynomial of degree n (comparing coefficient words
(a_{n-1}, ..., a_0)) that is norm-compatible with C_d for every proper
divisor d of n:  C_d(x^((2^n-1)/(2^d-1))) == 0  (mod C_n).

Prints the table as decimal bit-encodings (bit i = coefficient of x^i),
ready to paste into core/src/gf2n.cpp.
"""

MAX_N = 18


def pmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def pmod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def pmulmod(a: int, b: int, m: int) -> int:
    return pmod(pmul(a, b), m)


def ppowmod(a: int, e: int, m: int) -> int:
    r = 1
    a = pmod(a, m)
    while e:
        if e & 1:
            r = pmulmod(r, a, m)
        a = pmulmod(a, a, m)
        e >>= 1
    return r


def prime_factors(x: int) -> list[int]:
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return out


def conway(n: int, table: dict[int, int]) -> int:
    qn = (1 << n) - 1
    primes = prime_factors(qn)
    divisors = [d for d in range(1, n) if n % d == 0]
    for word in range(1, 1 << n, 2):  # constant term must be 1
        f = (1 << n) | word
        # primitive: ord(x) == 2^n - 1 in GF(2)[x]/(f)
        if ppowmod(2, qn, f) != 1:
            continue
        if any(ppowmod(2, qn // p, f) == 1 for p in primes):
            continue
        ok = True
        for d in divisors:
            y = ppowmod(2, qn // ((1 << d) - 1), f)
            acc, yp = 0, 1
            cd = table[d]
            for i in range(d + 1):
                if (cd >> i) & 1:
                    acc ^= yp
                yp = pmulmod(yp, y, f)
            if acc:
                ok = False
                break
        if ok:
            return f
    raise AssertionError(f"no Conway polynomial found for n={n}")


def poly_str(f: int) -> str:
    terms = []
    for i in range(f.bit_length() - 1, -1, -1):
        if (f >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return " + ".join(terms)


def main() -> None:
    table: dict[int, int] = {}
    for n in range(1, MAX_N + 1):
        table[n] = conway(n, table)
    for n in range(1, MAX_N + 1):
        print(f"    {table[n]},  // n={n:2d}: {poly_str(table[n])}")


if __name__ == "__main__":
    main()
