#!/usr/bin/env python3
"""Write the reference b-files used by the reference-sequence check.

Each file data/reference/<anchor>_<pattern>.b holds "n value" lines for
n = 1..N, computed here from closed forms and recurrences independently of
the C++ code.  Below the range of a formula the count of the anchor alone
is used (n < 5), minus one at n = 5, where the size-5 pattern itself is the
only extra avoider removed.
"""

import argparse
from math import comb
from pathlib import Path


def fib(i):
    # F_0 = F_1 = 1
    a, b = 1, 1
    for _ in range(i):
        a, b = b, a + b
    return a


BASE = {
    "1342": lambda n: 2 ** (n - 1) - (n - 1),
    "1324": lambda n: 1 if n == 1 else fib(2 * n - 4),
    "1432": lambda n: 2 ** n + 1 - 2 * n - comb(n, 3),
}


def small(anchor, n):
    return BASE[anchor](n) - (1 if n == 5 else 0)


def recurrence(anchor, start, step):
    """a(n) = step(n, a) for n >= start, smaller n from small()."""

    def term(n, memo={}):
        key = (anchor, start, step, n)
        if key not in memo:
            memo[key] = small(anchor, n) if n < start else step(n, term)
        return memo[key]

    return term


def closed(anchor, start, f):
    return lambda n: small(anchor, n) if n < start else f(n)


PAIRS = {
    ("1342", "12345"): ("A028387", closed("1342", 5, lambda n: (n - 3) + comb(n - 1, 2) + comb(n - 2, 2))),
    ("1342", "12435"): ("A050407", closed("1342", 5, lambda n: 1 + comb(n - 1, 2) + comb(n - 1, 3))),
    ("1342", "12354"): ("A016789", closed("1342", 6, lambda n: 3 * n - 1)),
    ("1324", "12453"): ("A027927", closed("1324", 5, lambda n: 1 + comb(n - 1, 2) + comb(n, 4))),
    ("1324", "15234"): ("A000129", recurrence("1324", 6, lambda n, a: 2 * a(n - 1) + a(n - 2))),
    ("1324", "12345"): ("A210673", recurrence("1324", 6, lambda n, a: a(n - 1) + a(n - 2) + n + 1)),
    ("1324", "12354"): ("A116717", recurrence("1324", 6, lambda n, a: a(n - 1) + fib(n + 1) - (n + 1))),
    ("1324", "12534"): ("A000325", closed("1324", 5, lambda n: 2 ** (n - 1) - (n - 1))),
    ("1432", "12435"): ("A116721", closed("1432", 5, lambda n: 1 + comb(n, 3) + comb(n - 3, 2))),
    ("1432", "15234"): ("A017401", closed("1432", 6, lambda n: 11 * n - 43)),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "reference")
    parser.add_argument("--n-max", type=int, default=30)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for (anchor, pattern), (oeis, term) in PAIRS.items():
        path = args.out / f"{anchor}_{pattern}.b"
        with path.open("w") as f:
            f.write(f"# {oeis} [{anchor},{pattern}]\n")
            for n in range(1, args.n_max + 1):
                f.write(f"{n} {term(n)}\n")
        print(path)


if __name__ == "__main__":
    main()
