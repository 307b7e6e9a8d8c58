"""delta histograms for GL(1) atoms over Q_p, next to the stated closed-form counts.

For mu of conductor k the table lists, over chi in X'(k), how many chi give each
delta value, and what the stated interference counts predict for the same
slots.
"""

import argparse

from twistcond.characters import enumerate_Xprime
from twistcond.counting import count_Xprime, stated_delta_count, stated_full_delta_count
from twistcond.localfield import make_field
from twistcond.oracle import delta_histogram
from twistcond.reps import character_atom


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--k-max", type=int, default=3)
    args = ap.parse_args()
    F = make_field(args.p)

    print("a(mu)  delta  enumerated  stated")
    for k in range(1, args.k_max + 1):
        mu = enumerate_Xprime(F, k)[0]
        atom = character_atom(mu)
        hist = delta_histogram(atom, k)
        assert hist.total == count_Xprime(F.q, k)
        for d in range(k + 1):
            if d == k:
                stated = stated_full_delta_count(atom).value
            elif d == 0:
                stated = "-"
            else:
                stated = stated_delta_count(atom, k - d).value
            print(f"{k:5d}  {d:5d}  {hist.counts.get(d, 0):10d}  {stated!s:>6}")


if __name__ == "__main__":
    main()
