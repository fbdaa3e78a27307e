"""Independent exact oracle for the exit law of the two-sided geometric walk.

Enumerates the substochastic kernel on [0, L-1] with Python fractions and
prints the values frozen into the unit tests.
"""
from fractions import Fraction


def pmf(k):
    return Fraction(1, 3) * Fraction(1, 2 ** abs(k))


def exit_law(L, max_m):
    dist = {0: Fraction(1)}
    out = []
    for _ in range(max_m):
        nxt = {}
        exiting = Fraction(0)
        for i, p in dist.items():
            inside = Fraction(0)
            for j in range(L):
                q = p * pmf(j - i)
                nxt[j] = nxt.get(j, Fraction(0)) + q
                inside += pmf(j - i)
            exiting += p * (1 - inside)
        out.append(exiting)
        dist = nxt
    return out


if __name__ == "__main__":
    for L in (1, 2, 3, 5):
        law = exit_law(L, 4)
        print(L, [str(x) for x in law])
    for L in (1, 2, 3, 5):
        print("mass200", L, float(1 - sum(exit_law(L, 200))))
    print("L=10 m=7", exit_law(10, 7)[-1])
