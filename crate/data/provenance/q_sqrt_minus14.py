"""Derives the instance and unit fixture for L = Q(sqrt(-14)) over K = Q, S = {inf, 2, 7}.

Every arithmetic fact used is recomputed here by elementary means:
class numbers from reduced binary quadratic forms, splitting from Legendre
symbols, and the elements generating norm-killed ideals from the norm form.
"""

import json
import sys
from itertools import product
from pathlib import Path

D = -56  # discriminant of Q(sqrt(-14))


def reduced_forms(d):
    out = []
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b * b - d) % (4 * a):
                continue
            c = (b * b - d) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            out.append((a, b, c))
        a += 1
    return out


def legendre(a, p):
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def kronecker_2(d):
    return 0 if d % 2 == 0 else (1 if d % 8 in (1, 7) else -1)


def norm(x, y):
    return x * x + 14 * y * y


def check():
    forms = reduced_forms(D)
    assert sorted(forms) == [(1, 0, 14), (2, 0, 7), (3, -2, 5), (3, 2, 5)], forms
    # h = 4 with two forms of order 4, so Cl(L) = Z/4; the ramified prime above 2 is
    # the class of (2, 0, 7), of order 2, and the prime above 7 is its inverse.
    # Cl_S(L) = Cl(L)/<[p2]> = Z/2, with trivial action because (sigma - 1) = -2 kills it.
    # L_S = Q(sqrt 2, sqrt -7): the genus field, unramified over L outside S.
    assert legendre(2, 7) == 1  # 7 splits in Q(sqrt 2)
    assert kronecker_2(-7) == 1  # 2 splits in Q(sqrt -7)
    assert legendre(-14, 3) == 1  # 3 splits in L
    assert legendre(2, 3) == -1  # so its Frobenius in L_S/L is nontrivial
    assert legendre(-7, 3) == -1
    # 2 + sqrt(-14) has norm 18, so p3^2 = (2 + sqrt -14) p2^-1 and p3 has order 2 in Cl_S.
    assert norm(2, 1) == 18
    # No element has norm 3 * 2^i * 7^j (with i, j <= 1), so p3 is not S-principal.
    for x, y in product(range(0, 20), range(0, 10)):
        assert norm(x, y) not in (3, 6, 21, 42)
    # S-units: -1, 2 and sqrt(-14) (norms 4 and 14), sigma(sqrt -14) = -sqrt -14.
    assert norm(0, 1) == 14


def instance():
    # G^S = Gal(L_S/Q) = V4; element (a, b) with index 2a + b flips sqrt(-7) if a and sqrt(2) if b.
    gs = [[x ^ y for y in range(4)] for x in range(4)]
    pi = [0, 1, 1, 0]  # restriction to L: sqrt(-14) = sqrt(-7) sqrt(2)
    return {
        "schema_version": 1,
        "name": "Q(sqrt-14)/Q",
        "label": "real-field",
        "provenance": "data/provenance/q_sqrt_minus14.py",
        "group": [[0, 1], [1, 0]],
        "places": [
            {"id": "2", "subgroup": [0, 1], "is_p0": True},
            {"id": "7", "subgroup": [0, 1], "is_p0": False},
            {"id": "inf", "subgroup": [0, 1], "is_p0": False},
        ],
        "aux_places": [{"id": "3", "frobenius_class": [1]}],
        "cl": {"invariant_factors": [2], "action": [[[1]], [[1]]]},
        "gs": gs,
        "pi": pi,
        "kappa": [0, 3],
        # 2 splits in Q(sqrt -7): its decomposition group fixes sqrt(-7), giving (0, 1).
        # 7 splits in Q(sqrt 2) and complex conjugation fixes sqrt 2, giving (1, 0).
        "iota": [[0, 1], [0, 2], [0, 2]],
    }


def fixture():
    # U = <-1> x <2> x <sqrt -14>; sigma fixes -1 and 2 and sends sqrt -14 to -1 * sqrt -14.
    unit_module = {
        "invariant_factors": [2, 0, 0],
        "action": [
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[1, 0, 1], [0, 1, 0], [0, 0, 1]],
        ],
    }
    # Class a * [p3]: (1 + sigma)(a p3) = (3^a), so the element is 3^a in K^x and
    # tau(3^a)/3^a = 1 for every tau.
    classes = [{"a": [a], "cocycle": [[0, 0, 0], [0, 0, 0]], "a_in_units_times_k": True} for a in range(3)]
    return {
        "schema_version": 1,
        "instance": "Q(sqrt-14)/Q",
        "provenance": "data/provenance/q_sqrt_minus14.py",
        "unit_module": unit_module,
        "classes": classes,
    }


def main():
    check()
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1]
    (root / "instances" / "q_sqrt_minus14.json").write_text(json.dumps(instance(), indent=2) + "\n")
    (root / "fixtures" / "q_sqrt_minus14.json").write_text(json.dumps(fixture(), indent=2) + "\n")


if __name__ == "__main__":
    main()
