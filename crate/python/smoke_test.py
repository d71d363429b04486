"""Smoke test for the `dyck` extension module.

Build and install first, e.g.

    maturin build -m crates/python/Cargo.toml -o dist && pip install dist/dyck-*.whl

then run `python python/smoke_test.py`.
"""

from fractions import Fraction

import dyck


def main():
    value, terms = dyck.count_main(3, 3)
    assert value == 5
    assert [t for _, t in terms] == [Fraction(1, 6), Fraction(3, 2), Fraction(10, 3)]
    assert [p for p, _ in terms] == [[(1, 3)], [(1, 1), (2, 1)], [(3, 1)]]

    assert dyck.count(3, 3) == 5
    assert dyck.count(5, 3, method="coprime") == 7
    assert dyck.count(4, 6, method="duchon") == 23
    assert dyck.count_dp(4, 6) == dyck.count_recurrence(4, 6) == 23
    assert dyck.count_dp(2, 2, strict=True) == 1
    assert dyck.count_fuss(2, 3) == 12
    assert dyck.count_duchon(2) == 23
    assert dyck.catalan_sequence(5) == [1, 1, 2, 5, 14, 42]
    assert dyck.primitive_counts(1, 1, 3) == [1, 1, 2]
    assert dyck.binomial(8, 3) == 56
    assert dyck.binomial(6, 7) == 0
    assert dyck.a_value(3, 3) == Fraction(10, 3)

    # big values stay exact
    assert dyck.count(60, 60) == dyck.catalan_sequence(60)[-1]

    p = dyck.PathWord("xyxxy")
    assert str(p.rotate(2)) == "xxyxy"
    assert p.period() == 5 and len(p.rotation_class()) == 5
    assert not p.is_dyck()
    assert p.canonical_dyck() == dyck.PathWord("xxyxy")
    assert dyck.PathWord("xyxy").type_of() == dyck.MultSeq([2])
    assert dyck.PathWord("xxyy").shape() == [2]
    assert len(dyck.enumerate_paths(3, 2)) == 10

    records = dyck.census(3, 3)
    assert sum(count for _, _, count in records) == 5

    seqs = dyck.sequences_with_norm(3)
    assert [s.entries for s in seqs] == [[3], [1, 1], [0, 0, 1]]
    c = dyck.MultSeq([2, 1])
    assert c.norm() == 4 and c.size() == 3 and c.h() == 3
    assert dyck.check_hh_identity(c, 1)
    assert dyck.check_coef_identity(3, [Fraction(1), Fraction(3, 2), Fraction(10, 3)])
    assert dyck.check_catalan_reduction(10, 4)
    assert dyck.check_fuss_recurrence(2, 3)
    assert all(passed for _, passed, _ in dyck.verify("oracle", 6))

    for bad in (lambda: dyck.count(4, 4, method="coprime"),
                lambda: dyck.count(3, 3, method="nope"),
                lambda: dyck.PathWord("xz"),
                lambda: dyck.census(20, 20)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
