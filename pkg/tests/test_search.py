from fractions import Fraction

from wfano.search import (EXPONENT_BOUNDS, SearchCase, SeriesFamily, Singular,
                          accept_solution, assemble_series, case2_case3_candidates,
                          config_bundle, det_int, piece_to_series_shape,
                          solve_case, solve_one_unknown)


def test_exponent_bounds_are_data():
    assert EXPONENT_BOUNDS["m4"] == (1, 3)
    assert EXPONENT_BOUNDS["m3"] == (2, 6)
    assert EXPONENT_BOUNDS["m2"] == (3, 16)
    assert EXPONENT_BOUNDS["case1_cap"] == 83


def test_det_int():
    assert det_int([[1, 2], [3, 4]]) == -2
    assert det_int([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert det_int([[1, 2, 3], [2, 4, 6], [1, 0, 1]]) == 0


def test_solve_case_extreme_tuple():
    # monomial data x_0^91 x_1, x_1^59 x_2, x_2^7 x_0, x_3^3, x_4^2:
    # the system convention records x_i^{m_i} x_{e(i)}, so the self-paired
    # rows carry exponents 2 and 1 (total powers 3 and 2)
    case = SearchCase(e=(1, 2, 0, 3, 4), m=(91, 59, 7, 2, 1))
    sol = solve_case(case)
    assert accept_solution(sol) == (407, 547, 5311, 12528, 18792)


def test_solve_case_symmetric_quintic():
    case = SearchCase(e=(0, 1, 2, 3, 4), m=(3, 3, 3, 3, 3))
    assert accept_solution(solve_case(case)) == (1, 1, 1, 1, 1)


def test_solve_case_singular_rows():
    # rows 0 and 1 encode the same linear form: rank deficiency
    case = SearchCase(e=(1, 0, 2, 3, 4), m=(1, 1, 3, 3, 3))
    rows_equal_case = SearchCase(e=(1, 1, 2, 3, 4), m=(1, 5, 5, 2, 1))
    results = {type(solve_case(case)).__name__,
               type(solve_case(rows_equal_case)).__name__}
    assert "Singular" in results or "NoSolution" in results


def test_solve_case_rejects_nonpositive():
    case = SearchCase(e=(4, 4, 4, 4, 4), m=(50, 50, 50, 50, 50))
    sol = solve_case(case)
    if isinstance(sol, tuple):
        assert accept_solution(sol) is None or all(
            x >= 1 for x in accept_solution(sol))


def test_one_unknown_finds_extreme_tuple():
    bundle = config_bundle((1, 2, 0, 3, 4), 7, 2, 1)
    finite = set()
    pieces = []
    diag = {"finite_cases": 0, "series_cases": 0}
    solve_one_unknown(bundle, 0, 59, (1, 2, 0, 3, 4), (7, 2, 1), finite,
                      pieces, diag)
    assert (407, 547, 5311, 12528, 18792) in finite


def test_one_unknown_series_piece_and_assembly():
    # vertex data of the (1,1,1) series: x_1^5 x_2, x_2^5 x_3, x_3^5 x_1,
    # x_4^2 x_0, and a free exponent at the weight-2 coordinate
    e = (0, 2, 3, 1, 0)
    bundle = config_bundle(e, 5, 5, 2)
    finite = set()
    pieces = []
    diag = {"finite_cases": 0, "series_cases": 0}
    solve_one_unknown(bundle, 0, 5, e, (5, 5, 2), finite, pieces, diag)
    assert diag["series_cases"] == 1
    assert pieces
    b, kform = piece_to_series_shape(pieces[0])
    assert b == (1, 1, 1)
    series, unmergeable, dropped = assemble_series(pieces)
    assert [s.b for s in series] == [(1, 1, 1)]
    assert not unmergeable
    assert series[0].member(3) == ((2, 3, 3, 3, 8), 18)


def test_series_family_well_formedness_flag():
    assert SeriesFamily((1, 1, 1)).well_formed_members
    assert SeriesFamily((1, 1, 2)).well_formed_members
    # two even components force four even weights in every member
    assert not SeriesFamily((1, 2, 2)).well_formed_members
    assert not SeriesFamily((5, 6, 22)).well_formed_members


def test_case23_candidates():
    cands = case2_case3_candidates()
    assert (1, 1, 1, 1, 1) in cands
    # shapes (1, a, 1, 1, 1) etc. with a <= 6
    assert (1, 1, 1, 1, 6) in cands
    assert (1, 1, 1, 2, 3) in cands
    for w in cands:
        assert w == tuple(sorted(w))


def test_solved_solutions_satisfy_system():
    # substitute back: every accepted solution satisfies its linear system
    case = SearchCase(e=(1, 2, 0, 3, 4), m=(91, 59, 7, 2, 1))
    sol = solve_case(case)
    a = [int(x) for x in sol]
    d = sum(a) - 1
    for i in range(5):
        assert case.m[i] * a[i] + a[case.e[i]] == d
