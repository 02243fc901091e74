"""Adjacent-diagram surgery, the jump closed form, and bounded maximality."""

import pytest

from enriques import (
    DiagramError,
    QuasihomogeneousSpec,
    canonical_key,
    check_geq_witness,
    construct_adjacent_diagram,
    diagram_type,
    expected_jump,
    is_minimal,
    lambda_lin,
    lambda_lin_semi,
    milnor_number,
    milnor_orlik,
    minimal_diagram,
    single_vertex,
    total_excess,
    verify_maximality,
)
from helpers import cusp_minimal, leaning_bamboo, wd


# ---------------------------------------------------------------------------
# construct_adjacent_diagram
# ---------------------------------------------------------------------------

def test_adjacent_of_cusp_is_the_node():
    e = construct_adjacent_diagram(cusp_minimal())
    assert canonical_key(e) == "(2r)"
    assert milnor_number(e) == 1


def test_adjacent_of_node_is_smooth_point():
    e = construct_adjacent_diagram(single_vertex(2))
    assert canonical_key(e) == "(1r)"
    assert milnor_number(e) == 0


def test_adjacent_weight_two_chain():
    m = minimal_diagram(QuasihomogeneousSpec(0, 0, 4, 6))
    e = construct_adjacent_diagram(m)
    assert canonical_key(e) == "(4r(2f(1a(1a))))"
    assert milnor_number(m) - milnor_number(e) == 2


def test_adjacent_high_weight_end():
    m = minimal_diagram(QuasihomogeneousSpec(0, 0, 6, 9))
    e = construct_adjacent_diagram(m)
    assert canonical_key(e) == "(6r(3f(2a(2f))))"
    assert is_minimal(e)
    assert milnor_number(e) == 37


def test_adjacent_single_high_weight_grows_a_satellite_run():
    e = construct_adjacent_diagram(single_vertex(5))
    assert canonical_key(e) == "(4r(2f(1a(1b))))"
    assert milnor_number(e) == 13


def test_adjacent_excess_bookkeeping():
    # the surgery changes the total excess by a case-dependent constant
    cases = [
        (cusp_minimal(), 1),                                      # d = 1
        (single_vertex(2), -1),                                   # d = 2, t = 1
        (minimal_diagram(QuasihomogeneousSpec(0, 0, 4, 6)), 0),   # d = 2: w - 2
        (minimal_diagram(QuasihomogeneousSpec(0, 0, 6, 9)), 1),   # d = 3: w - d + 2
        (single_vertex(5), -3),                                   # d = 5, w = 0
    ]
    for m, delta in cases:
        e = construct_adjacent_diagram(m)
        assert total_excess(e) - total_excess(m) == delta


def test_adjacent_requires_minimal_bamboo():
    with pytest.raises(DiagramError):
        construct_adjacent_diagram(wd(0, {1: 0}, [(1, 0)], {0: 2, 1: 1}))
    with pytest.raises(DiagramError):
        construct_adjacent_diagram(
            wd(0, {1: 0, 2: 0}, [(1, 0), (2, 0)], {0: 4, 1: 2, 2: 2})
        )


def test_adjacent_rejects_the_smooth_point():
    with pytest.raises(DiagramError):
        construct_adjacent_diagram(single_vertex(1))


def test_adjacent_works_outside_q():
    # surgery only needs the chain shape, not a quasihomogeneous origin
    m = leaning_bamboo([8, 3, 3])
    e = construct_adjacent_diagram(m)
    assert is_minimal(e)
    assert milnor_number(m) - milnor_number(e) == expected_jump(3, 2)


# ---------------------------------------------------------------------------
# expected_jump
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "d,w,value",
    [
        (1, 0, 1), (1, 1, 1), (1, 2, 1),
        (2, 0, 1), (2, 1, 1), (2, 2, 2),
        (3, 0, 1), (3, 1, 2), (3, 2, 3),
        (4, 1, 3), (5, 0, 3), (6, 2, 6),
    ],
)
def test_expected_jump_table(d, w, value):
    assert expected_jump(d, w) == value


def test_expected_jump_domain():
    with pytest.raises(ValueError):
        expected_jump(0, 0)
    with pytest.raises(ValueError):
        expected_jump(2, 3)


# ---------------------------------------------------------------------------
# lambda_lin
# ---------------------------------------------------------------------------

def test_lambda_lin_main_example():
    report = lambda_lin(QuasihomogeneousSpec(0, 0, 6, 9))
    assert (report.d, report.t, report.w) == (3, 3, 2)
    assert report.mu_D == 40 and report.mu_E == 37
    assert report.lambda_lin == 3
    assert len(report.representative) == 4
    assert report.maximality is None
    assert not report.semi
    assert check_geq_witness(report.representative, report.E_D, report.adjacency_witness)


def test_lambda_lin_equal_exponents_sweep():
    # x^n + y^n jumps by n - 2, except the node which jumps to smoothness
    assert lambda_lin(QuasihomogeneousSpec(0, 0, 2, 2)).lambda_lin == 1
    for n in range(3, 13):
        assert lambda_lin(QuasihomogeneousSpec(0, 0, n, n)).lambda_lin == n - 2


@pytest.mark.parametrize(
    "spec,value",
    [
        ((0, 0, 2, 3), 1),
        ((0, 0, 5, 5), 3),
        ((0, 0, 4, 6), 2),
        ((0, 0, 2, 4), 1),
        ((1, 1, 1, 1), 1),
        ((1, 0, 2, 3), 1),
        ((0, 0, 6, 8), 2),
    ],
)
def test_lambda_lin_values(spec, value):
    assert lambda_lin(QuasihomogeneousSpec(*spec)).lambda_lin == value


def test_lambda_lin_one_branch_node_family():
    # the family y*(x+y^q) shares the node's diagram type; its jump is 1
    # under every reading of the case split
    for q in (2, 3, 7):
        report = lambda_lin(QuasihomogeneousSpec(0, 1, 1, q))
        assert report.lambda_lin == 1
        assert canonical_key(report.D_min) == "(2r)"
        assert (report.d, report.t, report.w) == (2, 1, 0)


def test_lambda_lin_depends_only_on_the_type():
    a = lambda_lin(QuasihomogeneousSpec(1, 0, 1, 2))
    b = lambda_lin(QuasihomogeneousSpec(0, 0, 2, 4))
    assert a.D_min.key == b.D_min.key == "(2r(2f))"
    assert a.lambda_lin == b.lambda_lin == 1
    assert a.E_D.key == b.E_D.key


def test_lambda_lin_consistency_over_a_range():
    for p in range(1, 8):
        for q in range(p, 9):
            for k in (0, 1):
                for l in (0, 1):
                    if k + l + p < 2:
                        continue
                    spec = QuasihomogeneousSpec(k, l, p, q)
                    report = lambda_lin(spec)
                    assert report.mu_D == milnor_orlik(spec)
                    assert report.mu_D - report.mu_E == report.lambda_lin


def test_lambda_lin_semi_only_flags_the_report():
    plain = lambda_lin(QuasihomogeneousSpec(0, 0, 6, 9))
    semi = lambda_lin_semi(QuasihomogeneousSpec(0, 0, 6, 9))
    assert semi.semi and not plain.semi
    assert semi.lambda_lin == plain.lambda_lin
    assert semi.E_D.key == plain.E_D.key


# ---------------------------------------------------------------------------
# verify_maximality
# ---------------------------------------------------------------------------

def test_verify_maximality_cusp_defaults():
    report = verify_maximality(QuasihomogeneousSpec(0, 0, 2, 3))
    assert report.status == "verified"
    assert (report.max_vertices, report.max_weight, report.extra_bound) == (7, 4, 2)
    assert report.mu_D == 2 and report.lambda_lin == 1
    assert report.examined == report.refuted == 325
    assert report.attained_max_mu == 1
    assert report.contradictions == ()


def test_verify_maximality_explicit_bounds():
    report = verify_maximality(
        QuasihomogeneousSpec(0, 0, 2, 3), max_vertices=6, max_weight=4, extra_bound=2
    )
    assert report.status == "verified"
    assert report.examined == report.refuted == 209
    assert report.attained_max_mu == 1


def test_verify_maximality_node():
    report = verify_maximality(QuasihomogeneousSpec(1, 1, 1, 1))
    assert report.status == "verified"
    assert (report.max_vertices, report.max_weight) == (5, 5)
    assert report.mu_D == 4 and report.lambda_lin == 1
    assert report.attained_max_mu == 3


def test_verify_maximality_bound_validation():
    spec = QuasihomogeneousSpec(0, 0, 6, 9)
    with pytest.raises(ValueError):
        verify_maximality(spec, max_vertices=2)
    with pytest.raises(ValueError):
        verify_maximality(spec, max_weight=3)
    with pytest.raises(ValueError):
        verify_maximality(spec, extra_bound=0)


def test_verify_maximality_attained_value_is_mu_of_e():
    spec = QuasihomogeneousSpec(0, 0, 2, 4)
    report = verify_maximality(spec)
    jump = lambda_lin(spec)
    assert report.attained_max_mu == jump.mu_E == jump.mu_D - jump.lambda_lin


def test_diagram_type_of_e_differs_from_source():
    for spec in [(0, 0, 2, 3), (0, 0, 6, 9), (0, 0, 5, 5), (1, 1, 1, 1)]:
        report = lambda_lin(QuasihomogeneousSpec(*spec))
        assert diagram_type(report.E_D) != diagram_type(report.D_min)
