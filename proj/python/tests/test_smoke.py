import cmath
import math

import pytest

import pacsent

SQRT_HALF = 1 / math.sqrt(2)


def test_overlap_alpha_beta_one_m_n_two_is_seven():
    log_magnitude, phase = pacsent.pacs_overlap(1.0, 1.0, 2, 2)
    assert math.exp(log_magnitude) == pytest.approx(7.0, rel=1e-12)
    assert phase == pytest.approx(0.0, abs=1e-12)


def test_overlap_conjugate_symmetry():
    a, b = 0.7 - 0.4j, -1.1 + 0.3j
    lm1, ph1 = pacsent.pacs_overlap(a, b, 3, 1)
    lm2, ph2 = pacsent.pacs_overlap(b, a, 1, 3)
    assert lm1 == pytest.approx(lm2, abs=1e-12)
    assert cmath.exp(1j * ph1) == pytest.approx(cmath.exp(-1j * ph2), abs=1e-12)


def test_laguerre_low_order():
    assert pacsent.laguerre(2, 3.0) == pytest.approx(1 - 2 * 3 + 3**2 / 2)


def test_antisymmetric_weights_give_a_bell_state():
    c = pacsent.qubit_coefficients(alpha=2.0, beta=2.0, gamma=0.5,
                                   u=SQRT_HALF, v=-SQRT_HALF, m=1, n=2)
    assert abs(c[0]) == pytest.approx(0.0, abs=1e-12)
    assert abs(c[1]) == pytest.approx(SQRT_HALF, abs=1e-12)
    assert abs(c[2]) == pytest.approx(SQRT_HALF, abs=1e-12)
    assert pacsent.concurrence(alpha=2.0, beta=2.0, gamma=0.5, u=SQRT_HALF,
                               v=-SQRT_HALF, m=1, n=2) == pytest.approx(1.0, abs=1e-9)


def test_depolarized_bell_state_follows_one_minus_two_p():
    for p in (0.0, 0.1, 0.3, 0.6):
        value = pacsent.concurrence(alpha=1.0, beta=1.0, u=SQRT_HALF, v=-SQRT_HALF,
                                    m=0, n=1, p=p)
        assert value == pytest.approx(max(0.0, 1 - 2 * p), abs=1e-9)
    assert pacsent.p_critical(alpha=1.0, beta=1.0, u=SQRT_HALF, v=-SQRT_HALF,
                              m=0, n=1, tol=1e-10) == pytest.approx(0.5, abs=1e-7)


def test_closed_form_matches_fock_oracle():
    kwargs = dict(alpha=1.2, beta=0.8 + 0.3j, gamma=0.4, u=0.6, v=0.8, m=1, n=2)
    assert pacsent.concurrence(**kwargs) == pytest.approx(
        pacsent.oracle_concurrence(**kwargs), abs=1e-9)


def test_sweep_shape_and_order():
    columns, rows = pacsent.sweep([("gamma", 0.0, 1.0, 3), ("u", -1.0, 1.0, 2)],
                                  alpha=1.0, beta=1.0, m=0, n=1)
    assert columns == ["gamma", "u"]
    assert [r[0] for r in rows] == [[0.0, -1.0], [0.0, 1.0], [0.5, -1.0],
                                    [0.5, 1.0], [1.0, -1.0], [1.0, 1.0]]
    assert all(0.0 <= r[1] <= 1.0 for r in rows)


def test_tanh_fit_recovers_parameters():
    a, b, c, d = 0.2, 0.3, 1.2, 2.5
    data = [(x / 10, a + b * math.tanh(d * (x / 10 - c))) for x in range(31)]
    result = pacsent.fit_tanh(data)
    assert result["converged"]
    assert result["params"] == pytest.approx([a, b, c, d], abs=1e-6)


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        pacsent.pacs_overlap(60.0, 0.0, 0, 0)
    with pytest.raises(ValueError):
        pacsent.concurrence(alpha=1.0, beta=1.0, p=0.9)
    with pytest.raises(pacsent.RangeError):
        pacsent.pacs_overlap(0.0, 51.0, 1, 1)
