import numpy as np
import pytest

from qcorr.bases import JointDistribution
from qcorr.correlations import (
    CorrelationReport,
    classical_correlations_bd,
    concurrence,
    concurrence_werner,
    correlation_entropy_function,
    discord_bd,
    discord_werner,
    full_report,
    laqc_bd,
    mutual_information,
)
from qcorr.qstate import bell_diagonal_state, werner_state

# Frozen via direct arithmetic on the closed forms (independent evaluation).
F_HALF = 0.188721875540867
F_QUARTER = 0.045565997075035
DISCORD_WERNER_HALF = 0.262483183763734
DISCORD_PHASE_DAMPED = 0.061278124459133  # triple (0.25, -0.25, 0.5)

Z_GRID = np.linspace(0.01, 0.99, 99)


class TestEntropyFunction:
    def test_endpoints(self):
        assert correlation_entropy_function(0.0) == 0.0
        assert correlation_entropy_function(1.0) == pytest.approx(1.0, abs=1e-15)
        assert correlation_entropy_function(-1.0) == pytest.approx(1.0, abs=1e-15)

    def test_halfway(self):
        assert correlation_entropy_function(0.5) == pytest.approx(F_HALF, abs=1e-12)

    def test_even(self):
        for c in np.linspace(0, 1, 21):
            assert correlation_entropy_function(c) == pytest.approx(
                correlation_entropy_function(-c), abs=1e-15
            )

    def test_monotone_on_unit_interval(self):
        vals = [correlation_entropy_function(c) for c in np.linspace(0, 1, 101)]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            correlation_entropy_function(1.5)

    def test_matches_mutual_information_of_matching_table(self):
        # f(c) is the mutual information of the two-outcome table
        # p(i, j) = (1 + (-1)^{i+j} c)/4 with uniform marginals.
        for c in (0.2, 0.5, 0.8):
            p = np.array([[1 + c, 1 - c], [1 - c, 1 + c]]) / 4.0
            mi = mutual_information(JointDistribution(p))
            assert mi == pytest.approx(correlation_entropy_function(c), abs=1e-12)


class TestMutualInformation:
    def test_uniform_is_zero(self):
        assert mutual_information(JointDistribution(np.full((2, 2), 0.25))) == 0.0

    def test_perfect_correlation_is_one_bit(self):
        d = JointDistribution(np.array([[0.5, 0.0], [0.0, 0.5]]))
        assert mutual_information(d) == pytest.approx(1.0, abs=1e-15)

    def test_werner_half_distribution(self):
        p = np.array([[0.375, 0.125], [0.125, 0.375]])
        assert mutual_information(JointDistribution(p)) == pytest.approx(
            F_HALF, abs=1e-12
        )


class TestClassicalAndLaqc:
    def test_werner_reduces_to_f(self):
        for z in (0.1, 0.5, 0.9):
            f = correlation_entropy_function(z)
            assert classical_correlations_bd((z, -z, z)) == pytest.approx(f, abs=0)
            assert laqc_bd((z, -z, z)) == pytest.approx(f, abs=0)

    def test_generic_triple(self):
        params = (0.25, -0.25, 0.5)  # c_min = c_max = 0.25
        assert classical_correlations_bd(params) == pytest.approx(F_QUARTER, abs=1e-12)
        assert laqc_bd(params) == pytest.approx(F_QUARTER, abs=1e-12)

    def test_zero_triple(self):
        assert classical_correlations_bd((0, 0, 0)) == 0.0
        assert laqc_bd((0, 0, 0)) == 0.0

    def test_selection_rules(self):
        # classical looks at min{|c2|, |c3|}, laqc at max{|c1|, |c2|}
        params = (0.7, -0.3, 0.5)
        assert classical_correlations_bd(params) == pytest.approx(
            correlation_entropy_function(0.3), abs=1e-15
        )
        assert laqc_bd(params) == pytest.approx(
            correlation_entropy_function(0.7), abs=1e-15
        )

    def test_equal_whenever_selections_coincide(self):
        for z in Z_GRID:
            assert abs(
                classical_correlations_bd((z, -z, z)) - laqc_bd((z, -z, z))
            ) <= 1e-15


class TestDiscord:
    def test_zero_triple(self):
        assert discord_bd((0, 0, 0)) == 0.0

    def test_matches_werner_closed_form_on_grid(self):
        for z in Z_GRID:
            assert abs(discord_bd((z, -z, z)) - discord_werner(z)) <= 1e-12

    def test_phase_damped_triple(self):
        assert discord_bd((0.25, -0.25, 0.5)) == pytest.approx(
            DISCORD_PHASE_DAMPED, abs=1e-12
        )

    def test_werner_spot_values(self):
        assert discord_werner(0.0) == 0.0
        assert discord_werner(1.0) == pytest.approx(1.0, abs=1e-12)
        assert discord_werner(0.5) == pytest.approx(DISCORD_WERNER_HALF, abs=1e-12)

    def test_dominates_laqc_strictly_inside_unit_interval(self):
        for z in Z_GRID:
            gap = discord_werner(z) - laqc_bd((z, -z, z))
            assert gap >= -1e-12
            assert gap > 1e-6  # strict in the interior

    def test_nonnegative(self):
        for params in [(0.3, 0.3, -0.3), (0.9, -0.9, 0.9), (0.1, 0.0, 0.0)]:
            assert discord_bd(params) >= 0.0


class TestConcurrence:
    def test_bell_state(self):
        assert concurrence(bell_diagonal_state((1, -1, 1))) == pytest.approx(
            1.0, abs=1e-10
        )

    def test_werner_threshold(self):
        assert concurrence_werner(1 / 3) == 0.0
        assert concurrence_werner(0.2) == 0.0
        assert concurrence_werner(0.5) == pytest.approx(0.25, abs=1e-15)
        assert concurrence_werner(1.0) == pytest.approx(1.0, abs=1e-15)

    def test_wootters_route_matches_closed_form(self):
        for z in np.linspace(0, 1, 21):
            assert concurrence(werner_state(z)) == pytest.approx(
                concurrence_werner(z), abs=1e-10
            )

    def test_phase_damped_closed_form(self):
        # max{0, z(3 - 2 gamma)/2 - 1/2} for the triple ((1-g)z, -(1-g)z, z)
        for z in (0.3, 0.5, 0.9):
            for g in (0.0, 0.25, 0.5, 0.75, 1.0):
                rho = bell_diagonal_state(((1 - g) * z, -(1 - g) * z, z))
                expected = max(0.0, z * (3 - 2 * g) / 2 - 0.5)
                assert concurrence(rho) == pytest.approx(expected, abs=1e-10)

    def test_separable_werner(self):
        assert concurrence(werner_state(0.2)) == 0.0


class TestFullReport:
    def test_maximally_mixed_all_exactly_zero(self):
        rep = full_report((0, 0, 0))
        assert rep == CorrelationReport(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    def test_bell_state_all_maximal(self):
        rep = full_report((1, -1, 1))
        for v in (rep.classical, rep.laqc, rep.discord, rep.concurrence):
            assert v == pytest.approx(1.0, abs=1e-10)

    def test_werner_half(self):
        rep = full_report((0.5, -0.5, 0.5))
        assert rep.classical == pytest.approx(F_HALF, abs=1e-12)
        assert rep.laqc == pytest.approx(F_HALF, abs=1e-12)
        assert rep.discord == pytest.approx(DISCORD_WERNER_HALF, abs=1e-12)
        assert rep.concurrence == pytest.approx(0.25, abs=1e-10)
        assert rep.c_min == 0.5 and rep.c_max == 0.5

    def test_propagates_nonphysical_error(self):
        with pytest.raises(ValueError):
            full_report((1, 1, 1))
