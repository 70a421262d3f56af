# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Unit tests for the OH table and the Raman photon budget"""

import math

import pytest

from cavitycool.errors import DomainError
from cavitycool.molecule import (
    TransitionNotFoundError,
    get_record,
    get_transition,
    load_table,
    photon_budget,
    table_as_dicts,
    table_checksum,
    table_records,
    three_level_decay_rates,
    vibrational_candidates,
)
from cavitycool.units import AMU


def test_table_has_electronic_and_vibrational_lines() -> None:
    table = load_table()
    assert table.species == "OH"
    assert [record.line for record in table_records()] == ["P1(1)", "Q1(1)", "Q21(1)"]
    assert [t.name for t in vibrational_candidates()] == ["v1-0", "v2-0"]
    assert len(table_as_dicts()) == 5


def test_p1_transition_in_si_units() -> None:
    transition = get_transition("P1(1)")
    assert transition.lambda_ae == pytest.approx(308.256e-9)
    assert transition.gamma == pytest.approx(2 * math.pi * 2.32e5)
    assert transition.gamma_perp == pytest.approx(math.pi * 2.32e5)
    assert transition.upsilon == pytest.approx(1.43)
    assert transition.mass == pytest.approx(17.00274 * AMU)
    assert transition.repumper_count == 2


def test_table_upsilon_values() -> None:
    assert get_record("Q1(1)").upsilon == pytest.approx(0.28)
    assert get_record("Q1(1)").cycling_hyperfine is True
    assert get_record("Q21(1)").upsilon == pytest.approx(0.65)
    assert get_record("v1-0").upsilon == pytest.approx(1.6)


def test_unknown_transition() -> None:
    with pytest.raises(TransitionNotFoundError) as ex:
        get_transition("R2(5)")
    assert str(ex.value).startswith("Unknown transition 'R2(5)'.")
    assert "P1(1)" in str(ex.value)


TABLE_SHA256 = "4ff9f796e15588b1371db55e0339f7dd280b377565672ca73f48cd60e522c778"


def test_checksum_is_stable() -> None:
    """Test the checksum of the shipped table file against its recorded value."""
    assert table_checksum() == TABLE_SHA256
    assert table_checksum() == table_checksum()


def test_three_level_decay_rates() -> None:
    gamma_ry, gamma_rn = three_level_decay_rates(2.43, 1.43)
    assert gamma_ry / gamma_rn == pytest.approx(1.43)
    assert gamma_ry + gamma_rn == pytest.approx(2.43)
    with pytest.raises(DomainError):
        three_level_decay_rates(0.0, 1.0)
    with pytest.raises(DomainError):
        three_level_decay_rates(1.0, -0.1)


def test_photon_budget_p1() -> None:
    """Test the P1(1) budget at C=1."""
    budget = photon_budget(1.43, 1.0)
    assert budget.p_shelve_per_scatter == pytest.approx(1 / 2.43)
    assert budget.mean_free_scatters_to_shelve == pytest.approx(2.43)
    assert budget.cavity_to_raman_ratio == pytest.approx(2.43)
    assert budget.cavity_photons_before_shelving == pytest.approx(2.43)
    assert budget.p_shelve_per_cavity_photon == pytest.approx(1 / 3.43)
    assert budget.p_shelve_per_emission == pytest.approx(1 / (2.43 + 2.43))


@pytest.mark.parametrize("upsilon", [0.28, 0.65, 1.43])
@pytest.mark.parametrize("cooperativity", [0.5, 5.0])
def test_photon_budget_branching(upsilon: float, cooperativity: float) -> None:
    budget = photon_budget(upsilon, cooperativity)
    assert budget.p_shelve_per_scatter == pytest.approx(1 / (1 + upsilon))
    assert budget.cavity_to_raman_ratio == pytest.approx((1 + upsilon) * cooperativity)
    assert budget.p_shelve_per_emission == pytest.approx(
        1 / ((1 + upsilon) * cooperativity + 1 + upsilon)
    )


@pytest.mark.parametrize("upsilon", [0.28, 0.65, 1.43])
def test_photon_budget_survival(upsilon: float) -> None:
    budget = photon_budget(upsilon, 5.0)
    assert budget.survival_after_n_cavity_photons(0) == 1.0
    p = 1 / (6 * (1 + upsilon))
    for n in (1, 10, 100):
        assert budget.survival_after_n_cavity_photons(n) == pytest.approx((1 - p) ** n)
    with pytest.raises(DomainError):
        budget.survival_after_n_cavity_photons(-1)


def test_photon_budget_grows_with_cooperativity() -> None:
    low = photon_budget(0.65, 0.1)
    high = photon_budget(0.65, 10.0)
    assert high.cavity_photons_before_shelving > low.cavity_photons_before_shelving
    assert high.to_dict()["cavity_photons_before_shelving"] == pytest.approx(16.5)


def test_photon_budget_domain() -> None:
    with pytest.raises(DomainError):
        photon_budget(-1.0, 1.0)
    with pytest.raises(DomainError):
        photon_budget(1.0, -1.0)
