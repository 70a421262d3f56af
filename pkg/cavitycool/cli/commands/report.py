# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the report command"""

import logging
import pathlib
from typing import Any, Dict, Optional

import click

from cavitycool.cli.config import CavityCoolConfig
from cavitycool.cli.options.common import (
    common_options,
    get_config,
    handle_exceptions,
    load_config_to_ctx,
    output_options,
)
from cavitycool.cli.utils import resolve_cavity, resolve_drive, with_hz_keys
from cavitycool.molecule import photon_budget
from cavitycool.multimode import confocal_report
from cavitycool.rates import rate_report
from cavitycool.reporter import ResultsReporter
from cavitycool.steadystate import saturation
from cavitycool.units import (
    ModeKind,
    hz,
    linewidth_temperature,
    recoil_energy_temperature,
    single_cooperativity,
)


logger = logging.getLogger(__name__)

CAVITY_RATE_KEYS = ("kappa", "g0")
RATE_DETUNING_KEYS = ("optimal_delta_pc", "capture_range")


def build_report(config: CavityCoolConfig) -> Dict[str, Dict[str, Any]]:
    """Every derived parameter of the configured transition, cavity and drive."""
    transition, derived = resolve_cavity(config)
    drive = resolve_drive(config)

    sections: Dict[str, Dict[str, Any]] = {
        "transition": {
            "name": transition.name,
            "lambda_ae_m": transition.lambda_ae,
            "gamma_hz": hz(transition.gamma),
            "upsilon": transition.upsilon,
            "omega_rec_hz": hz(transition.omega_rec),
            "repumper_count": transition.repumper_count,
        },
        "cavity": with_hz_keys(derived.to_dict(), CAVITY_RATE_KEYS),
    }
    sections["cavity"]["g_eff_hz"] = hz(derived.g_eff)
    sections["cavity"]["t_kappa_k"] = linewidth_temperature(derived.kappa)
    sections["cavity"]["t_recoil_energy_k"] = recoil_energy_temperature(transition.omega_rec)

    if config.cavity.mode_kind == ModeKind.CONFOCAL_MULTIMODE:
        confocal = confocal_report(
            transition, config.cavity.finesse, config.cavity.radius_m, config.cavity.degradation
        )
        sections["confocal"] = with_hz_keys(confocal.to_dict(), CAVITY_RATE_KEYS)

    rates = rate_report(drive, transition)
    sections["rates"] = {
        "s": saturation(drive),
        "gamma_c_per_s": rates.gamma_c,
        "gamma_a_per_s": rates.gamma_a,
        "ratio_C": rates.ratio_C,
        "t_f_k": rates.t_f,
        "t_rec_k": rates.t_rec,
        **with_hz_keys(
            {key: getattr(rates, key) for key in RATE_DETUNING_KEYS}, RATE_DETUNING_KEYS
        ),
    }
    sections["rate_metadata"] = dict(rates.metadata)

    cooperativity = single_cooperativity(drive.g, drive.kappa, drive.gamma_perp)
    budget = photon_budget(transition.upsilon, cooperativity)
    sections["photon_budget"] = budget.to_dict()
    return sections


def load_cavity_to_ctx(
    ctx: click.Context, param: click.Parameter, value: Optional[pathlib.Path]
) -> Optional[pathlib.Path]:
    if value is None:
        return None
    return load_config_to_ctx(ctx, param, value)


@click.command(
    name="report",
    help="Report derived cavity parameters, rates and the photon budget.",
)
@click.pass_context
@common_options
@output_options
@click.option(
    "--cavity",
    "cavity_path",
    type=click.Path(path_type=pathlib.Path, dir_okay=False),
    help="Config file whose cavity and drive sections are used (alias of --config).",
    is_eager=True,
    callback=load_cavity_to_ctx,
)
@click.option(
    "--transition",
    type=str,
    help="Transition line, e.g. P1(1), Q1(1), Q21(1), v1-0, v2-0.",
    required=False,
)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text.")
@handle_exceptions
def report_cmd(
    ctx: click.Context,
    output: Optional[pathlib.Path],
    transition: Optional[str],
    as_json: bool,
    **kwargs: Any,
) -> None:
    config = get_config(ctx)
    if transition:
        config = config.model_copy(
            update={"transition": config.transition.model_copy(update={"name": transition})}
        )
    sections = build_report(config)
    reporter = ResultsReporter(output)
    if as_json:
        reporter.report_json(sections)
    else:
        reporter.report_text(sections)
