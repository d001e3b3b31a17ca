# SPDX-FileCopyrightText: Copyright (c) 2023, NVIDIA CORPORATION & AFFILIATES. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import logging

import click
import pandas as pd
import psutil

from aperylab.holonomic import VARIETIES
from aperylab.modular import RATIONAL_VARIETIES
from aperylab.utils import AperyLabError
from aperylab.utils import configure_logging

from ._commands import GRASSMANN_DIGITS
from ._commands import GRASSMANN_TERMS
from ._commands import cmd_constants
from ._commands import cmd_export
from ._commands import cmd_grassmann
from ._commands import cmd_limit
from ._commands import cmd_modular
from ._commands import cmd_monodromy
from ._config import CACHE_DIR_ENV
from ._config import RunConfig
from ._selftest import cmd_selftest

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def render(report: dict, as_json: bool) -> str:
    """JSON (sorted keys, stable across runs) or a plain-text table of the report's rows."""
    if as_json:
        return json.dumps(report, indent=2, sort_keys=True)
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            frame = pd.json_normalize(value)
            lines.append(frame.to_string(index=False))
        else:
            lines.append(f"{key}: {json.dumps(value) if isinstance(value, dict) else value}")
    return "\n".join(lines)


def _emit(ctx: click.Context, report: dict):
    click.echo(render(report, ctx.obj["json"]))
    if report.get("status") != "pass":
        ctx.exit(1)


def _config(ctx: click.Context, **overrides) -> RunConfig:
    settings = dict(cache_dir=ctx.obj["cache_dir"],
                    output="json" if ctx.obj["json"] else "text",
                    seed=ctx.obj["seed"],
                    num_workers=ctx.obj["num_workers"])
    settings.update(overrides)
    return RunConfig(**settings)


class AperyLabGroup(click.Group):
    """Maps library errors to exit codes: 1 verification mismatch, 2 bad input, 3 precision or convergence."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except AperyLabError as err:
            logger.error("%s: %s", type(err).__name__, err.message)
            click.echo(f"error: {err.message}", err=True)
            ctx.exit(err.exit_code)


def digits_option(default):
    return click.option("--digits",
                        default=default,
                        type=click.IntRange(min=10),
                        show_default=True,
                        help="Target decimal digits")


def terms_option(default, help_text="Number of recurrence terms"):
    return click.option("--terms", default=default, type=click.IntRange(min=10), show_default=True, help=help_text)


@click.group(cls=AperyLabGroup)
@click.option("--log_level",
              default="WARNING",
              type=click.Choice(LOG_LEVELS, case_sensitive=False),
              help="Logging level of the aperylab loggers")
@click.option("--json", "as_json", is_flag=True, default=False, help="Print reports as JSON")
@click.option("--cache-dir",
              envvar=CACHE_DIR_ENV,
              type=click.Path(file_okay=False),
              default=None,
              help=f"Sequence cache directory (default ${CACHE_DIR_ENV} or ~/.cache/aperylab)")
@click.option("--seed", default=0, type=click.IntRange(min=0), help="Seed of the randomized checks")
@click.option(
    "--num_workers",
    default=psutil.cpu_count(logical=False) or 1,
    type=click.IntRange(min=1),
    help="Number of worker processes for independent computations",
)
@click.pass_context
def cli(ctx, log_level, as_json, cache_dir, seed, num_workers):
    """Apery limits of quantum recurrences and their L-value oracles."""
    configure_logging(log_level=getattr(logging, log_level.upper()))
    ctx.ensure_object(dict)
    ctx.obj.update(json=as_json, cache_dir=cache_dir, seed=seed, num_workers=num_workers)


@cli.command()
@click.option("--variety",
              "varieties",
              multiple=True,
              default=["all"],
              type=click.Choice(list(VARIETIES) + ["all"]),
              help="Mukai threefold, repeatable; 'all' for the five of them")
@digits_option(50)
@terms_option(400)
@click.pass_context
def constants(ctx, varieties, digits, terms):
    """Apery limits of V10..V18 against the zeta / L(chi_3, s) constants."""
    _emit(ctx, cmd_constants(varieties, _config(ctx, digits=digits, terms=terms)))


@cli.command()
@click.argument("recurrence_file", type=click.Path(exists=True, dir_okay=False))
@digits_option(50)
@terms_option(400)
@click.pass_context
def limit(ctx, recurrence_file, digits, terms):
    """Apery limit of the recurrence in RECURRENCE_FILE (Recurrence JSON with a normalization block)."""
    _emit(ctx, cmd_limit(recurrence_file, _config(ctx, digits=digits, terms=terms)))


@cli.command()
@click.option("--n", "N", required=True, type=click.IntRange(min=5), help="N of the Grassmannian G(2, N)")
@digits_option(GRASSMANN_DIGITS)
@terms_option(GRASSMANN_TERMS, "Number of coefficients a_{Nn}")
@click.option("--pac", "with_pac", is_flag=True, default=False, help="Also take the perturbed-constant limit")
@click.pass_context
def grassmann(ctx, N, digits, terms, with_pac):
    """Apery limit of G(2, N) against pi^2 / (N^2 (N + 1))."""
    _emit(ctx, cmd_grassmann(N, _config(ctx, digits=digits, terms=terms), with_pac))


@cli.command()
@click.option("--variety", required=True, type=click.Choice(list(RATIONAL_VARIETIES)), help="Rational variety")
@click.option("--order", default=20, type=click.IntRange(min=1), show_default=True, help="Highest power of q")
@digits_option(50)
@click.pass_context
def modular(ctx, variety, order, digits):
    """Modular-form identities and L(F, 3) for V12, V16, V18."""
    _emit(ctx, cmd_modular(variety, order, _config(ctx, digits=digits)))


@cli.command()
@click.option("--n", "N", required=True, type=click.IntRange(min=5), help="Rank N")
@click.option("--e", default=None, help="Perturbation e as a fraction, random when omitted")
@click.option("--u", default=None, help="Perturbation u as a fraction, random when omitted")
@digits_option(50)
@click.pass_context
def monodromy(ctx, N, e, u, digits):
    """Reflection monodromy checks for the exponents 1/2 -+ e, 1/2 -+ u, 1/2."""
    _emit(ctx, cmd_monodromy(N, e, u, _config(ctx, digits=digits)))


@cli.command()
@click.option("--quick", is_flag=True, default=False, help="Skip the deresonation suites")
@click.pass_context
def selftest(ctx, quick):
    """Run the acceptance checks and print a pass/fail matrix."""
    _emit(ctx, cmd_selftest(_config(ctx), quick))


@cli.command()
@click.option("--variety", required=True, type=click.Choice(list(VARIETIES)), help="Mukai threefold")
@click.option("--output", "output_file", type=click.Path(dir_okay=False), default=None, help="File to write")
def export(variety, output_file):
    """Write the quantum recurrence of a variety as Recurrence JSON."""
    text = cmd_export(variety)
    if output_file is None:
        click.echo(text)
    else:
        with open(output_file, "w") as fh:
            fh.write(text + "\n")
