# Copyright 2024 The hetdist Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging.config
import sys
from pathlib import Path
from typing import Sequence

import click
from pydantic import ValidationError

from hetdist.cli import evaluate, probe
from hetdist.cli.context import Context
from hetdist.config import load_config
from hetdist.core.exceptions import HetdistException, InvalidParameter, UnknownMetric
from hetdist.version import get_version

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


def print_version(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return
    version = get_version() or "unknown"
    click.echo(version)
    ctx.exit()


@click.group
@click.option("-c", "--config-file", type=str, default=None)
@click.option("-v", "--verbose", is_flag=True, default=False)
@click.option("--version", is_flag=True, callback=print_version, expose_value=False, is_eager=True)
@click.pass_context
def cli(ctx, config_file, verbose):
    try:
        conf = load_config(config_file)
    except ValidationError as e:
        raise InvalidParameter(f"invalid configuration: {e}") from e
    if conf.logging:
        logging.config.dictConfig(conf.logging)
    logging.getLogger().setLevel(level=logging.DEBUG if verbose else logging.INFO)
    ctx.obj = Context(conf=conf)


@cli.command(name="config")
@click.option(
    "-w",
    "--write",
    "write_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the configuration to this file instead of printing it.",
)
@click.pass_obj
def show_config(ctx: Context, write_path: Path):
    """Print the effective configuration as YAML."""
    if write_path is None:
        click.echo(ctx.conf.as_yaml(), nl=False)
        return
    try:
        ctx.conf.write_as_yaml(write_path)
    except OSError as e:
        raise HetdistException(f"cannot write {write_path}: {e}") from e
    _log.info(f"Configuration written to {write_path}")


cli.add_command(evaluate.evaluate)
cli.add_command(evaluate.compare)
cli.add_command(evaluate.curve)
cli.add_command(evaluate.stats)
cli.add_command(probe.dist)
cli.add_command(probe.probmap)


def run(argv: Sequence[str] = None) -> int:
    """Run the command line and map failures to exit codes: 1 usage, 2 data."""
    try:
        code = cli.main(args=list(argv or []), prog_name="hetdist", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except (UnknownMetric, InvalidParameter) as e:
        _log.error(str(e))
        return EXIT_USAGE
    except HetdistException as e:
        _log.error(str(e))
        return EXIT_DATA
    return code if isinstance(code, int) else EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))
