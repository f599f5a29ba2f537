# autosieve - large sieve and zero density toolkit
# Copyright (C) 2024 autosieve contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""CLI endpoint."""

import argparse
import asyncio
import json
import sys
import typing as T

from autosieve.api import Api
from autosieve.api.cmd import (
    EXIT_ERROR,
    EXIT_OK,
    BadInvocation,
    CommandNotFound,
)
from autosieve.cache import wipe_cache
from autosieve.cfg import ConfigError


def make_parser() -> argparse.ArgumentParser:
    """Build the parser of the global flags.

    Global flags may appear anywhere on the command line; everything else
    is handed to the selected command.

    :return: parser
    """
    parser = argparse.ArgumentParser(
        prog="autosieve",
        allow_abbrev=False,
        add_help=False,
        description="Large sieve and zero density toolkit.",
    )
    parser.add_argument("--threads", type=int, help="worker pool size")
    parser.add_argument(
        "--tolerance",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override one configured tolerance",
    )
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument("--out", help="report path, stdout by default")
    parser.add_argument(
        "--no-config", action="store_true", help="ignore user options"
    )
    parser.add_argument(
        "--no-cache", action="store_true", help="do not use cached scans"
    )
    parser.add_argument(
        "--wipe-cache", action="store_true", help="delete cached scans"
    )
    return parser


def parse_args(
    argv: T.Optional[T.List[str]] = None,
) -> T.Tuple[argparse.Namespace, T.List[str]]:
    """Parse user arguments from CLI.

    :param argv: arguments, sys.argv when omitted
    :return: parsed global flags and the remaining command words
    """
    return make_parser().parse_known_args(argv)


def resolve_invocation(api: Api, words: T.List[str]) -> T.List[str]:
    """Turn "group sub args..." into "group-sub args...".

    :param api: core API with commands loaded
    :param words: command words
    :return: invocation with the command name first
    """
    if not words:
        return ["help"]
    if len(words) >= 2 and api.cmd.get(f"{words[0]}-{words[1]}"):
        return [f"{words[0]}-{words[1]}", *words[2:]]
    return words


async def run(api: Api, words: T.List[str]) -> int:
    """Run one command.

    :param api: core API
    :param words: command words
    :return: exit status
    """
    api.cmd.reload_commands()
    invocation = resolve_invocation(api, words)
    try:
        cmd = api.cmd.parse_invocation(invocation)
    except (BadInvocation, CommandNotFound) as ex:
        api.log.structured_error("usage", str(ex), argv=invocation)
        return EXIT_ERROR
    return await api.cmd.run_async(cmd)


def main(argv: T.Optional[T.List[str]] = None) -> int:
    """CLI endpoint.

    :param argv: arguments, sys.argv when omitted
    :return: exit status
    """
    args, words = parse_args(argv)

    if args.wipe_cache:
        wipe_cache()
        if not words:
            return EXIT_OK

    try:
        api = Api(args)
    except ConfigError as ex:
        record = {"error": "config", "message": str(ex)}
        print(json.dumps(record, sort_keys=True), file=sys.stderr)
        return EXIT_ERROR

    try:
        return asyncio.run(run(api, words))
    finally:
        api.cmd.unload()
        api.shutdown()


if __name__ == "__main__":
    sys.exit(main())
