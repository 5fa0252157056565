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

import logging
import subprocess
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

_log = logging.getLogger(__name__)

DISTRIBUTION = "hetdist"


def _describe_checkout() -> str | None:
    try:
        described = subprocess.run(
            ["git", "describe", "--always", "--tags"],
            cwd=Path(__file__).parent,
            capture_output=True,
            check=True,
            text=True,
        )
    except (subprocess.CalledProcessError, OSError):
        return None
    return described.stdout.strip() or None


def get_version() -> str | None:
    """Installed distribution version, else `git describe` of a source checkout, else None."""
    try:
        return version(DISTRIBUTION)
    except PackageNotFoundError:
        _log.debug(f"{DISTRIBUTION} is not installed, asking git")
        return _describe_checkout()
