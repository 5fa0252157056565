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

import csv
from io import StringIO
from typing import List, Sequence


def format_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """
    Plain-text table: first column left aligned, the others right aligned, two spaces
    between columns.
    """
    columns = list(zip(header, *rows)) if rows else [(h,) for h in header]
    widths = [max(len(str(cell)) for cell in column) for column in columns]

    def line(cells: Sequence[str]) -> str:
        parts: List[str] = []
        for i, (cell, width) in enumerate(zip(cells, widths)):
            parts.append(str(cell).ljust(width) if i == 0 else str(cell).rjust(width))
        return "  ".join(parts).rstrip() + "\n"

    return line(header) + "".join(line(r) for r in rows)


def format_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    stream = StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return stream.getvalue()


def percent(value: float | None) -> str:
    return "-" if value is None else f"{100 * value:.2f}"
