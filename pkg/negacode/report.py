"""
report.py
=========

Output records for the command line front end. A :class:`CodeReport` holds the
command echo, its inputs and a list of flat records; it renders as sorted-key
JSON, as an aligned or tab-separated astropy table, or into an HDF5 file.
"""

import json
from dataclasses import dataclass, field

import numpy as np
from astropy import log
from astropy.table import Table

#: --format name -> astropy ascii writer
TABLE_FORMATS = {
    "fixed_width": "ascii.fixed_width_two_line",
    "tab": "ascii.tab",
}

#: Keys every code record carries, None when a search was skipped
CODE_ORACLE_KEYS = ("d", "mds", "hull_dim", "lcd")


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _column(values):
    """Typed column when every value is an int or every value is a bool, text otherwise."""
    if values and all(isinstance(v, bool) for v in values):
        return np.array(values, dtype=bool)
    if values and all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        return np.array(values, dtype=np.int64)
    return np.array([_cell(v) for v in values], dtype=str)


def code_record(code, params=None, **extra):
    """Flat record for one code: [n, k], generator, flags and oracle results."""
    record = code.to_dict()
    record["polynomial"] = str(code.generator)
    record.update({key: None for key in CODE_ORACLE_KEYS if key not in record})
    if params is not None:
        record.update(params.to_dict())
    record.update(extra)
    return record


@dataclass
class CodeReport(object):
    """Result of one command.

    Parameters
    ----------
    command: str
        Subcommand name.
    inputs: dict
        Parsed parameters, echoed back.
    records: list
        One flat dict per output row.
    columns: list
        Column order for tables; defaults to the record keys in first-seen order.
    """

    command: str
    inputs: dict
    records: list = field(default_factory=list)
    columns: list = None

    def add(self, record):
        self.records.append(record)

    @property
    def names(self):
        if self.columns:
            return list(self.columns)
        names = []
        for record in self.records:
            names.extend(key for key in record if key not in names)
        return names

    def to_dict(self):
        return {"command": self.command, "inputs": self.inputs, "records": self.records}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str)

    def to_table(self):
        """astropy Table with one row per record."""
        names = self.names
        if not self.records:
            return Table(names=names, dtype=[str] * len(names))
        columns = [_column([record.get(name) for record in self.records]) for name in names]
        return Table(columns, names=names)

    def write_table(self, stream, fmt="fixed_width"):
        if fmt not in TABLE_FORMATS:
            raise ValueError(f'Invalid table format specification "{fmt}"')
        self.to_table().write(stream, format=TABLE_FORMATS[fmt])

    def write_hdf5(self, filename, path=None):
        """Store the table under ``path`` (default: the command name) in an HDF5 file."""
        path = self.command if path is None else path
        table = self.to_table()
        table.meta["inputs"] = json.dumps(self.inputs, sort_keys=True, default=str)
        table.write(filename, path=path, format="hdf5", append=True, overwrite=True)
        log.info(f"Wrote {len(table)} rows to {filename}:{path}")
