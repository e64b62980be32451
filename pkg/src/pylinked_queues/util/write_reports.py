"""
The pylinked_queues framework


Copyright (C) 2021,
The pylinked_queues developers

Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
documentation files (the "Software"), to deal in the Software without restriction, including without limitation the
rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software, and to permit
persons to whom the Software is furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all copies or substantial portions of the
Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE
WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR
COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
"""


import numpy as np
import csv
import json

from pylinked_queues.constants import REPORT_FIELDS


__all__ = [
    'report_to_records',
    'report_to_json',
    'report_to_csv',
]


def _native(value):
    if isinstance(value, np.generic):
        return value.item()
    return value


def report_to_records(report):
    """
    Create a list of dictionaries, one per run, with the report fields in their fixed order.

    Parameters
    ----------
    report : MetricsReport or list of dict
        Report or runs to convert.
    """
    return [{name: _native(run[name]) for name in REPORT_FIELDS} for run in report]


def report_to_json(report, file_name):
    """
    Write a benchmark report to a json file.

    The file contains one top-level array with an object per run.

    Parameters
    ----------
    report : MetricsReport or list of dict
        Report to save.
    file_name : str or file-like object
        Specify the file name or an open file where the json should be saved
        in. If file_name is a string and it does not have the `.json`
        extension it will be appended.
    """
    records = report_to_records(report)
    if isinstance(file_name, str):
        if not file_name.endswith(".json"):
            file_name = file_name + ".json"
        with open(file_name, 'w') as outfile:
            json.dump(records, outfile)
    else:
        json.dump(records, file_name)
    return


def report_to_csv(report, file_name, delimiter=","):
    """
    Write a benchmark report to a CSV file.

    The first row holds the field names, every following row one run.

    Parameters
    ----------
    report : MetricsReport or list of dict
        Report to save.
    file_name : str or file-like object
        Specify the file name or an open file where the csv should be saved
        in. If file_name is a string and it does not have the `.csv`
        extension it will be appended.
    delimiter : str
        CSV file delimiter character.
    """
    records = report_to_records(report)
    if isinstance(file_name, str):
        if not file_name.endswith(".csv"):
            file_name = file_name + ".csv"
        with open(file_name, 'w', newline='') as file:
            _write_rows(file, records, delimiter)
    else:
        _write_rows(file_name, records, delimiter)
    return


def _write_rows(file, records, delimiter):
    writer = csv.writer(file, delimiter=delimiter, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for record in records:
        writer.writerow([record[name] for name in REPORT_FIELDS])
    return
