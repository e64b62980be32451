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


import io
import sys
import time
import warnings
import concurrent.futures
import numpy as np

from pylinked_queues.classes import NodeStore, get_variant
from pylinked_queues.constants import VALUE_OPS, REPORT_FIELDS
from pylinked_queues.difftest.oracle import OracleDeque
from pylinked_queues.difftest.runner import check_well_formed, bind_operations
from pylinked_queues.difftest.trace import read_trace
from pylinked_queues.exceptions import BenchConfigError, EmptyStructureError, InvariantError, TraceError
from pylinked_queues.util.write_reports import report_to_json, report_to_csv


__all__ = [
    'MetricsReport',
    'load_workload',
    'run_bench',
    'emit_report',
]


class MetricsReport(object):
    """
    Timing and step counters of benchmark runs.

    Every run is a dictionary with the keys of `constants.REPORT_FIELDS`:
    variant, workload, rep, ops, ns_total, ns_per_op, the six counters of the
    store, peak_live and final_live.

    Parameters
    ----------
    runs : list of dict, optional
    """

    def __init__(self, runs=None):
        self.runs = []
        for run in runs or []:
            self.add(run)

    def add(self, run):
        """
        Append a run.

        Raises
        ------
        ValueError
            If the run lacks a report field.
        """
        missing = [name for name in REPORT_FIELDS if name not in run]
        if missing:
            raise ValueError("Run lacks the report fields {}.".format(", ".join(missing)))
        self.runs.append({name: run[name] for name in REPORT_FIELDS})
        return

    def __len__(self):
        return len(self.runs)

    def __iter__(self):
        return iter(self.runs)

    def __repr__(self):
        return "<MetricsReport with {} runs>".format(len(self.runs))

    def column(self, name):
        """
        Return one field of all runs.

        Parameters
        ----------
        name : str
            One of `constants.REPORT_FIELDS`.

        Returns
        -------
        numpy.ndarray
        """
        if name not in REPORT_FIELDS:
            raise ValueError("Unknown report field {}. Must be one of {}.".format(name, ", ".join(REPORT_FIELDS)))
        return np.array([run[name] for run in self.runs])

    def select(self, variant):
        """Return a report of the runs of one variant."""
        return MetricsReport([run for run in self.runs if run["variant"] == variant])


def load_workload(config):
    """
    Generate or read the workload of a configuration and cut it to the op count.

    Parameters
    ----------
    config : BenchConfig

    Returns
    -------
    OpTrace

    Raises
    ------
    BenchConfigError
        If the op count or the warm-up exceeds the workload length.
    """
    if config.trace_file is not None:
        trace = read_trace(config.trace_file)
    else:
        trace = config.workload.build()
    if config.ops is not None:
        if config.ops > len(trace):
            raise BenchConfigError(
                "Op count exceeds the workload length. Expected: <= {}, Got: {}".format(len(trace), config.ops)
            )
        trace = trace.head(config.ops)
    if config.warmup > len(trace):
        raise BenchConfigError(
            "Warm-up exceeds the workload length. Expected: <= {}, Got: {}".format(len(trace), config.warmup)
        )
    return trace


def _check_preconditions(trace):
    handlers = bind_operations(OracleDeque())
    for index, op in enumerate(trace.ops):
        try:
            if op.code in VALUE_OPS:
                handlers[op.code](op.value)
            else:
                handlers[op.code]()
        except EmptyStructureError:
            raise BenchConfigError("Operation {} ({!r}) of the workload hits an empty structure.".format(index, op))
    return


def _replay(handlers, ops):
    for op in ops:
        if op.code in VALUE_OPS:
            handlers[op.code](op.value)
        else:
            handlers[op.code]()
    return


def _run_single(variant, rep, warmup_ops, measured_ops, mode, workload):
    store = NodeStore(mode=mode)
    structure = get_variant(variant)(store)
    handlers = bind_operations(structure)
    _replay(handlers, warmup_ops)
    store.reset_metrics()

    start = time.perf_counter_ns()
    _replay(handlers, measured_ops)
    ns_total = time.perf_counter_ns() - start

    metrics = store.snapshot()
    store.check_balance()
    run = {
        "variant": variant,
        "workload": workload,
        "rep": rep,
        "ops": len(measured_ops),
        "ns_total": ns_total,
        "ns_per_op": ns_total / len(measured_ops) if measured_ops else 0.0,
        "peak_live": store.peak_live,
        "final_live": store.live_count,
    }
    run.update(metrics.as_dict())
    structure.destroy()
    if store.live_count != 0:
        raise InvariantError(
            "{} leaked nodes after destroy. Expected: 0, Got: {}".format(variant, store.live_count)
        )
    return run


def run_bench(config, debug=False):
    """
    Replay the workload of a configuration on every variant.

    For every (variant, repetition) pair a fresh store and structure are
    built. The warm-up operations are replayed and the counters reset before
    the measured operations are replayed and timed. Afterwards the structure
    is destroyed and checked for leaked nodes.

    Parameters
    ----------
    config : BenchConfig
    debug : bool, optional
        Print progress information to standard error.

    Returns
    -------
    MetricsReport :
        One run per (variant, repetition) pair, in the order of the variants.

    Raises
    ------
    BenchConfigError
        If the workload does not fit the variants. Raised before any run.
    InvariantError
        If a structure violates an invariant or leaks nodes.
    """
    trace = load_workload(config)
    for variant in config.variants:
        try:
            check_well_formed(get_variant(variant), trace)
        except TraceError as e:
            raise BenchConfigError(str(e))
    _check_preconditions(trace)

    warmup_ops = trace.ops[:config.warmup]
    measured_ops = trace.ops[config.warmup:]
    if not measured_ops:
        warnings.warn("No operations are measured. The warm-up covers the whole workload.", UserWarning)
    workload = config.workload_name
    jobs = [(variant, rep) for variant in config.variants for rep in range(config.reps)]
    if debug:
        print("Replaying {} ops ({} warm-up) of {} in {} runs.".format(
            len(trace), len(warmup_ops), workload, len(jobs)), file=sys.stderr)

    report = MetricsReport()
    if config.parallel and len(jobs) > 1:
        with concurrent.futures.ProcessPoolExecutor() as executor:
            futures = [executor.submit(_run_single, variant, rep, warmup_ops, measured_ops, config.mode, workload)
                       for variant, rep in jobs]
            for future in futures:
                report.add(future.result())
    else:
        for variant, rep in jobs:
            report.add(_run_single(variant, rep, warmup_ops, measured_ops, config.mode, workload))
            if debug:
                run = report.runs[-1]
                print("{} rep {}: {:.1f} ns/op, {} comparisons".format(
                    variant, rep, run["ns_per_op"], run["comparisons"]), file=sys.stderr)
    return report


def emit_report(report, fmt):
    """
    Render a report as text.

    Parameters
    ----------
    report : MetricsReport
    fmt : str
        - 'json' : One top-level array with an object per run.
        - 'csv' : A header row with the field names and one row per run.

    Returns
    -------
    str
    """
    out = io.StringIO()
    if fmt == "json":
        report_to_json(report, out)
        out.write("\n")
    elif fmt == "csv":
        report_to_csv(report, out)
    else:
        raise ValueError("Format %s is not implemented by function emit_report." % str(fmt))
    return out.getvalue()
