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


import argparse

from pylinked_queues.classes import all_variants, queue_variants
from pylinked_queues.constants import CHECKED_MODE, FAST_MODE, DEFAULT_WARMUP, DEFAULT_REPS, REPORT_FORMATS, \
    DEFAULT_FORMAT
from pylinked_queues.difftest.generators import workload_arguments
from pylinked_queues.exceptions import BenchConfigError


__all__ = [
    'WorkloadSpec',
    'parse_workload',
    'BenchConfig',
    'build_parser',
    'parse_args',
]


class WorkloadSpec(object):
    """
    Generator name together with its textual parameters.

    Parameters
    ----------
    name : str
        Name of the generator, e.g. 'burst'.
    params : dict
        Parameter names mapped to their textual values.
    """

    def __init__(self, name, params=None):
        self.name = name
        self.params = dict(params) if params is not None else {}

    def __str__(self):
        if not self.params:
            return self.name
        return self.name + ":" + ",".join("{}={}".format(k, v) for k, v in self.params.items())

    def __repr__(self):
        return "<WorkloadSpec {}>".format(str(self))

    def __eq__(self, other):
        if not isinstance(other, WorkloadSpec):
            return NotImplemented
        return self.name == other.name and self.params == other.params

    @property
    def seed(self):
        seed = self.params.get('seed')
        return None if seed is None else int(seed)

    def build(self):
        """
        Generate the workload trace.

        Returns
        -------
        OpTrace
        """
        func, kwargs = workload_arguments(self.name, self.params)
        return func(**kwargs)


def parse_workload(text):
    """
    Parse a workload description of the form `name:key=value,key=value`.

    Parameters
    ----------
    text : str

    Returns
    -------
    WorkloadSpec

    Raises
    ------
    ValueError
        If the text is malformed or names an unknown generator or parameter.
    """
    name, _, rest = text.partition(":")
    name = name.strip()
    params = {}
    if rest.strip():
        for item in rest.split(","):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or not key or not value.strip():
                raise ValueError("Malformed workload parameter {!r}. Expected: key=value".format(item))
            if key in params:
                raise ValueError("Workload parameter {} given twice.".format(key))
            params[key] = value.strip()
    workload_arguments(name, params)
    return WorkloadSpec(name, params)


class BenchConfig(object):
    """
    Configuration of a benchmark run.

    Parameters
    ----------
    variants : list of str
        Variant ids to benchmark.
    workload : WorkloadSpec, optional
        Generated workload. Either `workload` or `trace_file` must be given.
    ops : int, optional
        Replay only the first `ops` operations of the workload. Defaults to all.
    warmup : int, optional
        Number of leading operations replayed before the counters are reset.
    reps : int, optional
        Number of repetitions per variant.
    fmt : str, optional
        Report format, 'json' or 'csv'.
    mode : str, optional
        Node store mode, 'checked' or 'fast'.
    parallel : bool, optional
        Run the (variant, repetition) pairs in worker processes.
    trace_file : str, optional
        Trace file replayed instead of a generated workload.
    debug : bool, optional
        Print progress information to standard error.
    plot : str, optional
        File the report plot is saved to.

    Raises
    ------
    BenchConfigError
        If the numbers are inconsistent or no workload is given.
    """

    def __init__(self, variants, workload=None, ops=None, warmup=DEFAULT_WARMUP, reps=DEFAULT_REPS,
                 fmt=DEFAULT_FORMAT, mode=FAST_MODE, parallel=False, trace_file=None, debug=False, plot=None):
        if not variants:
            raise BenchConfigError("At least one variant has to be benchmarked.")
        for variant in variants:
            if variant not in all_variants:
                raise BenchConfigError(
                    "Unknown variant {}. Must be one of {}.".format(variant, ", ".join(all_variants))
                )
        if (workload is None) == (trace_file is None):
            raise BenchConfigError("Exactly one of a workload and a trace file has to be given.")
        if warmup < 0:
            raise BenchConfigError("Warm-up must not be negative. Got: {}".format(warmup))
        if ops is not None and ops < warmup:
            raise BenchConfigError(
                "Op count must not be smaller than the warm-up. Expected: >= {}, Got: {}".format(warmup, ops)
            )
        if reps < 1:
            raise BenchConfigError("Repetitions must be positive. Got: {}".format(reps))
        if fmt not in REPORT_FORMATS:
            raise BenchConfigError("Format %s is not implemented by class BenchConfig." % str(fmt))
        self.variants = list(variants)
        self.workload = workload
        self.ops = ops
        self.warmup = warmup
        self.reps = reps
        self.fmt = fmt
        self.mode = mode
        self.parallel = parallel
        self.trace_file = trace_file
        self.debug = debug
        self.plot = plot

    @property
    def workload_name(self):
        """Workload label used in the report."""
        if self.trace_file is not None:
            return "trace:" + self.trace_file
        return str(self.workload)

    def __repr__(self):
        return "<BenchConfig {} on {}>".format(",".join(self.variants), self.workload_name)


def _count(text):
    try:
        value = int(float(text))
    except ValueError:
        raise argparse.ArgumentTypeError("invalid count: {!r}".format(text))
    if value < 0:
        raise argparse.ArgumentTypeError("count must not be negative: {!r}".format(text))
    return value


def _variants(text):
    if text == "all":
        return list(queue_variants)
    variants = [v.strip() for v in text.split(",") if v.strip()]
    unknown = [v for v in variants if v not in all_variants]
    if unknown or not variants:
        raise argparse.ArgumentTypeError(
            "invalid variant {!r} (choose from all, {})".format(text, ", ".join(all_variants))
        )
    return variants


def _workload(text):
    try:
        return parse_workload(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    """
    Create the argument parser of the `qbench` command.

    Returns
    -------
    argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog="qbench",
        description="Replay queue workloads on the linked queue variants and report timing and step counters.",
    )
    parser.add_argument("--variant", type=_variants, required=True,
                        help="comma-separated variant ids or 'all' (header, blank, circular, lazy)")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--workload", type=_workload,
                        help="generator and parameters, e.g. burst:k=64,rounds=1000")
    source.add_argument("--trace-file", dest="trace_file",
                        help="replay a trace file instead of a generated workload")
    parser.add_argument("--ops", type=_count, default=None,
                        help="replay only the first N operations")
    parser.add_argument("--warmup", type=_count, default=DEFAULT_WARMUP,
                        help="operations replayed before the counters are reset")
    parser.add_argument("--reps", type=_count, default=DEFAULT_REPS,
                        help="repetitions per variant")
    parser.add_argument("--format", dest="fmt", choices=REPORT_FORMATS, default=DEFAULT_FORMAT,
                        help="report format")
    parser.add_argument("--checked", action="store_true",
                        help="validate every node access")
    parser.add_argument("--parallel", action="store_true",
                        help="run the repetitions in worker processes")
    parser.add_argument("--plot", default=None, metavar="PATH",
                        help="save a plot of the report")
    parser.add_argument("--debug", action="store_true",
                        help="print progress to standard error")
    return parser


def parse_args(argv=None):
    """
    Parse the command line of `qbench`.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name. Defaults to `sys.argv[1:]`.

    Returns
    -------
    BenchConfig

    Raises
    ------
    SystemExit
        With exit code 2 on a usage error.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = BenchConfig(
            variants=args.variant,
            workload=args.workload,
            ops=args.ops,
            warmup=args.warmup,
            reps=args.reps,
            fmt=args.fmt,
            mode=CHECKED_MODE if args.checked else FAST_MODE,
            parallel=args.parallel,
            trace_file=args.trace_file,
            debug=args.debug,
            plot=args.plot,
        )
    except BenchConfigError as e:
        parser.error(str(e))
    return config
