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


import sys
import matplotlib

from pylinked_queues.bench.bench import run_bench, emit_report
from pylinked_queues.bench.config import parse_args
from pylinked_queues.exceptions import BenchConfigError, InvariantError, TraceError


__all__ = [
    'main',
]


def _save_plot(report, file_name):
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from pylinked_queues.util.plot_reports import plot_report

    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    plot_report(report, field="ns_per_op", ax=axes[0])
    plot_report(report, field="comparisons", ax=axes[1])
    fig.tight_layout()
    fig.savefig(file_name)
    plt.close(fig)
    return


def main(argv=None):
    """
    Entry point of the `qbench` command.

    The report is written to standard out, diagnostics to standard error.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name.

    Returns
    -------
    int :
        Exit code: 0 on success, 2 on a usage or configuration error and 1
        if a structure violated an invariant.
    """
    try:
        config = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        report = run_bench(config, debug=config.debug)
    except (BenchConfigError, TraceError, OSError) as e:
        print("qbench: error: {}".format(e), file=sys.stderr)
        return 2
    except InvariantError as e:
        print("qbench: invariant violated: {}".format(e), file=sys.stderr)
        return 1

    sys.stdout.write(emit_report(report, config.fmt))
    if config.plot is not None:
        _save_plot(report, config.plot)
        if config.debug:
            print("Plot saved to {}.".format(config.plot), file=sys.stderr)
    return 0


if __name__ == '__main__':
    sys.exit(main())
