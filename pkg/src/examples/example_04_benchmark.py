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


import matplotlib.pyplot as plt

from pylinked_queues.bench import *
from pylinked_queues.util import plot_report


# This example runs the benchmark harness from Python instead of the qbench command line.


def main(do_plot=False):
    print("\n\n------ Example 04: Benchmark ------\n\n")

    # The configuration is parsed exactly like the command line of qbench:
    config = parse_args(["--variant", "all", "--workload", "steady:capacity=64,n=2000", "--warmup", "128",
                         "--reps", "2", "--format", "csv"])
    print(config)

    report = run_bench(config)
    print(emit_report(report, config.fmt))

    # The lazy queue does not allocate in its steady state:
    lazy = report.select("lazy")
    print("Allocations of the lazy queue: {}".format(lazy.column("allocations").tolist()))

    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    plot_report(report, field="comparisons", ax=axes[0])
    plot_report(report, field="allocations", ax=axes[1])
    fig.tight_layout()
    if do_plot:
        plt.show()
    plt.close(fig)
    return


if __name__ == '__main__':
    # Run example:
    main(do_plot=True)
