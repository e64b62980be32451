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
import matplotlib.pyplot as plt


__all__ = [
    'plot_report',
]


def plot_report(report, field="ns_per_op", ax=None, title=None):
    """
    Plot one report field per variant as a bar chart.

    Repetitions of the same variant are averaged; the error bars show their
    standard deviation.

    Parameters
    ----------
    report : MetricsReport
        Report that should be plotted.
    field : str, optional
        Report field to plot, e.g. 'ns_per_op' or 'comparisons'.
    ax : matplotlib.Axes, optional
        Axes the report should be plotted into. Shows the plot in a new figure if not specified.
    title : str, optional
        Title of the plot. Uses the workload name if not specified.

    Returns
    -------
    matplotlib.Axes
    """
    if len(report) == 0:
        raise ValueError("Cannot plot an empty report.")
    if ax is None:
        fig, ax = plt.subplots()
    else:
        fig = None

    variants = report.column("variant")
    values = report.column(field).astype(np.float64)
    names = list(dict.fromkeys(variants.tolist()))
    means = np.array([values[variants == name].mean() for name in names])
    stds = np.array([values[variants == name].std() for name in names])
    colors = plt.get_cmap("tab10").colors
    ax.bar(np.arange(len(names)), means, yerr=stds, color=[colors[i % len(colors)] for i in range(len(names))],
           capsize=4)
    ax.set_xticks(np.arange(len(names)))
    ax.set_xticklabels(names)
    ax.set_ylabel(field)
    if title is None:
        ax.set_title(str(report.column("workload")[0]))
    else:
        ax.set_title(title)
    if fig is not None:
        plt.show()
    return ax
