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


from pylinked_queues.classes.node_store import walk
from pylinked_queues.constants import METRIC_FIELDS


__all__ = [
    'print_structure',
    'print_metrics',
]


def print_structure(structure, lvl=1):
    """
    Hierarchically print a linked structure.

    Parameters
    ----------
    structure : LinkedStructure
    lvl : int, optional
        - `0` : Only print the structure.
        - `1` : Print the structure and its elements.
        - `2` : Print the structure, its elements with their node handles and the store metrics.
    """
    print(repr(structure))
    if lvl < 1:
        return
    store = structure.store
    start, stop = structure._element_bounds()
    for handle in walk(store, start, stop, store.live_count):
        if lvl < 2:
            print("\t{!r}".format(store.read_data(handle)))
        else:
            print("\t{!r} -> {!r}: {!r}".format(handle, store.read_next(handle), store.read_data(handle)))
    if lvl >= 2:
        print_metrics(store, indent=1)
    return


def print_metrics(store, indent=0):
    """
    Print the counters and live nodes of a node store.

    Parameters
    ----------
    store : NodeStore
    indent : int, optional
        Number of leading tabs.
    """
    prefix = "\t" * indent
    print("{}{!r}".format(prefix, store))
    for name in METRIC_FIELDS:
        print("{}\t{}: {}".format(prefix, name, getattr(store.metrics, name)))
    print("{}\tpeak_live: {}".format(prefix, store.peak_live))
    return
