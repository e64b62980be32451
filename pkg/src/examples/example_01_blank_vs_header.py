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

from pylinked_queues.classes import *
from pylinked_queues.difftest import gen_burst, run_trace


# This example compares the traditional header node queue with the blank node queue.


def main(do_plot=False):
    print("\n\n------ Example 01: Blank node queue vs. header node queue ------\n\n")

    # A header node queue has to check whether a dequeue removes its last element, because its rear must then be reset
    # to the header node. The blank node queue never has to perform this check.
    trace = gen_burst(k=64, rounds=20)
    dequeues = trace.count("P")
    print("Workload: {} operations, {} of them dequeues.".format(len(trace), dequeues))

    comparisons = {}
    for variant in ["header", "blank"]:
        store = NodeStore(mode="checked")
        outcome = run_trace(variant, store, trace)
        comparisons[variant] = outcome.metrics.comparisons
        print("\nVariant {}:".format(variant))
        print(outcome.metrics)
        print("Live nodes after destroy: {}".format(outcome.final_live))

    # The header node queue compares once per dequeue:
    assert comparisons["header"] == dequeues
    assert comparisons["blank"] == 0

    # The comparisons accumulate linearly with the number of dequeues:
    rounds = np.arange(1, 11)
    header_comparisons = []
    for r in rounds:
        outcome = run_trace("header", NodeStore(), gen_burst(k=64, rounds=int(r)))
        header_comparisons.append(outcome.metrics.comparisons)

    plt.plot(rounds * 64, header_comparisons, label="header", marker="o")
    plt.plot(rounds * 64, np.zeros(len(rounds)), label="blank", marker="x")
    plt.xlabel('Number of dequeues')
    plt.ylabel('Node comparisons')
    plt.title('Comparisons of the queue variants')
    plt.legend()
    if do_plot:
        plt.show()
    plt.close()
    return


# Conclusion:
# Both variants need a single extra node. The blank node is placed behind the rear instead of before the front, which
# lets every dequeue proceed without any check for the last element.


if __name__ == '__main__':
    # Run example:
    main(do_plot=True)
