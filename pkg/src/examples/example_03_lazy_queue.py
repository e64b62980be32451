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

from pylinked_queues.classes import *


# This example demonstrates the lazy circular queue, which never frees the nodes of dequeued elements.


def main(do_plot=False):
    print("\n\n------ Example 03: Lazy circular queue ------\n\n")

    store = NodeStore(mode="checked")
    queue = LazyCircularQueue(store)

    # Enqueue three elements and dequeue one of them:
    for item in range(3):
        queue.enqueue(item)
    print("Dequeued element: {}".format(queue.dequeue()))

    # The queue holds two elements, but its capacity is still three:
    print("Elements: {}".format(queue.to_list()))
    print("Capacity: {}".format(queue.capacity()))
    print("Live nodes: {}".format(store.live_count))

    # After a warm-up to a certain capacity, the queue does not allocate any more nodes:
    queue.reserve(64)
    store.reset_metrics()
    allocations = []
    for i in range(1000):
        queue.enqueue(i)
        queue.dequeue()
        allocations.append(store.metrics.allocations)
    print("\nAllocations in the steady state: {}".format(store.metrics.allocations))
    print("Capacity: {}".format(queue.capacity()))

    plt.plot(allocations)
    plt.xlabel('Enqueue/dequeue pairs')
    plt.ylabel('Allocations')
    plt.title('Allocations of the lazy queue in its steady state')
    if do_plot:
        plt.show()
    plt.close()

    queue.destroy()
    print("\nLive nodes after destroy: {}".format(store.live_count))
    return


# Conclusion:
# Once the lazy queue has reached enough capacity, a dequeue is a single handle advance and an enqueue reuses nodes.


if __name__ == '__main__':
    # Run example:
    main(do_plot=True)
