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


from pylinked_queues.classes import *


# This example shows how a circular list with a single blank node serves as queue and as stack at the same time.


def main(do_plot=False):
    print("\n\n------ Example 02: Circular output-restricted deque ------\n\n")

    store = NodeStore(mode="checked")
    deque = CircularDeque(store)

    # An empty deque is a single blank node linked to itself:
    print("Empty deque is a self-loop: {}".format(store.read_next(deque.right) == deque.right))

    # Used as a queue, elements are inserted at the rear:
    deque.enqueue("a")
    deque.enqueue("b")

    # Used as a stack, elements are pushed at the front:
    deque.push("c")
    print("\nElements from front to rear: {}".format(deque.to_list()))

    # Removal is only possible at the front. It serves as queue dequeue and as stack pop:
    before = store.snapshot()
    print("\nPopped element: {}".format(deque.pop()))
    print("Counter deltas of one pop:")
    print(store.snapshot() - before)

    while not deque.is_empty():
        print("Dequeued element: {}".format(deque.dequeue()))

    # For comparison, the traditional stack built on a bottom sentinel:
    stack = LinkedStack(store)
    for item in ["x", "y", "z"]:
        stack.push(item)
    print("\nStack elements from top to bottom: {}".format(stack.to_list()))

    deque.destroy()
    stack.destroy()
    print("\nLive nodes after destroy: {}".format(store.live_count))
    return


# Conclusion:
# The blank node acts as footer when the circular list is used as a queue and as header when it is used as a stack.


if __name__ == '__main__':
    # Run example:
    main(do_plot=True)
