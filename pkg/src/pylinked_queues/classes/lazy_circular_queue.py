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


from pylinked_queues.classes.linked_structure import LinkedStructure
from pylinked_queues.classes.node_store import walk
from pylinked_queues.constants import PUSH_BACK, POP_FRONT, FRONT, IS_EMPTY
from pylinked_queues.exceptions import InvariantError


class LazyCircularQueue(LinkedStructure):
    """
    Circularly linked queue which never frees dequeued nodes.

    The elements are the interval `[left, right)` on a cycle of
    `capacity + 1` nodes. Dequeuing only advances `left`. Enqueuing writes the
    element into `right` and either advances `right` onto a spare node or, if
    the queue has reached its capacity (`S(right) == left`), splices a fresh
    node between `right` and `left`.

    Parameters
    ----------
    store : NodeStore
        Store owning the nodes of the queue.

    Notes
    -----
    - `enqueue` with growth: data_writes 1, comparisons 1, allocations 1,
      link_writes 2, register_writes 1.
    - `enqueue` without growth: data_writes 1, comparisons 1, register_writes 1.
    - `dequeue`: register_writes 1.
    - The capacity never decreases. Data left in dequeued nodes stays in
      place until it is overwritten.
    """

    operations = {
        PUSH_BACK: "enqueue",
        POP_FRONT: "dequeue",
        FRONT: "front",
        IS_EMPTY: "is_empty",
    }

    def __init__(self, store):
        super().__init__(store)
        self._kind = "lazy"
        self._long_id = "LQ_" + self._id_string

        self._right = store.allocate()
        store.write_next(self._right, self._right)
        self._left = self._right
        store.note_register_write()
        store.note_register_write()
        self._capacity = 0

    @property
    def left(self):
        return self._left

    @property
    def right(self):
        return self._right

    def is_empty(self):
        return self._left == self._right

    def is_full(self):
        """Check whether the next enqueue has to grow the cycle. Not counted in the metrics."""
        return self.store.read_next(self._right) == self._left

    def capacity(self):
        """
        Number of elements the queue can hold without growing.

        Returns
        -------
        int

        Raises
        ------
        InvariantError
            In checked mode, if the tracked capacity differs from the length
            of the cycle.
        """
        if self.store.checked:
            walked = sum(1 for _ in walk(self.store, self.store.read_next(self._right), self._right,
                                         self._capacity))
            if walked != self._capacity:
                raise InvariantError(
                    "Capacity of {} is out of sync with its cycle. Expected: {}, Got: {}"
                    .format(self._long_id, self._capacity, walked)
                )
        return self._capacity

    def enqueue(self, item):
        """
        Append an element at the rear, growing the cycle if the queue is full.

        Parameters
        ----------
        item : object
            The element to be enqueued.
        """
        store = self.store
        store.write_data(self._right, item)
        successor = store.read_next(self._right)
        store.note_comparison()
        if successor == self._left:
            p = store.allocate()
            store.write_next(p, self._left)
            store.write_next(self._right, p)
            self._right = p
            self._capacity += 1
        else:
            self._right = successor
        store.note_register_write()
        return

    def dequeue(self):
        """
        Remove and return the front element. The node is kept for reuse.

        Returns
        -------
        object :
            The removed element.

        Raises
        ------
        EmptyStructureError
            If the queue is empty.
        """
        self._require_nonempty()
        store = self.store
        item = store.read_data(self._left)
        self._left = store.read_next(self._left)
        store.note_register_write()
        return item

    def front(self):
        """
        Return the front element without removing it.

        Raises
        ------
        EmptyStructureError
            If the queue is empty.
        """
        self._require_nonempty()
        return self.store.read_data(self._left)

    def reserve(self, capacity):
        """
        Grow the cycle until the queue can hold `capacity` elements.

        Fresh nodes are spliced in right after `right`, i.e. among the spare
        nodes. The capacity is never reduced.

        Parameters
        ----------
        capacity : int
            Requested minimum capacity.
        """
        store = self.store
        while self._capacity < capacity:
            p = store.allocate()
            store.write_next(p, store.read_next(self._right))
            store.write_next(self._right, p)
            self._capacity += 1
        return

    def destroy(self):
        store = self.store
        p = store.read_next(self._right)
        while p != self._right:
            q = store.read_next(p)
            store.free(p)
            p = q
        store.free(self._right)
        return

    def _element_bounds(self):
        return self._left, self._right

    def node_count(self, length):
        return self._capacity + 1

    def check_invariants(self, length):
        super().check_invariants(length)
        self.capacity()
        cycle = sum(1 for _ in walk(self.store, self.store.read_next(self._right), self._right, self._capacity))
        if cycle != self._capacity:
            raise InvariantError(
                "Cycle of {} has the wrong length. Expected: {}, Got: {}".format(self._long_id, self._capacity, cycle)
            )
        if length > self._capacity:
            raise InvariantError(
                "{} holds more elements than its capacity. Expected: <= {}, Got: {}"
                .format(self._long_id, self._capacity, length)
            )
        return
