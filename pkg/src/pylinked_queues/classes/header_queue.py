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
from pylinked_queues.classes.node_store import NodeHandle, walk
from pylinked_queues.constants import PUSH_BACK, POP_FRONT, FRONT, IS_EMPTY
from pylinked_queues.exceptions import InvariantError


# Link value meaning "no successor". It never names a node of any store.
_NO_SUCCESSOR = NodeHandle(-1, -1)


class HeaderQueue(LinkedStructure):
    """
    Singly linked queue with a header node before the front.

    The queue is the interval `(H, R]`: the header `H` sits before the front
    element and `R` names the rear element, or `H` itself when the queue is
    empty. The front is `H`'s successor.

    Parameters
    ----------
    store : NodeStore
        Store owning the nodes of the queue.

    Notes
    -----
    - Every dequeue compares the removed node with `R` and resets `R` to `H`
      when the last element leaves the queue.
    - Counter deltas of `enqueue`: allocations 1, data_writes 1, link_writes 2,
      register_writes 1.
    - Counter deltas of `dequeue`: deallocations 1, link_writes 1,
      comparisons 1, register_writes 1 iff the queue becomes empty.
    """

    operations = {
        PUSH_BACK: "enqueue",
        POP_FRONT: "dequeue",
        FRONT: "front",
        IS_EMPTY: "is_empty",
    }

    def __init__(self, store):
        super().__init__(store)
        self._kind = "header"
        self._long_id = "HQ_" + self._id_string

        self._header = store.allocate()
        store.write_next(self._header, _NO_SUCCESSOR)
        self._rear = self._header
        store.note_register_write()
        store.note_register_write()

    @property
    def header(self):
        return self._header

    @property
    def rear(self):
        return self._rear

    def is_empty(self):
        return self._rear == self._header

    def enqueue(self, item):
        """
        Append an element at the rear.

        Parameters
        ----------
        item : object
            The element to be enqueued.
        """
        store = self.store
        p = store.allocate()
        store.write_data(p, item)
        store.write_next(p, _NO_SUCCESSOR)
        store.write_next(self._rear, p)
        self._rear = p
        store.note_register_write()
        return

    def dequeue(self):
        """
        Remove and return the front element.

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
        f = store.read_next(self._header)
        store.write_next(self._header, store.read_next(f))
        store.note_comparison()
        if f == self._rear:
            self._rear = self._header
            store.note_register_write()
        item = store.read_data(f)
        store.free(f)
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
        return self.store.read_data(self.store.read_next(self._header))

    def destroy(self):
        store = self.store
        p = self._header
        while p != _NO_SUCCESSOR:
            q = store.read_next(p)
            store.free(p)
            p = q
        return

    def _element_bounds(self):
        return self.store.read_next(self._header), _NO_SUCCESSOR

    def check_invariants(self, length):
        super().check_invariants(length)
        store = self.store
        last = self._header
        for last in walk(store, store.read_next(self._header), _NO_SUCCESSOR, length):
            pass
        if last != self._rear:
            raise InvariantError("Rear of {} is not the last linked node.".format(self._long_id))
        if (store.read_next(self._header) == _NO_SUCCESSOR) != self.is_empty():
            raise InvariantError("Header link of {} disagrees with its rear.".format(self._long_id))
        return
