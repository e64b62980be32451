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
from pylinked_queues.constants import PUSH_BACK, POP_FRONT, FRONT, IS_EMPTY
from pylinked_queues.exceptions import InvariantError


class BlankNodeQueue(LinkedStructure):
    """
    Singly linked queue with a rear blank node.

    The queue is the half-open interval `[left, right)`: `left` names the
    front element and `right` names a blank node after the rear which holds
    no element. The empty queue is `[right, right)`. Since `right` exists
    during the whole lifetime of the queue, it reserves the successor of the
    front and no operation has to check for the boundary case.

    Parameters
    ----------
    store : NodeStore
        Store owning the nodes of the queue.

    Notes
    -----
    - `enqueue` writes the element into the old blank node and appends a
      brand-new blank node. Counter deltas: data_writes 1, allocations 1,
      link_writes 1, register_writes 1.
    - `dequeue` advances `left` to its successor and frees the old front.
      Counter deltas: register_writes 1, deallocations 1.
    - Neither operation performs a comparison. The link of a fresh blank node
      is never written before the node receives an element.
    """

    operations = {
        PUSH_BACK: "enqueue",
        POP_FRONT: "dequeue",
        FRONT: "front",
        IS_EMPTY: "is_empty",
    }

    def __init__(self, store):
        super().__init__(store)
        self._kind = "blank"
        self._long_id = "BQ_" + self._id_string

        self._right = store.allocate()
        self._left = self._right
        store.note_register_write()
        store.note_register_write()

    @property
    def left(self):
        return self._left

    @property
    def right(self):
        return self._right

    def is_empty(self):
        return self._left == self._right

    def enqueue(self, item):
        """
        Append an element at the rear.

        Parameters
        ----------
        item : object
            The element to be enqueued.
        """
        store = self.store
        store.write_data(self._right, item)
        p = store.allocate()
        store.write_next(self._right, p)
        self._right = p
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
        p = self._left
        item = store.read_data(p)
        self._left = store.read_next(p)
        store.note_register_write()
        store.free(p)
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

    def destroy(self):
        store = self.store
        p = self._left
        while p != self._right:
            q = store.read_next(p)
            store.free(p)
            p = q
        store.free(self._right)
        return

    def _element_bounds(self):
        return self._left, self._right

    def check_invariants(self, length):
        super().check_invariants(length)
        if not self.store.is_live(self._right):
            raise InvariantError("Blank node of {} is not live.".format(self._long_id))
        return
