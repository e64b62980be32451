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
from pylinked_queues.constants import PUSH_BACK, PUSH_FRONT, POP_FRONT, FRONT, IS_EMPTY


class CircularDeque(LinkedStructure):
    """
    Circularly linked output-restricted deque with a single handle.

    The elements are the interval `[S(right), right)`, where `right` names a
    blank node and `S` is the successor along the next-links. The blank node is
    the footer when the structure is used as a queue and the header when it is
    used as a stack. The empty deque is a single self-looped blank node.

    Parameters
    ----------
    store : NodeStore
        Store owning the nodes of the deque.

    Notes
    -----
    - `push_back` (queue enqueue): data_writes 1, allocations 1, link_writes 2,
      register_writes 1.
    - `push_front` (stack push): allocations 1, data_writes 1, link_writes 2.
    - `pop_front` (queue dequeue and stack pop): link_writes 1, deallocations 1.
      `right` never moves, since the removed node can only be `right` when the
      deque is empty.
    - No operation performs a comparison.
    - Removal at the rear is not possible in a singly linked cycle.
    """

    operations = {
        PUSH_BACK: "push_back",
        PUSH_FRONT: "push_front",
        POP_FRONT: "pop_front",
        FRONT: "front",
        IS_EMPTY: "is_empty",
    }

    def __init__(self, store):
        super().__init__(store)
        self._kind = "circular"
        self._long_id = "CD_" + self._id_string

        self._right = store.allocate()
        store.write_next(self._right, self._right)
        store.note_register_write()

    @property
    def right(self):
        return self._right

    def is_empty(self):
        return self.store.read_next(self._right) == self._right

    def push_back(self, item):
        """
        Insert an element at the rear (queue enqueue).

        Parameters
        ----------
        item : object
        """
        store = self.store
        store.write_data(self._right, item)
        p = store.allocate()
        store.write_next(p, store.read_next(self._right))
        store.write_next(self._right, p)
        self._right = p
        store.note_register_write()
        return

    def push_front(self, item):
        """
        Insert an element at the front (stack push).

        Parameters
        ----------
        item : object
        """
        store = self.store
        p = store.allocate()
        store.write_data(p, item)
        store.write_next(p, store.read_next(self._right))
        store.write_next(self._right, p)
        return

    def pop_front(self):
        """
        Remove and return the front element (queue dequeue and stack pop).

        Returns
        -------
        object :
            The removed element.

        Raises
        ------
        EmptyStructureError
            If the deque is empty.
        """
        self._require_nonempty()
        store = self.store
        left = store.read_next(self._right)
        item = store.read_data(left)
        store.write_next(self._right, store.read_next(left))
        store.free(left)
        return item

    def front(self):
        """
        Return the front element without removing it.

        Raises
        ------
        EmptyStructureError
            If the deque is empty.
        """
        self._require_nonempty()
        return self.store.read_data(self.store.read_next(self._right))

    enqueue = push_back
    dequeue = pop_front
    push = push_front
    pop = pop_front

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
        return self.store.read_next(self._right), self._right
