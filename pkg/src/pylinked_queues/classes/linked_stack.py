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
from pylinked_queues.constants import PUSH_FRONT, POP_FRONT, FRONT, IS_EMPTY


class LinkedStack(LinkedStructure):
    """
    Traditional singly linked pushdown stack.

    `top` names the most recently pushed node. A bottom node below all
    elements takes the place of a null link, so the stack is empty iff
    `top == bottom`.

    Parameters
    ----------
    store : NodeStore
        Store owning the nodes of the stack.

    Notes
    -----
    - `push`: allocations 1, data_writes 1, link_writes 1, register_writes 1.
    - `pop`: register_writes 1, deallocations 1.
    """

    operations = {
        PUSH_FRONT: "push",
        POP_FRONT: "pop",
        FRONT: "top",
        IS_EMPTY: "is_empty",
    }

    def __init__(self, store):
        super().__init__(store)
        self._kind = "stack"
        self._long_id = "ST_" + self._id_string

        self._bottom = store.allocate()
        self._top = self._bottom
        store.note_register_write()

    def is_empty(self):
        return self._top == self._bottom

    def push(self, item):
        store = self.store
        p = store.allocate()
        store.write_data(p, item)
        store.write_next(p, self._top)
        self._top = p
        store.note_register_write()
        return

    def pop(self):
        """
        Remove and return the top element.

        Raises
        ------
        EmptyStructureError
            If the stack is empty.
        """
        self._require_nonempty()
        store = self.store
        p = self._top
        item = store.read_data(p)
        self._top = store.read_next(p)
        store.note_register_write()
        store.free(p)
        return item

    def top(self):
        self._require_nonempty()
        return self.store.read_data(self._top)

    def destroy(self):
        store = self.store
        p = self._top
        while p != self._bottom:
            q = store.read_next(p)
            store.free(p)
            p = q
        store.free(self._bottom)
        return

    def _element_bounds(self):
        return self._top, self._bottom
