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


import collections

from pylinked_queues.constants import PUSH_BACK, PUSH_FRONT, POP_FRONT, FRONT, IS_EMPTY
from pylinked_queues.exceptions import EmptyStructureError, InvariantError


class OracleDeque(object):
    """
    Reference model of an output-restricted deque.

    Offers the interface of the linked structures on top of a
    `collections.deque`, so it can replay every trace. Restricted to
    push_back/pop_front it is a FIFO queue, restricted to push_front/pop_front
    it is a LIFO stack.

    Parameters
    ----------
    store : NodeStore, optional
        Ignored. Accepted so the oracle can be built like a linked structure.
    """

    operations = {
        PUSH_BACK: "push_back",
        PUSH_FRONT: "push_front",
        POP_FRONT: "pop_front",
        FRONT: "front",
        IS_EMPTY: "is_empty",
    }

    def __init__(self, store=None):
        self.store = store
        self._items = collections.deque()

    def __len__(self):
        return len(self._items)

    def __repr__(self):
        return "<OracleDeque with {} elements>".format(len(self._items))

    @classmethod
    def accepts(cls, codes):
        return set(codes) <= set(cls.operations)

    def push_back(self, item):
        self._items.append(item)
        return

    def push_front(self, item):
        self._items.appendleft(item)
        return

    def pop_front(self):
        if not self._items:
            raise EmptyStructureError("Oracle is empty.")
        return self._items.popleft()

    def front(self):
        if not self._items:
            raise EmptyStructureError("Oracle is empty.")
        return self._items[0]

    def is_empty(self):
        return not self._items

    def destroy(self):
        self._items.clear()
        return

    def to_list(self):
        return list(self._items)

    def node_count(self, length):
        return 0

    def check_invariants(self, length):
        if len(self._items) != length:
            raise InvariantError(
                "Oracle has the wrong length. Expected: {}, Got: {}".format(length, len(self._items))
            )
        return
