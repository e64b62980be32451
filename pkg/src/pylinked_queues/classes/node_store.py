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
import numpy as np

from pylinked_queues.constants import CHECKED_MODE, STORE_MODES, DEFAULT_MODE, DEFAULT_STORE_SIZE, METRIC_FIELDS
from pylinked_queues.exceptions import InvalidHandleError, UnwrittenSlotError, InvariantError


__all__ = [
    'NodeHandle',
    'Metrics',
    'NodeStore',
    'walk',
]


_UNSET = object()


class NodeHandle(collections.namedtuple("NodeHandle", ["index", "generation"])):
    """
    Opaque identity of one node inside a NodeStore.

    A handle consists of the slot index of the node in the arena and the
    allocation generation of that slot. Every free bumps the generation of
    the slot, so a handle to a freed node never equals a handle returned by
    a later allocation of the same slot.

    Notes
    -----
    - Handles are only meaningful relative to the store that issued them.
    """

    __slots__ = ()

    def __repr__(self):
        return "<NodeHandle {}@{}>".format(self.index, self.generation)


class Metrics(object):
    """
    Event counters of a node store.

    Parameters
    ----------
    allocations : int, optional
        Number of allocated nodes.
    deallocations : int, optional
        Number of freed nodes.
    data_writes : int, optional
        Number of writes into data slots.
    link_writes : int, optional
        Number of writes into next-links.
    register_writes : int, optional
        Number of writes into structure-level handles (such as `left` or `right`).
    comparisons : int, optional
        Number of node-identity comparisons performed by structure operations.
    """

    __slots__ = METRIC_FIELDS

    def __init__(self, allocations=0, deallocations=0, data_writes=0, link_writes=0, register_writes=0,
                 comparisons=0):
        self.allocations = allocations
        self.deallocations = deallocations
        self.data_writes = data_writes
        self.link_writes = link_writes
        self.register_writes = register_writes
        self.comparisons = comparisons

    def as_tuple(self):
        """
        Return the counters in the order of `constants.METRIC_FIELDS`.
        """
        return tuple(getattr(self, name) for name in METRIC_FIELDS)

    def as_dict(self):
        """
        Return a dictionary mapping counter names to their values.
        """
        return {name: getattr(self, name) for name in METRIC_FIELDS}

    def copy(self):
        return Metrics(*self.as_tuple())

    def __eq__(self, other):
        if not isinstance(other, Metrics):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __sub__(self, other):
        return Metrics(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __add__(self, other):
        return Metrics(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __repr__(self):
        return "<Metrics " + " ".join("{}={}".format(k, v) for k, v in self.as_dict().items()) + ">"


class NodeStore(object):
    """
    Instrumented arena owning all list nodes.

    Every node consists of a data slot and a next-link. Nodes are addressed
    through NodeHandles only. The store counts every structurally significant
    event so that the step counts of the structures built on it become
    assertable.

    Parameters
    ----------
    mode : str, optional
        Specifies how handle accesses are treated.

        - `checked` : Validate every handle and reject reads of never written slots.
        - `fast` : No validation. The recorded metrics are identical to the checked mode
          on valid traces.
    size : int, optional
        Number of node slots reserved initially. The arena grows on demand.

    Notes
    -----
    - Fresh nodes have indeterminate data and link slots. The store never
      initializes them.
    - A store and all structures built on it must not be mutated from more
      than one thread at a time.
    """

    def __init__(self, mode=DEFAULT_MODE, size=DEFAULT_STORE_SIZE):
        if mode not in STORE_MODES:
            raise ValueError(
                "Mode %s is not implemented by class NodeStore." % str(mode)
            )
        if size < 1:
            raise ValueError(
                "Size of a node store must be positive. Got: {}".format(size)
            )
        self.mode = mode
        self.checked = mode == CHECKED_MODE
        self.metrics = Metrics()
        self.live_count = 0
        self.peak_live = 0
        self._live_at_reset = 0

        self._data = np.empty(size, dtype=object)
        self._next = np.empty(size, dtype=object)
        self._generation = np.zeros(size, dtype=np.int64)
        self._live = np.zeros(size, dtype=np.bool_)
        self._data_written = np.zeros(size, dtype=np.bool_)
        self._next_written = np.zeros(size, dtype=np.bool_)
        self._free_slots = list(range(size - 1, -1, -1))

    def __repr__(self):
        return "<NodeStore in {} mode with {} live nodes>".format(self.mode, self.live_count)

    @property
    def size(self):
        """
        Number of node slots currently reserved by the arena.
        """
        return len(self._live)

    def _grow(self):
        size = len(self._live)
        self._data = np.concatenate([self._data, np.empty(size, dtype=object)])
        self._next = np.concatenate([self._next, np.empty(size, dtype=object)])
        self._generation = np.concatenate([self._generation, np.zeros(size, dtype=np.int64)])
        self._live = np.concatenate([self._live, np.zeros(size, dtype=np.bool_)])
        self._data_written = np.concatenate([self._data_written, np.zeros(size, dtype=np.bool_)])
        self._next_written = np.concatenate([self._next_written, np.zeros(size, dtype=np.bool_)])
        self._free_slots.extend(range(2 * size - 1, size - 1, -1))
        return

    def _validate(self, handle):
        try:
            index, generation = handle
        except (TypeError, ValueError):
            raise InvalidHandleError("{!r} is not a node handle.".format(handle))
        if not 0 <= index < len(self._live) or not self._live[index] or self._generation[index] != generation:
            raise InvalidHandleError("{!r} does not name a live node of this store.".format(handle))
        return index

    def is_live(self, handle):
        """
        Check whether a handle names a live node. Not counted in the metrics.

        Parameters
        ----------
        handle : NodeHandle

        Returns
        -------
        bool
        """
        try:
            self._validate(handle)
        except InvalidHandleError:
            return False
        return True

    def allocate(self, init_data=_UNSET):
        """
        Allocate a fresh node.

        Parameters
        ----------
        init_data : optional
            If given, it is written into the data slot of the new node (counted
            as a data write).

        Returns
        -------
        NodeHandle :
            Handle of the new node. Its next-link is indeterminate until written.
        """
        if not self._free_slots:
            self._grow()
        index = self._free_slots.pop()
        self._live[index] = True
        if self.checked:
            self._data_written[index] = False
            self._next_written[index] = False
        self.live_count += 1
        if self.live_count > self.peak_live:
            self.peak_live = self.live_count
        self.metrics.allocations += 1
        handle = NodeHandle(index, int(self._generation[index]))
        if init_data is not _UNSET:
            self.write_data(handle, init_data)
        return handle

    def free(self, handle):
        """
        Free a live node.

        Parameters
        ----------
        handle : NodeHandle

        Raises
        ------
        InvalidHandleError
            In checked mode, if the handle does not name a live node (including double frees).
        """
        if self.checked:
            index = self._validate(handle)
        else:
            index = handle.index
        self._live[index] = False
        self._generation[index] += 1
        self._data[index] = None
        self._next[index] = None
        self._free_slots.append(index)
        self.live_count -= 1
        self.metrics.deallocations += 1
        return

    def read_next(self, handle):
        """
        Return the successor of a node. Not counted in the metrics.

        Parameters
        ----------
        handle : NodeHandle

        Returns
        -------
        NodeHandle

        Raises
        ------
        InvalidHandleError
            In checked mode, if the handle does not name a live node.
        UnwrittenSlotError
            In checked mode, if the link of the node was never written.
        """
        if self.checked:
            index = self._validate(handle)
            if not self._next_written[index]:
                raise UnwrittenSlotError("Link of {!r} was read before it was written.".format(handle))
            return self._next[index]
        return self._next[handle.index]

    def write_next(self, handle, successor):
        """
        Link a node to its successor. Counted as a link write.

        Parameters
        ----------
        handle : NodeHandle
            Node whose link is written.
        successor : NodeHandle
            New successor. It is not dereferenced.
        """
        if self.checked:
            index = self._validate(handle)
            self._next_written[index] = True
        else:
            index = handle.index
        self._next[index] = successor
        self.metrics.link_writes += 1
        return

    def read_data(self, handle):
        """
        Return the element stored in a node. Not counted in the metrics.

        Parameters
        ----------
        handle : NodeHandle

        Raises
        ------
        InvalidHandleError
            In checked mode, if the handle does not name a live node.
        UnwrittenSlotError
            In checked mode, if the data slot of the node was never written.
        """
        if self.checked:
            index = self._validate(handle)
            if not self._data_written[index]:
                raise UnwrittenSlotError("Data of {!r} was read before it was written.".format(handle))
            return self._data[index]
        return self._data[handle.index]

    def write_data(self, handle, value):
        """
        Store an element in a node. Counted as a data write.

        Parameters
        ----------
        handle : NodeHandle
        value : object
        """
        if self.checked:
            index = self._validate(handle)
            self._data_written[index] = True
        else:
            index = handle.index
        self._data[index] = value
        self.metrics.data_writes += 1
        return

    def note_register_write(self):
        """Record a write into a structure-level handle."""
        self.metrics.register_writes += 1
        return

    def note_comparison(self):
        """Record a node-identity comparison."""
        self.metrics.comparisons += 1
        return

    def snapshot(self):
        """
        Return a copy of the current counters.

        Returns
        -------
        Metrics
        """
        return self.metrics.copy()

    def reset_metrics(self):
        """
        Zero all counters without touching any node.

        The peak of live nodes restarts at the current live count.
        """
        self.metrics = Metrics()
        self._live_at_reset = self.live_count
        self.peak_live = self.live_count
        return

    def check_balance(self):
        """
        Verify that the live count matches the allocation and deallocation counters.

        Raises
        ------
        InvariantError
            If `live_count` differs from the live count at the last reset plus
            allocations minus deallocations.
        """
        expected = self._live_at_reset + self.metrics.allocations - self.metrics.deallocations
        if self.live_count != expected:
            raise InvariantError(
                "Node balance violated. Expected: {}, Got: {}".format(expected, self.live_count)
            )
        return


def walk(store, start, stop, max_steps):
    """
    Follow next-links from `start` up to, but excluding, `stop`.

    Reads are not counted in the metrics.

    Parameters
    ----------
    store : NodeStore
    start : NodeHandle
        First node to yield.
    stop : NodeHandle
        Node at which the walk ends. It is not yielded.
    max_steps : int
        Maximum number of nodes to yield before `stop` has to be reached.

    Yields
    ------
    NodeHandle :
        All nodes in link order.

    Raises
    ------
    InvariantError
        If `stop` is not reached within `max_steps` steps.
    """
    handle = start
    steps = 0
    while handle != stop:
        if steps >= max_steps:
            raise InvariantError(
                "Walk from {!r} did not reach {!r} within {} steps.".format(start, stop, max_steps)
            )
        yield handle
        handle = store.read_next(handle)
        steps += 1
    return
