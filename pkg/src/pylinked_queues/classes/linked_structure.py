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


from pylinked_queues.classes.node_store import walk
from pylinked_queues.exceptions import EmptyStructureError, InvariantError


class LinkedStructure(object):
    """
    Base class for all singly linked structures.

    This class provides functionality common to all structures which keep
    their nodes inside a NodeStore.

    Parameters
    ----------
    store : NodeStore
        Store owning the nodes of the structure.

    Notes
    -----
    - Subclasses declare the class attribute `operations`, which maps trace
      operation codes to the names of their methods. A trace is well-formed
      for a structure iff all its codes are keys of this mapping.
    - Structures do not track their length. Inspection and invariant checks
      therefore take the length from the caller.
    """

    static_structure_id = 0
    operations = {}

    def __init__(self, store):
        LinkedStructure.static_structure_id += 1
        self.id = LinkedStructure.static_structure_id
        self._id_string = "{0:05d}".format(self.id)
        self._kind = ""
        self._long_id = ""
        self.store = store

    def __str__(self):
        return self._long_id

    def __repr__(self):
        return ("<LinkedStructure of kind " + self._kind
                + " with ID: " + self._long_id + ">")

    @classmethod
    def accepts(cls, codes):
        """
        Check whether all given trace operation codes are offered by this structure.

        Parameters
        ----------
        codes : iterable of str

        Returns
        -------
        bool
        """
        return set(codes) <= set(cls.operations)

    def is_empty(self):
        raise NotImplementedError("This method should be implemented by subclass.")

    def _require_nonempty(self):
        if self.is_empty():
            raise EmptyStructureError("{} is empty.".format(self._long_id))
        return

    def destroy(self):
        """Free all nodes of the structure. The structure must not be used afterwards."""
        raise NotImplementedError("This method should be implemented by subclass.")

    def to_list(self):
        """
        Return the stored elements in removal order.

        The walk is not counted in the metrics.

        Returns
        -------
        list
        """
        start, stop = self._element_bounds()
        return [self.store.read_data(h) for h in walk(self.store, start, stop, self.store.live_count)]

    def _element_bounds(self):
        """Return the handles delimiting the element interval `[start, stop)`."""
        raise NotImplementedError("This method should be implemented by subclass.")

    def node_count(self, length):
        """
        Number of nodes the structure owns when it holds `length` elements.

        Parameters
        ----------
        length : int

        Returns
        -------
        int
        """
        return length + 1

    def check_invariants(self, length):
        """
        Verify the structural invariants of the structure.

        Parameters
        ----------
        length : int
            Number of elements the structure is expected to hold.

        Raises
        ------
        InvariantError
            If any structural invariant is violated.
        """
        start, stop = self._element_bounds()
        walked = sum(1 for _ in walk(self.store, start, stop, length))
        if walked != length:
            raise InvariantError(
                "Element interval of {} has the wrong length. Expected: {}, Got: {}"
                .format(self._long_id, length, walked)
            )
        if (length == 0) != self.is_empty():
            raise InvariantError(
                "Emptiness test of {} disagrees with its length {}.".format(self._long_id, length)
            )
        return
