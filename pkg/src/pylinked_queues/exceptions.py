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


class LinkedQueueError(Exception):
    """
    Base class of all exceptions raised by the pylinked_queues framework.
    """


class InvalidHandleError(LinkedQueueError):
    """
    Exception raised, when a node is accessed through a freed, stale or foreign handle in checked mode.
    """


class UnwrittenSlotError(InvalidHandleError):
    """
    Exception raised, when the data or link slot of a node is read before it has ever been written.
    """


class EmptyStructureError(LinkedQueueError):
    """
    Exception raised, when an element is removed from or looked up in an empty structure.
    """


class InvariantError(LinkedQueueError):
    """
    Exception raised, when a structural invariant or the node balance of a store is violated.
    """


class TraceError(LinkedQueueError, ValueError):
    """
    Exception raised, when a trace is malformed or contains operations a variant does not offer.
    """


class BenchConfigError(LinkedQueueError, ValueError):
    """
    Exception raised, when a benchmark configuration is inconsistent.
    """
