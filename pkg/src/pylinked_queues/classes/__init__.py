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


from pylinked_queues.classes.node_store import NodeHandle, Metrics, NodeStore, walk
from pylinked_queues.classes.linked_structure import LinkedStructure
from pylinked_queues.classes.header_queue import HeaderQueue
from pylinked_queues.classes.blank_node_queue import BlankNodeQueue
from pylinked_queues.classes.circular_deque import CircularDeque
from pylinked_queues.classes.lazy_circular_queue import LazyCircularQueue
from pylinked_queues.classes.linked_stack import LinkedStack


__all__ = [
    'NodeHandle',
    'Metrics',
    'NodeStore',
    'walk',
    'LinkedStructure',
    'HeaderQueue',
    'BlankNodeQueue',
    'CircularDeque',
    'LazyCircularQueue',
    'LinkedStack',
    'all_variants',
    'queue_variants',
    'get_variant',
]


all_variants = {
    'header': HeaderQueue,
    'blank': BlankNodeQueue,
    'circular': CircularDeque,
    'lazy': LazyCircularQueue,
    'stack': LinkedStack,
}

queue_variants = {
    'header': HeaderQueue,
    'blank': BlankNodeQueue,
    'circular': CircularDeque,
    'lazy': LazyCircularQueue,
}


def get_variant(variant):
    """
    Look up a structure class by its variant id.

    Parameters
    ----------
    variant : str or type
        Variant id (e.g. 'blank') or a subclass of LinkedStructure.

    Returns
    -------
    type :
        The structure class.
    """
    if isinstance(variant, str):
        if variant in all_variants:
            return all_variants[variant]
        raise ValueError(
            "Unknown variant: {}. Must be one of {}.".format(variant, ", ".join(all_variants))
        )
    if isinstance(variant, type) and issubclass(variant, LinkedStructure):
        return variant
    raise ValueError("Unknown type for variant argument.")
