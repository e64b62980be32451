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

from pylinked_queues.classes import NodeStore, get_variant
from pylinked_queues.constants import CHECKED_MODE, VALUE_OPS
from pylinked_queues.difftest.oracle import OracleDeque
from pylinked_queues.exceptions import EmptyStructureError, InvariantError, LinkedQueueError, TraceError


__all__ = [
    'OpError',
    'TraceOutcome',
    'DiffReport',
    'resolve_variant',
    'check_well_formed',
    'bind_operations',
    'run_trace',
    'diff_check',
]


OpError = collections.namedtuple("OpError", ["kind"])
OpError.__doc__ = "Outcome entry of an operation that raised an error of class `kind`."


def resolve_variant(variant):
    """
    Look up a structure class by its variant id, including the 'oracle'.
    """
    if isinstance(variant, str) and variant == "oracle":
        return OracleDeque
    if variant is OracleDeque:
        return variant
    return get_variant(variant)


def check_well_formed(cls, trace):
    """
    Ensure that a structure class offers every operation of a trace.

    Raises
    ------
    TraceError
        If the trace contains operations the structure does not offer.
    """
    missing = trace.codes() - set(cls.operations)
    if missing:
        raise TraceError(
            "Trace is not well-formed for {}: unsupported operations {}."
            .format(cls.__name__, ", ".join(sorted(missing)))
        )
    return


def bind_operations(structure):
    """
    Map every operation code offered by a structure to its bound method.
    """
    return {code: getattr(structure, name) for code, name in structure.operations.items()}


def _same(expected, got):
    # True == 1 must not pass
    return type(expected) is type(got) and expected == got


def _observe(handlers, op):
    """Apply one operation and return its observable outcome."""
    try:
        if op.code in VALUE_OPS:
            handlers[op.code](op.value)
            return None
        return handlers[op.code]()
    except LinkedQueueError as e:
        return OpError(type(e).__name__)


class TraceOutcome(object):
    """
    Observations of a trace replay.

    Parameters
    ----------
    returns : list
        One entry per value-returning operation (pop_front, front and
        emptiness queries): the returned value or boolean, or an OpError.
    metrics : Metrics
        Counters before the structure was destroyed.
    live_count : int
        Live nodes before the structure was destroyed.
    final_metrics : Metrics
        Counters after the structure was destroyed.
    final_live : int
        Live nodes after the structure was destroyed.
    aborted : bool, optional
        `True` if an error other than an empty-structure error stopped the replay.
    """

    def __init__(self, returns, metrics, live_count, final_metrics, final_live, aborted=False):
        self.returns = returns
        self.metrics = metrics
        self.live_count = live_count
        self.final_metrics = final_metrics
        self.final_live = final_live
        self.aborted = aborted

    def _key(self):
        return (self.returns, self.metrics, self.live_count, self.final_metrics, self.final_live, self.aborted)

    def __eq__(self, other):
        if not isinstance(other, TraceOutcome):
            return NotImplemented
        return self._key() == other._key()

    def __repr__(self):
        return "<TraceOutcome with {} returns and {} live nodes>".format(len(self.returns), self.final_live)


def run_trace(variant, store, trace):
    """
    Replay a trace against a freshly built structure.

    Parameters
    ----------
    variant : str or type
        Variant id ('header', 'blank', 'circular', 'lazy', 'stack' or 'oracle')
        or a structure class.
    store : NodeStore
        Store the structure is built on.
    trace : OpTrace

    Returns
    -------
    TraceOutcome

    Raises
    ------
    TraceError
        If the trace is not well-formed for the variant.
    """
    cls = resolve_variant(variant)
    check_well_formed(cls, trace)
    structure = cls(store)
    handlers = bind_operations(structure)
    returns = []
    aborted = False
    for op in trace.ops:
        outcome = _observe(handlers, op)
        if op.code not in VALUE_OPS or isinstance(outcome, OpError):
            returns.append(outcome)
        if isinstance(outcome, OpError) and outcome.kind != EmptyStructureError.__name__:
            aborted = True
            break
    metrics = store.snapshot()
    live_count = store.live_count
    if not aborted:
        structure.destroy()
    return TraceOutcome(returns, metrics, live_count, store.snapshot(), store.live_count, aborted)


class DiffReport(object):
    """
    Result of a differential check.

    Parameters
    ----------
    variant : str
        Checked variant.
    agreed : bool
        `True` if the variant agreed with the oracle on the whole trace.
    index : int, optional
        Index of the first diverging operation. Equals the trace length if
        the divergence was found after the replay (e.g. leaked nodes).
    op : Op, optional
        First diverging operation.
    expected : object, optional
        Outcome of the oracle.
    got : object, optional
        Outcome of the variant.
    message : str, optional
        Description of the divergence.
    """

    def __init__(self, variant, agreed, index=None, op=None, expected=None, got=None, message=""):
        self.variant = variant
        self.agreed = agreed
        self.index = index
        self.op = op
        self.expected = expected
        self.got = got
        self.message = message

    def __bool__(self):
        return self.agreed

    def __repr__(self):
        if self.agreed:
            return "<DiffReport {}: agreement>".format(self.variant)
        return ("<DiffReport {}: divergence at op {} ({!r}), expected {!r}, got {!r}: {}>"
                .format(self.variant, self.index, self.op, self.expected, self.got, self.message))


def diff_check(variant, trace, mode=CHECKED_MODE, check_invariants=None):
    """
    Replay a trace on a variant and on the oracle in lockstep and compare them.

    Parameters
    ----------
    variant : str or type
        Variant id or structure class.
    trace : OpTrace
        Trace well-formed for the variant.
    mode : str, optional
        Mode of the node store the variant is built on.
    check_invariants : bool, optional
        Check the structural invariants and the node-count law after every
        operation. Defaults to `True` in checked mode and `False` otherwise.

    Returns
    -------
    DiffReport :
        Agreement, or the first divergence. A divergence is never raised.

    Raises
    ------
    TraceError
        If the trace is not well-formed for the variant.
    """
    cls = resolve_variant(variant)
    check_well_formed(cls, trace)
    name = variant if isinstance(variant, str) else cls.__name__
    store = NodeStore(mode=mode)
    if check_invariants is None:
        check_invariants = store.checked
    structure = cls(store)
    oracle = OracleDeque()
    handlers = bind_operations(structure)
    expected_handlers = bind_operations(oracle)

    for index, op in enumerate(trace.ops):
        expected = _observe(expected_handlers, op)
        got = _observe(handlers, op)
        if not _same(expected, got):
            return DiffReport(name, False, index, op, expected, got, "Outcomes differ.")
        if check_invariants:
            length = len(oracle)
            try:
                structure.check_invariants(length)
                if cls is not OracleDeque and store.live_count != structure.node_count(length):
                    raise InvariantError(
                        "Node-count law violated. Expected: {}, Got: {}"
                        .format(structure.node_count(length), store.live_count)
                    )
                store.check_balance()
            except LinkedQueueError as e:
                return DiffReport(name, False, index, op, None, None, str(e))

    remaining = oracle.to_list()
    try:
        contents = structure.to_list()
    except LinkedQueueError as e:
        return DiffReport(name, False, len(trace), None, remaining, None, str(e))
    if contents != remaining:
        return DiffReport(name, False, len(trace), None, remaining, contents, "Remaining elements differ.")
    structure.destroy()
    metrics = store.snapshot()
    if store.live_count != 0 or metrics.allocations != metrics.deallocations:
        return DiffReport(name, False, len(trace), None, 0, store.live_count, "Nodes leaked after destroy.")
    return DiffReport(name, True)
