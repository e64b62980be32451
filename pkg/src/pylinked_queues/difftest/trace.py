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

from pylinked_queues.constants import PUSH_BACK, PUSH_FRONT, POP_FRONT, FRONT, IS_EMPTY, VALUE_OPS, ALL_OPS
from pylinked_queues.exceptions import TraceError


__all__ = [
    'Op',
    'OpTrace',
    'format_op',
    'parse_op',
    'read_trace',
    'write_trace',
]


class Op(collections.namedtuple("Op", ["code", "value"])):
    """
    A single trace operation.

    Parameters
    ----------
    code : str
        One of the operation codes in `constants.ALL_OPS`:

        - 'B' : push_back of `value`
        - 'F' : push_front of `value`
        - 'P' : pop_front
        - 'Q' : front query
        - 'E' : emptiness query
    value : object
        Pushed element. `None` for all other codes.
    """

    __slots__ = ()

    @classmethod
    def push_back(cls, value):
        return cls(PUSH_BACK, value)

    @classmethod
    def push_front(cls, value):
        return cls(PUSH_FRONT, value)

    @classmethod
    def pop_front(cls):
        return cls(POP_FRONT, None)

    @classmethod
    def front(cls):
        return cls(FRONT, None)

    @classmethod
    def is_empty(cls):
        return cls(IS_EMPTY, None)

    def __repr__(self):
        return format_op(self)


class OpTrace(object):
    """
    Ordered list of operations together with its provenance.

    Parameters
    ----------
    ops : list of Op
    seed : int, optional
        Seed the trace was generated with.
    generator : str, optional
        Name of the generator that produced the trace.
    """

    def __init__(self, ops=None, seed=None, generator=None):
        self.ops = list(ops) if ops is not None else []
        self.seed = seed
        self.generator = generator

    @property
    def length(self):
        return len(self.ops)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __eq__(self, other):
        if not isinstance(other, OpTrace):
            return NotImplemented
        return self.ops == other.ops

    def __repr__(self):
        return "<OpTrace of {} ops from generator {} with seed {}>".format(len(self.ops), self.generator, self.seed)

    def codes(self):
        """Return the set of operation codes occurring in the trace."""
        return set(op.code for op in self.ops)

    def is_queue_only(self):
        """A trace is well-formed for the queue-only variants iff it contains no push_front."""
        return all(op.code != PUSH_FRONT for op in self.ops)

    def count(self, code):
        """Return the number of operations with the given code."""
        return sum(1 for op in self.ops if op.code == code)

    def head(self, n):
        """Return a new trace of the first `n` operations."""
        return OpTrace(self.ops[:n], seed=self.seed, generator=self.generator)


def format_op(op):
    """
    Format an operation as a line of a trace file (without line ending).
    """
    if op.code in VALUE_OPS:
        return "{} {}".format(op.code, op.value)
    return op.code


def parse_op(line, line_number=None):
    """
    Parse one line of a trace file.

    Parameters
    ----------
    line : str
        Line without comment marker.
    line_number : int, optional
        Used in error messages.

    Returns
    -------
    Op

    Raises
    ------
    TraceError
        If the line is not a valid operation.
    """
    where = "" if line_number is None else "Line {}: ".format(line_number)
    tokens = line.split()
    if len(tokens) == 0 or tokens[0] not in ALL_OPS:
        raise TraceError("{}Unknown operation {!r}.".format(where, line.strip()))
    code = tokens[0]
    if code in VALUE_OPS:
        if len(tokens) != 2:
            raise TraceError("{}Operation {} expects one integer argument.".format(where, code))
        try:
            value = int(tokens[1])
        except ValueError:
            raise TraceError("{}Argument of {} is not an integer: {!r}.".format(where, code, tokens[1]))
        return Op(code, value)
    if len(tokens) != 1:
        raise TraceError("{}Operation {} takes no argument.".format(where, code))
    return Op(code, None)


def _numbered(lines):
    for i, line in enumerate(lines, 1):
        if isinstance(line, bytes):
            try:
                line = line.decode("ascii")
            except UnicodeDecodeError as e:
                raise TraceError("Line {}: Trace files must be ASCII. {}".format(i, e))
        yield i, line


def _read_lines(lines):
    ops = []
    meta = {}
    for i, line in _numbered(lines):
        line = line.rstrip("\n")
        if line.startswith("#"):
            key, sep, value = line[1:].partition(":")
            if sep:
                meta[key.strip()] = value.strip()
            continue
        if line.strip() == "":
            continue
        ops.append(parse_op(line, i))
    seed = meta.get("seed", "None")
    if seed == "None":
        seed = None
    else:
        try:
            seed = int(seed)
        except ValueError:
            raise TraceError("Seed of the trace is not an integer: {!r}.".format(seed))
    generator = meta.get("generator", "None")
    if generator == "None":
        generator = None
    return OpTrace(ops, seed=seed, generator=generator)


def read_trace(file_name):
    """
    Read a trace file.

    One operation per line: `B <int>`, `F <int>`, `P`, `Q` or `E`. Lines
    beginning with `#` are comments. Comments of the form `# key: value`
    restore the `generator` and `seed` metadata.

    Parameters
    ----------
    file_name : str or file-like object
        Path of the trace file or an open text file.

    Returns
    -------
    OpTrace

    Raises
    ------
    TraceError
        If a line is not a valid operation or the file is not ASCII.
    """
    if isinstance(file_name, str):
        with open(file_name, "rb") as f:
            return _read_lines(f)
    return _read_lines(file_name)


def write_trace(trace, file_name):
    """
    Write a trace to a trace file (ASCII, LF line endings).

    Parameters
    ----------
    trace : OpTrace
    file_name : str or file-like object
        Specify the file name or an open file where the trace should be saved in.
    """
    lines = [
        "# generator: {}\n".format(trace.generator),
        "# seed: {}\n".format(trace.seed),
        "# length: {}\n".format(len(trace)),
    ]
    lines.extend(format_op(op) + "\n" for op in trace.ops)
    if isinstance(file_name, str):
        with open(file_name, "w", encoding="ascii", newline="\n") as f:
            f.writelines(lines)
    else:
        file_name.writelines(lines)
    return
