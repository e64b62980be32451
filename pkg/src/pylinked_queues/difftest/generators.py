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


import numpy as np

from pylinked_queues.constants import PUSH_BACK, PUSH_FRONT
from pylinked_queues.difftest.trace import Op, OpTrace


__all__ = [
    'gen_random',
    'gen_burst',
    'gen_ramp',
    'gen_steady',
    'gen_exhaustive',
    'generators',
    'workload_arguments',
    'generate',
]


_POP = Op.pop_front()
_IS_EMPTY = Op.is_empty()


def _check_count(name, value):
    if value < 0:
        raise ValueError(
            "`{}` must not be negative. Got: {}".format(name, value)
        )
    return


def _check_mix(mix):
    probabilities = np.asarray(mix, dtype=np.float64)
    if probabilities.shape != (3,):
        raise ValueError(
            "`mix` must contain three probabilities. Got: {}".format(len(probabilities.ravel()))
        )
    if np.any(probabilities < 0) or not np.isclose(probabilities.sum(), 1.0):
        raise ValueError(
            "`mix` must be non-negative and sum up to one. Got: {}".format(list(probabilities))
        )
    return probabilities


def gen_random(seed, n, mix=(0.5, 0.0, 0.5)):
    """
    Generate a seeded random trace.

    Parameters
    ----------
    seed : int
        Seed of the random number generator.
    n : int
        Number of operations.
    mix : array_like, optional
        Probabilities `(p_push_back, p_push_front, p_pop_front)`. They must be
        non-negative and sum up to one.

    Returns
    -------
    OpTrace

    Notes
    -----
    - Whenever the modelled structure is empty, a drawn pop_front is replaced
      by a push_back, so every operation of the trace satisfies its
      precondition.
    - Pushed values are taken from a counter, hence they are all distinct.
    """
    if seed is not None:
        _check_count("seed", seed)
    _check_count("n", n)
    probabilities = _check_mix(mix)
    rng = np.random.default_rng(seed)
    draws = rng.choice(3, size=n, p=probabilities / probabilities.sum())

    ops = []
    length = 0
    value = 0
    for draw in draws.tolist():
        if draw == 2 and length > 0:
            ops.append(_POP)
            length -= 1
        else:
            ops.append(Op(PUSH_FRONT if draw == 1 else PUSH_BACK, value))
            value += 1
            length += 1
    return OpTrace(ops, seed=seed, generator="random")


def gen_burst(k, rounds):
    """
    Generate `rounds` repetitions of `k` push_backs followed by `k` pop_fronts.

    The queue is empty after every round.
    """
    _check_count("k", k)
    _check_count("rounds", rounds)
    ops = []
    value = 0
    for _ in range(rounds):
        for _ in range(k):
            ops.append(Op(PUSH_BACK, value))
            value += 1
        ops.extend([_POP] * k)
    return OpTrace(ops, generator="burst")


def gen_ramp(max_round):
    """
    Generate rounds of growing size: for i in 1..max_round, i push_backs then i pop_fronts.
    """
    _check_count("max", max_round)
    ops = []
    value = 0
    for i in range(1, max_round + 1):
        for _ in range(i):
            ops.append(Op(PUSH_BACK, value))
            value += 1
        ops.extend([_POP] * i)
    return OpTrace(ops, generator="ramp")


def gen_steady(capacity, n):
    """
    Generate a steady-state workload for a queue of the given capacity.

    The first `2 * capacity` operations fill the queue with `capacity`
    elements and drain it again. They are followed by `n` alternating
    push_back and pop_front operations.

    Parameters
    ----------
    capacity : int
        Number of elements of the warm-up.
    n : int
        Number of alternating operations after the warm-up.

    Returns
    -------
    OpTrace
    """
    _check_count("capacity", capacity)
    _check_count("n", n)
    ops = []
    value = 0
    for _ in range(capacity):
        ops.append(Op(PUSH_BACK, value))
        value += 1
    ops.extend([_POP] * capacity)
    for i in range(n):
        if i % 2 == 0:
            ops.append(Op(PUSH_BACK, value))
            value += 1
        else:
            ops.append(_POP)
    return OpTrace(ops, generator="steady")


def gen_exhaustive(max_length, values=(0, 1), allow_push_front=False):
    """
    Enumerate all precondition-clean traces up to a given length.

    Every sequence of at most `max_length` pushes and pops over the alphabet
    `values` in which no pop hits an empty structure is yielded once. Each
    sequence is followed by pop_fronts until the structure is empty and a
    final emptiness query, so that the final state is observable.

    Parameters
    ----------
    max_length : int
        Maximum length of the enumerated sequences (drain excluded).
    values : tuple, optional
        Alphabet of pushed values.
    allow_push_front : bool, optional
        Also use push_front operations.

    Yields
    ------
    OpTrace
    """
    _check_count("max_length", max_length)
    symbols = [Op(PUSH_BACK, v) for v in values]
    if allow_push_front:
        symbols.extend(Op(PUSH_FRONT, v) for v in values)

    def extend(prefix, length):
        yield OpTrace(prefix + [_POP] * length + [_IS_EMPTY], generator="exhaustive")
        if len(prefix) == max_length:
            return
        for op in symbols:
            yield from extend(prefix + [op], length + 1)
        if length > 0:
            yield from extend(prefix + [_POP], length - 1)

    return extend([], 0)


def _count(value):
    # accepts "1e6"
    return int(float(value))


generators = {
    'random': (gen_random, {'seed': ('seed', int), 'n': ('n', _count), 'pb': ('pb', float),
                            'pf': ('pf', float), 'pp': ('pp', float)}),
    'burst': (gen_burst, {'k': ('k', _count), 'rounds': ('rounds', _count)}),
    'ramp': (gen_ramp, {'max': ('max_round', _count)}),
    'steady': (gen_steady, {'capacity': ('capacity', _count), 'n': ('n', _count)}),
}

_required = {
    'random': ('seed', 'n'),
    'burst': ('k', 'rounds'),
    'ramp': ('max',),
    'steady': ('capacity', 'n'),
}


def workload_arguments(name, params):
    """
    Validate textual generator parameters and convert them to arguments.

    Parameters
    ----------
    name : str
        Generator name.
    params : dict
        Parameter names mapped to their textual values.

    Returns
    -------
    tuple :
        The generator function and its keyword arguments.

    Raises
    ------
    ValueError
        If the generator or a parameter is unknown, missing or malformed.
    """
    if name not in generators:
        raise ValueError(
            "Unknown generator: {}. Must be one of {}.".format(name, ", ".join(generators))
        )
    func, known = generators[name]
    unknown = set(params) - set(known)
    if unknown:
        raise ValueError(
            "Unknown parameters for generator {}: {}.".format(name, ", ".join(sorted(unknown)))
        )
    missing = [p for p in _required[name] if p not in params]
    if missing:
        raise ValueError(
            "Missing parameters for generator {}: {}.".format(name, ", ".join(missing))
        )
    kwargs = {}
    for key, text in params.items():
        arg, convert = known[key]
        try:
            kwargs[arg] = convert(text)
        except (TypeError, ValueError):
            raise ValueError("Parameter {} of generator {} is malformed: {!r}.".format(key, name, text))
    if name == 'random':
        mix = (kwargs.pop('pb', 0.5), kwargs.pop('pf', 0.0), kwargs.pop('pp', 0.5))
        _check_mix(mix)
        kwargs['mix'] = mix
    for arg, value in kwargs.items():
        if arg != 'mix':
            _check_count(arg, value)
    return func, kwargs


def generate(name, params):
    """
    Build a workload trace from a generator name and textual parameters.

    Parameters
    ----------
    name : str
        Generator name. Must be one of 'random', 'burst', 'ramp' or 'steady'.
    params : dict
        Parameter names mapped to their textual values, e.g.
        `{'k': '64', 'rounds': '1000'}`. The random generator takes `seed`,
        `n` and the mix `pb`, `pf`, `pp` (defaults 0.5, 0, 0.5).

    Returns
    -------
    OpTrace

    Raises
    ------
    ValueError
        If the generator or a parameter is unknown, missing or malformed.
    """
    func, kwargs = workload_arguments(name, params)
    return func(**kwargs)
