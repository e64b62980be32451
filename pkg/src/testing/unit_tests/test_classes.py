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
import unittest

from pylinked_queues import constants
from pylinked_queues.classes import *
from pylinked_queues.difftest import Op, OpTrace, gen_random, gen_burst, run_trace
from pylinked_queues.exceptions import *


def delta(store, func, *args):
    before = store.snapshot()
    result = func(*args)
    return result, store.snapshot() - before


class TestNodeStore(unittest.TestCase):
    def setUp(self):
        self.store = NodeStore(mode="checked")
        return

    def test_modes(self):
        self.assertTrue(self.store.checked)
        self.assertFalse(NodeStore(mode="fast").checked)
        self.assertEqual(constants.FAST_MODE, NodeStore().mode)
        with self.assertRaises(ValueError):
            NodeStore(mode="paranoid")
        with self.assertRaises(ValueError):
            NodeStore(size=0)
        return

    def test_allocate_and_free(self):
        h = self.store.allocate()
        self.assertTrue(self.store.is_live(h))
        self.assertEqual(1, self.store.live_count)
        self.store.free(h)
        self.assertFalse(self.store.is_live(h))
        self.assertEqual(0, self.store.live_count)

        h2 = self.store.allocate()
        self.assertEqual(h.index, h2.index)
        self.assertEqual(h.generation + 1, h2.generation)
        self.assertNotEqual(h, h2)
        self.assertEqual(Metrics(allocations=2, deallocations=1), self.store.metrics)
        return

    def test_allocate_with_data(self):
        h, d = delta(self.store, self.store.allocate, "x")
        self.assertEqual(Metrics(allocations=1, data_writes=1), d)
        self.assertEqual("x", self.store.read_data(h))
        return

    def test_grow(self):
        store = NodeStore(mode="checked", size=2)
        handles = [store.allocate() for _ in range(5)]
        self.assertEqual(5, len(set(h.index for h in handles)))
        self.assertGreaterEqual(store.size, 5)
        for i, h in enumerate(handles):
            store.write_data(h, i)
        self.assertListEqual(list(range(5)), [store.read_data(h) for h in handles])
        return

    def test_uncounted_reads(self):
        a = self.store.allocate()
        b = self.store.allocate()
        _, d = delta(self.store, self.store.write_next, a, b)
        self.assertEqual(Metrics(link_writes=1), d)
        _, d = delta(self.store, self.store.write_data, a, 7)
        self.assertEqual(Metrics(data_writes=1), d)
        _, d = delta(self.store, self.store.read_next, a)
        self.assertEqual(Metrics(), d)
        value, d = delta(self.store, self.store.read_data, a)
        self.assertEqual(7, value)
        self.assertEqual(Metrics(), d)
        _, d = delta(self.store, self.store.note_comparison)
        self.assertEqual(Metrics(comparisons=1), d)
        _, d = delta(self.store, self.store.note_register_write)
        self.assertEqual(Metrics(register_writes=1), d)
        return

    def test_stale_handles(self):
        h = self.store.allocate()
        self.store.write_data(h, 1)
        self.store.free(h)
        with self.assertRaises(InvalidHandleError):
            self.store.read_data(h)
        with self.assertRaises(InvalidHandleError):
            self.store.write_next(h, h)
        with self.assertRaises(InvalidHandleError):
            self.store.free(h)

        h2 = self.store.allocate()
        with self.assertRaises(InvalidHandleError):
            self.store.read_data(h)
        with self.assertRaises(InvalidHandleError):
            self.store.read_data(NodeHandle(h2.index + 100, 0))
        with self.assertRaises(InvalidHandleError):
            self.store.read_data("not a handle")
        return

    def test_unwritten_slots(self):
        h = self.store.allocate()
        with self.assertRaises(UnwrittenSlotError):
            self.store.read_data(h)
        with self.assertRaises(UnwrittenSlotError):
            self.store.read_next(h)
        self.store.write_data(h, 1)
        self.store.write_next(h, h)
        self.store.free(h)

        h = self.store.allocate()
        with self.assertRaises(UnwrittenSlotError):
            self.store.read_data(h)
        return

    def test_fast_mode(self):
        store = NodeStore(mode="fast")
        h = store.allocate()
        store.write_data(h, 3)
        store.write_next(h, h)
        self.assertEqual(3, store.read_data(h))
        self.assertEqual(h, store.read_next(h))
        self.assertEqual(Metrics(allocations=1, data_writes=1, link_writes=1), store.snapshot())
        return

    def test_reset_and_balance(self):
        handles = [self.store.allocate() for _ in range(3)]
        self.assertEqual(3, self.store.peak_live)
        self.store.free(handles.pop())
        self.store.check_balance()
        self.store.reset_metrics()
        self.assertEqual(Metrics(), self.store.metrics)
        self.assertEqual(2, self.store.live_count)
        self.assertEqual(2, self.store.peak_live)
        self.store.check_balance()
        self.store.free(handles.pop())
        self.store.check_balance()
        self.assertEqual(Metrics(deallocations=1), self.store.snapshot())

        self.store.live_count += 1
        with self.assertRaises(InvariantError):
            self.store.check_balance()
        return

    def test_snapshot_is_a_copy(self):
        snapshot = self.store.snapshot()
        self.store.allocate()
        self.assertEqual(0, snapshot.allocations)
        return

    def test_walk(self):
        a = self.store.allocate()
        b = self.store.allocate()
        self.store.write_next(a, b)
        self.store.write_next(b, a)
        self.assertListEqual([a], list(walk(self.store, a, b, 5)))
        self.assertListEqual([], list(walk(self.store, a, a, 5)))
        with self.assertRaises(InvariantError):
            list(walk(self.store, a, NodeHandle(99, 0), 10))
        return


class TestMetrics(unittest.TestCase):
    def test_arithmetic(self):
        a = Metrics(1, 2, 3, 4, 5, 6)
        b = Metrics(allocations=1, comparisons=1)
        self.assertEqual(Metrics(0, 2, 3, 4, 5, 5), a - b)
        self.assertEqual(Metrics(2, 2, 3, 4, 5, 7), a + b)
        self.assertTupleEqual((1, 2, 3, 4, 5, 6), a.as_tuple())
        self.assertListEqual(list(constants.METRIC_FIELDS), list(a.as_dict()))
        self.assertEqual(a, a.copy())
        self.assertIsNot(a, a.copy())
        return


class TestVariants(unittest.TestCase):
    def test_registry(self):
        self.assertIs(BlankNodeQueue, get_variant("blank"))
        self.assertIs(LazyCircularQueue, get_variant(LazyCircularQueue))
        self.assertSetEqual({"header", "blank", "circular", "lazy"}, set(queue_variants))
        self.assertIn("stack", all_variants)
        with self.assertRaises(ValueError):
            get_variant("skiplist")
        with self.assertRaises(ValueError):
            get_variant(int)
        return

    def test_accepts(self):
        self.assertTrue(CircularDeque.accepts("BFPQE"))
        self.assertFalse(BlankNodeQueue.accepts("BF"))
        self.assertTrue(LinkedStack.accepts("FP"))
        self.assertFalse(LinkedStack.accepts("B"))
        return

    def test_str(self):
        store = NodeStore()
        q = BlankNodeQueue(store)
        self.assertTrue(str(q).startswith("BQ_"))
        self.assertIn("blank", repr(q))
        return

    def test_leak_balance(self):
        queue_trace = gen_random(seed=5, n=2000)
        stack_trace = gen_random(seed=5, n=2000, mix=(0.0, 0.5, 0.5))
        for variant in all_variants:
            for trace in (queue_trace, gen_burst(k=8, rounds=5)):
                if variant == "stack":
                    trace = stack_trace
                for mode in constants.STORE_MODES:
                    outcome = run_trace(variant, NodeStore(mode=mode), trace)
                    self.assertFalse(outcome.aborted)
                    self.assertEqual(0, outcome.final_live)
                    self.assertEqual(outcome.final_metrics.allocations, outcome.final_metrics.deallocations)
        return

    def test_empty_errors(self):
        store = NodeStore(mode="checked")
        for cls in all_variants.values():
            structure = cls(store)
            self.assertTrue(structure.is_empty())
            self.assertListEqual([], structure.to_list())
            remove = getattr(structure, cls.operations[constants.POP_FRONT])
            query = getattr(structure, cls.operations[constants.FRONT])
            before = store.snapshot()
            with self.assertRaises(EmptyStructureError):
                remove()
            with self.assertRaises(EmptyStructureError):
                query()
            self.assertEqual(before, store.snapshot())
            structure.check_invariants(0)
            structure.destroy()
        self.assertEqual(0, store.live_count)
        return


class TestHeaderQueue(unittest.TestCase):
    def setUp(self):
        self.store = NodeStore(mode="checked")
        self.q = HeaderQueue(self.store)
        return

    def test_new(self):
        self.assertEqual(self.q.header, self.q.rear)
        self.assertTrue(self.q.is_empty())
        self.assertEqual(1, self.store.live_count)
        self.assertEqual(Metrics(allocations=1, link_writes=1, register_writes=2), self.store.metrics)
        return

    def test_enqueue(self):
        _, d = delta(self.store, self.q.enqueue, 1)
        self.assertEqual(Metrics(allocations=1, data_writes=1, link_writes=2, register_writes=1), d)
        _, d = delta(self.store, self.q.enqueue, 2)
        self.assertEqual(Metrics(allocations=1, data_writes=1, link_writes=2, register_writes=1), d)
        self.assertListEqual([1, 2], self.q.to_list())
        self.assertEqual(3, self.store.live_count)
        self.q.check_invariants(2)
        return

    def test_dequeue(self):
        self.q.enqueue("a")
        self.q.enqueue("b")
        item, d = delta(self.store, self.q.dequeue)
        self.assertEqual("a", item)
        self.assertEqual(Metrics(deallocations=1, link_writes=1, comparisons=1), d)
        self.assertNotEqual(self.q.header, self.q.rear)

        item, d = delta(self.store, self.q.dequeue)
        self.assertEqual("b", item)
        self.assertEqual(Metrics(deallocations=1, link_writes=1, comparisons=1, register_writes=1), d)
        self.assertEqual(self.q.header, self.q.rear)
        self.assertTrue(self.q.is_empty())
        self.q.check_invariants(0)
        return

    def test_front(self):
        self.q.enqueue(5)
        value, d = delta(self.store, self.q.front)
        self.assertEqual(5, value)
        self.assertEqual(Metrics(), d)
        return

    def test_comparisons_equal_dequeues(self):
        trace = gen_burst(k=16, rounds=10)
        outcome = run_trace("header", NodeStore(), trace)
        self.assertEqual(trace.count(constants.POP_FRONT), outcome.metrics.comparisons)
        return

    def test_node_count(self):
        for i in range(10):
            self.q.enqueue(i)
            self.assertEqual(i + 2, self.store.live_count)
            self.assertEqual(self.q.node_count(i + 1), self.store.live_count)
        self.q.destroy()
        self.assertEqual(0, self.store.live_count)
        return


class TestBlankNodeQueue(unittest.TestCase):
    def setUp(self):
        self.store = NodeStore(mode="checked")
        self.q = BlankNodeQueue(self.store)
        return

    def test_new(self):
        self.assertEqual(self.q.left, self.q.right)
        self.assertTrue(self.q.is_empty())
        self.assertEqual(1, self.store.live_count)
        self.assertEqual(Metrics(allocations=1, register_writes=2), self.store.metrics)
        return

    def test_one_element(self):
        self.q.enqueue(42)
        self.assertEqual(self.q.right, self.store.read_next(self.q.left))
        self.assertFalse(self.q.is_empty())
        self.assertEqual(42, self.q.front())
        self.assertEqual(2, self.store.live_count)
        self.q.check_invariants(1)
        return

    def test_step_profile(self):
        enqueue_delta = Metrics(allocations=1, data_writes=1, link_writes=1, register_writes=1)
        dequeue_delta = Metrics(deallocations=1, register_writes=1)
        trace = gen_random(seed=11, n=10**4)
        expected = []
        for op in trace:
            if op.code == constants.PUSH_BACK:
                _, d = delta(self.store, self.q.enqueue, op.value)
                self.assertEqual(enqueue_delta, d)
                expected.append(op.value)
            else:
                item, d = delta(self.store, self.q.dequeue)
                self.assertEqual(dequeue_delta, d)
                self.assertEqual(expected.pop(0), item)
            self.assertEqual(len(expected) + 1, self.store.live_count)
        self.assertListEqual(expected, self.q.to_list())
        return

    def test_no_comparisons(self):
        trace = gen_burst(k=64, rounds=20)
        outcome = run_trace("blank", NodeStore(), trace)
        self.assertEqual(0, outcome.metrics.comparisons)
        return

    def test_drain_to_empty(self):
        for i in range(3):
            self.q.enqueue(i)
        for i in range(3):
            self.assertEqual(i, self.q.dequeue())
        self.assertEqual(self.q.left, self.q.right)
        self.assertEqual(1, self.store.live_count)
        self.q.destroy()
        self.assertEqual(0, self.store.live_count)
        return


class TestCircularDeque(unittest.TestCase):
    def setUp(self):
        self.store = NodeStore(mode="checked")
        self.d = CircularDeque(self.store)
        return

    def test_new(self):
        self.assertEqual(self.d.right, self.store.read_next(self.d.right))
        self.assertTrue(self.d.is_empty())
        self.assertEqual(Metrics(allocations=1, link_writes=1, register_writes=1), self.store.metrics)
        return

    def test_step_profile(self):
        _, d = delta(self.store, self.d.push_back, 1)
        self.assertEqual(Metrics(allocations=1, data_writes=1, link_writes=2, register_writes=1), d)
        _, d = delta(self.store, self.d.push_front, 0)
        self.assertEqual(Metrics(allocations=1, data_writes=1, link_writes=2), d)
        item, d = delta(self.store, self.d.pop_front)
        self.assertEqual(0, item)
        self.assertEqual(Metrics(deallocations=1, link_writes=1), d)
        item, d = delta(self.store, self.d.pop_front)
        self.assertEqual(1, item)
        self.assertEqual(Metrics(deallocations=1, link_writes=1), d)
        self.assertEqual(self.d.right, self.store.read_next(self.d.right))
        return

    def test_mixed_order(self):
        self.d.push_back("a")
        self.d.push_front("b")
        self.d.push_back("c")
        self.d.push_front("d")
        self.assertListEqual(["d", "b", "a", "c"], self.d.to_list())
        self.assertEqual("d", self.d.front())
        self.assertEqual(5, self.store.live_count)
        self.d.check_invariants(4)
        self.assertListEqual(["d", "b", "a", "c"], [self.d.pop_front() for _ in range(4)])
        self.assertTrue(self.d.is_empty())
        return

    def test_aliases(self):
        self.d.enqueue(1)
        self.d.push(2)
        self.assertEqual(2, self.d.pop())
        self.assertEqual(1, self.d.dequeue())
        return

    def test_push_front_on_empty(self):
        self.d.push_front(9)
        self.assertEqual(9, self.d.front())
        self.assertListEqual([9], self.d.to_list())
        self.d.push_back(10)
        self.assertListEqual([9, 10], self.d.to_list())
        return

    def test_no_comparisons(self):
        trace = gen_random(seed=2, n=5000, mix=(0.4, 0.2, 0.4))
        outcome = run_trace("circular", NodeStore(mode="checked"), trace)
        self.assertEqual(0, outcome.metrics.comparisons)
        self.assertEqual(0, outcome.final_live)
        return


class TestLazyCircularQueue(unittest.TestCase):
    def setUp(self):
        self.store = NodeStore(mode="checked")
        self.q = LazyCircularQueue(self.store)
        return

    def test_new(self):
        self.assertEqual(0, self.q.capacity())
        self.assertTrue(self.q.is_empty())
        self.assertTrue(self.q.is_full())
        self.assertEqual(1, self.store.live_count)
        return

    def test_capacity_scenario(self):
        for i in range(3):
            self.q.enqueue(i)
        self.assertEqual(0, self.q.dequeue())
        self.assertListEqual([1, 2], self.q.to_list())
        self.assertEqual(3, self.q.capacity())
        self.assertEqual(4, self.store.live_count)
        self.assertEqual(self.q.node_count(2), self.store.live_count)
        self.q.check_invariants(2)
        return

    def test_step_profile(self):
        _, d = delta(self.store, self.q.enqueue, 0)
        self.assertEqual(Metrics(allocations=1, data_writes=1, link_writes=2, register_writes=1, comparisons=1), d)
        item, d = delta(self.store, self.q.dequeue)
        self.assertEqual(0, item)
        self.assertEqual(Metrics(register_writes=1), d)
        _, d = delta(self.store, self.q.enqueue, 1)
        self.assertEqual(Metrics(data_writes=1, register_writes=1, comparisons=1), d)
        self.assertEqual(1, self.q.capacity())
        return

    def test_steady_state(self):
        for i in range(64):
            self.q.enqueue(i)
        for i in range(64):
            self.q.dequeue()
        self.assertEqual(64, self.q.capacity())
        self.store.reset_metrics()
        for i in range(5 * 10**4):
            self.q.enqueue(i)
            self.assertEqual(i, self.q.dequeue())
        metrics = self.store.snapshot()
        self.assertEqual(0, metrics.allocations)
        self.assertEqual(0, metrics.deallocations)
        self.assertEqual(10**5, metrics.register_writes)
        self.assertEqual(5 * 10**4, metrics.comparisons)
        self.assertEqual(65, self.store.live_count)
        return

    def test_capacity_never_decreases(self):
        capacities = []
        trace = gen_random(seed=4, n=3000)
        length = 0
        for op in trace:
            if op.code == constants.PUSH_BACK:
                self.q.enqueue(op.value)
                length += 1
            else:
                self.q.dequeue()
                length -= 1
            capacities.append(self.q.capacity())
            self.assertLessEqual(length, capacities[-1])
            self.assertEqual(capacities[-1] + 1, self.store.live_count)
        self.assertTrue(np.all(np.diff(capacities) >= 0))
        return

    def test_reserve(self):
        self.q.enqueue("a")
        _, d = delta(self.store, self.q.reserve, 10)
        self.assertEqual(Metrics(allocations=9, link_writes=18), d)
        self.assertEqual(10, self.q.capacity())
        _, d = delta(self.store, self.q.reserve, 5)
        self.assertEqual(Metrics(), d)
        for i in range(9):
            self.q.enqueue(i)
        self.assertEqual(10, self.q.capacity())
        self.assertListEqual(["a"] + list(range(9)), self.q.to_list())
        self.q.check_invariants(10)
        self.q.destroy()
        self.assertEqual(0, self.store.live_count)
        return

    def test_capacity_cross_check(self):
        self.q.enqueue(1)
        self.q._capacity += 1
        with self.assertRaises(InvariantError):
            self.q.capacity()
        return


class TestLinkedStack(unittest.TestCase):
    def setUp(self):
        self.store = NodeStore(mode="checked")
        self.s = LinkedStack(self.store)
        return

    def test_step_profile(self):
        _, d = delta(self.store, self.s.push, 1)
        self.assertEqual(Metrics(allocations=1, data_writes=1, link_writes=1, register_writes=1), d)
        item, d = delta(self.store, self.s.pop)
        self.assertEqual(1, item)
        self.assertEqual(Metrics(deallocations=1, register_writes=1), d)
        return

    def test_lifo(self):
        for i in range(5):
            self.s.push(i)
        self.assertListEqual([4, 3, 2, 1, 0], self.s.to_list())
        self.assertEqual(4, self.s.top())
        self.assertEqual(6, self.store.live_count)
        self.s.check_invariants(5)
        self.assertListEqual([4, 3, 2, 1, 0], [self.s.pop() for _ in range(5)])
        self.assertTrue(self.s.is_empty())
        return

    def test_trace(self):
        trace = OpTrace([Op.push_front(1), Op.push_front(2), Op.pop_front(), Op.front(), Op.is_empty()])
        outcome = run_trace("stack", NodeStore(mode="checked"), trace)
        self.assertListEqual([2, 1, False], outcome.returns)
        return
