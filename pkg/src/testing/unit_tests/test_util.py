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


import contextlib
import csv
import filecmp
import io
import json
import os.path as op
import tempfile
import unittest
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pylinked_queues import constants
from pylinked_queues.bench import parse_args, run_bench, MetricsReport
from pylinked_queues.classes import *
from pylinked_queues.util import *


class TestWriteReports(unittest.TestCase):
    def setUp(self):
        self.report = run_bench(parse_args(["--variant", "header,lazy", "--workload", "burst:k=3,rounds=2",
                                            "--reps", "2"]))
        return

    def test_to_records(self):
        records = report_to_records(self.report)
        self.assertEqual(4, len(records))
        self.assertListEqual(list(constants.REPORT_FIELDS), list(records[0]))
        self.assertEqual([0, 1, 0, 1], [r["rep"] for r in records])
        return

    def test_report_to_json(self):
        with tempfile.TemporaryDirectory() as tmpdirname:
            report_to_json(self.report, op.join(tmpdirname, "test"))
            self.assertTrue(op.exists(op.join(tmpdirname, "test.json")))
            report_to_json(self.report, op.join(tmpdirname, "test2.json"))
            self.assertTrue(op.exists(op.join(tmpdirname, "test2.json")))
            with open(op.join(tmpdirname, "test3.json"), "w") as test3:
                report_to_json(self.report, test3)
            self.assertTrue(filecmp.cmp(op.join(tmpdirname, "test.json"), op.join(tmpdirname, "test3.json"),
                                        shallow=False))
            with open(op.join(tmpdirname, "test.json")) as f:
                runs = json.load(f)
        self.assertEqual(4, len(runs))
        self.assertEqual("lazy", runs[-1]["variant"])
        return

    def test_report_to_csv(self):
        with tempfile.TemporaryDirectory() as tmpdirname:
            report_to_csv(self.report, op.join(tmpdirname, "test"))
            self.assertTrue(op.exists(op.join(tmpdirname, "test.csv")))
            report_to_csv(self.report, op.join(tmpdirname, "test2.csv"), ";")
            self.assertFalse(filecmp.cmp(op.join(tmpdirname, "test.csv"), op.join(tmpdirname, "test2.csv"),
                                         shallow=False))
            with open(op.join(tmpdirname, "test2.csv"), newline="") as f:
                rows = list(csv.reader(f, delimiter=";"))
        self.assertListEqual(list(constants.REPORT_FIELDS), rows[0])
        self.assertEqual(5, len(rows))
        return


class TestPlotReports(unittest.TestCase):
    def test_plot_report(self):
        report = run_bench(parse_args(["--variant", "all", "--workload", "ramp:max=6", "--reps", "2"]))
        fig, ax = plt.subplots()
        returned = plot_report(report, field="comparisons", ax=ax, title="Comparisons")
        self.assertIs(ax, returned)
        self.assertEqual(4, len(ax.patches))
        self.assertEqual("Comparisons", ax.get_title())
        self.assertListEqual(["header", "blank", "circular", "lazy"], [t.get_text() for t in ax.get_xticklabels()])
        with tempfile.TemporaryDirectory() as tmpdirname:
            fig.savefig(op.join(tmpdirname, "report.png"))
            self.assertTrue(op.exists(op.join(tmpdirname, "report.png")))
        plt.close(fig)
        with self.assertRaises(ValueError):
            plot_report(MetricsReport())
        return


class TestDebug(unittest.TestCase):
    def test_print_structure(self):
        store = NodeStore(mode="checked")
        q = BlankNodeQueue(store)
        q.enqueue("first")
        q.enqueue("second")
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            print_structure(q, lvl=0)
        self.assertEqual(1, len(out.getvalue().splitlines()))

        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            print_structure(q, lvl=1)
        lines = out.getvalue().splitlines()
        self.assertEqual(3, len(lines))
        self.assertIn("first", lines[1])
        self.assertIn("second", lines[2])

        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            print_structure(q, lvl=2)
        text = out.getvalue()
        self.assertIn("NodeHandle", text)
        self.assertIn("allocations: 3", text)
        self.assertIn("peak_live: 3", text)
        self.assertEqual(store.snapshot(), store.metrics)
        return
