import contextlib
import io
import json
import unittest
from unittest.mock import patch

from chamberzeta import app
from chamberzeta.commands import (RunConfig, cmd_counts, cmd_det, cmd_euler, cmd_galleries, cmd_zeta,
                                  factor_display, trace_exp_series)
from chamberzeta.closed_form import closed_count
from .samples import *

NO_ENV = "/nonexistent/chamberzeta.env"


def run_main(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = app.main(["--env-file", NO_ENV, *argv])
    return code, out.getvalue()


class TestCommands(unittest.TestCase):
    def test_counts(self):
        report = cmd_counts(RunConfig("counts", [Q2], max_n=6))
        self.assertTrue(report.ok)
        self.assertEqual([row[2] for row in report.rows], ["0", "0", "12", "0", "0", "96"])
        self.assertEqual(report.render("csv").splitlines()[0], "n,enum,trace,closed_form,agree")

    def test_zeta(self):
        report = cmd_zeta(RunConfig("zeta", [Q2], order=6))
        self.assertTrue(report.ok)
        self.assertEqual(report.results["series"], "1 + 4u^3 + 24u^6 + O(u^7)")

    def test_det_symbolic(self):
        report = cmd_det(RunConfig("det", [SYM], k=1, width=1))
        self.assertTrue(report.ok)
        self.assertEqual(report.results["determinant"], str(DET_A1))
        self.assertEqual((report.results["size"], report.results["nonzero"]), (6, 13))

    def test_det_numeric(self):
        report = cmd_det(RunConfig("det", [Q2], k=2, width=2, order=3))
        self.assertTrue(report.ok)
        self.assertEqual(report.results["inverse_zeta_truncated"], "1 - 4u^3")

    def test_euler(self):
        report = cmd_euler(RunConfig("euler", [Q2], length=6))
        self.assertTrue(report.ok)
        self.assertEqual(report.results["series"], "1 + 4u^3 + 24u^6 + O(u^7)")

    def test_galleries_list(self):
        report = cmd_galleries(RunConfig("galleries", [SYM], length=3, list_classes=True))
        self.assertTrue(report.ok)
        self.assertEqual(report.results["classes"], 1)
        self.assertEqual(len(report.results["list"]), 1)
        self.assertTrue(report.lines[0].startswith("len=3 period=3"))

    def test_trace_exp_series(self):
        traces = {n: closed_count(n, Q2) for n in range(1, 7)}
        self.assertEqual(trace_exp_series(traces, 6).to_upoly(), upoly(*ZETA_Q2[:7]))

    def test_factor_display(self):
        self.assertEqual(factor_display(upoly(1), SYM), "(1)")


class TestMain(unittest.TestCase):
    def test_ok(self):
        code, out = run_main("counts", "--q", "2", "--max-n", "3")
        self.assertEqual(code, app.EXIT_OK)
        self.assertTrue(json.loads(out)["ok"])

    def test_json_is_deterministic(self):
        self.assertEqual(run_main("zeta", "--order", "3"), run_main("zeta", "--order", "3"))

    def test_text_format(self):
        code, out = run_main("galleries", "--format", "text")
        self.assertEqual(code, app.EXIT_OK)
        self.assertEqual(out.strip().splitlines()[-1], "OK")

    def test_bad_input(self):
        for argv in (["counts", "--q", "1"], ["counts", "--q", "abc"], ["counts", "--max-n", "0"],
                     ["euler", "--length", "3", "--order", "6"], ["nope"]):
            self.assertEqual(run_main(*argv)[0], app.EXIT_BAD_INPUT, argv)

    def test_verify_vacuous(self):
        code, out = run_main("verify", "--q", "2", "--order", "1")
        self.assertEqual(code, app.EXIT_OK)
        report = json.loads(out)
        self.assertTrue(report["ok"])
        self.assertEqual(report["results"]["checks"], report["results"]["passed"])

    def test_verify_numeric_and_symbolic(self):
        code, out = run_main("verify", "--q", "2,sym", "--order", "6")
        self.assertEqual(code, app.EXIT_OK)
        report = json.loads(out)
        self.assertTrue(report["ok"])
        names = [c["name"] for c in report["checks"]]
        self.assertIn("q=2 M_{k,N} = I - uT entrywise for k, N <= 6", names)
        self.assertIn("q=sym M_{k,N} = I - uT entrywise for k, N <= 4", names)
        self.assertIn("q=2 fixed-point det(I - uT_4) to u^6", names)
        self.assertIn("q=sym limit pipeline = 1/Z", names)

    def test_verify_reports_failed_check(self):
        with patch("chamberzeta.commands.closed_count", return_value=QPoly.constant(-1)):
            code, out = run_main("verify", "--q", "2", "--order", "1")
        self.assertEqual(code, app.EXIT_CHECK_FAILED)
        self.assertFalse(json.loads(out)["ok"])

    def test_help(self):
        self.assertEqual(run_main("--help")[0], app.EXIT_OK)


if __name__ == "__main__":
    unittest.main()
