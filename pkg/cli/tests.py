import json
from io import StringIO
from unittest.mock import patch

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase, override_settings


def run(*args):
    out = StringIO()
    call_command("nsgap", *args, stdout=out)
    return out.getvalue()


class QueryCommandsTestCase(SimpleTestCase):
    """
    Read-only commands on the worked examples <5, 7>, <3, 5> and <4, 5, 11>.

    JSON output is compared byte for byte where key order matters.
    """

    def test_ed_json(self):
        output = run("ed", "--gens", "5,7", "--mod", "6", "--format", "json")
        self.assertEqual(
            output,
            '{"m":6,"evenly_distributed":true,"route":"direct","generators":[5,7],"witness":null}\n',
        )

    def test_ed_witness_and_routes(self):
        payload = json.loads(run("ed", "--gens", "5,7", "--mod", "12"))
        self.assertFalse(payload["evenly_distributed"])
        self.assertEqual(payload["witness"], [0, 1])

        payload = json.loads(run("ed", "--gens", "4,5,11", "--mod", "5", "--route", "apery"))
        self.assertEqual(payload["route"], "apery")
        self.assertEqual(payload["base"], 4)
        self.assertFalse(payload["evenly_distributed"])

        payload = json.loads(run("ed", "--two", "5,7", "--mod", "6", "--route", "closed_form"))
        self.assertTrue(payload["evenly_distributed"])
        self.assertEqual(payload["cases"], [3])

    def test_ed_tsv(self):
        output = run("ed", "--gens", "5,7", "--mod", "6", "--format", "tsv")
        self.assertEqual(output, "m\tevenly_distributed\troute\twitness\n6\ttrue\tdirect\t\n")

    def test_ed_all(self):
        self.assertEqual(run("ed-all", "--gens", "4,5,11"), '{"all_m":false,"moduli":[1]}\n')
        self.assertEqual(
            json.loads(run("ed-all", "--gens", "5,7"))["moduli"], [1, 2, 3, 4, 6]
        )
        self.assertEqual(run("ed-all", "--gens", "1"), '{"all_m":true}\n')
        self.assertEqual(run("ed-all", "--gens", "4,5,11", "--format", "tsv"), "m\n1\n")

    def test_info(self):
        payload = json.loads(run("info", "--gens", "7,5"))
        self.assertEqual(
            payload,
            {
                "generators": [5, 7],
                "multiplicity": 5,
                "embedding_dimension": 2,
                "med": False,
                "genus": 12,
                "frobenius": 23,
                "apery": [0, 21, 7, 28, 14],
                "alternating_gap_sum": 0,
            },
        )

    def test_apery(self):
        self.assertEqual(
            run("apery", "--gens", "3,5", "--rel", "5"),
            '{"relative_to":5,"elements":[0,6,12,3,9]}\n',
        )
        self.assertEqual(
            run("apery", "--gens", "3,5", "--rel", "3", "--format", "tsv"),
            "residue\telement\n0\t0\n1\t10\n2\t5\n",
        )

    def test_gaps(self):
        payload = json.loads(run("gaps", "--arith", "3,1"))
        self.assertEqual(payload, {"genus": 2, "frobenius": 2, "gaps": [1, 2]})

    @override_settings(NSGAP_GAP_OUTPUT_LIMIT=3)
    def test_gaps_truncation(self):
        payload = json.loads(run("gaps", "--gens", "5,7"))
        self.assertEqual(payload["gaps"], [1, 2, 3])
        self.assertTrue(payload["truncated"])
        self.assertEqual(payload["total"], 12)
        self.assertEqual(
            run("gaps", "--gens", "5,7", "--format", "tsv"), "gap\n1\n2\n3\n# truncated\n"
        )

    def test_classify(self):
        payload = json.loads(run("classify", "--two", "5,7"))
        self.assertEqual(payload["family"], "embdim2")
        self.assertEqual(payload["parameters"], {"a": 5, "b": 7})
        self.assertEqual(payload["condition"], "gcd(35, m) = 1 and (5 = 1 or 7 = 1 mod m)")

        payload = json.loads(run("classify", "--genarith", "3,3,4"))
        self.assertEqual(payload["family"], "gen_arith_med")
        self.assertEqual(payload["parameters"], {"a": 3, "h": 3, "d": 4})

        payload = json.loads(run("classify", "--gens", "4,5,11"))
        self.assertEqual(payload, {"family": "other", "parameters": {}, "condition": None})


class CommandErrorsTestCase(SimpleTestCase):
    def test_gcd_not_one(self):
        with self.assertRaises(CommandError) as ctx:
            run("info", "--gens", "4,6")
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn("gcd of generators is 2, not 1", str(ctx.exception))

    def test_domain_errors(self):
        for args in (
            ("apery", "--gens", "3,5", "--rel", "4"),
            ("gaps", "--gens", "0,3"),
            ("info", "--two", "4,6"),
            ("ed", "--gens", "4,5,11", "--mod", "5", "--route", "closed_form"),
        ):
            with self.assertRaises(CommandError) as ctx:
                run(*args)
            self.assertEqual(ctx.exception.returncode, 1)

    def test_family_shorthands_are_validated(self):
        for args in (
            ("info", "--genarith", "3,0,2"),
            ("info", "--genarith", "2,1,3"),
            ("info", "--genarith", "4,1,2"),
            ("info", "--arith", "1,4"),
        ):
            with self.assertRaises(CommandError) as ctx:
                run(*args)
            self.assertEqual(ctx.exception.returncode, 1)
            self.assertIn("generalized arithmetic family", str(ctx.exception))

    def test_usage_errors(self):
        for args in (
            ("ed", "--gens", "5,x", "--mod", "6"),
            ("ed", "--gens", "5,7"),
            ("ed", "--gens", "5,7", "--two", "5,7", "--mod", "6"),
            ("ed", "--two", "5,7,9", "--mod", "6"),
            ("ed", "--gens", "5,7", "--mod", "0"),
            ("ed", "--gens", "5,7", "--mod", "-3"),
            ("verify", "nonsense"),
        ):
            with self.assertRaises(CommandError):
                run(*args)


class VerifyCommandTestCase(SimpleTestCase):
    """`verify` output is reproducible unless --timing is given; mismatches exit with 3."""

    def test_emb2(self):
        payload = json.loads(run("verify", "emb2", "--max-b", "40"))
        self.assertEqual(payload["sweep_name"], "emb2")
        self.assertEqual(payload["mismatch_count"], 0)
        self.assertTrue(payload["passed"])
        self.assertNotIn("elapsed_ms", payload)

    def test_tsv(self):
        self.assertEqual(
            run("verify", "emb2", "--max-b", "3", "--format", "tsv"),
            "sweep_name\tinstances_checked\tmismatch_count\nemb2\t3\t0\n",
        )

    def test_timing(self):
        payload = json.loads(run("verify", "mult2", "--max-b", "9", "--timing"))
        self.assertIn("elapsed_ms", payload)

    def test_identical_invocations(self):
        args = ("verify", "equiv", "--trials", "2", "--seed", "11")
        self.assertEqual(run(*args), run(*args))

    def test_other_sweeps(self):
        for args in (
            ("verify", "genarith", "--max-a", "4", "--max-hd", "3"),
            ("verify", "tuenter", "--trials", "5"),
            ("verify", "mult3", "--max-c", "20", "--max-m", "10"),
            ("verify", "mult2", "--max-b", "15"),
        ):
            self.assertTrue(json.loads(run(*args))["passed"])

    @patch("verification.services.closed_forms.genus_embdim2", return_value=-1)
    def test_mismatch_exit_code(self, mock_genus):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command("nsgap", "verify", "emb2", "--max-b", "3", stdout=out)
        self.assertEqual(ctx.exception.returncode, 3)
        payload = json.loads(out.getvalue())
        self.assertEqual(payload["mismatch_count"], 1)
        self.assertEqual(
            payload["mismatches"],
            [{"check": "genus", "parameters": {"a": 2, "b": 3}, "expected": -1, "got": 1}],
        )
