from __future__ import annotations

import json
import os
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path
from unittest import mock

from support import SRC, run_cli  # noqa: F401

from grunskybounds.config_ops import build_run_config, load_settings_file
from grunskybounds.errors import UsageError
from grunskybounds.parser import build_parser


def config_for(*argv: str):
    return build_run_config(build_parser().parse_args(list(argv)))


class RunConfigTests(unittest.TestCase):
    def setUp(self) -> None:
        patcher = mock.patch.dict(os.environ, {}, clear=False)
        patcher.start()
        self.addCleanup(patcher.stop)
        os.environ.pop("GRUNSKY_BOX_CAP", None)

    def test_defaults(self) -> None:
        config = config_for("bound", "--target", "gamma3")
        self.assertEqual(config.method, "newton")
        self.assertEqual(config.eps, 1e-6)
        self.assertEqual(config.tol, 1e-10)
        self.assertEqual(config.box_cap, 10_000_000)
        self.assertEqual((config.nx, config.ny), (201, 201))
        self.assertEqual(config.format, "text")
        self.assertIsNone(config.output)
        self.assertFalse(config.quiet)

    def test_precedence(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "settings.yaml"
            path.write_text("eps: 1.0e-4\nbox_cap: 100\nmethod: certified\n", encoding="utf-8")
            from_file = config_for("--config", str(path), "bound", "--target", "h22")
            self.assertEqual((from_file.eps, from_file.box_cap, from_file.method), (1e-4, 100, "certified"))

            os.environ["GRUNSKY_BOX_CAP"] = "200"
            from_env = config_for("--config", str(path), "bound", "--target", "h22")
            self.assertEqual(from_env.box_cap, 200)

            from_flags = config_for("--config", str(path), "bound", "--target", "h22", "--box-cap", "300", "--eps", "1e-5")
            self.assertEqual((from_flags.box_cap, from_flags.eps, from_flags.method), (300, 1e-5, "certified"))

    def test_json_settings(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "settings.json"
            path.write_text(json.dumps({"order": 12, "cap": 11, "format": "json"}), encoding="utf-8")
            config = config_for("--config", str(path), "series", "--fn", "koebe")
            self.assertEqual((config.order, config.cap, config.format), (12, 11, "json"))

    def test_empty_yaml(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "settings.yml"
            path.write_text("", encoding="utf-8")
            self.assertEqual(load_settings_file(path), {})

    def test_custom_coefficients(self) -> None:
        config = config_for("series", "--fn", "custom", "--coeffs", "0, 1, 3/4, -2")
        self.assertEqual(config.coeffs, [Fraction(0), Fraction(1), Fraction(3, 4), Fraction(-2)])
        self.assertIsNone(config_for("series", "--fn", "koebe").coeffs)

    def test_invalid_settings(self) -> None:
        cases = {
            "unknown.yaml": "depth: 3\n",
            "float_order.yaml": "order: 10.5\n",
            "string_eps.yaml": "eps: small\n",
            "bool_cap.yaml": "box_cap: true\n",
            "list.yaml": "- 1\n- 2\n",
            "broken.json": "{",
            "settings.toml": "order = 10\n",
        }
        with tempfile.TemporaryDirectory() as tmp:
            for name, text in cases.items():
                path = Path(tmp) / name
                path.write_text(text, encoding="utf-8")
                with self.assertRaises(UsageError, msg=name):
                    load_settings_file(path)
            with self.assertRaises(UsageError):
                load_settings_file(Path(tmp) / "missing.yaml")

    def test_validation(self) -> None:
        with self.assertRaises(UsageError):
            config_for("bound", "--target", "gamma3", "--eps", "0")
        with self.assertRaises(UsageError):
            config_for("series", "--fn", "koebe", "--order", "70")
        os.environ["GRUNSKY_BOX_CAP"] = "lots"
        with self.assertRaises(UsageError):
            config_for("bound", "--target", "gamma3")


class ConfigCliTests(unittest.TestCase):
    def test_yaml_settings_drive_series(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            cwd = Path(tmp)
            (cwd / "run.yaml").write_text("order: 6\nformat: json\n", encoding="utf-8")
            result = run_cli(cwd, "--config", "run.yaml", "series", "--fn", "koebe")
            self.assertEqual(result.returncode, 0, result.stderr)
            self.assertEqual(json.loads(result.stdout)["order"], 6)

            override = run_cli(cwd, "--config", "run.yaml", "series", "--fn", "koebe", "--order", "7")
            self.assertEqual(json.loads(override.stdout)["order"], 7)

    def test_unknown_key_exits_2(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            cwd = Path(tmp)
            (cwd / "run.yaml").write_text("colour: blue\n", encoding="utf-8")
            result = run_cli(cwd, "--config", "run.yaml", "verify", "--fn", "koebe")
            self.assertEqual(result.returncode, 2)
            self.assertIn("colour", result.stderr)

    def test_settings_format_checked_per_command(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            cwd = Path(tmp)
            (cwd / "run.json").write_text(json.dumps({"format": "csv"}), encoding="utf-8")
            result = run_cli(cwd, "--config", "run.json", "verify", "--fn", "koebe")
            self.assertEqual(result.returncode, 2)
            self.assertIn("output format", result.stderr)


if __name__ == "__main__":
    unittest.main()
