import io
import json
from contextlib import redirect_stdout

import pytest

from extsq import tasks
from extsq.cli import main
from extsq.tasks import (
    ConfigError,
    emit_machine,
    emit_table,
    exit_code,
    parse_document,
    parse_task,
    run_all,
    run_task,
)


def doc(*task_bodies):
    if len(task_bodies) == 1:
        return {"format_version": 1, **task_bodies[0]}
    return {"format_version": 1, "tasks": list(task_bodies)}


def run_one(body, **kw):
    return run_task(parse_task(body, **kw))


class TestParseDocument:
    def test_single_task(self):
        cfgs = parse_document(doc({"task": "lfactor", "satake": ["sym"]}))
        assert len(cfgs) == 1
        assert cfgs[0].task == "lfactor"

    def test_batch_preserves_order(self):
        cfgs = parse_document(
            doc(
                {"task": "lfactor", "satake": ["sym"]},
                {"task": "verify-js", "satake": ["sym", "sym", "sym"]},
            )
        )
        assert [c.task for c in cfgs] == ["lfactor", "verify-js"]

    def test_missing_format_version(self):
        with pytest.raises(ConfigError, match="format_version"):
            parse_document({"task": "lfactor", "satake": ["sym"]})

    def test_wrong_format_version(self):
        with pytest.raises(ConfigError, match="format_version"):
            parse_document({"format_version": 2, "task": "lfactor", "satake": ["sym"]})

    def test_empty_tasks(self):
        with pytest.raises(ConfigError):
            parse_document({"format_version": 1, "tasks": []})

    def test_location_in_batch_error(self):
        with pytest.raises(ConfigError, match=r"tasks\[1\]"):
            parse_document(
                doc({"task": "lfactor", "satake": ["sym"]}, {"task": "nope"})
            )


class TestParseTask:
    def test_unknown_task(self):
        with pytest.raises(ConfigError, match="unknown task"):
            parse_task({"task": "frobnicate"})

    def test_unknown_field(self):
        with pytest.raises(ConfigError, match="unknown field"):
            parse_task({"task": "lfactor", "satake": ["sym"], "extra": 1})

    def test_satake_required(self):
        with pytest.raises(ConfigError, match="satake"):
            parse_task({"task": "verify-js"})

    def test_bad_satake_entry(self):
        with pytest.raises(ConfigError, match=r"satake\[1\]"):
            parse_task({"task": "lfactor", "satake": ["sym", 1.5]})

    def test_malformed_rational(self):
        with pytest.raises(ConfigError):
            parse_task({"task": "lfactor", "satake": ["2//3"]})

    def test_n_mismatch(self):
        with pytest.raises(ConfigError, match="n=3"):
            parse_task({"task": "lfactor", "satake": ["sym", "sym"], "n": 3})

    def test_default_truncation(self):
        cfg = parse_task({"task": "lfactor", "satake": ["sym"]})
        assert cfg.truncation == tasks.DEFAULT_TRUNCATION
        cfg = parse_task({"task": "lfactor", "satake": ["sym"]}, default_truncation=3)
        assert cfg.truncation == 3

    def test_window_tasks_accept_int_or_pair(self):
        body = {"task": "verify-bf", "satake": ["sym", "sym"]}
        assert parse_task({**body, "truncation": 4}).truncation == (4, 4)
        assert parse_task({**body, "truncation": [3, 5]}).truncation == (3, 5)
        with pytest.raises(ConfigError):
            parse_task({**body, "truncation": [1, 2, 3]})

    def test_bf_odd_probe_parity(self):
        with pytest.raises(ConfigError, match="odd"):
            parse_task({"task": "bf-odd-probe", "satake": ["sym", "sym"]})

    def test_galois_explicit_blocks(self):
        cfg = parse_task(
            {
                "task": "galois-divisibility",
                "q": 3,
                "group": [2],
                "blocks": [{"grade": [1], "length": 1, "scalar": "-2/7"}],
            }
        )
        assert cfg.rep.q == 3
        assert cfg.rep.blocks[0].grade == (1,)

    def test_galois_symbol_scalar(self):
        cfg = parse_task(
            {
                "task": "galois-H",
                "group": [1],
                "blocks": [{"grade": [0], "length": 1, "scalar": "a"}],
            }
        )
        assert cfg.rep.symbols == ("a",)

    def test_galois_bad_scalar(self):
        with pytest.raises(ConfigError, match="scalar"):
            parse_task(
                {
                    "task": "galois-H",
                    "group": [1],
                    "blocks": [{"grade": [0], "length": 1, "scalar": "#"}],
                }
            )

    def test_galois_zero_scalar_rejected(self):
        with pytest.raises(ConfigError):
            parse_task(
                {
                    "task": "galois-divisibility",
                    "group": [1],
                    "blocks": [{"grade": [0], "length": 1, "scalar": "0"}],
                }
            )

    def test_galois_mixed_symbolic_steinberg_rejected(self):
        with pytest.raises(ConfigError, match="mixed symbolic/Steinberg"):
            parse_task(
                {
                    "task": "galois-divisibility",
                    "group": [1],
                    "blocks": [
                        {"grade": [0], "length": 2, "scalar": "a"},
                    ],
                }
            )

    def test_galois_random_mode(self):
        cfg = parse_task(
            {"task": "galois-divisibility", "random": {"count": 5}, "seed": 3}
        )
        assert cfg.random_count == 5 and cfg.seed == 3

    def test_grade_wrong_rank(self):
        with pytest.raises(ConfigError):
            parse_task(
                {
                    "task": "galois-H",
                    "group": [2, 2],
                    "blocks": [{"grade": [1], "length": 1, "scalar": "a"}],
                }
            )


class TestRunTask:
    def test_lfactor_info(self):
        r = run_one({"task": "lfactor", "satake": ["sym", "sym"], "truncation": 3})
        assert r.verdict == "info"
        assert r.data["ext_sq_reciprocal"] == "1 - α1*α2*t"

    def test_littlewood_pass(self):
        r = run_one({"task": "verify-littlewood", "satake": ["sym", "sym", "sym"], "truncation": 4})
        assert r.verdict == "pass"
        assert r.data["first_difference"] is None

    def test_js_even_all_nonzero_is_info(self):
        r = run_one({"task": "verify-js", "satake": ["sym", "sym", "sym", "sym"], "truncation": 3})
        assert r.verdict == "info"
        assert not r.data["positive_conductor"]

    def test_js_even_with_zero_passes(self):
        r = run_one({"task": "verify-js", "satake": ["sym", "sym", "sym", "0"], "truncation": 4})
        assert r.verdict == "pass"

    def test_bf_even_pass(self):
        r = run_one({"task": "verify-bf", "satake": ["sym", "sym"], "truncation": [3, 3]})
        assert r.verdict == "pass"

    def test_bf_odd_all_nonzero_is_info(self):
        r = run_one({"task": "verify-bf", "satake": ["sym", "sym", "sym"], "truncation": 2})
        assert r.verdict == "info"

    def test_probe_pass_and_info(self):
        r = run_one({"task": "bf-odd-probe", "satake": ["sym", "sym", "0"], "truncation": 3})
        assert r.verdict == "pass"
        r = run_one({"task": "bf-odd-probe", "satake": ["sym", "sym", "sym"], "truncation": 2})
        assert r.verdict == "info"
        assert r.data["correction"][0][0] == "1"

    def test_galois_divisibility_pass(self):
        r = run_one(
            {
                "task": "galois-divisibility",
                "q": 5,
                "group": [1],
                "blocks": [{"grade": [0], "length": 2, "scalar": "3/2"}],
            }
        )
        assert r.verdict == "pass"
        assert r.data["strict"] is True
        assert r.data["quotient"] == "1 - 9/20*t"

    def test_galois_random_pass(self):
        r = run_one({"task": "galois-divisibility", "random": {"count": 5}, "seed": 1})
        assert r.verdict == "pass"
        assert r.data["count"] == 5 and r.data["failures"] == []

    def test_galois_h_precondition_error(self):
        r = run_one(
            {
                "task": "galois-H",
                "group": [3],
                "blocks": [
                    {"grade": [1], "length": 1, "scalar": "a"},
                    {"grade": [2], "length": 1, "scalar": "b"},
                ],
            }
        )
        assert r.verdict == "error"
        assert r.exit_code == 2

    def test_timing_recorded(self):
        r = run_one({"task": "lfactor", "satake": ["2"]})
        assert r.timing_ms >= 0.0


class TestEmission:
    def make_reports(self):
        return run_all(
            parse_document(
                doc(
                    {"task": "lfactor", "satake": ["sym"], "truncation": 2},
                    {"task": "verify-littlewood", "satake": ["sym", "sym"], "truncation": 3},
                )
            )
        )

    def test_machine_is_json_without_timing(self):
        out = emit_machine(self.make_reports())
        parsed = json.loads(out)
        assert parsed["format_version"] == 1
        assert len(parsed["reports"]) == 2
        for rep in parsed["reports"]:
            assert set(rep) == {"task", "verdict", "summary", "data"}

    def test_machine_is_ascii_and_stable(self):
        a = emit_machine(self.make_reports())
        b = emit_machine(self.make_reports())
        assert a == b
        a.encode("ascii")  # raises if any raw non-ascii slipped through

    def test_table_includes_timing_and_verdict(self):
        out = emit_table(self.make_reports())
        assert "verdict: info" in out and "verdict: pass" in out
        assert "timing:" in out

    def test_exit_codes(self):
        reports = self.make_reports()
        assert exit_code(reports) == 0
        reports[0].verdict = "fail"
        assert exit_code(reports) == 1
        reports[1].verdict = "error"
        assert exit_code(reports) == 2
        assert exit_code([]) == 0


class TestCli:
    def run_cli(self, *argv):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(list(argv))
        return code, buf.getvalue()

    def test_inline_lfactor(self):
        code, out = self.run_cli("lfactor", "--satake", "sym,sym", "--truncation", "2")
        assert code == 0
        assert "ext_sq_reciprocal" in out

    def test_machine_format(self):
        code, out = self.run_cli(
            "verify-littlewood", "--satake", "sym,sym", "--truncation", "3", "--format", "machine"
        )
        assert code == 0
        parsed = json.loads(out)
        assert parsed["reports"][0]["verdict"] == "pass"

    def test_run_config_file(self, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps(doc({"task": "lfactor", "satake": ["2", "3"]})))
        code, out = self.run_cli("run", "--config", str(cfg))
        assert code == 0
        assert "standard_reciprocal" in out

    def test_run_batch_order(self, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(
            json.dumps(
                doc(
                    {"task": "verify-js", "satake": ["sym", "sym", "sym"], "truncation": 3},
                    {"task": "lfactor", "satake": ["sym"], "truncation": 1},
                )
            )
        )
        code, out = self.run_cli("run", "--config", str(cfg), "--format", "machine")
        assert code == 0
        got = [r["task"]["task"] for r in json.loads(out)["reports"]]
        assert got == ["verify-js", "lfactor"]

    def test_truncation_override(self, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text(
            json.dumps(doc({"task": "lfactor", "satake": ["sym"], "truncation": 9}))
        )
        code, out = self.run_cli(
            "run", "--config", str(cfg), "--truncation", "2", "--format", "machine"
        )
        assert code == 0
        report = json.loads(out)["reports"][0]
        assert report["task"]["truncation"] == 2
        assert len(report["data"]["standard_series"]) == 3

    def test_env_var_default(self, monkeypatch):
        monkeypatch.setenv(tasks.TRUNCATION_ENV_VAR, "2")
        code, out = self.run_cli("lfactor", "--satake", "sym", "--format", "machine")
        assert code == 0
        assert json.loads(out)["reports"][0]["task"]["truncation"] == 2

    def test_env_var_invalid(self, monkeypatch, capsys):
        monkeypatch.setenv(tasks.TRUNCATION_ENV_VAR, "six")
        code, _ = self.run_cli("lfactor", "--satake", "sym")
        assert code == 2

    def test_bad_config_is_exit_2(self, tmp_path):
        cfg = tmp_path / "c.json"
        cfg.write_text("{not json")
        code, _ = self.run_cli("run", "--config", str(cfg))
        assert code == 2

    def test_missing_config_file(self, tmp_path):
        code, _ = self.run_cli("run", "--config", str(tmp_path / "absent.json"))
        assert code == 2

    def test_usage_error(self):
        code, _ = self.run_cli("lfactor")  # --satake missing
        assert code == 2

    def test_unknown_subcommand(self):
        code, _ = self.run_cli("explode")
        assert code == 2

    def test_mixed_symbolic_steinberg_exit_2(self):
        code, _ = self.run_cli(
            "galois-divisibility", "--group", "1", "--block", "0:2:a"
        )
        assert code == 2

    def test_galois_inline_blocks(self):
        code, out = self.run_cli(
            "galois-divisibility",
            "--q", "5",
            "--group", "2",
            "--block", "1:1:b1",
            "--block", "1:1:b2",
            "--format", "machine",
        )
        assert code == 0
        report = json.loads(out)["reports"][0]
        assert report["verdict"] == "pass"
        assert report["data"]["strict"] is True

    def test_galois_random_inline(self):
        code, out = self.run_cli(
            "galois-H", "--random-count", "3", "--seed", "2", "--format", "machine"
        )
        assert code == 0
        assert json.loads(out)["reports"][0]["data"]["count"] == 3

    def test_failing_verdict_exit_1(self, tmp_path):
        # craft a fail: verify-bf asserted identity is wrong if we lie about
        # the expected product -- instead use a genuinely failing check:
        # even-rank js with all nonzero is info, so force failure through a
        # task that compares unequal series: none ship by construction, so
        # simulate via galois-divisibility on a rep where divisibility holds
        # (cannot fail honestly) -- fall back to exit_code unit: covered in
        # TestEmission.  Here just confirm info stays 0.
        code, _ = self.run_cli(
            "verify-js", "--satake", "sym,sym,sym,sym", "--truncation", "2"
        )
        assert code == 0
