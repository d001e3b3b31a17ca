# SPDX-FileCopyrightText: Copyright (c) 2023, NVIDIA CORPORATION & AFFILIATES. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json

import numpy as np
import pytest
from click.testing import CliRunner

from aperylab.cli import CacheEntry
from aperylab.cli import CacheKey
from aperylab.cli import RunConfig
from aperylab.cli import SequenceCache
from aperylab.cli import cli
from aperylab.cli import cmd_export
from aperylab.cli import cmd_limit
from aperylab.cli import default_cache_dir
from aperylab.cli import random_perturbation
from aperylab.cli import selftest_plan
from aperylab.holonomic import apery_pair
from aperylab.utils import InputError


APERY_RECURRENCE = {
    "shifts": [{"i": 0, "poly": ["0", "0", "0", "1"]}, {"i": 1, "poly": ["5", "-27", "51", "-34"]},
               {"i": 2, "poly": ["-1", "3", "-3", "1"]}],
    "valid_from": 1,
    "normalization": {"a_initial": ["1"], "b_initial": ["0", "1"], "b_valid_from": 2},
}

CONSTANT_RECURRENCE = {
    "shifts": [{"i": 0, "poly": ["1"]}, {"i": 1, "poly": ["-1"]}],
    "valid_from": 1,
    "normalization": {"a_initial": ["1"], "b_initial": ["0"], "b_valid_from": 1},
}


# a_n = 1 and b_n = n, so b_n / a_n never settles
LINEAR_RECURRENCE = {
    "shifts": [{"i": 0, "poly": ["1"]}, {"i": 1, "poly": ["-2"]}, {"i": 2, "poly": ["1"]}],
    "valid_from": 2,
    "normalization": {"a_initial": ["1", "1"], "b_initial": ["0", "1"], "b_valid_from": 2},
}

@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def cache_args(tmp_path):
    return ["--json", "--log_level", "ERROR", "--cache-dir", str(tmp_path / "cache"), "--num_workers", "1"]


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_run_config_validation(tmp_path):
    config = RunConfig(cache_dir=tmp_path)
    assert config.digits == 50 and config.terms == 400
    assert config.cache_dir == tmp_path
    with pytest.raises(InputError):
        RunConfig(digits=5)
    with pytest.raises(InputError):
        RunConfig(terms=9)
    with pytest.raises(InputError):
        RunConfig(output="yaml")


def test_cache_dir_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("APERYLAB_CACHE_DIR", str(tmp_path))
    assert default_cache_dir() == tmp_path
    assert RunConfig().cache_dir == tmp_path


def test_cache_reuses_prefixes(tmp_path):
    cache = SequenceCache(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return apery_pair("V12", 30)

    first = cache.get_or_compute(CacheKey("mukai", "V12", 30), compute)
    shorter = cache.get_or_compute(CacheKey("mukai", "V12", 20), compute)
    assert len(calls) == 1
    assert shorter.a == first.a[:21] and shorter.b == first.b[:21]
    assert cache.get(CacheKey("mukai", "V12", 40)) is None
    assert not list(tmp_path.glob(".tmp-*"))


def test_cache_rejects_corrupt_entries(tmp_path):
    cache = SequenceCache(tmp_path)
    key = CacheKey("mukai", "V16", 10)
    cache.put(key, apery_pair("V16", 10))
    path = tmp_path / key.filename()
    entry = json.loads(path.read_text())
    entry["payload"]["a"][3] = "123456789"
    path.write_text(json.dumps(entry))
    assert not CacheEntry.from_dict(entry).valid
    assert cache.get(key) is None


def test_limit_of_apery_recurrence(tmp_path):
    path = _write(tmp_path, "apery.json", APERY_RECURRENCE)
    report = cmd_limit(path, RunConfig(digits=30, terms=100, cache_dir=tmp_path))
    assert report["apery_recurrence"] is True
    assert report["status"] == "pass"
    digits = report["limit"]["value"]["digits"]
    # zeta(3) / 6 = 0.2003428171932...
    assert digits.startswith("2003428171932")


def test_limit_of_constant_recurrence(tmp_path):
    path = _write(tmp_path, "constant.json", CONSTANT_RECURRENCE)
    report = cmd_limit(path, RunConfig(digits=20, terms=20, cache_dir=tmp_path))
    assert report["limit"]["value"]["digits"] == "0"


def test_limit_without_convergence_fails(runner, cache_args, tmp_path):
    path = _write(tmp_path, "linear.json", LINEAR_RECURRENCE)
    report = cmd_limit(path, RunConfig(digits=20, terms=30, cache_dir=tmp_path))
    assert report["status"] == "fail"
    assert report["limit"] is None and report["reason"]
    result = runner.invoke(cli, cache_args + ["limit", str(path), "--digits", "20", "--terms", "30"])
    assert result.exit_code == 1
    assert json.loads(result.output)["status"] == "fail"


def test_limit_needs_normalization(tmp_path):
    payload = dict(APERY_RECURRENCE)
    del payload["normalization"]
    with pytest.raises(InputError):
        cmd_limit(_write(tmp_path, "bare.json", payload), RunConfig(cache_dir=tmp_path))


def test_export_round_trip(runner, cache_args, tmp_path):
    exported = tmp_path / "v10.json"
    result = runner.invoke(cli, ["export", "--variety", "V10", "--output", str(exported)])
    assert result.exit_code == 0
    assert json.loads(exported.read_text()) == json.loads(cmd_export("V10"))

    limit = runner.invoke(cli, cache_args + ["limit", str(exported), "--digits", "30", "--terms", "150"])
    constants = runner.invoke(cli, cache_args + ["constants", "--variety", "V10", "--digits", "30", "--terms", "150"])
    assert limit.exit_code == 0 and constants.exit_code == 0
    from_file = json.loads(limit.output)["limit"]["value"]["digits"]
    tabulated = json.loads(constants.output)["rows"][0]["limit"]["value"]["digits"]
    assert from_file[:25] == tabulated[:25]


def test_constants_command(runner, cache_args):
    result = runner.invoke(cli, cache_args + ["constants", "--variety", "V12", "--digits", "30", "--terms", "120"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    row = report["rows"][0]
    assert row["constant"] == "1/6 zeta(3)"
    assert row["agreement_digits"] >= 20
    assert "irrationality_delta" in row


def test_warm_cache_gives_identical_output(runner, cache_args):
    args = cache_args + ["constants", "--variety", "V18", "--digits", "20", "--terms", "100"]
    cold = runner.invoke(cli, args)
    warm = runner.invoke(cli, args)
    assert cold.exit_code == 0
    assert cold.output == warm.output


def test_modular_command(runner, cache_args):
    result = runner.invoke(cli, cache_args + ["modular", "--variety", "V12", "--order", "12", "--digits", "30"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert [r["status"] for r in report["identities"]] == ["pass", "pass"]


def test_monodromy_command_is_seeded(runner, cache_args):
    args = cache_args + ["--seed", "7", "monodromy", "--n", "5"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0, first.output
    assert first.output == second.output
    assert json.loads(first.output)["status"] == "pass"


def test_random_perturbation_is_non_resonant():
    rng = np.random.default_rng(3)
    for _ in range(20):
        e, u = random_perturbation(rng)
        assert e != 0 and u != 0 and abs(e) != abs(u)


def test_input_errors_exit_with_two(runner, cache_args):
    result = runner.invoke(cli, cache_args + ["monodromy", "--n", "5", "--e", "1/8", "--u", "-1/8"])
    assert result.exit_code == 2
    result = runner.invoke(cli, cache_args + ["constants", "--variety", "V11"])
    assert result.exit_code == 2


def test_text_output(runner, tmp_path):
    args = ["--cache-dir", str(tmp_path), "--num_workers", "1", "constants", "--variety", "V16", "--digits", "20",
            "--terms", "100"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert "V16" in result.output and "status: pass" in result.output


def test_selftest_plan(tmp_path):
    config = RunConfig(cache_dir=tmp_path, num_workers=1)
    quick = selftest_plan(config, quick=True)
    full = selftest_plan(config)
    suites = {entry[0] for entry in quick}
    assert {"recurrence", "denominators", "growth", "constants", "modular", "monodromy"} <= suites
    assert "grassmann" not in suites
    assert {entry[0] for entry in full} - suites == {"sine_ratio", "grassmann", "pac_limit", "integrality", "lefschetz"}


@pytest.mark.slow
def test_selftest_passes(runner, cache_args):
    result = runner.invoke(cli, cache_args + ["selftest"])
    report = json.loads(result.output)
    failing = [row for row in report["matrix"] if row["status"] != "pass"]
    assert result.exit_code == 0, failing
    assert set(report["suites"].values()) == {"pass"}
