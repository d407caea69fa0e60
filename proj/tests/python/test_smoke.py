# Copyright 2026 The Miniup Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
from pathlib import Path

import miniup

CORPUS = Path(os.environ.get("MINIUP_CORPUS", Path(__file__).parents[2] / "corpus"))


def test_levenshtein_matches_known_value():
    assert miniup.levenshtein("kitten", "sitting") == 3
    assert miniup.levenshtein("", "abc") == 3
    assert miniup.levenshtein("same", "same") == 0


def test_hungarian_small_matrix():
    result = miniup.hungarian([[4, 1], [2, 8]])
    assert result["pairs"] == [(0, 1), (1, 0)]
    assert result["total_cost"] == 3


def test_check_clean_and_dirty():
    clean = miniup.check(
        str(CORPUS / "clean_compatible/client"),
        str(CORPUS / "clean_compatible/libs/v2"),
    )
    assert clean == []
    dirty = miniup.check(
        str(CORPUS / "ma01_type_rename/client"),
        str(CORPUS / "ma01_type_rename/libs/v2"),
    )
    assert {e["kind"] for e in dirty} == {"UndefinedType"}
    assert all(e["subject"] == "auth.IAuthority" for e in dirty)


def test_mine_finds_the_rename():
    mappings = miniup.mine(
        str(CORPUS / "ma01_type_rename/libs/v1"),
        str(CORPUS / "ma01_type_rename/libs/v2"),
    )
    types = {m["old"]: m["new"] for m in mappings if m["kind"] == "type"}
    assert types["auth.IAuthority"] == "auth.IAuthorizer"


def test_migrate_fixture_end_to_end(tmp_path):
    result = miniup.migrate(
        str(CORPUS / "ma01_type_rename/client"),
        str(CORPUS / "ma01_type_rename/libs/v1"),
        str(CORPUS / "ma01_type_rename/libs/v2"),
        out_dir=str(tmp_path / "out"),
    )
    assert result["fully_migrated"] is True
    assert result["final_errors"] == 0
    assert [e["operator"] for e in result["edits"]] == ["MA1"]
    assert (tmp_path / "out/client/gate.ml0").exists()
    assert "IAuthorizer" in result["files"]["gate.ml0"]


def test_migrate_respects_the_whitelist():
    result = miniup.migrate(
        str(CORPUS / "multi_stub_and_getter/client"),
        str(CORPUS / "multi_stub_and_getter/libs/v1"),
        str(CORPUS / "multi_stub_and_getter/libs/v2"),
        only=["MA1"],
    )
    assert result["fully_migrated"] is False
    assert result["final_errors"] == result["initial_errors"]


def test_reprint_round_trips():
    source = "package p;\nclass A { void m() { x = y; } }\n"
    printed = miniup.reprint(source)
    assert miniup.reprint(printed) == printed
