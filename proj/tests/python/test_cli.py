# Copyright 2026 The Chant Authors
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
import subprocess
import wave

import pytest

CLI = os.environ.get("CHANT_CLI", "chant")

VERSE = (
    "vande gurūṇāṃ caraṇāravinde\n"
    "sandarśitasvātmasukhāvabodhe |\n"
    "janasya ye jāṅgalikāyamāne\n"
    "saṃsārahālāhalamohaśāntyai ||"
)


def run(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, timeout=120
    )


def test_units():
    r = run("units", "vande gurūṇāṃ caraṇāravinde")
    assert r.returncode == 0, r.stderr
    assert r.stdout.split() == [
        "van", "de", "gu", "rū", "ṇāṃ", "ca", "ra", "ṇā", "ra", "vin", "de",
    ]


def test_scan_reports_metre_and_weights():
    r = run("scan", VERSE)
    assert r.returncode == 0, r.stderr
    assert r.stdout.startswith("metre: Upajāti\n")
    assert "quarter 1: units=11 T_E=18 T_A=16 caesura=11" in r.stdout
    assert "quarter 3: units=11 T_E=17" in r.stdout
    assert "  v: 1 1 0 1 1 0 0 1 0 1 1\n" in r.stdout
    assert "  t: 0 1 0 1 1 0 0 1 0 0 1\n" in r.stdout


def test_stdin_and_file_input(tmp_path):
    r = run("units", stdin="ajñā")
    assert r.stdout.split() == ["a", "jñā"]
    path = tmp_path / "verse.txt"
    path.write_text(VERSE, encoding="utf-8")
    r = run("scan", str(path))
    assert r.returncode == 0 and "Upajāti" in r.stdout


def test_devanagari_flag():
    r = run("units", "--devanagari", "वन्दे")
    assert r.returncode == 0, r.stderr
    assert r.stdout.split() == ["van", "de"]


def test_synth_writes_wav(tmp_path):
    out = tmp_path / "verse.wav"
    r = run("synth", VERSE, "-o", str(out), "--no-crossfade")
    assert r.returncode == 0, r.stderr
    with wave.open(str(out)) as w:
        assert w.getnchannels() == 1
        assert w.getsampwidth() == 2
        assert w.getframerate() == 44100
        assert w.getnframes() == 75 * 22050


def test_custom_metre_db():
    r = run("scan", VERSE, "--metre-db", os.environ["CHANT_METRE_DB"])
    assert r.returncode == 0, r.stderr


@pytest.mark.parametrize(
    "args, code, message",
    [
        (("scan", "rāma x"), 1, "tokenization"),
        (("scan", "rāma\nsītā"), 1, "no matching metre"),
        (("units", "krt"), 1, "no vowel"),
        (("units", "   "), 2, "no verse"),
        (("synth", VERSE), 2, "--out"),
        (("scan", VERSE, "--beat", "-1"), 2, ""),
        (("frobnicate",), 2, ""),
    ],
)
def test_errors(args, code, message):
    r = run(*args)
    assert r.returncode == code, (r.stdout, r.stderr)
    assert message in r.stderr


def test_no_require_metre():
    r = run("scan", "rāma\nsītā", "--no-require-metre")
    assert r.returncode == 0, r.stderr
    assert r.stdout.startswith("metre: unclassified")
