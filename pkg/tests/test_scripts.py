import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run(name, *args):
    proc = subprocess.run([sys.executable, str(SCRIPTS / name), *args],
                          capture_output=True, text=True, check=True)
    return proc.stdout


def test_corpus_tallies_json():
    doc = json.loads(run("corpus_tallies.py", "--max-size", "4", "--json"))
    assert [r["total"] for r in doc["rows"]] == [1, 2, 7]
    assert all(r["failures"] == 0 for r in doc["rows"])


def test_neg_image_counterexamples():
    out = run("neg_image_counterexamples.py", "--max-size", "5").splitlines()
    assert out[-1] == "4 algebra(s) up to size 5"
    assert out[0].startswith("rl5_002: image {0,b,c,1}")
