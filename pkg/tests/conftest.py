import os
import sys
from pathlib import Path

import hypothesis
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semtok.bpe import train_bpe  # noqa: E402
from semtok.corpus import build_frequency_table_from_files, read_lines  # noqa: E402
from semtok.trainer import TrainerConfig, train_from_table  # noqa: E402
from semtok.vocab import Vocabulary  # noqa: E402

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ROOT = Path(__file__).resolve().parent.parent
DATA = Path(__file__).resolve().parent / "data"
MINICORPUS = ROOT / "data" / "minicorpus.txt.gz"

CONDITION_FORMS = {
    "condition": ["condit", "##ion"],
    "conditions": ["condit", "##ions"],
    "conditioning": ["condit", "##ioning"],
    "conditioned": ["condit", "##ioned"],
    "conditional": ["condit", "##ional"],
    "conditioner": ["condit", "##ioner"],
    "conditionality": ["condit", "##ionality"],
    "conditionable": ["condit", "##ionable"],
    "conditionally": ["condit", "##ionally"],
}


@pytest.fixture(scope="session")
def condition_vocab():
    tokens = ["condit"] + sorted({p[1] for p in CONDITION_FORMS.values()})
    return Vocabulary.from_segments(["[PAD]", "[UNK]"], [(t, -1.0) for t in tokens])


@pytest.fixture(scope="session")
def sample_lines():
    return (DATA / "sample.txt").read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="session")
def mini_lines():
    return list(read_lines(MINICORPUS))


@pytest.fixture(scope="session")
def mini_freq():
    return build_frequency_table_from_files([MINICORPUS])


@pytest.fixture(scope="session")
def semantic_8k(mini_freq):
    return train_from_table(mini_freq, TrainerConfig(vocab_size=8192, semantic_fraction=0.9))[0]


@pytest.fixture(scope="session")
def bpe_8k(mini_freq):
    return train_bpe(mini_freq, 8192)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
