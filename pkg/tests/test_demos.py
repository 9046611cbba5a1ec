from __future__ import annotations

import runpy
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parents[1] / "demos"

EXPECTED = {
    "plot_01_graphs_and_colimits": ["effective: True", "vertical premises: True VK holds: True"],
    "plot_02_satisfaction": ["2 matches of P in G", "general: True"],
    "plot_03_restriction": ["G_A generally satisfies: True", "G_B generally satisfies: False"],
    "plot_04_amalgamation": ["glued back: True", "global and local agree: True"],
    "plot_05_law_campaign": ["thm-4.8 failures: 0"],
}


def test_every_demo_is_covered():
    assert {p.stem for p in DEMOS.glob("*.py")} == set(EXPECTED)


@pytest.mark.parametrize("stem", sorted(EXPECTED))
def test_demo_runs(stem, capsys):
    runpy.run_path(str(DEMOS / f"{stem}.py"), run_name="__main__")
    out = capsys.readouterr().out
    for line in EXPECTED[stem]:
        assert line in out
