import json
import os
from pathlib import Path

import pytest

import kbracket

DATA = Path(os.environ.get("KB_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def pd(name: str) -> str:
    return (DATA / "diagrams" / f"{name}.pd").read_text()


def test_bracket_direct():
    assert kbracket.bracket(pd("hopf")) == "-A^4 - A^-4"
    assert kbracket.bracket(pd("unknot0")) == "1"


def test_all_methods_agree_on_trefoil():
    text = pd("trefoil_left")
    values = {m: kbracket.bracket(text, method=m)
              for m in ["direct", "potts", "ribbon", "br", "smoothing", "vertex"]}
    assert len(set(values.values())) == 1
    assert values["direct"] == "A^7 - A^3 - A^-5"


def test_verify_reports_agreement():
    report = kbracket.verify(pd("figure_eight"))
    assert report["agree"] is True
    assert sorted(report["routes"]) == ["br", "direct", "potts", "ribbon", "smoothing",
                                        "vertex"]
    assert report["routes"]["direct"] == "A^8 - A^4 + 1 - A^-4 + A^-8"


def test_jones_of_unknot_diagrams():
    for name in ["unknot0", "kink_pos", "kink_neg", "unknot2"]:
        assert kbracket.jones(pd(name)) == "1"


def test_tait_then_unsign_round_trip():
    tait = kbracket.tait(pd("trefoil_left"))
    graph = json.loads(tait)
    assert len(graph["alpha"]) == 3
    unsigned = json.loads(kbracket.unsign(tait))
    assert "signs" not in unsigned
    assert len(unsigned["alpha"]) == 3


def test_br_polynomial_of_torus():
    torus = json.dumps({"sigma": [[0, 2, 1, 3]], "alpha": [[0, 1], [2, 3]]})
    assert kbracket.br_polynomial(torus) == "Y^2*Z^2 + 2*Y + 1"


def test_fk_polynomial_of_bridge():
    bridge = json.dumps({"sigma": [[0], [1]], "alpha": [[0, 1]]})
    assert kbracket.fk_polynomial(bridge) == "q^2 + q*w0"


def test_invalid_pd_raises():
    with pytest.raises(kbracket.KbracketError):
        kbracket.bracket("X 1 1 1 2")
