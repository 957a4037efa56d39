import pytest
from fastapi.testclient import TestClient

from tenab import (DisputeKind, DisputeState, OPP, PRO, TENABILITY,
                   diagnose_move, get_fixture, is_tenable)
from tenab.service import create_app


@pytest.fixture
def client():
    return TestClient(create_app())


def new_session(client, fixture="U", initial=("a",), human_role="opp",
                kind="ten", bound=None):
    body = {"framework": {"format": "fixture", "name": fixture},
            "kind": kind, "initial": list(initial), "human_role": human_role}
    if bound is not None:
        body["bound"] = bound
    return client.post("/v1/sessions", json=body)


def test_create_session(client):
    r = new_session(client)
    assert r.status_code == 201
    doc = r.json()
    assert doc["status"] == "IN_PROGRESS"
    assert doc["turn"] == "opp" == doc["human_role"]
    assert doc["pro_commit"] == ["a"] and doc["opp_commit"] == []
    assert doc["history"] == [{"player": "pro", "position": ["a"]}]
    assert set(doc["framework"]["arguments"]) == {"a", "b1", "b2", "c1", "c2"}


def test_create_with_inline_text(client):
    r = client.post("/v1/sessions", json={
        "framework": {"format": "apx",
                      "text": "arg(a). arg(b). att(b,a). att(b,b)."},
        "kind": "strong", "initial": ["a"], "human_role": "opp"})
    assert r.status_code == 201
    # b self-attacks, so Opp never has a legal move
    assert r.json()["status"] == "PRO_WON"


def test_create_errors(client):
    r = new_session(client, initial=("b1", "b2"), fixture="F")
    assert r.status_code == 400
    doc = r.json()
    assert doc["condition"] == 1 and "conflict-free" in doc["reason"]
    assert new_session(client, fixture="nope").status_code == 422
    assert new_session(client, initial=("zzz",)).status_code == 400
    r = client.post("/v1/sessions", json={"framework": {"format": "iccma",
                                                        "text": "garbage"}})
    assert r.status_code == 400
    r = client.post("/v1/sessions", json={"kind": "ten"})
    assert r.status_code == 400


def test_empty_initial_human_opp_pro_wins(client):
    r = new_session(client, fixture="S", initial=())
    assert r.status_code == 201
    assert r.json()["status"] == "PRO_WON"


def test_unknown_session(client):
    assert client.get("/v1/sessions/deadbeef").status_code == 404
    assert client.post("/v1/sessions/deadbeef/moves", json={"add": []}).status_code == 404
    assert client.get("/v1/sessions/deadbeef/hint").status_code == 404


def test_illegal_moves_cite_conditions(client):
    sid = new_session(client).json()["id"]
    r = client.post(f"/v1/sessions/{sid}/moves", json={"add": []})
    assert r.status_code == 422 and r.json()["condition"] == 3
    r = client.post(f"/v1/sessions/{sid}/moves", json={"add": ["c1"]})
    assert r.status_code == 422 and r.json()["condition"] == 5
    r = client.post(f"/v1/sessions/{sid}/moves", json={"add": ["b1", "b2"]})
    assert r.status_code == 422 and r.json()["condition"] == 1
    r = client.post(f"/v1/sessions/{sid}/moves", json={"add": ["zzz"]})
    assert r.status_code == 422 and "zzz" in r.json()["reason"]
    r = client.post(f"/v1/sessions/{sid}/moves", json={"nope": 1})
    assert r.status_code == 400
    # rejected moves never advance state
    assert client.get(f"/v1/sessions/{sid}").json()["opp_commit"] == []


def test_scripted_round_trip_on_u(client):
    """Human Opp on fixture U: the engine defends a and wins, matching the
    library-level tenability verdict."""
    u = get_fixture("U").framework
    sid = new_session(client).json()["id"]
    r = client.post(f"/v1/sessions/{sid}/moves", json={"add": ["b1"]})
    assert r.status_code == 200
    doc = r.json()
    pro = set(doc["pro_commit"])
    assert {"a", "c1"} <= pro or {"a", "c2"} <= pro
    # Opp is now stuck: the game is over with the engine (Pro) winning
    assert doc["status"] == "PRO_WON"
    want_pro = is_tenable(u, u.set_of("a"))
    assert (doc["status"] == "PRO_WON") == want_pro
    # moves on a finished session are refused
    r = client.post(f"/v1/sessions/{sid}/moves", json={"add": ["b2"]})
    assert r.status_code == 409
    assert client.get(f"/v1/sessions/{sid}/hint").status_code == 409


def test_sim_simultaneous_attack_wins(client):
    sid = new_session(client, fixture="SIM").json()["id"]
    r = client.post(f"/v1/sessions/{sid}/moves", json={"add": ["b1", "b2"]})
    assert r.status_code == 200
    assert r.json()["status"] == "OPP_WON"


def test_human_pro_gets_engine_opening(client):
    r = new_session(client, human_role="pro")
    doc = r.json()
    assert doc["status"] == "IN_PROGRESS" and doc["turn"] == "pro"
    assert len(doc["history"]) == 2 and doc["history"][1]["player"] == "opp"
    assert doc["opp_commit"]


def test_hint(client):
    sid = new_session(client).json()["id"]
    r = client.get(f"/v1/sessions/{sid}/hint")
    assert r.status_code == 200
    doc = r.json()
    assert set(doc["suggested"]) <= {"b1", "b2", "c1", "c2"}
    assert doc["winner_if_optimal"] == "pro"
    # the hint never mutates state
    assert client.get(f"/v1/sessions/{sid}").json()["opp_commit"] == []


def test_replay_determinism(client):
    sid = new_session(client, fixture="F_7", kind="strong").json()["id"]
    client.post(f"/v1/sessions/{sid}/moves", json={"add": ["b1"]})
    doc = client.get(f"/v1/sessions/{sid}").json()
    assert doc == client.get(f"/v1/sessions/{sid}").json()
    fw = get_fixture("F_7").framework
    state = DisputeState(fw.set_of(*doc["history"][0]["position"]),
                         fw.empty_set(), "opp", 1)
    kind = DisputeKind("strong")
    for entry in doc["history"][1:]:
        new = fw.set_of(*entry["position"])
        base = state.pro_commit if entry["player"] == "pro" else state.opp_commit
        ok, _, _ = diagnose_move(fw, state, kind, new.mask & ~base.mask)
        assert ok
        if entry["player"] == "pro":
            state = DisputeState(new, state.opp_commit, "opp", state.move_index + 1)
        else:
            state = DisputeState(state.pro_commit, new, "pro", state.move_index + 1)
    assert state.pro_commit.labels() == doc["pro_commit"]
    assert state.opp_commit.labels() == doc["opp_commit"]


def test_fixtures_endpoint(client):
    doc = client.get("/v1/fixtures").json()
    names = [f["name"] for f in doc["fixtures"]]
    assert "F_7" in names and "U" in names
    u = next(f for f in doc["fixtures"] if f["name"] == "U")
    assert u["designated"] == "a"
    assert ["b1", "a"] in u["attacks"]
    assert u["dot"].startswith("digraph")


def test_budget_maps_to_503():
    client = TestClient(create_app(budget=2))
    sid = new_session(client, fixture="F_7").json()["id"]
    r = client.post(f"/v1/sessions/{sid}/moves", json={"add": ["b1"]})
    assert r.status_code == 503
    assert r.json()["code"] == "budget_exceeded" and "2" in r.json()["reason"]


def test_lru_eviction():
    client = TestClient(create_app(session_cap=2))
    first = new_session(client).json()["id"]
    second = new_session(client).json()["id"]
    third = new_session(client).json()["id"]
    assert client.get(f"/v1/sessions/{first}").status_code == 404
    assert client.get(f"/v1/sessions/{second}").status_code == 200
    assert client.get(f"/v1/sessions/{third}").status_code == 200
