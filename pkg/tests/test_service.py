import pytest
from fastapi.testclient import TestClient

from alphabwm.service import create_app
from conftest import load_fixture


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(threshold=0.1))


class TestHealth:
    def test_healthz(self, client):
        resp = client.get("/healthz")
        assert resp.status_code == 200
        assert resp.json() == {"ok": True}


class TestScale:
    def test_nine_ordered_entries(self, client):
        body = client.get("/api/scale").json()
        assert body["ok"]
        entries = body["result"]
        assert len(entries) == 9
        assert [e["label"] for e in entries] == [str(k) for k in range(1, 10)]
        assert {"label": "5", "tfn": [4, 5, 6]}.items() <= entries[4].items()


class TestCiTableEndpoint:
    def test_rows(self, client):
        body = client.get("/api/ci-table").json()
        rows = {r["label"]: r for r in body["result"]}
        assert rows["2"]["ci_lower"] == pytest.approx(0.5, abs=1e-3)
        assert rows["9"]["ci_lower"] == pytest.approx(5.2279, abs=1e-3)


class TestSolveEndpoint:
    def test_first_example(self, client):
        payload = dict(load_fixture("example1.json"), m=2)
        resp = client.post("/api/solve", json=payload)
        assert resp.status_code == 200
        body = resp.json()
        assert body["ok"]
        assert body["result"]["epsilon_star"] == pytest.approx(1.3945, abs=1e-3)

    def test_default_grid_is_17(self, client):
        resp = client.post("/api/solve", json=load_fixture("example1.json"))
        assert len(resp.json()["result"]["grid"]) == 17

    def test_all_ones(self, client):
        resp = client.post("/api/solve", json=dict(load_fixture("all_ones.json"),
                                                   m=3))
        body = resp.json()
        assert body["result"]["epsilon_star"] == pytest.approx(0.0, abs=1e-9)
        assert body["result"]["cr_upper"] is None

    def test_m_too_small(self, client):
        resp = client.post("/api/solve",
                           json=dict(load_fixture("example1.json"), m=1))
        assert resp.status_code == 400
        assert resp.json()["error"]["field_path"] == "m"

    def test_m_and_grid_conflict(self, client):
        resp = client.post("/api/solve",
                           json=dict(load_fixture("example1.json"), m=3,
                                     grid=[0, 1]))
        assert resp.status_code == 400

    def test_validation_field_path(self, client):
        doc = load_fixture("example1.json")
        doc["best_to_others"] = ["2", "1", "4", "2", "77"]
        resp = client.post("/api/solve", json=doc)
        assert resp.status_code == 400
        assert resp.json()["error"]["field_path"] == "best_to_others[4]"

    def test_degenerate_with_consistency_flag(self, client):
        resp = client.post("/api/solve",
                           json=dict(load_fixture("all_ones.json"), m=3,
                                     consistency=True))
        assert resp.status_code == 422

    def test_hierarchy(self, client):
        resp = client.post("/api/solve",
                           json=dict(load_fixture("supply_chain.json"), m=2))
        body = resp.json()
        assert body["ok"]
        ranks = {g["criterion"]: g["rank"]
                 for g in body["result"]["global_weights"]}
        assert ranks["c21"] == 1

    def test_matches_cli_json(self, client, capsys):
        from alphabwm.cli import main
        from conftest import fixture_path
        import json as jsonlib

        main(["solve", fixture_path("example1.json"), "--m", "2",
              "--format", "json"])
        cli_doc = jsonlib.loads(capsys.readouterr().out)
        api_doc = client.post(
            "/api/solve",
            json=dict(load_fixture("example1.json"), m=2)).json()["result"]
        assert api_doc == cli_doc


class TestConsistencyEndpoint:
    def test_second_example(self, client):
        resp = client.post("/api/consistency",
                           json=load_fixture("example2.json"))
        body = resp.json()
        assert body["ok"]
        assert body["result"]["cr_upper"] == pytest.approx(0.5120, abs=1e-3)

    def test_first_example_ci(self, client):
        body = client.post("/api/consistency",
                           json=load_fixture("example1.json")).json()
        assert body["result"]["ci_lower"] == pytest.approx(4.4688, abs=1e-3)

    def test_degenerate_has_no_cr(self, client):
        resp = client.post("/api/consistency",
                           json=load_fixture("all_ones.json"))
        assert resp.status_code == 200
        body = resp.json()
        assert body["result"]["max_cv"] == 0.0
        assert body["result"]["ci_lower"] is None

    def test_statelessness(self, client):
        payload = load_fixture("example2.json")
        first = client.post("/api/consistency", json=payload).json()
        client.post("/api/solve", json=dict(load_fixture("example1.json"), m=2))
        second = client.post("/api/consistency", json=payload).json()
        assert first == second

    def test_bad_body(self, client):
        resp = client.post("/api/consistency", json=[1, 2, 3])
        assert resp.status_code == 400
