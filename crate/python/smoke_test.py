"""Smoke test for the `biset` extension module.

Build and install with `pip install --no-build-isolation -e crates/py`
(requires maturin), then run `python python/smoke_test.py`.
"""

import json

import biset


def main():
    assert "S3" in biset.bundled_tables()
    assert "c6_c3" in biset.bundled_scenarios()

    s3 = biset.Group.bundled("S3")
    assert s3.order == 6 and s3.num_classes() == 3 and s3.sylow_order(3) == 3
    d8 = biset.Group.from_generators(["(1,2,3,4)", "(1,3)"], name="D8")
    assert d8.order == 8 and d8.name == "D8"

    table = biset.CharacterTable.bundled("S3")
    assert table.names == ["1", "sgn", "chi2"]
    assert table.degrees == [1, 1, 2]
    again = biset.CharacterTable.from_json(table.to_json())
    assert again.to_json() == table.to_json()

    bad = json.loads(table.to_json())
    bad["characters"][1]["values"] = [1, 1, 1]
    try:
        biset.CharacterTable.from_json(json.dumps(bad))
    except ValueError:
        pass
    else:
        raise AssertionError("non-orthogonal table accepted")

    at2 = biset.blocks(table, 2)
    assert len(at2["blocks"]) == 2
    assert at2["blocks"][0]["characters"] == ["1", "sgn"]
    assert len(biset.blocks(table, 3)["blocks"]) == 1

    report = biset.run_scenario("c6_c3")
    verdict = report["verdict"]
    assert report["passed"]
    assert verdict["beta_gamma"] == 2
    assert verdict["local"]["value"] == "2"
    assert verdict["sign"]["epsilon"] == 1

    laws = biset.verify_biset_laws(seed=2, count=5, max_order=8)
    assert all(l["passed"] == l["instances"] == 5 for l in laws["laws"])

    print("smoke test passed")


if __name__ == "__main__":
    main()
