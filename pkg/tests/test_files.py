import json

import numpy as np
import pytest

from helpers import corpus
from lipapprox import euclidean_space, greedy_maximal_separated, lipschitz_approximant, star_modulus_table
from lipapprox import files
from lipapprox.errors import FileFormatError


def test_space_round_trip(tmp_path):
    spaces = [s for _, s in corpus(21, 6, n_max=30)]
    spaces.append(files.space_from_dict({"kind": "matrix", "distances": [[0, 2], [2, 0]], "labels": ["a", "b"]}))
    for k, space in enumerate(spaces):
        path = tmp_path / f"s{k}.json"
        files.write_space(path, space)
        back = files.read_space(path)
        assert back.origin_kind == space.origin_kind
        np.testing.assert_array_equal(back.dist, space.dist)
        assert files.space_to_dict(back) == files.space_to_dict(space)
        assert files.dumps(files.space_to_dict(back)) == path.read_text()


@pytest.mark.parametrize("doc", [
    {"kind": "euclidean"},
    {"kind": "euclidean", "coords": [[0]], "distances": [[0]]},
    {"kind": "graph", "edges": []},
    {"kind": "torus", "coords": [[0]]},
    {"kind": "poincare_disk", "points": [[0, 0]], "edges": []},
])
def test_space_fields_enforced(doc):
    with pytest.raises(FileFormatError):
        files.space_from_dict(doc)


def test_malformed_json_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "matrix",\n  "distances": [[0, 1], [1, 0]\n')
    with pytest.raises(FileFormatError, match=r"bad\.json:\d+:\d+"):
        files.read_space(p)


def test_function_round_trip(tmp_path):
    p = tmp_path / "f.json"
    for values, idx in (
        (np.array([0.5, -1.25]), None),
        (np.array([1 + 2j, 3 + 0j]), None),
        (np.array([0.0, 1.0]), [4, 7]),
    ):
        files.write_function(p, values, idx)
        back, back_idx = files.read_function(p)
        np.testing.assert_array_equal(back, values)
        assert back.dtype == values.dtype
        assert (back_idx is None) == (idx is None)
    assert json.loads(p.read_text()) == {"indices": [4, 7], "values_re": [0.0, 1.0]}


def test_net_round_trip():
    space = euclidean_space([[0], [0.5], [1.0], [1.5], [2.0]])
    net = greedy_maximal_separated(space, 0.8)
    assert files.net_from_dict(json.loads(files.dumps(files.net_to_dict(net)))) == net


def test_certificate_round_trip(sqrt_grid):
    space, f = sqrt_grid
    F, cert = lipschitz_approximant(space, f, 0.1)
    doc = json.loads(files.dumps(files.certificate_to_dict(cert, F.values)))
    back, values = files.certificate_from_dict(doc)
    assert back == cert
    np.testing.assert_array_equal(values, F.values)
    assert list(doc)[:4] == ["epsilon", "mode", "c_used", "t"]


def test_modulus_table_file(sqrt_grid):
    space, f = sqrt_grid
    rows = files.modulus_table_to_list(star_modulus_table(space, f, [0.1, 5.0]))
    assert rows[0]["witness"] == [0, 40]
    assert rows[1]["delta"] is None  # no pair changes by 5
    assert files.modulus_csv(rows).splitlines()[0] == "epsilon,c_star,delta"


def test_atomic_write_leaves_no_temp(tmp_path):
    files.atomic_write_text(tmp_path / "x.txt", "hi")
    assert [p.name for p in tmp_path.iterdir()] == ["x.txt"]
