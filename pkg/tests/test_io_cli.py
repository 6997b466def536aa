import pytest

from helpers import OUTER_DART, biconnected_family, convex_network, general_family, triangle
from planarflow.cli import main
from planarflow.embedded import check_outerplanar, trace_faces
from planarflow.errors import ParseError
from planarflow.instance_io import Instance, format_solution, parse_instance, serialize_instance
from planarflow.network import INF

TRIANGLE = """c directed triangle
p flow 3 3
a 1 1 2 0 inf 1
a 2 2 3 0 inf 0
a 3 3 1 0 inf 2
e 1 -3 +1
e 2 -1 +2
e 3 -2 +3
o 1 R
"""


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, text, name="inst.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# -- parsing -------------------------------------------------------------------

def test_parse_triangle():
    inst = parse_instance(TRIANGLE)
    net = inst.network
    assert (net.n, net.m) == (3, 3)
    assert net.upper == [INF] * 3 and net.cost == [1, 0, 2]
    assert net.embedding.rotation == [[5, 0], [1, 2], [3, 4]]
    assert inst.outer_dart == OUTER_DART
    assert inst.comments == ["directed triangle"]


def test_serialize_is_canonical():
    assert serialize_instance(parse_instance(TRIANGLE)) == TRIANGLE


def test_round_trip_on_generated_instances():
    for net in general_family(60, seed=51) + biconnected_family(40, seed=51):
        text = serialize_instance(Instance(net, OUTER_DART if net.m > 1 else None, ["x"]))
        again = parse_instance(text)
        assert serialize_instance(again) == text
        assert again.network.balance == net.balance
        assert again.network.upper == net.upper


def test_instance_without_embedding():
    inst = parse_instance("p flow 2 1\nn 1 3\nn 2 -3\na 1 1 2 0 5 2\n")
    assert inst.network.embedding is None and inst.network.balance == [3, -3]


@pytest.mark.parametrize("text, line", [
    ("a 1 1 2 0 1 0\n", 1),
    ("p flow 2 1\np flow 2 1\n", 2),
    ("p flow 2 1\nc ok\na 1 1 3 0 1 0\n", 3),
    ("p flow 2 1\na 1 1 2 2 1 0\n", 2),
    ("p flow 2 1\na 1 1 2 0 x 0\n", 2),
    ("p flow 2 1\na 1 1 2 0 1 0\ne 1 +2\n", 3),
    ("p flow 2 1\na 1 1 2 0 1 0\no 1 X\n", 3),
    ("p flow 2 1\nz 1\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert info.value.line == line


def test_unbalanced_and_missing_arcs_rejected():
    with pytest.raises(ParseError):
        parse_instance("p flow 2 1\nn 1 1\na 1 1 2 0 1 0\n")
    with pytest.raises(ParseError):
        parse_instance("p flow 2 2\na 1 1 2 0 1 0\n")
    with pytest.raises(ParseError):
        parse_instance("p flow 2 1\na 1 1 2 0 1 0\ne 1 +1\ne 2 +1\n")


def test_format_solution():
    assert format_solution("optimal", 5, [1, 2]) == "t optimal\ns 5\nf 1 1\nf 2 2\n"
    assert format_solution("infeasible") == "t infeasible\n"


# -- solve ---------------------------------------------------------------------

@pytest.mark.parametrize("extra", [[], ["--reference"]])
def test_solve_triangle(tmp_path, capsys, extra):
    code, out, _ = run(["solve", write(tmp_path, TRIANGLE), "--certify", *extra], capsys)
    assert code == 0
    assert out.splitlines()[:2] == ["t optimal", "s 0"]
    assert "c certificate: ok" in out


def test_solve_bridge_overload(tmp_path, capsys):
    arcs = [(0, 1), (1, 2), (2, 0), (2, 3)]
    data = [(0, 9, 0)] * 3 + [(0, 2, 0)]
    net = convex_network(4, arcs, data, balance=[3, 0, 0, -3])
    path = write(tmp_path, serialize_instance(Instance(net, OUTER_DART)))
    code, out, _ = run(["solve", path], capsys)
    assert code == 2 and out == "t infeasible\n"


def test_solve_unbounded(tmp_path, capsys):
    net = triangle(costs=(1, 1, -5))
    path = write(tmp_path, serialize_instance(Instance(net, OUTER_DART)))
    code, out, _ = run(["solve", path, "--oracle"], capsys)
    assert code == 3 and out.splitlines() == ["t unbounded", "c oracle: match"]


def test_solve_generated_with_oracle(tmp_path, capsys):
    for seed in range(5):
        code, text, _ = run(["gen", "--n", "30", "--lower-bounds", "--feasible",
                             "--seed", str(seed)], capsys)
        path = write(tmp_path, text)
        code, out, _ = run(["solve", path, "--oracle", "--certify"], capsys)
        assert code in (0, 2, 3)
        assert "c oracle: match" in out


def test_solve_parse_error_exits_one(tmp_path, capsys):
    code, _, err = run(["solve", write(tmp_path, "p flow 2 1\nbad\n")], capsys)
    assert code == 1 and "line 2" in err


def test_solve_needs_embedding(tmp_path, capsys):
    code, _, err = run(["solve", write(tmp_path, "p flow 2 1\na 1 1 2 0 5 2\n")], capsys)
    assert code == 1 and "embedding" in err


def test_missing_file_exits_one(tmp_path, capsys):
    assert run(["solve", str(tmp_path / "nope")], capsys)[0] == 1


def test_usage_error_exits_one(capsys):
    assert run(["frobnicate"], capsys)[0] == 1


# -- dualize -------------------------------------------------------------------

def dualize(net, tmp_path, capsys):
    path = write(tmp_path, serialize_instance(Instance(net)))
    code, out, err = run(["dualize", path], capsys)
    return code, out, err


def test_dualize_uncapacitated(tmp_path, capsys):
    code, out, _ = dualize(triangle(costs=(1, 2, 3)), tmp_path, capsys)
    dual = parse_instance(out).network
    assert code == 0 and dual.m == 3 and dual.n == 2
    assert sorted(dual.balance) == [-6, 6]


def test_dualize_finite_capacities(tmp_path, capsys):
    for net in biconnected_family(20, seed=52, balance="zero", inf_prob=0.0):
        code, out, _ = dualize(net, tmp_path, capsys)
        inst = parse_instance(out)
        dual = inst.network
        assert code == 0 and dual.m == 2 * net.m and sum(dual.balance) == 0
        assert sum(1 for c in inst.comments if c.startswith("map ")) == dual.m
        assert dual.n - dual.m + len(trace_faces(dual.embedding).faces) == 2
        assert serialize_instance(inst) == out


def test_dualize_rejects_flow_instance(tmp_path, capsys):
    net = triangle(balance=(1, -1, 0))
    code, _, err = dualize(net, tmp_path, capsys)
    assert code == 1 and "circulation" in err


# -- gen -----------------------------------------------------------------------

def test_gen_triangle(capsys):
    code, out, _ = run(["gen", "--n", "3", "--chords", "0"], capsys)
    net = parse_instance(out).network
    assert code == 0 and sorted(zip(net.tails, net.heads)) == [(0, 1), (1, 2), (2, 0)]


def test_gen_is_deterministic(capsys):
    argv = ["gen", "--n", "25", "--balanced", "--lower-bounds", "--seed", "7"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]
    assert run(argv, capsys)[1] != run([*argv[:-1], "8"], capsys)[1]


def test_gen_output_is_outerplanar(capsys):
    for seed in range(20):
        for mode in ([], ["--balanced"], ["--feasible"]):
            _, out, _ = run(["gen", "--n", "15", "--seed", str(seed), *mode], capsys)
            inst = parse_instance(out)
            g = inst.network.embedding
            faces = trace_faces(g)
            assert check_outerplanar(g, faces) is not None
            assert len(faces.face_vertices(g, faces.face_of[inst.outer_dart])) == g.n
            assert sum(inst.network.balance) == 0


@pytest.mark.parametrize("argv", [["gen", "--n", "2"], ["gen", "--n", "5", "--chords", "3"]])
def test_gen_flag_validation(capsys, argv):
    assert run(argv, capsys)[0] == 1


# -- bench ---------------------------------------------------------------------

def test_bench_rows(capsys):
    code, out, _ = run(["bench", "--sizes", "64", "128", "--repeats", "2"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,m,median_solve_ns,oracle_ns,certificate_ok"
    rows = [line.split(",") for line in lines[1:]]
    assert [r[0] for r in rows] == ["64", "128"]
    assert all(r[4] == "true" and r[3] for r in rows)


def test_bench_rejects_descending_sizes(capsys):
    assert run(["bench", "--sizes", "128", "64"], capsys)[0] == 1
