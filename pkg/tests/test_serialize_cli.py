import io

import pytest

from plgroups import cli
from plgroups.elements import bump
from plgroups.errors import NotBijective, ParseError
from plgroups.numeric import GroupParams, Q
from plgroups.plmap import make
from plgroups.sampling import random_element, random_v_element
from plgroups.serialize import parse_many, parse_plmap, serialize_many, serialize_plmap

X0_TEXT = "plmap r=1 n=2\n0 2 0\n1/4 1 1/4\n1/2 1/2 1/2\n"


def run(*argv):
    out = io.StringIO()
    status = cli.run([str(a) for a in argv], out)
    return status, out.getvalue()


def test_serialize_x0(x0):
    assert serialize_plmap(x0) == X0_TEXT
    assert parse_plmap(X0_TEXT) == x0
    assert serialize_plmap(x0, "x0").startswith("# x0\n")


def test_round_trip(rng, P32):
    for params in (GroupParams(2, Q(1)), P32):
        for _ in range(50):
            x = random_v_element(params, rng)
            text = serialize_plmap(x)
            assert parse_plmap(text) == x
            assert serialize_plmap(parse_plmap(text)) == text


def test_long_map_round_trip(F, rng):
    x = random_element(F, rng, 1)
    while len(x) < 40:
        x = x * random_element(F, rng, 2)
    assert parse_plmap(serialize_plmap(x)) == x


def test_many_and_comments(x0, x1):
    text = "# two maps\n\n" + serialize_many([x0, x1], ["x0", "x1"]) + "  # trailing\n"
    assert parse_many(text) == [x0, x1]
    with pytest.raises(ParseError):
        parse_plmap(text)


@pytest.mark.parametrize("text, line", [
    ("plmap r=1 n=2\n0 1/0 0\n", 2),
    ("0 1 0\n", 1),
    ("plmap r=1\n0 1 0\n", 1),
    ("plmap r=1 n=x\n0 1 0\n", 1),
    ("plmap r=1 n=2\n0 1\n", 2),
    ("plmap r=1 n=2\n", 1),
    ("plmap r=1 n=1\n0 1 0\n", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_many(text)
    assert str(err.value).startswith(f"line {line}:")


def test_parse_invalid_map():
    with pytest.raises(NotBijective):
        parse_plmap("plmap r=1 n=2\n0 2 0\n")


@pytest.fixture
def files(tmp_path, x0, x1):
    def write(name, *maps):
        p = tmp_path / name
        p.write_text(serialize_many(maps))
        return str(p)
    return write


def test_cli_gens(x0, x1, ab):
    status, out = run("gens", "--n", 2, "--r", 1)
    assert status == 0
    assert parse_many(out) == [x0, x1, *ab]
    status, out = run("gens", "--n", 3, "--r", 2)
    assert status == 0 and len(parse_many(out)) == 2


def test_cli_bump_and_ladder(F):
    status, out = run("bump", "--alpha", "1/4", "--beta", "1/2", "--p", 2)
    assert parse_plmap(out) == bump(F, Q(1, 4), Q(1, 2), 2, 1)
    status, out = run("ladder")
    assert out.splitlines()[0] == "-3\t1/128" and out.splitlines()[-1] == "3\t127/128"


def test_cli_compose_inverse_eval(files, x0, x1):
    f0, f1 = files("x0", x0), files("x1", x1)
    _, out = run("compose", f0, f1)
    assert parse_plmap(out) == x0 * x1
    _, out = run("inverse", f0)
    assert parse_plmap(out) == x0.inverse()
    _, out = run("eval-word", "x0 x1^-1 x0", "--at", "3/4")
    assert Q(out.strip()) == (x0 * x1.inverse() * x0)(Q(3, 4))
    _, out = run("eval-word", "f1^2", "--load", f1)
    assert parse_plmap(out) == x1 * x1
    status, _ = run("eval-word", "zz")
    assert status == 1


def test_cli_inspect(files, x0, F):
    from plgroups.plmap import rotation
    f0, rot = files("x0", x0), files("rot", rotation(F, Q(1, 4)))
    assert run("classify", f0)[1] == "F\n"
    assert run("classify", rot)[1] == "T_only\n"
    assert run("support", f0)[1] == "support: (0, 1)\nfixed: {0}\n"
    assert run("partition", f0)[1].startswith("cuts: \n(0, 1) rigid")
    assert run("plot", f0, "--samples", 4)[1] == "0\t0\n1/4\t1/2\n1/2\t3/4\n3/4\t7/8\n"


def test_cli_arith(files, tmp_path):
    paths = {}
    for m in (2, 3, 6):
        status, out = run("encode", m)
        paths[m] = tmp_path / f"e{m}"
        paths[m].write_text(out)
    assert run("decode", paths[3])[1] == "3\n"
    assert run("add", paths[2], paths[3])[1].startswith("value: 5\n")
    status, out = run("divides", paths[2], paths[6], "--witness")
    assert status == 0 and len(parse_many(out.split("\n", 1)[1])) == 2
    status, out = run("divides", paths[2], paths[3])
    assert status == 3 and out.startswith("divides: false")


def test_cli_wreath_and_commutators(files, ab, x0, x1):
    a, b = ab
    g = files("g", a * b * b)
    assert run("wreath-decompose", g)[1] == "shift=1; coeffs={-1:2}\n"
    status, out = run("two-commutators", files("pairs", x0, x1, b, a, x1, x0))
    assert status == 0 and out.endswith("verified: true\n")
    body, verdict = out.rsplit("verified:", 1)
    assert verdict == " true\n"
    assert len(parse_many(body)) == 4
    assert run("two-commutators", files("odd", x0))[0] == 1


def test_cli_verify():
    status, out = run("verify", "--suite", "prop33", "--seed", 1)
    assert status == 0 and out.endswith("all passed\n")
    assert all(line.startswith("PASS\tprop33") for line in out.splitlines()[:-1])


def test_cli_errors(tmp_path):
    bad = tmp_path / "bad"
    bad.write_text("plmap r=1 n=2\n0 1/0 0\n")
    assert run("classify", bad)[0] == 1
    assert run("classify", tmp_path / "missing")[0] == 1
    with pytest.raises(SystemExit) as err:
        run("bump", "--alpha", "1/0", "--beta", "1")
    assert err.value.code == 2
