import io
import json

from canonmat import apply, format_matrix, parse_matrix
from canonmat.cli import main
from canonmat.equivalence import PermPair, Permutation
from conftest import DEMO_34, TRIO_A, TRIO_B, TRIO_C


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def write(tmp_path, name, matrix_or_text):
    path = tmp_path / name
    text = matrix_or_text if isinstance(matrix_or_text, str) else format_matrix(matrix_or_text)
    path.write_text(text)
    return str(path)


class TestEncode:
    def test_demo(self, tmp_path):
        code, out = run("encode", write(tmp_path, "a.txt", DEMO_34))
        assert code == 0
        assert out == "r = 78 36 23\nc = 16 9 53 35\n"

    def test_trio_minimum(self, tmp_path):
        code, out = run("encode", write(tmp_path, "c.txt", TRIO_C))
        assert code == 0
        assert out == "r = 1 6 45 72\nc = 5 8 18 27\n"

    def test_zero(self, tmp_path):
        code, out = run("encode", write(tmp_path, "z.txt", "2 2 3\n0 0\n0 0\n"))
        assert code == 0
        assert out == "r = 0 0\nc = 0 0\n"


class TestCheck:
    def test_semi_but_not_canonical(self, tmp_path):
        code, out = run("check", write(tmp_path, "a.txt", TRIO_A))
        assert code == 0
        assert out == "semi-canonical: yes\ncanonical: no\n"

    def test_canonical(self, tmp_path):
        code, out = run("check", write(tmp_path, "c.txt", TRIO_C))
        assert code == 0
        assert out == "semi-canonical: yes\ncanonical: yes\n"

    def test_unsorted(self, tmp_path):
        code, out = run("check", write(tmp_path, "u.txt", "2 2 2\n1 0\n0 1\n"))
        assert code == 0
        assert out == "semi-canonical: no\ncanonical: no\n"

    def test_report(self, tmp_path):
        code, out = run("check", "--report", write(tmp_path, "c.txt", TRIO_C))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "semi-canonical: yes"
        assert lines[2].startswith("cond1: pass")
        assert lines[-1] == "verdict: canonical"


class TestCanonize:
    def test_trio(self, tmp_path):
        for mat in (TRIO_A, TRIO_B):
            code, out = run("canonize", write(tmp_path, "m.txt", mat))
            assert code == 0
            assert parse_matrix(out) == TRIO_C

    def test_zero_fixed_point(self, tmp_path):
        code, out = run("canonize", write(tmp_path, "z.txt", "2 2 2\n0 0\n0 0\n"))
        assert code == 0
        assert parse_matrix(out).rows == ((0, 0), (0, 0))

    def test_witness(self, tmp_path):
        code, out = run("canonize", "--witness", write(tmp_path, "a.txt", TRIO_A))
        assert code == 0
        lines = out.splitlines()
        assert lines[-2].startswith("rows: ") and lines[-1].startswith("cols: ")
        row_images = tuple(int(x) - 1 for x in lines[-2].split()[1:])
        col_images = tuple(int(x) - 1 for x in lines[-1].split()[1:])
        pp = PermPair(Permutation(row_images), Permutation(col_images))
        assert apply(TRIO_A, pp) == TRIO_C


class TestEnumerateAndCount:
    def test_count_only(self):
        code, out = run("enumerate", "2", "2", "2", "--count-only")
        assert code == 0
        assert out == "count=7 burnside=7 agree=true\n"

    def test_count_command(self):
        code, out = run("count", "1", "1", "5")
        assert code == 0
        assert out == "count=5 burnside=5 agree=true\n"

    def test_stream_format(self):
        code, out = run("enumerate", "2", "2", "2")
        assert code == 0
        blocks = out.split("\n\n")
        assert out.endswith("# count=7\n")
        matrices = [parse_matrix(b) for b in blocks[:-1]]
        matrices.append(parse_matrix(blocks[-1].rsplit("# count", 1)[0]))
        assert len(matrices) == 7
        codes = [m.rows for m in matrices]
        assert codes == sorted(codes)

    def test_filter_hadamard(self):
        code, out = run("enumerate", "2", "2", "3", "--filter", "hadamard")
        assert code == 0
        assert out.startswith("# predicate=hadamard\n")
        assert out.endswith("# count=2\n")

    def test_filter_weighing(self):
        code, out = run("enumerate", "2", "2", "3", "--filter", "weighing:2",
                        "--count-only")
        assert code == 0
        assert out == "count=2\n"

    def test_workers_byte_identical(self):
        _, serial = run("enumerate", "3", "3", "2", "--workers", "1")
        _, parallel = run("enumerate", "3", "3", "2", "--workers", "4")
        assert serial == parallel
        assert serial.endswith("# count=36\n")


class TestClassify:
    def test_hadamard(self):
        code, out = run("classify-hadamard", "2")
        assert code == 0
        assert out.startswith("# predicate=hadamard\n")
        assert out.endswith("# count=2\n")

    def test_hadamard_empty_order(self):
        code, out = run("classify-hadamard", "3")
        assert code == 0
        assert out == "# predicate=hadamard\n# count=0\n"

    def test_weighing(self):
        code, out = run("classify-weighing", "2", "2")
        assert code == 0
        assert out.startswith("# predicate=weighing k=2\n")
        assert out.endswith("# count=2\n")


class TestExitCodes:
    def test_parse_error(self, tmp_path):
        assert run("encode", write(tmp_path, "bad.txt", "not a matrix\n"))[0] == 2

    def test_missing_file(self):
        assert run("encode", "/nonexistent/file.txt")[0] == 2

    def test_range_error(self, tmp_path):
        assert run("encode", write(tmp_path, "bad.txt", "2 2 2\n0 2\n1 0\n"))[0] == 3

    def test_budget_error(self):
        assert run("--budget", "3", "enumerate", "3", "3", "2", "--count-only")[0] == 4

    def test_bad_filter_spec(self):
        assert run("enumerate", "2", "2", "3", "--filter", "bogus")[0] == 2


class TestManifest:
    def test_written_and_stable(self, tmp_path):
        src = write(tmp_path, "a.txt", TRIO_A)
        m1, m2 = str(tmp_path / "m1.json"), str(tmp_path / "m2.json")
        assert run("--manifest", m1, "encode", src)[0] == 0
        assert run("--manifest", m2, "encode", src)[0] == 0
        a = json.loads(open(m1).read())
        b = json.loads(open(m2).read())
        a.pop("elapsed_s"), b.pop("elapsed_s")
        # the recorded argv contains the differing --manifest paths
        assert a.pop("command")[2:] == b.pop("command")[2:]
        assert a == b
        assert a["shape"] == [4, 4, 3]
        assert len(a["input_digest"]) == 64

    def test_records_nodes(self, tmp_path):
        path = str(tmp_path / "m.json")
        assert run("--manifest", path, "count", "2", "2", "2")[0] == 0
        manifest = json.loads(open(path).read())
        assert manifest["nodes"] > 0
        assert manifest["result"] == "count=7"
