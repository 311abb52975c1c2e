import io
import json

from hypothesis import given, settings
from hypothesis import strategies as st

from ecq.dataio import (CurveRecord, named_curves, parse_records,
                        serialize_record, write_report)
from ecq.verify import Verdict


def test_parse_minimal_record():
    records, issues = parse_records('{"label":"X","a":[0,0,1,0,0]}')
    assert not issues
    assert records[0].a_invariants == (0, 0, 1, 0, 0)
    assert records[0].label == "X"


def test_malformed_lines_are_isolated():
    text = "\n".join([
        '{"a":[0,0,1,0,0]}',
        '{"label":"broken"}',              # missing "a"
        'not json at all',
        '{"a":[0,0,0,0,0]}',               # singular
        '{"a":[1,0,1,-1,0],"tamagawa":{"2":2,"7":1}}',
    ])
    records, issues = parse_records(text)
    assert len(records) == 2
    assert [i.line for i in issues] == [2, 3, 4]
    assert records[1].tamagawa == ((2, 2), (7, 1))


record_strategy = st.builds(
    CurveRecord,
    a_invariants=st.just((0, -1, 1, -10, -20)),
    label=st.one_of(st.none(), st.text(st.characters(codec="ascii",
                    categories=("L", "N")), min_size=1, max_size=8)),
    rank=st.one_of(st.none(), st.integers(0, 3)),
    torsion_order=st.one_of(st.none(), st.integers(1, 16)),
    sha_order=st.one_of(st.none(), st.integers(1, 9)),
    tamagawa=st.one_of(st.just(()), st.just(((2, 3), (11, 1)))),
)


@given(record_strategy)
@settings(max_examples=80, deadline=None)
def test_serialize_parse_roundtrip(rec):
    line = serialize_record(rec)
    back, issues = parse_records(line)
    assert not issues and len(back) == 1
    assert serialize_record(back[0]) == line


def test_report_schema_and_byte_stability():
    verdicts = [
        Verdict("Thm1.2(i)", "X", "pass", {"d": 5}),
        Verdict("Thm3.1(b)", "Y", "fail", {"tamagawa_product": 3}),
    ]
    bufs = []
    for _ in range(2):
        buf = io.StringIO()
        write_report(verdicts, buf)
        bufs.append(buf.getvalue())
    assert bufs[0] == bufs[1]
    lines = bufs[0].splitlines()
    assert len(lines) == 2
    obj = json.loads(lines[0])
    assert set(obj) == {"theorem", "curve", "status", "witness"}
    assert obj["status"] == "pass"


def test_empty_report():
    buf = io.StringIO()
    write_report([], buf)
    assert buf.getvalue() == ""


def test_named_fixtures_load():
    nc = named_curves()
    assert {"11a1", "14a4", "44.a2", "54b3", "171.b2", "176.a2",
            "324.b1"} <= set(nc)
    assert nc["44.a2"].torsion_order == 3
    assert nc["54b3"].tamagawa == ((2, 9), (3, 3))
