import json
from fractions import Fraction as F

import pytest

from vocagg import (
    Domain,
    DictatorRule,
    EndpointMultiset,
    MeanRule,
    MultisetRule,
    ParseError,
    PRule,
    ResultDocument,
    Vocabulary,
    apply_rule,
    build_result,
    default_words,
    describe_rule,
    fixture_rule,
    jsonify,
    load_json,
    main,
    median_positions,
    parse_profile,
    parse_rational,
    parse_result,
    rational_str,
    render_diagram,
    rule_from_descriptor,
    serialize_result,
)
from vocagg.core import decode_endpoints
from vocagg.exemplars import GapSequence, collective_incomplete

UNIT = Domain(F(0), F(1))

GRADING_DOC = {
    "domain": {"lower": "0", "upper": "100"},
    "words": ["F", "D", "C", "B", "A"],
    "agents": [
        {"endpoints": ["20", "40", "60", "80"]},
        {"endpoints": ["10", "20", "30", "50"]},
        {"endpoints": ["30", "45", "55", "70"]},
    ],
}

EXEMPLAR_DOC = {
    "domain": {"lower": "0", "upper": "1"},
    "words": ["A", "B", "C", "D"],
    "exemplars": ["1/5", "2/5", "3/5"],
    "agents": [
        {"exemplar_labels": ["A", "C", "D"]},
        {"exemplar_labels": ["B", "B", "C"]},
        {"exemplar_labels": ["A", "C", "C"]},
    ],
}

TWO_AGENT_DOC = {
    "domain": {"lower": "0", "upper": "1"},
    "agents": [{"endpoints": ["1/4"]}, {"endpoints": ["1/2"]}],
}


class TestRationals:
    def test_rational_str_forms(self):
        assert rational_str(F(3, 4)) == "3/4"
        assert rational_str(F(-3, 4)) == "-3/4"
        assert rational_str(F(20)) == "20"

    def test_parse_rational_accepts_exact_forms(self):
        assert parse_rational("3/4") == F(3, 4)
        assert parse_rational("48.33") == F(4833, 100)
        assert parse_rational(7) == F(7)
        assert parse_rational(F(1, 3)) == F(1, 3)

    @pytest.mark.parametrize("bad", [0.5, True, None, [], "1/0", "abc", ""])
    def test_parse_rational_rejections(self, bad):
        with pytest.raises(ParseError):
            parse_rational(bad)

    def test_error_message_names_the_site(self):
        with pytest.raises(ParseError, match="endpoints\\[2\\]"):
            parse_rational("oops", "endpoints[2]")


class TestLoadJson:
    def test_float_literals_stay_textual(self):
        assert load_json('{"x": 48.33}') == {"x": "48.33"}

    def test_malformed_json_reports_position(self):
        with pytest.raises(ParseError, match="line 2, column"):
            load_json('{"x":\n }')


class TestJsonify:
    def test_exact_values_become_strings(self):
        value = {"a": F(1, 3), "b": [F(2), None, True], "c": {F(1, 2), F(0)}}
        assert jsonify(value) == {"a": "1/3", "b": ["2", None, True], "c": ["0", "1/2"]}

    def test_endpoint_multisets_flatten(self):
        row = EndpointMultiset(UNIT, (F(1, 4), F(1, 2)))
        assert jsonify(row) == ["1/4", "1/2"]

    def test_floats_are_refused(self):
        with pytest.raises(TypeError):
            jsonify({"x": 0.5})


class TestParseProfile:
    def test_endpoint_form(self):
        parsed = parse_profile(json.dumps(GRADING_DOC))
        assert parsed.kind == "endpoints"
        assert parsed.words == ("F", "D", "C", "B", "A")
        assert parsed.profile.n == 3 and parsed.profile.m == 4
        assert parsed.profile.row(2).values == (F(10), F(20), F(30), F(50))

    def test_default_word_names(self):
        doc = dict(GRADING_DOC)
        del doc["words"]
        parsed = parse_profile(json.dumps(doc))
        assert parsed.words == ("w1", "w2", "w3", "w4", "w5")
        assert default_words(2) == ("w1", "w2")

    def test_decimal_float_literals_parse_exactly(self):
        text = json.dumps(TWO_AGENT_DOC).replace('"1/4"', "0.25")
        parsed = parse_profile(text)
        assert parsed.profile.row(1).values == (F(1, 4),)

    def test_extent_form_encodes_vocabularies(self):
        doc = {
            "domain": {"lower": "0", "upper": "1"},
            "words": ["w1", "w2", "w3", "w4"],
            "agents": [
                {
                    "extents": {
                        "w1": ["0", "1/4"],
                        "w2": ["1/4", "1/2"],
                        "w3": None,
                        "w4": ["1/2", "1"],
                    }
                }
            ],
        }
        parsed = parse_profile(json.dumps(doc))
        assert parsed.kind == "extents"
        assert parsed.profile.row(1).values == (F(1, 4), F(1, 2), F(1, 2))
        assert parsed.vocabularies[0].extents[2] is None

    def test_exemplar_form(self):
        parsed = parse_profile(json.dumps(EXEMPLAR_DOC))
        assert parsed.kind == "exemplars"
        assert parsed.profile is None
        assert parsed.exemplars[0].points == ((F(1, 5), 0), (F(2, 5), 2), (F(3, 5), 3))
        assert parsed.exemplars[1].labels == (1, 1, 2)

    @pytest.mark.parametrize(
        "mutate, message",
        [
            (lambda d: d.pop("domain"), "domain"),
            (lambda d: d.update(agents=[]), "agents"),
            (
                lambda d: d["agents"].append({"extents": {}}),
                "same form",
            ),
            (
                lambda d: d["agents"][0].update(extents={}),
                "exactly one",
            ),
            (
                lambda d: d["agents"][1].update(endpoints=["10", "20", "30"]),
                "expected 4",
            ),
            (
                lambda d: d.update(words=["only", "two"]),
                "5 words",
            ),
            (
                lambda d: d.update(words=["X", "X", "Y", "Z", "Q"]),
                "distinct",
            ),
            (
                lambda d: d["agents"][0].update(endpoints=["20", "40", "60", "101"]),
                "agents\\[1\\]",
            ),
        ],
    )
    def test_endpoint_document_errors(self, mutate, message):
        doc = json.loads(json.dumps(GRADING_DOC))
        mutate(doc)
        with pytest.raises(ParseError, match=message):
            parse_profile(json.dumps(doc))

    def test_extents_need_word_names(self):
        doc = {
            "domain": {"lower": "0", "upper": "1"},
            "agents": [{"extents": {"w1": ["0", "1"]}}],
        }
        with pytest.raises(ParseError, match="words: required"):
            parse_profile(json.dumps(doc))

    def test_extents_reject_unknown_words(self):
        doc = {
            "domain": {"lower": "0", "upper": "1"},
            "words": ["w1", "w2"],
            "agents": [{"extents": {"w1": ["0", "1/2"], "zz": ["1/2", "1"]}}],
        }
        with pytest.raises(ParseError, match="unknown words"):
            parse_profile(json.dumps(doc))

    def test_exemplar_label_errors(self):
        doc = json.loads(json.dumps(EXEMPLAR_DOC))
        doc["agents"][0]["exemplar_labels"] = ["A", "C", "Z"]
        with pytest.raises(ParseError, match="unknown word 'Z'"):
            parse_profile(json.dumps(doc))
        doc["agents"][0]["exemplar_labels"] = ["A", "C"]
        with pytest.raises(ParseError, match="one label per exemplar"):
            parse_profile(json.dumps(doc))

    def test_exemplar_labels_must_follow_the_line(self):
        doc = json.loads(json.dumps(EXEMPLAR_DOC))
        doc["agents"][2]["exemplar_labels"] = ["C", "B", "C"]
        with pytest.raises(ParseError, match="agents\\[3\\]"):
            parse_profile(json.dumps(doc))


class TestRuleDescriptors:
    @pytest.mark.parametrize(
        "rule",
        [
            PRule(median_positions(3, 4)),
            MeanRule(),
            MultisetRule(),
            DictatorRule(2),
        ],
    )
    def test_describe_round_trips(self, rule):
        descriptor = describe_rule(rule)
        assert rule_from_descriptor(descriptor, 3, 4, Domain(F(0), F(100))) == rule

    def test_fixture_descriptor(self):
        rule = fixture_rule("inf-rule")
        descriptor = describe_rule(rule)
        assert descriptor == {"kind": "fixture", "name": "inf-rule"}
        rebuilt = rule_from_descriptor(descriptor, 3, 3, UNIT)
        assert rebuilt.name == "inf-rule"

    def test_extended_median_descriptor_round_trips(self):
        descriptor = {"kind": "extended-median", "columns": [["0", "1/2"], ["1/2", "1"]]}
        rule = rule_from_descriptor(descriptor, 3, 2, UNIT)
        assert describe_rule(rule) == descriptor

    def test_string_forms(self):
        assert rule_from_descriptor("median", 3, 3, UNIT) == PRule(
            median_positions(3, 3)
        )
        assert rule_from_descriptor("p:1,2,3", 3, 3, UNIT) == PRule(
            PRule(median_positions(3, 3)).positions.__class__((1, 2, 3))
        )
        assert rule_from_descriptor("dictator:2", 3, 3, UNIT) == DictatorRule(2)
        assert rule_from_descriptor("mean", 3, 3, UNIT) == MeanRule()
        assert rule_from_descriptor("multiset", 3, 3, UNIT) == MultisetRule()
        assert rule_from_descriptor({"kind": "median"}, 5, 2, UNIT) == PRule(
            median_positions(5, 2)
        )

    @pytest.mark.parametrize(
        "bad",
        [
            "nonesuch",
            "dictator:x",
            "p:one,two",
            "p:4,4,4",
            {"kind": "nonesuch"},
            {"positions": [1, 2]},
            {"kind": "extended-median"},
            {"kind": "dictator"},
        ],
    )
    def test_bad_descriptors(self, bad):
        with pytest.raises(ParseError):
            rule_from_descriptor(bad, 3, 3, UNIT)


class TestResultDocuments:
    def build(self, grading_profile):
        rule = PRule(median_positions(3, 4))
        endpoints = apply_rule(grading_profile, rule)
        return build_result(rule, GRADING_DOC["words"], endpoints)

    def test_build_decodes_the_vocabulary(self, grading_profile):
        doc = self.build(grading_profile)
        assert doc.endpoints == (F(20), F(40), F(55), F(70))
        assert doc.vocabulary[0] == (F(0), F(20))
        assert doc.vocabulary[4] == (F(70), F(100))

    def test_serialization_round_trips(self, grading_profile):
        doc = self.build(grading_profile)
        text = serialize_result(doc)
        assert parse_result(text) == doc
        assert text.startswith('{\n  "rule"')
        assert text == serialize_result(parse_result(text))

    def test_serialized_values_are_rational_strings(self, grading_profile):
        payload = json.loads(serialize_result(self.build(grading_profile)))
        assert payload["endpoints"] == ["20", "40", "55", "70"]
        assert payload["vocabulary"]["A"] == ["70", "100"]

    def test_shape_validation(self):
        with pytest.raises(ParseError):
            ResultDocument(
                rule={"kind": "mean"},
                domain=UNIT,
                words=("a", "b"),
                endpoints=(F(1, 2), F(3, 4)),
                vocabulary=(None, None),
            )
        with pytest.raises(ParseError):
            parse_result('{"rule": {"kind": "mean"}}')


class TestRender:
    def diagram(self):
        return decode_endpoints(
            EndpointMultiset(UNIT, (F(1, 4), F(1, 2), F(1, 2)))
        )

    def test_ascii_is_deterministic_and_structured(self):
        once = render_diagram(self.diagram(), "ascii", ("A", "B", "C", "D"))
        again = render_diagram(self.diagram(), "ascii", ("A", "B", "C", "D"))
        assert once == again
        labels, axis, values = once.rstrip("\n").split("\n")
        assert axis.startswith("(") and axis.endswith(")")
        assert axis.count("|") == 2
        for name in ("A", "B", "D"):
            assert name in labels
        assert "C" not in labels  # the empty word gets no label
        for text in ("0", "1/4", "1/2", "1"):
            assert text in values

    def test_ascii_renders_incomplete_vocabularies(self):
        gaps = GapSequence(UNIT, ((F(1, 5), F(2, 5)), (F(1, 5), F(2, 5)), (F(3, 5), F(1))))
        art = render_diagram(collective_incomplete(gaps), "ascii", ("A", "B", "C", "D"))
        assert "=" in art and "[" in art and "]" in art
        assert "." in art.split("\n")[1]

    def test_svg_output(self):
        svg = render_diagram(self.diagram(), "svg", ("A", "B", "C", "D"))
        assert svg.startswith("<svg")
        assert 'viewBox="0 0 800 160"' in svg
        assert svg == render_diagram(self.diagram(), "svg", ("A", "B", "C", "D"))

    def test_bad_style_and_names(self):
        with pytest.raises(ValueError, match="unknown render style"):
            render_diagram(self.diagram(), "png")
        with pytest.raises(ValueError, match="names"):
            render_diagram(self.diagram(), "ascii", ("only", "two"))

    def test_degenerate_vocabulary_renders(self):
        flat = Vocabulary(UNIT, ((F(0), F(1)), None))
        art = render_diagram(flat, "ascii")
        assert "w1" in art


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload) if not isinstance(payload, str) else payload)
    return str(path)


class TestCli:
    def test_aggregate_median(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        out = tmp_path / "result.json"
        assert main(["aggregate", "--rule", "median", "--input", doc, "--output", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["endpoints"] == ["20", "40", "55", "70"]
        assert payload["rule"] == {"kind": "p-rule", "positions": [2, 2, 2, 2]}
        assert payload["vocabulary"]["C"] == ["40", "55"]

    def test_aggregate_mean_exact(self, tmp_path):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        out = tmp_path / "result.json"
        assert main(["aggregate", "--rule", "mean", "--input", doc, "--output", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["endpoints"] == ["20", "35", "145/3", "200/3"]

    def test_aggregate_writes_stdout_by_default(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        assert main(["aggregate", "--rule", "dictator:2", "--input", doc]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["endpoints"] == ["10", "20", "30", "50"]

    def test_aggregate_reads_stdin(self, tmp_path, capsys, monkeypatch):
        import io as stdio

        monkeypatch.setattr("sys.stdin", stdio.StringIO(json.dumps(GRADING_DOC)))
        assert main(["aggregate", "--rule", "median", "--input", "-"]) == 0
        assert json.loads(capsys.readouterr().out)["endpoints"][2] == "55"

    def test_aggregate_rejects_even_multiset(self, tmp_path, capsys):
        doc = write(tmp_path, "two.json", TWO_AGENT_DOC)
        assert main(["aggregate", "--rule", "multiset", "--input", doc]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_aggregate_rejects_exemplar_documents(self, tmp_path, capsys):
        doc = write(tmp_path, "ex.json", EXEMPLAR_DOC)
        assert main(["aggregate", "--rule", "median", "--input", doc]) == 2
        assert "induce" in capsys.readouterr().err

    def test_aggregate_extended_median_file(self, tmp_path, capsys):
        profile = {
            "domain": {"lower": "0", "upper": "1"},
            "agents": [
                {"endpoints": ["1/4"]},
                {"endpoints": ["1/2"]},
                {"endpoints": ["3/4"]},
            ],
        }
        doc = write(tmp_path, "profile.json", profile)
        phantoms = write(tmp_path, "phantoms.json", [["0", "0"]])
        assert main(["aggregate", "--rule", f"emed:{phantoms}", "--input", doc]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["endpoints"] == ["1/4"]
        assert payload["rule"]["kind"] == "extended-median"

    def test_missing_file_is_an_input_error(self, tmp_path, capsys):
        missing = str(tmp_path / "nope.json")
        assert main(["aggregate", "--rule", "median", "--input", missing]) == 2
        assert "error:" in capsys.readouterr().err

    def test_axioms_median_passes(self, tmp_path, capsys):
        out = tmp_path / "axioms.json"
        code = main(
            ["axioms", "--rule", "median", "--trials", "40", "--seed", "3",
             "--output", str(out)]
        )
        assert code == 0
        payload = json.loads(out.read_text())
        names = [report["axiom"] for report in payload["reports"]]
        assert names == ["unanimity", "anonymity", "stability", "continuity"]
        assert all(r["verdict"] == "holds-on-sample" for r in payload["reports"])

    def test_axioms_mean_fails_stability(self, tmp_path, capsys):
        out = tmp_path / "axioms.json"
        code = main(
            ["axioms", "--rule", "mean", "--trials", "40", "--seed", "3",
             "--output", str(out)]
        )
        assert code == 1
        payload = json.loads(out.read_text())
        verdicts = {r["axiom"]: r["verdict"] for r in payload["reports"]}
        assert verdicts["stability"] == "violated"
        assert verdicts["unanimity"] == "holds-on-sample"

    def test_axioms_with_profile_adds_majority_check(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        out = tmp_path / "axioms.json"
        code = main(
            ["axioms", "--rule", "median", "--trials", "20", "--seed", "1",
             "--input", doc, "--output", str(out)]
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["reports"][-1]["axiom"] == "majoritarian-words"

    def test_sp_check_median_resists(self, tmp_path, capsys):
        out = tmp_path / "sp.json"
        code = main(
            ["sp-check", "--rule", "median", "--trials", "150", "--seed", "2",
             "--output", str(out)]
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["manipulation"] is None
        assert payload["uncompromising"] is None

    def test_sp_check_mean_is_manipulable(self, tmp_path, capsys):
        out = tmp_path / "sp.json"
        code = main(
            ["sp-check", "--rule", "mean", "--trials", "400", "--seed", "2",
             "--output", str(out)]
        )
        assert code == 1
        payload = json.loads(out.read_text())
        gain = payload["manipulation"]["gain"]
        assert F(gain) > 0

    def test_induce_pipeline(self, tmp_path, capsys):
        doc = write(tmp_path, "exemplars.json", EXEMPLAR_DOC)
        out = tmp_path / "induced.json"
        assert main(["induce", "--input", doc, "--output", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["collective_gaps"] == [
            ["1/5", "2/5"],
            ["1/5", "2/5"],
            ["3/5", "1"],
        ]
        assert payload["vocabulary"] == {
            "A": ["0", "1/5"],
            "B": None,
            "C": ["2/5", "3/5"],
            "D": None,
        }
        assert payload["agents"][1]["gaps"][0] == ["0", "1/5"]

    def test_induce_needs_exemplars(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        assert main(["induce", "--input", doc]) == 2
        assert "exemplar" in capsys.readouterr().err

    def test_induce_rejects_non_positional_rules(self, tmp_path, capsys):
        doc = write(tmp_path, "exemplars.json", EXEMPLAR_DOC)
        assert main(["induce", "--rule", "mean", "--input", doc]) == 2
        assert "positional" in capsys.readouterr().err

    def test_render_all_agents(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        assert main(["render", "--input", doc]) == 0
        art = capsys.readouterr().out
        assert "# agent 1" in art and "# agent 3" in art

    def test_render_single_agent_svg(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        assert main(["render", "--input", doc, "--format", "svg", "--agent", "2"]) == 0
        assert capsys.readouterr().out.startswith("<svg")

    def test_render_svg_needs_a_single_diagram(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        assert main(["render", "--input", doc, "--format", "svg"]) == 2

    def test_render_collective_under_rule(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        assert main(["render", "--input", doc, "--rule", "median"]) == 0
        art = capsys.readouterr().out
        assert "55" in art and "# agent" not in art

    def test_render_exemplar_collective(self, tmp_path, capsys):
        doc = write(tmp_path, "exemplars.json", EXEMPLAR_DOC)
        assert main(["render", "--input", doc, "--rule", "median"]) == 0
        assert "=" in capsys.readouterr().out

    def test_render_agent_out_of_range(self, tmp_path, capsys):
        doc = write(tmp_path, "profile.json", GRADING_DOC)
        assert main(["render", "--input", doc, "--agent", "9"]) == 2

    def test_seed_env_override(self, tmp_path, monkeypatch):
        out = tmp_path / "axioms.json"
        monkeypatch.setenv("VOCAGG_SEED", "77")
        main(["axioms", "--rule", "median", "--trials", "5", "--seed", "3",
              "--output", str(out)])
        assert json.loads(out.read_text())["seed"] == 77

    def test_bad_seed_env_is_an_input_error(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("VOCAGG_SEED", "not-a-number")
        assert main(["axioms", "--rule", "median", "--trials", "5"]) == 2
        assert "VOCAGG_SEED" in capsys.readouterr().err

    def test_bad_domain_flag(self, capsys):
        assert main(["axioms", "--rule", "median", "--domain", "zero-one",
                     "--trials", "1"]) == 2
        assert "LOWER:UPPER" in capsys.readouterr().err
