"""Tests for framed links, presets and payload loading."""
import json

import pytest

from src.tools.lattice_core.application.operations import invariants
from src.tools.lattice_core.domain.exceptions import AsymmetricGramError
from src.tools.topology_io.application.services import (
    connected_sum,
    gram_from_framed_link,
    load_embedding,
    load_gram,
    load_invariants,
    load_link,
    preset,
    preset_link,
    preset_names,
)
from src.tools.topology_io.domain.exceptions import (
    AsymmetricLinkingError,
    PayloadError,
    UnknownPresetError,
)
from src.tools.topology_io.domain.models import FramedLinkData
from src.tools.topology_io.infrastructure.loader import PayloadLoader
from tests.helpers import K3, inv


class TestFramedLinks:
    def test_hopf_link(self):
        g = gram_from_framed_link(FramedLinkData(framings=(0, 0), linking=((0, 1), (1, 0))))
        assert g.entries == ((0, 1), (1, 0))

    def test_diagonal_of_linking_is_ignored(self):
        g = gram_from_framed_link(FramedLinkData(framings=(1, -1), linking=((7, 2), (2, 9))))
        assert g.entries == ((1, 2), (2, -1))

    def test_single_unknot(self):
        g = gram_from_framed_link(FramedLinkData(framings=(-1,), linking=((0,),)))
        assert g.entries == ((-1,),)

    def test_asymmetric_linking(self):
        with pytest.raises(AsymmetricLinkingError):
            gram_from_framed_link(FramedLinkData(framings=(0, 0), linking=((0, 1), (2, 0))))

    def test_shape_mismatch(self):
        with pytest.raises(PayloadError):
            FramedLinkData(framings=(0, 0), linking=((0,),))


class TestPresets:
    @pytest.mark.parametrize("name, expected", [
        ("CP2", (1, 0, "odd")),
        ("CP2bar", (0, 1, "odd")),
        ("S2xS2", (1, 1, "even")),
        ("K3", (3, 19, "even")),
        ("S4", (0, 0, "even")),
        ("k3", (3, 19, "even")),
    ])
    def test_registered(self, name, expected):
        assert preset(name) == inv(*expected)

    def test_connected_sums(self):
        assert preset("K3#2CP2bar") == inv(3, 21, "odd")
        assert preset("3CP2#5CP2bar") == inv(3, 5, "odd")
        assert preset("#4S2xS2") == inv(4, 4, "even")

    def test_connected_sum(self):
        assert connected_sum(K3, inv(1, 1, "even")) == inv(4, 20, "even")
        assert connected_sum(K3, inv(1, 0, "odd")) == inv(4, 19, "odd")

    def test_unknown(self):
        with pytest.raises(UnknownPresetError):
            preset("T4")
        with pytest.raises(UnknownPresetError):
            preset("K3##CP2")

    def test_names(self):
        assert {"CP2", "CP2bar", "S2xS2", "S4", "K3"} <= set(preset_names())

    @pytest.mark.parametrize("name", ["CP2", "CP2bar", "S2xS2", "2CP2#CP2bar", "S2xS2#CP2"])
    def test_links_realise_their_invariants(self, name):
        assert invariants(gram_from_framed_link(preset_link(name))) == preset(name)

    def test_empty_link_of_s4(self):
        assert preset_link("S4").n == 0

    def test_k3_has_no_link(self):
        with pytest.raises(UnknownPresetError):
            preset_link("K3")


class TestPayloads:
    def test_inline_gram(self):
        assert load_gram('{"gram": [[2, 1], [1, 2]]}').entries == ((2, 1), (1, 2))

    def test_bare_matrix(self):
        assert load_gram("[[0, 1], [1, 0]]").rank == 2

    def test_gram_from_file(self, write_payload):
        path = write_payload("h.json", {"gram": [[0, 1], [1, 0]]})
        assert load_gram(path).entries == ((0, 1), (1, 0))

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "k3.yaml"
        path.write_text("b2_plus: 3\nb2_minus: 19\nparity: even\n", encoding="utf-8")
        assert load_invariants(str(path)) == K3

    def test_asymmetric_gram_payload(self):
        with pytest.raises(PayloadError):
            load_gram('{"gram": [[1, 2], [3, 1]]}')

    def test_ragged_gram_payload(self):
        with pytest.raises(PayloadError):
            load_gram('{"gram": [[1, 0], [0]]}')

    def test_float_entries_are_rejected(self):
        with pytest.raises(PayloadError):
            load_gram('{"gram": [[1.5]]}')

    def test_invalid_json(self):
        with pytest.raises(PayloadError):
            load_gram('{"gram": [[1, 0]')

    def test_missing_file(self):
        with pytest.raises(PayloadError):
            load_gram("does-not-exist.json")

    def test_invariants_forms(self):
        assert load_invariants('{"b2_plus": 4, "b2_minus": 20, "parity": "odd"}') == inv(4, 20, "odd")
        assert load_invariants('{"gram": [[0, 1], [1, 0]]}') == inv(1, 1, "even")
        assert load_invariants('{"framings": [1], "linking": [[0]]}') == inv(1, 0, "odd")
        assert load_invariants("K3#CP2") == inv(4, 19, "odd")

    def test_invariants_payload_rejects_bad_parity(self):
        with pytest.raises(PayloadError):
            load_invariants('{"b2_plus": 1, "b2_minus": 0, "parity": "mixed"}')

    def test_unknown_keys(self):
        with pytest.raises(PayloadError):
            load_invariants('{"rank": 3}')

    def test_link(self):
        link = load_link('{"framings": [0, 0], "linking": [[0, 1], [1, 0]]}')
        assert link.framings == (0, 0)
        assert load_link("CP2").framings == (1,)

    def test_embedding_payload(self):
        payload = {
            "degree": 2,
            "source_gram": [[1, 0], [0, -1]],
            "target_gram": [[0, 1], [1, 0]],
            "matrix": [[1, 1], [1, -1]],
        }
        e = load_embedding(json.dumps(payload))
        assert e.degree == 2 and e.shape == (2, 2)

    def test_embedding_payload_with_asymmetric_source(self):
        payload = {"degree": 1, "source_gram": [[0, 1], [2, 0]], "target_gram": [[1]], "matrix": [[1, 1]]}
        with pytest.raises(PayloadError):
            load_embedding(json.dumps(payload))

    def test_size_limit(self, write_payload):
        path = write_payload("big.json", {"gram": [[1]]})
        with pytest.raises(PayloadError):
            PayloadLoader(max_size_mb=0.0).load(path)

    def test_plain_words_pass_through(self):
        assert PayloadLoader().load("K3") == "K3"

    def test_asymmetric_gram_is_also_caught_by_the_domain(self):
        from src.tools.lattice_core.domain.models import GramMatrix

        with pytest.raises(AsymmetricGramError):
            GramMatrix.from_rows([[0, 1], [2, 0]])
