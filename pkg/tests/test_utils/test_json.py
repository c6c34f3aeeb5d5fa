from polygrpd.utils import json


class TestJson:

    def test_mode_is_known(self):
        assert json.mode in (json.JSON, json.RAPIDJSON, json.UJSON)

    def test_dumps_sorts_keys(self):
        text = json.dumps({'b': 1, 'a': [1.5, 'x']})
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {'a': [1.5, 'x'], 'b': 1}

    def test_dump_and_load_file(self, tmp_path):
        target = tmp_path / 'data.json'
        with open(target, 'w', encoding='utf-8') as fp:
            json.dump({'schema': 1, 'status': 'pass'}, fp)
        with open(target, encoding='utf-8') as fp:
            assert json.load(fp) == {'schema': 1, 'status': 'pass'}
