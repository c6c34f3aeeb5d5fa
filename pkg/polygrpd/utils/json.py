import importlib
import os

JSON = 'json'
RAPIDJSON = 'rapidjson'
UJSON = 'ujson'

# Detect mode
mode = JSON
for json_lib in (RAPIDJSON, UJSON):
    if 'DISABLE_' + json_lib.upper() in os.environ:
        continue

    try:
        json = importlib.import_module(json_lib)
    except ImportError:
        continue
    else:
        mode = json_lib
        break

if mode == RAPIDJSON:

    def dump(data, fp):
        fp.write(dumps(data))

    def load(fp):
        return loads(fp.read())

    def dumps(data):
        return json.dumps(data, ensure_ascii=False, sort_keys=True, indent=2)

    def loads(data):
        return json.loads(data, number_mode=json.NM_NATIVE)


elif mode == UJSON:

    def dump(data, fp):
        fp.write(dumps(data))

    def load(fp):
        return loads(fp.read())

    def loads(data):
        return json.loads(data)

    def dumps(data):
        return json.dumps(data, ensure_ascii=False, sort_keys=True, indent=2)


else:
    import json

    def dump(data, fp):
        fp.write(dumps(data))

    def load(fp):
        return loads(fp.read())

    def dumps(data):
        return json.dumps(data, ensure_ascii=False, sort_keys=True, indent=2)

    def loads(data):
        return json.loads(data)
