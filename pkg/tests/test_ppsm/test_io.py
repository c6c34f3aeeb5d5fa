import numpy as np
import pytest

from polygrpd.ppsm import concatenate, dump_path, dumps_path, inverse, load_path, loads_path
from polygrpd.ppsm.io import MAGIC
from polygrpd.structures import make_symplectic_plane
from polygrpd.utils import exceptions


class TestPathFiles:

    def test_file(self, so3, so3_path, tmp_path):
        destination = tmp_path / 'path.txt'
        dump_path(so3_path, destination)
        loaded = load_path(destination, so3)
        assert np.array_equal(loaded.times, so3_path.times)
        assert np.array_equal(loaded.points, so3_path.points)
        assert np.array_equal(loaded.coefficients, so3_path.coefficients)
        assert loaded.on_shell

    def test_breaks(self, so3, so3_path):
        joined = concatenate(so3_path, inverse(so3_path))
        text = dumps_path(joined)
        assert text.splitlines()[0] == MAGIC
        assert text.splitlines()[2] == f"breaks {joined.breaks[0]}"
        assert loads_path(text, so3).breaks == joined.breaks

    def test_not_a_path_file(self, so3):
        with pytest.raises(exceptions.ConfigError):
            loads_path('hello\n', so3)

    def test_row_count(self, so3, so3_path):
        text = dumps_path(so3_path)
        with pytest.raises(exceptions.ConfigError):
            loads_path(text.rsplit('\n', 2)[0] + '\n', so3)

    def test_declared_breaks(self, so3, so3_path):
        lines = dumps_path(so3_path).splitlines()
        lines.insert(2, 'breaks 7')
        with pytest.raises(exceptions.ConfigError):
            loads_path('\n'.join(lines), so3)

    def test_wrong_structure(self, so3_path):
        with pytest.raises(exceptions.WrongStructure):
            loads_path(dumps_path(so3_path), make_symplectic_plane())
