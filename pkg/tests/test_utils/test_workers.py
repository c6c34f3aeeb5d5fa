from polygrpd.utils import workers


class TestWorkers:

    def test_order_is_kept(self, monkeypatch):
        monkeypatch.setenv(workers.THREADS_ENV, '3')
        assert workers.map_points(lambda x: x * x, range(10)) == [x * x for x in range(10)]

    def test_max_workers_from_env(self, monkeypatch):
        monkeypatch.setenv(workers.THREADS_ENV, '3')
        assert workers.max_workers() == 3
        monkeypatch.setenv(workers.THREADS_ENV, '0')
        assert workers.max_workers() == 1
        monkeypatch.setenv(workers.THREADS_ENV, 'many')
        assert workers.max_workers() == 1

    def test_empty(self):
        assert workers.map_points(str, []) == []
