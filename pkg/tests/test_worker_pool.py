from lcreg.worker_pool import map_ordered


def test_in_process_order_and_callback():
    done = []

    results = map_ordered(abs, [-3, 2, -1], on_done=done.append)

    assert results == [3, 2, 1]
    assert done == [0, 1, 2]


def test_worker_processes_keep_item_order():
    done = []

    results = map_ordered(abs, list(range(-20, 0)), threads=3, on_done=done.append)

    assert results == list(range(20, 0, -1))
    assert sorted(done) == list(range(20))


def test_empty_input():
    assert map_ordered(abs, [], threads=4) == []
