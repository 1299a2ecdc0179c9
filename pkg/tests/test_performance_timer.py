#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
性能计时器测试
"""

import json
import threading

from src.utils.performance_timer import PerformanceTimer


def test_time_step_records_duration():
    timer = PerformanceTimer()
    with timer.time_step('D6.build'):
        pass
    with timer.time_step('D6.graph', {'vertices': 5}):
        pass
    assert set(timer.durations_for('D6')) == {'build', 'graph'}
    assert timer.records[1].metadata == {'vertices': 5}
    assert timer.get_step_summary()['D6.build']['count'] == 1


def test_prefix_does_not_match_longer_case_ids():
    timer = PerformanceTimer()
    with timer.time_step('D:6 x Z:3.build'):
        pass
    assert timer.durations_for('D:6') == {}


def test_end_unknown_step_returns_none():
    assert PerformanceTimer().end_step('missing') is None


def test_concurrent_steps():
    timer = PerformanceTimer()

    def work(i):
        with timer.time_step(f"case{i}.build"):
            pass

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    report = timer.get_performance_report()
    assert report['step_count'] == 8
    assert len(report['step_summary']) == 8


def test_export_includes_report(tmp_path):
    timer = PerformanceTimer()
    with timer.time_step('Q8.charpoly'):
        pass
    with timer.time_step('Q8.build'):
        pass
    path = tmp_path / 'timings.json'
    timer.export_to_json(str(path))
    data = json.loads(path.read_text(encoding='utf-8'))
    assert [r['step_name'] for r in data['records']] == ['Q8.charpoly', 'Q8.build']
    assert data['report']['step_count'] == 2
    assert {name for name, _ in data['report']['top_slow_steps']} == {'Q8.charpoly', 'Q8.build'}
