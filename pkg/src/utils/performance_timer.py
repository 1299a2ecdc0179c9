#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
性能计时器工具
记录建表、建图、团分解、特征多项式等阶段的耗时，验证套件按用例汇总
"""

import json
import logging
import threading
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


@dataclass
class TimeRecord:
    """时间记录数据结构"""
    step_name: str
    start_time: float
    end_time: float
    duration: float
    metadata: Dict[str, Any] = field(default_factory=dict)


class PerformanceTimer:
    """
    线程安全的性能计时器

    步骤名建议使用 "用例.阶段" 形式（如 "D6.charpoly"），并发用例之间互不干扰。
    """

    def __init__(self, enable_logging: bool = False):
        self.enable_logging = enable_logging
        self.records: List[TimeRecord] = []
        self.current_steps: Dict[str, float] = {}  # 当前正在执行的步骤
        self._lock = threading.RLock()

        self.step_times: Dict[str, List[float]] = {}

    def start_step(self, step_name: str) -> str:
        """开始记录一个步骤"""
        with self._lock:
            self.current_steps[step_name] = time.perf_counter()
        if self.enable_logging:
            logger.debug(f"START: {step_name}")
        return step_name

    def end_step(self, step_name: str, metadata: Dict[str, Any] = None) -> Optional[TimeRecord]:
        """结束记录一个步骤"""
        end_time = time.perf_counter()
        with self._lock:
            if step_name not in self.current_steps:
                logger.warning(f"步骤 '{step_name}' 未找到，可能已经结束或未开始")
                return None
            start_time = self.current_steps.pop(step_name)
            record = TimeRecord(
                step_name=step_name,
                start_time=start_time,
                end_time=end_time,
                duration=end_time - start_time,
                metadata=metadata or {},
            )
            self.records.append(record)
            self.step_times.setdefault(step_name, []).append(record.duration)

        if self.enable_logging:
            logger.debug(f"END: {step_name} - {record.duration * 1000:.2f}ms")
        return record

    @contextmanager
    def time_step(self, step_name: str, metadata: Dict[str, Any] = None):
        """上下文管理器，自动记录步骤时间"""
        self.start_step(step_name)
        try:
            yield
        finally:
            self.end_step(step_name, metadata)

    def durations_for(self, prefix: str) -> Dict[str, float]:
        """返回以 "prefix." 开头的步骤最近一次耗时（秒），键去掉前缀"""
        head = prefix + '.'
        with self._lock:
            return {
                name[len(head):]: times[-1]
                for name, times in self.step_times.items()
                if name.startswith(head) and times
            }

    def get_step_summary(self) -> Dict[str, Any]:
        """获取步骤执行摘要"""
        with self._lock:
            return {
                step_name: {
                    'count': len(times),
                    'total_time': sum(times),
                    'avg_time': sum(times) / len(times),
                    'max_time': max(times),
                }
                for step_name, times in self.step_times.items() if times
            }

    def get_performance_report(self) -> Dict[str, Any]:
        """获取性能报告"""
        with self._lock:
            summary = self.get_step_summary()
            sorted_steps = sorted(summary.items(), key=lambda x: x[1]['total_time'], reverse=True)
            return {
                'total_time': sum(s['total_time'] for s in summary.values()),
                'step_count': len(self.records),
                'top_slow_steps': sorted_steps[:10],
                'step_summary': summary,
            }

    def export_to_json(self, filename: str):
        """导出记录到JSON文件"""
        with self._lock:
            data = {
                'records': [
                    {
                        'step_name': r.step_name,
                        'duration': r.duration,
                        'metadata': r.metadata,
                    }
                    for r in self.records
                ],
                'report': self.get_performance_report(),
            }
        with open(filename, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False)
        logger.info(f"性能记录已导出到: {filename}")

