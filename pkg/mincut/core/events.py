"""
事件总线 - 枚举过程观测
枚举器在关键节点发出事件，测试和基准工具通过订阅事件还原轨迹
同步实现：枚举是单线程 CPU 密集任务
"""

from collections import defaultdict
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Callable


class EventType(Enum):
    RUN_STARTED = "run_started"
    STATE_EMITTED = "state_emitted"      # 可行向量，输出一个 MC
    SON_FATHOMED = "son_fathomed"        # 子向量及其后代全部剪除
    PARENT_REMOVED = "parent_removed"    # 父向量不再生成新的子向量
    CHECK_DIVERGED = "check_diverged"    # edge-node 与 plsa 判定不一致
    RUN_FINISHED = "run_finished"


@dataclass
class Event:
    type: EventType
    data: dict[str, Any] = field(default_factory=dict)
    timestamp: datetime = field(default_factory=datetime.now)
    source: str = "search"


EventHandler = Callable[[Event], None]


class EventBus:
    """同步事件总线"""

    def __init__(self, max_history: int = 100_000):
        self._handlers: dict[EventType, list[EventHandler]] = defaultdict(list)
        self._history: list[Event] = []
        self._max_history = max_history

    def on(self, event_type: EventType, handler: EventHandler) -> None:
        """注册事件处理器"""
        self._handlers[event_type].append(handler)

    def off(self, event_type: EventType, handler: EventHandler) -> None:
        """移除事件处理器"""
        if handler in self._handlers[event_type]:
            self._handlers[event_type].remove(handler)

    def emit(self, event: Event) -> None:
        """触发事件，按注册顺序通知处理器"""
        self._history.append(event)
        if len(self._history) > self._max_history:
            self._history = self._history[-self._max_history:]

        for handler in self._handlers.get(event.type, []):
            handler(event)

    def emit_simple(self, event_type: EventType, source: str = "search", **data) -> None:
        """简便触发事件"""
        self.emit(Event(type=event_type, data=data, source=source))

    def get_history(
        self,
        event_type: EventType | None = None,
        limit: int | None = None,
    ) -> list[Event]:
        """获取事件历史"""
        if event_type:
            filtered = [e for e in self._history if e.type == event_type]
        else:
            filtered = list(self._history)
        return filtered if limit is None else filtered[-limit:]

    def clear(self) -> None:
        self._history.clear()
