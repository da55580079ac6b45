"""
Exceptions raised by flowbnb
"""

from typing import Any, Dict, List, Optional


class InstanceFormatError(ValueError):
    """An instance file violates the canonical format or an Instance invariant"""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"line {line}, column {column}: {message}")


class ConfigError(ValueError):
    """Invalid skeleton or command-line configuration"""


class OracleLimitError(ValueError):
    """Exhaustive search refused because the instance is too large"""


class SearchDeadlockError(RuntimeError):
    """The engine made no progress for a whole watchdog interval"""

    def __init__(self, message: str, dump: Optional[List[Dict[str, Any]]] = None):
        self.dump = dump or []
        lines = [message] + [f"  {entry}" for entry in self.dump]
        super().__init__("\n".join(lines))
