"""
Flowshop instance model: the immutable problem, its text format and generators
"""

import os
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InstanceFormatError

UINT32_MAX = 2**32 - 1
INT64_MAX = 2**63 - 1

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True, eq=False)
class Instance:
    """
    A permutation flowshop instance: num_jobs jobs, each processed on
    num_machines machines in machine order. proc_time[j][k] is the duration
    of job j on machine k.

    Instances are immutable and shared by reference between workers.
    Equality compares the dimensions and the matrix; the name is a label.
    """

    name: str
    num_jobs: int
    num_machines: int
    proc_time: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.proc_time, dtype=np.int64)
        if self.num_jobs < 1:
            raise ValueError(f"num_jobs must be at least 1, got {self.num_jobs}")
        if self.num_machines < 1:
            raise ValueError(
                f"num_machines must be at least 1, got {self.num_machines}"
            )
        if matrix.shape != (self.num_jobs, self.num_machines):
            raise ValueError(
                f"proc_time has shape {matrix.shape}, "
                f"expected ({self.num_jobs}, {self.num_machines})"
            )
        if (matrix < 0).any():
            raise ValueError("processing times must be non-negative")
        if (matrix > UINT32_MAX).any():
            raise ValueError("processing times must fit in 32 bits")
        if self.num_jobs * int(matrix.max()) * self.num_machines > INT64_MAX:
            raise ValueError("instance makespan could overflow 64 bits")
        matrix.setflags(write=False)
        object.__setattr__(self, "proc_time", matrix)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], name: str = "instance") -> "Instance":
        """Build an instance from a job-major list of rows"""
        if not rows:
            raise ValueError("an instance needs at least one job")
        return cls(
            name=name,
            num_jobs=len(rows),
            num_machines=len(rows[0]),
            proc_time=np.array(rows, dtype=np.int64),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.num_jobs == other.num_jobs
            and self.num_machines == other.num_machines
            and np.array_equal(self.proc_time, other.proc_time)
        )

    __hash__ = None

    def __str__(self) -> str:
        return f"Instance(name='{self.name}', jobs={self.num_jobs}, machines={self.num_machines})"

    def __repr__(self) -> str:
        return self.__str__()

    @cached_property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        """Processing times as plain Python ints for the search hot path"""
        return tuple(tuple(int(v) for v in row) for row in self.proc_time)

    @cached_property
    def total_work(self) -> Tuple[int, ...]:
        """Total processing time of each job over all machines"""
        return tuple(int(v) for v in self.proc_time.sum(axis=1))

    @cached_property
    def machine_work(self) -> Tuple[int, ...]:
        """Total processing time on each machine over all jobs"""
        return tuple(int(v) for v in self.proc_time.sum(axis=0))

    @cached_property
    def tail_sums(self) -> Tuple[Tuple[int, ...], ...]:
        """tail_sums[j][k] = sum of p[j][l] for machines l > k"""
        suffix = np.cumsum(self.proc_time[:, ::-1], axis=1)[:, ::-1]
        tails = suffix - self.proc_time
        return tuple(tuple(int(v) for v in row) for row in tails)

    def to_rows(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


def _int_token(token: str, line: int, column: int) -> int:
    if not re.fullmatch(r"[+-]?\d+", token):
        raise InstanceFormatError(f"non-numeric token '{token}'", line, column)
    value = int(token)
    if value < 0:
        raise InstanceFormatError(f"negative value {value}", line, column)
    if value > UINT32_MAX:
        raise InstanceFormatError(
            f"value {value} does not fit in 32 bits", line, column
        )
    return value


def _data_lines(text: str) -> Iterable[Tuple[int, List[Tuple[str, int]]]]:
    """Yield (line number, [(token, column)]) for non-comment, non-blank lines"""
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#"):
            continue
        tokens = [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(raw)]
        if tokens:
            yield number, tokens


def parse_instance(text: str, name: str = "instance") -> Instance:
    """
    Parse the canonical job-major format.

    Args:
        text: "<num_jobs> <num_machines>" then one row of num_machines
              integers per job. Lines starting with '#' are comments.
        name: label given to the resulting instance

    Returns:
        A validated Instance

    Raises:
        InstanceFormatError: naming the line and column of the first problem
    """
    lines = iter(_data_lines(text))
    header = next(lines, None)
    if header is None:
        raise InstanceFormatError("missing header '<num_jobs> <num_machines>'", 1)

    line_no, tokens = header
    if len(tokens) != 2:
        column = tokens[2][1] if len(tokens) > 2 else tokens[-1][1]
        raise InstanceFormatError(
            f"header must be '<num_jobs> <num_machines>', found {len(tokens)} values",
            line_no,
            column,
        )
    num_jobs = _int_token(tokens[0][0], line_no, tokens[0][1])
    num_machines = _int_token(tokens[1][0], line_no, tokens[1][1])
    if num_jobs < 1:
        raise InstanceFormatError("num_jobs must be at least 1", line_no, tokens[0][1])
    if num_machines < 1:
        raise InstanceFormatError(
            "num_machines must be at least 1", line_no, tokens[1][1]
        )

    rows: List[List[int]] = []
    largest = 0
    last_line = line_no
    for line_no, tokens in lines:
        last_line = line_no
        row_index = len(rows) + 1
        if row_index > num_jobs:
            raise InstanceFormatError(
                f"unexpected data after {num_jobs} job rows", line_no, tokens[0][1]
            )
        if len(tokens) != num_machines:
            column = tokens[num_machines][1] if len(tokens) > num_machines else 1
            raise InstanceFormatError(
                f"row {row_index}: expected {num_machines} values, found {len(tokens)}",
                line_no,
                column,
            )
        row = [_int_token(tok, line_no, col) for tok, col in tokens]
        largest = max(largest, max(row))
        if num_jobs * largest * num_machines > INT64_MAX:
            raise InstanceFormatError(
                "processing times could overflow a 64-bit makespan", line_no, 1
            )
        rows.append(row)

    if len(rows) != num_jobs:
        raise InstanceFormatError(
            f"expected {num_jobs} job rows, found {len(rows)}", last_line + 1
        )

    return Instance(
        name=name,
        num_jobs=num_jobs,
        num_machines=num_machines,
        proc_time=np.array(rows, dtype=np.int64),
    )


def write_instance(inst: Instance, provenance: Optional[Sequence[str]] = None) -> str:
    """Render an instance in the canonical format, optionally with '#' header lines"""
    lines = [f"# {note}" for note in (provenance or [])]
    lines.append(f"{inst.num_jobs} {inst.num_machines}")
    lines.extend(" ".join(str(v) for v in row) for row in inst.rows)
    return "\n".join(lines) + "\n"


def read_instance(path: str, name: Optional[str] = None) -> Instance:
    """Read a canonical .fsp file; the name defaults to the file stem"""
    if not os.path.exists(path):
        raise FileNotFoundError(f"Instance file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    stem = os.path.splitext(os.path.basename(path))[0]
    return parse_instance(text, name=name or stem)


def save_instance(
    inst: Instance, path: str, provenance: Optional[Sequence[str]] = None
) -> None:
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(write_instance(inst, provenance))


def generate_random_instance(
    num_jobs: int, num_machines: int, max_time: int, seed: int
) -> Instance:
    """
    Seeded random instance with durations drawn uniformly from [1, max_time].

    The result is a pure function of the four arguments (numpy's PCG64
    stream is platform independent).
    """
    if num_jobs < 1:
        raise ValueError(f"num_jobs must be at least 1, got {num_jobs}")
    if num_machines < 1:
        raise ValueError(f"num_machines must be at least 1, got {num_machines}")
    if not 1 <= max_time <= UINT32_MAX:
        raise ValueError(f"max_time must be in [1, {UINT32_MAX}], got {max_time}")
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")

    rng = np.random.default_rng(seed)
    matrix = rng.integers(1, max_time, size=(num_jobs, num_machines), endpoint=True)
    return Instance(
        name=f"rand_n{num_jobs}_m{num_machines}_t{max_time}_s{seed}",
        num_jobs=num_jobs,
        num_machines=num_machines,
        proc_time=matrix.astype(np.int64),
    )


def parse_taillard(text: str, name: str = "instance") -> Instance:
    """
    Convert Taillard's published machine-major layout to an Instance.

    The first all-integer line holds "n m [seed upper lower]"; the next
    m * n integers are the processing times machine by machine. The matrix
    is transposed into the canonical job-major layout.
    """
    header: Optional[Tuple[int, List[Tuple[str, int]]]] = None
    values: List[int] = []
    for line_no, tokens in _data_lines(text):
        if not all(re.fullmatch(r"[+-]?\d+", tok) for tok, _ in tokens):
            # label lines such as "processing times :"
            continue
        if header is None:
            header = (line_no, tokens)
            continue
        values.extend(_int_token(tok, line_no, col) for tok, col in tokens)

    if header is None:
        raise InstanceFormatError("no numeric header line found", 1)
    line_no, tokens = header
    if len(tokens) < 2:
        raise InstanceFormatError("header needs at least 'n m'", line_no, tokens[0][1])
    num_jobs = _int_token(tokens[0][0], line_no, tokens[0][1])
    num_machines = _int_token(tokens[1][0], line_no, tokens[1][1])
    expected = num_jobs * num_machines
    if len(values) != expected:
        raise InstanceFormatError(
            f"expected {num_machines} x {num_jobs} = {expected} processing times, "
            f"found {len(values)}",
            line_no,
        )

    machine_major = np.array(values, dtype=np.int64).reshape(num_machines, num_jobs)
    return Instance(
        name=name,
        num_jobs=num_jobs,
        num_machines=num_machines,
        proc_time=machine_major.T.copy(),
    )
